#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tworay/error.hpp"
#include "tworay/rational.hpp"

namespace tworay {

/// Coefficient of a monomial: either an exact rational or a "generic" marker,
/// an unspecified nonzero constant. Sums and products involving a generic
/// coefficient stay generic and are assumed not to cancel; exact coefficients
/// cancel exactly.
struct Coeff {
  bool generic = true;
  Rat value = Rat(1);

  static Coeff exact(Rat v) { return Coeff{false, v}; }
  static Coeff gen() { return Coeff{true, Rat(1)}; }
  bool operator==(const Coeff&) const = default;
};

Coeff operator*(const Coeff& x, const Coeff& y);
std::string to_string(const Coeff& c);

using Expo = std::vector<int>;  // exponent vector, one entry per variable

/// Multivariate polynomial with nonnegative integer exponents over a fixed
/// variable list. No zero terms are stored.
class SparsePoly {
 public:
  explicit SparsePoly(int arity) : arity_(arity) {}

  int arity() const { return arity_; }
  bool empty() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<Expo, Coeff>& terms() const { return terms_; }

  void add_term(const Expo& e, const Coeff& c);
  bool has_monomial(const Expo& e) const { return terms_.count(e) > 0; }
  std::optional<Coeff> coeff(const Expo& e) const;

  SparsePoly plus(const SparsePoly& o) const;
  SparsePoly scaled(const Coeff& c) const;
  SparsePoly negated() const;
  SparsePoly times_monomial(const Expo& e, const Coeff& c) const;
  SparsePoly times(const SparsePoly& o) const;
  SparsePoly pow(int k) const;

  /// Append `extra` new variables with exponent zero everywhere.
  SparsePoly extended(int extra) const;
  /// Remove variable v; every term must have exponent zero there.
  SparsePoly without_variable(int v) const;
  /// Substitute x_v := repl (same arity as this, exponent of v unused in repl).
  SparsePoly substituted(int v, const SparsePoly& repl) const;

  /// Sub-polynomial of the terms whose support lies in `vars`.
  SparsePoly restricted_to(const std::set<int>& vars) const;
  /// True if every term has a positive exponent on some variable of `vars`.
  bool in_ideal(const std::set<int>& vars) const;
  /// Terms with a positive exponent on no variable of `vars`.
  std::vector<Expo> offenders(const std::set<int>& vars) const;

  bool uses(int v) const;

  bool operator==(const SparsePoly&) const = default;

 private:
  int arity_;
  std::map<Expo, Coeff> terms_;
};

std::string monomial_string(const Expo& e, const std::vector<std::string>& names);
std::string to_string(const SparsePoly& p, const std::vector<std::string>& names);

}  // namespace tworay
