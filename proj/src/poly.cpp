#include "tworay/poly.hpp"

#include <algorithm>

namespace tworay {

Coeff operator*(const Coeff& x, const Coeff& y) {
  if (x.generic || y.generic) return Coeff::gen();
  return Coeff::exact(x.value * y.value);
}

std::string to_string(const Coeff& c) {
  return c.generic ? std::string("#") : to_string(c.value);
}

void SparsePoly::add_term(const Expo& e, const Coeff& c) {
  if (static_cast<int>(e.size()) != arity_) fail(Err::DimensionMismatch, "exponent arity");
  for (int x : e)
    if (x < 0) fail(Err::NonIntegralExponent, "negative exponent");
  if (!c.generic && c.value == Rat(0)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  if (it->second.generic || c.generic) {
    it->second = Coeff::gen();
    return;
  }
  Rat sum = it->second.value + c.value;
  if (sum == Rat(0))
    terms_.erase(it);
  else
    it->second = Coeff::exact(sum);
}

std::optional<Coeff> SparsePoly::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  if (it == terms_.end()) return std::nullopt;
  return it->second;
}

SparsePoly SparsePoly::plus(const SparsePoly& o) const {
  SparsePoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

SparsePoly SparsePoly::scaled(const Coeff& c) const {
  SparsePoly r(arity_);
  for (const auto& [e, t] : terms_) r.add_term(e, t * c);
  return r;
}

SparsePoly SparsePoly::negated() const {
  SparsePoly r(arity_);
  for (const auto& [e, t] : terms_)
    r.add_term(e, t.generic ? t : Coeff::exact(-t.value));
  return r;
}

SparsePoly SparsePoly::times_monomial(const Expo& m, const Coeff& c) const {
  SparsePoly r(arity_);
  for (const auto& [e, t] : terms_) {
    Expo f = e;
    for (int i = 0; i < arity_; ++i) f[i] += m[i];
    r.add_term(f, t * c);
  }
  return r;
}

SparsePoly SparsePoly::times(const SparsePoly& o) const {
  SparsePoly r(arity_);
  for (const auto& [e, c] : o.terms_) r = r.plus(times_monomial(e, c));
  return r;
}

SparsePoly SparsePoly::pow(int k) const {
  SparsePoly r(arity_);
  r.add_term(Expo(arity_, 0), Coeff::exact(Rat(1)));
  for (int i = 0; i < k; ++i) r = r.times(*this);
  return r;
}

SparsePoly SparsePoly::extended(int extra) const {
  SparsePoly r(arity_ + extra);
  for (const auto& [e, c] : terms_) {
    Expo f = e;
    f.resize(arity_ + extra, 0);
    r.add_term(f, c);
  }
  return r;
}

SparsePoly SparsePoly::without_variable(int v) const {
  SparsePoly r(arity_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[v] != 0) fail(Err::NonIntegralExponent, "variable still present");
    Expo f;
    f.reserve(arity_ - 1);
    for (int i = 0; i < arity_; ++i)
      if (i != v) f.push_back(e[i]);
    r.add_term(f, c);
  }
  return r;
}

SparsePoly SparsePoly::substituted(int v, const SparsePoly& repl) const {
  SparsePoly r(arity_);
  for (const auto& [e, c] : terms_) {
    if (e[v] == 0) {
      r.add_term(e, c);
      continue;
    }
    Expo base = e;
    base[v] = 0;
    r = r.plus(repl.pow(e[v]).times_monomial(base, c));
  }
  return r;
}

SparsePoly SparsePoly::restricted_to(const std::set<int>& vars) const {
  SparsePoly r(arity_);
  for (const auto& [e, c] : terms_) {
    bool inside = true;
    for (int i = 0; i < arity_ && inside; ++i)
      if (e[i] > 0 && !vars.count(i)) inside = false;
    if (inside) r.add_term(e, c);
  }
  return r;
}

bool SparsePoly::in_ideal(const std::set<int>& vars) const {
  return offenders(vars).empty();
}

std::vector<Expo> SparsePoly::offenders(const std::set<int>& vars) const {
  std::vector<Expo> out;
  for (const auto& [e, c] : terms_) {
    bool hit = false;
    for (int v : vars)
      if (e[v] > 0) { hit = true; break; }
    if (!hit) out.push_back(e);
  }
  return out;
}

bool SparsePoly::uses(int v) const {
  for (const auto& [e, c] : terms_)
    if (e[v] > 0) return true;
  return false;
}

std::string monomial_string(const Expo& e, const std::vector<std::string>& names) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const SparsePoly& p, const std::vector<std::string>& names) {
  if (p.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    if (c.generic)
      s += "#";
    else if (c.value != Rat(1))
      s += to_string(c.value) + "*";
    s += monomial_string(e, names);
  }
  return s;
}

}  // namespace tworay
