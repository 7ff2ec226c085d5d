#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tworay/coxring.hpp"

namespace tworay {

/// Cyclic quotient germ 1/r(1,a,r-a) sitting at a coordinate point.
struct SingularPoint {
  int var = -1;  // index of the nonvanishing coordinate, into the ambient vars
  Int r = 0;
  Int a = 0;
};

/// Per-variable local weights of the weighted blow-up, in units of 1/r:
/// the nonvanishing variable gets 0, residue variables a_i mod r, tangent
/// variables their alpha.
struct BlowupAssignment {
  std::vector<Int> w;  // one entry per ambient variable
};

struct UnprojectionRecord {
  std::string new_var;
  Weight weight{};
  std::vector<std::string> ideal;
  bool triple = false;
  std::vector<std::string> eliminated;
};

/// A 3-fold presentation Y inside a rank-2 toric variety: the blow-up model
/// and everything unprojection rewrites into it.
struct Model {
  CoxData cox;
  std::vector<SparsePoly> eqs;    // bihomogeneous, arity == cox.vars.size()
  Weight minus_KY{};
  Weight exceptional{};           // class of the u-divisor
  bool complete_intersection = true;
  std::vector<Rat> valuations;        // m per original defining equation
  std::vector<Int> stacky_row;        // pre-normalization second row (u first)
  std::vector<UnprojectionRecord> unprojections;
  std::vector<std::string> warnings;

  std::vector<Weight> equation_degrees() const;
};

/// Ambient data of one family: X = {f=0} (and g) in a weighted projective
/// space, with the singular point to blow up.
struct AmbientFamily {
  std::vector<std::string> names;
  std::vector<Int> ambient_weights;
  std::vector<Int> degrees;
  std::vector<SparsePoly> eqs;  // over the ambient variables
  SingularPoint point;
  std::map<int, int> tangent;                    // equation index -> variable index
  std::optional<std::vector<Int>> local_weights; // override row, per ambient variable
};

/// Variable v of the monomials point^k * v in eq. With `designated` set the
/// choice is validated instead of searched. Errors NoTangentMonomial /
/// AmbiguousTangent.
int find_tangent_variable(const SparsePoly& eq, const SingularPoint& point,
                          std::optional<int> designated = std::nullopt);

/// min over monomials of (sum w_i e_i)/r. Errors EmptyPolynomial.
Rat blowup_valuation(const SparsePoly& eq, const BlowupAssignment& assign, Int r);

/// Transform of eq under the blow-up: each monomial gains the u-exponent
/// (valuation - m) * r, an integer >= 0 with minimum 0. The result has the
/// u variable prepended at index 0.
SparsePoly proper_transform(const SparsePoly& eq, const BlowupAssignment& assign, const Rat& m,
                            Int r);

/// Terminality of the germ 1/r(1,a,r-a).
bool is_terminal_cyclic(Int r, Int a);

/// Terminality of a 3-fold cyclic quotient 1/r(w1,w2,w3): isolated and some
/// pair of weights summing to zero mod r.
bool is_terminal_quotient(Int r, Int w1, Int w2, Int w3);

/// Kawamata blow-up of the family at its singular point: resolves the tangent
/// weights, normalizes the grading, transforms the equations, and computes
/// the exceptional and anticanonical classes by adjunction.
Model kawamata_grading(const AmbientFamily& fam);

}  // namespace tworay
