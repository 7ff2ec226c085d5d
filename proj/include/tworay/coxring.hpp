#pragma once

#include <array>
#include <string>
#include <vector>

#include "tworay/cones2d.hpp"
#include "tworay/poly.hpp"

namespace tworay {

struct VarDecl {
  std::string name;
  Weight deg;
  bool operator==(const VarDecl&) const = default;
};

/// Bigraded Cox-ring data of a rank-2 toric variety: ordered variables with
/// bidegrees and the two irrelevant-ideal components. The weight span is
/// checked to be a pointed 2D cone at construction.
struct CoxData {
  std::vector<VarDecl> vars;
  std::vector<int> irrelevant_left;    // component L
  std::vector<int> irrelevant_right;   // component R
  Int minor_gcd = 0;  // gcd of nonzero 2x2 minors, reported not enforced

  CoxData() = default;
  CoxData(std::vector<VarDecl> v, std::vector<int> left, std::vector<int> right);

  int index_of(const std::string& name) const;  // -1 if absent
  std::vector<std::string> names() const;
  std::vector<Weight> weights() const;
  bool operator==(const CoxData& o) const {
    return vars == o.vars && irrelevant_left == o.irrelevant_left &&
           irrelevant_right == o.irrelevant_right;
  }
};

/// Well-formedness normalization of a two-row stacky grading: the second row
/// becomes (row1 - row2)/r. Errors NonIntegralResult when r does not divide.
std::array<std::vector<Int>, 2> normalize_stack_grading(const std::array<std::vector<Int>, 2>& rows,
                                                        Int r);

/// Common bidegree of a nonzero homogeneous polynomial. Errors NotHomogeneous
/// (message lists the offending terms) or EmptyPolynomial.
Weight bidegree(const SparsePoly& p, const CoxData& cox);

Weight sum_of_weights(const std::vector<Weight>& ws);
Weight anticanonical_class(const CoxData& cox);
Weight adjunction_class(const CoxData& cox, const std::vector<Weight>& equation_degrees);

std::vector<RayGroup> ray_groups(const CoxData& cox);

/// Indices into the clockwise ray-group list of the mobile cone's generators.
/// A boundary group of a single variable is dropped in favor of its neighbor.
std::pair<int, int> mobile_generator_groups(const std::vector<RayGroup>& groups);

Cone2 mobile_cone(const CoxData& cox);

/// Nef chambers: consecutive sorted-ray pairs inside the mobile cone, ordered
/// clockwise. Their union is the mobile cone; interiors are disjoint.
std::vector<Cone2> git_chambers(const CoxData& cox);

}  // namespace tworay
