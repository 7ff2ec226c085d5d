#include "tworay/coxring.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace tworay {

CoxData::CoxData(std::vector<VarDecl> v, std::vector<int> left, std::vector<int> right)
    : vars(std::move(v)), irrelevant_left(std::move(left)), irrelevant_right(std::move(right)) {
  if (vars.empty()) fail(Err::InvalidCox, "no variables");
  std::set<int> seen;
  for (int i : irrelevant_left) seen.insert(i);
  for (int i : irrelevant_right) {
    if (seen.count(i)) fail(Err::InvalidCox, "irrelevant components overlap");
    seen.insert(i);
  }
  if (static_cast<int>(seen.size()) != static_cast<int>(vars.size()))
    fail(Err::InvalidCox, "irrelevant components do not cover the variables");
  // Pointedness of the effective cone, checked eagerly.
  sort_rays_clockwise(weights());

  Int g = 0;
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j) {
      Int d = std::abs(cross(vars[i].deg, vars[j].deg));
      if (d != 0) g = gcd_ll(g, d);
    }
  minor_gcd = g;
}

int CoxData::index_of(const std::string& name) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i].name == name) return static_cast<int>(i);
  return -1;
}

std::vector<std::string> CoxData::names() const {
  std::vector<std::string> out;
  for (const auto& v : vars) out.push_back(v.name);
  return out;
}

std::vector<Weight> CoxData::weights() const {
  std::vector<Weight> out;
  for (const auto& v : vars) out.push_back(v.deg);
  return out;
}

std::array<std::vector<Int>, 2> normalize_stack_grading(const std::array<std::vector<Int>, 2>& rows,
                                                        Int r) {
  if (rows[0].size() != rows[1].size()) fail(Err::DimensionMismatch, "row lengths differ");
  if (r <= 0) fail(Err::NonIntegralResult, "r must be positive");
  std::vector<Int> second(rows[0].size());
  for (size_t i = 0; i < rows[0].size(); ++i) {
    Int num = rows[0][i] - rows[1][i];
    if (num % r != 0)
      fail(Err::NonIntegralResult,
           "column " + std::to_string(i) + ": " + std::to_string(num) + " not divisible by " +
               std::to_string(r) + " (wrong tangent weight choice)");
    second[i] = num / r;
  }
  return {rows[0], second};
}

Weight bidegree(const SparsePoly& p, const CoxData& cox) {
  if (p.empty()) fail(Err::EmptyPolynomial, "bidegree of the zero polynomial");
  bool first = true;
  Weight deg{};
  std::string offending;
  for (const auto& [e, c] : p.terms()) {
    Weight d{};
    for (int i = 0; i < p.arity(); ++i) d = d + cox.vars[i].deg * e[i];
    if (first) {
      deg = d;
      first = false;
    } else if (!(d == deg)) {
      offending += (offending.empty() ? "" : ", ") + monomial_string(e, cox.names()) + " has " +
                   to_string(d) + " expected " + to_string(deg);
    }
  }
  if (!offending.empty()) fail(Err::NotHomogeneous, offending);
  return deg;
}

Weight sum_of_weights(const std::vector<Weight>& ws) {
  Weight s{};
  for (const Weight& w : ws) s = s + w;
  return s;
}

Weight anticanonical_class(const CoxData& cox) { return sum_of_weights(cox.weights()); }

Weight adjunction_class(const CoxData& cox, const std::vector<Weight>& equation_degrees) {
  Weight k = anticanonical_class(cox);
  for (const Weight& d : equation_degrees) k = k - d;
  return k;
}

std::vector<RayGroup> ray_groups(const CoxData& cox) { return sort_rays_clockwise(cox.weights()); }

std::pair<int, int> mobile_generator_groups(const std::vector<RayGroup>& groups) {
  if (groups.size() < 3) fail(Err::FewerThanThreeRayGroups, std::to_string(groups.size()) + " ray groups");
  int n = static_cast<int>(groups.size());
  int left = groups.front().vars.size() >= 2 ? 0 : 1;
  int right = groups.back().vars.size() >= 2 ? n - 1 : n - 2;
  return {left, right};
}

Cone2 mobile_cone(const CoxData& cox) {
  auto groups = ray_groups(cox);
  auto [l, r] = mobile_generator_groups(groups);
  return Cone2(groups[l].ray, groups[r].ray);
}

std::vector<Cone2> git_chambers(const CoxData& cox) {
  auto groups = ray_groups(cox);
  auto [l, r] = mobile_generator_groups(groups);
  std::vector<Cone2> chambers;
  for (int i = l; i < r; ++i) chambers.emplace_back(groups[i].ray, groups[i + 1].ray);
  return chambers;
}

}  // namespace tworay
