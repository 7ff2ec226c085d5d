#include "tworay/cones2d.hpp"

#include <algorithm>
#include <cstdlib>

namespace tworay {

const char* err_name(Err e) {
  switch (e) {
    case Err::ZeroWeight: return "ZeroWeight";
    case Err::NonConvexSpan: return "NonConvexSpan";
    case Err::InvalidCone: return "InvalidCone";
    case Err::InvalidCox: return "InvalidCox";
    case Err::NotHomogeneous: return "NotHomogeneous";
    case Err::NonIntegralResult: return "NonIntegralResult";
    case Err::FewerThanThreeRayGroups: return "FewerThanThreeRayGroups";
    case Err::EmptyPolynomial: return "EmptyPolynomial";
    case Err::NoTangentMonomial: return "NoTangentMonomial";
    case Err::AmbiguousTangent: return "AmbiguousTangent";
    case Err::NeedsLocalWeights: return "NeedsLocalWeights";
    case Err::GermMismatch: return "GermMismatch";
    case Err::ReducibleExceptional: return "ReducibleExceptional";
    case Err::NonIntegralExponent: return "NonIntegralExponent";
    case Err::NoValidSplit: return "NoValidSplit";
    case Err::InconsistentWeights: return "InconsistentWeights";
    case Err::NotLinearlySolvable: return "NotLinearlySolvable";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::ChartUnderspecified: return "ChartUnderspecified";
    case Err::UnresolvedRestriction: return "UnresolvedRestriction";
    case Err::UnprojectionBudget: return "UnprojectionBudget";
    case Err::SchemaError: return "SchemaError";
    case Err::DegreeMismatch: return "DegreeMismatch";
  }
  return "Unknown";
}

std::string to_string(const Weight& w) {
  return "(" + std::to_string(w.a) + "," + std::to_string(w.b) + ")";
}

Weight primitive(const Weight& w) {
  if (w.zero()) fail(Err::ZeroWeight, "zero weight used as a ray");
  Int g = gcd_ll(std::abs(w.a), std::abs(w.b));
  return {w.a / g, w.b / g};
}

bool same_ray(const Weight& u, const Weight& v) { return primitive(u) == primitive(v); }

Cone2::Cone2(Weight lo, Weight hi) : r1(primitive(lo)), r2(primitive(hi)) {
  if (r1 == Weight{-r2.a, -r2.b})
    fail(Err::InvalidCone, "antipodal rays " + tworay::to_string(r1) + ", " + tworay::to_string(r2));
}

std::string to_string(const Cone2& c) { return "<" + to_string(c.r1) + "," + to_string(c.r2) + ">"; }

const char* to_string(Position p) {
  switch (p) {
    case Position::Interior: return "Interior";
    case Position::Boundary: return "Boundary";
    case Position::Outside: return "Outside";
  }
  return "?";
}

Position classify_position(const Cone2& cone, const Weight& w) {
  if (w.zero()) fail(Err::ZeroWeight, "classify_position of the zero class");
  if (cone.is_ray()) return same_ray(w, cone.r1) ? Position::Boundary : Position::Outside;
  Int det = cross(cone.r1, cone.r2);
  // Solve w = l*r1 + m*r2; only the signs of l, m matter.
  Int l = cross(w, cone.r2) * (det > 0 ? 1 : -1);
  Int m = cross(cone.r1, w) * (det > 0 ? 1 : -1);
  if (l > 0 && m > 0) return Position::Interior;
  if ((l == 0 && m > 0) || (l > 0 && m == 0)) return Position::Boundary;
  return Position::Outside;
}

namespace {

// Half-plane index for a full-circle angular sort from the +x axis.
int half(const Weight& w) { return (w.b > 0 || (w.b == 0 && w.a > 0)) ? 0 : 1; }

bool ccw_less(const Weight& u, const Weight& v) {
  if (half(u) != half(v)) return half(u) < half(v);
  return cross(u, v) > 0;
}

}  // namespace

std::vector<RayGroup> sort_rays_clockwise(const std::vector<Weight>& weights) {
  std::vector<Weight> prim;
  prim.reserve(weights.size());
  for (const Weight& w : weights) prim.push_back(primitive(w));

  std::vector<Weight> rays;
  for (const Weight& p : prim)
    if (std::find(rays.begin(), rays.end(), p) == rays.end()) rays.push_back(p);

  for (size_t i = 0; i < rays.size(); ++i)
    for (size_t j = i + 1; j < rays.size(); ++j)
      if (rays[i] == Weight{-rays[j].a, -rays[j].b})
        fail(Err::NonConvexSpan, "antipodal rays " + to_string(rays[i]) + " and " + to_string(rays[j]));

  std::vector<Weight> order;
  if (rays.size() == 1) {
    order = rays;
  } else {
    std::sort(rays.begin(), rays.end(), ccw_less);
    // The unique circular gap wider than pi separates last from first ray.
    int gap = -1;
    for (size_t i = 0; i < rays.size(); ++i) {
      const Weight& cur = rays[i];
      const Weight& nxt = rays[(i + 1) % rays.size()];
      if (cross(cur, nxt) <= 0) {
        if (gap >= 0) fail(Err::NonConvexSpan, "weights span the whole plane");
        gap = static_cast<int>(i);
      }
    }
    if (gap < 0) fail(Err::NonConvexSpan, "weights span the whole plane");
    for (size_t j = 0; j < rays.size(); ++j)
      order.push_back(rays[(gap + rays.size() - j) % rays.size()]);
  }

  std::vector<RayGroup> groups;
  for (const Weight& r : order) {
    RayGroup g{r, {}};
    for (size_t i = 0; i < prim.size(); ++i)
      if (prim[i] == r) g.vars.push_back(static_cast<int>(i));
    groups.push_back(std::move(g));
  }
  return groups;
}

WallNormal wall_normal(const Weight& ray) { return WallNormal{primitive(ray)}; }

}  // namespace tworay
