#pragma once

#include <string>
#include <vector>

#include "tworay/error.hpp"
#include "tworay/rational.hpp"

namespace tworay {

/// A class in the rank-2 grading lattice (also used for rays of the fan).
struct Weight {
  Int a = 0;
  Int b = 0;

  bool zero() const { return a == 0 && b == 0; }
  bool operator==(const Weight&) const = default;
  Weight operator+(const Weight& o) const { return {a + o.a, b + o.b}; }
  Weight operator-(const Weight& o) const { return {a - o.a, b - o.b}; }
  Weight operator*(Int k) const { return {a * k, b * k}; }
};

std::string to_string(const Weight& w);

/// Determinant |u v|; positive iff v is counterclockwise from u (within pi).
inline Int cross(const Weight& u, const Weight& v) { return u.a * v.b - u.b * v.a; }

/// Primitive generator of the ray through w. Throws ZeroWeight.
Weight primitive(const Weight& w);

/// True if u and v span the same ray (same direction).
bool same_ray(const Weight& u, const Weight& v);

/// Convex cone spanned by two primitive rays, angle < pi. r1 == r2 encodes a
/// degenerate ray cone.
struct Cone2 {
  Weight r1, r2;

  Cone2(Weight lo, Weight hi);
  bool is_ray() const { return r1 == r2; }
  bool operator==(const Cone2&) const = default;
};

std::string to_string(const Cone2& c);

enum class Position { Interior, Boundary, Outside };
const char* to_string(Position p);

/// Membership of w in the cone. On a ray cone only Boundary/Outside occur.
Position classify_position(const Cone2& cone, const Weight& w);

struct RayGroup {
  Weight ray;              // primitive
  std::vector<int> vars;   // indices into the input list, original order
};

/// Groups the input weights by ray and orders the groups clockwise, starting
/// from the most counterclockwise ray. Errors: ZeroWeight, NonConvexSpan
/// (the weights do not fit in a pointed cone).
std::vector<RayGroup> sort_rays_clockwise(const std::vector<Weight>& weights);

/// Integral linear form vanishing on `ray`, positive on rays sorted earlier
/// (counterclockwise of `ray`): l(w) = w.b * ray.a - w.a * ray.b.
struct WallNormal {
  Weight ray;
  Int eval(const Weight& w) const { return w.b * ray.a - w.a * ray.b; }
};

WallNormal wall_normal(const Weight& ray);

}  // namespace tworay
