#include <doctest.h>

#include "tworay/cones2d.hpp"

using namespace tworay;

namespace {

std::vector<Weight> rays_of(const std::vector<RayGroup>& gs) {
  std::vector<Weight> out;
  for (const auto& g : gs) out.push_back(g.ray);
  return out;
}

}  // namespace

TEST_CASE("clockwise ray sort on the family-64 grading") {
  std::vector<Weight> ws = {{0, 1}, {5, 1}, {6, 1}, {7, 1}, {8, 1}, {2, 0}, {1, -1}};
  auto gs = sort_rays_clockwise(ws);
  REQUIRE(gs.size() == 7);
  CHECK(rays_of(gs) ==
        std::vector<Weight>{{0, 1}, {5, 1}, {6, 1}, {7, 1}, {8, 1}, {1, 0}, {1, -1}});
  for (const auto& g : gs) CHECK(g.vars.size() == 1);
}

TEST_CASE("sort groups proportional rays") {
  std::vector<Weight> ws = {{0, 1}, {2, 1}, {1, 0}, {1, 0}, {1, 0}, {1, -2}};
  auto gs = sort_rays_clockwise(ws);
  REQUIRE(gs.size() == 4);
  CHECK(gs[0].ray == Weight{0, 1});
  CHECK(gs[1].ray == Weight{2, 1});
  CHECK(gs[2].ray == Weight{1, 0});
  CHECK(gs[2].vars == std::vector<int>{2, 3, 4});
  CHECK(gs[3].ray == Weight{1, -2});
}

TEST_CASE("sort groups repeated boundary rays") {
  std::vector<Weight> ws = {{0, 1}, {0, 1}, {1, 0}, {1, -2}, {1, -2}};
  auto gs = sort_rays_clockwise(ws);
  REQUIRE(gs.size() == 3);
  CHECK(gs[0].vars == std::vector<int>{0, 1});
  CHECK(gs[1].ray == Weight{1, 0});
  CHECK(gs[2].vars == std::vector<int>{3, 4});
}

TEST_CASE("sort rejects bad input") {
  CHECK_THROWS_AS(sort_rays_clockwise({{0, 0}, {1, 0}}), EngineError);
  // antipodal pair: the span is not pointed
  CHECK_THROWS_AS(sort_rays_clockwise({{1, 0}, {-1, 0}}), EngineError);
  // three rays covering the whole plane
  CHECK_THROWS_AS(sort_rays_clockwise({{1, 0}, {-1, 2}, {-1, -2}}), EngineError);
}

TEST_CASE("sort is idempotent on the grouped rays") {
  std::vector<Weight> ws = {{4, 1}, {0, 1}, {1, -1}, {2, 0}, {4, 1}, {3, 2}};
  auto once = rays_of(sort_rays_clockwise(ws));
  auto twice = rays_of(sort_rays_clockwise(once));
  CHECK(once == twice);
}

TEST_CASE("classify_position against the worked cones") {
  CHECK(classify_position(Cone2({5, 1}, {2, 0}), {1, 0}) == Position::Boundary);
  CHECK(classify_position(Cone2({0, 1}, {1, -2}), {3, -2}) == Position::Interior);
  CHECK(classify_position(Cone2({4, 1}, {12, 1}), {1, 0}) == Position::Outside);
  CHECK(classify_position(Cone2({1, 0}, {0, 1}), {1, 1}) == Position::Interior);
}

TEST_CASE("classify_position on a ray cone") {
  Cone2 ray({2, 1}, {4, 2});
  CHECK(ray.is_ray());
  CHECK(classify_position(ray, {6, 3}) == Position::Boundary);
  CHECK(classify_position(ray, {-2, -1}) == Position::Outside);
  CHECK(classify_position(ray, {1, 1}) == Position::Outside);
}

TEST_CASE("wall normal signs follow the sort order") {
  WallNormal l = wall_normal({7, 1});
  CHECK(l.eval({0, 1}) == 7);
  CHECK(l.eval({8, 1}) == -1);
  CHECK(l.eval({7, 1}) == 0);
  // (1,-1) sorts after (1,0), so the form is negative there. The stated
  // formula pins the value to -1.
  WallNormal h = wall_normal({1, 0});
  CHECK(h.eval({1, -1}) == -1);
  CHECK(h.eval({0, 1}) == 1);
}

TEST_CASE("primitive normalization") {
  CHECK(primitive({2, 0}) == Weight{1, 0});
  CHECK(primitive({-4, 6}) == Weight{-2, 3});
  CHECK_THROWS_AS(primitive({0, 0}), EngineError);
}
