#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "barbilian/geodesics.hpp"
#include "barbilian/models.hpp"

using namespace barbilian;

namespace {
const InfluenceField kEuclid = InfluenceField::euclidean();

ExtremaOptions fast_opts() {
  ExtremaOptions o;
  o.initial_samples = 64;
  return o;
}
}  // namespace

TEST_CASE("coincident endpoints give a single-node path of length zero") {
  const SourceSet disk = SourceSet::circle({0.0, 0.0}, 1.0);
  const GeodesicPath path =
      approximate_geodesic(disk, kEuclid, {0.25, 0.25}, {0.25, 0.25}, 32, fast_opts());
  CHECK(path.nodes.size() == 1);
  CHECK(path.length == 0.0);
  CHECK(path.grid_resolution == 32);
}

TEST_CASE("path length bounds the distance from above") {
  const SourceSet disk = SourceSet::circle({0.0, 0.0}, 1.0);
  GeodesicSolver solver(disk, kEuclid, 64, fast_opts());
  const Point a{-0.5, 0.0}, b{0.5, 0.0};
  const GeodesicPath path = solver.solve(a, b);
  const double d = barbilian_distance(disk, kEuclid, a, b, fast_opts()).value;
  CHECK(path.length >= d - 1e-9);
  // diameter-aligned pair: the grid tracks the hyperbolic geodesic closely
  CHECK(path.length <= 1.05 * d);
  // endpoints snap to lattice nodes near a and b
  CHECK(std::abs(path.nodes.front()[0] - a[0]) <= 2.0 / 64);
  CHECK(std::abs(path.nodes.back()[0] - b[0]) <= 2.0 / 64);
}

TEST_CASE("diameter pairs hug the diameter") {
  const SourceSet disk = SourceSet::circle({0.0, 0.0}, 1.0);
  GeodesicSolver solver(disk, kEuclid, 64, fast_opts());
  const GeodesicPath path = solver.solve({0.0, 0.0}, {0.5, 0.0});
  const double cell = 2.0 / 64;
  for (const Point& p : path.nodes) CHECK(std::abs(p[1]) <= cell + 1e-12);
}

TEST_CASE("consecutive path nodes are grid neighbors") {
  const SourceSet disk = SourceSet::circle({0.0, 0.0}, 1.0);
  GeodesicSolver solver(disk, kEuclid, 48, fast_opts());
  const GeodesicPath path = solver.solve({-0.4, 0.3}, {0.5, -0.2});
  const double step = 2.0 / 48;
  for (std::size_t i = 1; i < path.nodes.size(); ++i) {
    const double dx = std::abs(path.nodes[i][0] - path.nodes[i - 1][0]);
    const double dy = std::abs(path.nodes[i][1] - path.nodes[i - 1][1]);
    CHECK(dx <= step + 1e-12);
    CHECK(dy <= step + 1e-12);
    CHECK(dx + dy > 0.0);
  }
}

TEST_CASE("solver reuses its grid across queries deterministically") {
  const SourceSet disk = SourceSet::circle({0.0, 0.0}, 1.0);
  GeodesicSolver solver(disk, kEuclid, 32, fast_opts());
  const GeodesicPath p1 = solver.solve({-0.3, 0.1}, {0.4, -0.2});
  const GeodesicPath p2 = solver.solve({-0.3, 0.1}, {0.4, -0.2});
  CHECK(p1.length == p2.length);
  CHECK(p1.nodes.size() == p2.nodes.size());
}

TEST_CASE("unreachable endpoints are reported") {
  const SourceSet disk = SourceSet::circle({0.0, 0.0}, 1.0);
  GeodesicSolver solver(disk, kEuclid, 32, fast_opts());
  CHECK_THROWS_AS(solver.solve({2.0, 0.0}, {0.0, 0.0}), Unreachable);
  CHECK_THROWS_AS(solver.solve({0.0, 0.0}, {0.0, 1.5}), Unreachable);
}

TEST_CASE("geodesics work inside polygons") {
  const SourceSet square =
      SourceSet::polygon({{1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}});
  const GeodesicPath path =
      approximate_geodesic(square, kEuclid, {-0.5, -0.5}, {0.5, 0.5}, 32, fast_opts());
  CHECK(path.nodes.size() > 2);
  const double d =
      barbilian_distance(square, kEuclid, {-0.5, -0.5}, {0.5, 0.5}, fast_opts()).value;
  CHECK(path.length >= d - 1e-9);
}

TEST_CASE("finite domains are rejected") {
  const SourceSet sites = SourceSet::finite({{0.0, 2.0}, {0.0, -2.0}});
  CHECK_THROWS_AS(approximate_geodesic(sites, kEuclid, {0, 0}, {1, 0}, 32),
                  ValidationError);
}
