#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "barbilian/domains.hpp"
#include "barbilian/rng.hpp"

using namespace barbilian;

namespace {

bool contains_approx(const std::vector<Point>& pts, double x, double y,
                     double tol = 1e-12) {
  return std::any_of(pts.begin(), pts.end(), [&](const Point& p) {
    return std::abs(p[0] - x) <= tol && std::abs(p[1] - y) <= tol;
  });
}

}  // namespace

TEST_CASE("unit circle quarters") {
  const SourceSet k = SourceSet::circle({0.0, 0.0}, 1.0);
  const SampledSet s = sample(k, 4);
  REQUIRE(s.points.size() == 4);
  CHECK(contains_approx(s.points, 1.0, 0.0, 1e-15));
  CHECK(contains_approx(s.points, 0.0, 1.0, 1e-15));
  CHECK(contains_approx(s.points, -1.0, 0.0, 1e-15));
  CHECK(contains_approx(s.points, 0.0, -1.0, 1e-15));
  CHECK(s.provenance == Provenance::uniform_parameter);
}

TEST_CASE("finite sets pass through sampling") {
  const SourceSet k = SourceSet::finite({{0.0, 2.0}, {0.0, -2.0}});
  const SampledSet s = sample(k, 64);
  REQUIRE(s.points.size() == 2);
  CHECK(s.provenance == Provenance::exact_finite);
}

TEST_CASE("square sampled at 8 hits vertices and edge midpoints") {
  const SourceSet k =
      SourceSet::polygon({{1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}});
  const SampledSet s = sample(k, 8);
  REQUIRE(s.points.size() == 8);
  for (const auto& [x, y] : std::vector<std::pair<double, double>>{
           {1, 1}, {-1, 1}, {-1, -1}, {1, -1}, {0, 1}, {-1, 0}, {0, -1}, {1, 0}})
    CHECK(contains_approx(s.points, x, y));
}

TEST_CASE("dyadic levels nest bit for bit") {
  const SourceSet circle = SourceSet::circle({0.3, -0.2}, 1.7);
  const SourceSet poly =
      SourceSet::polygon({{2.0, 0.0}, {0.5, 1.8}, {-1.5, 0.3}, {-0.2, -1.9}});
  for (const SourceSet* k : {&circle, &poly}) {
    for (int level = 1; level <= 5; ++level) {
      const SampledSet coarse = sample_dyadic(*k, 8, level - 1);
      const SampledSet fine = sample_dyadic(*k, 8, level);
      CHECK(fine.points.size() == coarse.points.size() * 2);
      std::set<std::pair<double, double>> fine_set;
      for (const Point& p : fine.points) fine_set.insert({p[0], p[1]});
      for (const Point& p : coarse.points)
        CHECK(fine_set.count({p[0], p[1]}) == 1);
    }
  }
}

TEST_CASE("regular-polygon vertices survive dyadic refinement") {
  // equilateral, so arc-length steps land on vertices whenever the sample
  // count is a multiple of the vertex count
  const SourceSet k =
      SourceSet::polygon({{1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}});
  for (int level = 0; level <= 6; ++level) {
    const SampledSet s = sample_dyadic(k, 4, level);
    for (const Vec2& v : k.polygon_vertices()) CHECK(contains_approx(s.points, v.x, v.y));
  }
}

TEST_CASE("degenerate parametric curves are rejected") {
  CHECK_THROWS_AS(SourceSet::parametric([](double) { return Point{1.0, 2.0}; }),
                  DegenerateCurve);
  // parked on one point for three quarters of the parameter range
  const SourceSet lazy = SourceSet::parametric([](double t) {
    if (t < 0.75) return Point{1.0, 0.0};
    const double th = 6.283185307179586 * t;
    return Point{std::cos(th), std::sin(th)};
  });
  CHECK_THROWS_AS(sample(lazy, 16), DegenerateCurve);
}

TEST_CASE("apollonius circle canonical case") {
  // |PA| = 2 |PB| with A=(0,0), B=(1,0): complete the square
  const Circle c = apollonius_circle({0.0, 0.0}, {1.0, 0.0}, 2.0);
  CHECK(c.center[0] == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(c.center[1] == doctest::Approx(0.0));
  CHECK(c.radius == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("apollonius circle alpha = 1/2 case, checked by probing") {
  const Point a{0.0, 0.0}, b{2.0, 0.0};
  const Circle c = apollonius_circle(a, b, 0.5);
  CHECK(c.center[0] == doctest::Approx(-2.0 / 3.0).epsilon(1e-14));
  CHECK(c.center[1] == doctest::Approx(0.0));
  CHECK(c.radius == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
  const SourceSet k = SourceSet::circle(c.center, c.radius);
  for (int i = 0; i < 64; ++i) {
    const Point p = k.curve_point(i / 64.0);
    const double ratio = distance(p, a) / distance(p, b);
    CHECK(std::abs(ratio - 0.5) <= 1e-12 * 0.5);
  }
}

TEST_CASE("apollonius round-trip ratio over random configurations") {
  Rng rng(404);
  for (int trial = 0; trial < 50; ++trial) {
    const Point a{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    Point b{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    if (same_point(a, b)) b[0] += 1.0;
    double alpha = rng.uniform(0.2, 5.0);
    if (alpha == 1.0) alpha = 1.5;
    const Circle c = apollonius_circle(a, b, alpha);
    const SourceSet k = SourceSet::circle(c.center, c.radius);
    for (int i = 0; i < 64; ++i) {
      const Point p = k.curve_point(i / 64.0);
      const double ratio = distance(p, a) / distance(p, b);
      CHECK(std::abs(ratio - alpha) <= 1e-12 * alpha);
    }
  }
}

TEST_CASE("apollonius error paths") {
  CHECK_THROWS_AS(apollonius_circle({0.0, 0.0}, {1.0, 0.0}, 1.0), AlphaIsOne);
  CHECK_THROWS_AS(apollonius_circle({1.0, 1.0}, {1.0, 1.0}, 2.0), CoincidentFoci);
  CHECK_THROWS_AS(apollonius_circle({0.0, 0.0}, {1.0, 0.0}, -2.0), ValidationError);
}

TEST_CASE("source set validation") {
  CHECK_THROWS_AS(SourceSet::finite({}), ValidationError);
  CHECK_THROWS_AS(SourceSet::finite({{1.0, 2.0}, {1.0, 2.0}}), ValidationError);
  CHECK_THROWS_AS(SourceSet::circle({0.0, 0.0}, 0.0), ValidationError);
  CHECK_THROWS_AS(SourceSet::polygon({{0.0, 0.0}, {1.0, 0.0}}), ValidationError);
  CHECK_THROWS_AS(SourceSet::polygon({{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}}),
                  ValidationError);
}

TEST_CASE("distance_to is exact for the planar variants") {
  const SourceSet circle = SourceSet::circle({0.0, 0.0}, 1.0);
  CHECK(circle.distance_to({0.0, 0.0}) == doctest::Approx(1.0));
  CHECK(circle.distance_to({2.0, 0.0}) == doctest::Approx(1.0));
  CHECK(circle.distance_to({0.0, 0.5}) == doctest::Approx(0.5));

  const SourceSet square =
      SourceSet::polygon({{1.0, 1.0}, {-1.0, 1.0}, {-1.0, -1.0}, {1.0, -1.0}});
  CHECK(square.distance_to({0.0, 0.0}) == doctest::Approx(1.0));
  CHECK(square.distance_to({3.0, 0.0}) == doctest::Approx(2.0));
  CHECK(square.distance_to({0.25, 0.75}) == doctest::Approx(0.25));
}

TEST_CASE("parametric curves wrap an arbitrary evaluator") {
  // ellipse
  const SourceSet k = SourceSet::parametric([](double t) {
    const double th = 6.283185307179586 * t;
    return Point{2.0 * std::cos(th), std::sin(th)};
  });
  CHECK(k.diameter() == doctest::Approx(std::sqrt(16.0 + 4.0)).epsilon(1e-3));
  CHECK(k.interior_contains({0.0, 0.0}));
  CHECK_FALSE(k.interior_contains({1.99, 0.9}));
  CHECK(k.distance_to({0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-6));
}
