#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "barbilian/geometry.hpp"

namespace barbilian {

// The compact source set K over which influence ratios are extremized.
// Finite sets are evaluated exactly; circles, polygons and closed parametric
// curves are treated as curves gamma(t) on t in [0,1) and refined adaptively.
//
// Polygons are parameterized by arc length, not per-edge uniformly. Circles
// and polygons are planar; finite and parametric variants may live in any
// dimension >= 2.
class SourceSet {
public:
  enum class Kind { finite, circle, polygon, parametric };

  static SourceSet finite(std::vector<Point> points);
  static SourceSet circle(const Point& center, double radius);
  static SourceSet polygon(std::vector<Point> vertices);
  static SourceSet parametric(std::function<Point(double)> curve);

  Kind kind() const { return kind_; }
  bool is_curve() const { return kind_ != Kind::finite; }
  std::size_t dimension() const { return dim_; }

  const std::vector<Point>& finite_points() const;
  Vec2 circle_center() const;
  double circle_radius() const;
  const std::vector<Vec2>& polygon_vertices() const;
  double polygon_perimeter() const;

  // True for circle and polygon variants, whose curve points come back as
  // Vec2 without heap traffic.
  bool has_planar_curve() const {
    return kind_ == Kind::circle || kind_ == Kind::polygon;
  }
  Vec2 curve_point2(double t) const;  // planar curves, t wrapped into [0,1)
  Point curve_point(double t) const;  // any curve variant

  // Largest extent of K (circle: exact diameter; otherwise the bounding-box
  // diagonal of the defining or probed points). Used to scale tolerances.
  double diameter() const { return diameter_; }

  // Euclidean distance from x to K. Exact for finite, circle and polygon;
  // a refined sample minimum for parametric curves.
  double distance_to(const Point& x) const;

  // Interior tests are defined for closed planar curves only.
  bool interior_contains(const Point& x) const;
  Vec2 interior_anchor() const;
  std::pair<Vec2, Vec2> bounding_box() const;

  std::string describe() const;

private:
  SourceSet() = default;

  Kind kind_ = Kind::finite;
  std::size_t dim_ = 2;
  double diameter_ = 0.0;

  std::vector<Point> points_;  // finite

  Vec2 center_{};              // circle
  double radius_ = 0.0;

  std::vector<Vec2> verts_;    // polygon
  std::vector<double> cumlen_;
  double perimeter_ = 0.0;

  std::function<Point(double)> curve_;  // parametric
  std::vector<Point> probe_;            // cached parametric samples
};

}  // namespace barbilian
