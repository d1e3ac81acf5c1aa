#pragma once

#include <utility>
#include <vector>

#include "barbilian/metric.hpp"

namespace barbilian {

// Closed-form hyperbolic distance on the open unit disk, normalized so that
// d(0, r) = ln((1+r)/(1-r)):
//   d = ln((1+delta)/(1-delta)),  delta = |a-b| / |1 - conj(a) b|
// with planar points read as complex numbers. Throws PointOutsideDisk when a
// point has norm >= 1.
double poincare_disk_distance(const Point& a, const Point& b);

struct DiskComparison {
  Point a, b;
  double barbilian = 0.0;
  double hyperbolic = 0.0;
  double abs_diff = 0.0;
};

// Barbilian distance with K = the unit circle against the hyperbolic closed
// form; on the disk the two agree, so abs_diff is pure refinement error.
std::vector<DiskComparison> compare_disk(const std::vector<std::pair<Point, Point>>& pairs,
                                         const ExtremaOptions& opts = {});

}  // namespace barbilian
