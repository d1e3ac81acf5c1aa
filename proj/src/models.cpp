#include "barbilian/models.hpp"

#include <cmath>

namespace barbilian {

double poincare_disk_distance(const Point& a, const Point& b) {
  check_point(a, "disk point");
  check_point(b, "disk point");
  if (a.size() != 2 || b.size() != 2)
    throw ValidationError("poincare_disk_distance: planar points required");
  if (!(std::hypot(a[0], a[1]) < 1.0))
    throw PointOutsideDisk("first point has norm >= 1");
  if (!(std::hypot(b[0], b[1]) < 1.0))
    throw PointOutsideDisk("second point has norm >= 1");

  // delta = |a - b| / |1 - conj(a) b|, points read as complex numbers
  const double num = std::hypot(a[0] - b[0], a[1] - b[1]);
  if (num == 0.0) return 0.0;
  const double re = 1.0 - (a[0] * b[0] + a[1] * b[1]);
  const double im = -(a[0] * b[1] - a[1] * b[0]);
  const double delta = num / std::hypot(re, im);
  return std::log1p(2.0 * delta / (1.0 - delta));
}

std::vector<DiskComparison> compare_disk(const std::vector<std::pair<Point, Point>>& pairs,
                                         const ExtremaOptions& opts) {
  const SourceSet unit = SourceSet::circle({0.0, 0.0}, 1.0);
  const InfluenceField euclid = InfluenceField::euclidean();
  std::vector<DiskComparison> out;
  out.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    DiskComparison c;
    c.a = a;
    c.b = b;
    c.hyperbolic = poincare_disk_distance(a, b);
    c.barbilian = barbilian_distance(unit, euclid, a, b, opts).value;
    c.abs_diff = std::abs(c.barbilian - c.hyperbolic);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace barbilian
