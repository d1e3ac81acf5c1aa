#include "barbilian/domains.hpp"

#include <cmath>
#include <string>

namespace barbilian {

namespace {

SampledSet sample_curve(const SourceSet& k, long long n, Provenance prov, int level) {
  SampledSet out;
  out.provenance = prov;
  out.dyadic_level = level;
  out.points.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i)
    out.points.push_back(k.curve_point(static_cast<double>(i) / static_cast<double>(n)));

  long long coincident = 0;
  for (long long i = 0; i < n; ++i)
    if (same_point(out.points[static_cast<std::size_t>(i)],
                   out.points[static_cast<std::size_t>((i + 1) % n)]))
      ++coincident;
  if (2 * coincident > n)
    throw DegenerateCurve("curve sampling: " + std::to_string(coincident) + " of " +
                          std::to_string(n) + " consecutive samples coincide");
  return out;
}

}  // namespace

SampledSet sample(const SourceSet& k, int n) {
  if (k.kind() == SourceSet::Kind::finite) {
    SampledSet out;
    out.points = k.finite_points();
    out.provenance = Provenance::exact_finite;
    return out;
  }
  if (n < 1) throw ValidationError("sample: need n >= 1");
  return sample_curve(k, n, Provenance::uniform_parameter, -1);
}

SampledSet sample_dyadic(const SourceSet& k, int base_count, int level) {
  if (k.kind() == SourceSet::Kind::finite) {
    SampledSet out;
    out.points = k.finite_points();
    out.provenance = Provenance::exact_finite;
    return out;
  }
  if (base_count < 1) throw ValidationError("sample_dyadic: need base_count >= 1");
  if (level < 0 || level > 40) throw ValidationError("sample_dyadic: level out of range");
  const long long n = static_cast<long long>(base_count) << level;
  return sample_curve(k, n, Provenance::dyadic_refinement, level);
}

Circle apollonius_circle(const Point& a, const Point& b, double alpha) {
  check_point(a, "apollonius focus A");
  check_point(b, "apollonius focus B");
  if (a.size() != 2 || b.size() != 2)
    throw ValidationError("apollonius_circle: planar points required");
  if (same_point(a, b)) throw CoincidentFoci("apollonius_circle: A equals B");
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw ValidationError("apollonius_circle: alpha must be positive and finite");
  if (alpha == 1.0)
    throw AlphaIsOne("apollonius_circle: alpha = 1 gives the perpendicular bisector");

  const double a2 = alpha * alpha;
  const double inv = 1.0 / (1.0 - a2);
  Circle c;
  c.center = {(a[0] - a2 * b[0]) * inv, (a[1] - a2 * b[1]) * inv};
  c.radius = alpha * distance(a, b) * std::abs(inv);
  return c;
}

}  // namespace barbilian
