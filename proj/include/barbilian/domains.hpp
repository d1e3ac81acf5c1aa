#pragma once

#include <vector>

#include "barbilian/source_set.hpp"

namespace barbilian {

struct Circle {
  Point center;
  double radius = 0.0;
};

enum class Provenance { uniform_parameter, dyadic_refinement, exact_finite };

struct SampledSet {
  std::vector<Point> points;
  Provenance provenance = Provenance::exact_finite;
  int dyadic_level = -1;
};

// Uniform-in-parameter samples of a curve variant; finite sets pass through
// unchanged. Throws DegenerateCurve when more than half of the consecutive
// samples coincide.
SampledSet sample(const SourceSet& k, int n);

// base_count * 2^level samples at parameters i / (base_count * 2^level).
// Levels nest: every point of level k-1 reappears, bit for bit, in level k.
SampledSet sample_dyadic(const SourceSet& k, int base_count, int level);

// The locus {P : |PA|/|PB| = alpha} for alpha > 0, alpha != 1:
// center (A - alpha^2 B) / (1 - alpha^2), radius alpha |AB| / |1 - alpha^2|.
// Taking K equal to this circle makes M = m = alpha and d(A,B) = 0 with
// A != B, the canonical degeneracy.
Circle apollonius_circle(const Point& a, const Point& b, double alpha);

}  // namespace barbilian
