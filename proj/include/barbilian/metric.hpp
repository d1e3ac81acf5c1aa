#pragma once

#include "barbilian/influence.hpp"
#include "barbilian/source_set.hpp"

namespace barbilian {

struct ExtremaOptions {
  // Coarse uniform samples taken along curve variants before refinement.
  int initial_samples = 256;
  // Golden-section stopping width in curve parameter.
  double parameter_tolerance = 1e-10;
  // Minimum admissible influence value. 0 selects the automatic floor,
  // 1e-9 times the diameter of K.
  double positivity_floor = 0.0;
  // Relative tolerance deciding whether the ratio is constant over K.
  double degeneracy_tolerance = 1e-9;
};

// The extremal influence ratios over K for a fixed query pair, with the
// source points attaining them. Swapping the query points maps
// (max, min) -> (1/min, 1/max).
struct ExtremalRatio {
  double max_ratio = 1.0;
  double min_ratio = 1.0;
  Point argmax;
  Point argmin;
};

struct DistanceReport {
  double value = 0.0;      // ln(max_ratio / min_ratio), >= 0
  bool degenerate = false; // ratio constant within tolerance while a != b
  ExtremalRatio extrema;
  long long samples_used = 0;
  bool refinement_converged = true;
};

// max and min of (PA)/(PB) over P in K. For curve variants this is the
// adaptive-refinement estimate at the requested parameter tolerance; for
// finite K it is exact over the sample, with lowest-index witnesses on ties.
ExtremalRatio ratio_extrema(const SourceSet& k, const InfluenceField& field,
                            const Point& a, const Point& b,
                            const ExtremaOptions& opts = {});

// The logarithmic oscillation ln(M/m) of the influence ratio: a weak
// distance on the admissible query points (symmetric, triangle inequality,
// zero on the diagonal, but possibly zero for distinct points).
DistanceReport barbilian_distance(const SourceSet& k, const InfluenceField& field,
                                  const Point& a, const Point& b,
                                  const ExtremaOptions& opts = {});

// The original two-maxima form ln max(PA/PB) + ln max(QB/QA). Agrees with
// barbilian_distance because max(QB/QA) = 1/m.
DistanceReport distance_1934(const SourceSet& k, const InfluenceField& field,
                             const Point& a, const Point& b,
                             const ExtremaOptions& opts = {});

// True iff (M - m)/m <= tol. With a != b this certifies the weak distance is
// not a distance on this configuration (the Apollonius-circle degeneracy).
bool is_degenerate(const SourceSet& k, const InfluenceField& field,
                   const Point& a, const Point& b, double tol,
                   const ExtremaOptions& opts = {});

}  // namespace barbilian
