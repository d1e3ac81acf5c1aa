#pragma once

#include <string>
#include <vector>

#include "barbilian/metric.hpp"
#include "barbilian/rng.hpp"

namespace barbilian {

struct SymmetryViolation {
  Point a, b;
  double deviation = 0.0;
};

struct TriangleViolation {
  Point a, b, c;     // b is the middle point of the failing assignment
  double deficit = 0.0;
};

struct IdentityFailure {
  Point a;
  double value = 0.0;
};

struct DegeneratePair {
  Point a, b;
  double value = 0.0;
};

// Machine-checkable record of the weak-distance axioms over a point sample.
// Degeneracies are reported separately: the theorem permits d(A,B) = 0 with
// A != B, so they are not violations.
struct AxiomReport {
  std::vector<SymmetryViolation> symmetry_violations;
  std::vector<TriangleViolation> triangle_violations;
  std::vector<IdentityFailure> identity_failures;
  std::vector<DegeneratePair> degeneracies_found;
  double max_deviation = 0.0;  // worst deviation seen, violating or not
  bool triangle_checked = false;
  std::string config;

  bool pass() const {
    return symmetry_violations.empty() && triangle_violations.empty() &&
           identity_failures.empty();
  }
};

// Exhaustively checks symmetry and identity over all ordered pairs and the
// triangle inequality over all triples of the given points.
AxiomReport verify_weak_distance(const SourceSet& k, const InfluenceField& field,
                                 const std::vector<Point>& points, double tol,
                                 const ExtremaOptions& opts = {});

// All pairs a != b whose influence ratio is constant within tol. An empty
// list certifies, over the sample, that the weak distance is a distance.
std::vector<DegeneratePair> verify_metric_upgrade(const SourceSet& k,
                                                  const InfluenceField& field,
                                                  const std::vector<Point>& points,
                                                  double tol,
                                                  const ExtremaOptions& opts = {});

struct InvarianceSummary {
  int trials = 0;
  double gauge_max_deviation = 0.0;
  double similarity_max_deviation = 0.0;
  std::string config;
};

// Metamorphic checks: multiplying the influence by a random positive gauge
// lambda(P) must leave every distance unchanged, and (for the euclidean
// influence) so must applying one similarity transform to K and the queries.
InvarianceSummary verify_invariances(const SourceSet& k, const InfluenceField& field,
                                     const std::vector<std::pair<Point, Point>>& pairs,
                                     int trials, std::uint64_t seed,
                                     const ExtremaOptions& opts = {});

// n points uniform in a disk inscribed in the admissible region, inset from
// K by inset_fraction of K's diameter. For finite K, rejection-sampled away
// from the sites instead.
std::vector<Point> random_interior_points(const SourceSet& k, int n, Rng& rng,
                                          double inset_fraction = 0.05);

}  // namespace barbilian
