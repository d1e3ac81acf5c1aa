#pragma once

#include <stdexcept>

namespace barbilian {

// Error families map onto CLI exit codes: validation -> 2, admissibility -> 3.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class AdmissibilityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// An influence evaluator produced a non-positive or non-finite value.
class InfluenceNotPositive : public AdmissibilityError {
public:
  using AdmissibilityError::AdmissibilityError;
};

// A query point lies on, or too near, the source set K.
class QueryTouchesSource : public AdmissibilityError {
public:
  using AdmissibilityError::AdmissibilityError;
};

// An influence value fell below the configured positivity floor.
class RatioUnbounded : public AdmissibilityError {
public:
  using AdmissibilityError::AdmissibilityError;
};

// Apollonius locus for alpha == 1 is the perpendicular bisector, not a circle.
class AlphaIsOne : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class CoincidentFoci : public ValidationError {
public:
  using ValidationError::ValidationError;
};

class PointOutsideDisk : public AdmissibilityError {
public:
  using AdmissibilityError::AdmissibilityError;
};

// A sampled curve collapsed: too many consecutive samples coincide.
class DegenerateCurve : public ValidationError {
public:
  using ValidationError::ValidationError;
};

// No admissible grid node, or no grid path, connects the query points.
class Unreachable : public AdmissibilityError {
public:
  using AdmissibilityError::AdmissibilityError;
};

}  // namespace barbilian
