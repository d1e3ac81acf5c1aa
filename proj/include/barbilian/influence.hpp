#pragma once

#include <functional>
#include <string>
#include <utility>

#include "barbilian/geometry.hpp"

namespace barbilian {

enum class InfluenceKind { euclidean, euclidean_power, custom };

// The positive two-point weight (PA) of a source point P against a query
// point A. Ratios (PA)/(PB) of it drive the whole construction; scaling the
// influence by any positive function of P alone leaves every ratio unchanged.
//
// Custom evaluators must be strictly positive and continuous in P for fixed
// A; this is assumed, not checked at construction.
class InfluenceField {
public:
  static InfluenceField euclidean() {
    return InfluenceField(InfluenceKind::euclidean, 1.0, {});
  }

  static InfluenceField euclidean_power(double exponent) {
    if (!(exponent > 0.0) || !std::isfinite(exponent))
      throw ValidationError("influence exponent must be positive and finite");
    return InfluenceField(InfluenceKind::euclidean_power, exponent, {});
  }

  static InfluenceField custom(std::function<double(const Point&, const Point&)> eval) {
    if (!eval) throw ValidationError("custom influence needs an evaluator");
    return InfluenceField(InfluenceKind::custom, 0.0, std::move(eval));
  }

  InfluenceKind kind() const { return kind_; }
  double exponent() const { return exponent_; }

  // Unchecked evaluation; callers wanting the positivity guarantee use
  // influence_eval below.
  double raw(const Point& p, const Point& a) const {
    switch (kind_) {
      case InfluenceKind::euclidean:
        return distance(p, a);
      case InfluenceKind::euclidean_power:
        return std::pow(distance(p, a), exponent_);
      case InfluenceKind::custom:
      default:
        return eval_(p, a);
    }
  }

  std::string describe() const {
    switch (kind_) {
      case InfluenceKind::euclidean: return "euclidean";
      case InfluenceKind::euclidean_power:
        return "euclidean^" + std::to_string(exponent_);
      case InfluenceKind::custom:
      default: return "custom";
    }
  }

private:
  InfluenceField(InfluenceKind k, double e,
                 std::function<double(const Point&, const Point&)> f)
      : kind_(k), exponent_(e), eval_(std::move(f)) {}

  InfluenceKind kind_;
  double exponent_;
  std::function<double(const Point&, const Point&)> eval_;
};

// Checked evaluation: throws InfluenceNotPositive when the evaluator output
// violates the positivity hypothesis.
double influence_eval(const InfluenceField& field, const Point& p, const Point& a);

}  // namespace barbilian
