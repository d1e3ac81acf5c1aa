#include "barbilian/metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace barbilian {

double influence_eval(const InfluenceField& field, const Point& p, const Point& a) {
  check_point(p, "influence source point");
  check_point(a, "influence query point");
  const double v = field.raw(p, a);
  if (!(v > 0.0) || !std::isfinite(v))
    throw InfluenceNotPositive("influence value " + std::to_string(v) +
                               " violates the positivity hypothesis");
  return v;
}

namespace {

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt(5) - 1) / 2
constexpr int kMaxGoldenIter = 240;
constexpr int kRefineBrackets = 3;

double wrap01(double t) {
  t -= std::floor(t);
  if (t >= 1.0) t = 0.0;
  return t;
}

struct Witness {
  double t = 0.0;  // wrapped curve parameter, or sample index for finite K
  double fa = 1.0;
  double fb = 1.0;
  double ratio() const { return fa / fb; }
};

struct ScanResult {
  Witness maxw, minw;
  long long evals = 0;
  bool converged = true;
};

// Influence pair evaluator along a curve, with admissibility checks folded
// into every evaluation.
class CurveEvaluator {
public:
  CurveEvaluator(const SourceSet& k, const InfluenceField& field,
                 const Point& a, const Point& b, double floor_geo,
                 double floor_explicit)
      : k_(k), field_(field), a_(a), b_(b), floor_geo_(floor_geo),
        floor_explicit_(floor_explicit),
        fast_(k.has_planar_curve() && field.kind() != InfluenceKind::custom) {
    if (fast_) {
      ax_ = a[0]; ay_ = a[1];
      bx_ = b[0]; by_ = b[1];
    }
  }

  Witness operator()(double t) const {
    const double tw = wrap01(t);
    Witness w;
    w.t = tw;
    if (fast_) {
      const Vec2 p = k_.curve_point2(tw);
      const double da = std::hypot(p.x - ax_, p.y - ay_);
      const double db = std::hypot(p.x - bx_, p.y - by_);
      if (!(da > floor_geo_) || !(db > floor_geo_))
        throw QueryTouchesSource("query point within positivity floor of K");
      if (field_.kind() == InfluenceKind::euclidean) {
        w.fa = da; w.fb = db;
      } else {
        const double s = field_.exponent();
        w.fa = std::pow(da, s); w.fb = std::pow(db, s);
      }
      return w;
    }
    const Point p = k_.curve_point(tw);
    if (field_.kind() != InfluenceKind::custom) {
      const double da = distance(p, a_);
      const double db = distance(p, b_);
      if (!(da > floor_geo_) || !(db > floor_geo_))
        throw QueryTouchesSource("query point within positivity floor of K");
      const double s = field_.exponent();
      w.fa = field_.kind() == InfluenceKind::euclidean ? da : std::pow(da, s);
      w.fb = field_.kind() == InfluenceKind::euclidean ? db : std::pow(db, s);
      return w;
    }
    w.fa = checked_custom(p, a_);
    w.fb = checked_custom(p, b_);
    return w;
  }

private:
  double checked_custom(const Point& p, const Point& q) const {
    const double v = field_.raw(p, q);
    if (!(v > 0.0) || !std::isfinite(v))
      throw InfluenceNotPositive("influence value " + std::to_string(v) +
                                 " violates the positivity hypothesis");
    if (floor_explicit_ > 0.0 && v < floor_explicit_)
      throw RatioUnbounded("influence value " + std::to_string(v) +
                           " below positivity floor " +
                           std::to_string(floor_explicit_));
    return v;
  }

  const SourceSet& k_;
  const InfluenceField& field_;
  const Point& a_;
  const Point& b_;
  double floor_geo_;
  double floor_explicit_;
  bool fast_;
  double ax_ = 0, ay_ = 0, bx_ = 0, by_ = 0;
};

// sign > 0 maximizes the ratio, sign < 0 minimizes; ties prefer the smaller
// parameter, which keeps witnesses deterministic.
bool better(const Witness& u, const Witness& v, int sign) {
  const double ru = u.ratio(), rv = v.ratio();
  if (ru != rv) return sign > 0 ? ru > rv : ru < rv;
  return u.t < v.t;
}

Witness refine_bracket(const CurveEvaluator& eval, double ta, const Witness& mid,
                       double tb, double ptol, int sign, long long& evals,
                       bool& converged) {
  Witness best = mid;
  double a = ta, b = tb;
  double x1 = b - (b - a) * kInvPhi;
  double x2 = a + (b - a) * kInvPhi;
  Witness w1 = eval(x1);
  Witness w2 = eval(x2);
  evals += 2;
  if (better(w1, best, sign)) best = w1;
  if (better(w2, best, sign)) best = w2;
  int iter = 0;
  while (b - a > ptol && ++iter <= kMaxGoldenIter) {
    const double r1 = w1.ratio(), r2 = w2.ratio();
    const bool keep_left = sign > 0 ? (r1 >= r2) : (r1 <= r2);
    if (keep_left) {
      b = x2; x2 = x1; w2 = w1;
      x1 = b - (b - a) * kInvPhi;
      w1 = eval(x1);
      if (better(w1, best, sign)) best = w1;
    } else {
      a = x1; x1 = x2; w1 = w2;
      x2 = a + (b - a) * kInvPhi;
      w2 = eval(x2);
      if (better(w2, best, sign)) best = w2;
    }
    ++evals;
  }
  if (b - a > ptol) converged = false;
  return best;
}

// Coarse cyclic sampling, then golden refinement inside the brackets around
// the strongest local extrema. The global sampled extremum is always one of
// the candidates, so the refined result can never fall below it.
ScanResult scan_curve(const SourceSet& k, const InfluenceField& field,
                      const Point& a, const Point& b, double floor_geo,
                      double floor_explicit, const ExtremaOptions& opts) {
  const CurveEvaluator eval(k, field, a, b, floor_geo, floor_explicit);
  const int n = opts.initial_samples;
  std::vector<Witness> s(n);
  for (int i = 0; i < n; ++i) s[i] = eval(static_cast<double>(i) / n);

  ScanResult out;
  out.evals = n;

  for (const int sign : {+1, -1}) {
    std::vector<int> candidates;
    for (int i = 0; i < n; ++i) {
      const double r = s[i].ratio();
      const double rl = s[(i + n - 1) % n].ratio();
      const double rr = s[(i + 1) % n].ratio();
      const bool is_extremum = sign > 0 ? (r >= rl && r >= rr) : (r <= rl && r <= rr);
      if (is_extremum) candidates.push_back(i);
    }
    std::sort(candidates.begin(), candidates.end(), [&](int i, int j) {
      const double ri = s[i].ratio(), rj = s[j].ratio();
      if (ri != rj) return sign > 0 ? ri > rj : ri < rj;
      return i < j;
    });
    if (candidates.size() > kRefineBrackets) candidates.resize(kRefineBrackets);

    Witness best = s[0];
    for (int i = 1; i < n; ++i)
      if (better(s[i], best, sign)) best = s[i];
    for (const int i : candidates) {
      const double ta = static_cast<double>(i - 1) / n;
      const double tb = static_cast<double>(i + 1) / n;
      const Witness w =
          refine_bracket(eval, ta, s[i], tb, opts.parameter_tolerance, sign,
                         out.evals, out.converged);
      if (better(w, best, sign)) best = w;
    }
    (sign > 0 ? out.maxw : out.minw) = best;
  }
  return out;
}

// Exact extrema over a finite sample. Ratios are ordered by cross
// multiplication, which makes the comparison outcome identical when the
// query points are swapped and the ratios invert.
ScanResult scan_finite(const std::vector<Point>& pts, const InfluenceField& field,
                       const Point& a, const Point& b, double floor_explicit) {
  ScanResult out;
  bool first = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double fa = field.raw(pts[i], a);
    const double fb = field.raw(pts[i], b);
    for (const double v : {fa, fb}) {
      if (!(v > 0.0) || !std::isfinite(v))
        throw InfluenceNotPositive("influence value " + std::to_string(v) +
                                   " violates the positivity hypothesis");
      if (floor_explicit > 0.0 && v < floor_explicit)
        throw RatioUnbounded("influence value " + std::to_string(v) +
                             " below positivity floor " +
                             std::to_string(floor_explicit));
    }
    const Witness w{static_cast<double>(i), fa, fb};
    if (first) {
      out.maxw = out.minw = w;
      first = false;
      continue;
    }
    if (w.fa * out.maxw.fb > out.maxw.fa * w.fb) out.maxw = w;
    if (w.fa * out.minw.fb < out.minw.fa * w.fb) out.minw = w;
  }
  out.evals = static_cast<long long>(pts.size());
  return out;
}

Point witness_point(const SourceSet& k, const Witness& w) {
  if (k.kind() == SourceSet::Kind::finite)
    return k.finite_points()[static_cast<std::size_t>(w.t)];
  return k.curve_point(w.t);
}

void validate_options(const ExtremaOptions& opts) {
  if (opts.initial_samples < 8)
    throw ValidationError("initial_samples must be >= 8");
  if (!(opts.parameter_tolerance > 0.0))
    throw ValidationError("parameter_tolerance must be positive");
  if (opts.positivity_floor < 0.0)
    throw ValidationError("positivity_floor must be >= 0");
  if (!(opts.degeneracy_tolerance > 0.0))
    throw ValidationError("degeneracy_tolerance must be positive");
}

ScanResult scan_extrema(const SourceSet& k, const InfluenceField& field,
                        const Point& a, const Point& b,
                        const ExtremaOptions& opts) {
  validate_options(opts);
  check_point(a, "query point A");
  check_point(b, "query point B");
  if (a.size() != b.size())
    throw ValidationError("query points have different dimensions");

  const double floor_geo = opts.positivity_floor > 0.0
                               ? opts.positivity_floor
                               : 1e-9 * k.diameter();
  if (k.distance_to(a) <= floor_geo)
    throw QueryTouchesSource("query point A lies on or too near K");
  if (k.distance_to(b) <= floor_geo)
    throw QueryTouchesSource("query point B lies on or too near K");

  if (same_point(a, b)) {
    ScanResult out;
    Witness w;
    w.t = 0.0;
    w.fa = w.fb = 1.0;
    out.maxw = out.minw = w;
    out.evals = 1;
    return out;
  }

  if (k.kind() == SourceSet::Kind::finite)
    return scan_finite(k.finite_points(), field, a, b, opts.positivity_floor);
  return scan_curve(k, field, a, b, floor_geo, opts.positivity_floor, opts);
}

// ln of the ratio quotient, formed from the raw influence pairs so that
// swapping the query points yields the identical double on finite K.
double oscillation_value(const Witness& maxw, const Witness& minw) {
  const double q = (maxw.fa * minw.fb) / (maxw.fb * minw.fa);
  return std::max(0.0, std::log(q));
}

bool degenerate_flag(const Point& a, const Point& b, const Witness& maxw,
                     const Witness& minw, double tol) {
  const double m = maxw.ratio();
  const double mm = minw.ratio();
  return !same_point(a, b) && (m - mm) <= tol * mm;
}

}  // namespace

ExtremalRatio ratio_extrema(const SourceSet& k, const InfluenceField& field,
                            const Point& a, const Point& b,
                            const ExtremaOptions& opts) {
  const ScanResult scan = scan_extrema(k, field, a, b, opts);
  ExtremalRatio r;
  r.max_ratio = scan.maxw.ratio();
  r.min_ratio = scan.minw.ratio();
  if (same_point(a, b)) {
    r.argmax = r.argmin = k.kind() == SourceSet::Kind::finite
                              ? k.finite_points().front()
                              : k.curve_point(0.0);
    return r;
  }
  r.argmax = witness_point(k, scan.maxw);
  r.argmin = witness_point(k, scan.minw);
  return r;
}

DistanceReport barbilian_distance(const SourceSet& k, const InfluenceField& field,
                                  const Point& a, const Point& b,
                                  const ExtremaOptions& opts) {
  const ScanResult scan = scan_extrema(k, field, a, b, opts);
  DistanceReport rep;
  rep.value = oscillation_value(scan.maxw, scan.minw);
  rep.degenerate = degenerate_flag(a, b, scan.maxw, scan.minw,
                                   opts.degeneracy_tolerance);
  rep.extrema.max_ratio = scan.maxw.ratio();
  rep.extrema.min_ratio = scan.minw.ratio();
  if (same_point(a, b)) {
    rep.extrema.argmax = rep.extrema.argmin =
        k.kind() == SourceSet::Kind::finite ? k.finite_points().front()
                                            : k.curve_point(0.0);
  } else {
    rep.extrema.argmax = witness_point(k, scan.maxw);
    rep.extrema.argmin = witness_point(k, scan.minw);
  }
  rep.samples_used = scan.evals;
  rep.refinement_converged = scan.converged;
  return rep;
}

DistanceReport distance_1934(const SourceSet& k, const InfluenceField& field,
                             const Point& a, const Point& b,
                             const ExtremaOptions& opts) {
  // two independent maximizations: max (PA)/(PB) and max (QB)/(QA)
  const ScanResult fwd = scan_extrema(k, field, a, b, opts);
  const ScanResult rev = scan_extrema(k, field, b, a, opts);

  DistanceReport rep;
  const double m_fwd = fwd.maxw.ratio();
  const double m_rev = rev.maxw.ratio();
  rep.value = std::max(0.0, std::log(m_fwd) + std::log(m_rev));

  // rev's witness maximizes (PB)/(PA), i.e. attains the forward minimum
  Witness minw;
  minw.t = rev.maxw.t;
  minw.fa = rev.maxw.fb;
  minw.fb = rev.maxw.fa;
  rep.degenerate = degenerate_flag(a, b, fwd.maxw, minw, opts.degeneracy_tolerance);
  rep.extrema.max_ratio = m_fwd;
  rep.extrema.min_ratio = minw.ratio();
  if (same_point(a, b)) {
    rep.extrema.argmax = rep.extrema.argmin =
        k.kind() == SourceSet::Kind::finite ? k.finite_points().front()
                                            : k.curve_point(0.0);
  } else {
    rep.extrema.argmax = witness_point(k, fwd.maxw);
    rep.extrema.argmin = witness_point(k, rev.maxw);
  }
  rep.samples_used = fwd.evals + rev.evals;
  rep.refinement_converged = fwd.converged && rev.converged;
  return rep;
}

bool is_degenerate(const SourceSet& k, const InfluenceField& field,
                   const Point& a, const Point& b, double tol,
                   const ExtremaOptions& opts) {
  if (!(tol > 0.0)) throw ValidationError("degeneracy tolerance must be positive");
  const ScanResult scan = scan_extrema(k, field, a, b, opts);
  const double m = scan.maxw.ratio();
  const double mm = scan.minw.ratio();
  return (m - mm) <= tol * mm;
}

}  // namespace barbilian
