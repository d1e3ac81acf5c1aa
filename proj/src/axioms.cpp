#include "barbilian/axioms.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace barbilian {

namespace {

constexpr double kTwoPi = 6.283185307179586;

std::string config_line(const SourceSet& k, const InfluenceField& field,
                        double tol, const ExtremaOptions& opts) {
  std::ostringstream os;
  os << "K=" << k.describe() << ";influence=" << field.describe() << ";tol=" << tol
     << ";initial_samples=" << opts.initial_samples
     << ";parameter_tolerance=" << opts.parameter_tolerance;
  return os.str();
}

struct Similarity {
  double c = 1.0, s = 0.0, scale = 1.0;
  Vec2 shift{};

  Point apply(const Point& p) const {
    return {scale * (c * p[0] - s * p[1]) + shift.x,
            scale * (s * p[0] + c * p[1]) + shift.y};
  }
};

SourceSet transform_set(const SourceSet& k, const Similarity& sim) {
  switch (k.kind()) {
    case SourceSet::Kind::circle: {
      const Vec2 c = k.circle_center();
      return SourceSet::circle(sim.apply({c.x, c.y}), sim.scale * k.circle_radius());
    }
    case SourceSet::Kind::polygon: {
      std::vector<Point> verts;
      for (const Vec2& v : k.polygon_vertices()) verts.push_back(sim.apply({v.x, v.y}));
      return SourceSet::polygon(std::move(verts));
    }
    case SourceSet::Kind::finite: {
      std::vector<Point> pts;
      for (const Point& p : k.finite_points()) pts.push_back(sim.apply(p));
      return SourceSet::finite(std::move(pts));
    }
    case SourceSet::Kind::parametric:
    default: {
      SourceSet base = k;
      return SourceSet::parametric(
          [base, sim](double t) { return sim.apply(base.curve_point(t)); });
    }
  }
}

}  // namespace

AxiomReport verify_weak_distance(const SourceSet& k, const InfluenceField& field,
                                 const std::vector<Point>& points, double tol,
                                 const ExtremaOptions& opts) {
  if (!(tol > 0.0)) throw ValidationError("axiom tolerance must be positive");
  const int n = static_cast<int>(points.size());

  AxiomReport report;
  report.config = config_line(k, field, tol, opts);
  report.triangle_checked = n >= 3;

  // full ordered matrix: each direction computed independently so the
  // symmetry check is honest
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  std::vector<std::vector<bool>> deg(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const DistanceReport rep = barbilian_distance(k, field, points[i], points[j], opts);
      d[i][j] = rep.value;
      deg[i][j] = rep.degenerate;
    }

  auto note = [&](double dev) {
    report.max_deviation = std::max(report.max_deviation, dev);
  };

  for (int i = 0; i < n; ++i) {
    note(std::abs(d[i][i]));
    if (std::abs(d[i][i]) > tol)
      report.identity_failures.push_back({points[i], d[i][i]});
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double dev = std::abs(d[i][j] - d[j][i]);
      note(dev);
      if (dev > tol)
        report.symmetry_violations.push_back({points[i], points[j], dev});
      if (deg[i][j] && !same_point(points[i], points[j]))
        report.degeneracies_found.push_back({points[i], points[j], d[i][j]});
    }

  // every middle-point assignment of every unordered triple
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int l = j + 1; l < n; ++l) {
        const int tri[3][3] = {{i, j, l}, {j, i, l}, {i, l, j}};
        for (const auto& t : tri) {
          const double deficit = d[t[0]][t[2]] - d[t[0]][t[1]] - d[t[1]][t[2]];
          note(std::max(0.0, deficit));
          if (deficit > tol)
            report.triangle_violations.push_back(
                {points[t[0]], points[t[1]], points[t[2]], deficit});
        }
      }
  return report;
}

std::vector<DegeneratePair> verify_metric_upgrade(const SourceSet& k,
                                                  const InfluenceField& field,
                                                  const std::vector<Point>& points,
                                                  double tol,
                                                  const ExtremaOptions& opts) {
  if (!(tol > 0.0)) throw ValidationError("degeneracy tolerance must be positive");
  ExtremaOptions local = opts;
  local.degeneracy_tolerance = tol;
  std::vector<DegeneratePair> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (same_point(points[i], points[j])) continue;
      const DistanceReport rep =
          barbilian_distance(k, field, points[i], points[j], local);
      if (rep.degenerate) out.push_back({points[i], points[j], rep.value});
    }
  return out;
}

InvarianceSummary verify_invariances(const SourceSet& k, const InfluenceField& field,
                                     const std::vector<std::pair<Point, Point>>& pairs,
                                     int trials, std::uint64_t seed,
                                     const ExtremaOptions& opts) {
  if (trials < 1) throw ValidationError("verify_invariances: need trials >= 1");
  if (field.kind() != InfluenceKind::euclidean)
    throw ValidationError("similarity checks require the euclidean influence");
  if (k.dimension() != 2)
    throw ValidationError("similarity checks require a planar source set");

  InvarianceSummary out;
  out.trials = trials;
  out.config = config_line(k, field, 0.0, opts) + ";seed=" + std::to_string(seed);

  std::vector<double> base;
  base.reserve(pairs.size());
  for (const auto& [a, b] : pairs)
    base.push_back(barbilian_distance(k, field, a, b, opts).value);

  Rng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    // positive gauge depending on the source point only
    const double wx = rng.uniform(-3.0, 3.0);
    const double wy = rng.uniform(-3.0, 3.0);
    const double phase = rng.uniform(0.0, kTwoPi);
    const double amp = rng.uniform(0.25, 1.5);
    const InfluenceField base_field = field;
    const InfluenceField gauged =
        InfluenceField::custom([=](const Point& p, const Point& x) {
          const double lam = std::exp(amp * std::sin(wx * p[0] + wy * p[1] + phase));
          return lam * base_field.raw(p, x);
        });
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const double dv =
          barbilian_distance(k, gauged, pairs[i].first, pairs[i].second, opts).value;
      out.gauge_max_deviation =
          std::max(out.gauge_max_deviation, std::abs(dv - base[i]));
    }

    Similarity sim;
    const double theta = rng.uniform(0.0, kTwoPi);
    sim.c = std::cos(theta);
    sim.s = std::sin(theta);
    sim.scale = rng.uniform(0.4, 2.5);
    sim.shift = {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    const SourceSet moved = transform_set(k, sim);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const double dv = barbilian_distance(moved, field, sim.apply(pairs[i].first),
                                           sim.apply(pairs[i].second), opts)
                            .value;
      out.similarity_max_deviation =
          std::max(out.similarity_max_deviation, std::abs(dv - base[i]));
    }
  }
  return out;
}

std::vector<Point> random_interior_points(const SourceSet& k, int n, Rng& rng,
                                          double inset_fraction) {
  if (n < 0) throw ValidationError("random_interior_points: need n >= 0");
  if (k.dimension() != 2)
    throw ValidationError("random_interior_points: planar source sets only");
  const double inset = inset_fraction * k.diameter();
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(n));

  if (k.kind() == SourceSet::Kind::finite) {
    const Vec2 anchor = k.interior_anchor();
    const double radius = 0.5 * k.diameter();
    for (int i = 0; i < n; ++i) {
      for (int tries = 0; tries < 1000; ++tries) {
        const Vec2 c = rng.in_disk(anchor, radius);
        const Point p{c.x, c.y};
        if (k.distance_to(p) > inset) {
          out.push_back(p);
          break;
        }
      }
      if (out.size() != static_cast<std::size_t>(i) + 1)
        throw AdmissibilityError("could not place a point away from the sites");
    }
    return out;
  }

  const Vec2 anchor = k.interior_anchor();
  const double clearance = k.distance_to({anchor.x, anchor.y});
  double radius = clearance - inset;
  if (radius <= 0.0) radius = 0.5 * clearance;
  for (int i = 0; i < n; ++i) {
    const Vec2 c = rng.in_disk(anchor, radius);
    out.push_back({c.x, c.y});
  }
  return out;
}

}  // namespace barbilian
