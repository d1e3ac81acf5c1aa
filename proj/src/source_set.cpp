#include "barbilian/source_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace barbilian {

namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr int kParametricProbes = 1024;

double wrap01(double t) {
  t -= std::floor(t);
  if (t >= 1.0) t = 0.0;
  return t;
}

double bbox_diagonal(const std::vector<Point>& pts) {
  const std::size_t dim = pts.front().size();
  std::vector<double> lo(dim, std::numeric_limits<double>::infinity());
  std::vector<double> hi(dim, -std::numeric_limits<double>::infinity());
  for (const Point& p : pts)
    for (std::size_t i = 0; i < dim; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  double s = 0.0;
  for (std::size_t i = 0; i < dim; ++i) s += (hi[i] - lo[i]) * (hi[i] - lo[i]);
  return std::sqrt(s);
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return norm(p - a);
  double u = dot(p - a, ab) / len2;
  u = std::clamp(u, 0.0, 1.0);
  return norm(p - (a + u * ab));
}

// even-odd crossing test against a closed vertex loop
bool inside_loop(const std::vector<Vec2>& loop, Vec2 p) {
  bool inside = false;
  const std::size_t n = loop.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 vi = loop[i], vj = loop[j];
    if ((vi.y > p.y) != (vj.y > p.y)) {
      const double xcross = vj.x + (p.y - vj.y) / (vi.y - vj.y) * (vi.x - vj.x);
      if (p.x < xcross) inside = !inside;
    }
  }
  return inside;
}

}  // namespace

SourceSet SourceSet::finite(std::vector<Point> points) {
  if (points.empty()) throw ValidationError("finite source set: no points");
  for (const Point& p : points) check_point(p, "finite source set");
  const std::size_t dim = points.front().size();
  for (const Point& p : points)
    if (p.size() != dim)
      throw ValidationError("finite source set: mixed dimensions");

  // duplicate detection via lexicographic sort of indices
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return points[i] < points[j];
  });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (points[order[i - 1]] == points[order[i]])
      throw ValidationError("finite source set: duplicate point");

  SourceSet s;
  s.kind_ = Kind::finite;
  s.dim_ = dim;
  s.diameter_ = points.size() > 1 ? bbox_diagonal(points) : 0.0;
  if (s.diameter_ == 0.0) s.diameter_ = 1.0;  // single site: unit scale
  s.points_ = std::move(points);
  return s;
}

SourceSet SourceSet::circle(const Point& center, double radius) {
  check_point(center, "circle");
  if (center.size() != 2) throw ValidationError("circle: center must be planar");
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw ValidationError("circle: radius must be positive and finite");
  SourceSet s;
  s.kind_ = Kind::circle;
  s.dim_ = 2;
  s.center_ = to_vec2(center);
  s.radius_ = radius;
  s.diameter_ = 2.0 * radius;
  return s;
}

SourceSet SourceSet::polygon(std::vector<Point> vertices) {
  if (vertices.size() < 3) throw ValidationError("polygon: need >= 3 vertices");
  for (const Point& v : vertices) {
    check_point(v, "polygon");
    if (v.size() != 2) throw ValidationError("polygon: vertices must be planar");
  }
  SourceSet s;
  s.kind_ = Kind::polygon;
  s.dim_ = 2;
  s.verts_.reserve(vertices.size());
  for (const Point& v : vertices) s.verts_.push_back(to_vec2(v));

  const std::size_t n = s.verts_.size();
  s.cumlen_.assign(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 d = s.verts_[(i + 1) % n] - s.verts_[i];
    const double len = norm(d);
    if (len == 0.0)
      throw ValidationError("polygon: consecutive vertices coincide");
    s.cumlen_[i + 1] = s.cumlen_[i] + len;
  }
  s.perimeter_ = s.cumlen_.back();
  s.diameter_ = bbox_diagonal(vertices);
  return s;
}

SourceSet SourceSet::parametric(std::function<Point(double)> curve) {
  if (!curve) throw ValidationError("parametric source set: null evaluator");
  SourceSet s;
  s.kind_ = Kind::parametric;
  s.curve_ = std::move(curve);
  Point first = s.curve_(0.0);
  check_point(first, "parametric source set");
  s.dim_ = first.size();
  s.probe_.reserve(kParametricProbes);
  for (int i = 0; i < kParametricProbes; ++i) {
    Point p = s.curve_(static_cast<double>(i) / kParametricProbes);
    check_point(p, "parametric source set");
    if (p.size() != s.dim_)
      throw ValidationError("parametric source set: dimension changed along curve");
    s.probe_.push_back(std::move(p));
  }
  s.diameter_ = bbox_diagonal(s.probe_);
  if (s.diameter_ == 0.0)
    throw DegenerateCurve("parametric source set: curve collapses to a point");
  return s;
}

const std::vector<Point>& SourceSet::finite_points() const {
  if (kind_ != Kind::finite) throw ValidationError("not a finite source set");
  return points_;
}

Vec2 SourceSet::circle_center() const {
  if (kind_ != Kind::circle) throw ValidationError("not a circle");
  return center_;
}

double SourceSet::circle_radius() const {
  if (kind_ != Kind::circle) throw ValidationError("not a circle");
  return radius_;
}

const std::vector<Vec2>& SourceSet::polygon_vertices() const {
  if (kind_ != Kind::polygon) throw ValidationError("not a polygon");
  return verts_;
}

double SourceSet::polygon_perimeter() const {
  if (kind_ != Kind::polygon) throw ValidationError("not a polygon");
  return perimeter_;
}

Vec2 SourceSet::curve_point2(double t) const {
  t = wrap01(t);
  if (kind_ == Kind::circle) {
    const double th = kTwoPi * t;
    return {center_.x + radius_ * std::cos(th), center_.y + radius_ * std::sin(th)};
  }
  if (kind_ == Kind::polygon) {
    const double s = t * perimeter_;
    const std::size_t j =
        static_cast<std::size_t>(std::upper_bound(cumlen_.begin(), cumlen_.end(), s) -
                                 cumlen_.begin()) - 1;
    const std::size_t jj = std::min(j, verts_.size() - 1);
    const double u = (s - cumlen_[jj]) / (cumlen_[jj + 1] - cumlen_[jj]);
    const Vec2 a = verts_[jj];
    const Vec2 b = verts_[(jj + 1) % verts_.size()];
    return a + u * (b - a);
  }
  throw ValidationError("curve_point2: not a planar curve variant");
}

Point SourceSet::curve_point(double t) const {
  switch (kind_) {
    case Kind::circle:
    case Kind::polygon:
      return to_point(curve_point2(t));
    case Kind::parametric:
      return curve_(wrap01(t));
    case Kind::finite:
    default:
      throw ValidationError("curve_point: finite source sets are not curves");
  }
}

double SourceSet::distance_to(const Point& x) const {
  check_point(x, "query point");
  switch (kind_) {
    case Kind::finite: {
      double best = std::numeric_limits<double>::infinity();
      for (const Point& p : points_) best = std::min(best, distance(p, x));
      return best;
    }
    case Kind::circle: {
      if (x.size() != 2) throw ValidationError("query point dimension mismatch");
      return std::abs(norm(to_vec2(x) - center_) - radius_);
    }
    case Kind::polygon: {
      if (x.size() != 2) throw ValidationError("query point dimension mismatch");
      const Vec2 p = to_vec2(x);
      double best = std::numeric_limits<double>::infinity();
      const std::size_t n = verts_.size();
      for (std::size_t i = 0; i < n; ++i)
        best = std::min(best, point_segment_distance(p, verts_[i], verts_[(i + 1) % n]));
      return best;
    }
    case Kind::parametric:
    default: {
      if (x.size() != dim_) throw ValidationError("query point dimension mismatch");
      // coarse scan over the cached probes, then golden refinement of the
      // best bracket
      double best = std::numeric_limits<double>::infinity();
      int best_i = 0;
      for (int i = 0; i < static_cast<int>(probe_.size()); ++i) {
        const double d = distance(probe_[i], x);
        if (d < best) { best = d; best_i = i; }
      }
      const double n = static_cast<double>(probe_.size());
      double a = (best_i - 1) / n, b = (best_i + 1) / n;
      constexpr double kInvPhi = 0.6180339887498949;
      double x1 = b - (b - a) * kInvPhi, x2 = a + (b - a) * kInvPhi;
      double f1 = distance(curve_(wrap01(x1)), x);
      double f2 = distance(curve_(wrap01(x2)), x);
      for (int it = 0; it < 120 && (b - a) > 1e-12; ++it) {
        if (f1 <= f2) {
          b = x2; x2 = x1; f2 = f1;
          x1 = b - (b - a) * kInvPhi;
          f1 = distance(curve_(wrap01(x1)), x);
        } else {
          a = x1; x1 = x2; f1 = f2;
          x2 = a + (b - a) * kInvPhi;
          f2 = distance(curve_(wrap01(x2)), x);
        }
        best = std::min(best, std::min(f1, f2));
      }
      return best;
    }
  }
}

bool SourceSet::interior_contains(const Point& x) const {
  check_point(x, "query point");
  if (x.size() != 2 || dim_ != 2)
    throw ValidationError("interior test: planar domains only");
  const Vec2 p = to_vec2(x);
  switch (kind_) {
    case Kind::circle:
      return norm(p - center_) < radius_;
    case Kind::polygon:
      return inside_loop(verts_, p);
    case Kind::parametric: {
      std::vector<Vec2> loop;
      loop.reserve(probe_.size());
      for (const Point& q : probe_) loop.push_back(to_vec2(q));
      return inside_loop(loop, p);
    }
    case Kind::finite:
    default:
      throw ValidationError("interior test: finite source sets have no interior");
  }
}

Vec2 SourceSet::interior_anchor() const {
  switch (kind_) {
    case Kind::circle:
      return center_;
    case Kind::polygon: {
      Vec2 c{};
      for (const Vec2& v : verts_) c = c + v;
      c = (1.0 / static_cast<double>(verts_.size())) * c;
      if (!inside_loop(verts_, c))
        throw ValidationError("polygon has no usable interior anchor");
      return c;
    }
    case Kind::parametric: {
      Vec2 c{};
      for (const Point& q : probe_) c = c + to_vec2(q);
      c = (1.0 / static_cast<double>(probe_.size())) * c;
      if (!interior_contains(to_point(c)))
        throw ValidationError("curve has no usable interior anchor");
      return c;
    }
    case Kind::finite:
    default: {
      Vec2 c{};
      for (const Point& q : points_) c = c + Vec2{q[0], q[1]};
      return (1.0 / static_cast<double>(points_.size())) * c;
    }
  }
}

std::pair<Vec2, Vec2> SourceSet::bounding_box() const {
  switch (kind_) {
    case Kind::circle:
      return {{center_.x - radius_, center_.y - radius_},
              {center_.x + radius_, center_.y + radius_}};
    case Kind::polygon: {
      Vec2 lo{verts_[0]}, hi{verts_[0]};
      for (const Vec2& v : verts_) {
        lo.x = std::min(lo.x, v.x); lo.y = std::min(lo.y, v.y);
        hi.x = std::max(hi.x, v.x); hi.y = std::max(hi.y, v.y);
      }
      return {lo, hi};
    }
    case Kind::parametric:
    case Kind::finite:
    default: {
      const std::vector<Point>& pts = kind_ == Kind::finite ? points_ : probe_;
      Vec2 lo{pts[0][0], pts[0][1]}, hi = lo;
      for (const Point& p : pts) {
        lo.x = std::min(lo.x, p[0]); lo.y = std::min(lo.y, p[1]);
        hi.x = std::max(hi.x, p[0]); hi.y = std::max(hi.y, p[1]);
      }
      return {lo, hi};
    }
  }
}

std::string SourceSet::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::finite:
      os << "finite(" << points_.size() << " points)";
      break;
    case Kind::circle:
      os << "circle(center=(" << center_.x << "," << center_.y
         << "),radius=" << radius_ << ")";
      break;
    case Kind::polygon:
      os << "polygon(" << verts_.size() << " vertices)";
      break;
    case Kind::parametric:
      os << "parametric(dim=" << dim_ << ")";
      break;
  }
  return os.str();
}

}  // namespace barbilian
