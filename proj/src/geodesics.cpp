#include "barbilian/geodesics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <utility>

namespace barbilian {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// undirected edges are stored once per node: E, N, NE, NW
constexpr int kDirDx[4] = {1, 0, 1, -1};
constexpr int kDirDy[4] = {0, 1, 1, 1};

}  // namespace

GeodesicSolver::GeodesicSolver(SourceSet k, InfluenceField field, int resolution,
                               ExtremaOptions opts)
    : k_(std::move(k)), field_(std::move(field)), res_(resolution), opts_(opts) {
  if (res_ < 16) throw ValidationError("geodesic grid resolution must be >= 16");
  if (!k_.is_curve() || k_.dimension() != 2)
    throw ValidationError("geodesics need a closed planar curve domain");

  const auto [lo, hi] = k_.bounding_box();
  lo_ = lo;
  hi_ = hi;
  margin_ = 0.02 * k_.diameter();
  nx_ = res_ + 1;

  const std::size_t total = static_cast<std::size_t>(nx_) * nx_;
  admissible_.assign(total, 0);
  for (int iy = 0; iy < nx_; ++iy)
    for (int ix = 0; ix < nx_; ++ix) {
      const Point p = node_point(ix, iy);
      const bool ok = k_.interior_contains(p) && k_.distance_to(p) > margin_;
      admissible_[static_cast<std::size_t>(iy) * nx_ + ix] = ok ? 1 : 0;
      if (ok) ++admissible_total_;
    }
  weights_.assign(total * 4, std::numeric_limits<double>::quiet_NaN());
}

Point GeodesicSolver::node_point(int ix, int iy) const {
  return {lo_.x + ((hi_.x - lo_.x) * ix) / res_,
          lo_.y + ((hi_.y - lo_.y) * iy) / res_};
}

bool GeodesicSolver::node_admissible(int ix, int iy) const {
  if (ix < 0 || iy < 0 || ix >= nx_ || iy >= nx_) return false;
  return admissible_[static_cast<std::size_t>(iy) * nx_ + ix] != 0;
}

int GeodesicSolver::snap(const Point& p) const {
  double best = kInf;
  int best_id = -1;
  for (int iy = 0; iy < nx_; ++iy)
    for (int ix = 0; ix < nx_; ++ix) {
      const int id = iy * nx_ + ix;
      if (!admissible_[static_cast<std::size_t>(id)]) continue;
      const Point q = node_point(ix, iy);
      const double dx = q[0] - p[0], dy = q[1] - p[1];
      const double d2 = dx * dx + dy * dy;
      if (d2 < best) {
        best = d2;
        best_id = id;
      }
    }
  return best_id;
}

double GeodesicSolver::edge_weight(int from, int dir) {
  const std::size_t slot = static_cast<std::size_t>(from) * 4 + dir;
  double w = weights_[slot];
  if (std::isnan(w)) {
    const int ix = from % nx_, iy = from / nx_;
    const Point pa = node_point(ix, iy);
    const Point pb = node_point(ix + kDirDx[dir], iy + kDirDy[dir]);
    w = barbilian_distance(k_, field_, pa, pb, opts_).value;
    weights_[slot] = w;
  }
  return w;
}

GeodesicPath GeodesicSolver::solve(const Point& a, const Point& b) {
  check_point(a, "geodesic endpoint A");
  check_point(b, "geodesic endpoint B");
  if (a.size() != 2 || b.size() != 2)
    throw ValidationError("geodesic endpoints must be planar");
  if (!k_.interior_contains(a))
    throw Unreachable("endpoint A is outside the interior region of K");
  if (!k_.interior_contains(b))
    throw Unreachable("endpoint B is outside the interior region of K");

  const int src = snap(a);
  const int dst = snap(b);
  if (src < 0 || dst < 0)
    throw Unreachable("no admissible grid node near an endpoint");

  GeodesicPath path;
  path.grid_resolution = res_;
  if (src == dst) {
    path.nodes.push_back(node_point(src % nx_, src / nx_));
    path.length = 0.0;
    return path;
  }

  const std::size_t total = static_cast<std::size_t>(nx_) * nx_;
  std::vector<double> dist(total, kInf);
  std::vector<int> parent(total, -1);
  std::vector<char> done(total, 0);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
  dist[static_cast<std::size_t>(src)] = 0.0;
  queue.push({0.0, src});

  while (!queue.empty()) {
    const auto [du, u] = queue.top();
    queue.pop();
    if (done[static_cast<std::size_t>(u)]) continue;
    done[static_cast<std::size_t>(u)] = 1;
    if (u == dst) break;
    const int ux = u % nx_, uy = u / nx_;
    for (int dy = -1; dy <= 1; ++dy)
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0) continue;
        const int vx = ux + dx, vy = uy + dy;
        if (!node_admissible(vx, vy)) continue;
        const int v = vy * nx_ + vx;
        if (done[static_cast<std::size_t>(v)]) continue;
        // canonical storage slot of the undirected edge
        double w;
        if (dy > 0 || (dy == 0 && dx > 0)) {
          const int dir = dy == 0 ? 0 : (dx == 0 ? 1 : (dx > 0 ? 2 : 3));
          w = edge_weight(u, dir);
        } else {
          const int dir = dy == 0 ? 0 : (dx == 0 ? 1 : (dx < 0 ? 2 : 3));
          w = edge_weight(v, dir);
        }
        const double cand = du + w;
        if (cand < dist[static_cast<std::size_t>(v)]) {
          dist[static_cast<std::size_t>(v)] = cand;
          parent[static_cast<std::size_t>(v)] = u;
          queue.push({cand, v});
        }
      }
  }

  if (dist[static_cast<std::size_t>(dst)] == kInf)
    throw Unreachable("no admissible grid path between the endpoints");

  std::vector<int> ids;
  for (int v = dst; v != -1; v = parent[static_cast<std::size_t>(v)]) ids.push_back(v);
  std::reverse(ids.begin(), ids.end());
  path.nodes.reserve(ids.size());
  for (const int id : ids) path.nodes.push_back(node_point(id % nx_, id / nx_));
  path.length = dist[static_cast<std::size_t>(dst)];
  return path;
}

GeodesicPath approximate_geodesic(const SourceSet& k, const InfluenceField& field,
                                  const Point& a, const Point& b, int resolution,
                                  const ExtremaOptions& opts) {
  GeodesicSolver solver(k, field, resolution, opts);
  return solver.solve(a, b);
}

}  // namespace barbilian
