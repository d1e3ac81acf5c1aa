#pragma once

#include <cstdint>
#include <vector>

#include "barbilian/metric.hpp"

namespace barbilian {

struct GeodesicPath {
  std::vector<Point> nodes;   // consecutive nodes are 8-neighbors in the grid
  double length = 0.0;        // sum of Barbilian distances of consecutive nodes
  int grid_resolution = 0;
};

// Shortest paths on an 8-connected lattice over K's interior region, with
// exact Barbilian edge weights. The lattice has resolution+1 nodes per side
// over K's bounding box, so doubling the resolution embeds the coarse nodes
// in the fine grid bit for bit. Nodes closer to K than 2% of its diameter
// are clipped. Edge weights are cached, so one solver serves many queries.
class GeodesicSolver {
public:
  GeodesicSolver(SourceSet k, InfluenceField field, int resolution,
                 ExtremaOptions opts = {});

  GeodesicPath solve(const Point& a, const Point& b);

  int resolution() const { return res_; }
  std::size_t admissible_count() const { return admissible_total_; }
  Point node_point(int ix, int iy) const;
  bool node_admissible(int ix, int iy) const;

private:
  int snap(const Point& p) const;
  double edge_weight(int from, int dir);

  SourceSet k_;
  InfluenceField field_;
  int res_;
  ExtremaOptions opts_;
  Vec2 lo_{}, hi_{};
  double margin_ = 0.0;
  int nx_ = 0;
  std::vector<char> admissible_;
  std::vector<double> weights_;  // 4 undirected edges per node, NaN = unset
  std::size_t admissible_total_ = 0;
};

GeodesicPath approximate_geodesic(const SourceSet& k, const InfluenceField& field,
                                  const Point& a, const Point& b, int resolution,
                                  const ExtremaOptions& opts = {});

}  // namespace barbilian
