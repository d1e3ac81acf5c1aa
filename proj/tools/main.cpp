// Command-line front end: Barbilian/Apollonian distances, distance fields,
// axiom reports, Poincare-disk comparisons, Apollonius demonstrations and
// grid geodesics, with byte-stable text output.
//
// Exit codes: 0 success, 1 tolerance failure, 2 input validation,
// 3 admissibility.

#include <clocale>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "barbilian/axioms.hpp"
#include "barbilian/domains.hpp"
#include "barbilian/geodesics.hpp"
#include "barbilian/metric.hpp"
#include "barbilian/models.hpp"
#include "barbilian/rng.hpp"

using json = nlohmann::ordered_json;
using namespace barbilian;

namespace {

std::string fmt_fixed(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", v);
  return buf;
}

std::string fmt_g(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string fmt_sci(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

Point parse_xy(const std::string& text, const std::string& flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw ValidationError(flag + ": expected \"x,y\", got \"" + text + "\"");
  const std::string xs = text.substr(0, comma);
  const std::string ys = text.substr(comma + 1);
  std::size_t used = 0;
  double x = 0, y = 0;
  try {
    x = std::stod(xs, &used);
    if (used != xs.size()) throw std::invalid_argument(xs);
    y = std::stod(ys, &used);
    if (used != ys.size()) throw std::invalid_argument(ys);
  } catch (const std::exception&) {
    throw ValidationError(flag + ": could not parse \"" + text + "\" as x,y");
  }
  if (!std::isfinite(x) || !std::isfinite(y))
    throw ValidationError(flag + ": coordinates must be finite");
  return {x, y};
}

double require_number(const json& j, const std::string& field) {
  if (!j.is_number())
    throw ValidationError("domain spec: \"" + field + "\" must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v))
    throw ValidationError("domain spec: \"" + field + "\" must be finite");
  return v;
}

Point require_pair(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2)
    throw ValidationError("domain spec: \"" + field + "\" must be [x, y]");
  return {require_number(j[0], field + "[0]"), require_number(j[1], field + "[1]")};
}

void require_exact_keys(const json& j, std::initializer_list<const char*> keys) {
  for (const char* k : keys)
    if (!j.contains(k))
      throw ValidationError(std::string("domain spec: missing field \"") + k + "\"");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : keys)
      if (item.key() == k) known = true;
    if (!known)
      throw ValidationError("domain spec: unexpected field \"" + item.key() + "\"");
  }
}

SourceSet domain_from_json(const json& spec) {
  if (!spec.is_object()) throw ValidationError("domain spec: expected an object");
  if (!spec.contains("type") || !spec["type"].is_string())
    throw ValidationError("domain spec: missing string field \"type\"");
  const std::string type = spec["type"].get<std::string>();
  if (type == "circle") {
    require_exact_keys(spec, {"type", "center", "radius"});
    const Point center = require_pair(spec["center"], "center");
    const double radius = require_number(spec["radius"], "radius");
    if (!(radius > 0.0))
      throw ValidationError("domain spec: \"radius\" must be positive");
    return SourceSet::circle(center, radius);
  }
  if (type == "polygon") {
    require_exact_keys(spec, {"type", "vertices"});
    const json& verts = spec["vertices"];
    if (!verts.is_array() || verts.size() < 3)
      throw ValidationError("domain spec: \"vertices\" must list >= 3 points");
    std::vector<Point> vs;
    for (std::size_t i = 0; i < verts.size(); ++i)
      vs.push_back(require_pair(verts[i], "vertices[" + std::to_string(i) + "]"));
    return SourceSet::polygon(std::move(vs));
  }
  if (type == "points") {
    require_exact_keys(spec, {"type", "sites"});
    const json& sites = spec["sites"];
    if (!sites.is_array() || sites.empty())
      throw ValidationError("domain spec: \"sites\" must list >= 1 point");
    std::vector<Point> ps;
    for (std::size_t i = 0; i < sites.size(); ++i)
      ps.push_back(require_pair(sites[i], "sites[" + std::to_string(i) + "]"));
    return SourceSet::finite(std::move(ps));
  }
  throw ValidationError("domain spec: unknown type \"" + type +
                        "\" (expected circle, polygon or points)");
}

SourceSet load_domain(const std::string& arg) {
  std::string text;
  if (!arg.empty() && arg.front() == '{') {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw ValidationError("cannot open domain file \"" + arg + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json spec;
  try {
    spec = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("domain spec: ") + e.what());
  }
  return domain_from_json(spec);
}

json point_json(const Point& p) {
  json a = json::array();
  for (double c : p) a.push_back(c);
  return a;
}

json report_json(const DistanceReport& rep) {
  json j;
  j["value"] = rep.value;
  j["degenerate"] = rep.degenerate;
  j["extrema"] = {{"max", rep.extrema.max_ratio}, {"min", rep.extrema.min_ratio}};
  j["witnesses"] = {{"argmax", point_json(rep.extrema.argmax)},
                    {"argmin", point_json(rep.extrema.argmin)}};
  j["samples_used"] = rep.samples_used;
  j["refinement_converged"] = rep.refinement_converged;
  return j;
}

bool cell_admissible(const SourceSet& k, const Point& p, double floor_geo) {
  if (k.kind() == SourceSet::Kind::finite) return k.distance_to(p) > floor_geo;
  return k.interior_contains(p) && k.distance_to(p) > floor_geo;
}

// ----- SVG helpers -------------------------------------------------------

struct SvgMapper {
  double xmin, ymin, xmax, ymax;
  double size = 640.0, pad = 20.0;
  double sx(double x) const {
    return pad + (x - xmin) / (xmax - xmin) * (size - 2 * pad);
  }
  double sy(double y) const {
    return size - pad - (y - ymin) / (ymax - ymin) * (size - 2 * pad);
  }
};

std::string svg_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

void svg_open(std::ostream& os, const SvgMapper& m) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (int)m.size
     << "\" height=\"" << (int)m.size << "\" viewBox=\"0 0 " << (int)m.size << " "
     << (int)m.size << "\">\n";
}

void svg_domain(std::ostream& os, const SourceSet& k, const SvgMapper& m) {
  os << "<g stroke=\"black\" fill=\"none\" stroke-width=\"1.5\">\n";
  if (k.kind() == SourceSet::Kind::circle) {
    const Vec2 c = k.circle_center();
    const double r = k.circle_radius();
    os << "<circle cx=\"" << svg_coord(m.sx(c.x)) << "\" cy=\"" << svg_coord(m.sy(c.y))
       << "\" r=\"" << svg_coord(r / (m.xmax - m.xmin) * (m.size - 2 * m.pad))
       << "\"/>\n";
  } else if (k.kind() == SourceSet::Kind::finite) {
    for (const Point& p : k.finite_points())
      os << "<circle cx=\"" << svg_coord(m.sx(p[0])) << "\" cy=\""
         << svg_coord(m.sy(p[1])) << "\" r=\"3\" fill=\"black\"/>\n";
  } else {
    os << "<polyline points=\"";
    const int n = 256;
    for (int i = 0; i <= n; ++i) {
      const Point p = k.curve_point(static_cast<double>(i % n) / n);
      os << svg_coord(m.sx(p[0])) << "," << svg_coord(m.sy(p[1]));
      if (i != n) os << " ";
    }
    os << "\"/>\n";
  }
  os << "</g>\n";
}

// marching squares over the sampled field; cells touching missing values
// are skipped
void svg_isolines(std::ostream& os, const std::vector<std::vector<double>>& val,
                  const std::vector<std::vector<char>>& ok,
                  const std::vector<double>& xs, const std::vector<double>& ys,
                  int levels, const SvgMapper& m) {
  double vmin = 0, vmax = 0;
  bool any = false;
  for (std::size_t j = 0; j < val.size(); ++j)
    for (std::size_t i = 0; i < val[j].size(); ++i)
      if (ok[j][i]) {
        if (!any) { vmin = vmax = val[j][i]; any = true; }
        vmin = std::min(vmin, val[j][i]);
        vmax = std::max(vmax, val[j][i]);
      }
  if (!any || vmax <= vmin) return;

  os << "<g stroke=\"#1f77b4\" fill=\"none\" stroke-width=\"1\">\n";
  const int n = static_cast<int>(xs.size());
  for (int lev = 1; lev <= levels; ++lev) {
    const double c = vmin + (vmax - vmin) * lev / (levels + 1);
    for (int j = 0; j + 1 < n; ++j)
      for (int i = 0; i + 1 < n; ++i) {
        if (!ok[j][i] || !ok[j][i + 1] || !ok[j + 1][i] || !ok[j + 1][i + 1]) continue;
        const double v00 = val[j][i], v10 = val[j][i + 1];
        const double v01 = val[j + 1][i], v11 = val[j + 1][i + 1];
        struct Pt { double x, y; };
        Pt pts[4];
        int np = 0;
        auto edge = [&](double va, double vb, double xa, double ya, double xb,
                        double yb) {
          if ((va < c) == (vb < c)) return;
          const double u = (c - va) / (vb - va);
          pts[np++] = {xa + u * (xb - xa), ya + u * (yb - ya)};
        };
        edge(v00, v10, xs[i], ys[j], xs[i + 1], ys[j]);
        edge(v10, v11, xs[i + 1], ys[j], xs[i + 1], ys[j + 1]);
        edge(v01, v11, xs[i], ys[j + 1], xs[i + 1], ys[j + 1]);
        edge(v00, v01, xs[i], ys[j], xs[i], ys[j + 1]);
        if (np >= 2)
          os << "<line x1=\"" << svg_coord(m.sx(pts[0].x)) << "\" y1=\""
             << svg_coord(m.sy(pts[0].y)) << "\" x2=\"" << svg_coord(m.sx(pts[1].x))
             << "\" y2=\"" << svg_coord(m.sy(pts[1].y)) << "\"/>\n";
      }
  }
  os << "</g>\n";
}

// ----- commands ----------------------------------------------------------

struct CommonOpts {
  int samples = 256;
  double ptol = 1e-10;
  ExtremaOptions extrema() const {
    ExtremaOptions o;
    o.initial_samples = samples;
    o.parameter_tolerance = ptol;
    return o;
  }
};

int cmd_dist(const std::string& domain, const std::string& a_text,
             const std::string& b_text, const CommonOpts& common, bool as_json) {
  const SourceSet k = load_domain(domain);
  const Point a = parse_xy(a_text, "--a");
  const Point b = parse_xy(b_text, "--b");
  const DistanceReport rep =
      barbilian_distance(k, InfluenceField::euclidean(), a, b, common.extrema());
  if (as_json) {
    std::cout << report_json(rep).dump(2) << "\n";
    return 0;
  }
  std::cout << fmt_fixed(rep.value) << "\n";
  std::cout << "degenerate: " << (rep.degenerate ? "true" : "false") << "\n";
  std::cout << "witness max: ratio=" << fmt_g(rep.extrema.max_ratio) << " at ("
            << fmt_g(rep.extrema.argmax[0]) << "," << fmt_g(rep.extrema.argmax[1])
            << ")\n";
  std::cout << "witness min: ratio=" << fmt_g(rep.extrema.min_ratio) << " at ("
            << fmt_g(rep.extrema.argmin[0]) << "," << fmt_g(rep.extrema.argmin[1])
            << ")\n";
  std::cout << "samples used: " << rep.samples_used << "\n";
  return 0;
}

int cmd_field(const std::string& domain, int grid, const std::string& ref_text,
              const std::string& out_path, const std::string& svg_path,
              int isolines, const CommonOpts& common) {
  const SourceSet k = load_domain(domain);
  const Point ref = parse_xy(ref_text, "--ref");
  const ExtremaOptions opts = common.extrema();
  const double floor_geo = 1e-9 * k.diameter();
  if (!cell_admissible(k, ref, floor_geo))
    throw QueryTouchesSource("reference point is not admissible for this domain");

  auto [lo, hi] = k.bounding_box();
  if (k.kind() == SourceSet::Kind::finite) {
    // site boxes can be degenerate; open a window around them
    const double pad = 0.25 * k.diameter();
    lo.x -= pad; lo.y -= pad;
    hi.x += pad; hi.y += pad;
  }
  std::vector<double> xs(grid), ys(grid);
  for (int i = 0; i < grid; ++i) {
    xs[i] = lo.x + (hi.x - lo.x) * (i + 0.5) / grid;
    ys[i] = lo.y + (hi.y - lo.y) * (i + 0.5) / grid;
  }

  std::vector<std::vector<double>> val(grid, std::vector<double>(grid, 0.0));
  std::vector<std::vector<char>> ok(grid, std::vector<char>(grid, 0));
  const InfluenceField euclid = InfluenceField::euclidean();
  std::ostringstream csv;
  csv << "x,y,d\n";
  for (int j = 0; j < grid; ++j)
    for (int i = 0; i < grid; ++i) {
      const Point cell{xs[i], ys[j]};
      csv << fmt_g(xs[i]) << "," << fmt_g(ys[j]) << ",";
      if (cell_admissible(k, cell, floor_geo)) {
        const double d = barbilian_distance(k, euclid, ref, cell, opts).value;
        val[j][i] = d;
        ok[j][i] = 1;
        csv << fmt_fixed(d);
      }
      csv << "\n";
    }

  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ValidationError("cannot write \"" + out_path + "\"");
  out << csv.str();
  out.close();

  if (!svg_path.empty()) {
    SvgMapper m{lo.x, lo.y, hi.x, hi.y};
    std::ofstream svg(svg_path, std::ios::binary);
    if (!svg) throw ValidationError("cannot write \"" + svg_path + "\"");
    svg_open(svg, m);
    svg_domain(svg, k, m);
    svg_isolines(svg, val, ok, xs, ys, isolines, m);
    svg << "</svg>\n";
  }
  std::cout << "wrote " << out_path << " (" << grid << "x" << grid << " cells)\n";
  return 0;
}

json axiom_report_json(const AxiomReport& report,
                       const std::vector<DegeneratePair>& upgrade,
                       bool enough_points) {
  json j;
  j["config"] = report.config;
  j["symmetry_violations"] = json::array();
  for (const auto& v : report.symmetry_violations)
    j["symmetry_violations"].push_back(
        {{"a", point_json(v.a)}, {"b", point_json(v.b)}, {"deviation", v.deviation}});
  j["identity_failures"] = json::array();
  for (const auto& v : report.identity_failures)
    j["identity_failures"].push_back({{"a", point_json(v.a)}, {"value", v.value}});
  j["triangle_violations"] = json::array();
  for (const auto& v : report.triangle_violations)
    j["triangle_violations"].push_back({{"a", point_json(v.a)},
                                        {"b", point_json(v.b)},
                                        {"c", point_json(v.c)},
                                        {"deficit", v.deficit}});
  j["degeneracies"] = json::array();
  for (const auto& v : upgrade)
    j["degeneracies"].push_back(
        {{"a", point_json(v.a)}, {"b", point_json(v.b)}, {"value", v.value}});
  j["max_deviation"] = report.max_deviation;
  j["triangle_checked"] = enough_points;
  j["pass"] = report.pass();
  return j;
}

int cmd_axioms(const std::string& domain, int npoints, std::uint64_t seed,
               double tol, const std::string& probe_file, bool as_json,
               const CommonOpts& common) {
  const SourceSet k = load_domain(domain);
  const ExtremaOptions opts = common.extrema();

  std::vector<Point> points;
  if (!probe_file.empty()) {
    std::ifstream in(probe_file);
    if (!in) throw ValidationError("cannot open probe file \"" + probe_file + "\"");
    json j;
    try {
      in >> j;
    } catch (const nlohmann::json::parse_error& e) {
      throw ValidationError(std::string("probe file: ") + e.what());
    }
    if (!j.is_array()) throw ValidationError("probe file: expected [[x,y],...]");
    for (std::size_t i = 0; i < j.size(); ++i)
      points.push_back(require_pair(j[i], "probe[" + std::to_string(i) + "]"));
  } else {
    Rng rng(seed);
    points = random_interior_points(k, npoints, rng);
  }

  const AxiomReport report =
      verify_weak_distance(k, InfluenceField::euclidean(), points, tol, opts);
  const std::vector<DegeneratePair> upgrade = verify_metric_upgrade(
      k, InfluenceField::euclidean(), points, opts.degeneracy_tolerance, opts);

  if (as_json) {
    std::cout << axiom_report_json(report, upgrade, report.triangle_checked).dump(2)
              << "\n";
  } else {
    std::cout << "config: " << report.config << "\n";
    std::cout << "points: " << points.size() << "\n";
    std::cout << "symmetry violations: " << report.symmetry_violations.size() << "\n";
    std::cout << "identity failures: " << report.identity_failures.size() << "\n";
    if (report.triangle_checked)
      std::cout << "triangle violations: " << report.triangle_violations.size()
                << "\n";
    else
      std::cout << "triangle check: insufficient points (need >= 3)\n";
    std::cout << "degenerate pairs: " << upgrade.size() << "\n";
    std::cout << "max deviation: " << fmt_sci(report.max_deviation) << "\n";
    std::cout << (report.pass() ? "PASS" : "FAIL") << "\n";
  }
  return report.pass() ? 0 : 1;
}

int cmd_compare_hyperbolic(int npairs, std::uint64_t seed, double tol,
                           const CommonOpts& common) {
  Rng rng(seed);
  std::vector<std::pair<Point, Point>> pairs;
  pairs.reserve(static_cast<std::size_t>(npairs));
  for (int i = 0; i < npairs; ++i) {
    const Vec2 a = rng.in_disk({0.0, 0.0}, 0.95);
    const Vec2 b = rng.in_disk({0.0, 0.0}, 0.95);
    pairs.push_back({{a.x, a.y}, {b.x, b.y}});
  }
  const auto rows = compare_disk(pairs, common.extrema());
  double maxdev = 0.0, sum = 0.0;
  for (const auto& r : rows) {
    maxdev = std::max(maxdev, r.abs_diff);
    sum += r.abs_diff;
  }
  const double mean = rows.empty() ? 0.0 : sum / static_cast<double>(rows.size());
  std::cout << "pairs: " << npairs << " (seed " << seed << ")\n";
  std::cout << "max deviation: " << fmt_sci(maxdev) << "\n";
  std::cout << "mean deviation: " << fmt_sci(mean) << "\n";
  const bool pass = maxdev <= tol;
  std::cout << (pass ? "PASS" : "FAIL") << " (tolerance " << fmt_sci(tol) << ")\n";
  return pass ? 0 : 1;
}

int cmd_apollonius(const std::string& a_text, const std::string& b_text,
                   double alpha, int probe, const CommonOpts& common) {
  const Point a = parse_xy(a_text, "--a");
  const Point b = parse_xy(b_text, "--b");
  const Circle circle = apollonius_circle(a, b, alpha);
  const SourceSet k = SourceSet::circle(circle.center, circle.radius);

  double worst = 0.0;
  for (int i = 0; i < probe; ++i) {
    const Point p = k.curve_point(static_cast<double>(i) / probe);
    const double ratio = distance(p, a) / distance(p, b);
    worst = std::max(worst, std::abs(ratio - alpha) / alpha);
  }

  const DistanceReport rep =
      barbilian_distance(k, InfluenceField::euclidean(), a, b, common.extrema());
  std::cout << "apollonius circle: center=(" << fmt_g(circle.center[0]) << ","
            << fmt_g(circle.center[1]) << ") radius=" << fmt_g(circle.radius) << "\n";
  std::cout << "probe: " << probe << " samples, max relative ratio error "
            << fmt_sci(worst) << "\n";
  std::cout << "d(A,B) = " << fmt_fixed(rep.value) << "\n";
  std::cout << "degenerate: " << (rep.degenerate ? "true" : "false")
            << " (alpha = " << fmt_g(alpha) << ")\n";
  return 0;
}

int cmd_geodesic(const std::string& domain, const std::string& a_text,
                 const std::string& b_text, int grid, const std::string& out_path,
                 const std::string& svg_path, bool as_json,
                 const CommonOpts& common) {
  const SourceSet k = load_domain(domain);
  const Point a = parse_xy(a_text, "--a");
  const Point b = parse_xy(b_text, "--b");
  const GeodesicPath path =
      approximate_geodesic(k, InfluenceField::euclidean(), a, b, grid,
                           common.extrema());

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ValidationError("cannot write \"" + out_path + "\"");
    out << "x,y\n";
    for (const Point& p : path.nodes)
      out << fmt_g(p[0]) << "," << fmt_g(p[1]) << "\n";
  }
  if (!svg_path.empty()) {
    const auto [lo, hi] = k.bounding_box();
    SvgMapper m{lo.x, lo.y, hi.x, hi.y};
    std::ofstream svg(svg_path, std::ios::binary);
    if (!svg) throw ValidationError("cannot write \"" + svg_path + "\"");
    svg_open(svg, m);
    svg_domain(svg, k, m);
    svg << "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < path.nodes.size(); ++i) {
      svg << svg_coord(m.sx(path.nodes[i][0])) << ","
          << svg_coord(m.sy(path.nodes[i][1]));
      if (i + 1 != path.nodes.size()) svg << " ";
    }
    svg << "\"/>\n</svg>\n";
  }

  if (as_json) {
    json j;
    j["length"] = path.length;
    j["grid_resolution"] = path.grid_resolution;
    j["nodes"] = json::array();
    for (const Point& p : path.nodes) j["nodes"].push_back(point_json(p));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "path length = " << fmt_fixed(path.length) << "\n";
    std::cout << "nodes: " << path.nodes.size() << " (grid " << grid << ")\n";
    if (!out_path.empty()) std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_NUMERIC, "C");
  CLI::App app{"Barbilian/Apollonian metric toolkit"};
  app.require_subcommand(1);

  CommonOpts common;

  // dist
  auto* dist = app.add_subcommand("dist", "distance between two points");
  std::string dist_domain, dist_a, dist_b;
  bool dist_json = false;
  dist->add_option("--domain", dist_domain, "domain spec (inline JSON or file)")
      ->required();
  dist->add_option("--a", dist_a, "first point x,y")->required();
  dist->add_option("--b", dist_b, "second point x,y")->required();
  dist->add_option("--samples", common.samples, "initial curve samples");
  dist->add_option("--tol", common.ptol, "parameter tolerance");
  dist->add_flag("--json", dist_json, "structured report");

  // field
  auto* field = app.add_subcommand("field", "distance field CSV (and SVG isolines)");
  std::string field_domain, field_ref, field_out, field_svg;
  int field_grid = 64, field_isolines = 9;
  field->add_option("--domain", field_domain, "domain spec")->required();
  field->add_option("--grid", field_grid, "grid cells per side")->required();
  field->add_option("--ref", field_ref, "reference point x,y")->required();
  field->add_option("--out", field_out, "output CSV path")->required();
  field->add_option("--svg", field_svg, "optional isoline SVG path");
  field->add_option("--isolines", field_isolines, "number of isolines");
  field->add_option("--samples", common.samples, "initial curve samples");
  field->add_option("--tol", common.ptol, "parameter tolerance");

  // axioms
  auto* axioms = app.add_subcommand("axioms", "verify the weak-distance axioms");
  std::string ax_domain, ax_probe;
  int ax_points = 30;
  std::uint64_t ax_seed = 0;
  double ax_tol = 1e-9;
  bool ax_json = false;
  axioms->add_option("--domain", ax_domain, "domain spec")->required();
  axioms->add_option("--points", ax_points, "number of random interior points");
  axioms->add_option("--seed", ax_seed, "random seed");
  axioms->add_option("--tol", ax_tol, "violation tolerance");
  axioms->add_option("--probe-file", ax_probe, "explicit points file [[x,y],...]");
  axioms->add_flag("--json", ax_json, "structured report");
  axioms->add_option("--samples", common.samples, "initial curve samples");

  // compare-hyperbolic
  auto* cmp = app.add_subcommand("compare-hyperbolic",
                                 "unit-disk check against the hyperbolic metric");
  int cmp_pairs = 200;
  std::uint64_t cmp_seed = 0;
  double cmp_tol = 1e-6;
  cmp->add_option("--pairs", cmp_pairs, "number of random pairs");
  cmp->add_option("--seed", cmp_seed, "random seed");
  cmp->add_option("--tol", cmp_tol, "max allowed deviation");
  cmp->add_option("--samples", common.samples, "initial curve samples");

  // apollonius
  auto* apo = app.add_subcommand("apollonius", "degeneracy on the Apollonius circle");
  std::string apo_a, apo_b;
  double apo_alpha = 2.0;
  int apo_probe = 64;
  apo->add_option("--a", apo_a, "first focus x,y")->required();
  apo->add_option("--b", apo_b, "second focus x,y")->required();
  apo->add_option("--alpha", apo_alpha, "ratio constant (> 0, != 1)")->required();
  apo->add_option("--probe", apo_probe, "locus probe samples");

  // geodesic
  auto* geo = app.add_subcommand("geodesic", "grid-graph geodesic approximation");
  std::string geo_domain, geo_a, geo_b, geo_out, geo_svg;
  int geo_grid = 64;
  bool geo_json = false;
  geo->add_option("--domain", geo_domain, "domain spec")->required();
  geo->add_option("--a", geo_a, "start point x,y")->required();
  geo->add_option("--b", geo_b, "end point x,y")->required();
  geo->add_option("--grid", geo_grid, "grid resolution");
  geo->add_option("--out", geo_out, "path CSV output");
  geo->add_option("--svg", geo_svg, "path SVG output");
  geo->add_flag("--json", geo_json, "structured report");
  geo->add_option("--samples", common.samples, "initial curve samples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (dist->parsed())
      return cmd_dist(dist_domain, dist_a, dist_b, common, dist_json);
    if (field->parsed())
      return cmd_field(field_domain, field_grid, field_ref, field_out, field_svg,
                       field_isolines, common);
    if (axioms->parsed())
      return cmd_axioms(ax_domain, ax_points, ax_seed, ax_tol, ax_probe, ax_json,
                        common);
    if (cmp->parsed()) return cmd_compare_hyperbolic(cmp_pairs, cmp_seed, cmp_tol, common);
    if (apo->parsed()) return cmd_apollonius(apo_a, apo_b, apo_alpha, apo_probe, common);
    if (geo->parsed())
      return cmd_geodesic(geo_domain, geo_a, geo_b, geo_grid, geo_out, geo_svg,
                          geo_json, common);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const AdmissibilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
