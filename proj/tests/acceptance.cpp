// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line with the measured numbers. Run them all with ./acceptance, or a single
// one with ./acceptance --test-case="acceptance-3*".

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "barbilian/axioms.hpp"
#include "barbilian/domains.hpp"
#include "barbilian/geodesics.hpp"
#include "barbilian/metric.hpp"
#include "barbilian/models.hpp"
#include "barbilian/rng.hpp"

using namespace barbilian;

namespace {

const InfluenceField kEuclid = InfluenceField::euclidean();

void criterion_line(int id, bool pass, const std::string& details) {
  std::printf("[criterion %d] %s - %s\n", id, pass ? "PASS" : "FAIL",
              details.c_str());
  std::fflush(stdout);
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

TEST_CASE("acceptance-1-disk-hyperbolic-agreement") {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(101);
  ExtremaOptions opts;
  opts.initial_samples = 256;
  opts.parameter_tolerance = 1e-10;
  std::vector<std::pair<Point, Point>> pairs;
  for (int i = 0; i < 200; ++i) {
    const Vec2 a = rng.in_disk({0, 0}, 0.95);
    const Vec2 b = rng.in_disk({0, 0}, 0.95);
    pairs.push_back({{a.x, a.y}, {b.x, b.y}});
  }
  double maxdev = 0.0;
  for (const auto& row : compare_disk(pairs, opts))
    maxdev = std::max(maxdev, row.abs_diff);
  const bool pass = maxdev <= 1e-6;
  criterion_line(1, pass,
                 "disk vs hyperbolic: max |diff| = " + sci(maxdev) +
                     " over 200 pairs (tol 1e-6, " + sci(elapsed_s(t0)) + " s)");
  CHECK(pass);
}

TEST_CASE("acceptance-2-historical-form-equivalence") {
  Rng rng(202);
  double maxdev = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(3, 50));
    std::vector<Point> cloud;
    cloud.reserve(n);
    for (int i = 0; i < n; ++i)
      cloud.push_back({rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)});
    SourceSet k = SourceSet::finite(cloud);
    auto admissible_query = [&]() {
      while (true) {
        Point p{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
        if (k.distance_to(p) > 1e-3) return p;
      }
    };
    const Point a = admissible_query();
    const Point b = admissible_query();
    const double d34 = distance_1934(k, kEuclid, a, b).value;
    const double dlog = barbilian_distance(k, kEuclid, a, b).value;
    maxdev = std::max(maxdev, std::abs(d34 - dlog));
  }
  const bool pass = maxdev <= 1e-12;
  criterion_line(2, pass,
                 "1934 two-maxima form vs ln(M/m): max |diff| = " + sci(maxdev) +
                     " over 1000 finite configurations (tol 1e-12)");
  CHECK(pass);
}

TEST_CASE("acceptance-3-weak-distance-axioms") {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(303);
  int violations = 0;
  double maxdev = 0.0;
  for (int domain = 0; domain < 20; ++domain) {
    SourceSet k = [&]() {
      switch (domain % 3) {
        case 0: {  // circle
          const Point c{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
          return SourceSet::circle(c, rng.uniform(0.5, 2.0));
        }
        case 1: {  // star polygon
          const int nv = static_cast<int>(rng.uniform_int(5, 12));
          const Vec2 c{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
          const double scale = rng.uniform(0.8, 1.6);
          std::vector<Point> verts;
          for (int i = 0; i < nv; ++i) {
            const double th = 6.283185307179586 * i / nv;
            const double r = scale * rng.uniform(0.6, 1.4);
            verts.push_back({c.x + r * std::cos(th), c.y + r * std::sin(th)});
          }
          return SourceSet::polygon(std::move(verts));
        }
        default: {  // finite cloud
          const int n = static_cast<int>(rng.uniform_int(5, 30));
          std::vector<Point> pts;
          for (int i = 0; i < n; ++i)
            pts.push_back({rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)});
          return SourceSet::finite(std::move(pts));
        }
      }
    }();
    const std::vector<Point> probes = random_interior_points(k, 30, rng);
    const AxiomReport report = verify_weak_distance(k, kEuclid, probes, 1e-9);
    violations += static_cast<int>(report.symmetry_violations.size() +
                                   report.triangle_violations.size() +
                                   report.identity_failures.size());
    maxdev = std::max(maxdev, report.max_deviation);
  }
  const bool pass = violations == 0;
  criterion_line(3, pass,
                 "weak-distance axioms: " + std::to_string(violations) +
                     " violations over 20 domains x 30 points, max deviation " +
                     sci(maxdev) + " (tol 1e-9, " + sci(elapsed_s(t0)) + " s)");
  CHECK(pass);
}

TEST_CASE("acceptance-4-apollonius-degeneracy") {
  Rng rng(404);
  double worst_ratio = 0.0, worst_d = 0.0;
  int failures = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const Point a{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    Point b{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    if (same_point(a, b)) b[0] += 0.5;
    double alpha = rng.uniform(0.2, 5.0);
    if (alpha == 1.0) alpha = 1.25;

    const Circle c = apollonius_circle(a, b, alpha);
    const SourceSet k = SourceSet::circle(c.center, c.radius);
    for (int i = 0; i < 64; ++i) {
      const Point p = k.curve_point(i / 64.0);
      const double rel = std::abs(distance(p, a) / distance(p, b) - alpha) / alpha;
      worst_ratio = std::max(worst_ratio, rel);
      if (rel > 1e-12) ++failures;
    }
    const DistanceReport rep = barbilian_distance(k, kEuclid, a, b);
    worst_d = std::max(worst_d, rep.value);
    if (!(rep.value <= 1e-9) || !rep.degenerate || same_point(a, b)) ++failures;
  }
  const bool pass = failures == 0;
  criterion_line(4, pass,
                 "apollonius degeneracy: max ratio error " + sci(worst_ratio) +
                     " (tol 1e-12), max d(A,B) = " + sci(worst_d) +
                     " (tol 1e-9) over 50 configurations");
  CHECK(pass);
}

TEST_CASE("acceptance-5-refinement-monotonicity") {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(505);
  double worst_drop = 0.0, worst_gap = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Point center{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const double radius = rng.uniform(0.5, 2.0);
    const SourceSet k = SourceSet::circle(center, radius);
    const Vec2 c = to_vec2(center);
    const Vec2 av = rng.in_disk(c, 0.75 * radius);
    const Vec2 bv = rng.in_disk(c, 0.75 * radius);
    const Point a{av.x, av.y}, b{bv.x, bv.y};

    double prev = -1.0, last = 0.0;
    for (int level = 3; level <= 10; ++level) {
      SourceSet sampled = SourceSet::finite(sample_dyadic(k, 8, level).points);
      const double d = barbilian_distance(sampled, kEuclid, a, b).value;
      if (prev >= 0.0) worst_drop = std::max(worst_drop, prev - d);
      prev = d;
      last = d;
    }
    const double adaptive = barbilian_distance(k, kEuclid, a, b).value;
    worst_gap = std::max(worst_gap, std::abs(adaptive - last));
  }
  const bool pass = worst_drop <= 1e-12 && worst_gap <= 1e-6;
  criterion_line(5, pass,
                 "dyadic levels 3..10: worst monotonicity drop " + sci(worst_drop) +
                     " (tol 1e-12), level-10 vs adaptive gap " + sci(worst_gap) +
                     " (tol 1e-6, " + sci(elapsed_s(t0)) + " s)");
  CHECK(pass);
}

TEST_CASE("acceptance-6-gauge-and-similarity-invariance") {
  const SourceSet circle = SourceSet::circle({0.1, -0.2}, 1.3);
  std::vector<std::pair<Point, Point>> circle_pairs{
      {{0.1, -0.2}, {0.6, 0.1}}, {{-0.4, 0.2}, {0.5, -0.7}}, {{0.3, 0.3}, {-0.2, -0.5}}};
  const InvarianceSummary s1 = verify_invariances(circle, kEuclid, circle_pairs, 50, 606);

  const SourceSet cloud = SourceSet::finite(
      {{1.0, 1.0}, {-1.2, 0.8}, {0.3, -1.5}, {1.8, -0.4}, {-0.6, -0.9}});
  std::vector<std::pair<Point, Point>> cloud_pairs{{{4.0, 0.0}, {5.0, 1.0}},
                                                   {{4.5, -1.5}, {6.0, 0.5}}};
  const InvarianceSummary s2 = verify_invariances(cloud, kEuclid, cloud_pairs, 50, 707);

  const double gauge = std::max(s1.gauge_max_deviation, s2.gauge_max_deviation);
  const double sim = std::max(s1.similarity_max_deviation, s2.similarity_max_deviation);
  const bool pass = gauge <= 1e-12 && sim <= 1e-9;
  criterion_line(6, pass,
                 "invariance over 100 trials each: gauge deviation " + sci(gauge) +
                     " (tol 1e-12), similarity deviation " + sci(sim) + " (tol 1e-9)");
  CHECK(pass);
}

TEST_CASE("acceptance-7-geodesic-sanity") {
  const auto t0 = std::chrono::steady_clock::now();
  const SourceSet disk = SourceSet::circle({0.0, 0.0}, 1.0);
  ExtremaOptions opts;
  opts.initial_samples = 128;
  opts.parameter_tolerance = 1e-10;

  GeodesicSolver coarse(disk, kEuclid, 256, opts);
  GeodesicSolver fine(disk, kEuclid, 512, opts);

  // pairs drawn on the coarse lattice so both grids share the endpoints
  Rng rng(808);
  std::vector<std::pair<Point, Point>> pairs;
  auto lattice_point = [&]() {
    while (true) {
      const int ix = static_cast<int>(rng.uniform_int(0, 256));
      const int iy = static_cast<int>(rng.uniform_int(0, 256));
      if (!coarse.node_admissible(ix, iy)) continue;
      Point p = coarse.node_point(ix, iy);
      if (std::hypot(p[0], p[1]) > 0.9) continue;
      return p;
    }
  };
  for (int i = 0; i < 20; ++i) {
    Point a = lattice_point();
    Point b = lattice_point();
    while (same_point(a, b)) b = lattice_point();
    pairs.push_back({std::move(a), std::move(b)});
  }

  int below_lower = 0, above_5pct = 0, monotone_breaks = 0;
  double max_overhead = 0.0, worst_increase = 0.0;
  for (const auto& [a, b] : pairs) {
    const double d = barbilian_distance(disk, kEuclid, a, b, opts).value;
    const double len256 = coarse.solve(a, b).length;
    const double len512 = fine.solve(a, b).length;
    if (len256 < d - 1e-9) ++below_lower;
    const double overhead = len256 / d - 1.0;
    max_overhead = std::max(max_overhead, overhead);
    if (overhead > 0.05) ++above_5pct;
    worst_increase = std::max(worst_increase, len512 - len256);
    if (len512 > len256 + 1e-9) ++monotone_breaks;
  }
  const bool pass = below_lower == 0 && above_5pct == 0 && monotone_breaks == 0;
  std::ostringstream detail;
  detail << "20 disk pairs at resolution 256: max overhead "
         << sci(max_overhead) << " (bound 5%, " << above_5pct << " above), "
         << below_lower << " below d - 1e-9, doubling increase "
         << sci(worst_increase) << " (" << monotone_breaks << " breaks, "
         << sci(elapsed_s(t0)) << " s)";
  criterion_line(7, pass, detail.str());
  CHECK(pass);
}

TEST_CASE("acceptance-8-cli-determinism-and-exit-codes") {
#ifndef BARBILIAN_CLI
  criterion_line(8, false, "CLI binary path not configured");
  CHECK(false);
#else
  namespace fs = std::filesystem;
  const std::string cli = BARBILIAN_CLI;
  const fs::path tmp = fs::temp_directory_path() / "barbilian_acceptance";
  fs::create_directories(tmp);

  auto run = [&](const std::string& args) {
    const std::string cmd = cli + " " + args + " 2>/dev/null";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return std::pair<int, std::string>{WEXITSTATUS(status), out};
  };
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };

  const std::string circle = "'{\"type\":\"circle\",\"center\":[0,0],\"radius\":1}'";
  bool pass = true;
  std::ostringstream detail;

  // byte-identical reruns of field
  const fs::path csv1 = tmp / "f1.csv", csv2 = tmp / "f2.csv";
  auto [rc1, out1] = run("field --domain " + circle + " --grid 16 --ref 0,0 --out " +
                         csv1.string());
  auto [rc2, out2] = run("field --domain " + circle + " --grid 16 --ref 0,0 --out " +
                         csv2.string());
  if (rc1 != 0 || rc2 != 0 || slurp(csv1) != slurp(csv2) || slurp(csv1).empty()) {
    pass = false;
    detail << "field rerun differed; ";
  }

  // byte-identical reruns of axioms --json
  auto [ra1, ax1] = run("axioms --domain " + circle + " --points 12 --seed 5 --json");
  auto [ra2, ax2] = run("axioms --domain " + circle + " --points 12 --seed 5 --json");
  if (ra1 != 0 || ra2 != 0 || ax1 != ax2 || ax1.empty()) {
    pass = false;
    detail << "axioms rerun differed; ";
  }

  // negative fixtures covering the documented exit codes
  const fs::path bad = tmp / "bad.json";
  std::ofstream(bad) << "{\"type\":\"circle\",\"center\":[0,0]}";  // missing radius
  const int code_validation =
      run("dist --domain " + bad.string() + " --a 0,0 --b 0.5,0").first;
  const int code_admissibility =
      run("dist --domain " + circle + " --a 1,0 --b 0.5,0").first;
  const int code_tolerance = run("compare-hyperbolic --pairs 5 --seed 1 --tol 1e-30").first;
  if (code_validation != 2) { pass = false; detail << "validation exit " << code_validation << " != 2; "; }
  if (code_admissibility != 3) { pass = false; detail << "admissibility exit " << code_admissibility << " != 3; "; }
  if (code_tolerance != 1) { pass = false; detail << "tolerance exit " << code_tolerance << " != 1; "; }

  detail << "reruns byte-identical, exit codes (validation, admissibility, tolerance) = ("
         << code_validation << ", " << code_admissibility << ", " << code_tolerance
         << ")";
  criterion_line(8, pass, detail.str());
  CHECK(pass);
#endif
}
