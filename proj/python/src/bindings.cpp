#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "barbilian/axioms.hpp"
#include "barbilian/domains.hpp"
#include "barbilian/geodesics.hpp"
#include "barbilian/metric.hpp"
#include "barbilian/models.hpp"

namespace py = pybind11;
using namespace barbilian;

namespace {

ExtremaOptions make_options(int initial_samples, double parameter_tolerance,
                            double positivity_floor, double degeneracy_tolerance) {
  ExtremaOptions o;
  o.initial_samples = initial_samples;
  o.parameter_tolerance = parameter_tolerance;
  o.positivity_floor = positivity_floor;
  o.degeneracy_tolerance = degeneracy_tolerance;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Logarithmic-oscillation (Barbilian/Apollonian) metric toolkit";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<AdmissibilityError>(m, "AdmissibilityError",
                                             PyExc_RuntimeError);

  py::class_<InfluenceField>(m, "InfluenceField")
      .def_static("euclidean", &InfluenceField::euclidean)
      .def_static("euclidean_power", &InfluenceField::euclidean_power,
                  py::arg("exponent"))
      .def_static("custom",
                  [](std::function<double(const Point&, const Point&)> f) {
                    return InfluenceField::custom(std::move(f));
                  },
                  py::arg("evaluator"))
      .def("__call__", [](const InfluenceField& f, const Point& p, const Point& a) {
        return influence_eval(f, p, a);
      })
      .def("__repr__", [](const InfluenceField& f) {
        return "InfluenceField(" + f.describe() + ")";
      });

  py::class_<SourceSet>(m, "SourceSet")
      .def_static("finite", &SourceSet::finite, py::arg("points"))
      .def_static("circle", &SourceSet::circle, py::arg("center"), py::arg("radius"))
      .def_static("polygon", &SourceSet::polygon, py::arg("vertices"))
      .def_static("parametric",
                  [](std::function<Point(double)> f) {
                    return SourceSet::parametric(std::move(f));
                  },
                  py::arg("curve"))
      .def("curve_point", &SourceSet::curve_point, py::arg("t"))
      .def("distance_to", &SourceSet::distance_to, py::arg("x"))
      .def_property_readonly("diameter", &SourceSet::diameter)
      .def("__repr__", [](const SourceSet& k) { return "SourceSet(" + k.describe() + ")"; });

  py::class_<ExtremaOptions>(m, "ExtremaOptions")
      .def(py::init(&make_options), py::arg("initial_samples") = 256,
           py::arg("parameter_tolerance") = 1e-10, py::arg("positivity_floor") = 0.0,
           py::arg("degeneracy_tolerance") = 1e-9)
      .def_readwrite("initial_samples", &ExtremaOptions::initial_samples)
      .def_readwrite("parameter_tolerance", &ExtremaOptions::parameter_tolerance)
      .def_readwrite("positivity_floor", &ExtremaOptions::positivity_floor)
      .def_readwrite("degeneracy_tolerance", &ExtremaOptions::degeneracy_tolerance);

  py::class_<ExtremalRatio>(m, "ExtremalRatio")
      .def_readonly("max_ratio", &ExtremalRatio::max_ratio)
      .def_readonly("min_ratio", &ExtremalRatio::min_ratio)
      .def_readonly("argmax", &ExtremalRatio::argmax)
      .def_readonly("argmin", &ExtremalRatio::argmin);

  py::class_<DistanceReport>(m, "DistanceReport")
      .def_readonly("value", &DistanceReport::value)
      .def_readonly("degenerate", &DistanceReport::degenerate)
      .def_readonly("extrema", &DistanceReport::extrema)
      .def_readonly("samples_used", &DistanceReport::samples_used)
      .def_readonly("refinement_converged", &DistanceReport::refinement_converged)
      .def("__repr__", [](const DistanceReport& r) {
        return "DistanceReport(value=" + std::to_string(r.value) +
               ", degenerate=" + (r.degenerate ? "True" : "False") + ")";
      });

  py::class_<Circle>(m, "Circle")
      .def_readonly("center", &Circle::center)
      .def_readonly("radius", &Circle::radius);

  py::class_<SampledSet>(m, "SampledSet")
      .def_readonly("points", &SampledSet::points)
      .def_readonly("dyadic_level", &SampledSet::dyadic_level)
      .def_property_readonly("provenance", [](const SampledSet& s) {
        switch (s.provenance) {
          case Provenance::uniform_parameter: return "uniform-parameter";
          case Provenance::dyadic_refinement: return "dyadic-refinement";
          default: return "exact-finite";
        }
      });

  py::class_<GeodesicPath>(m, "GeodesicPath")
      .def_readonly("nodes", &GeodesicPath::nodes)
      .def_readonly("length", &GeodesicPath::length)
      .def_readonly("grid_resolution", &GeodesicPath::grid_resolution);

  m.def("influence_eval", &influence_eval, py::arg("field"), py::arg("p"),
        py::arg("a"));
  m.def("ratio_extrema", &ratio_extrema, py::arg("k"), py::arg("field"),
        py::arg("a"), py::arg("b"), py::arg("opts") = ExtremaOptions{});
  m.def("barbilian_distance", &barbilian_distance, py::arg("k"), py::arg("field"),
        py::arg("a"), py::arg("b"), py::arg("opts") = ExtremaOptions{});
  m.def("distance_1934", &distance_1934, py::arg("k"), py::arg("field"),
        py::arg("a"), py::arg("b"), py::arg("opts") = ExtremaOptions{});
  m.def("is_degenerate", &is_degenerate, py::arg("k"), py::arg("field"),
        py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9,
        py::arg("opts") = ExtremaOptions{});
  m.def("sample",
        [](const SourceSet& k, int n) {
          const SampledSet s = sample(k, n);
          return s;
        },
        py::arg("k"), py::arg("n"));
  m.def("sample_dyadic", &sample_dyadic, py::arg("k"), py::arg("base_count"),
        py::arg("level"));
  m.def("apollonius_circle", &apollonius_circle, py::arg("a"), py::arg("b"),
        py::arg("alpha"));
  m.def("poincare_disk_distance", &poincare_disk_distance, py::arg("a"), py::arg("b"));
  m.def("compare_disk",
        [](const std::vector<std::pair<Point, Point>>& pairs,
           const ExtremaOptions& opts) {
          py::list out;
          for (const DiskComparison& c : compare_disk(pairs, opts))
            out.append(py::make_tuple(c.a, c.b, c.barbilian, c.hyperbolic, c.abs_diff));
          return out;
        },
        py::arg("pairs"), py::arg("opts") = ExtremaOptions{});
  m.def("verify_weak_distance",
        [](const SourceSet& k, const InfluenceField& f,
           const std::vector<Point>& pts, double tol, const ExtremaOptions& opts) {
          const AxiomReport r = verify_weak_distance(k, f, pts, tol, opts);
          py::dict d;
          d["symmetry_violations"] = r.symmetry_violations.size();
          d["triangle_violations"] = r.triangle_violations.size();
          d["identity_failures"] = r.identity_failures.size();
          d["degeneracies_found"] = r.degeneracies_found.size();
          d["max_deviation"] = r.max_deviation;
          d["pass"] = r.pass();
          d["config"] = r.config;
          return d;
        },
        py::arg("k"), py::arg("field"), py::arg("points"), py::arg("tol") = 1e-9,
        py::arg("opts") = ExtremaOptions{});
  m.def("verify_metric_upgrade",
        [](const SourceSet& k, const InfluenceField& f,
           const std::vector<Point>& pts, double tol, const ExtremaOptions& opts) {
          py::list out;
          for (const DegeneratePair& p : verify_metric_upgrade(k, f, pts, tol, opts))
            out.append(py::make_tuple(p.a, p.b, p.value));
          return out;
        },
        py::arg("k"), py::arg("field"), py::arg("points"), py::arg("tol") = 1e-9,
        py::arg("opts") = ExtremaOptions{});
  m.def("approximate_geodesic", &approximate_geodesic, py::arg("k"), py::arg("field"),
        py::arg("a"), py::arg("b"), py::arg("resolution"),
        py::arg("opts") = ExtremaOptions{});
}
