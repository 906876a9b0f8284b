#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypexpand/curve.hpp"
#include "hypexpand/dilation.hpp"
#include "hypexpand/disk.hpp"
#include "hypexpand/errors.hpp"
#include "hypexpand/experiments.hpp"
#include "hypexpand/spherical.hpp"

namespace py = pybind11;
using namespace hypexpand;

PYBIND11_MODULE(_hypexpand, m) {
  m.doc() = "Asymmetric dilations of the hyperbolic disk";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<DiskPoint>(m, "DiskPoint")
      .def(py::init<>())
      .def_static("from_polar", &DiskPoint::from_polar, py::arg("r"), py::arg("theta"))
      .def_static("from_cartesian", &DiskPoint::from_cartesian, py::arg("x"), py::arg("y"))
      .def_property_readonly("r", &DiskPoint::r)
      .def_property_readonly("theta", &DiskPoint::theta)
      .def_property_readonly("x", &DiskPoint::x)
      .def_property_readonly("y", &DiskPoint::y)
      .def("__repr__", [](const DiskPoint& p) {
        return "DiskPoint(r=" + std::to_string(p.r()) + ", theta=" + std::to_string(p.theta()) + ")";
      });

  m.def("translate", static_cast<DiskPoint (*)(const DiskPoint&, const DiskPoint&)>(&translate), py::arg("c"),
        py::arg("x"));
  m.def("hyperbolic_distance", &hyperbolic_distance, py::arg("u"), py::arg("v"));
  m.def("dilate_origin", &dilate_origin, py::arg("k1"), py::arg("k2"), py::arg("p"));
  m.def(
      "dilate",
      [](const DiskPoint& c, double k1, double k2, const DiskPoint& p) {
        return dilate(DilationParams(c, k1, k2), p);
      },
      py::arg("c"), py::arg("k1"), py::arg("k2"), py::arg("p"));
  m.def(
      "geodesic_curvature_samples",
      [](const DiskPoint& u, const DiskPoint& v, std::size_t n, bool finite_difference) {
        ParamCurve c = geodesic_between(u, v);
        if (finite_difference) c = c.finite_difference_view();
        std::vector<double> out;
        for (std::size_t i = 0; i < n; ++i) out.push_back(geodesic_curvature(c, (i + 0.5) / n));
        return out;
      },
      py::arg("u"), py::arg("v"), py::arg("n") = 50, py::arg("finite_difference") = true);

  m.def(
      "_verify_theorem",
      [](std::uint64_t seed, std::size_t trials, unsigned threads) {
        TheoremOptions o;
        o.trials = trials;
        o.threads = threads;
        py::gil_scoped_release release;
        return verify_theorem(seed, o).to_json().dump();
      },
      py::arg("seed"), py::arg("trials"), py::arg("threads") = 0);
  m.def(
      "_search_counterexample",
      [](std::uint64_t seed, double k1, double k2, std::size_t budget) {
        SearchOptions o;
        o.k1 = k1;
        o.k2 = k2;
        o.budget = budget;
        py::gil_scoped_release release;
        return search_counterexample(seed, o).to_json().dump();
      },
      py::arg("seed"), py::arg("k1"), py::arg("k2"), py::arg("budget"));
  m.def(
      "_replay_witness",
      [](const std::string& doc) { return replay_witness(Witness::from_json(nlohmann::json::parse(doc))); },
      py::arg("witness_json"));
  m.def(
      "_verify_lemmas",
      [](std::size_t n) {
        py::gil_scoped_release release;
        return verify_lemmas(n).to_json().dump();
      },
      py::arg("grid_n"));
  m.def(
      "_curvature_sweep",
      [](std::uint64_t seed, std::size_t n) {
        SweepOptions o;
        o.n_r = n;
        o.n_theta = n;
        py::gil_scoped_release release;
        return curvature_sweep(seed, o).to_json().dump();
      },
      py::arg("seed"), py::arg("grid_n"));
  m.def(
      "_sphere_conjecture",
      [](std::uint64_t seed, std::size_t trials, unsigned threads) {
        ConjectureOptions o;
        o.threads = threads;
        py::gil_scoped_release release;
        return conjecture_trial(seed, trials, o).to_json().dump();
      },
      py::arg("seed"), py::arg("trials"), py::arg("threads") = 0);
  m.def("render_svg", [](std::uint64_t seed) { return render_svg(seed); }, py::arg("seed"));
  m.def("trace_csv", &trace_csv, py::arg("seed"), py::arg("curve"), py::arg("samples") = 65);
}
