#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcvx/certificates.hpp"
#include "qcvx/corpus.hpp"
#include "qcvx/function_io.hpp"
#include "qcvx/oracle.hpp"
#include "qcvx/report.hpp"
#include "qcvx/violation_analysis.hpp"

namespace py = pybind11;
using namespace qcvx;

// Rational <-> fractions.Fraction. Ints and "p/q" strings are accepted on input.
namespace pybind11::detail {

template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src || src.is_none()) return false;
    try {
      if (py::isinstance<py::str>(src)) {
        value = parse_rational(src.cast<std::string>());
        return true;
      }
      auto frac = py::module_::import("fractions").attr("Fraction");
      if (!py::isinstance<py::int_>(src) && !py::isinstance(src, frac)) return false;
      py::object f = frac(src);
      std::string num = py::str(f.attr("numerator")), den = py::str(f.attr("denominator"));
      value = Rational(num + "/" + den);
      value.canonicalize();
      return true;
    } catch (const std::exception&) {
      return false;
    }
  }

  static handle cast(const Rational& r, return_value_policy, handle) {
    auto frac = py::module_::import("fractions").attr("Fraction");
    return frac(py::int_(py::str(r.get_num().get_str())), py::int_(py::str(r.get_den().get_str()))).release();
  }
};

// XReal <-> Fraction, or float('inf') / float('-inf').
template <>
struct type_caster<XReal> {
  PYBIND11_TYPE_CASTER(XReal, const_name("fractions.Fraction | float"));

  bool load(handle src, bool convert) {
    if (py::isinstance<py::float_>(src)) {
      double d = src.cast<double>();
      if (d == std::numeric_limits<double>::infinity()) value = XReal::plus_infinity();
      else if (d == -std::numeric_limits<double>::infinity()) value = XReal::minus_infinity();
      else return false;
      return true;
    }
    if (py::isinstance<py::str>(src)) {
      try {
        value = parse_xreal(src.cast<std::string>());
        return true;
      } catch (const std::exception&) {
        return false;
      }
    }
    make_caster<Rational> r;
    if (!r.load(src, convert)) return false;
    value = XReal(cast_op<Rational>(r));
    return true;
  }

  static handle cast(const XReal& x, return_value_policy p, handle h) {
    if (x.is_finite()) return make_caster<Rational>::cast(x.value(), p, h);
    return py::float_(x.is_plus_infinity() ? std::numeric_limits<double>::infinity()
                                           : -std::numeric_limits<double>::infinity())
        .release();
  }
};

}  // namespace pybind11::detail

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::handle& obj) {
  return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

ToleranceConfig config(int grid_points) {
  ToleranceConfig cfg;
  cfg.grid_points = grid_points;
  cfg.validate();
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_qcvx, m) {
  m.doc() = "Exact quasiconvexity analysis of one-dimensional functions";

  static py::exception<Error> error(m, "QcvxError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.message());
      exc.attr("code") = std::string(errc_name(e.code()));
      py::list pts;
      for (const auto& r : e.offending_points()) pts.append(py::cast(r));
      exc.attr("offending_points") = pts;
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<Function1D>(m, "Function")
      .def_static("from_json", [](const py::object& doc) { return function_from_json(from_py(doc)); },
                  py::arg("doc"), "Build a function from its JSON description (a dict).")
      .def_static(
          "piecewise_linear",
          [](const std::vector<std::pair<Rational, Rational>>& knots) {
            std::vector<Knot> ks;
            for (const auto& [t, v] : knots) ks.push_back({t, v});
            return Function1D::piecewise_linear(std::move(ks));
          },
          py::arg("knots"))
      .def_static(
          "cantor",
          [](int depth, const std::string& mode) {
            if (mode != "set" && mode != "complement") throw Error(Errc::parse, "mode must be 'set' or 'complement'");
            return generate_cantor(depth, mode == "set" ? CantorMode::set : CantorMode::complement);
          },
          py::arg("depth"), py::arg("mode") = "set")
      .def_static(
          "blackbox",
          [](std::function<XReal(const Rational&)> fn, const Rational& lo, const Rational& hi) {
            // Python callables need the GIL, so black boxes built here are serial.
            return Function1D::blackbox(std::move(fn), lo, hi, true);
          },
          py::arg("fn"), py::arg("lo"), py::arg("hi"))
      .def_property_readonly("lo", &Function1D::lo)
      .def_property_readonly("hi", &Function1D::hi)
      .def_property_readonly("breakpoints", &Function1D::breakpoints)
      .def("__call__", [](const Function1D& f, const Rational& t) { return evaluate(f, t); }, py::arg("t"))
      .def("to_json", [](const Function1D& f) { return to_py(function_to_json(f)); });

  auto corpus = m.def_submodule("corpus", "Named example functions");
  corpus.def("tent", &corpus::tent);
  corpus.def("vee", &corpus::vee);
  corpus.def("ramp_plateau", &corpus::ramp_plateau);
  corpus.def("monotone", &corpus::monotone);
  corpus.def("monotone_concave", &corpus::monotone_concave);
  corpus.def("constant", &corpus::constant, py::arg("value") = Rational(3));
  corpus.def("random_piecewise_linear", &corpus::random_piecewise_linear, py::arg("max_knots") = 8,
             py::arg("seed") = 42);

  m.def("violation_set", [](const Function1D& f, const Rational& x, const Rational& y) {
    return to_py(report::decomposition(violation_set(f, x, y)));
  }, py::arg("f"), py::arg("x"), py::arg("y"));
  m.def("is_quasiconvex", [](const Function1D& f) { return to_py(report::verdict(is_quasiconvex(f))); },
        py::arg("f"));
  m.def("witness_check", [](const Function1D& f, const Rational& x, const Rational& y) {
    return to_py(report::witness_check(witness_check_cor2(f, x, y)));
  }, py::arg("f"), py::arg("x"), py::arg("y"));
  m.def("convexity_violation_set", [](const Function1D& f, const Rational& x, const Rational& y) {
    return to_py(report::convexity_violation(convexity_violation_set(f, x, y)));
  }, py::arg("f"), py::arg("x"), py::arg("y"));
  m.def("semicontinuity", [](const Function1D& f) { return to_py(report::semicontinuity(check_semicontinuity(f))); },
        py::arg("f"));
  m.def("certificate", [](const Function1D& f, const Rational& x0, const Rational& y0, int grid_points) -> py::object {
    auto c = theorem2_certificate(f, x0, y0);
    if (!c) return py::none();
    return to_py(report::certificate(*c, revalidate_certificate(f, *c, grid_points)));
  }, py::arg("f"), py::arg("x0"), py::arg("y0"), py::arg("grid_points") = 201);
  m.def("local_maxima_hypothesis", [](const Function1D& f) { return to_py(report::corollary3(corollary3_hypothesis(f))); },
        py::arg("f"));
  m.def("oracle", [](const Function1D& f, int grid_points, std::size_t max_triples) {
    return to_py(report::oracle_verdict(oracle_quasiconvex(f, config(grid_points), max_triples), max_triples));
  }, py::arg("f"), py::arg("grid_points") = 201, py::arg("max_triples") = 20);
  m.def("oracle_violation_set", [](const Function1D& f, const Rational& x, const Rational& y, int grid_points) {
    return to_py(report::intervals(oracle_violation_set(f, x, y, config(grid_points))));
  }, py::arg("f"), py::arg("x"), py::arg("y"), py::arg("grid_points") = 201);
  m.def("normalize_intervals", [](const std::vector<std::pair<Rational, Rational>>& raw) {
    std::vector<OpenInterval> ivs;
    for (const auto& [u, v] : raw) ivs.emplace_back(u, v);
    std::vector<std::pair<Rational, Rational>> out;
    for (const auto& iv : normalize(std::move(ivs))) out.emplace_back(iv.u(), iv.v());
    return out;
  }, py::arg("intervals"), "Union of open intervals as sorted disjoint (u, v) pairs.");
}
