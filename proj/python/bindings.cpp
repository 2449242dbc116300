#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cfrac/errors.hpp"
#include "cfrac/finite_cf.hpp"
#include "cfrac/iteration.hpp"
#include "cfrac/notation.hpp"
#include "cfrac/pell.hpp"
#include "cfrac/rational.hpp"
#include "cfrac/surd.hpp"

namespace py = pybind11;

// Python int <-> BigInt through decimal text; Fraction <-> Rational.
namespace pybind11::detail {

template <>
struct type_caster<cfrac::BigInt> {
  PYBIND11_TYPE_CASTER(cfrac::BigInt, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    value = cfrac::BigInt(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const cfrac::BigInt& x, return_value_policy, handle) {
    return PyLong_FromString(x.get_str().c_str(), nullptr, 10);
  }
};

template <>
struct type_caster<cfrac::Rational> {
  PYBIND11_TYPE_CASTER(cfrac::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    if (PyLong_Check(src.ptr())) {
      value = cfrac::Rational(src.cast<cfrac::BigInt>());
      return true;
    }
    if (!py::isinstance(src, py::module_::import("numbers").attr("Rational"))) return false;
    value = cfrac::Rational(src.attr("numerator").cast<cfrac::BigInt>(),
                            src.attr("denominator").cast<cfrac::BigInt>());
    return true;
  }

  static handle cast(const cfrac::Rational& x, return_value_policy, handle) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(x.numerator(), x.denominator()).release();
  }
};

}  // namespace pybind11::detail

namespace {

using namespace cfrac;

py::object cf_to_python(const ContinuedFraction& cf) {
  if (const auto* finite = std::get_if<FiniteCF>(&cf)) {
    return py::cast(std::vector<BigInt>(finite->coefficients().begin(), finite->coefficients().end()));
  }
  return py::cast(std::get<PeriodicCF>(cf));
}

std::vector<BigInt> finite_terms(const py::object& cf) {
  if (py::isinstance<py::str>(cf)) {
    const ContinuedFraction parsed = parse_cf(cf.cast<std::string>());
    if (const auto* finite = std::get_if<FiniteCF>(&parsed)) {
      return {finite->coefficients().begin(), finite->coefficients().end()};
    }
    throw Error(ErrorKind::InvalidArgument, "expected a finite continued fraction");
  }
  return cf.cast<std::vector<BigInt>>();
}

py::tuple pell_tuple(const PellSolution& s) { return py::make_tuple(s.x, s.y, s.sign); }

}  // namespace

PYBIND11_MODULE(_cfrac, m) {
  m.doc() = "Exact continued fractions, quadratic surds and Pell's equation";

  // Held for the lifetime of the interpreter.
  static py::handle error_type = py::exception<Error>(m, "CfracError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object instance = py::reinterpret_borrow<py::object>(error_type)(e.what());
      instance.attr("kind") = to_string(e.kind());
      PyErr_SetObject(error_type.ptr(), instance.ptr());
    }
  });

  py::class_<PeriodicCF>(m, "PeriodicCF")
      .def(py::init<std::vector<BigInt>, std::vector<BigInt>>(), py::arg("pre_period"), py::arg("period"))
      .def_property_readonly("pre_period", &PeriodicCF::pre_period)
      .def_property_readonly("period", &PeriodicCF::period)
      .def("terms", &PeriodicCF::terms, py::arg("count"))
      .def("__eq__", [](const PeriodicCF& a, const PeriodicCF& b) { return a == b; })
      .def("__str__", [](const PeriodicCF& cf) { return format_cf(cf); })
      .def("__repr__", [](const PeriodicCF& cf) { return "PeriodicCF('" + format_cf(cf) + "')"; });

  py::class_<QuadraticSurd>(m, "QuadraticSurd")
      .def(py::init<BigInt, BigInt, BigInt>(), py::arg("P"), py::arg("D"), py::arg("Q"))
      .def_property_readonly("P", &QuadraticSurd::P)
      .def_property_readonly("D", &QuadraticSurd::D)
      .def_property_readonly("Q", &QuadraticSurd::Q)
      .def("conjugate", &QuadraticSurd::conjugate)
      .def("canonical", &QuadraticSurd::canonical)
      .def("minimal_polynomial", &QuadraticSurd::minimal_polynomial)
      .def("floor", &QuadraticSurd::floor)
      .def("decimal", &decimal_approx, py::arg("digits") = 3)
      .def("expand", &expand_surd, py::arg("max_terms") = kDefaultExpansionBudget)
      .def("__float__", [](const QuadraticSurd& s) { return s.value().to_double(); })
      .def("__eq__", [](const QuadraticSurd& a, const QuadraticSurd& b) { return a == b; })
      .def("__str__", &QuadraticSurd::str)
      .def("__repr__", [](const QuadraticSurd& s) {
        return "QuadraticSurd(" + s.P().get_str() + ", " + s.D().get_str() + ", " + s.Q().get_str() + ")";
      });

  m.def("expand", [](const Rational& r) {
    const FiniteCF cf = expand_rational(r);
    return std::vector<BigInt>(cf.coefficients().begin(), cf.coefficients().end());
  }, py::arg("value"), "Coefficients of the continued fraction of a rational.");
  m.def("evaluate", [](const py::object& cf) { return evaluate(FiniteCF(finite_terms(cf))); },
        py::arg("cf"), "Exact value of a finite continued fraction (list or text).");
  m.def("canonicalize", [](const std::vector<BigInt>& terms) {
    const FiniteCF cf = canonicalize(FiniteCF(terms));
    return std::vector<BigInt>(cf.coefficients().begin(), cf.coefficients().end());
  }, py::arg("terms"));
  m.def("convergents", [](const py::object& cf, std::optional<std::size_t> count) {
    std::vector<BigInt> terms;
    if (py::isinstance<py::str>(cf)) {
      const ContinuedFraction parsed = parse_cf(cf.cast<std::string>());
      if (const auto* periodic = std::get_if<PeriodicCF>(&parsed)) {
        terms = periodic->terms(count.value_or(10));
      } else {
        const auto& coefficients = std::get<FiniteCF>(parsed).coefficients();
        terms.assign(coefficients.begin(), coefficients.end());
      }
    } else if (py::isinstance<PeriodicCF>(cf)) {
      terms = cf.cast<PeriodicCF>().terms(count.value_or(10));
    } else {
      terms = cf.cast<std::vector<BigInt>>();
    }
    std::vector<Rational> out;
    for (const Convergent& c : convergents(terms, count.value_or(terms.size()))) out.push_back(c.value());
    return out;
  }, py::arg("cf"), py::arg("count") = py::none());

  m.def("parse_cf", [](const std::string& text) { return cf_to_python(parse_cf(text)); }, py::arg("text"),
        "A list of ints for finite notation, a PeriodicCF otherwise.");
  m.def("format_cf", [](const py::object& cf) {
    if (py::isinstance<PeriodicCF>(cf)) return format_cf(cf.cast<PeriodicCF>());
    return format_cf(FiniteCF(cf.cast<std::vector<BigInt>>()));
  }, py::arg("cf"));

  m.def("sqrt_cf", &sqrt_cf, py::arg("n"), py::arg("max_terms") = kDefaultExpansionBudget);
  m.def("expand_surd", &expand_surd, py::arg("surd"), py::arg("max_terms") = kDefaultExpansionBudget);
  m.def("periodic_to_surd", [](const py::object& cf) {
    if (py::isinstance<py::str>(cf)) {
      const ContinuedFraction parsed = parse_cf(cf.cast<std::string>());
      if (const auto* periodic = std::get_if<PeriodicCF>(&parsed)) return periodic_to_surd(*periodic);
      throw Error(ErrorKind::InvalidArgument, "expected a periodic continued fraction");
    }
    return periodic_to_surd(cf.cast<PeriodicCF>());
  }, py::arg("cf"));
  m.def("decimal_approx", &decimal_approx, py::arg("surd"), py::arg("digits") = 3);

  m.def("pell_fundamental", [](const BigInt& n) { return pell_tuple(solve_fundamental(n)); }, py::arg("n"),
        "(x, y, sign) with x^2 - n*y^2 = sign minimal.");
  m.def("pell_solutions", [](const BigInt& n, std::size_t count, int sign) {
    py::list out;
    for (const PellSolution& s : solve_signed(n, count, sign)) out.append(pell_tuple(s));
    return out;
  }, py::arg("n"), py::arg("count") = 1, py::arg("sign") = 1);

  m.def("iterate_simple", [](const BigInt& kappa, std::size_t n_terms, const std::string& seed) {
    if (seed != "recurrence" && seed != "paper") {
      throw Error(ErrorKind::InvalidArgument, "seed must be 'recurrence' or 'paper'");
    }
    return iterate_simple(kappa, n_terms, seed == "paper" ? Seeding::Paper : Seeding::Recurrence).terms;
  }, py::arg("kappa"), py::arg("n_terms"), py::arg("seed") = "recurrence");
  m.def("limit_simple", &limit_simple, py::arg("kappa"));
  m.def("golden_error_bound_check", [](std::size_t n_max) {
    py::list out;
    for (const ErrorBoundRow& row : golden_error_bound_check(n_max)) {
      out.append(py::make_tuple(row.n, row.lhs.str(), row.rhs.str(), row.holds));
    }
    return out;
  }, py::arg("n_max"), "Rows (n, lhs, rhs, holds) with exact values as text.");
  m.def("iterate_monic", &iterate_monic, py::arg("b"), py::arg("c"), py::arg("x0"), py::arg("n_terms"),
        "Exact trace of x -> -b - c/x; None marks a pole.");
  m.def("classify_monic", [](const Rational& b, const Rational& c) {
    const MonicClassification result = classify_monic(b, c);
    py::dict out;
    out["verdict"] = to_string(result.verdict);
    out["discriminant"] = result.discriminant;
    out["root"] = result.root ? py::cast(result.root->str()) : py::none();
    out["ratio"] = result.ratio ? py::cast(result.ratio->str()) : py::none();
    out["root_value"] = result.root ? py::cast(result.root->to_double()) : py::none();
    out["ratio_value"] = result.ratio ? py::cast(result.ratio->to_double()) : py::none();
    return out;
  }, py::arg("b"), py::arg("c"));
}
