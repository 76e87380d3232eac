#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rigcert/claims.hpp"
#include "rigcert/commands.hpp"
#include "rigcert/factorable.hpp"
#include "rigcert/quadrature.hpp"

namespace py = pybind11;
using namespace rigcert;

namespace {

py::array_t<std::complex<double>> to_array(const FastMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.dim());
  py::array_t<std::complex<double>> out({n, n});
  auto view = out.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < n; ++i)
    for (py::ssize_t j = 0; j < n; ++j) view(i, j) = m(i, j);
  return out;
}

RunConfig config_for(Command command, Precision bits, Precision cap) {
  RunConfig c;
  c.command = command;
  c.precision = bits;
  c.precision_cap = cap;
  c.output = OutputFormat::Json;
  return c;
}

std::string dump(const Ledger& ledger) { return ledger.to_json().dump(); }

}  // namespace

PYBIND11_MODULE(_rigcert, m) {
  m.doc() = "Native core of rigcert; the public wrappers live in rigcert/__init__.py";
  m.attr("__version__") = RIGCERT_VERSION;
  m.attr("DEFAULT_PRECISION") = kDefaultPrecision;
  m.attr("DEFAULT_PRECISION_CAP") = kDefaultPrecisionCap;

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);

  m.def(
      "eval_const",
      [](const std::string& expr, Precision bits) {
        const Interval x = eval_const(ConstExpr::parse(expr), bits);
        return interval_json(x).dump();
      },
      py::arg("expr"), py::arg("bits") = kDefaultPrecision);

  m.def(
      "sturm_count",
      [](const std::string& coeffs, const std::string& region, Precision bits, Precision cap) {
        return to_json(sturm_count(IntervalPolynomial::parse(coeffs), Region::parse(region), bits, cap)).dump();
      },
      py::arg("coeffs"), py::arg("region") = "all", py::arg("bits") = kDefaultPrecision,
      py::arg("cap") = kDefaultPrecisionCap);

  m.def(
      "solve_factorable_quadratic",
      [](long long a, long long c) {
        const FactorableRoots r = solve_factorable_quadratic(a, c);
        return py::make_tuple(py::make_tuple(r.first.num, r.first.den), py::make_tuple(r.second.num, r.second.den));
      },
      py::arg("a"), py::arg("c"));

  m.def("claim_ids", &all_claim_ids);

  m.def(
      "certify",
      [](const std::vector<std::string>& claims, Precision bits, Precision cap, unsigned jobs) {
        RunConfig c = config_for(Command::Certify, bits, cap);
        c.jobs = jobs;
        py::gil_scoped_release release;
        return dump(cmd_certify(c, claims));
      },
      py::arg("claims") = std::vector<std::string>{}, py::arg("bits") = kDefaultPrecision,
      py::arg("cap") = kDefaultPrecisionCap, py::arg("jobs") = 1);

  m.def(
      "roots",
      [](const std::string& coeffs, const std::string& region, Precision bits, Precision cap) {
        return dump(cmd_roots(config_for(Command::Roots, bits, cap), coeffs, region));
      },
      py::arg("coeffs"), py::arg("region") = "all", py::arg("bits") = kDefaultPrecision,
      py::arg("cap") = kDefaultPrecisionCap);

  m.def(
      "gauss",
      [](const std::string& a, const std::string& b, Precision bits, Precision cap) {
        return dump(cmd_gauss(config_for(Command::Gauss, bits, cap), a, b));
      },
      py::arg("a"), py::arg("b"), py::arg("bits") = kDefaultPrecision, py::arg("cap") = kDefaultPrecisionCap);

  m.def(
      "ybe",
      [](const std::vector<std::complex<double>>& alphas, std::size_t samples, std::uint64_t seed, bool rigorous,
         Precision bits, double tolerance) {
        RunConfig c = config_for(Command::Ybe, bits, kDefaultPrecisionCap);
        c.seed = seed;
        c.mode = rigorous ? YbeMode::Rigorous : YbeMode::Fast;
        c.tolerance = tolerance;
        py::gil_scoped_release release;
        return dump(cmd_ybe(c, alphas, samples));
      },
      py::arg("alphas"), py::arg("samples") = 100, py::arg("seed") = 42, py::arg("rigorous") = false,
      py::arg("bits") = kDefaultPrecision, py::arg("tolerance") = kFastTolerance);

  m.def(
      "integrate_gaussian",
      [](const std::string& a, const std::string& b, Precision bits) {
        const QuadratureResult r = integrate_gaussian(ConstExpr::parse(a), ConstExpr::parse(b), bits);
        nlohmann::json out = {{"value", interval_json(r.value)}, {"subdivisions", r.subdivisions}};
        return out.dump();
      },
      py::arg("a"), py::arg("b"), py::arg("bits") = kDefaultPrecision);

  m.def("make_j", [](std::complex<double> alpha) { return to_array(make_j(alpha)); }, py::arg("alpha"));
  m.def(
      "r_of_x", [](std::complex<double> alpha, double x) { return to_array(r_of_x(make_j(alpha), x)); },
      py::arg("alpha"), py::arg("x"));
}
