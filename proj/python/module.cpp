#include "qmckay/cli.hpp"
#include "qmckay/errors.hpp"
#include "qmckay/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

namespace py = pybind11;
using namespace qmckay;

namespace {

// Reports cross the boundary as JSON text; the Python side parses them.
template <class F>
std::string with_group(const std::string& group, std::optional<unsigned> precision, F&& f) {
  std::optional<PrecisionScope> scope;
  if (precision) scope.emplace(*precision);
  McKayData data = McKayData::build(parse_group(group));
  return f(data).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "quantum McKay correspondence reports";

  static py::exception<ConfigurationError> configuration_error(m, "ConfigurationError", PyExc_ValueError);
  static py::exception<PreconditionError> precondition_error(m, "PreconditionError", PyExc_ValueError);
  static py::exception<ConsistencyError> consistency_error(m, "ConsistencyError", PyExc_RuntimeError);
  static py::exception<PoleError> pole_error(m, "PoleError", PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ConfigurationError& e) {
      py::set_error(configuration_error, e.what());
    } catch (const PreconditionError& e) {
      py::set_error(precondition_error, e.what());
    } catch (const ConsistencyError& e) {
      py::set_error(consistency_error, e.what());
    } catch (const PoleError& e) {
      py::set_error(pole_error, e.what());
    }
  });

  const auto g = py::arg("group");
  const auto prec = py::arg("precision") = std::optional<unsigned>();

  m.def("roots", [](const std::string& group, std::optional<unsigned> p) { return with_group(group, p, roots_report); }, g, prec);
  m.def("group", [](const std::string& group, std::optional<unsigned> p) { return with_group(group, p, group_report); }, g, prec);
  m.def("bps", [](const std::string& group, std::optional<unsigned> p) { return with_group(group, p, bps_report); }, g, prec);
  m.def(
      "gw",
      [](const std::string& group, int D, int L, std::optional<unsigned> p) {
        Truncation tr = Truncation::checked(D, 0, L);
        return with_group(group, p, [&](const McKayData& d) { return gw_report(d, tr); });
      },
      g, py::arg("max_q_degree") = 4, py::arg("lambda_order") = 4, prec);
  m.def(
      "partition",
      [](const std::string& group, int D, int M, bool dt, std::optional<unsigned> p) {
        Truncation tr = Truncation::checked(D, M, 0);
        return with_group(group, p, [&](const McKayData& d) { return partition_report(d, tr, dt); });
      },
      g, py::arg("max_q_degree") = 4, py::arg("q_series_degree") = 4, py::arg("dt") = false, prec);
  m.def("intersect", [](const std::string& group, std::optional<unsigned> p) { return with_group(group, p, intersect_report); }, g, prec);
  m.def(
      "crc",
      [](const std::string& group, int degree, std::optional<unsigned> p) {
        return with_group(group, p, [&](const McKayData& d) { return crc_report(d, degree); });
      },
      g, py::arg("degree") = 5, prec);
  m.def(
      "verify",
      [](const std::string& group, int D, int M, int L, std::optional<unsigned> p) {
        Truncation tr = Truncation::checked(D, M, L);
        return with_group(group, p, [&](const McKayData& d) { return verify_report(d, verify_group(d, tr)); });
      },
      g, py::arg("max_q_degree") = 4, py::arg("q_series_degree") = 4, py::arg("lambda_order") = 4, prec);
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
