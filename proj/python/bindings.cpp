// Python bindings for the group-size optimization core. Structured results
// cross the boundary as plain dicts via the JSON serializers, so the Python
// surface matches the CLI output field-for-field.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "groupopt/analysis.hpp"
#include "groupopt/errors.hpp"
#include "groupopt/family.hpp"
#include "groupopt/optimizer.hpp"
#include "groupopt/report.hpp"
#include "groupopt/simulation.hpp"
#include "groupopt/verifier.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const groupopt::json& j) {
  namespace gj = nlohmann;
  switch (j.type()) {
    case gj::json::value_t::null: return py::none();
    case gj::json::value_t::boolean: return py::bool_(j.get<bool>());
    case gj::json::value_t::number_integer: return py::int_(j.get<long long>());
    case gj::json::value_t::number_unsigned:
      return py::int_(j.get<unsigned long long>());
    case gj::json::value_t::number_float: return py::float_(j.get<double>());
    case gj::json::value_t::string: return py::str(j.get<std::string>());
    case gj::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case gj::json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) {
        out[py::str(it.key())] = json_to_py(it.value());
      }
      return out;
    }
    default: return py::none();
  }
}

groupopt::ScanConfig make_scan(std::optional<double> x_lo, double x_hi,
                               double step, double tol) {
  groupopt::ScanConfig scan;
  scan.x_lo = x_lo;
  scan.x_hi = x_hi;
  scan.step = step;
  scan.tol = tol;
  return scan;
}

}  // namespace

PYBIND11_MODULE(_groupopt, m) {
  m.doc() = "Optimal group size for group-lending default models";

  py::register_exception<groupopt::family_error>(m, "FamilyError", PyExc_ValueError);
  py::register_exception<groupopt::domain_error>(m, "DomainError", PyExc_ValueError);

  py::class_<groupopt::FamilySpec>(m, "Family")
      .def_property_readonly("name", &groupopt::FamilySpec::name)
      .def_property_readonly("params", &groupopt::FamilySpec::params)
      .def_property_readonly("x_min", &groupopt::FamilySpec::x_min)
      .def("f", &groupopt::FamilySpec::f, py::arg("x"))
      .def("f1", &groupopt::FamilySpec::f1, py::arg("x"))
      .def("f2", &groupopt::FamilySpec::f2, py::arg("x"))
      .def("__repr__", [](const groupopt::FamilySpec& fam) {
        std::string r = "Family(" + fam.name();
        for (const auto& [k, v] : fam.params()) {
          r += ", " + k + "=" + std::to_string(v);
        }
        return r + ")";
      });

  m.def("family_names", &groupopt::family_names);
  m.def(
      "make_family",
      [](const std::string& name, const groupopt::ParamMap& params) {
        return groupopt::make_family(name, params);
      },
      py::arg("name"), py::arg("params"));

  m.def("default_prob", &groupopt::default_prob, py::arg("family"), py::arg("x"));
  m.def("bracket_fn", &groupopt::bracket_fn, py::arg("family"), py::arg("x"));
  m.def("log_objective", &groupopt::log_objective, py::arg("family"), py::arg("x"));
  m.def("group_success_prob", &groupopt::group_success_prob, py::arg("family"),
        py::arg("x"));
  m.def("stationarity", &groupopt::stationarity, py::arg("family"), py::arg("x"));
  m.def(
      "stationarity_series",
      [](double y, double tol) {
        const auto res = groupopt::stationarity_series(y, tol);
        return py::make_tuple(res.value, res.terms_used, res.truncation_bound);
      },
      py::arg("y"), py::arg("tol") = 1e-13,
      "Returns (value, terms_used, truncation_bound).");
  m.def("stationarity_series_closed", &groupopt::stationarity_series_closed,
        py::arg("y"));
  m.def("lambert_w", &groupopt::lambert_w, py::arg("z"));

  m.def(
      "verify_conditions",
      [](const groupopt::FamilySpec& fam, std::optional<double> x_lo, double x_hi,
         double step, double tol) {
        return json_to_py(
            groupopt::to_json(groupopt::verify_conditions(
                fam, make_scan(x_lo, x_hi, step, tol))));
      },
      py::arg("family"), py::arg("x_lo") = std::nullopt, py::arg("x_hi") = 1e4,
      py::arg("step") = 1e-3, py::arg("tol") = 1e-9);

  m.def(
      "optimize",
      [](const groupopt::FamilySpec& fam, double tol) {
        const auto cert = groupopt::verify_conditions(fam);
        return json_to_py(groupopt::to_json(groupopt::maximize(fam, cert, tol)));
      },
      py::arg("family"), py::arg("tol") = 1e-12,
      "Certify the family, then locate the maximizer inside the bracket.");

  m.def(
      "sweep",
      [](const std::string& family, const std::string& param, double lo, double hi,
         double step) {
        return json_to_py(
            groupopt::to_json(groupopt::sweep(family, param, lo, hi, step)));
      },
      py::arg("family"), py::arg("param"), py::arg("lo"), py::arg("hi"),
      py::arg("step"));

  m.def(
      "narrow_interval",
      [](const std::string& family, const std::string& param, double p_lo,
         double p_hi, double p_step, double x_lo, double x_hi, double x_step) {
        return json_to_py(groupopt::to_json(groupopt::narrow_interval(
            family, param, p_lo, p_hi, p_step, x_lo, x_hi, x_step)));
      },
      py::arg("family"), py::arg("param"), py::arg("p_lo"), py::arg("p_hi"),
      py::arg("p_step") = 1e-3, py::arg("x_lo") = 2.718281828459045,
      py::arg("x_hi") = 7.38905609893065, py::arg("x_step") = 0.1);

  m.def("analytic_group_prob", &groupopt::analytic_group_prob, py::arg("family"),
        py::arg("k"));
  m.def(
      "simulate_group",
      [](const groupopt::FamilySpec& fam, int k, long long trials,
         std::uint64_t seed) {
        const auto est = groupopt::simulate_group(fam, k, trials, seed);
        const double analytic = groupopt::analytic_group_prob(fam, k);
        return json_to_py(groupopt::simulation_json(est, k, analytic));
      },
      py::arg("family"), py::arg("k"), py::arg("trials") = 1'000'000,
      py::arg("seed") = 0);
  m.def("brute_force_integer_argmax", &groupopt::brute_force_integer_argmax,
        py::arg("family"), py::arg("k_min"), py::arg("k_max"));

  m.def(
      "appendix_b_checks",
      [](int points) {
        return json_to_py(groupopt::to_json(
            groupopt::appendix_b_checks(groupopt::default_p_grid(points))));
      },
      py::arg("points") = 501);
}
