#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "equiform/analysis.hpp"
#include "equiform/numeric.hpp"
#include "equiform/project.hpp"

namespace py = pybind11;
using namespace equiform;

namespace {

Rational rational_from_object(const py::object& value) {
  if (py::isinstance<py::str>(value)) {
    return rational_from_string(value.cast<std::string>());
  }
  return rational_from_double(value.cast<double>());
}

MotionParams make_params(const py::object& lambda, const py::object& s_prime,
                         const std::vector<py::object>& omega,
                         const std::vector<py::object>& b_prime) {
  MotionParams params;
  params.lambda = rational_from_object(lambda);
  params.s_prime = rational_from_object(s_prime);
  if (omega.size() > 21) throw py::value_error("omega takes at most 21 values");
  if (b_prime.size() > 7) throw py::value_error("b_prime takes at most 7 values");
  for (std::size_t k = 0; k < omega.size(); ++k) {
    params.omega[k] = rational_from_object(omega[k]);
  }
  for (std::size_t i = 0; i < b_prime.size(); ++i) {
    params.b_prime[i] = rational_from_object(b_prime[i]);
  }
  params.validate();
  return params;
}

py::list coeff_table_to_list(const CoeffTable& table) {
  py::list rows;
  for (const auto& [key, value] : table.entries) {
    py::dict row;
    row["i"] = key.power;
    row["j"] = key.freq;
    row["kind"] = kind_name(key.kind);
    row["value"] = to_string(value);
    rows.append(row);
  }
  return rows;
}

py::list obstruction_reports_to_list(const std::vector<ObstructionReport>& reports) {
  py::list rows;
  for (const auto& r : reports) {
    py::dict row;
    row["i"] = r.id.power;
    row["j"] = r.id.freq;
    row["kind"] = kind_name(r.id.kind);
    row["value"] = to_string(r.value);
    if (r.normalized) row["normalized"] = to_string(*r.normalized);
    if (r.expected) row["expected"] = to_string(*r.expected);
    row["vanished"] = r.vanished;
    row["branch"] = r.branch;
    rows.append(row);
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact scalar-curvature engine for the kinematic surface swept by a "
      "first-order equiform helix motion in E^7.";

  py::class_<MotionParams>(m, "MotionParams")
      .def(py::init(&make_params), py::arg("lambda_"), py::arg("s_prime") = 0.0,
           py::arg("omega") = std::vector<py::object>{},
           py::arg("b_prime") = std::vector<py::object>{})
      .def_property_readonly(
          "lambda_", [](const MotionParams& p) { return to_string(p.lambda); })
      .def_property_readonly(
          "s_prime", [](const MotionParams& p) { return to_string(p.s_prime); })
      .def_property_readonly("omega",
                             [](const MotionParams& p) {
                               std::vector<std::string> out;
                               for (const auto& w : p.omega)
                                 out.push_back(to_string(w));
                               return out;
                             })
      .def_property_readonly("b_prime",
                             [](const MotionParams& p) {
                               std::vector<std::string> out;
                               for (const auto& v : p.b_prime)
                                 out.push_back(to_string(v));
                               return out;
                             })
      .def("__repr__", [](const MotionParams& p) {
        std::ostringstream out;
        out << "MotionParams(lambda=" << to_string(p.lambda)
            << ", s_prime=" << to_string(p.s_prime) << ")";
        return out.str();
      });

  m.def("helix_point", &helix_point, py::arg("lambda_"), py::arg("phi"),
        "Point of the unit-cylinder helix in E^7.");

  m.def(
      "axonometric_project",
      [](const std::array<double, 7>& point) {
        return axonometric_project(point, ProjectionMap::standard());
      },
      py::arg("point"), "Standard axonometric image of an E^7 point in E^3.");

  m.def(
      "chart_point",
      [](const MotionParams& p, double t, double phi) {
        return numeric_chart_point(p, t, phi);
      },
      py::arg("params"), py::arg("t"), py::arg("phi"),
      "X(t, phi) evaluated in floating point.");

  m.def(
      "curvature_at",
      [](const MotionParams& p, double t, double phi) {
        return curvature_at(p, t, phi);
      },
      py::arg("params"), py::arg("t"), py::arg("phi"),
      "Scalar curvature via the exact symbolic pipeline.");

  m.def(
      "numeric_scalar_curvature",
      [](const MotionParams& p, double t, double phi) {
        return numeric_scalar_curvature(p, t, phi);
      },
      py::arg("params"), py::arg("t"), py::arg("phi"),
      "Scalar curvature via the independent finite-difference oracle.");

  m.def(
      "k0_numerator_coeffs",
      [](const MotionParams& p) {
        MetricField metric = first_fundamental_form(build_chart(p));
        CurvatureField field = scalar_curvature(metric, christoffel(metric));
        return coeff_table_to_list(field.coeff_num);
      },
      py::arg("params"),
      "Exact coefficient table of the K(0, phi) numerator.");

  m.def(
      "theorem31_forward_ok",
      [](const MotionParams& p) { return theorem31_forward(p).empty(); },
      py::arg("params"),
      "True iff the K(0, phi) numerator vanishes identically "
      "(requires omega_1..omega_15 = 0).");

  m.def(
      "theorem32_obstructions",
      [](const MotionParams& p, const py::object& k) {
        return obstruction_reports_to_list(
            theorem32_check(p, rational_from_object(k)));
      },
      py::arg("params"), py::arg("k"),
      "Obstruction coefficients of P - K*Q for a nonzero constant K.");

  m.def(
      "alphas",
      [](const MotionParams& p) {
        AlphaSet a = alphas_closed_form(p);
        std::vector<std::string> out;
        for (const auto& v : a.alpha) out.push_back(to_string(v));
        return out;
      },
      py::arg("params"), "The corrected alpha_0..alpha_9 closed forms.");

  m.def(
      "verify_metric_expansion",
      [](const MotionParams& p) { return verify_metric_expansion(p).ok; },
      py::arg("params"),
      "True iff the exact metric equals its alpha-expansion.");

  m.def(
      "example_params",
      [](const py::object& mu) {
        return example_motion_check(rational_from_object(mu)).params;
      },
      py::arg("mu") = 1.0,
      "MotionParams of the zero-curvature example motion.");

  m.def(
      "draw_params",
      [](std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        return draw_params(rng);
      },
      py::arg("seed"), "Seeded random draw of motion parameters.");
}
