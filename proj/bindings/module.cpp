#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sabban/curve.hpp"
#include "sabban/expression.hpp"
#include "sabban/frame.hpp"
#include "sabban/smarandache.hpp"
#include "sabban/verify.hpp"

namespace py = pybind11;

namespace {

using namespace sabban;

py::tuple to_tuple(const Vec3& v) { return py::make_tuple(v.x, v.y, v.z); }

SmarandacheKind kind_from_str(const std::string& name) {
    const auto kind = parse_kind(name);
    if (!kind) throw py::value_error("unknown kind '" + name + "' (expected gt, td or gtd)");
    return *kind;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Sabban frames, geodesic curvature and Smarandache curves on the "
        "unit sphere";

    // Translators run newest-first: register the base before the derived
    // classes so the specific mappings win.
    py::register_exception<Error>(m, "NumericalError", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<InvalidRadius>(m, "InvalidRadiusError", PyExc_ValueError);
    py::register_exception<OutOfRange>(m, "OutOfRangeError", PyExc_ValueError);

    py::class_<CurveSource>(m, "Curve")
        .def_property_readonly("domain",
                               [](const CurveSource& c) {
                                   return py::make_tuple(c.domain().lo, c.domain().hi);
                               })
        .def("position", [](const CurveSource& c, double s) { return to_tuple(c.position(s)); })
        .def("derivative", [](const CurveSource& c, double s) { return to_tuple(c.derivative(s)); })
        .def("with_fd_step", &CurveSource::with_fd_step)
        .def("positions_only", &CurveSource::positions_only);

    m.def("fixture_great_circle", &fixture_great_circle);
    m.def("fixture_latitude_circle", &fixture_latitude_circle, py::arg("r"));
    m.def("fixture_paper_example", &fixture_paper_example);
    m.def(
        "curve_from_expressions",
        [](const std::string& fx, const std::string& fy, const std::string& fz,
           double lo, double hi) {
            return expr::curve_from_expressions(fx, fy, fz, {lo, hi});
        },
        py::arg("fx"), py::arg("fy"), py::arg("fz"), py::arg("lo"), py::arg("hi"));

    py::class_<SabbanFrame>(m, "SabbanFrame")
        .def_property_readonly("gamma", [](const SabbanFrame& f) { return to_tuple(f.gamma.vec()); })
        .def_property_readonly("tangent", [](const SabbanFrame& f) { return to_tuple(f.tangent.vec()); })
        .def_property_readonly("normal", [](const SabbanFrame& f) { return to_tuple(f.normal.vec()); })
        .def("orthogonality_defect", &SabbanFrame::orthogonality_defect)
        .def("handedness", &SabbanFrame::handedness);

    m.def("sabban_frame", &sabban_frame, py::arg("curve"), py::arg("s"));
    m.def("geodesic_curvature", &geodesic_curvature, py::arg("curve"), py::arg("s"));
    m.def("kappa_prime", &kappa_prime, py::arg("curve"), py::arg("s"));
    m.def("verify_sabban_odes", &verify_sabban_odes, py::arg("curve"), py::arg("samples"));
    m.def(
        "is_unit_speed",
        [](const CurveSource& c, int samples, double tol) {
            const UnitSpeedCheck check = is_unit_speed(c, samples, tol);
            return py::make_tuple(check.unit_speed, check.max_defect);
        },
        py::arg("curve"), py::arg("samples") = 1000, py::arg("tol") = 1e-6);
    m.def("arclength_total",
          [](const CurveSource& c, int n) { return arclength_table(c, n).total_length(); },
          py::arg("curve"), py::arg("n") = 2000);
    m.def("reparameterize_unit_speed", &reparameterize_unit_speed, py::arg("curve"),
          py::arg("n") = 2000);

    m.def("generate",
          [](const std::string& kind, const CurveSource& c) {
              return generate(kind_from_str(kind), c);
          },
          py::arg("kind"), py::arg("curve"));
    m.def("smarandache_point",
          [](const std::string& kind, const SabbanFrame& f) {
              return to_tuple(smarandache_point(kind_from_str(kind), f).vec());
          },
          py::arg("kind"), py::arg("frame"));
    m.def("speed_ratio",
          [](const std::string& kind, double k) { return speed_ratio(kind_from_str(kind), k); },
          py::arg("kind"), py::arg("kappa_g"));
    m.def("tangent_beta",
          [](const std::string& kind, const SabbanFrame& f, double k) {
              return to_tuple(tangent_beta(kind_from_str(kind), f, k).vec());
          },
          py::arg("kind"), py::arg("frame"), py::arg("kappa_g"));
    m.def("d_beta",
          [](const std::string& kind, const SabbanFrame& f, double k) {
              return to_tuple(d_beta(kind_from_str(kind), f, k).vec());
          },
          py::arg("kind"), py::arg("frame"), py::arg("kappa_g"));
    m.def("lambda_triple_printed",
          [](const std::string& kind, double k, double kp) {
              const LambdaTriple l = lambda_triple_printed(kind_from_str(kind), k, kp);
              return py::make_tuple(l.lambda1, l.lambda2, l.lambda3);
          },
          py::arg("kind"), py::arg("kappa_g"), py::arg("kappa_g_prime"));
    m.def("lambda_triple_derived",
          [](const std::string& kind, double k, double kp) {
              const LambdaTriple l = lambda_triple_derived(kind_from_str(kind), k, kp);
              return py::make_tuple(l.lambda1, l.lambda2, l.lambda3);
          },
          py::arg("kind"), py::arg("kappa_g"), py::arg("kappa_g_prime"));
    m.def("kappa_beta_printed",
          [](const std::string& kind, double k, double kp) {
              return kappa_beta_printed(kind_from_str(kind), k, kp);
          },
          py::arg("kind"), py::arg("kappa_g"), py::arg("kappa_g_prime"));
    m.def("kappa_beta_derived",
          [](const std::string& kind, double k, double kp) {
              return kappa_beta_derived(kind_from_str(kind), k, kp);
          },
          py::arg("kind"), py::arg("kappa_g"), py::arg("kappa_g_prime"));
    m.def("kappa_beta_definitional",
          [](const std::string& kind, const CurveSource& c, double s) {
              return kappa_beta_definitional(kind_from_str(kind), c, s);
          },
          py::arg("kind"), py::arg("curve"), py::arg("s"));

    m.def(
        "erratum_report",
        [](const std::string& kind, const CurveSource& c, const std::vector<double>& samples) {
            const ErratumReport report =
                erratum_report(kind_from_str(kind), c, samples);
            py::dict out;
            out["kind"] = std::string(kind_name(report.kind));
            auto verdict = [](const FormulaVerdict& v) {
                py::dict d;
                d["formula"] = v.formula;
                d["verdict"] = v.consistent ? "CONSISTENT" : "INCONSISTENT";
                d["max_gap"] = v.max_gap;
                d["tolerance"] = v.tolerance;
                return d;
            };
            out["d_beta_verdict"] = verdict(report.d_beta_verdict);
            out["kappa_beta_verdict"] = verdict(report.kappa_beta_verdict);
            py::list rows;
            for (const ErratumSample& s : report.samples) {
                py::dict row;
                row["s"] = s.s;
                row["kappa_g"] = s.kappa_g;
                row["kappa_g_prime"] = s.kappa_g_prime;
                row["d_beta_printed"] = to_tuple(s.d_beta_printed);
                row["d_beta_definitional"] = to_tuple(s.d_beta_definitional);
                row["d_beta_gap"] = s.d_beta_gap;
                row["d_beta_printed_norm_defect"] = s.d_beta_printed_norm_defect;
                row["kappa_beta_printed"] = s.kappa_beta_printed;
                row["kappa_beta_definitional"] = s.kappa_beta_definitional;
                row["kappa_beta_gap"] = s.kappa_beta_gap;
                rows.append(row);
            }
            out["samples"] = rows;
            return out;
        },
        py::arg("kind"), py::arg("curve"), py::arg("samples"));
    m.def("erratum_sample_grid", &erratum_sample_grid, py::arg("curve"), py::arg("n") = 64);

    m.attr("__version__") = "0.1.0";
}
