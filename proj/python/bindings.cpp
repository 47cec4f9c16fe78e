#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hermjost/config.hpp"
#include "hermjost/errors.hpp"
#include "hermjost/freeop.hpp"
#include "hermjost/jacobi.hpp"
#include "hermjost/jost.hpp"
#include "hermjost/oracle.hpp"
#include "hermjost/pipeline.hpp"
#include "hermjost/special.hpp"
#include "hermjost/verify.hpp"

namespace py = pybind11;
using namespace hermjost;

namespace {

std::vector<cplx> values(const SolutionSequence& s) { return s.values; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Jost functions and spectral densities of perturbed Hermite Jacobi matrices";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<PrecisionLoss>(m, "PrecisionLoss", base.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
    py::register_exception<IndexError>(m, "IndexError", base.ptr());
    py::register_exception<NonpositiveWeight>(m, "NonpositiveWeight", base.ptr());
    py::register_exception<NotAdmissible>(m, "NotAdmissible", base.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());

    m.def("faddeeva_w", &special::faddeeva_w, py::arg("z"));
    m.def("w_contour_oracle", &special::w_contour_oracle, py::arg("z"));
    m.def(
        "w_derivatives",
        [](cplx z, std::size_t n_max) {
            const auto t = special::w_derivative_table(z, n_max);
            return std::vector<cplx>(t.scaled_values().begin(), t.scaled_values().end());
        },
        py::arg("z"), py::arg("n_max"), "w^(k)(z) / sqrt(2^k k!) for k = 0..n_max");

    m.def(
        "i_pm",
        [](cplx lambda, std::size_t n_max, bool plus) {
            return values(freeop::i_pm(lambda, n_max, plus ? freeop::Sign::plus : freeop::Sign::minus));
        },
        py::arg("lam"), py::arg("n_max"), py::arg("plus") = true);
    m.def(
        "free_polynomials",
        [](cplx lambda, std::size_t n_max) { return values(freeop::free_polynomials(lambda, n_max)); },
        py::arg("lam"), py::arg("n_max"));
    m.def("hermite_poly", &freeop::hermite_poly, py::arg("n"), py::arg("x"));

    py::class_<jacobi::Family>(m, "Family")
        .def_static("zero", &jacobi::Family::zero)
        .def_static("power", &jacobi::Family::power, py::arg("amplitude"), py::arg("exponent"))
        .def_static("constant", &jacobi::Family::constant, py::arg("value"))
        .def_static("sqrt_shift", &jacobi::Family::sqrt_shift, py::arg("k"))
        .def_static("finite", &jacobi::Family::finite, py::arg("values"))
        .def("__call__", &jacobi::Family::operator(), py::arg("n"))
        .def("__repr__", &jacobi::Family::describe);

    py::class_<jacobi::PerturbationSpec>(m, "PerturbationSpec")
        .def_readonly("c", &jacobi::PerturbationSpec::c)
        .def_readonly("b", &jacobi::PerturbationSpec::b)
        .def_readonly("description", &jacobi::PerturbationSpec::description);
    m.def("make_spec", &jacobi::make_spec, py::arg("c"), py::arg("b"));
    m.def("free_spec", &jacobi::free_spec);

    py::class_<jacobi::JacobiOperator>(m, "JacobiOperator")
        .def_property_readonly("horizon", &jacobi::JacobiOperator::horizon)
        .def("a", &jacobi::JacobiOperator::a, py::arg("n"))
        .def("b", &jacobi::JacobiOperator::b, py::arg("n"))
        .def("is_free", &jacobi::JacobiOperator::is_free);
    m.def("build_operator", &jacobi::build_operator, py::arg("spec"),
          py::arg("horizon") = jost::default_horizon);

    py::class_<jacobi::AdmissibilityReport>(m, "AdmissibilityReport")
        .def_readonly("passes", &jacobi::AdmissibilityReport::passes)
        .def_readonly("partial_sum", &jacobi::AdmissibilityReport::partial_sum)
        .def_readonly("inconclusive", &jacobi::AdmissibilityReport::inconclusive)
        .def_readonly("diagnostic", &jacobi::AdmissibilityReport::diagnostic);
    m.def("check_conditions", &jacobi::check_conditions, py::arg("spec"), py::arg("horizon") = 1000);

    m.def(
        "jost_function", [](const jacobi::JacobiOperator& op, cplx lam, double tol) {
            return jost::jost_function(op, lam, tol).value;
        },
        py::arg("op"), py::arg("lam"), py::arg("tol") = 1e-10);
    m.def(
        "cropped_jost", [](const jacobi::JacobiOperator& op, cplx lam, double tol) {
            return jost::cropped_jost(op, lam, tol).value;
        },
        py::arg("op"), py::arg("lam"), py::arg("tol") = 1e-10);
    m.def("weyl_m", &jost::weyl_m, py::arg("op"), py::arg("lam"), py::arg("tol") = 1e-10);
    m.def("spectral_density", &jost::spectral_density, py::arg("op"), py::arg("lam"),
          py::arg("tol") = 1e-10);
    m.def(
        "density_via_limit",
        [](const jacobi::JacobiOperator& op, double lam, std::size_t n_max) {
            const auto g = jost::limit_grid(n_max);
            return jost::density_via_limit(op, lam, g).value;
        },
        py::arg("op"), py::arg("lam"), py::arg("n_max") = 4000);

    py::class_<jost::SpectralSample>(m, "SpectralSample")
        .def_readonly("lam", &jost::SpectralSample::lambda)
        .def_readonly("F", &jost::SpectralSample::F)
        .def_readonly("F1", &jost::SpectralSample::F1)
        .def_readonly("m_boundary", &jost::SpectralSample::m_boundary)
        .def_readonly("rho", &jost::SpectralSample::rho)
        .def_readonly("series_terms_used", &jost::SpectralSample::series_terms_used)
        .def_readonly("identity_residual", &jost::SpectralSample::identity_residual);
    m.def("evaluate", &jost::evaluate, py::arg("op"), py::arg("lam"), py::arg("tol") = 1e-10);

    py::class_<oracle::DiscreteMeasure>(m, "DiscreteMeasure")
        .def_readonly("nodes", &oracle::DiscreteMeasure::nodes)
        .def_readonly("weights", &oracle::DiscreteMeasure::weights)
        .def("__len__", &oracle::DiscreteMeasure::size);
    m.def("truncated_measure", &oracle::truncated_measure, py::arg("op"), py::arg("N"));
    m.def("cdf_compare", &oracle::cdf_compare, py::arg("measure"), py::arg("density"), py::arg("grid"),
          py::arg("lower") = std::nullopt);
    m.def("herglotz_quadrature", &oracle::herglotz_quadrature, py::arg("density"), py::arg("lam"),
          py::arg("lo") = -8.0, py::arg("hi") = 8.0);

    m.def(
        "run_config",
        [](const std::string& text) -> py::tuple {
            std::ostringstream out, err;
            int rc;
            try {
                rc = pipeline::run_pipeline(config::parse_config(text), out, err);
            } catch (const ConfigError& e) {
                return py::make_tuple(int{pipeline::exit_config}, std::string(), std::string(e.what()));
            }
            return py::make_tuple(rc, out.str(), err.str());
        },
        py::arg("text"), "Runs a key=value configuration; returns (exit_code, stdout, stderr).");
    m.def(
        "verify",
        [](const std::string& text) {
            py::list out;
            for (const auto& c : verify::run_all(config::parse_config(text)))
                out.append(py::make_tuple(c.name, c.passed, c.value, c.threshold));
            return out;
        },
        py::arg("text") = "");
}
