#include <pybind11/pybind11.h>
#include <pybind11/functional.h>
#include <pybind11/stl.h>

#include <vector>

#include "sig6/core.hpp"
#include "sig6/error.hpp"
#include "sig6/hypergeom.hpp"
#include "sig6/identities.hpp"
#include "sig6/quadrature.hpp"
#include "sig6/selftest.hpp"
#include "sig6/weierstrass.hpp"

namespace py = pybind11;

namespace {

// Translators run newest first, so the base class is registered before its subclasses.
void register_errors(py::module_& m) {
  auto base = py::register_exception<sig6::Error>(m, "Sig6Error", PyExc_RuntimeError);
  py::register_exception<sig6::DomainError>(m, "DomainError", base);
  py::register_exception<sig6::InvalidParams>(m, "InvalidParams", base);
  py::register_exception<sig6::NonConvergence>(m, "NonConvergence", base);
  py::register_exception<sig6::ToleranceNotMet>(m, "ToleranceNotMet", base);
  py::register_exception<sig6::NonFiniteValue>(m, "NonFiniteValue", base);
  py::register_exception<sig6::NoConvergence>(m, "NoConvergence", base);
}

}  // namespace

PYBIND11_MODULE(_sig6, m) {
  m.doc() = "Signature-six hypergeometric toolkit";
  register_errors(m);

  py::class_<sig6::hypergeom::SeriesSpec>(m, "SeriesSpec")
      .def(py::init<>())
      .def(py::init([](double relative_tolerance, std::int64_t max_terms) {
             return sig6::hypergeom::SeriesSpec{relative_tolerance, max_terms};
           }),
           py::arg("relative_tolerance") = 1e-14, py::arg("max_terms") = 2'000'000)
      .def_readwrite("relative_tolerance", &sig6::hypergeom::SeriesSpec::relative_tolerance)
      .def_readwrite("max_terms", &sig6::hypergeom::SeriesSpec::max_terms);

  py::class_<sig6::quadrature::QuadratureSpec>(m, "QuadratureSpec")
      .def(py::init<>())
      .def(py::init([](double absolute_tolerance, int max_refinements) {
             return sig6::quadrature::QuadratureSpec{absolute_tolerance, max_refinements};
           }),
           py::arg("absolute_tolerance") = 1e-12, py::arg("max_refinements") = 30)
      .def_readwrite("absolute_tolerance", &sig6::quadrature::QuadratureSpec::absolute_tolerance)
      .def_readwrite("max_refinements", &sig6::quadrature::QuadratureSpec::max_refinements);

  // hypergeom
  m.def(
      "gauss_2f1_series",
      [](double a, double b, double c, double z, const sig6::hypergeom::SeriesSpec& spec) {
        return sig6::hypergeom::gauss_2f1_series({a, b, c}, z, spec);
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"),
      py::arg("spec") = sig6::hypergeom::SeriesSpec{});
  m.def("f16_56_half", py::overload_cast<double>(&sig6::hypergeom::f16_56_half), py::arg("z"));
  m.def("f12_12_one", &sig6::hypergeom::f12_12_one, py::arg("m"));
  m.def("wallis_integral", &sig6::hypergeom::wallis_integral, py::arg("n"));

  // quadrature
  m.def(
      "integrate_smooth",
      [](const std::function<double(double)>& fn, double a, double b,
         const sig6::quadrature::QuadratureSpec& spec) {
        return sig6::quadrature::integrate_smooth(fn, a, b, spec);
      },
      py::arg("fn"), py::arg("a"), py::arg("b"),
      py::arg("spec") = sig6::quadrature::QuadratureSpec{});
  m.def(
      "integrate_singular",
      [](const std::function<double(double)>& fn, double a, double b,
         const sig6::quadrature::QuadratureSpec& spec) {
        return sig6::quadrature::integrate_singular(fn, a, b, spec);
      },
      py::arg("fn"), py::arg("a"), py::arg("b"),
      py::arg("spec") = sig6::quadrature::QuadratureSpec{});

  // core
  py::class_<sig6::Modulus>(m, "Modulus")
      .def(py::init(&sig6::Modulus::from_kk), py::arg("kk"))
      .def_static("from_kk", &sig6::Modulus::from_kk, py::arg("kk"))
      .def_static("from_alpha", &sig6::Modulus::from_alpha, py::arg("alpha"))
      .def_property_readonly("kk", &sig6::Modulus::kk)
      .def_property_readonly("alpha", &sig6::Modulus::alpha)
      .def_property_readonly("beta", &sig6::Modulus::beta)
      .def_property_readonly("xi", &sig6::Modulus::xi)
      .def("__repr__", [](const sig6::Modulus& mod) {
        return "Modulus(kk=" + std::to_string(mod.kk()) + ")";
      });

  py::class_<sig6::Sig6Context>(m, "Sig6Context")
      .def(py::init<const sig6::Modulus&, sig6::hypergeom::SeriesSpec,
                    sig6::quadrature::QuadratureSpec>(),
           py::arg("modulus"), py::arg("series_spec") = sig6::hypergeom::SeriesSpec{},
           py::arg("quad_spec") = sig6::quadrature::QuadratureSpec{})
      .def_property_readonly("modulus", &sig6::Sig6Context::modulus)
      .def_property_readonly("K", &sig6::Sig6Context::K)
      .def("f", [](const sig6::Sig6Context& ctx, double T) { return sig6::f_incomplete(ctx, T); },
           py::arg("T"))
      .def("phi", [](const sig6::Sig6Context& ctx, double u) { return sig6::phi(ctx, u); },
           py::arg("u"))
      .def("s6", [](const sig6::Sig6Context& ctx, double u) { return sig6::s6(ctx, u); },
           py::arg("u"))
      .def("c6", [](const sig6::Sig6Context& ctx, double u) { return sig6::c6(ctx, u); },
           py::arg("u"));

  m.def("f_incomplete", &sig6::f_incomplete, py::arg("ctx"), py::arg("T"));
  m.def("phi", &sig6::phi, py::arg("ctx"), py::arg("u"));
  m.def("s6", &sig6::s6, py::arg("ctx"), py::arg("u"));
  m.def("c6", &sig6::c6, py::arg("ctx"), py::arg("u"));
  m.def("complete_K_series", &sig6::complete_K_series, py::arg("modulus"),
        py::arg("spec") = sig6::hypergeom::SeriesSpec{});
  m.def("complete_K_quadrature", &sig6::complete_K_quadrature, py::arg("modulus"),
        py::arg("spec") = sig6::quadrature::QuadratureSpec{});
  m.def("complete_K_psi_integral", &sig6::complete_K_psi_integral, py::arg("modulus"),
        py::arg("spec") = sig6::quadrature::QuadratureSpec{});
  m.def("complete_K_cubic_integral", &sig6::complete_K_cubic_integral, py::arg("modulus"),
        py::arg("spec") = sig6::quadrature::QuadratureSpec{});
  m.def("complete_K_agm", &sig6::weierstrass::complete_K_agm, py::arg("modulus"));

  // weierstrass
  using sig6::weierstrass::WeierstrassData;
  py::class_<WeierstrassData>(m, "WeierstrassData")
      .def_readonly("g2", &WeierstrassData::g2)
      .def_readonly("g3", &WeierstrassData::g3)
      .def_readonly("delta", &WeierstrassData::delta)
      .def_readonly("e1", &WeierstrassData::e1)
      .def_readonly("e2", &WeierstrassData::e2)
      .def_readonly("e3", &WeierstrassData::e3)
      .def_readonly("omega", &WeierstrassData::omega);
  m.def("weierstrass_build", &sig6::weierstrass::build, py::arg("modulus"));
  m.def("half_period_agm", &sig6::weierstrass::half_period_agm, py::arg("data"));
  m.def("half_period_integral", &sig6::weierstrass::half_period_integral, py::arg("data"),
        py::arg("spec") = sig6::quadrature::QuadratureSpec{});
  m.def("midpoint_relation_check", &sig6::weierstrass::midpoint_relation_check, py::arg("data"));

  // identities
  using namespace sig6::identities;
  py::class_<ModulusPair>(m, "ModulusPair")
      .def_readonly("x", &ModulusPair::x)
      .def_readonly("xi", &ModulusPair::xi)
      .def("__iter__", [](const ModulusPair& p) { return py::iter(py::make_tuple(p.x, p.xi)); });
  py::class_<IdentityPoint>(m, "IdentityPoint")
      .def_readonly("x", &IdentityPoint::x)
      .def_readonly("xi", &IdentityPoint::xi)
      .def_readonly("lhs", &IdentityPoint::lhs)
      .def_readonly("rhs", &IdentityPoint::rhs)
      .def_readonly("residual", &IdentityPoint::residual);
  py::class_<IdentityReport>(m, "IdentityReport")
      .def_readonly("points", &IdentityReport::points)
      .def_readonly("max_relative_residual", &IdentityReport::max_relative_residual)
      .def_readonly("threshold", &IdentityReport::threshold)
      .def_readonly("passed", &IdentityReport::pass);
  m.def("map_x_to_xi", &map_x_to_xi, py::arg("x"));
  m.def("map_via_angles", &map_via_angles, py::arg("modulus"));
  m.def("bbg_theorem_point", &bbg_theorem_point, py::arg("p"));
  m.def("bbg_corollary_point", &bbg_corollary_point, py::arg("p"));
  m.def(
      "verify_sextic_identity",
      [](const std::vector<double>& grid, const sig6::hypergeom::SeriesSpec& spec,
         double threshold) { return verify_sextic_identity(grid, spec, threshold); },
      py::arg("grid"), py::arg("spec") = sig6::hypergeom::SeriesSpec{},
      py::arg("threshold") = 1e-9);
  m.def(
      "verify_bbg",
      [](const std::vector<double>& grid, const std::string& which,
         const sig6::hypergeom::SeriesSpec& spec, double threshold) {
        if (which != "theorem" && which != "corollary") {
          throw sig6::DomainError("which must be 'theorem' or 'corollary'");
        }
        return verify_bbg(grid, which == "theorem" ? BbgForm::theorem : BbgForm::corollary, spec,
                          threshold);
      },
      py::arg("grid"), py::arg("which") = "theorem",
      py::arg("spec") = sig6::hypergeom::SeriesSpec{}, py::arg("threshold") = 1e-9);

  // self-test
  py::class_<sig6::selftest::Check>(m, "Check")
      .def_readonly("name", &sig6::selftest::Check::name)
      .def_readonly("value", &sig6::selftest::Check::value)
      .def_readonly("threshold", &sig6::selftest::Check::threshold);
  py::class_<sig6::selftest::CriterionResult>(m, "CriterionResult")
      .def_readonly("id", &sig6::selftest::CriterionResult::id)
      .def_readonly("title", &sig6::selftest::CriterionResult::title)
      .def_readonly("checks", &sig6::selftest::CriterionResult::checks)
      .def_property_readonly("passed", &sig6::selftest::CriterionResult::pass);
  m.def("self_test", &sig6::selftest::run_all);
}
