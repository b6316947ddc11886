#include "sig6/selftest.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string_view>
#include <utility>

#include "sig6/core.hpp"
#include "sig6/grid.hpp"
#include "sig6/hypergeom.hpp"
#include "sig6/identities.hpp"
#include "sig6/weierstrass.hpp"

namespace sig6::selftest {

namespace {

std::string num(double value) {
  std::array<char, 32> buffer{};
  const auto result =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value, std::chars_format::general, 6);
  return {buffer.data(), result.ptr};
}

std::string at(std::string_view what, std::string_view key, double value) {
  return std::string(what) + " @ " + std::string(key) + "=" + num(value);
}

double relative_gap(double a, double b) {
  return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b));
}

// Boolean facts are recorded as 0 (holds) or 1 (fails) against threshold 0.
Check holds(std::string name, bool condition) {
  return {std::move(name), condition ? 0.0 : 1.0, 0.0};
}

constexpr std::array<double, 9> kModulusGrid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
constexpr std::array<double, 3> kFunctionModuli = {0.3, 0.6, 0.9};

}  // namespace

bool CriterionResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
}

const Check& CriterionResult::worst() const {
  auto severity = [](const Check& c) {
    if (c.threshold > 0.0) {
      return c.value / c.threshold;
    }
    return c.value > 0.0 ? HUGE_VAL : 0.0;
  };
  return *std::max_element(checks.begin(), checks.end(), [&](const Check& a, const Check& b) {
    return severity(a) < severity(b);
  });
}

CriterionResult k_route_agreement() {
  CriterionResult result{1, "five-route agreement of the complete integral K", {}};
  constexpr std::array<std::string_view, 5> kNames = {"series", "quadrature", "psi-integral",
                                                      "cubic-integral", "agm"};
  for (const double kk : kModulusGrid) {
    const Modulus modulus = Modulus::from_kk(kk);
    const std::array<double, 5> routes = {
        complete_K_series(modulus), complete_K_quadrature(modulus),
        complete_K_psi_integral(modulus), complete_K_cubic_integral(modulus),
        weierstrass::complete_K_agm(modulus)};
    const bool edge = kk == 0.1 || kk == 0.9;
    for (std::size_t i = 0; i < routes.size(); ++i) {
      for (std::size_t j = i + 1; j < routes.size(); ++j) {
        const bool singular = i == 2 || i == 3 || j == 2 || j == 3;
        const double threshold = edge && singular ? 1e-8 : 1e-9;
        result.checks.push_back({at(std::string(kNames[i]) + " vs " + std::string(kNames[j]),
                                    "kk", kk),
                                 relative_gap(routes[i], routes[j]), threshold});
      }
    }
  }
  return result;
}

CriterionResult sextic_identity() {
  CriterionResult result{2, "sextic modulus identity, series vs AGM", {}};
  const auto grid = linspace(0.02, 0.9, 45);
  const auto report = identities::verify_sextic_identity(grid, {}, 1e-9);
  for (const auto& point : report.points) {
    result.checks.push_back({at("relative residual", "x", point.x), point.residual, 1e-9});
  }
  result.checks.push_back(holds("45 grid points evaluated", report.points.size() == 45));
  return result;
}

CriterionResult bbg_parametrizations() {
  CriterionResult result{3, "Berndt-Bhargava-Garvan parametrizations", {}};
  const auto grid = linspace(0.05, 0.95, 19);
  for (const auto which : {identities::BbgForm::theorem, identities::BbgForm::corollary}) {
    const std::string label = which == identities::BbgForm::theorem ? "theorem" : "corollary";
    const auto report = identities::verify_bbg(grid, which, {}, 1e-9);
    result.checks.push_back({label + " sweep max residual", report.max_relative_residual, 1e-9});
    result.checks.push_back(holds(label + " sweep has 19 points", report.points.size() == 19));
  }

  const auto theorem = identities::bbg_theorem_point(0.5);
  const auto corollary = identities::bbg_corollary_point(0.5);
  constexpr double kAnchor = 1e-15;
  result.checks.push_back({"theorem x(1/2) = 5/8", std::fabs(theorem.x - 5.0 / 8.0), kAnchor});
  result.checks.push_back(
      {"theorem xi(1/2) = 243/343", std::fabs(theorem.xi - 243.0 / 343.0), kAnchor});
  result.checks.push_back({"corollary x(1/2) = 3/8", std::fabs(corollary.x - 3.0 / 8.0), kAnchor});
  result.checks.push_back(
      {"corollary xi(1/2) = 100/343", std::fabs(corollary.xi - 100.0 / 343.0), kAnchor});
  for (const auto& [label, pair] : {std::pair{"theorem", theorem}, std::pair{"corollary", corollary}}) {
    const double quadratic = 1.0 - pair.x + pair.x * pair.x;
    result.checks.push_back(
        {std::string(label) + " 1 - x + x^2 = 49/64", std::fabs(quadratic - 49.0 / 64.0), kAnchor});
  }
  for (const double p : grid) {
    const auto t = identities::bbg_theorem_point(p);
    const auto c = identities::bbg_corollary_point(p);
    result.checks.push_back({at("complementarity x", "p", p), std::fabs(t.x + c.x - 1.0), 1e-13});
    result.checks.push_back({at("complementarity xi", "p", p), std::fabs(t.xi + c.xi - 1.0), 1e-13});
  }
  return result;
}

CriterionResult periodicity() {
  CriterionResult result{4, "quasi-period 2K and period 4K of s and c", {}};
  for (const double kk : kFunctionModuli) {
    const Sig6Context ctx(Modulus::from_kk(kk));
    const double K = ctx.K();
    double half_shift = 0.0;
    double full_shift = 0.0;
    for (const double u : linspace(-2.0 * K, 6.0 * K, 100)) {
      const auto base = sc6(ctx, u);
      const auto half = sc6(ctx, u + 2.0 * K);
      const auto full = sc6(ctx, u + 4.0 * K);
      half_shift = std::max({half_shift, std::fabs(half.s + base.s), std::fabs(half.c + base.c)});
      full_shift = std::max({full_shift, std::fabs(full.s - base.s), std::fabs(full.c - base.c)});
    }
    result.checks.push_back({at("max |g(u+2K) + g(u)|", "kk", kk), half_shift, 1e-10});
    result.checks.push_back({at("max |g(u+4K) - g(u)|", "kk", kk), full_shift, 1e-10});
  }
  return result;
}

CriterionResult pythagorean_and_anchors() {
  CriterionResult result{5, "Pythagorean identity and boundary values", {}};
  for (const double kk : kFunctionModuli) {
    const Sig6Context ctx(Modulus::from_kk(kk));
    const double K = ctx.K();
    double worst = 0.0;
    for (const double u : linspace(-2.0 * K, 6.0 * K, 100)) {
      const auto v = sc6(ctx, u);
      worst = std::max(worst, std::fabs(v.s * v.s + v.c * v.c - 1.0));
    }
    result.checks.push_back({at("max |s^2 + c^2 - 1|", "kk", kk), worst, 1e-12});
    const auto origin = sc6(ctx, 0.0);
    const auto quarter = sc6(ctx, K);
    result.checks.push_back({at("|s(0)|", "kk", kk), std::fabs(origin.s), 1e-11});
    result.checks.push_back({at("|c(0) - 1|", "kk", kk), std::fabs(origin.c - 1.0), 1e-11});
    result.checks.push_back({at("|s(K) - 1|", "kk", kk), std::fabs(quarter.s - 1.0), 1e-11});
    result.checks.push_back({at("|c(K)|", "kk", kk), std::fabs(quarter.c), 1e-11});
  }
  return result;
}

CriterionResult inversion_round_trip() {
  CriterionResult result{6, "inversion round trip f(phi(u)) = u", {}};
  for (const double kk : kFunctionModuli) {
    const Sig6Context ctx(Modulus::from_kk(kk));
    const double K = ctx.K();
    double worst = 0.0;
    for (const double u : linspace(-3.0 * K, 3.0 * K, 100)) {
      const double back = f_incomplete(ctx, phi(ctx, u));
      worst = std::max(worst, std::fabs(back - u) / std::max(1.0, std::fabs(u)));
    }
    result.checks.push_back({at("max |f(phi(u)) - u| / max(1,|u|)", "kk", kk), worst, 1e-11});
  }
  return result;
}

CriterionResult closed_form_vs_series() {
  CriterionResult result{7, "closed form of F(1/6,5/6;1/2;z) vs series", {}};
  double worst = 0.0;
  double worst_z = 0.0;
  for (const double z : linspace(0.0, 0.99, 100)) {
    const double closed = hypergeom::f16_56_half(z);
    const double series = hypergeom::gauss_2f1_series(hypergeom::kSextic, z);
    const double gap = std::fabs(series - closed) / closed;
    if (gap > worst) {
      worst = gap;
      worst_z = z;
    }
  }
  result.checks.push_back({at("max relative gap", "z", worst_z), worst, 1e-12});
  return result;
}

CriterionResult weierstrass_suite() {
  CriterionResult result{8, "Weierstrass roots, invariants and half-period", {}};
  for (const double kk : kModulusGrid) {
    const Modulus modulus = Modulus::from_kk(kk);
    const auto data = weierstrass::build(modulus);
    const double e1 = data.e1;
    const double e2 = data.e2;
    const double e3 = data.e3;
    const double xi = kk * kk;
    result.checks.push_back({at("|e1 + e2 + e3|", "kk", kk), std::fabs(e1 + e2 + e3), 1e-14});
    result.checks.push_back(
        {at("|e2e3 + e3e1 + e1e2 + 3/4|", "kk", kk), std::fabs(e2 * e3 + e3 * e1 + e1 * e2 + 0.75),
         1e-13});
    result.checks.push_back(
        {at("|e1e2e3 - (1 - 2kk^2)/4|", "kk", kk), std::fabs(e1 * e2 * e3 - (1.0 - 2.0 * xi) / 4.0),
         1e-13});
    const double from_invariants = data.g2 * data.g2 * data.g2 - 27.0 * data.g3 * data.g3;
    result.checks.push_back({at("|g2^3 - 27 g3^2 - 108 kk^2 (1 - kk^2)|", "kk", kk),
                             std::fabs(from_invariants - 108.0 * xi * (1.0 - xi)), 1e-12});
    result.checks.push_back(holds(at("delta > 0", "kk", kk), data.delta > 0.0));
    result.checks.push_back(holds(at("e1 > e2 > e3", "kk", kk), e1 > e2 && e2 > e3));
    result.checks.push_back(
        {at("midpoint relations", "kk", kk), weierstrass::midpoint_relation_check(data), 1e-12});
    const double omega_integral = weierstrass::half_period_integral(data);
    result.checks.push_back(
        {at("|omega integral - omega AGM|", "kk", kk), std::fabs(omega_integral - data.omega), 1e-8});
    result.checks.push_back({at("K vs sqrt(3/2) omega", "kk", kk),
                             relative_gap(complete_K_series(modulus), std::sqrt(1.5) * data.omega),
                             1e-9});
  }
  return result;
}

CriterionResult modulus_map_suite() {
  CriterionResult result{9, "sextic modulus map", {}};
  const auto grid = linspace(0.01, 0.99, 50);
  int inversions = 0;
  double symmetry = 0.0;
  double previous = -1.0;
  for (const double x : grid) {
    const double xi = identities::map_x_to_xi(x).xi;
    if (!(xi > previous)) {
      ++inversions;
    }
    previous = xi;
    symmetry = std::max(symmetry, std::fabs(xi + identities::map_x_to_xi(1.0 - x).xi - 1.0));
  }
  result.checks.push_back(
      {"monotonicity violations over 50 points", static_cast<double>(inversions), 0.0});
  result.checks.push_back({"max |xi(x) + xi(1 - x) - 1|", symmetry, 1e-12});
  result.checks.push_back(
      {"|xi(1/2) - 1/2|", std::fabs(identities::map_x_to_xi(0.5).xi - 0.5), 1e-14});

  double route_gap = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double alpha = (i + 0.5) / 50.0 * 0.5 * std::numbers::pi;
    const auto pair = identities::map_via_angles(Modulus::from_alpha(alpha));
    route_gap = std::max(route_gap, std::fabs(identities::map_x_to_xi(pair.x).xi - pair.xi));
  }
  result.checks.push_back({"max |map_x_to_xi(x).xi - angle-map xi|", route_gap, 1e-12});
  return result;
}

std::vector<CriterionResult> run_all() {
  return {k_route_agreement(),   sextic_identity(),         bbg_parametrizations(),
          periodicity(),         pythagorean_and_anchors(), inversion_round_trip(),
          closed_form_vs_series(), weierstrass_suite(),     modulus_map_suite()};
}

}  // namespace sig6::selftest
