#include "sig6/identities.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sig6/error.hpp"

namespace sig6::identities {

namespace {

void require_open_unit(double value, const char* name) {
  if (!(value > 0.0 && value < 1.0)) {
    throw DomainError(std::string(name) + " must lie in (0, 1), got " + std::to_string(value));
  }
}

IdentityReport finish(std::vector<IdentityPoint> points, double threshold) {
  if (!(threshold > 0.0)) {
    throw DomainError("identity threshold must be positive");
  }
  IdentityReport report;
  report.points = std::move(points);
  report.threshold = threshold;
  for (const auto& point : report.points) {
    report.max_relative_residual = std::max(report.max_relative_residual, point.residual);
  }
  report.pass = report.max_relative_residual <= threshold;
  return report;
}

}  // namespace

double sextic_modulus_quartic(double x) {
  const double q = 1.0 - x + x * x;
  return 6.75 * x * x * (1.0 - x) * (1.0 - x) / (q * q * q);
}

ModulusPair map_x_to_xi(double x) {
  require_open_unit(x, "x");
  const double quartic = sextic_modulus_quartic(x);
  // With u = x(1 - x): 1 - Q = (1 - 2x)^2 (1 + u/2)^2 / (1 - u)^3, which keeps
  // sqrt(1 - Q) accurate near the fixed point x = 1/2.
  const double u = x * (1.0 - x);
  const double root = std::fabs(1.0 - 2.0 * x) * (1.0 + 0.5 * u) / std::pow(1.0 - u, 1.5);
  const double small = quartic / (2.0 * (1.0 + root));
  return {x, x <= 0.5 ? small : 1.0 - small};
}

ModulusPair map_via_angles(const Modulus& modulus) {
  const double beta = modulus.beta();
  const double sin_beta = std::sin(beta);
  const double x = 2.0 * sin_beta / (sin_beta + std::sqrt(3.0) * std::cos(beta));
  return {x, modulus.xi()};
}

ModulusPair bbg_theorem_point(double p) {
  require_open_unit(p, "p");
  const double cubic_base = 1.0 + p + p * p;
  const double x = p * (2.0 + p) / (1.0 + 2.0 * p);
  const double xi = 6.75 * p * p * (1.0 + p) * (1.0 + p) / (cubic_base * cubic_base * cubic_base);
  return {x, xi};
}

ModulusPair bbg_corollary_point(double p) {
  require_open_unit(p, "p");
  const double cubic_base = 1.0 + p + p * p;
  const double x = (1.0 - p * p) / (1.0 + 2.0 * p);
  const double factor = (1.0 - p) * (1.0 + 2.0 * p) * (2.0 + p);
  const double xi = 0.25 * factor * factor / (cubic_base * cubic_base * cubic_base);
  return {x, xi};
}

double bbg_shared_quadratic(double p) {
  require_open_unit(p, "p");
  const double ratio = (1.0 + p + p * p) / (1.0 + 2.0 * p);
  return ratio * ratio;
}

IdentityPoint check_identity_at(const ModulusPair& pair, const hypergeom::SeriesSpec& spec) {
  const double lhs = hypergeom::gauss_2f1_series(hypergeom::kSexticComplete, pair.xi, spec);
  const double scale = std::pow(1.0 - pair.x + pair.x * pair.x, 0.25);
  const double rhs = scale * hypergeom::f12_12_one(pair.x);
  const double residual = std::fabs(lhs - rhs) / std::max(std::fabs(rhs), 1.0);
  return {pair.x, pair.xi, lhs, rhs, residual};
}

IdentityReport verify_sextic_identity(std::span<const double> grid,
                                      const hypergeom::SeriesSpec& spec, double threshold) {
  std::vector<IdentityPoint> points;
  points.reserve(grid.size());
  for (const double x : grid) {
    points.push_back(check_identity_at(map_x_to_xi(x), spec));
  }
  return finish(std::move(points), threshold);
}

IdentityReport verify_bbg(std::span<const double> grid, BbgForm which,
                          const hypergeom::SeriesSpec& spec, double threshold) {
  std::vector<IdentityPoint> points;
  points.reserve(grid.size());
  for (const double p : grid) {
    const ModulusPair pair =
        which == BbgForm::theorem ? bbg_theorem_point(p) : bbg_corollary_point(p);
    points.push_back(check_identity_at(pair, spec));
  }
  return finish(std::move(points), threshold);
}

}  // namespace sig6::identities
