#include "sig6/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sig6/error.hpp"
#include "sig6/hypergeom.hpp"

namespace sig6::weierstrass {

namespace {
constexpr double kTwoThirdsPi = 2.0 * std::numbers::pi / 3.0;
}  // namespace

WeierstrassData build(const Modulus& modulus) {
  const double beta = modulus.beta();
  const double xi = modulus.xi();
  WeierstrassData data;
  data.g2 = 3.0;
  data.g3 = 1.0 - 2.0 * xi;
  data.delta = 108.0 * xi * (1.0 - xi);
  data.e1 = std::cos(beta);
  data.e2 = std::cos(beta - kTwoThirdsPi);
  data.e3 = std::cos(beta + kTwoThirdsPi);
  data.omega = half_period_agm(data);
  return data;
}

double classical_parameter(const WeierstrassData& data) {
  return (data.e2 - data.e3) / (data.e1 - data.e3);
}

double half_period_agm(const WeierstrassData& data) {
  if (!(data.e1 > data.e2 && data.e2 > data.e3)) {
    throw DomainError("half_period_agm requires strictly ordered roots e1 > e2 > e3");
  }
  const double m = classical_parameter(data);
  if (!(m > 0.0 && m < 1.0)) {
    throw DomainError("classical parameter (e2 - e3)/(e1 - e3) = " + std::to_string(m) +
                      " outside (0, 1)");
  }
  const double complete_first_kind = 0.5 * std::numbers::pi * hypergeom::f12_12_one(m);
  return complete_first_kind / std::sqrt(data.e1 - data.e3);
}

double half_period_integral(const WeierstrassData& data, const quadrature::QuadratureSpec& spec) {
  if (!(data.e1 > data.e2 && data.e2 > data.e3)) {
    throw DomainError("half_period_integral requires strictly ordered roots e1 > e2 > e3");
  }
  const double upper_gap = data.e1 - data.e2;
  // 4x^3 - 3x - g3 = 4 (e1 - x)(e2 - x)(x - e3) > 0 on (e3, e2)
  auto integrand = [upper_gap](double, double from_e3, double to_e2) {
    return 1.0 / std::sqrt(4.0 * (upper_gap + to_e2) * to_e2 * from_e3);
  };
  return quadrature::integrate_singular_offsets(integrand, data.e3, data.e2, spec);
}

double midpoint_relation_check(const WeierstrassData& data) {
  const double e1 = data.e1;
  const double e2 = data.e2;
  const double e3 = data.e3;
  const double squares = 2.0 * (e1 * e1 + e2 * e2 + e3 * e3) - data.g2;
  const double products = -4.0 * (e2 * e3 + e3 * e1 + e1 * e2) - data.g2;
  const double m = classical_parameter(data);
  const double spread = (e1 - e3) * (e1 - e3) * (1.0 - m + m * m) - 2.25;
  return std::max({std::fabs(squares), std::fabs(products), std::fabs(spread)});
}

double complete_K_agm(const Modulus& modulus) {
  return std::sqrt(1.5) * build(modulus).omega;
}

}  // namespace sig6::weierstrass
