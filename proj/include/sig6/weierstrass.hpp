#pragma once

#include "sig6/core.hpp"
#include "sig6/quadrature.hpp"

namespace sig6::weierstrass {

/// Real data of the Weierstrass function with invariants g2 = 3 and
/// g3 = 1 - 2kk^2: discriminant, ordered roots of 4x^3 - 3x - g3 and the
/// positive fundamental half-period.
struct WeierstrassData {
  double g2 = 3.0;
  double g3 = 0.0;
  double delta = 0.0;
  double e1 = 0.0;
  double e2 = 0.0;
  double e3 = 0.0;
  double omega = 0.0;
};

/// Roots from the closed forms e1 = cos(beta), e2 = cos(beta - 2pi/3),
/// e3 = cos(beta + 2pi/3); omega from half_period_agm.
WeierstrassData build(const Modulus& modulus);

/// (e2 - e3) / (e1 - e3), the classical parameter m = k^2.
double classical_parameter(const WeierstrassData& data);

/// omega = K(m) / sqrt(e1 - e3) with K(m) = (pi/2) F(1/2, 1/2; 1; m) via AGM.
/// Throws DomainError unless 0 < m < 1.
double half_period_agm(const WeierstrassData& data);

/// omega = int_{e3}^{e2} dx / sqrt(4x^3 - 3x - g3), by tanh-sinh on the
/// factored cubic 4(x - e1)(x - e2)(x - e3).
double half_period_integral(const WeierstrassData& data,
                            const quadrature::QuadratureSpec& spec = {});

/// Largest absolute residual among
///   2(e1^2 + e2^2 + e3^2) - g2,  -4(e2e3 + e3e1 + e1e2) - g2,
///   (e1 - e3)^2 (1 - m + m^2) - 9/4.
double midpoint_relation_check(const WeierstrassData& data);

/// K = sqrt(3/2) * omega, omega from the AGM.
double complete_K_agm(const Modulus& modulus);

}  // namespace sig6::weierstrass
