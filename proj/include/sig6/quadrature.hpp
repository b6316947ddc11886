#pragma once

#include <functional>

namespace sig6::quadrature {

struct QuadratureSpec {
  double absolute_tolerance = 1e-12;
  int max_refinements = 30;

  /// Throws DomainError unless absolute_tolerance > 0 and max_refinements >= 1.
  void validate() const;
};

using Integrand = std::function<double(double)>;

/// Integrand that also receives the exact offsets of the node from both
/// endpoints: fn(x, x - a, b - x). Endpoint-singular integrands should build
/// their singular factor from the offsets, which carry full relative
/// precision even where x itself has rounded onto the endpoint.
using OffsetIntegrand = std::function<double(double, double, double)>;

/// Adaptive Gauss-Kronrod (7/15) integration by recursive bisection.
///
/// A panel is accepted when |K15 - G7| is within its share of the absolute
/// tolerance (proportional to its width). Panels are visited depth-first,
/// left to right, so results are bit-reproducible. Requires a <= b; throws
/// ToleranceNotMet if a panel would need more than max_refinements bisections.
double integrate_smooth(const Integrand& fn, double a, double b, const QuadratureSpec& spec = {});

/// Tanh-sinh (double exponential) integration over the open interval (a, b).
///
/// Levels halve the step until two consecutive estimates differ by at most
/// absolute_tolerance. The integrand is never evaluated at a or b; non-finite
/// values within 10 machine epsilons of an endpoint count as zero, elsewhere
/// they raise NonFiniteValue. At most min(max_refinements, 16) levels.
double integrate_singular(const Integrand& fn, double a, double b, const QuadratureSpec& spec = {});

/// As above, for integrands written in terms of endpoint offsets.
double integrate_singular_offsets(const OffsetIntegrand& fn, double a, double b,
                                  const QuadratureSpec& spec = {});

}  // namespace sig6::quadrature
