#include "sig6/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sig6/error.hpp"
#include "sig6/summation.hpp"

namespace sig6::quadrature {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Kronrod abscissae on [0, 1]; odd entries (1, 3, 5) are the Gauss 7-point nodes.
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
  double kronrod;
  double gauss;
  double magnitude;  // integral of |fn|, for the rounding floor
};

PanelEstimate gauss_kronrod_15(const Integrand& fn, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f_center = fn(center);
  double kronrod = kKronrodWeights[7] * f_center;
  double gauss = kGaussWeights[3] * f_center;
  double magnitude = kKronrodWeights[7] * std::fabs(f_center);
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double pair = fn(center - dx) + fn(center + dx);
    kronrod += kKronrodWeights[j] * pair;
    magnitude += kKronrodWeights[j] * std::fabs(pair);
    if (j % 2 == 1) {
      gauss += kGaussWeights[j / 2] * pair;
    }
  }
  return {kronrod * half, gauss * half, magnitude * std::fabs(half)};
}

double adapt(const Integrand& fn, double a, double b, double tolerance, int depth,
             int max_depth) {
  const PanelEstimate estimate = gauss_kronrod_15(fn, a, b);
  if (!std::isfinite(estimate.kronrod)) {
    throw NonFiniteValue("integrate_smooth: non-finite integrand on [" + std::to_string(a) +
                         ", " + std::to_string(b) + "]");
  }
  const double error = std::fabs(estimate.kronrod - estimate.gauss);
  if (error <= tolerance || error <= 50.0 * kEps * estimate.magnitude) {
    return estimate.kronrod;
  }
  if (depth >= max_depth) {
    throw ToleranceNotMet("integrate_smooth: refinement budget exhausted near [" +
                          std::to_string(a) + ", " + std::to_string(b) + "]");
  }
  const double mid = 0.5 * (a + b);
  return adapt(fn, a, mid, 0.5 * tolerance, depth + 1, max_depth) +
         adapt(fn, mid, b, 0.5 * tolerance, depth + 1, max_depth);
}

constexpr int kMaxTanhSinhLevels = 16;
constexpr double kTanhSinhRange = 6.0;  // beyond this the complement underflows

}  // namespace

void QuadratureSpec::validate() const {
  if (!(absolute_tolerance > 0.0)) {
    throw DomainError("quadrature absolute_tolerance must be positive");
  }
  if (max_refinements < 1) {
    throw DomainError("quadrature max_refinements must be at least 1");
  }
}

double integrate_smooth(const Integrand& fn, double a, double b, const QuadratureSpec& spec) {
  spec.validate();
  if (!(a <= b)) {
    throw DomainError("integrate_smooth requires a <= b");
  }
  if (a == b) {
    return 0.0;
  }
  return adapt(fn, a, b, spec.absolute_tolerance, 0, spec.max_refinements);
}

double integrate_singular_offsets(const OffsetIntegrand& fn, double a, double b,
                                  const QuadratureSpec& spec) {
  spec.validate();
  if (!(a < b)) {
    throw DomainError("integrate_singular requires a < b");
  }
  const double half = 0.5 * (b - a);
  const double endpoint_guard =
      10.0 * kEps * std::max({std::fabs(a), std::fabs(b), b - a});

  auto evaluate = [&](double x, double from_a, double to_b) {
    const double value = fn(x, from_a, to_b);
    if (std::isfinite(value)) {
      return value;
    }
    if (std::min(from_a, to_b) <= endpoint_guard) {
      return 0.0;
    }
    throw NonFiniteValue("integrate_singular: non-finite integrand at x = " + std::to_string(x));
  };

  // Contribution of the symmetric node pair at t > 0 (weight excludes the step).
  auto node_pair = [&](double t) {
    const double s = 0.5 * std::numbers::pi * std::sinh(t);
    // complement = 1 - tanh(s), computed without cancellation
    const double complement = 2.0 / (std::exp(2.0 * s) + 1.0);
    if (complement == 0.0 || half * complement == 0.0) {
      return 0.0;
    }
    const double weight =
        0.5 * std::numbers::pi * std::cosh(t) * complement * (2.0 - complement) * half;
    const double near = half * complement;
    const double far = half * (2.0 - complement);
    const double left = evaluate(a + near, near, far);
    const double right = evaluate(b - near, far, near);
    return weight * (left + right);
  };

  CompensatedSum sum(0.5 * std::numbers::pi * half * evaluate(a + half, half, half));
  for (int k = 1; k <= static_cast<int>(kTanhSinhRange); ++k) {
    sum += node_pair(static_cast<double>(k));
  }
  double step = 1.0;
  double estimate = sum.value() * step;

  const int max_level = std::min(spec.max_refinements, kMaxTanhSinhLevels);
  for (int level = 1; level <= max_level; ++level) {
    step *= 0.5;
    for (double t = step; t <= kTanhSinhRange; t += 2.0 * step) {
      sum += node_pair(t);
    }
    const double refined = sum.value() * step;
    const double change = std::fabs(refined - estimate);
    estimate = refined;
    if (level >= 3 && (change <= spec.absolute_tolerance || change <= 4.0 * kEps * std::fabs(refined))) {
      return estimate;
    }
  }
  throw ToleranceNotMet("integrate_singular: no convergence on (" + std::to_string(a) + ", " +
                        std::to_string(b) + ") after " + std::to_string(max_level) + " levels");
}

double integrate_singular(const Integrand& fn, double a, double b, const QuadratureSpec& spec) {
  // Nodes whose abscissa rounds onto an endpoint contribute nothing.
  return integrate_singular_offsets(
      [&fn, a, b](double x, double, double) { return (x <= a || x >= b) ? 0.0 : fn(x); }, a, b,
      spec);
}

}  // namespace sig6::quadrature
