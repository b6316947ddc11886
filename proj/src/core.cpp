#include "sig6/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sig6/error.hpp"
#include "sig6/weierstrass.hpp"

namespace sig6 {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr int kMaxInversionIterations = 100;

// Incomplete integral over [0, T] for |T| <= pi/2 (or slightly beyond).
double f_reduced(const Sig6Context& ctx, double T) {
  const double magnitude = std::fabs(T);
  const Modulus& modulus = ctx.modulus();
  const double value = quadrature::integrate_smooth(
      [&modulus](double t) { return sextic_integrand(modulus, t); }, 0.0, magnitude,
      ctx.quad_spec());
  return std::copysign(value, T);
}

// Solves f(T) = target for 0 <= target <= K (up to rounding).
double invert_reduced(const Sig6Context& ctx, double target, double tolerance) {
  if (target == 0.0) {
    return 0.0;
  }
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  double lo = 0.0;
  double hi = kHalfPi + 1e-3;
  double T = std::clamp(target / ctx.K() * kHalfPi, lo, hi);
  for (int iteration = 0; iteration < kMaxInversionIterations; ++iteration) {
    const double residual = f_reduced(ctx, T) - target;
    if (std::fabs(residual) <= tolerance) {
      return T;
    }
    if (residual < 0.0) {
      lo = T;
    } else {
      hi = T;
    }
    double next = T - residual / sextic_integrand(ctx.modulus(), T);
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    if (std::fabs(next - T) <= 2.0 * kEps * std::max(1.0, T)) {
      return next;
    }
    T = next;
  }
  throw NoConvergence("phi: inversion did not converge for u = " + std::to_string(target));
}

}  // namespace

Modulus Modulus::from_kk(double kk) {
  if (!(kk > 0.0 && kk < 1.0)) {
    throw DomainError("modulus kk must lie in (0, 1), got " + std::to_string(kk));
  }
  return Modulus(kk, std::asin(kk));
}

Modulus Modulus::from_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < kHalfPi)) {
    throw DomainError("modular angle must lie in (0, pi/2), got " + std::to_string(alpha));
  }
  const double kk = std::sin(alpha);
  if (!(kk < 1.0)) {
    throw DomainError("modular angle rounds to kk = 1");
  }
  return Modulus(kk, alpha);
}

double sextic_integrand(const Modulus& modulus, double t) {
  const double s = std::sin(t);
  const double c = std::cos(t);
  const double kk = modulus.kk();
  // 1 - xi sin^2 t = (1 - kk)(1 + kk) + xi cos^2 t, free of cancellation near kk = 1
  const double complement = (1.0 - kk) * (1.0 + kk) + modulus.xi() * c * c;
  return hypergeom::f16_56_half(modulus.xi() * s * s, complement);
}

double complete_K_series(const Modulus& modulus, const hypergeom::SeriesSpec& spec) {
  return kHalfPi * hypergeom::gauss_2f1_series(hypergeom::kSexticComplete, modulus.xi(), spec);
}

double complete_K_quadrature(const Modulus& modulus, const quadrature::QuadratureSpec& spec) {
  return quadrature::integrate_smooth([&modulus](double t) { return sextic_integrand(modulus, t); },
                                      0.0, kHalfPi, spec);
}

double complete_K_psi_integral(const Modulus& modulus, const quadrature::QuadratureSpec& spec) {
  if (!(modulus.kk() > kMinModulus)) {
    throw DomainError("psi-integral route needs kk > 1e-6");
  }
  const double alpha = modulus.alpha();
  // cos 2psi - cos 2alpha = 2 sin(alpha + psi) sin(alpha - psi)
  auto integrand = [alpha](double psi, double, double to_alpha) {
    const double gap = 2.0 * std::sin(2.0 * alpha - to_alpha) * std::sin(to_alpha);
    return std::cos(2.0 * psi / 3.0) / std::sqrt(gap);
  };
  return std::sqrt(2.0) * quadrature::integrate_singular_offsets(integrand, 0.0, alpha, spec);
}

CubicLimits cubic_integral_limits(const Modulus& modulus) {
  const double alpha = modulus.alpha();
  return {std::cos(2.0 * (kPi + alpha) / 3.0), std::cos(2.0 * (kPi - alpha) / 3.0)};
}

double complete_K_cubic_integral(const Modulus& modulus, const quadrature::QuadratureSpec& spec) {
  const auto [lower, upper] = cubic_integral_limits(modulus);
  // The cubic is expanded about whichever limit is nearer, where it vanishes:
  //   p(lower + d) = d (p'(lower) + d (12 lower + 4d))
  //   p(upper - d) = d (-p'(upper) + d (12 upper - 4d))
  const double slope_lower = 12.0 * lower * lower - 3.0;
  const double slope_upper = 12.0 * upper * upper - 3.0;
  auto integrand = [=](double, double from_lower, double to_upper) {
    double cubic = 0.0;
    if (from_lower <= to_upper) {
      const double d = from_lower;
      cubic = d * (slope_lower + d * (12.0 * lower + 4.0 * d));
    } else {
      const double d = to_upper;
      cubic = d * (-slope_upper + d * (12.0 * upper - 4.0 * d));
    }
    if (!(cubic > 0.0)) {
      return std::numeric_limits<double>::quiet_NaN();
    }
    return 1.0 / std::sqrt(cubic);
  };
  return std::sqrt(1.5) * quadrature::integrate_singular_offsets(integrand, lower, upper, spec);
}

Sig6Context::Sig6Context(const Modulus& modulus, hypergeom::SeriesSpec series_spec,
                         quadrature::QuadratureSpec quad_spec)
    : modulus_(modulus), series_spec_(series_spec), quad_spec_(quad_spec), K_(0.0) {
  if (!(modulus.kk() >= kMinModulus && modulus.kk() <= kMaxModulus)) {
    throw DomainError("modulus kk = " + std::to_string(modulus.kk()) +
                      " outside the admissible range [1e-6, 1 - 1e-6]");
  }
  series_spec_.validate();
  quad_spec_.validate();
  try {
    K_ = complete_K_series(modulus_, series_spec_);
  } catch (const NonConvergence&) {
    // Only reachable for kk within about 1e-5 of 1 under the default budget.
    K_ = weierstrass::complete_K_agm(modulus_);
  }
  if (!(std::isfinite(K_) && K_ > kHalfPi)) {
    throw NonFiniteValue("complete integral K is not a finite value above pi/2");
  }
}

double f_incomplete(const Sig6Context& ctx, double T) {
  if (!std::isfinite(T)) {
    throw DomainError("f_incomplete requires finite T");
  }
  const double turns = std::nearbyint(T / kPi);
  const double reduced = T - turns * kPi;
  return 2.0 * turns * ctx.K() + f_reduced(ctx, reduced);
}

double phi(const Sig6Context& ctx, double u) {
  if (!std::isfinite(u)) {
    throw DomainError("phi requires finite u");
  }
  const double turns = std::nearbyint(u / (2.0 * ctx.K()));
  const double reduced = u - 2.0 * turns * ctx.K();
  const double tolerance = 1e-13 * std::max(1.0, std::fabs(u));
  const double T = invert_reduced(ctx, std::fabs(reduced), tolerance);
  return turns * kPi + std::copysign(T, reduced);
}

SineCosine sc6(const Sig6Context& ctx, double u) {
  const double angle = phi(ctx, u);
  return {std::sin(angle), std::cos(angle)};
}

double s6(const Sig6Context& ctx, double u) { return std::sin(phi(ctx, u)); }

double c6(const Sig6Context& ctx, double u) { return std::cos(phi(ctx, u)); }

}  // namespace sig6
