#pragma once

#include "sig6/hypergeom.hpp"
#include "sig6/quadrature.hpp"

namespace sig6 {

/// Smallest and largest modulus accepted by Sig6Context and the CLI.
inline constexpr double kMinModulus = 1e-6;
inline constexpr double kMaxModulus = 1.0 - 1e-6;

/// Signature-six modulus kk in (0, 1) together with its derived angles.
///
///   kk = sin(alpha),  3 beta = 2 alpha,  xi = kk^2.
///
/// beta and xi are always derived from the stored alpha / kk, never set
/// independently.
class Modulus {
 public:
  /// Throws DomainError unless 0 < kk < 1.
  static Modulus from_kk(double kk);
  /// Throws DomainError unless 0 < alpha < pi/2.
  static Modulus from_alpha(double alpha);

  [[nodiscard]] double kk() const { return kk_; }
  [[nodiscard]] double alpha() const { return alpha_; }
  [[nodiscard]] double beta() const { return 2.0 * alpha_ / 3.0; }
  [[nodiscard]] double xi() const { return kk_ * kk_; }

 private:
  Modulus(double kk, double alpha) : kk_(kk), alpha_(alpha) {}

  double kk_;
  double alpha_;
};

/// Integrand of the incomplete integral: F(1/6, 5/6; 1/2; xi sin^2 t).
double sextic_integrand(const Modulus& modulus, double t);

/// K = (pi/2) F(1/6, 5/6; 1; kk^2), summing the series.
double complete_K_series(const Modulus& modulus, const hypergeom::SeriesSpec& spec = {});

/// K = f(pi/2), integrating the closed-form integrand over [0, pi/2].
double complete_K_quadrature(const Modulus& modulus, const quadrature::QuadratureSpec& spec = {});

/// K = sqrt(2) * int_0^alpha cos(2psi/3) / sqrt(cos 2psi - cos 2alpha) dpsi.
/// Throws DomainError for kk <= kMinModulus (the interval collapses).
double complete_K_psi_integral(const Modulus& modulus,
                               const quadrature::QuadratureSpec& spec = {});

/// K = sqrt(3/2) * int dx / sqrt(4x^3 - 3x - (1 - 2kk^2)) between
/// cos(2(pi + alpha)/3) and cos(2(pi - alpha)/3).
double complete_K_cubic_integral(const Modulus& modulus,
                                 const quadrature::QuadratureSpec& spec = {});

/// Lower and upper limits of the cubic integral (the roots e3 and e2).
struct CubicLimits {
  double lower;
  double upper;
};
CubicLimits cubic_integral_limits(const Modulus& modulus);

/// Evaluation handle for f, phi, s and c at a fixed modulus. Immutable; safe
/// to share between threads.
class Sig6Context {
 public:
  /// Computes K through the series route. Throws DomainError if kk lies
  /// outside [kMinModulus, kMaxModulus].
  explicit Sig6Context(const Modulus& modulus, hypergeom::SeriesSpec series_spec = {},
                       quadrature::QuadratureSpec quad_spec = {});

  [[nodiscard]] const Modulus& modulus() const { return modulus_; }
  [[nodiscard]] double K() const { return K_; }
  [[nodiscard]] const hypergeom::SeriesSpec& series_spec() const { return series_spec_; }
  [[nodiscard]] const quadrature::QuadratureSpec& quad_spec() const { return quad_spec_; }

 private:
  Modulus modulus_;
  hypergeom::SeriesSpec series_spec_;
  quadrature::QuadratureSpec quad_spec_;
  double K_;
};

/// f(T) = int_0^T F(1/6, 5/6; 1/2; kk^2 sin^2 t) dt.
///
/// T is reduced to [-pi/2, pi/2] with f(T + n pi) = f(T) + 2nK, so the
/// quadrature never spans more than a quarter period.
double f_incomplete(const Sig6Context& ctx, double T);

/// Inverse of f. Reduced to [-K, K] through phi(u + 2nK) = n pi + phi(u),
/// then solved by Newton's method safeguarded with bisection on
/// [-pi/2, pi/2]. Throws NoConvergence after 100 iterations.
double phi(const Sig6Context& ctx, double u);

/// s = sin o phi, odd, with s(K) = 1.
double s6(const Sig6Context& ctx, double u);
/// c = cos o phi, even, with c(K) = 0.
double c6(const Sig6Context& ctx, double u);

/// sin and cos of one phi evaluation.
struct SineCosine {
  double s;
  double c;
};
SineCosine sc6(const Sig6Context& ctx, double u);

}  // namespace sig6
