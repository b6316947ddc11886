#pragma once

#include <cstdint>

namespace sig6::hypergeom {

/// Truncation control for the Gauss series.
struct SeriesSpec {
  double relative_tolerance = 1e-14;
  std::int64_t max_terms = 2'000'000;

  /// Throws InvalidParams unless 0 < relative_tolerance < 1 and max_terms >= 1.
  void validate() const;
};

/// Parameters (a, b; c) of 2F1(a, b; c; z).
struct HyperParams {
  double a;
  double b;
  double c;

  /// Throws InvalidParams when c is zero or a negative integer.
  void validate() const;
};

/// The three parameter triples the signature-six theory works with.
inline constexpr HyperParams kSextic{1.0 / 6.0, 5.0 / 6.0, 0.5};
inline constexpr HyperParams kSexticComplete{1.0 / 6.0, 5.0 / 6.0, 1.0};
inline constexpr HyperParams kClassical{0.5, 0.5, 1.0};

/// Sum of the hypergeometric series for |z| < 1.
///
/// Terms follow the ratio recurrence
///   t[n+1] = t[n] (a+n)(b+n) z / ((c+n)(1+n))
/// and are accumulated with compensated summation. Summation stops once both
/// the latest term and a geometric bound on the remaining tail fall below
/// relative_tolerance times the partial sum.
///
/// Throws DomainError for |z| >= 1, InvalidParams for an inadmissible c and
/// NonConvergence when max_terms is reached first.
double gauss_2f1_series(const HyperParams& params, double z, const SeriesSpec& spec = {});

/// F(1/6, 5/6; 1/2; z) from the closed form cos(2psi/3) / cos(psi) with
/// sin^2(psi) = z. Requires 0 <= z < 1; throws DomainError otherwise.
double f16_56_half(double z);

/// Same value, with the complement 1 - z supplied by the caller. Use when
/// 1 - z is available more accurately than by subtraction.
double f16_56_half(double z, double one_minus_z);

/// F(1/2, 1/2; 1; m) = 1 / AGM(1, sqrt(1 - m)) for 0 <= m < 1.
double f12_12_one(double m);

/// Arithmetic-geometric mean of two positive numbers.
double agm(double a, double g);

/// Integral of sin^{2n}(t) over [0, pi/2], i.e. (pi/2) (2n)! / (2^n n!)^2.
double wallis_integral(std::int64_t n);

}  // namespace sig6::hypergeom
