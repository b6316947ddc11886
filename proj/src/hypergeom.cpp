#include "sig6/hypergeom.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "sig6/error.hpp"
#include "sig6/summation.hpp"

namespace sig6::hypergeom {

void SeriesSpec::validate() const {
  if (!(relative_tolerance > 0.0 && relative_tolerance < 1.0)) {
    throw InvalidParams("series relative_tolerance must lie in (0, 1)");
  }
  if (max_terms < 1) {
    throw InvalidParams("series max_terms must be at least 1");
  }
}

void HyperParams::validate() const {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw InvalidParams("hypergeometric parameters must be finite");
  }
  if (c <= 0.0 && c == std::nearbyint(c)) {
    throw InvalidParams("hypergeometric parameter c must not be zero or a negative integer, got " +
                        std::to_string(c));
  }
}

double gauss_2f1_series(const HyperParams& params, double z, const SeriesSpec& spec) {
  params.validate();
  spec.validate();
  if (!(std::fabs(z) < 1.0)) {
    throw DomainError("gauss_2f1_series requires |z| < 1, got z = " + std::to_string(z));
  }

  CompensatedSum sum(1.0);
  double term = 1.0;
  const double abs_z = std::fabs(z);
  for (std::int64_t n = 0; n < spec.max_terms; ++n) {
    const double k = static_cast<double>(n);
    const double ratio = (params.a + k) * (params.b + k) * z / ((params.c + k) * (1.0 + k));
    const double next = term * ratio;
    if (next == 0.0) {
      return sum.value();  // terminating series or underflow
    }
    sum += next;
    term = next;

    // The term ratio tends to z; once it is below one, term * rho / (1 - rho)
    // with rho = max(|ratio|, |z|) estimates what is left of the tail.
    const double k1 = k + 1.0;
    const double following =
        std::fabs((params.a + k1) * (params.b + k1) * z / ((params.c + k1) * (1.0 + k1)));
    if (following < 1.0) {
      const double rho = std::fmax(following, abs_z);
      const double bound = spec.relative_tolerance * std::fabs(sum.value());
      const double tail = std::fabs(term) * rho / (1.0 - rho);
      if (std::fabs(term) <= bound && tail <= bound) {
        return sum.value();
      }
    }
  }
  throw NonConvergence("gauss_2f1_series reached max_terms = " + std::to_string(spec.max_terms) +
                       " at z = " + std::to_string(z));
}

double f16_56_half(double z) {
  if (!(z >= 0.0 && z < 1.0)) {
    throw DomainError("f16_56_half requires 0 <= z < 1, got z = " + std::to_string(z));
  }
  return f16_56_half(z, 1.0 - z);
}

double f16_56_half(double z, double one_minus_z) {
  if (!(z >= 0.0 && one_minus_z > 0.0)) {
    throw DomainError("f16_56_half requires 0 <= z < 1, got z = " + std::to_string(z));
  }
  const double cos_psi = std::sqrt(one_minus_z);
  const double psi = std::atan2(std::sqrt(z), cos_psi);
  return std::cos(2.0 * psi / 3.0) / cos_psi;
}

double agm(double a, double g) {
  if (!(a > 0.0 && g > 0.0)) {
    throw DomainError("agm requires positive arguments");
  }
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  // Quadratic convergence; 64 is far beyond what any double pair needs.
  for (int i = 0; i < 64; ++i) {
    if (std::fabs(a - g) <= 4.0 * kEps * a) {
      break;
    }
    const double next_a = 0.5 * (a + g);
    g = std::sqrt(a * g);
    a = next_a;
  }
  return 0.5 * (a + g);
}

double f12_12_one(double m) {
  if (!(m >= 0.0 && m < 1.0)) {
    throw DomainError("f12_12_one requires 0 <= m < 1, got m = " + std::to_string(m));
  }
  return 1.0 / agm(1.0, std::sqrt(1.0 - m));
}

double wallis_integral(std::int64_t n) {
  if (n < 0) {
    throw DomainError("wallis_integral requires n >= 0");
  }
  double value = 0.5 * std::numbers::pi;
  for (std::int64_t j = 1; j <= n; ++j) {
    value *= static_cast<double>(2 * j - 1) / static_cast<double>(2 * j);
  }
  return value;
}

}  // namespace sig6::hypergeom
