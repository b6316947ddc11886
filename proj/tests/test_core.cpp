#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "sig6/core.hpp"
#include "sig6/error.hpp"
#include "sig6/grid.hpp"
#include "sig6/weierstrass.hpp"

using namespace sig6;

namespace {

constexpr double kPi = std::numbers::pi;

// f(T) from Simpson's rule on the long-double series integrand; shares no
// code with the library path.
double reference_f(double kk, double T) {
  return oracle::simpson(
      [kk](double t) {
        const double s = std::sin(t);
        return oracle::reference_2f1(1.0 / 6.0, 5.0 / 6.0, 0.5, kk * kk * s * s, 600);
      },
      0.0, T, 2000);
}

}  // namespace

TEST(Modulus, DerivedAngles) {
  for (const double kk : {1e-8, 0.3, 0.5, 0.9, 0.999999}) {
    const Modulus m = Modulus::from_kk(kk);
    EXPECT_NEAR(std::sin(m.alpha()), kk, 1e-15);
    EXPECT_EQ(m.beta(), 2.0 * m.alpha() / 3.0);
    EXPECT_NEAR(m.xi(), kk * kk, 1e-15);
  }
  const Modulus third = Modulus::from_alpha(kPi / 3.0);
  EXPECT_NEAR(third.kk(), std::sqrt(3.0) / 2.0, 1e-15);
  EXPECT_NEAR(third.beta(), 2.0 * kPi / 9.0, 1e-15);
}

TEST(Modulus, Rejects) {
  EXPECT_THROW(Modulus::from_kk(0.0), DomainError);
  EXPECT_THROW(Modulus::from_kk(1.0), DomainError);
  EXPECT_THROW(Modulus::from_kk(-0.2), DomainError);
  EXPECT_THROW(Modulus::from_kk(NAN), DomainError);
  EXPECT_THROW(Modulus::from_alpha(0.0), DomainError);
  EXPECT_THROW(Modulus::from_alpha(kPi / 2.0), DomainError);
}

TEST(Sig6Context, AdmissibleRange) {
  EXPECT_THROW(Sig6Context(Modulus::from_kk(1e-7)), DomainError);
  EXPECT_THROW(Sig6Context(Modulus::from_kk(1.0 - 1e-7)), DomainError);
  EXPECT_NO_THROW(Sig6Context(Modulus::from_kk(kMinModulus)));
  EXPECT_NO_THROW(Sig6Context(Modulus::from_kk(kMaxModulus)));
}

TEST(Sig6Context, KAboveHalfPi) {
  for (const double kk : {1e-6, 0.2, 0.6, 0.99, 0.99999, 1.0 - 1e-6}) {
    const Sig6Context ctx(Modulus::from_kk(kk));
    EXPECT_GT(ctx.K(), kPi / 2.0) << "kk = " << kk;
    EXPECT_TRUE(std::isfinite(ctx.K()));
  }
}

TEST(Sig6Context, NearOneFallsBackToAgm) {
  const Modulus m = Modulus::from_kk(1.0 - 1e-6);
  EXPECT_THROW(complete_K_series(m), NonConvergence);
  const Sig6Context ctx(m);
  EXPECT_NEAR(ctx.K(), weierstrass::complete_K_agm(m), 1e-13 * ctx.K());
  EXPECT_NEAR(ctx.K(), complete_K_quadrature(m), 1e-12 * ctx.K());
}

TEST(CompleteK, SeriesSmallModulus) {
  EXPECT_NEAR(complete_K_series(Modulus::from_kk(1e-8)), kPi / 2.0, 1e-14);
  EXPECT_NEAR(complete_K_quadrature(Modulus::from_kk(1e-8)), kPi / 2.0, 1e-14);
}

TEST(CompleteK, CrossRouteExamples) {
  const Modulus half = Modulus::from_kk(std::sqrt(0.5));
  EXPECT_NEAR(complete_K_series(half), complete_K_quadrature(half), 1e-10);
  const Modulus nine = Modulus::from_kk(0.9);
  EXPECT_NEAR(complete_K_series(nine), weierstrass::complete_K_agm(nine), 1e-9);
  const Modulus three = Modulus::from_kk(0.3);
  EXPECT_NEAR(complete_K_quadrature(three), complete_K_psi_integral(three), 1e-9);
  const Modulus five = Modulus::from_kk(0.5);
  EXPECT_NEAR(complete_K_psi_integral(five), complete_K_series(five), 1e-9);
  const Modulus high = Modulus::from_kk(0.95);
  EXPECT_NEAR(complete_K_psi_integral(high), complete_K_series(high), 1e-8);
  const Modulus six = Modulus::from_kk(0.6);
  EXPECT_NEAR(complete_K_cubic_integral(six), complete_K_series(six), 1e-9);
  EXPECT_NEAR(complete_K_cubic_integral(six), std::sqrt(1.5) * weierstrass::build(six).omega,
              1e-9);
}

TEST(CompleteK, MatchesSimpsonOfSeriesIntegrand) {
  for (const double kk : {0.2, 0.5, 0.8}) {
    EXPECT_NEAR(complete_K_quadrature(Modulus::from_kk(kk)), reference_f(kk, kPi / 2.0), 1e-11)
        << "kk = " << kk;
  }
}

TEST(CompleteK, PsiRouteRejectsDegenerateInterval) {
  EXPECT_THROW(complete_K_psi_integral(Modulus::from_kk(1e-6)), DomainError);
  EXPECT_THROW(complete_K_psi_integral(Modulus::from_kk(1e-9)), DomainError);
}

TEST(CompleteK, CubicLimitsAtAlphaPiOverThree) {
  const auto limits = cubic_integral_limits(Modulus::from_alpha(kPi / 3.0));
  EXPECT_NEAR(limits.lower, std::cos(8.0 * kPi / 9.0), 1e-15);
  EXPECT_NEAR(limits.upper, std::cos(4.0 * kPi / 9.0), 1e-15);
  EXPECT_NEAR(limits.lower, -0.939693, 5e-7);
  EXPECT_NEAR(limits.upper, 0.173648, 5e-7);
}

TEST(CompleteK, FiveWayAgreement) {
  for (int i = 1; i <= 9; ++i) {
    const Modulus m = Modulus::from_kk(0.1 * i);
    const std::vector<double> routes = {complete_K_series(m), complete_K_quadrature(m),
                                        complete_K_psi_integral(m), complete_K_cubic_integral(m),
                                        weierstrass::complete_K_agm(m)};
    for (std::size_t a = 0; a < routes.size(); ++a) {
      for (std::size_t b = a + 1; b < routes.size(); ++b) {
        EXPECT_NEAR(routes[a], routes[b], 1e-9 * routes[a]) << "kk = " << m.kk() << " routes "
                                                           << a << "," << b;
      }
    }
  }
}

TEST(FIncomplete, AnchorValues) {
  const Sig6Context ctx(Modulus::from_kk(0.6));
  EXPECT_EQ(f_incomplete(ctx, 0.0), 0.0);
  EXPECT_NEAR(f_incomplete(ctx, kPi / 2.0), ctx.K(), 1e-13);
  EXPECT_NEAR(f_incomplete(ctx, kPi), 2.0 * ctx.K(), 1e-13);
  EXPECT_NEAR(f_incomplete(ctx, -kPi), -2.0 * ctx.K(), 1e-13);
}

TEST(FIncomplete, ZeroModulusDegeneration) {
  const Sig6Context ctx(Modulus::from_kk(1e-6));
  for (const double T : {-20.0, -1.0, 0.3, 2.0, 7.5, 40.0}) {
    EXPECT_NEAR(f_incomplete(ctx, T), T, 1e-10) << "T = " << T;
  }
}

TEST(FIncomplete, MatchesSimpsonOracle) {
  const double kk = 0.7;
  const Sig6Context ctx(Modulus::from_kk(kk));
  for (const double T : {0.1, 0.8, 1.4, 2.5, 4.0}) {
    EXPECT_NEAR(f_incomplete(ctx, T), reference_f(kk, T), 1e-11) << "T = " << T;
  }
}

TEST(FIncomplete, OddAndIncreasingWithBoundedSlope) {
  const Sig6Context ctx(Modulus::from_kk(0.8));
  const double top = hypergeom::f16_56_half(ctx.modulus().xi());
  const double h = 1e-4;
  double previous = f_incomplete(ctx, -7.0);
  for (const double T : linspace(-7.0 + 0.05, 7.0, 280)) {
    const double value = f_incomplete(ctx, T);
    EXPECT_GT(value, previous);
    previous = value;
    EXPECT_NEAR(f_incomplete(ctx, -T), -value, 1e-13);
    const double slope = (f_incomplete(ctx, T + h) - f_incomplete(ctx, T - h)) / (2.0 * h);
    EXPECT_NEAR(slope, sextic_integrand(ctx.modulus(), T), 1e-6) << "T = " << T;
    EXPECT_GE(slope, 1.0 - 1e-6);
    EXPECT_LE(slope, top + 1e-6);
  }
}

TEST(Phi, AnchorValues) {
  const Sig6Context ctx(Modulus::from_kk(0.6));
  EXPECT_EQ(phi(ctx, 0.0), 0.0);
  EXPECT_NEAR(phi(ctx, ctx.K()), kPi / 2.0, 1e-13);
  EXPECT_NEAR(phi(ctx, 2.0 * ctx.K()), kPi, 1e-13);
  EXPECT_THROW(phi(ctx, INFINITY), DomainError);
  EXPECT_THROW(f_incomplete(ctx, NAN), DomainError);
}

TEST(Phi, ResidualBound) {
  for (const double kk : {0.05, 0.5, 0.95}) {
    const Sig6Context ctx(Modulus::from_kk(kk));
    for (const double u : linspace(-5.0 * ctx.K(), 5.0 * ctx.K(), 77)) {
      const double T = phi(ctx, u);
      EXPECT_LE(std::fabs(f_incomplete(ctx, T) - u), 1e-13 * std::max(1.0, std::fabs(u)))
          << "kk = " << kk << " u = " << u;
    }
  }
}

TEST(SineCosine, AnchorValues) {
  const Sig6Context ctx(Modulus::from_kk(0.6));
  EXPECT_EQ(s6(ctx, 0.0), 0.0);
  EXPECT_EQ(c6(ctx, 0.0), 1.0);
  EXPECT_NEAR(s6(ctx, ctx.K()), 1.0, 1e-13);
  EXPECT_NEAR(c6(ctx, ctx.K()), 0.0, 1e-13);
  EXPECT_NEAR(s6(ctx, 2.0 * ctx.K()), 0.0, 1e-13);
  EXPECT_NEAR(c6(ctx, 2.0 * ctx.K()), -1.0, 1e-13);
}

TEST(SineCosine, Properties) {
  for (const double kk : {0.2, 0.6, 0.9}) {
    const Sig6Context ctx(Modulus::from_kk(kk));
    const double K = ctx.K();
    for (const double u : linspace(-3.0 * K, 3.0 * K, 100)) {
      const auto v = sc6(ctx, u);
      EXPECT_EQ(v.s, s6(ctx, u));
      EXPECT_EQ(v.c, c6(ctx, u));
      EXPECT_NEAR(s6(ctx, -u), -v.s, 1e-12);
      EXPECT_NEAR(c6(ctx, -u), v.c, 1e-12);
      EXPECT_NEAR(phi(ctx, -u), -phi(ctx, u), 1e-12);
      EXPECT_NEAR(v.s * v.s + v.c * v.c, 1.0, 1e-12);
      const auto half = sc6(ctx, u + 2.0 * K);
      EXPECT_NEAR(half.s, -v.s, 1e-10);
      EXPECT_NEAR(half.c, -v.c, 1e-10);
      const auto full = sc6(ctx, u + 4.0 * K);
      EXPECT_NEAR(full.s, v.s, 1e-10);
      EXPECT_NEAR(full.c, v.c, 1e-10);
      EXPECT_NEAR(f_incomplete(ctx, phi(ctx, u)), u, 1e-11 * std::max(1.0, std::fabs(u)));
    }
  }
}

TEST(SineCosine, RandomRoundTrips) {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> modulus(0.01, 0.99);
  std::uniform_real_distribution<double> multiple(-12.0, 12.0);
  for (int trial = 0; trial < 60; ++trial) {
    const Sig6Context ctx(Modulus::from_kk(modulus(rng)));
    const double u = multiple(rng) * ctx.K();
    EXPECT_NEAR(f_incomplete(ctx, phi(ctx, u)), u, 1e-11 * std::max(1.0, std::fabs(u)));
  }
}

TEST(Sig6Context, ConcurrentReadsAgree) {
  const Sig6Context ctx(Modulus::from_kk(0.75));
  const auto grid = linspace(-2.0 * ctx.K(), 2.0 * ctx.K(), 40);
  std::vector<double> serial;
  for (const double u : grid) {
    serial.push_back(phi(ctx, u));
  }
  std::vector<std::vector<double>> results(4);
  std::vector<std::thread> workers;
  for (auto& out : results) {
    workers.emplace_back([&ctx, &grid, &out] {
      for (const double u : grid) {
        out.push_back(phi(ctx, u));
      }
    });
  }
  for (auto& worker : workers) {
    worker.join();
  }
  for (const auto& out : results) {
    EXPECT_EQ(out, serial);
  }
}
