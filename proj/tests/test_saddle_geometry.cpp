#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "pearcey/saddle_geometry.hpp"

namespace {

using pearcey::Complex;
using pearcey::kI;
using pearcey::kPi;

const double kFourFourThirds = std::pow(4.0, 4.0 / 3.0);
const double kTwoFourThirds = std::exp2(4.0 / 3.0);

Complex e_i(double phi) { return std::polar(1.0, phi); }

}  // namespace

TEST(SaddleGeometry, PhaseExamples) {
  EXPECT_EQ(pearcey::phase_f(0.0, 0.7), Complex(0.0));
  const auto s = pearcey::saddle_points();
  EXPECT_LE(std::abs(pearcey::phase_f(s.t1, 0.0) - 3.0 * e_i(2 * kPi / 3) / kFourFourThirds), 1e-15);
  EXPECT_LE(std::abs(pearcey::phase_f(kI, 0.0) - Complex(-2.0)), 1e-15);
  EXPECT_THROW(pearcey::phase_f(1.0, 2.0), pearcey::DomainError);
}

TEST(SaddleGeometry, SaddleConstants) {
  const auto s = pearcey::saddle_points();
  const double r = std::pow(4.0, -1.0 / 3.0);
  EXPECT_LE(std::abs(s.t0 - Complex(0.0, -r)), 1e-15);
  EXPECT_LE(std::abs(s.t1 - r * e_i(kPi / 6)), 1e-15);
  EXPECT_LE(std::abs(s.t2 - r * e_i(5 * kPi / 6)), 1e-15);
  EXPECT_NEAR(s.t0.imag(), -0.6299605, 1e-7);
  EXPECT_NEAR(s.t1.real(), 0.5455618, 1e-7);
  EXPECT_NEAR(s.t1.imag(), 0.3149803, 1e-7);
  EXPECT_LE(std::abs(pearcey::phase_f_derivative(s.t2, 0.3)), 1e-13);
}

TEST(SaddleGeometry, SaddleResidualsForRandomTheta) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(-kPi / 2, kPi / 2);
  const auto s = pearcey::saddle_points();
  for (int i = 0; i < 20; ++i) {
    const double theta = angle(rng);
    for (Complex t : {s.t0, s.t1, s.t2}) {
      EXPECT_LE(std::abs(pearcey::phase_f_derivative(t, theta)), 1e-13) << "theta=" << theta;
    }
  }
}

TEST(SaddleGeometry, TaylorConstantTerms) {
  const auto s = pearcey::saddle_points();
  for (double theta : {-1.2, 0.0, 0.4}) {
    EXPECT_LE(std::abs(pearcey::taylor_f(s.t1, theta, 1) -
                       3.0 * e_i((4 * theta + 2 * kPi) / 3) / kFourFourThirds),
              1e-15);
    EXPECT_LE(std::abs(pearcey::taylor_f(s.t2, theta, 2) -
                       3.0 * e_i((4 * theta - 2 * kPi) / 3) / kFourFourThirds),
              1e-15);
  }
  EXPECT_THROW(pearcey::taylor_f(0.0, 0.0, 0), pearcey::DomainError);
  EXPECT_THROW(pearcey::taylor_f(0.0, 0.0, 3), pearcey::DomainError);
}

TEST(SaddleGeometry, TaylorPolynomialIsExact) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(-kPi / 2, kPi / 2);
  std::uniform_real_distribution<double> radius(0.0, 2.0);
  std::uniform_real_distribution<double> arg(-kPi, kPi);
  for (int i = 0; i < 100; ++i) {
    const Complex t = std::polar(radius(rng), arg(rng));
    const double theta = angle(rng);
    const double tol = 1e-12 * (1.0 + std::pow(std::abs(t), 4));
    for (int k : {1, 2}) {
      EXPECT_LE(std::abs(pearcey::taylor_f(t, theta, k) - pearcey::phase_f(t, theta)), tol);
    }
  }
}

TEST(SaddleGeometry, HkExamples) {
  EXPECT_EQ(pearcey::h_k(0.0, 1.0, 10.0, 1), Complex(0.0));
  const Complex expected = e_i(2 * kPi / 3) * kTwoFourThirds + e_i(kPi / 3);
  EXPECT_LE(std::abs(pearcey::h_k(1.0, 0.0, 1.0, 1) - expected), 1e-15);
  EXPECT_THROW(pearcey::h_k(1.0, 0.0, 0.0, 1), pearcey::DomainError);
}

TEST(SaddleGeometry, HkConjugateMirror) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ux(-2.0, 2.0);
  std::uniform_real_distribution<double> uy(1.0, 50.0);
  for (int i = 0; i < 50; ++i) {
    const double u = ux(rng), x = ux(rng), y = uy(rng);
    const Complex h2 = pearcey::h_k(u, x, y, 2);
    const Complex h1m = std::conj(pearcey::h_k(-u, x, y, 1));
    EXPECT_LE(std::abs(h2 - h1m), 1e-14 * (1.0 + std::abs(h2)));
  }
}

TEST(SaddleGeometry, BarCoefficientExamples) {
  EXPECT_EQ(pearcey::bar_coefficient(0, 1.0, 0.7, pearcey::BarKind::A), Complex(1.0));
  EXPECT_LE(std::abs(pearcey::bar_coefficient(1, 0.0, 1.0, pearcey::BarKind::A) -
                     e_i(-kPi / 3) * (-kTwoFourThirds)),
            1e-15);

  const double u = 0.3, x = 1.0, y = 30.0;
  Complex sum{};
  for (int n = 0; n <= 6; ++n) {
    sum += pearcey::bar_coefficient(n, x, u, pearcey::BarKind::A) * std::pow(y, -2.0 * n / 3.0);
  }
  EXPECT_LE(std::abs(sum - std::exp(pearcey::h_k(u, x, y, 1))), 1e-6);
}

TEST(SaddleGeometry, BarBMatchesExponentialOfH2) {
  const double u = -0.35, y = 40.0;
  const Complex x{1.0, 0.5};
  Complex sum{};
  for (int n = 0; n <= 8; ++n) {
    sum += pearcey::bar_coefficient(n, x, u, pearcey::BarKind::B) * std::pow(y, -2.0 * n / 3.0);
  }
  EXPECT_LE(std::abs(sum - std::exp(pearcey::h_k(u, x, y, 2))), 1e-8);
}

TEST(SaddleGeometry, ExpansionConsistency) {
  for (double x : {0.0, 1.0, -2.0}) {
    for (double u : {0.25, -0.25, 0.5, -0.5}) {
      for (double y : {20.0, 40.0}) {
        const Complex target = std::exp(pearcey::h_k(u, x, y, 1));
        const double factor = std::pow(y, 2.0 / 3.0) / 2.0;
        Complex sum{};
        double previous = -1.0;
        for (int N = 0; N <= 5; ++N) {
          sum += pearcey::bar_coefficient(N, x, u, pearcey::BarKind::A) * std::pow(y, -2.0 * N / 3.0);
          const double err = std::abs(target - sum);
          if (previous >= 0.0) {
            EXPECT_LE(err * factor, previous)
                << "x=" << x << " u=" << u << " y=" << y << " N=" << N - 1 << "->" << N;
          }
          previous = err;
        }
      }
    }
  }
}

TEST(SaddleGeometry, DecayRateExamples) {
  EXPECT_NEAR(pearcey::negligible_decay_rate(kPi / 8), -1.38077, 1e-5);
  EXPECT_NEAR(pearcey::negligible_decay_rate(-kPi / 8), -1.38077, 1e-5);
  EXPECT_LE(pearcey::negligible_decay_rate(0.0), -1.38077);
  EXPECT_THROW(pearcey::negligible_decay_rate(kPi / 8 + 1e-3), pearcey::DomainError);
}

TEST(SaddleGeometry, DecayRateBoundAcrossTwoSaddleSector) {
  for (int i = 0; i < 50; ++i) {
    const double theta = -kPi / 8 + i * (kPi / 4) / 49;
    EXPECT_LE(pearcey::negligible_decay_rate(theta), -1.38077 + 1e-4) << "theta=" << theta;
  }
}

TEST(SaddleGeometry, TailBoundAtTableModulus) {
  EXPECT_LT(pearcey::negligible_tail_bound(0.0, 20.0), 1e-30);
}

TEST(SaddleGeometry, PathLimitsMapToLandmarks) {
  const double y_mod = 20.0;
  for (double theta : {-kPi / 8, -0.2, 0.0, 0.1, kPi / 8}) {
    const pearcey::CasePathLimits lim = pearcey::case_path_limits(theta, y_mod);
    EXPECT_NEAR(lim.p1.upper, std::pow(y_mod / 2, 2.0 / 3.0), 1e-12);
    EXPECT_NEAR(lim.p1.lower, -std::cbrt(2 * y_mod * y_mod) * std::cos((kPi + 2 * theta) / 3), 1e-12);
    EXPECT_LE(std::abs(pearcey::descent_line_point(1, theta, y_mod, lim.p1.upper) - lim.W), 1e-14);
    EXPECT_LE(std::abs(pearcey::descent_line_point(2, theta, y_mod, lim.p2.lower) - lim.U), 1e-14);
    // Both inner limits land on the crossing point of the two descent lines.
    EXPECT_LE(std::abs(pearcey::descent_line_point(1, theta, y_mod, lim.p1.lower) -
                       pearcey::descent_line_point(2, theta, y_mod, lim.p2.upper)),
              1e-13);
  }
}

TEST(SaddleGeometry, LandmarksFormula) {
  const auto s = pearcey::saddle_points();
  const double c = std::exp2(-2.0 / 3.0);
  for (double theta : {-0.3, 0.0, 0.2}) {
    EXPECT_LE(std::abs(pearcey::landmark_W(theta) - (s.t1 + c * e_i(-(kPi + 4 * theta) / 6))), 1e-15);
    EXPECT_LE(std::abs(pearcey::landmark_U(theta) - (s.t2 - c * e_i((kPi - 4 * theta) / 6))), 1e-15);
  }
}
