#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <random>

#include "pearcey/oracle.hpp"

namespace {

using pearcey::Complex;
using pearcey::kI;
using pearcey::kPi;
using pearcey::QuadratureConfig;

const double kGamma54 = std::tgamma(1.25);

// int exp(i t^4 - t^2) dt over the real line, by real Gauss-Kronrod on each part.
Complex direct_cusp_integral_at_x_i() {
  using boost::math::quadrature::gauss_kronrod;
  const auto re = [](double t) { return std::cos(t * t * t * t) * std::exp(-t * t); };
  const auto im = [](double t) { return std::sin(t * t * t * t) * std::exp(-t * t); };
  const double a = gauss_kronrod<double, 61>::integrate(re, 0.0, 7.0, 25, 1e-13);
  const double b = gauss_kronrod<double, 61>::integrate(im, 0.0, 7.0, 25, 1e-13);
  return 2.0 * Complex(a, b);
}

}  // namespace

TEST(Oracle, GammaIdentityBothStrategies) {
  EXPECT_NEAR(kGamma54, 0.906402477, 1e-9);
  EXPECT_NEAR(std::abs(pearcey::pearcey_quadrature(0.0, 0.0) - kGamma54), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(pearcey::pearcey_quadrature(0.0, 0.0, QuadratureConfig::real_axis()) - kGamma54), 0.0,
              1e-15);
  EXPECT_NEAR(std::abs(pearcey::pearcey_quadrature(0.0, 0.0, QuadratureConfig::real_axis(16)) - kGamma54), 0.0,
              1e-9);
}

TEST(Oracle, EvenInY) {
  const Complex y{3.0, 2.0};
  for (const QuadratureConfig& cfg : {QuadratureConfig::contour(), QuadratureConfig::real_axis()}) {
    const Complex a = pearcey::pearcey_quadrature(1.0, y, cfg);
    const Complex b = pearcey::pearcey_quadrature(1.0, -y, cfg);
    EXPECT_LE(pearcey::relative_error(b, a), 1e-12);
  }

  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const Complex x{2.0 * d(rng), 2.0 * d(rng)};
    const Complex y{12.0 * d(rng), 4.0 * d(rng)};
    const Complex a = pearcey::pearcey_quadrature(x, y, QuadratureConfig::real_axis(16));
    const Complex b = pearcey::pearcey_quadrature(x, -y, QuadratureConfig::real_axis(16));
    EXPECT_LE(pearcey::relative_error(b, a), 1e-12) << "x=" << x << " y=" << y;
    const Complex c = pearcey::pearcey_quadrature(x, y);
    const Complex e = pearcey::pearcey_quadrature(x, -y);
    EXPECT_LE(pearcey::relative_error(e, c), 1e-12) << "x=" << x << " y=" << y;
  }
}

TEST(Oracle, RealForRealArguments) {
  for (double x : {-2.0, 0.0, 1.0}) {
    for (double y : {0.5, 5.0, 20.0}) {
      for (const QuadratureConfig& cfg : {QuadratureConfig::contour(), QuadratureConfig::real_axis()}) {
        const Complex v = pearcey::pearcey_quadrature(x, y, cfg);
        EXPECT_LE(std::abs(v.imag()), 1e-12 * std::abs(v))
            << "x=" << x << " y=" << y << " " << pearcey::to_string(cfg.strategy);
      }
    }
  }
}

TEST(Oracle, StrategiesAgreeAtTenOnTheRealAxis) {
  const Complex a = pearcey::pearcey_quadrature(1.0, 10.0, QuadratureConfig::real_axis());
  const Complex b = pearcey::pearcey_quadrature(1.0, 10.0, QuadratureConfig::contour());
  EXPECT_LE(pearcey::relative_error(b, a), 1e-10);
}

TEST(Oracle, StrategiesAgreeAcrossSectors) {
  for (Complex x : {Complex(1.0), Complex(-2.0), Complex(1.0, 1.0)}) {
    for (double r : {1.5, 8.0, 20.0}) {
      for (double theta : {-kPi / 2, -3 * kPi / 8, -kPi / 8 - 1e-3, -0.2, 0.0, kPi / 8 + 1e-3, 0.3, kPi / 2}) {
        const Complex y = std::polar(r, theta);
        const Complex a = pearcey::pearcey_quadrature(x, y, QuadratureConfig::real_axis());
        const Complex b = pearcey::pearcey_quadrature(x, y);
        EXPECT_LE(pearcey::relative_error(b, a), 1e-11) << "x=" << x << " y=" << y;
      }
    }
  }
}

TEST(Oracle, MagnitudeLawOnStokesLine) {
  // Least squares of log|P| on {y^{4/3}, y^{2/3}, 1}.
  const double ys[] = {20.0, 30.0, 40.0, 50.0};
  double ata[3][3] = {};
  double atb[3] = {};
  for (double y : ys) {
    const double row[3] = {std::pow(y, 4.0 / 3.0), std::pow(y, 2.0 / 3.0), 1.0};
    const double rhs = std::log(std::abs(pearcey::pearcey_quadrature(1.0, y)));
    for (int i = 0; i < 3; ++i) {
      atb[i] += row[i] * rhs;
      for (int j = 0; j < 3; ++j) ata[i][j] += row[i] * row[j];
    }
  }
  // Gaussian elimination on the 3x3 normal equations.
  for (int p = 0; p < 3; ++p) {
    for (int r = p + 1; r < 3; ++r) {
      const double f = ata[r][p] / ata[p][p];
      for (int c = p; c < 3; ++c) ata[r][c] -= f * ata[p][c];
      atb[r] -= f * atb[p];
    }
  }
  double coef[3];
  for (int i = 2; i >= 0; --i) {
    double s = atb[i];
    for (int j = i + 1; j < 3; ++j) s -= ata[i][j] * coef[j];
    coef[i] = s / ata[i][i];
  }
  const double expected = -1.5 * std::pow(4.0, -4.0 / 3.0);
  EXPECT_LE(std::abs(coef[0] - expected), 0.05 * std::abs(expected)) << "fitted " << coef[0];
}

TEST(Oracle, CuspIntegralExamples) {
  const Complex direct = direct_cusp_integral_at_x_i();
  EXPECT_LE(std::abs(pearcey::pearcey_bar(kI, 0.0) - direct), 1e-6);
  EXPECT_LE(std::abs(pearcey::pearcey_bar(kI, 0.0, QuadratureConfig::real_axis()) - direct), 1e-6);

  const Complex origin = 2.0 * std::polar(1.0, kPi / 8) * kGamma54;
  EXPECT_LE(std::abs(pearcey::pearcey_bar(0.0, 0.0) - origin), 1e-13);

  const Complex smoke = pearcey::pearcey_bar(2.0 * kI, 1.0);
  EXPECT_TRUE(std::isfinite(smoke.real()) && std::isfinite(smoke.imag()));
}

TEST(Oracle, RelativeErrorExamples) {
  EXPECT_EQ(pearcey::relative_error(Complex(0.3, 0.4), Complex(0.3, 0.4)), 0.0);
  EXPECT_NEAR(pearcey::relative_error(1.01, 1.0), 0.01, 1e-15);
  EXPECT_NEAR(pearcey::relative_error(1.02 * kI, kI), 0.02, 1e-15);
  EXPECT_THROW(pearcey::relative_error(1.0, 0.0), pearcey::DomainError);
}

TEST(Oracle, ConfigValidation) {
  QuadratureConfig bad = QuadratureConfig::contour();
  bad.abs_tol = 0.0;
  EXPECT_THROW(pearcey::pearcey_quadrature(1.0, 1.0, bad), pearcey::PreconditionError);
  bad = QuadratureConfig::contour();
  bad.rel_tol = -1.0;
  EXPECT_THROW(pearcey::pearcey_quadrature(1.0, 1.0, bad), pearcey::PreconditionError);
  bad = QuadratureConfig::real_axis();
  bad.working_precision_digits = 12;
  EXPECT_THROW(pearcey::pearcey_quadrature(1.0, 1.0, bad), pearcey::PreconditionError);
  EXPECT_THROW(pearcey::pearcey_quadrature(1.0, 1.0, QuadratureConfig::real_axis(120)),
               pearcey::CapabilityError);
  EXPECT_THROW(pearcey::pearcey_quadrature(std::nan(""), 1.0), pearcey::DomainError);
}

TEST(Oracle, HundredDigitPathMatchesFifty) {
  const Complex a = pearcey::pearcey_quadrature(1.0, 10.0, QuadratureConfig::real_axis(50));
  const Complex b = pearcey::pearcey_quadrature(1.0, 10.0, QuadratureConfig::real_axis(100));
  EXPECT_LE(pearcey::relative_error(a, b), 1e-14);
}

TEST(Oracle, ConvergenceErrorCarriesEstimate) {
  QuadratureConfig cfg = QuadratureConfig::contour();
  cfg.rel_tol = 1e-30;
  cfg.max_subdivisions = 0;
  const Complex reference = pearcey::pearcey_quadrature(1.0, 10.0);
  try {
    pearcey::pearcey_quadrature(1.0, 10.0, cfg);
    FAIL() << "expected ConvergenceError";
  } catch (const pearcey::ConvergenceError& e) {
    EXPECT_LE(pearcey::relative_error(e.estimate(), reference), 1e-8);
    EXPECT_GT(e.achieved_error(), 0.0);
  }
}
