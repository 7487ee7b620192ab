#pragma once

// Reference values of P(x, y) by direct numerical integration, independent of
// the asymptotic series.
//
// RealAxis  integrates exp(-t^4 - x t^2) cos(y t) over [0, T] in extended
//           precision. Needed because |P| can be ~1e-19 while the integrand is
//           O(1), so most leading digits cancel.
// Contour   integrates (1/2) exp(-u^4 - x u^2 + i y u) over a polyline in the
//           u-plane through the relevant saddle(s) u = y^{1/3} t_k, where the
//           integrand peaks and nothing cancels; double precision suffices.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "pearcey/asymptotics.hpp"
#include "pearcey/quadrature.hpp"
#include "pearcey/saddle_geometry.hpp"
#include "pearcey/types.hpp"

namespace pearcey {

enum class Strategy { RealAxis, Contour };

inline std::string_view to_string(Strategy s) {
  return s == Strategy::RealAxis ? "real-axis" : "contour";
}

struct QuadratureConfig {
  Strategy strategy = Strategy::Contour;
  int working_precision_digits = 50;  // RealAxis only
  double abs_tol = 1e-300;
  double rel_tol = 1e-14;
  std::size_t max_subdivisions = 200000;

  static QuadratureConfig real_axis(int digits = 50) {
    QuadratureConfig cfg;
    cfg.strategy = Strategy::RealAxis;
    cfg.working_precision_digits = digits;
    cfg.abs_tol = std::pow(10.0, -(digits - 10));
    cfg.rel_tol = std::pow(10.0, -(digits - 10));
    return cfg;
  }

  static QuadratureConfig contour() { return {}; }
};

/// Below this |y| the contour strategy integrates along the real axis: the
/// saddles collapse onto the origin and nothing cancels.
inline constexpr double kContourRealAxisBelow = 1.0;

inline constexpr int kGaussPoints = 20;

namespace detail {

using Float50 = boost::multiprecision::cpp_bin_float_50;
using Complex50 = boost::multiprecision::cpp_complex_50;
using Float100 = boost::multiprecision::cpp_bin_float_100;
using Complex100 = boost::multiprecision::cpp_complex_100;

inline void check_config(const QuadratureConfig& cfg) {
  if (!(cfg.abs_tol > 0.0) || !(cfg.rel_tol > 0.0)) {
    throw PreconditionError("QuadratureConfig: abs_tol and rel_tol must be positive");
  }
  if (cfg.strategy == Strategy::RealAxis && cfg.working_precision_digits < 16) {
    throw PreconditionError("QuadratureConfig: working_precision_digits must be >= 16");
  }
}

inline void check_finite(Complex x, Complex y) {
  const auto finite = [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  if (!finite(x) || !finite(y)) throw DomainError("pearcey_quadrature: x and y must be finite");
}

/// Largest T with -T^4 + |x| T^2 + |Im y| T >= ln(abs_tol) - 5.
inline double truncation_point(Complex x, Complex y, double abs_tol) {
  const double a = std::abs(x);
  const double b = std::abs(y.imag());
  const double target = std::log(abs_tol) - 5.0;
  const auto g = [&](double t) { return -t * t * t * t + a * t * t + b * t - target; };
  double lo = 0.0;
  double hi = 1.0;
  while (g(hi) > 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0.0 ? lo : hi) = mid;
  }
  return hi;
}

template <class Real, class Value>
Complex real_axis_integral(Complex x, Complex y, const QuadratureConfig& cfg) {
  using std::cos;
  using std::cosh;
  using std::exp;
  using std::sin;
  using std::sinh;

  const Real xr = x.real();
  const Real xi = x.imag();
  const Real yr = y.real();
  const Real yi = y.imag();
  const bool real_x = x.imag() == 0.0;
  const bool real_y = y.imag() == 0.0;

  const auto integrand = [&](const Real& t) -> Value {
    const Real t2 = t * t;
    const Real envelope = exp(-t2 * t2 - xr * t2);
    Real re = cos(yr * t);
    Real im = 0;
    if (!real_y) {
      const Real b = yi * t;
      im = -sin(yr * t) * sinh(b);
      re *= cosh(b);
    }
    if (!real_x) {
      const Real phase = -xi * t2;
      const Real cp = cos(phase);
      const Real sp = sin(phase);
      Real r2 = cp * re - sp * im;
      im = sp * re + cp * im;
      re = std::move(r2);
    }
    return Value(envelope * re, envelope * im);
  };

  const double T = truncation_point(x, y, cfg.abs_tol);
  const double width = std::min(0.25, kPi / (4.0 * (1.0 + std::abs(y))));
  const quadrature::GaussLegendre<Real> rule(kGaussPoints);
  // The integrand is 1 at t = 0, so this floor is relative to its scale and
  // keeps panels deep in the tail from chasing roundoff.
  const double abs_tol = std::max(cfg.abs_tol, 1e-2 * cfg.rel_tol);
  const quadrature::AdaptiveOptions<Real> opt{Real(abs_tol), Real(cfg.rel_tol), Real(width),
                                              cfg.max_subdivisions};
  const auto r = quadrature::integrate(integrand, Real(0), Real(T), rule, opt);
  const Complex value{static_cast<double>(r.value.real()), static_cast<double>(r.value.imag())};
  if (!r.converged) {
    throw ConvergenceError("pearcey_quadrature: real-axis tolerance not met", value,
                           static_cast<double>(r.error));
  }
  return value;
}

inline Complex real_axis_dispatch(Complex x, Complex y, const QuadratureConfig& cfg) {
  const int digits = cfg.working_precision_digits;
  if (digits <= 16) return real_axis_integral<double, Complex>(x, y, cfg);
  if (digits <= 50) return real_axis_integral<Float50, Complex50>(x, y, cfg);
  if (digits <= 100) return real_axis_integral<Float100, Complex100>(x, y, cfg);
  throw CapabilityError("pearcey_quadrature: working precision above 100 digits is not supported");
}

/// Accumulates (1/2) * integral of exp(-u^4 - x u^2 + i y u) along polylines
/// and rays in the u-plane, in double precision.
class ContourIntegrator {
 public:
  ContourIntegrator(Complex x, Complex y, const QuadratureConfig& cfg)
      : x_(x), y_(y), cfg_(cfg), rule_(kGaussPoints) {
    panel_ = 0.2 / (1.0 + std::cbrt(std::abs(y)));
  }

  double log_modulus(Complex u) const { return exponent(u).real(); }

  /// Peak |integrand| on the path; sets the absolute tolerance floor.
  void set_peak(double peak) { peak_ = peak; }

  void segment(Complex a, Complex b) {
    const Complex delta = b - a;
    const double len = std::abs(delta);
    if (len == 0.0) return;
    const auto f = [&](double s) { return std::exp(exponent(a + s * delta)) * delta; };
    add(f, 0.0, 1.0, std::min(1.0, panel_ / len), len);
  }

  /// Horizontal ray between start and start + direction * infinity,
  /// direction = +1 or -1. The path runs left to right on both sides, so
  /// du = +ds either way.
  void ray(Complex start, double direction) {
    const double chunk = 0.5;
    const double width = std::min(panel_, kPi / (4.0 * (1.0 + std::abs(y_))));
    int quiet = 0;
    for (int i = 0; i < 400; ++i) {
      const double s0 = i * chunk;
      const auto f = [&](double s) { return std::exp(exponent(start + direction * s)); };
      const double l1 = add(f, s0, s0 + chunk, width, chunk);
      const double tail = std::exp(log_modulus(start + direction * (s0 + chunk)));
      quiet = (l1 <= 1e-18 * l1_ && tail <= 1e-18 * l1_) ? quiet + 1 : 0;
      if (quiet >= 2) return;
    }
    throw ConvergenceError("pearcey_quadrature: contour tail did not decay", 0.5 * sum_, error_);
  }

  Complex value() const {
    if (!converged_) {
      throw ConvergenceError("pearcey_quadrature: contour tolerance not met", 0.5 * sum_,
                             0.5 * error_);
    }
    return 0.5 * sum_;
  }

 private:
  Complex exponent(Complex u) const {
    const Complex u2 = u * u;
    return -u2 * u2 - x_ * u2 + kI * y_ * u;
  }

  template <class F>
  double add(const F& f, double a, double b, double width, double path_length) {
    // Tolerance is tied to the saddle peak, not the local L1: off-saddle the
    // exponent can reach |y|^{4/3} in size and its rounding dominates.
    const double floor = cfg_.rel_tol * peak_ * path_length;
    const quadrature::AdaptiveOptions<double> opt{std::max(cfg_.abs_tol, floor), cfg_.rel_tol,
                                                  width, cfg_.max_subdivisions};
    const auto r = quadrature::integrate(f, a, b, rule_, opt);
    sum_ += r.value;
    error_ += r.error;
    l1_ += r.l1;
    converged_ = converged_ && r.converged;
    return r.l1;
  }

  Complex x_;
  Complex y_;
  QuadratureConfig cfg_;
  quadrature::GaussLegendre<double> rule_;
  double panel_;
  double peak_ = 0.0;
  Complex sum_{};
  double error_ = 0.0;
  double l1_ = 0.0;
  bool converged_ = true;
};

/// Distance along the u-direction `dir` from the saddle u_k after which the
/// integrand is negligible, or at which it stops decreasing.
inline double descent_reach(const ContourIntegrator& c, Complex uk, Complex dir, double step) {
  const double peak = c.log_modulus(uk);
  double prev = peak;
  double s = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double next = c.log_modulus(uk + (s + step) * dir);
    if (next > prev) break;
    s += step;
    prev = next;
    if (prev < peak - 46.0) break;
  }
  return s;
}

/// The two-saddle polyline is kept slightly past |theta| = pi/8: just outside
/// the sector, horizontal rays from the truncated single descent line can
/// cross a ridge near the other saddle that exceeds the peak.
inline constexpr double kTwoSaddleMargin = 0.1;

inline Complex contour_integral(Complex x, Complex y, const QuadratureConfig& cfg) {
  const Complex yn = y.real() < 0.0 ? -y : y;
  if (std::abs(yn) < kContourRealAxisBelow) return real_axis_integral<double, Complex>(x, yn, cfg);

  const double theta = std::arg(yn);
  const double y_mod = std::abs(yn);
  const Complex y13 = principal_pow(yn, 1.0 / 3.0);
  const Complex rotation = y13 / std::abs(y13);
  const SaddleSet s = saddle_points();
  ContourIntegrator c(x, yn, cfg);

  if (std::abs(theta) <= kPi / 8 + kTwoSaddleMargin) {
    const CasePathLimits lim = case_path_limits(theta, y_mod);
    const Complex U = y13 * lim.U;
    const Complex u2 = y13 * s.t2;
    const Complex M = y13 * descent_line_point(1, theta, y_mod, lim.p1.lower);
    const Complex u1 = y13 * s.t1;
    const Complex W = y13 * lim.W;
    c.set_peak(std::exp(std::max(c.log_modulus(u1), c.log_modulus(u2))));
    c.segment(U, u2);
    c.segment(u2, M);
    c.segment(M, u1);
    c.segment(u1, W);
    c.ray(U, -1.0);
    c.ray(W, 1.0);
    return c.value();
  }

  const int k = classify_region(theta) == Region::Case1 ? 1 : 2;
  const Complex uk = y13 * (k == 1 ? s.t1 : s.t2);
  const Complex dir = rotation * descent_direction(k, theta);
  const double step = 0.1 / std::cbrt(y_mod);
  c.set_peak(std::exp(c.log_modulus(uk)));
  const Complex left = uk - descent_reach(c, uk, -dir, step) * dir;
  const Complex right = uk + descent_reach(c, uk, dir, step) * dir;
  c.segment(left, uk);
  c.segment(uk, right);
  c.ray(left, -1.0);
  c.ray(right, 1.0);
  return c.value();
}

}  // namespace detail

/// P(x, y) = int_0^inf exp(-t^4 - x t^2) cos(y t) dt.
inline Complex pearcey_quadrature(Complex x, Complex y,
                                  const QuadratureConfig& cfg = QuadratureConfig::contour()) {
  detail::check_finite(x, y);
  detail::check_config(cfg);
  if (cfg.strategy == Strategy::RealAxis) return detail::real_axis_dispatch(x, y, cfg);
  return detail::contour_integral(x, y, cfg);
}

/// Canonical cusp integral int exp(i(t^4 + x t^2 + y t)) dt, continued to all
/// complex x, y by 2 e^{i pi/8} P(x e^{-i pi/4}, y e^{i pi/8}).
inline Complex pearcey_bar(Complex x, Complex y,
                           const QuadratureConfig& cfg = QuadratureConfig::contour()) {
  return 2.0 * unit_phase(kPi / 8) *
         pearcey_quadrature(x * unit_phase(-kPi / 4), y * unit_phase(kPi / 8), cfg);
}

inline double relative_error(Complex approx, Complex reference) {
  if (reference == Complex{}) throw DomainError("relative_error: reference value is zero");
  return std::abs(approx - reference) / std::abs(reference);
}

}  // namespace pearcey
