#pragma once

// Saddle-point landmarks of the scaled Pearcey phase
//
//   f(t; theta) = e^{4 i theta/3} (i t - t^4),   theta = arg y, |theta| <= pi/2,
//
// after the substitution u = t y^{1/3}. Integration paths are represented by
// their landmark points only: the saddles t1, t2, the straight descent lines
// C1, C2 of the quadratic Taylor part at those saddles, the crossings W, U of
// C1, C2 with the original path C, and the truncation limits u_-, u_+.

#include <algorithm>
#include <cmath>

#include "pearcey/coefficients.hpp"
#include "pearcey/types.hpp"

namespace pearcey {

struct SaddleSet {
  Complex t0;
  Complex t1;
  Complex t2;
};

enum class BarKind { A, B };

namespace detail {

inline const double kQuarterCbrt = std::cbrt(0.25);            // 4^{-1/3}
inline const double kFourFourThirds = std::pow(4.0, 4.0 / 3.0);  // 4^{4/3}
inline const double kTwoFourThirds = std::exp2(4.0 / 3.0);       // 2^{4/3}
inline const double kTwoMinusTwoThirds = std::exp2(-2.0 / 3.0);  // 2^{-2/3}

inline void check_theta(double theta, const char* who) {
  if (!(std::abs(theta) <= kPi / 2 + 1e-12)) {
    throw DomainError(std::string(who) + ": |theta| must not exceed pi/2");
  }
}

inline void check_saddle_index(int k, const char* who) {
  if (k != 1 && k != 2) throw DomainError(std::string(who) + ": saddle index must be 1 or 2");
}

}  // namespace detail

inline Complex phase_f(Complex t, double theta) {
  detail::check_theta(theta, "phase_f");
  const Complex t2 = t * t;
  return unit_phase(4.0 * theta / 3.0) * (kI * t - t2 * t2);
}

inline Complex phase_f_derivative(Complex t, double theta) {
  detail::check_theta(theta, "phase_f_derivative");
  return unit_phase(4.0 * theta / 3.0) * (kI - 4.0 * t * t * t);
}

inline SaddleSet saddle_points() {
  const double r = detail::kQuarterCbrt;
  return {Complex{0.0, -r}, std::polar(r, kPi / 6), std::polar(r, 5 * kPi / 6)};
}

/// Quartic Taylor form of f about t1 (saddle_index 1) or t2 (saddle_index 2).
inline Complex taylor_f(Complex t, double theta, int saddle_index) {
  detail::check_theta(theta, "taylor_f");
  detail::check_saddle_index(saddle_index, "taylor_f");
  const SaddleSet s = saddle_points();
  const double a = 4.0 * theta;
  if (saddle_index == 1) {
    const Complex d = t - s.t1;
    const Complex d2 = d * d;
    return 3.0 * unit_phase((a + 2 * kPi) / 3) / detail::kFourFourThirds -
           3.0 * unit_phase((a + kPi) / 3) / detail::kCbrt2 * d2 -
           detail::kTwoFourThirds * unit_phase(a / 3 + kPi / 6) * d2 * d -
           unit_phase(a / 3) * d2 * d2;
  }
  const Complex d = t - s.t2;
  const Complex d2 = d * d;
  return 3.0 * unit_phase((a - 2 * kPi) / 3) / detail::kFourFourThirds -
         3.0 * unit_phase((a - kPi) / 3) / detail::kCbrt2 * d2 +
         detail::kTwoFourThirds * unit_phase(a / 3 - kPi / 6) * d2 * d -
         unit_phase(a / 3) * d2 * d2;
}

/// Direction of the descent line C_k of the quadratic part of f at t_k.
inline Complex descent_direction(int k, double theta) {
  detail::check_saddle_index(k, "descent_direction");
  return k == 1 ? unit_phase(-(kPi + 4 * theta) / 6) : unit_phase((kPi - 4 * theta) / 6);
}

/// Remainder h_k(u, x, y) of the exponent after extracting the Gaussian part
/// at saddle k.
inline Complex h_k(Complex u, Complex x, Complex y, int k) {
  detail::check_saddle_index(k, "h_k");
  if (y == Complex{}) throw DomainError("h_k: y must be nonzero");
  const Complex y23 = principal_pow(y, 2.0 / 3.0);
  const Complex y43 = principal_pow(y, 4.0 / 3.0);
  const Complex u2 = u * u;
  if (k == 1) {
    return unit_phase(2 * kPi / 3) * u2 * (x + detail::kTwoFourThirds * u) / y23 +
           unit_phase(kPi / 3) * u2 * u2 / y43;
  }
  return unit_phase(-2 * kPi / 3) * u2 * (x - detail::kTwoFourThirds * u) / y23 +
         unit_phase(-kPi / 3) * u2 * u2 / y43;
}

/// Coefficient of y^{-2n/3} in e^{h_1} (BarKind::A) or e^{h_2} (BarKind::B).
inline Complex bar_coefficient(int n, Complex x, Complex u, BarKind which) {
  if (n < 0) throw PreconditionError("bar_coefficient: negative order");
  const Complex v = which == BarKind::A ? u : -u;
  Complex sum{};
  for (int m = (n + 1) / 2; m <= n; ++m) {
    for (int k = 0; k <= 2 * m - n; ++k) {
      Complex power{1.0, 0.0};
      for (int i = 0; i < 2 * m + n - k; ++i) power *= v;
      sum += a_coeff(n, m, k, x) * power;
    }
  }
  const double sign = which == BarKind::A ? -1.0 : 1.0;
  return unit_phase(sign * n * kPi / 3) * sum;
}

struct UInterval {
  double lower;
  double upper;
};

/// Case-3 landmarks. p1/p2 hold the finite u-limits of the P1/P2 integrals,
/// W and U the points of maximal Re f on the discarded tails of C.
struct CasePathLimits {
  double theta;
  UInterval p1;
  UInterval p2;
  Complex W;
  Complex U;
};

inline Complex landmark_W(double theta) {
  return saddle_points().t1 + detail::kTwoMinusTwoThirds * descent_direction(1, theta);
}

inline Complex landmark_U(double theta) {
  return saddle_points().t2 - detail::kTwoMinusTwoThirds * descent_direction(2, theta);
}

inline CasePathLimits case_path_limits(double theta, double y_mod) {
  detail::check_theta(theta, "case_path_limits");
  if (!(y_mod > 0.0)) throw DomainError("case_path_limits: |y| must be positive");
  const double far = std::cbrt(2.0 * y_mod * y_mod);
  const double near = std::pow(y_mod / 2.0, 2.0 / 3.0);
  return CasePathLimits{
      theta,
      {-far * std::cos((kPi + 2 * theta) / 3), near},
      {-near, far * std::cos((kPi - 2 * theta) / 3)},
      landmark_W(theta),
      landmark_U(theta),
  };
}

/// Point t_k + u |y|^{-2/3} d_k(theta) on C_k, d_k the descent direction.
inline Complex descent_line_point(int k, double theta, double y_mod, double u) {
  const SaddleSet s = saddle_points();
  const Complex tk = k == 1 ? s.t1 : s.t2;
  return tk + u * std::pow(y_mod, -2.0 / 3.0) * descent_direction(k, theta);
}

/// max(Re f(W), Re f(U)). The tails of C beyond W and U contribute
/// O(exp(|y|^{4/3} * rate)). Only defined for |theta| <= pi/8.
inline double negligible_decay_rate(double theta) {
  if (!(std::abs(theta) <= kPi / 8 + 1e-12)) {
    throw DomainError("negligible_decay_rate: theta must satisfy |theta| <= pi/8");
  }
  return std::max(phase_f(landmark_W(theta), theta).real(),
                  phase_f(landmark_U(theta), theta).real());
}

inline double negligible_tail_bound(double theta, double y_mod) {
  return std::exp(std::pow(y_mod, 4.0 / 3.0) * negligible_decay_rate(theta));
}

}  // namespace pearcey
