#pragma once

// Large-|y| asymptotic expansion of
//
//   P(x, y) = int_0^inf exp(-t^4 - x t^2) cos(y t) dt
//
// for bounded |x|. Two saddle contributions
//
//   P_k ~ sqrt(pi/3) / (2^{5/6} y^{1/3})
//         * exp(3 y^{4/3} 4^{-4/3} e^{-s 2 i pi/3} - x y^{2/3} 4^{-2/3} e^{-s i pi/3} + x^2/6)
//         * sum_n e^{s (2n+1) i pi/6} A_n(x) / y^{2n/3},          s = (-1)^k,
//
// are combined per sector of theta = arg y (after folding y into Re y >= 0):
//   |theta| <= pi/8      P1 + P2  (up to O(exp(-1.38077 |y|^{4/3})))
//   theta <  -pi/8       P1
//   theta >   pi/8       P2

#include <cmath>
#include <string>
#include <string_view>
#include <vector>

#include "pearcey/coefficients.hpp"
#include "pearcey/types.hpp"

namespace pearcey {

/// Default truncation order N.
inline constexpr int kDefaultOrder = 5;

/// Below this |y| the expansion is flagged as inaccurate.
inline constexpr double kAccuracyWarningModulus = 5.0;

/// The "auto" evaluation method uses the expansion from this |y| on.
inline constexpr double kAutoAsymptoticThreshold = 8.0;

struct EvalPoint {
  Complex x;
  Complex y_raw;
  Complex y;     // y_raw folded into Re y >= 0
  double theta;  // arg y
};

enum class Region { Case1, Case2, Case3 };

inline std::string_view to_string(Region r) {
  switch (r) {
    case Region::Case1: return "CASE1";
    case Region::Case2: return "CASE2";
    case Region::Case3: return "CASE3";
  }
  return "?";
}

struct ExpansionResult {
  Complex value;
  int order = 0;
  Region region = Region::Case3;
  Complex p1_contrib;
  Complex p2_contrib;
  std::vector<Complex> partial_sums;  // partial_sums[n] uses series terms 0..n
  double first_omitted_magnitude = 0.0;
  std::vector<std::string> warnings;
};

enum class Dominance { P1, P2, Both };

inline std::string_view to_string(Dominance d) {
  switch (d) {
    case Dominance::P1: return "P1";
    case Dominance::P2: return "P2";
    case Dominance::Both: return "BOTH";
  }
  return "?";
}

struct StokesRecord {
  Dominance dominant;
  bool on_anti_stokes;
};

inline EvalPoint normalize(Complex x, Complex y) {
  if (y == Complex{}) {
    throw DomainError("asymptotic expansion undefined at y=0; use quadrature");
  }
  // P(x, y) = P(x, -y). Re y == 0 keeps the caller's sign.
  const Complex folded = y.real() < 0.0 ? -y : y;
  return {x, y, folded, std::arg(folded)};
}

inline Region classify_region(double theta) {
  if (std::abs(theta) <= kPi / 8) return Region::Case3;
  return theta < 0.0 ? Region::Case1 : Region::Case2;
}

inline Region classify_region(const EvalPoint& p) { return classify_region(p.theta); }

namespace detail {

inline void check_k(int k, const char* who) {
  if (k != 1 && k != 2) throw DomainError(std::string(who) + ": k must be 1 or 2");
}

inline double k_sign(int k) { return k == 1 ? -1.0 : 1.0; }

}  // namespace detail

/// Logarithm of the factor multiplying the series of P_k. Stays finite when
/// the factor itself would overflow.
inline Complex log_prefactor(int k, Complex x, Complex y) {
  detail::check_k(k, "prefactor");
  if (y == Complex{}) throw DomainError("prefactor: y must be nonzero");
  const double s = detail::k_sign(k);
  const Complex log_y = std::log(y);
  const Complex y23 = std::exp(2.0 * log_y / 3.0);
  const Complex y43 = std::exp(4.0 * log_y / 3.0);
  const Complex exponent = 3.0 * y43 / std::pow(4.0, 4.0 / 3.0) * unit_phase(-s * 2 * kPi / 3) -
                           x * y23 / std::pow(4.0, 2.0 / 3.0) * unit_phase(-s * kPi / 3) +
                           x * x / 6.0;
  const double scale = std::sqrt(kPi / 3.0) / std::exp2(5.0 / 6.0);
  return std::log(scale) - log_y / 3.0 + exponent;
}

inline Complex prefactor(int k, Complex x, Complex y) { return std::exp(log_prefactor(k, x, y)); }

/// Terms 0..N of the series of P_k, each already weighted by its phase and
/// y^{-2n/3}.
inline std::vector<Complex> series_terms(int k, const CoefficientTable& table, Complex y, int N) {
  detail::check_k(k, "series_sum");
  if (y == Complex{}) throw DomainError("series_sum: y must be nonzero");
  if (N < 0) throw PreconditionError("series_sum: negative order");
  if (N > table.max_order()) {
    throw CapabilityError("series_sum: order " + std::to_string(N) +
                          " exceeds coefficient table order " + std::to_string(table.max_order()));
  }
  const double s = detail::k_sign(k);
  const Complex log_y = std::log(y);
  std::vector<Complex> terms;
  terms.reserve(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    terms.push_back(unit_phase(s * (2 * n + 1) * kPi / 6) * table.A()[n] *
                    std::exp(-2.0 * n * log_y / 3.0));
  }
  return terms;
}

inline Complex series_sum(int k, const CoefficientTable& table, Complex y, int N) {
  Complex sum{};
  for (const Complex& term : series_terms(k, table, y, N)) sum += term;
  return sum;
}

inline Complex pearcey_Pk(int k, Complex x, Complex y, int N) {
  return prefactor(k, x, y) * series_sum(k, build_table(x, N), y, N);
}

/// Asymptotic approximation of P(x, y) truncated after the y^{-2N/3} term.
inline ExpansionResult pearcey_asymptotic(Complex x, Complex y, int N = kDefaultOrder) {
  const EvalPoint p = normalize(x, y);
  if (N < 0) throw PreconditionError("pearcey_asymptotic: negative order");
  if (N + 1 > kMaxOrder) {
    throw CapabilityError("pearcey_asymptotic: order " + std::to_string(N) +
                          " exceeds supported maximum " + std::to_string(kMaxOrder - 1));
  }
  const CoefficientTable table = build_table(x, N + 1);

  ExpansionResult result;
  result.order = N;
  result.region = classify_region(p);
  result.partial_sums.assign(static_cast<std::size_t>(N) + 1, Complex{});

  const bool use1 = result.region != Region::Case2;
  const bool use2 = result.region != Region::Case1;
  const double y_mod = std::abs(p.y);
  const double omitted_scale = std::abs(table.A()[N + 1]) * std::pow(y_mod, -2.0 * (N + 1) / 3.0);

  for (int k = 1; k <= 2; ++k) {
    if ((k == 1 && !use1) || (k == 2 && !use2)) continue;
    const Complex pref = prefactor(k, x, p.y);
    const std::vector<Complex> terms = series_terms(k, table, p.y, N);
    Complex running{};
    for (int n = 0; n <= N; ++n) {
      running += terms[n];
      result.partial_sums[n] += pref * running;
    }
    (k == 1 ? result.p1_contrib : result.p2_contrib) = pref * running;
    result.first_omitted_magnitude += std::abs(pref) * omitted_scale;
  }
  result.value = result.p1_contrib + result.p2_contrib;

  if (y_mod < kAccuracyWarningModulus) {
    result.warnings.emplace_back("|y| < 5: expansion accuracy is at the percent level or worse");
  }
  if (!std::isfinite(result.value.real()) || !std::isfinite(result.value.imag())) {
    result.warnings.emplace_back("prefactor overflow: value is not representable in double");
  }
  return result;
}

/// Which saddle contribution governs P on the folded y.
inline StokesRecord stokes_classification(Complex y) {
  const EvalPoint p = normalize(Complex{}, y);
  Dominance d = Dominance::Both;
  if (p.y.imag() > 0.0) d = Dominance::P2;
  if (p.y.imag() < 0.0) d = Dominance::P1;
  const bool anti = std::abs(std::abs(p.theta) - 3 * kPi / 8) <= 1e-12;
  return {d, anti};
}

}  // namespace pearcey
