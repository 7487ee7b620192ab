#pragma once

// Coefficient families of the large-|y| Pearcey expansion:
//
//   a_{n,m,k}(x) = x^k 2^{4(2m-n-k)/3} (-1)^m / (k! (2m-n-k)! (n-m)!)
//   c_n(x)       = Gaussian moments, c_0 = 1, c_1 = x/(3*2^{1/3}),
//                  c_{n+2} = x/(3*2^{1/3}) c_{n+1} + (n+1)/(3*2^{2/3}) c_n
//   A_n(x)       = sum_{m=floor((n+1)/2)}^{n} sum_{k=0}^{2m-n}
//                      (-1)^{n+k} a_{n,m,k}(x) c_{2m+n-k}(x)

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "pearcey/types.hpp"

namespace pearcey {

/// Largest expansion order for which coefficient tables are built.
inline constexpr int kMaxOrder = 64;

namespace detail {

inline constexpr std::array<std::uint64_t, 21> kExactFactorials = [] {
  std::array<std::uint64_t, 21> f{};
  f[0] = 1;
  for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * i;
  return f;
}();

inline const double kCbrt2 = std::cbrt(2.0);

}  // namespace detail

/// n! exactly for n <= 20, exp(lgamma(n+1)) above.
inline double factorial(int n) {
  if (n < 0) throw PreconditionError("factorial: negative argument");
  if (n <= 20) return static_cast<double>(detail::kExactFactorials[static_cast<std::size_t>(n)]);
  return std::exp(std::lgamma(static_cast<double>(n) + 1.0));
}

inline Complex a_coeff(int n, int m, int k, Complex x) {
  if (n < 0 || m < 0 || k < 0) {
    throw PreconditionError("a_coeff: indices must be nonnegative");
  }
  if (m < (n + 1) / 2) {
    throw PreconditionError("a_coeff: requires floor((n+1)/2) <= m, got n=" + std::to_string(n) +
                            " m=" + std::to_string(m));
  }
  if (m > n) {
    throw PreconditionError("a_coeff: requires m <= n, got n=" + std::to_string(n) +
                            " m=" + std::to_string(m));
  }
  if (k > 2 * m - n) {
    throw PreconditionError("a_coeff: requires k <= 2m-n, got n=" + std::to_string(n) +
                            " m=" + std::to_string(m) + " k=" + std::to_string(k));
  }
  const int j = 2 * m - n - k;
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double weight =
      std::exp2(4.0 * j / 3.0) * sign / (factorial(k) * factorial(j) * factorial(n - m));
  // x^0 must be exactly 1 even at x = 0.
  Complex xk{1.0, 0.0};
  for (int i = 0; i < k; ++i) xk *= x;
  return weight * xk;
}

/// c_0..c_last by the three-term recursion. Regular at x = 0.
inline std::vector<Complex> c_sequence(int last, Complex x) {
  if (last < 0) throw PreconditionError("c_sequence: negative index");
  const Complex step = x / (3.0 * detail::kCbrt2);
  const double lag = 1.0 / (3.0 * detail::kCbrt2 * detail::kCbrt2);
  std::vector<Complex> c(static_cast<std::size_t>(last) + 1);
  c[0] = 1.0;
  if (last >= 1) c[1] = step;
  for (int n = 0; n + 2 <= last; ++n) {
    c[n + 2] = step * c[n + 1] + (n + 1.0) * lag * c[n];
  }
  return c;
}

inline Complex c_coeff(int n, Complex x) { return c_sequence(n, x).back(); }

/// Closed form of c_n(x). Singular at x = 0; kept as a cross-check of the
/// recursion.
inline Complex c_coeff_closed(int n, Complex x) {
  if (n < 0) throw PreconditionError("c_coeff_closed: negative index");
  if (x == Complex{}) {
    throw DomainError("c_coeff_closed: closed form is singular at x = 0; use c_coeff");
  }
  const Complex ratio = 1.5 / (x * x);
  Complex sum{};
  Complex ratio_pow{1.0, 0.0};
  for (int k = 0; 2 * k <= n; ++k) {
    sum += ratio_pow * (factorial(n) / (factorial(k) * factorial(n - 2 * k)));
    ratio_pow *= ratio;
  }
  Complex xn{1.0, 0.0};
  for (int i = 0; i < n; ++i) xn *= x;
  return xn / (std::pow(3.0, n) * std::exp2(n / 3.0)) * sum;
}

namespace detail {

inline Complex A_from_c(int n, Complex x, const std::vector<Complex>& c) {
  Complex sum{};
  for (int m = (n + 1) / 2; m <= n; ++m) {
    for (int k = 0; k <= 2 * m - n; ++k) {
      const double sign = ((n + k) % 2 == 0) ? 1.0 : -1.0;
      sum += sign * a_coeff(n, m, k, x) * c[static_cast<std::size_t>(2 * m + n - k)];
    }
  }
  return sum;
}

}  // namespace detail

inline Complex A_coeff(int n, Complex x) {
  if (n < 0) throw PreconditionError("A_coeff: negative order");
  return detail::A_from_c(n, x, c_sequence(3 * n, x));
}

/// Cached c_n (n <= 3*max_order) and A_n (n <= max_order) for one x.
/// Immutable once built.
class CoefficientTable {
 public:
  CoefficientTable(Complex x, int max_order) : x_(x), max_order_(max_order) {
    if (max_order < 0) throw PreconditionError("CoefficientTable: negative max_order");
    if (max_order > kMaxOrder) {
      throw CapabilityError("CoefficientTable: max_order " + std::to_string(max_order) +
                            " exceeds supported maximum " + std::to_string(kMaxOrder));
    }
    c_ = c_sequence(3 * max_order, x);
    A_.reserve(static_cast<std::size_t>(max_order) + 1);
    for (int n = 0; n <= max_order; ++n) A_.push_back(detail::A_from_c(n, x, c_));
  }

  Complex x() const noexcept { return x_; }
  int max_order() const noexcept { return max_order_; }
  const std::vector<Complex>& c() const noexcept { return c_; }
  const std::vector<Complex>& A() const noexcept { return A_; }

 private:
  Complex x_;
  int max_order_;
  std::vector<Complex> c_;
  std::vector<Complex> A_;
};

inline CoefficientTable build_table(Complex x, int max_order) { return {x, max_order}; }

}  // namespace pearcey
