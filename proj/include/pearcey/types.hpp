#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace pearcey {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (e.g. y = 0 for
/// the large-|y| expansion).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Violated index or range precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Request beyond what the implementation supports (order cap, precision cap).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Quadrature could not meet its tolerance. Carries the best estimate.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, Complex estimate, double achieved_error)
      : Error(what), estimate_(estimate), achieved_error_(achieved_error) {}

  Complex estimate() const noexcept { return estimate_; }
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  Complex estimate_;
  double achieved_error_;
};

/// z^p on the principal branch, exp(p * Log z) with arg z in (-pi, pi].
inline Complex principal_pow(Complex z, double p) {
  if (z == Complex{}) {
    return p > 0.0 ? Complex{} : Complex{INFINITY, 0.0};
  }
  return std::exp(p * std::log(z));
}

/// e^{i*phi}
inline Complex unit_phase(double phi) { return std::polar(1.0, phi); }

}  // namespace pearcey
