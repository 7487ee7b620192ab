#pragma once

// Gauss-Legendre panel quadrature with adaptive bisection, generic over the
// real type (double or a boost::multiprecision float) and the value type
// (real or complex). Each panel is accepted when the n-point rule on the
// whole panel agrees with the sum of the rules on its two halves.

#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

namespace pearcey::quadrature {

template <class Real>
class GaussLegendre {
 public:
  explicit GaussLegendre(int n) : nodes_(static_cast<std::size_t>(n)), weights_(nodes_.size()) {
    using std::abs;
    using std::cos;
    const Real eps = std::numeric_limits<Real>::epsilon();
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
      // Tricomi initial guess, refined by Newton in full working precision.
      Real z = cos(Real(3.14159265358979323846) * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
      Real derivative = 0;
      for (int iter = 0; iter < 100; ++iter) {
        Real p0 = 1;
        Real p1 = z;
        for (int j = 2; j <= n; ++j) {
          Real p2 = ((2 * j - 1) * z * p1 - (j - 1) * p0) / j;
          p0 = std::move(p1);
          p1 = std::move(p2);
        }
        derivative = n * (z * p1 - p0) / (z * z - 1);
        const Real dz = p1 / derivative;
        z -= dz;
        if (abs(dz) <= 4 * eps) break;
      }
      const Real w = 2 / ((1 - z * z) * derivative * derivative);
      nodes_[static_cast<std::size_t>(i)] = -z;
      weights_[static_cast<std::size_t>(i)] = w;
      nodes_[static_cast<std::size_t>(n - 1 - i)] = z;
      weights_[static_cast<std::size_t>(n - 1 - i)] = w;
    }
  }

  int size() const noexcept { return static_cast<int>(nodes_.size()); }
  const std::vector<Real>& nodes() const noexcept { return nodes_; }
  const std::vector<Real>& weights() const noexcept { return weights_; }

  /// Returns {integral, integral of |f|} over [a, b].
  template <class F>
  auto apply(const F& f, const Real& a, const Real& b) const {
    using std::abs;
    using Value = decltype(f(a));
    const Real half = (b - a) / 2;
    const Real mid = (a + b) / 2;
    Value sum = Value(0);
    Real l1 = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const Value v = f(mid + half * nodes_[i]);
      sum += v * weights_[i];
      l1 += Real(abs(v)) * weights_[i];
    }
    return std::pair<Value, Real>{sum * half, l1 * abs(half)};
  }

 private:
  std::vector<Real> nodes_;
  std::vector<Real> weights_;
};

template <class Real>
struct AdaptiveOptions {
  Real abs_tol;
  Real rel_tol;
  Real max_panel_width;
  std::size_t max_subdivisions = 200000;
};

template <class Value, class Real>
struct IntegrationResult {
  Value value;
  Real error;
  Real l1;
  std::size_t panels = 0;
  bool converged = true;
};

/// Integrates f over [a, b]. The interval is first cut into equal panels no
/// wider than max_panel_width. A panel passes when
///   |whole - (left + right)| <= max(abs_tol * width / (b - a), rel_tol * L1(panel)).
template <class Real, class F>
auto integrate(const F& f, const Real& a, const Real& b, const GaussLegendre<Real>& rule,
               const AdaptiveOptions<Real>& opt) {
  using std::abs;
  using std::ceil;
  using std::max;
  using Value = decltype(f(a));
  using Estimate = std::pair<Value, Real>;

  IntegrationResult<Value, Real> out{Value(0), Real(0), Real(0)};
  const Real length = b - a;
  if (length == 0) return out;

  struct Panel {
    Real lo;
    Real hi;
    Estimate whole;
  };

  long initial = 1;
  if (opt.max_panel_width > 0) {
    initial = std::max(1L, static_cast<long>(ceil(Real(abs(length) / opt.max_panel_width))));
  }
  std::size_t splits = 0;
  std::vector<Panel> stack;
  for (long i = initial - 1; i >= 0; --i) {
    const Real lo = a + length * Real(i) / Real(initial);
    const Real hi = (i + 1 == initial) ? b : a + length * Real(i + 1) / Real(initial);
    stack.push_back({lo, hi, rule.apply(f, lo, hi)});
  }

  while (!stack.empty()) {
    Panel p = std::move(stack.back());
    stack.pop_back();
    const Real mid = (p.lo + p.hi) / 2;
    Estimate left = rule.apply(f, p.lo, mid);
    Estimate right = rule.apply(f, mid, p.hi);
    const Value refined = left.first + right.first;
    const Real l1 = left.second + right.second;
    const Real err = Real(abs(Value(p.whole.first - refined)));
    const Real tol = max(Real(opt.abs_tol * abs(Real((p.hi - p.lo) / length))), Real(opt.rel_tol * l1));
    if (err <= tol || splits >= opt.max_subdivisions) {
      if (err > tol) out.converged = false;
      out.value += refined;
      out.error += err;
      out.l1 += l1;
      ++out.panels;
      continue;
    }
    ++splits;
    stack.push_back({mid, p.hi, std::move(right)});
    stack.push_back({p.lo, mid, std::move(left)});
  }
  return out;
}

}  // namespace pearcey::quadrature
