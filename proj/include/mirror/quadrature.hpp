#pragma once

// Adaptive Gauss-Kronrod integration and the series accelerators used for
// oscillatory and algebraic tails.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "mirror/errors.hpp"

namespace mirror {

enum class TailPolicy {
  Extrapolate,  ///< accelerate/extrapolate infinite tails (default)
  Truncate,     ///< hard cut-off at `truncate_at` time scales
};

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-15;
  int max_segments = 20000;
  TailPolicy tail_policy = TailPolicy::Extrapolate;
  double truncate_at = 60.0;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  double abs_value = 0.0;  ///< integral of |f|, the roundoff scale
  long evaluations = 0;

  QuadResult& operator+=(const QuadResult& o) {
    value += o.value;
    error += o.error;
    abs_value += o.abs_value;
    evaluations += o.evaluations;
    return *this;
  }
};

namespace detail {

// 21-point Kronrod extension of the 10-point Gauss rule.
inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525452880, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Interval {
  double a, b, value, error, abs_value;
};

template <class F>
Interval gk21(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kron = fc * kWgk[10];
  double gauss = 0.0;
  double absk = std::abs(kron);
  for (int j = 0; j < 10; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    kron += kWgk[j] * (f1 + f2);
    absk += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  return {a, b, kron * h, std::abs((kron - gauss) * h), absk * std::abs(h)};
}

}  // namespace detail

struct Tolerance {
  double abs = 1e-15;
  double rel = 1e-10;
  int max_intervals = 20000;
  /// Relative accuracy of the integrand values themselves. Error estimates
  /// below noise * int|f| are treated as converged.
  double noise = 50.0 * std::numeric_limits<double>::epsilon();

  static Tolerance from(const QuadratureConfig& cfg) {
    return {cfg.abs_tol, cfg.rel_tol, cfg.max_segments};
  }
};

/// Globally adaptive GK21 on the finite interval [a, b]. Converges when the
/// summed error estimate is within max(abs, rel*|I|) or reaches the roundoff
/// floor of the integrand.
template <class F>
QuadResult integrate(F&& f, double a, double b, const Tolerance& tol = {}) {
  QuadResult out;
  if (a == b) return out;
  auto by_error = [](const detail::Interval& x, const detail::Interval& y) {
    return x.error < y.error;
  };
  std::vector<detail::Interval> heap;
  heap.push_back(detail::gk21(f, a, b));
  out.evaluations = 21;
  double value = heap.front().value;
  double error = heap.front().error;
  double absval = heap.front().abs_value;
  auto converged = [&] {
    return error <= std::max(tol.abs, tol.rel * std::abs(value)) ||
           error <= tol.noise * absval;
  };
  while (!converged()) {
    if (static_cast<int>(heap.size()) >= tol.max_intervals) {
      throw QuadratureError("adaptive quadrature did not converge on [" +
                                std::to_string(a) + ", " + std::to_string(b) +
                                "]",
                            error);
    }
    std::pop_heap(heap.begin(), heap.end(), by_error);
    const detail::Interval worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= std::min(worst.a, worst.b) || mid >= std::max(worst.a, worst.b)) {
      // Interval cannot be split further in double precision.
      throw QuadratureError("adaptive quadrature exhausted resolution", error);
    }
    const detail::Interval left = detail::gk21(f, worst.a, mid);
    const detail::Interval right = detail::gk21(f, mid, worst.b);
    out.evaluations += 42;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    absval += left.abs_value + right.abs_value - worst.abs_value;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), by_error);
  }
  // Re-sum to shed the drift of the running updates.
  value = 0.0;
  error = 0.0;
  absval = 0.0;
  for (const auto& iv : heap) {
    value += iv.value;
    error += iv.error;
    absval += iv.abs_value;
  }
  out.value = value;
  out.error = error;
  out.abs_value = absval;
  return out;
}

/// Integral over [a, inf) through the rational map t = a + scale*s/(1-s).
template <class F>
QuadResult integrate_semi_infinite(F&& f, double a, double scale,
                                   const Tolerance& tol = {}) {
  auto mapped = [&](double s) {
    const double one_minus = 1.0 - s;
    const double t = a + scale * s / one_minus;
    const double jac = scale / (one_minus * one_minus);
    const double v = f(t);
    return v == 0.0 ? 0.0 : v * jac;
  };
  return integrate(mapped, 0.0, 1.0, tol);
}

/// Sum of the alternating series sum_k (-1)^k a_k by the Cohen-Villegas-Zagier
/// algorithm using the first n = a.size() terms. Error decays like 5.8^-n for
/// completely monotone a_k.
double alternating_sum(std::span<const double> a);

/// Polynomial (Neville) extrapolation of samples y(h) to h = 0.
double extrapolate_to_zero(std::span<const double> h, std::span<const double> y);

enum class TailShape {
  Decaying,              ///< integrable, non-oscillating tail
  OscillatingAlgebraic,  ///< slow algebraic decay times a periodic factor
};

/// Integral of f over [0, inf). `scale` is the characteristic time of f.
/// Oscillating tails are handled by extrapolating the partial integrals,
/// sampled at multiples of `period`, in 1/T to T -> inf.
QuadResult integrate_half_line(const std::function<double(double)>& f,
                               double scale, TailShape shape, double period,
                               const QuadratureConfig& cfg);

}  // namespace mirror
