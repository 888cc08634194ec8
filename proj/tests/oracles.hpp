#pragma once

// Reference implementations that share no code with the library, used as
// test oracles.

#include <cmath>
#include <functional>

namespace oracle {

// Ascending series for J_n, summed until the terms stop changing the sum.
// Accurate to a few ulp of max|term| for |x| <= 20.
inline long double bessel_jn(int n, long double x) {
  long double term = 1.0L;
  for (int k = 1; k <= n; ++k) term *= x / (2.0L * k);
  long double sum = term;
  const long double q = -x * x / 4.0L;
  for (int k = 1; k < 300; ++k) {
    term *= q / (static_cast<long double>(k) * (k + n));
    const long double next = sum + term;
    if (next == sum && std::fabs(term) < 1e-30L) break;
    sum = next;
  }
  return sum;
}

// W(e^y) by Newton's method on w e^w = e^y, started from a crude guess.
inline double lambert_w_exp(double y) {
  double w = y > 1.0 ? y - std::log(y) : std::exp(y) / (1.0 + std::exp(y));
  for (int i = 0; i < 200; ++i) {
    // Newton on g(w) = w + ln w - y, g' = 1 + 1/w.
    const double step = (w + std::log(w) - y) / (1.0 + 1.0 / w);
    double next = w - step;
    if (next <= 0.0) next = 0.5 * w;
    if (std::abs(next - w) <= 1e-16 * w) return next;
    w = next;
  }
  return w;
}

// Direct polylog series with n terms.
inline long double polylog_series(int s, long double x, long n) {
  long double sum = 0.0L;
  long double power = 1.0L;
  for (long k = 1; k <= n; ++k) {
    power *= x;
    sum += power / std::pow(static_cast<long double>(k), s);
  }
  return sum;
}

// Golden-section maximum of f on [a, b].
inline double golden_max(const std::function<double(double)>& f, double a, double b,
                         double tol = 1e-13) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  while (b - a > tol) {
    if (f(c) > f(d)) {
      b = d;
    } else {
      a = c;
    }
    c = b - g * (b - a);
    d = a + g * (b - a);
  }
  return 0.5 * (a + b);
}

// Composite Simpson rule, for smooth integrands on short intervals.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace oracle
