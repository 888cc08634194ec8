#include "mirror/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "mirror/errors.hpp"

namespace mirror {

namespace {

void require_finite(double x, const char* who) {
  if (!std::isfinite(x)) throw DomainError(std::string(who) + ": non-finite argument");
}

}  // namespace

double lambert_w0_exp(double y, const Precision& prec) {
  require_finite(y, "lambert_w0_exp");
  double w;
  if (y < -40.0) {
    return std::exp(y);  // W(x) = x - x^2 + ..., and x^2 is below ulp(x)
  }
  if (y < -2.0) {
    w = std::exp(y);
  } else if (y > 3.0) {
    w = y - std::log(y);
  } else {
    w = std::log1p(std::exp(y));
  }
  // Newton on g(w) = w + ln w - y. g is concave, so after one step the
  // iterates approach the root monotonically from below.
  for (int it = 0; it < prec.max_iter; ++it) {
    double next = w * (1.0 + y - std::log(w)) / (1.0 + w);
    if (next <= 0.0) next = 0.1 * w;
    const double step = std::abs(next - w);
    w = next;
    if (step <= prec.rel_tol * w + prec.abs_tol) break;
  }
  return w;
}

namespace detail {

double bessel_jn_series(int n, double x) {
  const long double half = 0.5L * x;
  const long double q = -half * half;
  long double term = 1.0L;
  for (int j = 1; j <= n; ++j) term *= half / j;
  long double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<long double>(k) * (k + n));
    sum += term;
    if (std::abs(term) <= 1e-21L * std::abs(sum) && k > std::abs(x)) break;
  }
  return static_cast<double>(sum);
}

double bessel_jn_asymptotic(int n, double x) {
  const double ax = std::abs(x);
  const double mu = 4.0 * n * n;
  double p = 0.0;
  double q = 0.0;
  double t = 1.0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 60; ++k) {
    if (k > 0) {
      const double odd = 2.0 * k - 1.0;
      t *= (mu - odd * odd) / (k * 8.0 * ax);
    }
    if (std::abs(t) > last) break;  // asymptotic series started to diverge
    last = std::abs(t);
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      p += sign * t;
    } else {
      q += sign * t;
    }
    if (std::abs(t) < 1e-18) break;
  }
  // chi = x - (n/2 + 1/4) pi, expanded so cos(x) and sin(x) carry the
  // argument reduction.
  const double phase = (0.5 * n + 0.25) * std::numbers::pi;
  const double c = std::cos(ax) * std::cos(phase) + std::sin(ax) * std::sin(phase);
  const double s = std::sin(ax) * std::cos(phase) - std::cos(ax) * std::sin(phase);
  const double value = std::sqrt(2.0 / (std::numbers::pi * ax)) * (p * c - q * s);
  return (x < 0.0 && n % 2 == 1) ? -value : value;
}

}  // namespace detail

double bessel_jn(int n, double x) {
  require_finite(x, "bessel_jn");
  if (n < 0) throw DomainError("bessel_jn: negative order");
  if (std::abs(x) < detail::kBesselSwitch) return detail::bessel_jn_series(n, x);
  return detail::bessel_jn_asymptotic(n, x);
}

double bessel_j1(double x) { return bessel_jn(1, x); }

namespace {

// B_{2m} for m = 1..15.
constexpr std::array<double, 15> kBernoulliEven = {
    1.0 / 6.0,           -1.0 / 30.0,          1.0 / 42.0,
    -1.0 / 30.0,         5.0 / 66.0,           -691.0 / 2730.0,
    7.0 / 6.0,           -3617.0 / 510.0,      43867.0 / 798.0,
    -174611.0 / 330.0,   854513.0 / 138.0,     -236364091.0 / 2730.0,
    8553103.0 / 6.0,     -23749461029.0 / 870.0, 8615841276005.0 / 14322.0};

// zeta at non-positive integers -n.
double zeta_nonpositive(int n) {
  if (n == 0) return -0.5;
  if (n % 2 == 0) return 0.0;
  const int m = (n + 1) / 2;  // zeta(1 - 2m) = -B_{2m} / (2m)
  return -kBernoulliEven[m - 1] / (2.0 * m);
}

double zeta_positive(int s) { return s == 2 ? kZeta2 : kZeta3; }

double polylog_direct(int s, double x) {
  double sum = 0.0;
  double xk = 1.0;
  for (int k = 1; k < 400; ++k) {
    xk *= x;
    const double term = xk / std::pow(static_cast<double>(k), s);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Expansion about x = 1 in mu = ln x, valid for |mu| < 2 pi.
double polylog_log_series(int s, double x) {
  const double mu = std::log(x);
  if (mu == 0.0) return zeta_positive(s);
  double sum = 0.0;
  double mu_k = 1.0;  // mu^k / k!
  for (int k = 0; k <= 31; ++k) {
    if (k > 0) mu_k *= mu / k;
    if (k == s - 1) {
      const double harmonic = (s == 2) ? 1.0 : 1.5;
      sum += mu_k * (harmonic - std::log(-mu));
      continue;
    }
    const int arg = s - k;
    const double z = arg > 0 ? zeta_positive(arg) : zeta_nonpositive(-arg);
    sum += z * mu_k;
  }
  return sum;
}

double polylog_positive(int s, double x) {
  if (x <= 0.5) return polylog_direct(s, x);
  return polylog_log_series(s, x);
}

}  // namespace

double polylog(int s, double x) {
  require_finite(x, "polylog");
  if (s != 2 && s != 3) throw DomainError("polylog: only orders 2 and 3 are supported");
  if (std::abs(x) > 1.0) throw DomainError("polylog: |x| > 1");
  if (x == 0.0) return 0.0;
  if (x > 0.0) return polylog_positive(s, x);
  const double y = -x;
  if (y <= 0.5) return polylog_direct(s, x);
  // Li_s(-y) = 2^{1-s} Li_s(y^2) - Li_s(y)
  return std::pow(2.0, 1 - s) * polylog_positive(s, y * y) - polylog_positive(s, y);
}

double erfc_fn(double x) {
  if (std::isnan(x)) throw DomainError("erfc_fn: NaN argument");
  return std::erfc(x);
}

double erfcx(double x) {
  if (std::isnan(x)) throw DomainError("erfcx: NaN argument");
  if (x < 0.0) return 2.0 * std::exp(x * x) - erfcx(-x);
  if (x < 5.0) return std::exp(x * x) * std::erfc(x);
  // Continued fraction 1/(sqrt(pi)(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))).
  double t = x;
  for (int n = 80; n >= 1; --n) t = x + 0.5 * n / t;
  return 1.0 / (std::sqrt(std::numbers::pi) * t);
}

}  // namespace mirror
