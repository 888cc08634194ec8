#pragma once

// Special functions needed by the closed-form spectra and the thermal
// trajectories. Real arguments only.

#include <numbers>

namespace mirror {

struct Precision {
  double rel_tol = 4.0e-16;
  double abs_tol = 0.0;
  int max_iter = 100;
};

inline constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;
inline constexpr double kZeta3 = 1.2020569031595942854;
inline constexpr double kZeta5 = 1.0369277551433699263;
/// Dirichlet eta(5) = (1 - 2^-4) zeta(5).
inline constexpr double kEta5 = 15.0 / 16.0 * kZeta5;

/// W(e^y) for the principal branch, found as the root of w + ln w = y so
/// that e^y is never formed. Throws DomainError for non-finite y.
double lambert_w0_exp(double y, const Precision& prec = {});

/// Bessel function of the first kind, order 1.
double bessel_j1(double x);

/// Bessel J_n for small integer orders n >= 0 (used for derivatives of the
/// jinc profile).
double bessel_jn(int n, double x);

/// Li_s(x) for s in {2, 3} and |x| <= 1.
double polylog(int s, double x);

/// Complementary error function.
double erfc_fn(double x);

/// Scaled complementary error function e^{x^2} erfc(x); finite for large x.
double erfcx(double x);

namespace detail {
// Exposed so the switchover between the two representations can be tested.
double bessel_jn_series(int n, double x);
double bessel_jn_asymptotic(int n, double x);
inline constexpr double kBesselSwitch = 17.0;
}  // namespace detail

}  // namespace mirror
