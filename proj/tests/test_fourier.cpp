#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "mirror/fourier.hpp"
#include "mirror/trajectory.hpp"

using namespace mirror;
using doctest::Approx;
using std::numbers::pi;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("ft: listed values") {
  const Trajectory g = make_trajectory(TrajectoryKind::Gauss, 1.0, 0.2);
  CHECK(std::abs(ft_closed(g, 1.0).value) == Approx(0.2).epsilon(1e-15));
  CHECK(std::abs(ft_numeric(g, 1.0).value) == Approx(0.2).epsilon(1e-12));

  const Trajectory s = make_trajectory(TrajectoryKind::Sech, 1.0, 0.3);
  CHECK(ft_numeric(s, 0.0).value.real() == Approx(0.6 * std::sqrt(pi / 2.0)).epsilon(1e-12));
  CHECK(ft_numeric(s, 0.0).value.real() == Approx(0.75199).epsilon(1e-5));

  const Trajectory ll = make_trajectory(TrajectoryKind::LinearLorentz, 2.0, 0.4);
  CHECK(ft_closed(ll, 0.0).value == std::complex<double>(0.0, 0.0));
  CHECK(std::abs(ft_numeric(ll, 0.0).value) < 1e-14);

  CHECK(std::abs(ft_closed(make_trajectory(TrajectoryKind::Sinc, 1.0, 0.2), 1.5).value) == 0.0);
  CHECK(std::abs(ft_closed(make_trajectory(TrajectoryKind::Jinc, 1.0, 0.2), 1.0).value) == 0.0);

  const Trajectory be = make_trajectory(TrajectoryKind::BoseEinstein, 1.0, 0.2);
  const double j2 = be.amplitude() * be.amplitude();
  CHECK(ft_closed(be, 1.0).modulus_sq() / j2 == Approx(1.87094e-3).epsilon(1e-5));
  CHECK(rel(ft_closed(be, 1.0).modulus_sq(), j2 / (std::exp(2.0 * pi) - 1.0)) < 1e-14);
  CHECK(ft_closed(be, 1.0).modulus_only);
}

TEST_CASE("ft_numeric: mpmath quadosc references") {
  // Unit profiles at kappa = 1, transformed with mpmath.quadosc (30 digits);
  // the trajectory transform is J times these.
  const Trajectory ql = make_trajectory(TrajectoryKind::QuadLorentz, 1.0, 0.2);
  CHECK(rel(ft_numeric(ql, 0.7).value.real(), ql.amplitude() * 0.218778358978194775782425698181) <
        1e-11);
  CHECK(rel(ft_numeric(ql, 2.5).value.real(), ql.amplitude() * -0.177973358731665249423936197032) <
        1e-11);

  const Trajectory be = make_trajectory(TrajectoryKind::BoseEinstein, 1.0, 0.2);
  const std::complex<double> z = ft_numeric(be, 0.5).value / be.amplitude();
  CHECK(std::abs(z - std::complex<double>(0.149486959395557898052027320498611,
                                          -0.015378610226964001397565538839627)) < 1e-11);
}

TEST_CASE("ft: closed form and numeric agree on [0.1, 5] kappa") {
  QuadratureConfig cfg;
  const double kappa = 1.3;
  for (TrajectoryKind k : kAllKinds) {
    CAPTURE(to_string(k));
    const Trajectory tr = make_trajectory(k, kappa, 0.2);
    const double z0 = std::abs(ft_numeric(tr, 0.0, cfg).value);
    for (double x : {0.1, 0.35, 0.8, 0.97, 1.05, 1.6, 2.4, 3.7, 5.0}) {
      const double w = x * kappa;
      const FourierValue c = ft_closed(tr, w);
      const FourierValue n = ft_numeric(tr, w, cfg);
      if (c.modulus_only) {
        CHECK(rel(n.modulus_sq(), c.modulus_sq()) < 100.0 * cfg.rel_tol);
      } else {
        // Relative where the transform is appreciable, absolute (against the
        // transform scale) where it has decayed away.
        CHECK(std::abs(n.value - c.value) <=
              100.0 * cfg.rel_tol * std::max(std::abs(c.value), 1e-6 * z0));
      }
    }
  }
}

TEST_CASE("ft: derivative rule |F[zdot]|^2 = w^2 |F[z]|^2") {
  for (TrajectoryKind k : kAllKinds) {
    CAPTURE(to_string(k));
    const Trajectory tr = make_trajectory(k, 1.0, 0.2);
    for (double w : {0.3, 1.0, 3.0}) {
      if (tr.uv_cutoff() && w >= *tr.uv_cutoff()) continue;
      const double zz = ft_numeric(position_profile(tr), w).modulus_sq();
      const double vv = ft_numeric(velocity_profile(tr), w).modulus_sq();
      CHECK(rel(vv, w * w * zz) < 1e-8);
    }
  }
}

TEST_CASE("ft: parity of the transform") {
  for (TrajectoryKind k : kAllKinds) {
    if (parity_of(k) == Parity::None) continue;
    CAPTURE(to_string(k));
    const Trajectory tr = make_trajectory(k, 1.0, 0.2);
    for (double w : {0.2, 0.7, 2.1}) {
      const std::complex<double> z = ft_numeric(tr, w).value;
      if (std::abs(z) == 0.0) continue;
      if (parity_of(k) == Parity::Even) {
        CHECK(std::abs(z.imag()) < 1e-10 * std::abs(z));
      } else {
        CHECK(std::abs(z.real()) < 1e-10 * std::abs(z));
      }
    }
  }
}

TEST_CASE("ft: kappa scaling Z_kappa(w) = Z_1(w/kappa) / kappa^2") {
  for (TrajectoryKind k : kAllKinds) {
    CAPTURE(to_string(k));
    const Trajectory a = make_trajectory(k, 1.0, 0.2);
    const Trajectory b = make_trajectory(k, 2.5, 0.2);
    for (double x : {0.25, 0.6, 1.7}) {
      const double lhs = ft_numeric(b, 2.5 * x).modulus_sq();
      const double rhs = ft_numeric(a, x).modulus_sq() / std::pow(2.5, 4);
      if (a.uv_cutoff() && x >= 1.0) {
        // Both sides are roundoff above the cutoff.
        CHECK(lhs < 1e-24);
        CHECK(rhs < 1e-24);
      } else {
        CHECK(rel(lhs, rhs) < 1e-9);
      }
    }
  }
}

TEST_CASE("ft: UV cutoff of the numeric transform") {
  for (TrajectoryKind k : {TrajectoryKind::Sinc, TrajectoryKind::Jinc}) {
    CAPTURE(to_string(k));
    const Trajectory tr = make_trajectory(k, 1.0, 0.2);
    const double z0 = std::abs(ft_numeric(tr, 0.0).value);
    for (double w : {1.05, 1.5, 2.0, 4.0}) CHECK(std::abs(ft_numeric(tr, w).value) < 1e-6 * z0);
  }
}

TEST_CASE("thermal identities") {
  const double bose2 = 1.0 / (std::exp(2.0 * pi) - 1.0);
  const double fermi2 = 1.0 / (std::exp(2.0 * pi) + 1.0);
  const double bose3 = 0.125 / (std::exp(pi) - 1.0);
  CHECK(bose2 == Approx(1.87094e-3).epsilon(1e-5));
  CHECK(fermi2 == Approx(1.86397e-3).epsilon(1e-5));
  CHECK(bose3 == Approx(5.6457e-3).epsilon(1e-4));

  const std::vector<double> one{1.0};
  const std::vector<double> half{0.5};
  CHECK(thermal_identity_check(ThermalKind::Bose, 2, one) < 1e-6);
  CHECK(thermal_identity_check(ThermalKind::Fermi, 2, one) < 1e-6);
  CHECK(thermal_identity_check(ThermalKind::Bose, 3, half) < 1e-6);
  CHECK_THROWS(thermal_identity_check(ThermalKind::Bose, 1, one));
}
