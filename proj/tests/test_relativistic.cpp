#include <cmath>
#include <numbers>

#include "doctest.h"
#include "mirror/bogolubov.hpp"
#include "mirror/relativistic.hpp"
#include "mirror/trajectory.hpp"

using namespace mirror;
using doctest::Approx;
using std::numbers::pi;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// |E_LO + E_NLO - E_rel| / E_rel for a trajectory.
double nlo_residual(TrajectoryKind k, double v) {
  const Trajectory tr = make_trajectory(k, 1.0, v);
  const double exact = energy_relativistic(tr).value;
  return std::abs(energy_leading(tr) + energy_nlo(tr).value - exact) / exact;
}

double lo_residual(TrajectoryKind k, double v) {
  const Trajectory tr = make_trajectory(k, 1.0, v);
  const double exact = energy_relativistic(tr).value;
  return std::abs(energy_leading(tr) - exact) / exact;
}

}  // namespace

TEST_CASE("beta_series: first order is half the two-sided beta") {
  for (TrajectoryKind k : kAllKinds) {
    CAPTURE(to_string(k));
    const Trajectory tr = make_trajectory(k, 1.0, 0.2);
    for (auto [p, q] : {std::pair{0.3, 0.2}, std::pair{0.1, 0.6}}) {
      const double one = std::norm(beta_series(tr, p, q, 1));
      CHECK(2.0 * one == Approx(beta_sq(tr, p, q).value).epsilon(1e-14));
    }
  }
}

TEST_CASE("beta_series: the n = 2 term vanishes at p = q") {
  const Trajectory g = make_trajectory(TrajectoryKind::Gauss, 1.0, 0.3);
  const auto terms = beta_series_terms(g, 0.4, 0.4, 3);
  REQUIRE(terms.size() == 3);
  CHECK(terms[1].value == std::complex<double>(0.0, 0.0));
  CHECK(terms[1].omega_minus == 0.0);
}

TEST_CASE("beta_series: higher orders fade as v falls") {
  // At p = q every term past the first carries omega_minus = 0, so the
  // series is compared away from the diagonal.
  auto deviation = [](double v, double p, double q) {
    const Trajectory g = make_trajectory(TrajectoryKind::Gauss, 1.0, v);
    return std::norm(beta_series(g, p, q, 3)) / std::norm(beta_series(g, p, q, 1)) - 1.0;
  };
  CHECK(deviation(0.5, 0.5, 0.5) == 0.0);
  const double big = std::abs(deviation(0.5, 0.9, 0.1));
  CHECK(big > 0.01);
  CHECK(std::abs(deviation(0.05, 0.9, 0.1)) < 0.02 * big);
  // The deviation is O(v^2).
  CHECK(deviation(0.1, 0.9, 0.1) / deviation(0.05, 0.9, 0.1) == Approx(4.0).epsilon(0.01));
}

TEST_CASE("beta_series: term n scales as v^n") {
  const Trajectory a = make_trajectory(TrajectoryKind::Sech, 1.0, 0.1);
  const Trajectory b = make_trajectory(TrajectoryKind::Sech, 1.0, 0.2);
  const auto ta = beta_series_terms(a, 0.7, 0.2, 4);
  const auto tb = beta_series_terms(b, 0.7, 0.2, 4);
  for (int n = 0; n < 4; ++n) {
    CHECK(std::abs(tb[n].value) == Approx(std::pow(2.0, n + 1) * std::abs(ta[n].value)).epsilon(1e-8));
  }
}

TEST_CASE("second order: the omega_minus term cancels between sides") {
  for (TrajectoryKind k : kAllKinds) {
    CAPTURE(to_string(k));
    const Trajectory tr = make_trajectory(k, 1.0, 0.2);
    for (auto [p, q] : {std::pair{0.3, 0.1}, std::pair{0.05, 0.8}, std::pair{0.6, 0.6}}) {
      const double two = beta_sq_second_order(tr, p, q, MirrorSide::Right) +
                         beta_sq_second_order(tr, p, q, MirrorSide::Left);
      CHECK(std::abs(two - beta_sq(tr, p, q).value) <= 1e-10 * beta_sq(tr, p, q).value + 1e-300);
    }
  }
}

TEST_CASE("second order: even kinds have no one-sided correction") {
  const Trajectory g = make_trajectory(TrajectoryKind::Gauss, 1.0, 0.3);
  const double right = beta_sq_second_order(g, 0.7, 0.2, MirrorSide::Right);
  CHECK(right == Approx(beta_sq(g, 0.7, 0.2).value / 2.0).epsilon(1e-10));
}

TEST_CASE("nlo: listed properties") {
  const Trajectory a = make_trajectory(TrajectoryKind::Gauss, 1.0, 0.1);
  const Trajectory b = make_trajectory(TrajectoryKind::Gauss, 1.0, 0.2);
  CHECK(beta_sq_nlo(a, 0.5, 0.5) == 0.0);
  CHECK(beta_sq_nlo(b, 0.9, 0.3) == Approx(16.0 * beta_sq_nlo(a, 0.9, 0.3)).epsilon(1e-6));
}

TEST_CASE("nlo: moduli and phase-sensitive forms coincide for real transforms") {
  const Trajectory g = make_trajectory(TrajectoryKind::Sech, 1.0, 0.2);
  for (double p : {0.2, 0.9}) {
    const double m = beta_sq_nlo(g, p, 0.1, NloForm::Moduli);
    const double s = beta_sq_nlo(g, p, 0.1, NloForm::PhaseSensitive);
    CHECK(rel(m, s) < 1e-9);
  }
}

TEST_CASE("relativistic energy reduces to the leading order as v falls") {
  const Trajectory g = make_trajectory(TrajectoryKind::Gauss, 1.0, 0.01);
  CHECK(rel(energy_relativistic(g).value, energy_leading(g)) < 1e-3);
  CHECK(lo_residual(TrajectoryKind::Gauss, 0.1) / lo_residual(TrajectoryKind::Gauss, 0.05) ==
        Approx(4.0).epsilon(0.05));
}

TEST_CASE("nlo: corrected energy tracks the relativistic oracle") {
  for (TrajectoryKind k : {TrajectoryKind::Gauss, TrajectoryKind::Sech}) {
    CAPTURE(to_string(k));
    const double r3 = nlo_residual(k, 0.3);
    const double r2 = nlo_residual(k, 0.2);
    const double r1 = nlo_residual(k, 0.1);
    CHECK(r3 > r2);
    CHECK(r2 > r1);
    CHECK(r3 < lo_residual(k, 0.3));
    CHECK(r3 / nlo_residual(k, 0.15) >= 8.0);
  }
}
