#include "mirror/timedomain.hpp"

#include <cmath>
#include <numbers>

#include "mirror/errors.hpp"

namespace mirror {

namespace {

using std::numbers::pi;

}  // namespace

PowerSample power_and_force(const Trajectory& traj, double t) {
  if (!std::isfinite(t)) throw DomainError("power_and_force: non-finite time");
  const double a = traj.acceleration(t);
  return {t, a * a / (6.0 * pi), -traj.jerk(t) / (6.0 * pi)};
}

QuadResult full_line_integral(const Trajectory& traj, const std::function<double(double)>& h,
                              const QuadratureConfig& cfg, bool linear) {
  auto folded = [&h](double t) { return h(t) + h(-t); };
  const double scale = 1.0 / traj.kappa();
  if (traj.uv_cutoff()) {
    const double period = (linear ? 2.0 : 1.0) * pi * scale;
    return integrate_half_line(folded, scale, TailShape::OscillatingAlgebraic, period, cfg);
  }
  return integrate_half_line(folded, scale, TailShape::Decaying, 0.0, cfg);
}

EmissionTotals energy_time(const Trajectory& traj, EnergyMethod method,
                           const QuadratureConfig& cfg) {
  QuadResult r;
  if (method == EnergyMethod::PowerIntegral) {
    r = full_line_integral(traj, [&traj](double t) { return power_and_force(traj, t).power; },
                           cfg);
  } else {
    r = full_line_integral(
        traj, [&traj](double t) { return power_and_force(traj, t).force * traj.velocity(t); },
        cfg);
  }
  const double scale = traj.kappa() * traj.v_max() * traj.v_max();
  EmissionTotals out;
  out.route = Route::Quadrature;
  out.e_over_hkv2 = r.value / scale;
  out.e_error = r.error / scale;
  return out;
}

double larmor_spectrum(const Trajectory& traj, double omega, TransformSource source,
                       const QuadratureConfig& cfg) {
  if (!std::isfinite(omega) || omega <= 0.0) {
    throw DomainError("larmor_spectrum: omega must be positive");
  }
  return 2.0 / (3.0 * pi) * omega * omega * omega *
         transform_modulus_sq(traj, omega, source, cfg);
}

EmissionTotals larmor_totals(const Trajectory& traj, const QuadratureConfig& cfg) {
  const Tolerance tol = Tolerance::from(cfg);
  auto moment = [&](int power) {
    auto g = [&](double w) {
      return w == 0.0 ? 0.0 : std::pow(w, power) * transform_modulus_sq(traj, w);
    };
    if (auto cut = traj.uv_cutoff()) return integrate(g, 0.0, *cut, tol);
    return integrate_semi_infinite(g, 0.0, traj.kappa(), tol);
  };
  const QuadResult n = moment(3);
  const QuadResult e = moment(4);
  const double v2 = traj.v_max() * traj.v_max();
  EmissionTotals out;
  out.route = Route::Larmor;
  out.n_over_v2 = 2.0 / (3.0 * pi) * n.value / v2;
  out.n_error = 2.0 / (3.0 * pi) * n.error / v2;
  out.e_over_hkv2 = e.value / (3.0 * pi * traj.kappa() * v2);
  out.e_error = e.error / (3.0 * pi * traj.kappa() * v2);
  return out;
}

QuadResult force_impulse(const Trajectory& traj, const QuadratureConfig& cfg) {
  return full_line_integral(
      traj, [&traj](double t) { return power_and_force(traj, t).force; }, cfg, true);
}

}  // namespace mirror
