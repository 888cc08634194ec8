#include "mirror/bogolubov.hpp"

#include <cmath>
#include <numbers>

#include "mirror/errors.hpp"
#include "mirror/specfun.hpp"
#include "mirror/timedomain.hpp"

namespace mirror {

namespace {

using std::numbers::pi;

void check_frequency(double x, const char* who) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError(std::string(who) + ": frequencies must be finite and non-negative");
  }
}

double closed_spectrum(const Trajectory& traj, double p) {
  const double k = traj.kappa();
  const double a2 = traj.amplitude() * traj.amplitude();
  const double x = p / k;
  const double k2 = k * k;
  switch (traj.kind()) {
    case TrajectoryKind::Gauss:
      return 2.0 * a2 * p * std::exp(1.0 - x * x) / (pi * k2) *
             (1.0 - std::sqrt(pi) * x * erfcx(x));
    case TrajectoryKind::Lorentz:
    case TrajectoryKind::LinearLorentz:
      return a2 * p * std::exp(-2.0 * x) / (2.0 * k2);
    case TrajectoryKind::Sech:
      return 8.0 * a2 * p * std::log1p(std::exp(-pi * x)) / (pi * pi * k2);
    case TrajectoryKind::Sinc:
      return x < 1.0 ? a2 * x * (1.0 - x) * (1.0 - x) / k : 0.0;
    case TrajectoryKind::Jinc:
      // Prefactor 2/(3 pi^2): integrating |beta|^2 up to q = kappa - p.
      return x < 1.0 ? 2.0 * a2 * x * (3.0 + x) * std::pow(1.0 - x, 3) / (3.0 * pi * pi * k)
                     : 0.0;
    case TrajectoryKind::QuadLorentz: {
      const double y = std::numbers::sqrt2 * x;
      return a2 * p * std::exp(-y) * (2.0 - std::cos(y)) / (4.0 * k2);
    }
    case TrajectoryKind::BoseEinstein:
    case TrajectoryKind::FermiDirac: {
      const double e = std::exp(-2.0 * pi * x);
      const double pi3 = pi * pi * pi;
      if (traj.kind() == TrajectoryKind::BoseEinstein) {
        return a2 * x * (x * polylog(2, e) / pi3 + polylog(3, e) / (pi3 * pi)) / k;
      }
      return -a2 * x * (x * polylog(2, -e) / pi3 + polylog(3, -e) / (pi3 * pi)) / k;
    }
  }
  return 0.0;
}

double q_upper_closed(const Trajectory& traj, double p) {
  if (auto cut = traj.uv_cutoff()) return std::max(0.0, *cut - p);
  return std::numeric_limits<double>::infinity();
}

// int_0^upper g, with upper possibly infinite (rational map with scale kappa).
template <class G>
QuadResult integrate_to(G&& g, double upper, double kappa, const Tolerance& tol) {
  if (std::isinf(upper)) return integrate_semi_infinite(g, 0.0, kappa, tol);
  return integrate(g, 0.0, upper, tol);
}

QuadResult quadrature_spectrum(const Trajectory& traj, double p, const QuadratureConfig& cfg,
                               TransformSource source) {
  const Tolerance tol{cfg.abs_tol, cfg.rel_tol, cfg.max_segments};
  auto integrand = [&](double q) { return beta_sq(traj, p, q, source, cfg).value; };
  if (source == TransformSource::Numeric) {
    // Stop at the UV cutoff so the kink of |Z|^2 at omega = kappa is an
    // endpoint rather than an interior point.
    return integrate(integrand, 0.0, std::min(q_upper_closed(traj, p), kNumericQMax * traj.kappa()),
                     tol);
  }
  return integrate_to(integrand, q_upper_closed(traj, p), traj.kappa(), tol);
}

QuadResult quadrature_moment(const Trajectory& traj, int moment, const QuadratureConfig& cfg) {
  // Inner q-integrals are resolved more tightly than the outer p-integral.
  QuadratureConfig inner = cfg;
  inner.rel_tol = std::max(cfg.rel_tol * 1e-2, 1e-14);
  auto integrand = [&](double p) {
    const double n = quadrature_spectrum(traj, p, inner, TransformSource::ClosedForm).value;
    return moment == 0 ? n : p * n;
  };
  const double upper = traj.uv_cutoff() ? *traj.uv_cutoff()
                                        : std::numeric_limits<double>::infinity();
  return integrate_to(integrand, upper, traj.kappa(),
                      {cfg.abs_tol, cfg.rel_tol, cfg.max_segments});
}

}  // namespace

std::string_view to_string(Route route) {
  switch (route) {
    case Route::ClosedForm: return "closed-form";
    case Route::Quadrature: return "quadrature";
    case Route::Larmor: return "larmor";
  }
  return "?";
}

BetaSquared beta_sq(const Trajectory& traj, double p, double q, TransformSource source,
                    const QuadratureConfig& cfg) {
  check_frequency(p, "beta_sq");
  check_frequency(q, "beta_sq");
  BetaSquared out{p, q, 0.0};
  if (p == 0.0 || q == 0.0) return out;
  out.value = 4.0 / pi * (p * q) * transform_modulus_sq(traj, p + q, source, cfg);
  return out;
}

double particle_spectrum(const Trajectory& traj, double p, Route route,
                         const QuadratureConfig& cfg, TransformSource source) {
  check_frequency(p, "particle_spectrum");
  switch (route) {
    case Route::ClosedForm: return closed_spectrum(traj, p);
    case Route::Quadrature: return quadrature_spectrum(traj, p, cfg, source).value;
    case Route::Larmor:
      throw DomainError("particle_spectrum: the Larmor route gives N(omega), not N(p)");
  }
  return 0.0;
}

EmissionTotals total_particles(const Trajectory& traj, Route route,
                               const QuadratureConfig& cfg) {
  const double v2 = traj.v_max() * traj.v_max();
  EmissionTotals out;
  out.route = route;
  switch (route) {
    case Route::ClosedForm:
      out.n_over_v2 =
          particles_per_amplitude_sq(traj.kind()) * traj.amplitude() * traj.amplitude() / v2;
      break;
    case Route::Quadrature: {
      const QuadResult r = quadrature_moment(traj, 0, cfg);
      out.n_over_v2 = r.value / v2;
      out.n_error = r.error / v2;
      break;
    }
    case Route::Larmor: {
      const EmissionTotals l = larmor_totals(traj, cfg);
      out.n_over_v2 = l.n_over_v2;
      out.n_error = l.n_error;
      break;
    }
  }
  return out;
}

EmissionTotals total_energy(const Trajectory& traj, Route route, const QuadratureConfig& cfg) {
  const double scale = traj.kappa() * traj.v_max() * traj.v_max();
  EmissionTotals out;
  out.route = route;
  switch (route) {
    case Route::ClosedForm:
      out.e_over_hkv2 = energy_per_amplitude_sq(traj.kind()) * traj.amplitude() *
                        traj.amplitude() * traj.kappa() / scale;
      break;
    case Route::Quadrature: {
      const QuadResult r = quadrature_moment(traj, 1, cfg);
      out.e_over_hkv2 = r.value / scale;
      out.e_error = r.error / scale;
      break;
    }
    case Route::Larmor: {
      const EmissionTotals l = larmor_totals(traj, cfg);
      out.e_over_hkv2 = l.e_over_hkv2;
      out.e_error = l.e_error;
      break;
    }
  }
  return out;
}

EmissionTotals emission_totals(const Trajectory& traj, Route route,
                               const QuadratureConfig& cfg) {
  if (route == Route::Larmor) return larmor_totals(traj, cfg);
  EmissionTotals out = total_particles(traj, route, cfg);
  const EmissionTotals e = total_energy(traj, route, cfg);
  out.e_over_hkv2 = e.e_over_hkv2;
  out.e_error = e.e_error;
  return out;
}

SpectrumTable spectrum_table(const Trajectory& traj, std::span<const double> grid, Route route,
                             const QuadratureConfig& cfg) {
  SpectrumTable out;
  out.kind = traj.kind();
  out.route = route;
  out.grid.assign(grid.begin(), grid.end());
  out.values.reserve(grid.size());
  for (double p : grid) {
    out.values.push_back(route == Route::Larmor ? larmor_spectrum(traj, p)
                                                : particle_spectrum(traj, p, route, cfg));
  }
  return out;
}

}  // namespace mirror
