#include "mirror/relativistic.hpp"

#include <cmath>
#include <numbers>

#include "mirror/errors.hpp"
#include "mirror/timedomain.hpp"

namespace mirror {

namespace {

using std::numbers::pi;

void check_pair(double p, double q, const char* who) {
  if (!std::isfinite(p) || !std::isfinite(q) || p < 0.0 || q < 0.0) {
    throw DomainError(std::string(who) + ": p and q must be finite and non-negative");
  }
}

// F[z^n](omega) for the right-side mirror.
std::complex<double> power_transform(const Trajectory& traj, int n, double omega,
                                     const QuadratureConfig& cfg) {
  if (n == 1) {
    const FourierValue closed = ft_closed(traj, omega);
    if (!closed.modulus_only) return closed.value;
  }
  return ft_numeric(power_profile(traj, n), omega, cfg).value;
}

double nlo_bracket(const Trajectory& traj, double omega, NloForm form,
                   const QuadratureConfig& cfg) {
  const std::complex<double> z1 = power_transform(traj, 1, omega, cfg);
  const std::complex<double> z2 = power_transform(traj, 2, omega, cfg);
  const std::complex<double> z3 = power_transform(traj, 3, omega, cfg);
  const double cross = form == NloForm::Moduli ? std::abs(z1) * std::abs(z3)
                                               : (z1 * std::conj(z3)).real();
  return std::norm(z2) - 4.0 / 3.0 * cross;
}

}  // namespace

std::vector<BetaSeriesTerm> beta_series_terms(const Trajectory& traj, double p, double q,
                                              int n_max, MirrorSide side,
                                              const QuadratureConfig& cfg) {
  check_pair(p, q, "beta_series");
  if (n_max < 1 || n_max > 6) throw DomainError("beta_series: n_max must be in 1..6");
  const double omega = p + q;
  const double omega_minus = p - q;
  const double prefactor = std::sqrt(2.0 * p * q / pi);
  std::vector<BetaSeriesTerm> out;
  std::complex<double> i_pow = 1.0;
  double factorial = 1.0;
  for (int n = 1; n <= n_max; ++n) {
    i_pow *= std::complex<double>(0.0, 1.0);
    factorial *= n;
    BetaSeriesTerm term{n, 0.0, omega_minus};
    const double weight = std::pow(omega_minus, n - 1);
    if (prefactor != 0.0 && weight != 0.0) {
      std::complex<double> zn = power_transform(traj, n, omega, cfg);
      if (side == MirrorSide::Left && n % 2 == 1) zn = -zn;
      term.value = prefactor * i_pow * weight / factorial * zn;
    }
    out.push_back(term);
  }
  return out;
}

std::complex<double> beta_series(const Trajectory& traj, double p, double q, int n_max,
                                 MirrorSide side, const QuadratureConfig& cfg) {
  std::complex<double> sum = 0.0;
  for (const auto& term : beta_series_terms(traj, p, q, n_max, side, cfg)) sum += term.value;
  return sum;
}

double beta_sq_second_order(const Trajectory& traj, double p, double q, MirrorSide side,
                            const QuadratureConfig& cfg) {
  check_pair(p, q, "beta_sq_second_order");
  if (p == 0.0 || q == 0.0) return 0.0;
  const double omega = p + q;
  const double omega_minus = p - q;
  const std::complex<double> z1 = power_transform(traj, 1, omega, cfg);
  double correction = 0.0;
  if (omega_minus != 0.0) {
    const std::complex<double> z2 = power_transform(traj, 2, omega, cfg);
    correction = omega_minus * (z1 * std::conj(z2)).imag();
    if (side == MirrorSide::Left) correction = -correction;
  }
  return 2.0 * p * q / pi * (std::norm(z1) + correction);
}

double beta_sq_nlo(const Trajectory& traj, double p, double q, NloForm form,
                   const QuadratureConfig& cfg) {
  check_pair(p, q, "beta_sq_nlo");
  const double omega_minus = p - q;
  if (p == 0.0 || q == 0.0 || omega_minus == 0.0) return 0.0;
  return p * q / pi * omega_minus * omega_minus * nlo_bracket(traj, p + q, form, cfg);
}

QuadResult energy_nlo(const Trajectory& traj, NloForm form, const QuadratureConfig& cfg) {
  auto integrand = [&](double w) {
    if (w == 0.0) return 0.0;
    const double w3 = w * w * w;
    return w3 * w3 * nlo_bracket(traj, w, form, cfg);
  };
  // Each integrand value carries the adaptive-segmentation jitter of three
  // numeric transforms.
  Tolerance tol = Tolerance::from(cfg);
  tol.noise = 1e-9;
  QuadResult r;
  if (auto cut = traj.uv_cutoff()) {
    // z^2 and z^3 reach up to 2 kappa and 3 kappa; split at each edge.
    for (int m = 0; m < 3; ++m) r += integrate(integrand, m * *cut, (m + 1) * *cut, tol);
  } else {
    // The bracket falls off at least like e^{-omega/kappa}; the omega^6
    // weight leaves nothing measurable beyond kNloOmegaMax kappa, while the
    // cost of each numeric transform grows linearly with omega.
    r = integrate(integrand, 0.0, kNloOmegaMax * traj.kappa(), tol);
  }
  r.value /= 60.0 * pi;
  r.error /= 60.0 * pi;
  return r;
}

double energy_leading(const Trajectory& traj) {
  return energy_per_amplitude_sq(traj.kind()) * traj.amplitude() * traj.amplitude() *
         traj.kappa();
}

QuadResult energy_relativistic(const Trajectory& traj, const QuadratureConfig& cfg) {
  auto integrand = [&traj](double t) {
    const double v = traj.velocity(t);
    const double inv_gamma2 = 1.0 - v * v;
    const double a = traj.acceleration(t);
    return a * a / (inv_gamma2 * inv_gamma2 * inv_gamma2) / (6.0 * pi);
  };
  return full_line_integral(traj, integrand, cfg);
}

}  // namespace mirror
