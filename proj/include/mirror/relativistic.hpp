#pragma once

// Slow-speed expansion of the exact one-sided beta integral,
//   beta^R_pq = sqrt(2pq/pi) sum_{n>=1} i^n w_-^{n-1} / n! F[z^n](p + q),
// with w_- = p - q, and the relativistic time-domain energy it is checked
// against.

#include <complex>
#include <vector>

#include "mirror/fourier.hpp"
#include "mirror/quadrature.hpp"
#include "mirror/trajectory.hpp"

namespace mirror {

/// The left side sees the mirror at -z(t).
enum class MirrorSide { Right, Left };

struct BetaSeriesTerm {
  int n = 1;
  std::complex<double> value;
  double omega_minus = 0.0;
};

/// Terms n = 1..n_max of the series (n_max <= 6).
std::vector<BetaSeriesTerm> beta_series_terms(const Trajectory& traj, double p, double q,
                                              int n_max, MirrorSide side = MirrorSide::Right,
                                              const QuadratureConfig& cfg = {});

std::complex<double> beta_series(const Trajectory& traj, double p, double q, int n_max,
                                 MirrorSide side = MirrorSide::Right,
                                 const QuadratureConfig& cfg = {});

/// |beta|^2 through third order in z:
///   (2pq/pi) (|Z1|^2 + s w_- Im(Z1 conj(Z2))),  s = +1 right, -1 left,
/// where Zn = F[z^n](p + q).
double beta_sq_second_order(const Trajectory& traj, double p, double q,
                            MirrorSide side = MirrorSide::Right,
                            const QuadratureConfig& cfg = {});

enum class NloForm {
  Moduli,          ///< (pq/pi) w_-^2 (|Z2|^2 - (4/3)|Z1||Z3|)
  PhaseSensitive,  ///< (pq/pi) w_-^2 (|Z2|^2 - (4/3) Re(Z1 conj(Z3)))
};

/// Quartic correction to the two-sided |beta|^2.
double beta_sq_nlo(const Trajectory& traj, double p, double q,
                   NloForm form = NloForm::Moduli, const QuadratureConfig& cfg = {});

inline constexpr double kNloOmegaMax = 40.0;

/// int int p |beta|^2_NLO dp dq = (1/60 pi) int_0^inf w^6 G(w) dw, with G the
/// bracket of beta_sq_nlo, cut at kNloOmegaMax kappa for kinds without a UV
/// cutoff. Absolute units (hbar = 1).
QuadResult energy_nlo(const Trajectory& traj, NloForm form = NloForm::Moduli,
                      const QuadratureConfig& cfg = {});

/// Leading-order energy (closed form), absolute units.
double energy_leading(const Trajectory& traj);

/// (1/6 pi) int alpha^2 dt with the proper acceleration alpha = gamma^3 a,
/// integrated over coordinate time. Absolute units.
QuadResult energy_relativistic(const Trajectory& traj, const QuadratureConfig& cfg = {});

}  // namespace mirror
