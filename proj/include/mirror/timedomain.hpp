#pragma once

// Time-domain observables of the non-relativistic mirror: radiation reaction
// force F = -(1/6 pi) da/dt and Larmor power P = a^2 / 6 pi (hbar = 1), and
// the frequency-space Larmor particle spectrum.

#include <functional>

#include "mirror/bogolubov.hpp"
#include "mirror/fourier.hpp"
#include "mirror/quadrature.hpp"
#include "mirror/trajectory.hpp"

namespace mirror {

struct PowerSample {
  double t = 0.0;
  double power = 0.0;  ///< units hbar kappa^2
  double force = 0.0;
};

PowerSample power_and_force(const Trajectory& traj, double t);

enum class EnergyMethod { PowerIntegral, ForceVelocityIntegral };

/// E/(kappa v^2) from int P dt or int F v dt (fills the E part).
EmissionTotals energy_time(const Trajectory& traj,
                           EnergyMethod method = EnergyMethod::PowerIntegral,
                           const QuadratureConfig& cfg = {});

/// N(w) = (2 / (3 pi w)) w^4 |Z(w)|^2.
double larmor_spectrum(const Trajectory& traj, double omega,
                       TransformSource source = TransformSource::ClosedForm,
                       const QuadratureConfig& cfg = {});

/// N = int N(w) dw and the Parseval energy E = (1/3 pi) int w^4 |Z|^2 dw,
/// both over w > 0 with closed-form transforms.
EmissionTotals larmor_totals(const Trajectory& traj, const QuadratureConfig& cfg = {});

/// int F dt over the whole line; zero for any round trip.
QuadResult force_impulse(const Trajectory& traj, const QuadratureConfig& cfg = {});

/// int_{-inf}^{inf} h(t) dt for an integrand built from the trajectory's
/// kinematics. `linear` marks integrands linear in z, whose oscillating tails
/// repeat every 2 pi / kappa rather than pi / kappa.
QuadResult full_line_integral(const Trajectory& traj, const std::function<double(double)>& h,
                              const QuadratureConfig& cfg = {}, bool linear = false);

}  // namespace mirror
