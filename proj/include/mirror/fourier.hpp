#pragma once

// Fourier transforms Z(w) = (1/sqrt(2 pi)) int z(t) e^{-i w t} dt of mirror
// worldlines and related profiles.

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "mirror/quadrature.hpp"
#include "mirror/trajectory.hpp"

namespace mirror {

enum class FourierMethod { ClosedForm, NumericQuadrature };

struct FourierValue {
  double omega = 0.0;
  std::complex<double> value;
  double error = 0.0;
  FourierMethod method = FourierMethod::ClosedForm;
  /// Only |Z|^2 is known (thermal kinds); `value` then holds sqrt(|Z|^2).
  bool modulus_only = false;

  double modulus_sq() const { return std::norm(value); }
};

/// A real function of time together with what the integrator needs to know
/// about it.
struct Profile {
  std::function<double(double)> f;
  double time_scale = 1.0;
  Parity parity = Parity::None;
  /// Angular frequencies of persistent oscillation in the tails (Sinc, Jinc
  /// and their powers). Empty for profiles that decay monotonically.
  std::vector<double> harmonics;
};

Profile position_profile(const Trajectory& traj);
Profile velocity_profile(const Trajectory& traj);
/// Pointwise power z(t)^n.
Profile power_profile(const Trajectory& traj, int n);

FourierValue ft_numeric(const Profile& profile, double omega,
                        const QuadratureConfig& cfg = {});
FourierValue ft_numeric(const Trajectory& traj, double omega,
                        const QuadratureConfig& cfg = {});

/// Analytic transform. Bose-Einstein and Fermi-Dirac return the modulus only.
FourierValue ft_closed(const Trajectory& traj, double omega);

/// Where |Z|^2 comes from in the spectral pipelines.
enum class TransformSource { ClosedForm, Numeric };

double transform_modulus_sq(const Trajectory& traj, double omega,
                            TransformSource source = TransformSource::ClosedForm,
                            const QuadratureConfig& cfg = {});

enum class ThermalKind { Bose, Fermi };

/// Transforms the n-th derivative of W(e^t) (Bose) or 2 sqrt(W(e^t)) (Fermi)
/// numerically and compares |.|^2 with w^{2n-3}/(e^{2 pi w} -/+ 1). Returns
/// the worst relative error over the grid. n must be 2 or 3.
double thermal_identity_check(ThermalKind kind, int n, std::span<const double> omega_grid,
                              const QuadratureConfig& cfg = {});

}  // namespace mirror
