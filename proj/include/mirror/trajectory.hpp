#pragma once

// Catalog of round-trip mirror worldlines z(t) = (A/kappa) f(kappa t) with
// hand-coded derivatives of the unit profile f.

#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace mirror {

enum class TrajectoryKind {
  Gauss,
  Lorentz,
  Sech,
  Sinc,
  Jinc,
  QuadLorentz,
  LinearLorentz,
  BoseEinstein,
  FermiDirac,
};

inline constexpr std::array<TrajectoryKind, 9> kAllKinds = {
    TrajectoryKind::Gauss,        TrajectoryKind::Lorentz,      TrajectoryKind::Sech,
    TrajectoryKind::Sinc,         TrajectoryKind::Jinc,         TrajectoryKind::QuadLorentz,
    TrajectoryKind::LinearLorentz, TrajectoryKind::BoseEinstein, TrajectoryKind::FermiDirac};

enum class AmplitudeMode {
  MaxSpeedCalibrated,  ///< J chosen so that max |zdot| equals v
  PaperTableImplied,   ///< J implied by the published total particle count
};

enum class Parity { Even, Odd, None };

/// How the profile behaves as |t| -> inf, for the integrators.
enum class TailClass {
  Exponential,          ///< Gauss, Sech
  Algebraic,            ///< power-law, non-oscillating
  OscillatingAlgebraic  ///< power-law times sin/cos(kappa t): Sinc, Jinc
};

std::string_view to_string(TrajectoryKind kind);
std::string_view to_string(AmplitudeMode mode);
/// Accepts the display names and short CLI aliases ("gauss", "quad-lorentz",
/// "quadlorentz", "be", "fd", ...). Case-insensitive.
std::optional<TrajectoryKind> parse_kind(std::string_view name);
std::optional<AmplitudeMode> parse_mode(std::string_view name);

Parity parity_of(TrajectoryKind kind);
TailClass tail_class_of(TrajectoryKind kind);

/// True when the amplitude is a fixed multiple of v written into the
/// worldline itself (Gauss, Lorentz, Sech, Linear-Lorentz).
bool has_builtin_amplitude(TrajectoryKind kind);

/// m-th derivative (m = 0..3) of the unit profile f at x = kappa t.
double unit_profile(TrajectoryKind kind, int order, double x);

/// max over x of |f'(x)|, located by a scan and golden-section refinement.
/// Cached per kind.
double unit_max_speed(TrajectoryKind kind);

/// Position of the speed extremum in x = kappa t.
double unit_max_speed_location(TrajectoryKind kind);

/// Published N/v^2 used by PaperTableImplied mode.
double table_particles_over_v2(TrajectoryKind kind);
double table_energy_over_v2(TrajectoryKind kind);

/// Analytic total N / A^2 for the unit profile (A the amplitude).
double particles_per_amplitude_sq(TrajectoryKind kind);
/// Analytic total E / (hbar kappa A^2).
double energy_per_amplitude_sq(TrajectoryKind kind);

/// Amplitude A (J, or the built-in coefficient) for speed v.
double calibrate_amplitude(TrajectoryKind kind, double v,
                           AmplitudeMode mode = AmplitudeMode::MaxSpeedCalibrated);

struct Kinematics {
  double z;      ///< position [time]
  double zdot;   ///< velocity [dimensionless]
  double zddot;  ///< acceleration [1/time]
};

class Trajectory {
 public:
  Trajectory(TrajectoryKind kind, double kappa, double v_max, double amplitude,
             AmplitudeMode mode);

  TrajectoryKind kind() const { return kind_; }
  double kappa() const { return kappa_; }
  double v_max() const { return v_max_; }
  double amplitude() const { return amplitude_; }
  AmplitudeMode mode() const { return mode_; }

  double position(double t) const;
  double velocity(double t) const;
  double acceleration(double t) const;
  double jerk(double t) const;
  Kinematics kinematics(double t) const;

  /// Frequency beyond which the transform vanishes (Sinc, Jinc).
  std::optional<double> uv_cutoff() const;

 private:
  TrajectoryKind kind_;
  double kappa_;
  double v_max_;
  double amplitude_;
  AmplitudeMode mode_;
};

/// Validates parameters and resolves the amplitude for the mode.
/// Throws SuperluminalError for v >= 1, DomainError for v <= 0 or kappa <= 0.
Trajectory make_trajectory(TrajectoryKind kind, double kappa, double v,
                           AmplitudeMode mode = AmplitudeMode::MaxSpeedCalibrated);

/// Central difference of f at t with step (eps)^{1/3} max(1, |t|).
/// Testing aid for the analytic derivatives.
template <class F>
double central_difference(F&& f, double t) {
  const double h = 6.0554544523933395e-6 * (std::abs(t) > 1.0 ? std::abs(t) : 1.0);
  return (f(t + h) - f(t - h)) / (2.0 * h);
}

}  // namespace mirror
