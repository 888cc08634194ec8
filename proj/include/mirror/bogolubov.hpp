#pragma once

// Particle creation from the Fourier-Bogolubov relation
//   |beta_pq|^2 = (4/pi) p q |Z(p+q)|^2
// for a mirror radiating to both sides. hbar = 1 throughout; totals are
// reported as N/v^2 and E/(kappa v^2).

#include <span>
#include <string_view>
#include <vector>

#include "mirror/fourier.hpp"
#include "mirror/quadrature.hpp"
#include "mirror/trajectory.hpp"

namespace mirror {

enum class Route {
  ClosedForm,  ///< analytic spectra and totals
  Quadrature,  ///< numeric integration of |beta|^2 over q (and p)
  Larmor,      ///< frequency-space Larmor formula, int N(w) dw
};

std::string_view to_string(Route route);

struct BetaSquared {
  double p = 0.0;
  double q = 0.0;
  double value = 0.0;
};

BetaSquared beta_sq(const Trajectory& traj, double p, double q,
                    TransformSource source = TransformSource::ClosedForm,
                    const QuadratureConfig& cfg = {});

/// N(p) = int_0^inf |beta_pq|^2 dq. The quadrature route integrates over q
/// with the transform taken from `source`; with a numeric transform the q
/// range is cut at kNumericQMax kappa.
double particle_spectrum(const Trajectory& traj, double p, Route route = Route::ClosedForm,
                         const QuadratureConfig& cfg = {},
                         TransformSource source = TransformSource::ClosedForm);

inline constexpr double kNumericQMax = 30.0;

struct EmissionTotals {
  double n_over_v2 = 0.0;
  double e_over_hkv2 = 0.0;
  double n_error = 0.0;
  double e_error = 0.0;
  Route route = Route::ClosedForm;
};

/// Total particle number (fills the N part).
EmissionTotals total_particles(const Trajectory& traj, Route route = Route::ClosedForm,
                               const QuadratureConfig& cfg = {});
/// Total energy E = int p N(p) dp (fills the E part).
EmissionTotals total_energy(const Trajectory& traj, Route route = Route::ClosedForm,
                            const QuadratureConfig& cfg = {});
/// Both parts.
EmissionTotals emission_totals(const Trajectory& traj, Route route = Route::ClosedForm,
                               const QuadratureConfig& cfg = {});

struct SpectrumTable {
  TrajectoryKind kind = TrajectoryKind::Gauss;
  Route route = Route::ClosedForm;
  std::vector<double> grid;    ///< ascending frequencies
  std::vector<double> values;  ///< N(p), or N(w) for the Larmor route
};

SpectrumTable spectrum_table(const Trajectory& traj, std::span<const double> grid,
                             Route route = Route::ClosedForm,
                             const QuadratureConfig& cfg = {});

}  // namespace mirror
