#include "mirror/trajectory.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "mirror/errors.hpp"
#include "mirror/specfun.hpp"

namespace mirror {

namespace {

using std::numbers::pi;

constexpr double kLorentzCoefficient = 8.0 / (3.0 * std::numbers::sqrt3);

// Derivative of order m of sum_k c_k x^{2k}.
template <class Coeff>
double even_series_derivative(Coeff coeff, int terms, int order, double x) {
  double sum = 0.0;
  for (int k = 0; k < terms; ++k) {
    const int power = 2 * k;
    if (power < order) continue;
    double falling = 1.0;
    for (int j = 0; j < order; ++j) falling *= power - j;
    sum += coeff(k) * falling * std::pow(x, power - order);
  }
  return sum;
}

double sinc_coeff(int k) {
  double fact = 1.0;
  for (int j = 2; j <= 2 * k + 1; ++j) fact *= j;
  return (k % 2 == 0 ? 1.0 : -1.0) / fact;
}

double jinc_coeff(int k) {
  // J1(x)/x = sum (-1)^k x^{2k} / (2^{2k+1} k! (k+1)!)
  double denom = 2.0;
  for (int j = 1; j <= k; ++j) denom *= 4.0 * j * (j + 1);
  return (k % 2 == 0 ? 1.0 : -1.0) / denom;
}

double gauss_profile(int order, double x) {
  if (std::abs(x) > 40.0) return 0.0;
  const double f = std::exp(0.5 - 0.5 * x * x);
  switch (order) {
    case 0: return f;
    case 1: return -x * f;
    case 2: return (x * x - 1.0) * f;
    default: return (3.0 * x - x * x * x) * f;
  }
}

double lorentz_profile(int order, double x) {
  const double d = 1.0 + x * x;
  switch (order) {
    case 0: return 1.0 / d;
    case 1: return -2.0 * x / (d * d);
    case 2: return (6.0 * x * x - 2.0) / (d * d * d);
    default: return 24.0 * x * (1.0 - x * x) / (d * d * d * d);
  }
}

double sech_profile(int order, double x) {
  const double e = std::exp(-std::abs(x));
  const double sech = 2.0 * e / (1.0 + e * e);
  const double th = std::tanh(x);
  switch (order) {
    case 0: return sech;
    case 1: return -sech * th;
    case 2: return sech * (2.0 * th * th - 1.0);
    default: return sech * th * (5.0 - 6.0 * th * th);
  }
}

double sinc_profile(int order, double x) {
  if (std::abs(x) < 2.0) return even_series_derivative(sinc_coeff, 20, order, x);
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double u = 1.0 / x;
  switch (order) {
    case 0: return s * u;
    case 1: return c * u - s * u * u;
    case 2: return -s * u - 2.0 * c * u * u + 2.0 * s * u * u * u;
    default: return -c * u + 3.0 * s * u * u + 6.0 * c * u * u * u - 6.0 * s * u * u * u * u;
  }
}

double jinc_profile(int order, double x) {
  if (std::abs(x) < 2.0) return even_series_derivative(jinc_coeff, 20, order, x);
  const double u = 1.0 / x;
  switch (order) {
    case 0: return bessel_j1(x) * u;
    case 1: return -bessel_jn(2, x) * u;
    case 2: return -bessel_jn(2, x) * u * u + bessel_jn(3, x) * u;
    default: return 3.0 * bessel_jn(3, x) * u * u - bessel_jn(4, x) * u;
  }
}

double quad_lorentz_profile(int order, double x) {
  if (std::abs(x) <= 1.0) {
    const double x2 = x * x;
    const double x4 = x2 * x2;
    const double d = x4 + 1.0;
    switch (order) {
      case 0: return x2 / d;
      case 1: return -2.0 * x * (x4 - 1.0) / (d * d);
      case 2: return 2.0 * (3.0 * x4 * x4 - 12.0 * x4 + 1.0) / (d * d * d);
      default: return -24.0 * x2 * x * (x4 * x4 - 10.0 * x4 + 5.0) / (d * d * d * d);
    }
  }
  // Same expressions in u = 1/x, free of overflow for large |x|.
  const double u = 1.0 / x;
  const double u2 = u * u;
  const double u4 = u2 * u2;
  const double d = 1.0 + u4;
  switch (order) {
    case 0: return u2 / d;
    case 1: return -2.0 * u2 * u * (1.0 - u4) / (d * d);
    case 2: return 2.0 * u4 * (3.0 - 12.0 * u4 + u4 * u4) / (d * d * d);
    default: return -24.0 * u4 * u * (1.0 - 10.0 * u4 + 5.0 * u4 * u4) / (d * d * d * d);
  }
}

double linear_lorentz_profile(int order, double x) {
  const double x2 = x * x;
  const double d = 1.0 + x2;
  switch (order) {
    case 0: return x / d;
    case 1: return (1.0 - x2) / (d * d);
    case 2: return 2.0 * x * (x2 - 3.0) / (d * d * d);
    default: return -6.0 * (x2 * x2 - 6.0 * x2 + 1.0) / (d * d * d * d);
  }
}

// Profiles in w = W(e^x). With s = 1/(1+w), the chain rule d/dx = w s d/dw
// turns every derivative into a rational function of w.
double bose_profile(int order, double x) {
  const double w = lambert_w0_exp(x);
  const double s = 1.0 / (1.0 + w);
  const double s2 = s * s;
  const double s4 = s2 * s2;
  switch (order) {
    case 0: return w * s2 * s;
    case 1: return -w * (2.0 * w - 1.0) * s4 * s;
    case 2: return w * (6.0 * w * w - 8.0 * w + 1.0) * s4 * s2 * s;
    default: return -w * (((24.0 * w - 58.0) * w + 22.0) * w - 1.0) * s4 * s4 * s;
  }
}

double fermi_profile(int order, double x) {
  const double w = lambert_w0_exp(x);
  const double sw = std::sqrt(w);
  const double r = w / (1.0 + w);
  const double s = 1.0 / (1.0 + w);
  const double s2 = s * s;
  switch (order) {
    case 0: return -0.5 * sw * s2 * (r - s);
    case 1: return 0.25 * sw * s2 * s * (3.0 * r * r - 8.0 * r * s + s2);
    case 2:
      return -0.125 * sw * s2 * s2 * (15.0 * r * r * r - 71.0 * r * r * s + 33.0 * r * s2 - s2 * s);
    default:
      return 0.0625 * sw * s2 * s2 * s *
             (105.0 * r * r * r * r - 744.0 * r * r * r * s + 718.0 * r * r * s2 -
              112.0 * r * s2 * s + s2 * s2);
  }
}

std::string normalize(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (c == '-' || c == '_' || c == ' ') continue;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

double golden_section_max(TrajectoryKind kind, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto speed = [kind](double x) { return std::abs(unit_profile(kind, 1, x)); };
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = speed(c);
  double fd = speed(d);
  while (hi - lo > 1e-12 * std::max(1.0, std::abs(lo))) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = speed(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = speed(d);
    }
  }
  return 0.5 * (lo + hi);
}

struct SpeedExtremum {
  double location;
  double value;
};

SpeedExtremum locate_max_speed(TrajectoryKind kind) {
  // Log-spaced scan on both sides of the origin, kappa |t| in [1e-3, 30].
  std::vector<double> grid;
  constexpr int kPerSide = 3000;
  for (int i = kPerSide - 1; i >= 0; --i) {
    grid.push_back(-1e-3 * std::pow(3e4, static_cast<double>(i) / (kPerSide - 1)));
  }
  grid.push_back(0.0);
  for (int i = 0; i < kPerSide; ++i) {
    grid.push_back(1e-3 * std::pow(3e4, static_cast<double>(i) / (kPerSide - 1)));
  }
  std::size_t best = 0;
  double best_value = -1.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double value = std::abs(unit_profile(kind, 1, grid[i]));
    if (value > best_value) {
      best_value = value;
      best = i;
    }
  }
  if (best == 0 || best + 1 == grid.size()) {
    throw CalibrationError("max-speed search for " + std::string(to_string(kind)) +
                           " hit the scan boundary at kappa t = " +
                           std::to_string(grid[best]));
  }
  const double x = golden_section_max(kind, grid[best - 1], grid[best + 1]);
  const double value = std::abs(unit_profile(kind, 1, x));
  if (value < best_value * (1.0 - 1e-12)) {
    throw CalibrationError("golden-section refinement lost the speed extremum for " +
                           std::string(to_string(kind)));
  }
  return {x, value};
}

const SpeedExtremum& cached_extremum(TrajectoryKind kind) {
  static const auto table = [] {
    std::array<SpeedExtremum, kAllKinds.size()> out{};
    for (auto k : kAllKinds) out[static_cast<std::size_t>(k)] = locate_max_speed(k);
    return out;
  }();
  return table[static_cast<std::size_t>(kind)];
}

}  // namespace

std::string_view to_string(TrajectoryKind kind) {
  switch (kind) {
    case TrajectoryKind::Gauss: return "Gauss";
    case TrajectoryKind::Lorentz: return "Lorentz";
    case TrajectoryKind::Sech: return "Sech";
    case TrajectoryKind::Sinc: return "Sinc";
    case TrajectoryKind::Jinc: return "Jinc";
    case TrajectoryKind::QuadLorentz: return "Quad-Lorentz";
    case TrajectoryKind::LinearLorentz: return "Linear-Lorentz";
    case TrajectoryKind::BoseEinstein: return "Bose-Einstein";
    case TrajectoryKind::FermiDirac: return "Fermi-Dirac";
  }
  return "?";
}

std::string_view to_string(AmplitudeMode mode) {
  return mode == AmplitudeMode::MaxSpeedCalibrated ? "max-speed" : "paper-table";
}

std::optional<TrajectoryKind> parse_kind(std::string_view name) {
  const std::string n = normalize(name);
  if (n == "gauss" || n == "gaussian") return TrajectoryKind::Gauss;
  if (n == "lorentz" || n == "lorentzian") return TrajectoryKind::Lorentz;
  if (n == "sech" || n == "hyperbolicsecant") return TrajectoryKind::Sech;
  if (n == "sinc") return TrajectoryKind::Sinc;
  if (n == "jinc" || n == "sombrero") return TrajectoryKind::Jinc;
  if (n == "quadlorentz") return TrajectoryKind::QuadLorentz;
  if (n == "linearlorentz") return TrajectoryKind::LinearLorentz;
  if (n == "be" || n == "boseeinstein" || n == "bose") return TrajectoryKind::BoseEinstein;
  if (n == "fd" || n == "fermidirac" || n == "fermi") return TrajectoryKind::FermiDirac;
  return std::nullopt;
}

std::optional<AmplitudeMode> parse_mode(std::string_view name) {
  const std::string n = normalize(name);
  if (n == "maxspeed" || n == "maxspeedcalibrated") return AmplitudeMode::MaxSpeedCalibrated;
  if (n == "papertable" || n == "papertableimplied" || n == "table")
    return AmplitudeMode::PaperTableImplied;
  return std::nullopt;
}

Parity parity_of(TrajectoryKind kind) {
  switch (kind) {
    case TrajectoryKind::LinearLorentz: return Parity::Odd;
    case TrajectoryKind::BoseEinstein:
    case TrajectoryKind::FermiDirac: return Parity::None;
    default: return Parity::Even;
  }
}

TailClass tail_class_of(TrajectoryKind kind) {
  switch (kind) {
    case TrajectoryKind::Gauss:
    case TrajectoryKind::Sech: return TailClass::Exponential;
    case TrajectoryKind::Sinc:
    case TrajectoryKind::Jinc: return TailClass::OscillatingAlgebraic;
    default: return TailClass::Algebraic;
  }
}

bool has_builtin_amplitude(TrajectoryKind kind) {
  return kind == TrajectoryKind::Gauss || kind == TrajectoryKind::Lorentz ||
         kind == TrajectoryKind::Sech || kind == TrajectoryKind::LinearLorentz;
}

double unit_profile(TrajectoryKind kind, int order, double x) {
  if (order < 0 || order > 3) throw DomainError("unit_profile: derivative order must be 0..3");
  switch (kind) {
    case TrajectoryKind::Gauss: return gauss_profile(order, x);
    case TrajectoryKind::Lorentz: return lorentz_profile(order, x);
    case TrajectoryKind::Sech: return sech_profile(order, x);
    case TrajectoryKind::Sinc: return sinc_profile(order, x);
    case TrajectoryKind::Jinc: return jinc_profile(order, x);
    case TrajectoryKind::QuadLorentz: return quad_lorentz_profile(order, x);
    case TrajectoryKind::LinearLorentz: return linear_lorentz_profile(order, x);
    case TrajectoryKind::BoseEinstein: return bose_profile(order, x);
    case TrajectoryKind::FermiDirac: return fermi_profile(order, x);
  }
  return 0.0;
}

double unit_max_speed(TrajectoryKind kind) { return cached_extremum(kind).value; }

double unit_max_speed_location(TrajectoryKind kind) { return cached_extremum(kind).location; }

double table_particles_over_v2(TrajectoryKind kind) {
  switch (kind) {
    case TrajectoryKind::Gauss: return 0.288419;
    case TrajectoryKind::Lorentz: return 0.296296;
    case TrajectoryKind::Sech: return 0.296167;
    case TrajectoryKind::Sinc: return 0.438009;
    case TrajectoryKind::Jinc: return 0.0591729;
    case TrajectoryKind::QuadLorentz: return 0.354852;
    case TrajectoryKind::LinearLorentz: return 0.125;
    case TrajectoryKind::BoseEinstein: return 0.196763;
    case TrajectoryKind::FermiDirac: return 0.183985;
  }
  return 0.0;
}

double table_energy_over_v2(TrajectoryKind kind) {
  switch (kind) {
    case TrajectoryKind::Gauss: return 0.191703;
    case TrajectoryKind::Lorentz: return 0.296296;
    case TrajectoryKind::Sech: return 0.198059;
    case TrajectoryKind::Sinc: return 0.175204;
    case TrajectoryKind::Jinc: return 0.0202879;
    case TrajectoryKind::QuadLorentz: return 0.564566;
    case TrajectoryKind::LinearLorentz: return 0.125;
    case TrajectoryKind::BoseEinstein: return 0.076811;
    case TrajectoryKind::FermiDirac: return 0.074217;
  }
  return 0.0;
}

double particles_per_amplitude_sq(TrajectoryKind kind) {
  const double pi2 = pi * pi;
  const double pi6 = pi2 * pi2 * pi2;
  switch (kind) {
    case TrajectoryKind::Gauss: return std::numbers::e / (3.0 * pi);
    case TrajectoryKind::Lorentz: return 1.0 / 8.0;
    case TrajectoryKind::Sech: return 6.0 * kZeta3 / (pi2 * pi2);
    case TrajectoryKind::Sinc: return 1.0 / 12.0;
    case TrajectoryKind::Jinc: return 1.0 / (9.0 * pi2);
    case TrajectoryKind::QuadLorentz: return 0.25;
    case TrajectoryKind::LinearLorentz: return 1.0 / 8.0;
    case TrajectoryKind::BoseEinstein: return kZeta5 / (2.0 * pi6);
    case TrajectoryKind::FermiDirac: return kEta5 / (2.0 * pi6);
  }
  return 0.0;
}

double energy_per_amplitude_sq(TrajectoryKind kind) {
  const double pi2 = pi * pi;
  switch (kind) {
    case TrajectoryKind::Gauss: return std::numbers::e / (8.0 * std::sqrt(pi));
    case TrajectoryKind::Lorentz: return 1.0 / 8.0;
    case TrajectoryKind::Sech: return 7.0 / (45.0 * pi);
    case TrajectoryKind::Sinc: return 1.0 / 30.0;
    case TrajectoryKind::Jinc: return 4.0 / (105.0 * pi2);
    case TrajectoryKind::QuadLorentz: return 9.0 / (16.0 * std::numbers::sqrt2);
    case TrajectoryKind::LinearLorentz: return 1.0 / 8.0;
    case TrajectoryKind::BoseEinstein: return 1.0 / (1512.0 * pi);
    case TrajectoryKind::FermiDirac: return 31.0 / (32.0 * 1512.0 * pi);
  }
  return 0.0;
}

double calibrate_amplitude(TrajectoryKind kind, double v, AmplitudeMode mode) {
  if (!(v > 0.0 && v < 1.0)) throw DomainError("calibrate_amplitude: v must lie in (0, 1)");
  switch (kind) {
    case TrajectoryKind::Gauss:
    case TrajectoryKind::LinearLorentz: return v;
    case TrajectoryKind::Lorentz: return kLorentzCoefficient * v;
    case TrajectoryKind::Sech: return 2.0 * v;
    default: break;
  }
  if (mode == AmplitudeMode::MaxSpeedCalibrated) {
    static const auto ratio = [] {
      std::array<double, kAllKinds.size()> out{};
      for (auto k : kAllKinds) out[static_cast<std::size_t>(k)] = 1.0 / unit_max_speed(k);
      return out;
    }();
    return v * ratio[static_cast<std::size_t>(kind)];
  }
  return v * std::sqrt(table_particles_over_v2(kind) / particles_per_amplitude_sq(kind));
}

Trajectory::Trajectory(TrajectoryKind kind, double kappa, double v_max, double amplitude,
                       AmplitudeMode mode)
    : kind_(kind), kappa_(kappa), v_max_(v_max), amplitude_(amplitude), mode_(mode) {}

double Trajectory::position(double t) const {
  return amplitude_ / kappa_ * unit_profile(kind_, 0, kappa_ * t);
}

double Trajectory::velocity(double t) const {
  return amplitude_ * unit_profile(kind_, 1, kappa_ * t);
}

double Trajectory::acceleration(double t) const {
  return amplitude_ * kappa_ * unit_profile(kind_, 2, kappa_ * t);
}

double Trajectory::jerk(double t) const {
  return amplitude_ * kappa_ * kappa_ * unit_profile(kind_, 3, kappa_ * t);
}

Kinematics Trajectory::kinematics(double t) const {
  return {position(t), velocity(t), acceleration(t)};
}

std::optional<double> Trajectory::uv_cutoff() const {
  if (kind_ == TrajectoryKind::Sinc || kind_ == TrajectoryKind::Jinc) return kappa_;
  return std::nullopt;
}

Trajectory make_trajectory(TrajectoryKind kind, double kappa, double v, AmplitudeMode mode) {
  if (std::isnan(v) || std::isnan(kappa)) throw DomainError("make_trajectory: NaN parameter");
  if (v >= 1.0) throw SuperluminalError("make_trajectory: v must be below the speed of light");
  if (v <= 0.0) throw DomainError("make_trajectory: v must be positive");
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw DomainError("make_trajectory: kappa must be positive and finite");
  }
  if (has_builtin_amplitude(kind)) mode = AmplitudeMode::MaxSpeedCalibrated;
  return Trajectory(kind, kappa, v, calibrate_amplitude(kind, v, mode), mode);
}

}  // namespace mirror
