#include "mirror/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mirror/errors.hpp"

namespace mirror {

namespace {

using std::numbers::pi;

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * pi);

// Hard ceiling on the number of kernel segments of one transform.
constexpr long kMaxKernelSegments = 4'000'000;

Tolerance segment_tolerance(const QuadratureConfig& cfg) {
  // Segment integrals are summed with heavy cancellation at high frequency,
  // so each one is resolved well below the requested relative tolerance.
  return {cfg.abs_tol * 1e-3, std::max(cfg.rel_tol * 1e-3, 1e-14), cfg.max_segments};
}

struct Kernel {
  bool sine;
  double omega;
  double operator()(double t) const {
    return sine ? std::sin(omega * t) : std::cos(omega * t);
  }
};

// The kernel argument omega t carries an absolute rounding error of about
// eps omega t, which bounds the attainable accuracy of a segment near t.
Tolerance at_time(Tolerance tol, double omega, double t) {
  tol.noise = std::max(tol.noise, 10.0 * std::numeric_limits<double>::epsilon() * omega * t);
  return tol;
}

// int_a^b h(t) k(t) dt over pieces no longer than `piece`.
template <class H>
QuadResult integrate_pieces(const H& h, double a, double b, double piece,
                            const Tolerance& tol, double omega) {
  QuadResult out;
  if (b <= a) return out;
  const double span = b - a;
  const auto n = static_cast<long>(std::ceil(span / piece));
  if (n > kMaxKernelSegments) {
    throw QuadratureError("transform needs " + std::to_string(n) + " kernel segments", 0.0);
  }
  const double step = span / static_cast<double>(std::max<long>(n, 1));
  for (long i = 0; i < std::max<long>(n, 1); ++i) {
    const double lo = a + static_cast<double>(i) * step;
    const double hi = (i + 1 == n) ? b : lo + step;
    out += integrate(h, lo, hi, at_time(tol, omega, hi));
  }
  return out;
}

// int_0^inf h(t) k(t) dt for h decaying monotonically beyond a core region:
// the core is integrated directly and the tail, split at consecutive kernel
// zeros, is summed as an alternating series.
QuadResult monotone_tail_transform(const std::function<double(double)>& h, Kernel k,
                                   double scale, const QuadratureConfig& cfg) {
  const Tolerance tol = segment_tolerance(cfg);
  auto hk = [&](double t) { return h(t) * k(t); };
  if (k.omega == 0.0) {
    if (k.sine) return {};
    // t = scale (s/(1-s))^2 keeps t^{-3/2} tails bounded in s.
    auto mapped = [&](double s) {
      const double one_minus = 1.0 - s;
      const double ratio = s / one_minus;
      const double v = h(scale * ratio * ratio);
      return v == 0.0 ? 0.0 : v * scale * 2.0 * s / (one_minus * one_minus * one_minus);
    };
    return integrate(mapped, 0.0, 1.0, tol);
  }
  const double half = pi / k.omega;
  if (cfg.tail_policy == TailPolicy::Truncate) {
    return integrate_pieces(hk, 0.0, cfg.truncate_at * scale, half, tol, k.omega);
  }
  const double core = 20.0 * scale;
  const double offset = k.sine ? 0.0 : 0.5;
  const double first_zero = (std::ceil(core / half - offset) + offset) * half;
  QuadResult out = integrate_pieces(hk, 0.0, first_zero, half, tol, k.omega);

  constexpr int kMinTerms = 16;
  constexpr int kMaxTerms = 72;
  std::vector<double> terms;  // (-1)^j times the j-th segment integral
  double previous = 0.0;
  double tail = 0.0;
  double tail_error = 0.0;
  for (int j = 0; j < kMaxTerms; ++j) {
    const double lo = first_zero + j * half;
    const QuadResult seg = integrate(hk, lo, lo + half, at_time(tol, k.omega, lo + half));
    out.evaluations += seg.evaluations;
    out.error += seg.error;
    out.abs_value += seg.abs_value;
    terms.push_back((j % 2 == 0) ? seg.value : -seg.value);
    const int n = j + 1;
    if (n < kMinTerms || n % 8 != 0) continue;
    tail = alternating_sum(terms);
    tail_error = std::abs(tail - previous);
    previous = tail;
    const double target = std::max({cfg.abs_tol, cfg.rel_tol * 1e-2 * std::abs(out.value + tail),
                                    1e-15 * out.abs_value});
    if (n > kMinTerms && tail_error <= target) break;
  }
  out.value += tail;
  out.error += tail_error;
  return out;
}

// int_0^inf h(t) k(t) dt for h carrying persistent oscillations at the given
// harmonics. A smooth erfc window ends the integral; its Fourier leakage at
// the smallest beat frequency delta is of order exp(-(delta sigma)^2 / 4).
QuadResult windowed_transform(const std::function<double(double)>& h, Kernel k,
                              const Profile& profile, const QuadratureConfig& cfg) {
  const Tolerance tol = segment_tolerance(cfg);
  const double scale = profile.time_scale;
  double delta = std::numeric_limits<double>::infinity();
  double top = 0.0;
  for (double harmonic : profile.harmonics) {
    delta = std::min(delta, std::abs(harmonic - k.omega));
    top = std::max(top, harmonic);
  }
  delta = std::max(delta, 1e-3 / scale);
  const double piece = pi / (top + k.omega);
  if (cfg.tail_policy == TailPolicy::Truncate) {
    auto hk = [&](double t) { return h(t) * k(t); };
    return integrate_pieces(hk, 0.0, cfg.truncate_at * scale, piece, tol, top + k.omega);
  }
  const double sigma = 14.0 / delta;
  const double centre = std::max(20.0 * scale, 8.0 * sigma + 60.0 / delta);
  const double end = centre + 7.0 * sigma;
  auto windowed = [&](double t) {
    return h(t) * k(t) * 0.5 * std::erfc((t - centre) / sigma);
  };
  QuadResult out = integrate_pieces(windowed, 0.0, end, piece, tol, top + k.omega);
  out.error += std::exp(-0.25 * delta * delta * sigma * sigma) * out.abs_value;
  return out;
}

QuadResult half_line_transform(const std::function<double(double)>& h, Kernel k,
                               const Profile& profile, const QuadratureConfig& cfg) {
  if (profile.harmonics.empty()) {
    return monotone_tail_transform(h, k, profile.time_scale, cfg);
  }
  return windowed_transform(h, k, profile, cfg);
}

std::vector<double> power_harmonics(const Trajectory& traj, int n) {
  std::vector<double> out;
  if (!traj.uv_cutoff()) return out;
  for (int m = n; m >= 0; m -= 2) out.push_back(m * traj.kappa());
  return out;
}

void check_omega(double omega) {
  if (!std::isfinite(omega) || omega < 0.0) {
    throw DomainError("Fourier transform: omega must be finite and non-negative");
  }
}

}  // namespace

Profile position_profile(const Trajectory& traj) {
  return {[traj](double t) { return traj.position(t); }, 1.0 / traj.kappa(),
          parity_of(traj.kind()), power_harmonics(traj, 1)};
}

Profile velocity_profile(const Trajectory& traj) {
  Parity parity = parity_of(traj.kind());
  if (parity == Parity::Even) {
    parity = Parity::Odd;
  } else if (parity == Parity::Odd) {
    parity = Parity::Even;
  }
  return {[traj](double t) { return traj.velocity(t); }, 1.0 / traj.kappa(), parity,
          power_harmonics(traj, 1)};
}

Profile power_profile(const Trajectory& traj, int n) {
  if (n < 1) throw DomainError("power_profile: n must be at least 1");
  Parity parity = parity_of(traj.kind());
  if (parity == Parity::Odd && n % 2 == 0) parity = Parity::Even;
  return {[traj, n](double t) { return std::pow(traj.position(t), n); }, 1.0 / traj.kappa(),
          parity, power_harmonics(traj, n)};
}

FourierValue ft_numeric(const Profile& profile, double omega, const QuadratureConfig& cfg) {
  check_omega(omega);
  const auto& f = profile.f;
  QuadResult re;
  QuadResult im;
  if (profile.parity != Parity::Odd) {
    re = half_line_transform([&f](double t) { return f(t) + f(-t); }, {false, omega},
                             profile, cfg);
  }
  if (profile.parity != Parity::Even && omega > 0.0) {
    im = half_line_transform([&f](double t) { return f(t) - f(-t); }, {true, omega},
                             profile, cfg);
  }
  FourierValue out;
  out.omega = omega;
  out.value = {kInvSqrt2Pi * re.value, -kInvSqrt2Pi * im.value};
  out.error = kInvSqrt2Pi * (re.error + im.error);
  out.method = FourierMethod::NumericQuadrature;
  return out;
}

FourierValue ft_numeric(const Trajectory& traj, double omega, const QuadratureConfig& cfg) {
  return ft_numeric(position_profile(traj), omega, cfg);
}

FourierValue ft_closed(const Trajectory& traj, double omega) {
  check_omega(omega);
  const double k = traj.kappa();
  const double a = traj.amplitude();
  const double x = omega / k;
  const double unit = a / (k * k);
  FourierValue out;
  out.omega = omega;
  out.method = FourierMethod::ClosedForm;
  switch (traj.kind()) {
    case TrajectoryKind::Gauss:
      out.value = unit * std::exp(0.5 - 0.5 * x * x);
      break;
    case TrajectoryKind::Lorentz:
      out.value = unit * std::sqrt(pi / 2.0) * std::exp(-x);
      break;
    case TrajectoryKind::Sech: {
      const double e = std::exp(-0.5 * pi * x);
      out.value = unit * std::sqrt(pi / 2.0) * 2.0 * e / (1.0 + e * e);
      break;
    }
    case TrajectoryKind::Sinc:
      // Flat up to the cutoff; the point omega = kappa itself is assigned 0.
      out.value = x < 1.0 ? unit * std::sqrt(pi / 2.0) : 0.0;
      break;
    case TrajectoryKind::Jinc:
      out.value = x < 1.0 ? a * std::sqrt(2.0 * (1.0 - x) * (1.0 + x)) / (std::sqrt(pi) * k * k)
                          : 0.0;
      break;
    case TrajectoryKind::QuadLorentz: {
      const double u = x / std::numbers::sqrt2;
      out.value = unit * 0.5 * std::sqrt(pi) * std::exp(-u) * (std::cos(u) - std::sin(u));
      break;
    }
    case TrajectoryKind::LinearLorentz:
      // The 1/t tail makes the transform jump at 0; the odd integrand itself
      // integrates to 0 there.
      out.value = {0.0, x == 0.0 ? 0.0 : -unit * std::sqrt(pi / 2.0) * std::exp(-x)};
      break;
    case TrajectoryKind::BoseEinstein:
    case TrajectoryKind::FermiDirac: {
      const double y = 2.0 * pi * x;
      double planck;  // x / (e^y -/+ 1)
      if (traj.kind() == TrajectoryKind::BoseEinstein) {
        planck = x == 0.0 ? 1.0 / (2.0 * pi) : x / std::expm1(y);
      } else {
        planck = x / (std::exp(y) + 1.0);
      }
      out.value = unit * std::sqrt(planck);
      out.modulus_only = true;
      break;
    }
  }
  return out;
}

double transform_modulus_sq(const Trajectory& traj, double omega, TransformSource source,
                            const QuadratureConfig& cfg) {
  if (source == TransformSource::ClosedForm) return ft_closed(traj, omega).modulus_sq();
  return ft_numeric(traj, omega, cfg).modulus_sq();
}

double thermal_identity_check(ThermalKind kind, int n, std::span<const double> omega_grid,
                              const QuadratureConfig& cfg) {
  if (n != 2 && n != 3) {
    throw DomainError("thermal_identity_check: n must be 2 or 3 (lower orders are not "
                      "absolutely integrable)");
  }
  // The second derivatives of W(e^t) and 2 sqrt(W(e^t)) are the unit
  // Bose-Einstein and Fermi-Dirac profiles.
  const TrajectoryKind base =
      kind == ThermalKind::Bose ? TrajectoryKind::BoseEinstein : TrajectoryKind::FermiDirac;
  Profile profile{[base, n](double t) { return unit_profile(base, n - 2, t); }, 1.0,
                  Parity::None, {}};
  double worst = 0.0;
  for (double omega : omega_grid) {
    if (!(omega > 0.0)) throw DomainError("thermal_identity_check: omega must be positive");
    const double y = 2.0 * pi * omega;
    const double denom = kind == ThermalKind::Bose ? std::expm1(y) : std::exp(y) + 1.0;
    const double target = std::pow(omega, 2 * n - 3) / denom;
    const double got = ft_numeric(profile, omega, cfg).modulus_sq();
    worst = std::max(worst, std::abs(got - target) / target);
  }
  return worst;
}

}  // namespace mirror
