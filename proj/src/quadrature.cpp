#include "mirror/quadrature.hpp"

#include <cmath>

namespace mirror {

double alternating_sum(std::span<const double> a) {
  const auto n = static_cast<double>(a.size());
  if (a.empty()) return 0.0;
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto kk = static_cast<double>(k);
    c = b - c;
    s += c * a[k];
    b = (kk + n) * (kk - n) * b / ((kk + 0.5) * (kk + 1.0));
  }
  return s / d;
}

double extrapolate_to_zero(std::span<const double> h, std::span<const double> y) {
  std::vector<double> p(y.begin(), y.end());
  const std::size_t n = p.size();
  for (std::size_t m = 1; m < n; ++m) {
    for (std::size_t i = 0; i + m < n; ++i) {
      // Neville step evaluated at x = 0.
      p[i] = (h[i + m] * p[i] - h[i] * p[i + 1]) / (h[i + m] - h[i]);
    }
  }
  return p[0];
}

namespace {

QuadResult integrate_oscillating_tail(const std::function<double(double)>& f,
                                      double period, const QuadratureConfig& cfg) {
  const Tolerance tol = Tolerance::from(cfg);
  constexpr int kLevels = 9;
  constexpr int kFirstPeriods = 16;
  QuadResult acc;
  std::vector<double> h;
  std::vector<double> partial;
  int done = 0;
  int target = kFirstPeriods;
  for (int level = 0; level < kLevels; ++level) {
    for (; done < target; ++done) {
      acc += integrate(f, done * period, (done + 1) * period, tol);
    }
    h.push_back(1.0 / (target * period));
    partial.push_back(acc.value);
    target *= 2;
  }
  QuadResult out = acc;
  out.value = extrapolate_to_zero(h, partial);
  const double coarser = extrapolate_to_zero(std::span(h).first(kLevels - 1),
                                             std::span(partial).first(kLevels - 1));
  out.error = acc.error + std::abs(out.value - coarser);
  return out;
}

}  // namespace

QuadResult integrate_half_line(const std::function<double(double)>& f, double scale,
                               TailShape shape, double period,
                               const QuadratureConfig& cfg) {
  const Tolerance tol = Tolerance::from(cfg);
  if (cfg.tail_policy == TailPolicy::Truncate) {
    return integrate(f, 0.0, cfg.truncate_at * scale, tol);
  }
  if (shape == TailShape::OscillatingAlgebraic) {
    return integrate_oscillating_tail(f, period, cfg);
  }
  return integrate_semi_infinite(f, 0.0, scale, tol);
}

}  // namespace mirror
