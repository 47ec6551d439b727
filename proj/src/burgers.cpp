#include "wavelab/burgers.hpp"

#include <algorithm>
#include <cmath>

#include "wavelab/errors.hpp"
#include "wavelab/numerics.hpp"

namespace wavelab {

double burgers_exact(double t, double x, double w_minus, double w_plus) {
  if (!(t > 0.0)) throw UsageError("burgers_exact: t must be positive");
  if (!(w_minus < w_plus)) throw UsageError("burgers_exact: need w_minus < w_plus");
  const double z = x / t;
  if (z <= w_minus) return w_minus;
  if (z >= w_plus) return w_plus;
  return z;
}

namespace {

// sech²(z), without overflow for large |z|.
double sech2(double z) {
  const double e = std::exp(-2.0 * std::abs(z));
  return 4.0 * e / ((1.0 + e) * (1.0 + e));
}

}  // namespace

BurgersSample burgers_smooth_sample(double t, double x, double sigma, double w_minus,
                                    double w_plus) {
  if (!(sigma > 0.0)) throw UsageError("burgers_smooth: sigma must be positive");
  if (!(w_minus < w_plus)) throw UsageError("burgers_smooth: need w_minus < w_plus");
  if (!(t >= 0.0)) throw UsageError("burgers_smooth: t must be non-negative");
  const double mid = 0.5 * (w_plus + w_minus);
  const double half = 0.5 * (w_plus - w_minus);
  // Clamped: mid ± half can round a few ulps past w±.
  auto w0 = [&](double x0) {
    return std::clamp(mid + half * std::tanh(x0 / sigma), w_minus, w_plus);
  };
  auto w0_x = [&](double x0) { return half / sigma * sech2(x0 / sigma); };

  double x0 = x;
  if (t > 0.0) {
    // x₀ ↦ x₀ + w_σ(x₀)t is strictly increasing and w₋ < w_σ < w₊, so the
    // foot lies in (x - w₊t, x - w₋t).
    auto f = [&](double y) { return y + w0(y) * t - x; };
    const double pad = 1e-12 * (std::abs(x) + (std::abs(w_plus) + std::abs(w_minus)) * t + sigma);
    const double lo = x - w_plus * t - pad;
    const double hi = x - w_minus * t + pad;
    x0 = numerics::find_root(f, lo, hi, 1e-15, 1e-16 * (hi - lo + sigma), "burgers_smooth");
  }
  const double d = w0_x(x0);
  return {w0(x0), d / (1.0 + d * t), x0};
}

double burgers_smooth(double t, double x, double sigma, double w_minus, double w_plus) {
  return burgers_smooth_sample(t, x, sigma, w_minus, w_plus).w;
}

}  // namespace wavelab
