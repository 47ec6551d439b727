#include "wavelab/contact_wave.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include <boost/numeric/odeint.hpp>

#include "wavelab/errors.hpp"
#include "wavelab/numerics.hpp"

namespace wavelab {

double Diffusivity::operator()(double theta) const { return coeff * std::pow(theta, exponent); }

double Diffusivity::derivative(double theta) const {
  return coeff * exponent * std::pow(theta, exponent - 1.0);
}

std::string Diffusivity::describe() const {
  std::ostringstream os;
  os.precision(17);
  if (exponent == -1.0) {
    os << "navier_stokes: D(theta) = a/theta, a = " << coeff;
  } else {
    os << "power law: D(theta) = " << coeff << " * theta^" << exponent;
  }
  return os.str();
}

ContactWaveTable::ContactWaveTable(std::vector<double> eta, std::vector<double> theta,
                                   std::vector<double> theta_prime,
                                   std::vector<double> theta_second,
                                   std::vector<double> tail_deviation, double theta_left,
                                   double theta_right, Diffusivity diffusivity, double half_width,
                                   double boundary_mismatch)
    : eta_(std::move(eta)),
      theta_(std::move(theta)),
      theta_prime_(std::move(theta_prime)),
      theta_second_(std::move(theta_second)),
      tail_(std::move(tail_deviation)),
      theta_left_(theta_left),
      theta_right_(theta_right),
      diffusivity_(diffusivity),
      half_width_(half_width),
      boundary_mismatch_(boundary_mismatch),
      h_(eta_.size() > 1 ? eta_[1] - eta_[0] : 1.0),
      clamp_count_(std::make_shared<std::atomic<std::uint64_t>>(0)) {}

namespace {

// Cubic Hermite interpolation on [0, h] with end values/derivatives.
double hermite(double y0, double d0, double y1, double d1, double h, double s) {
  const double t = s / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * h * d0 + (-2 * t3 + 3 * t2) * y1 +
         (t3 - t2) * h * d1;
}

}  // namespace

ContactSample ContactWaveTable::sample(double eta) const {
  if (constant()) return {theta_left_, 0.0};
  if (eta <= eta_.front() || eta >= eta_.back()) {
    clamp_count_->fetch_add(1, std::memory_order_relaxed);
    return {eta < 0.0 ? theta_left_ : theta_right_, 0.0};
  }
  const auto k = std::min(static_cast<std::size_t>((eta - eta_.front()) / h_), eta_.size() - 2);
  const double s = eta - eta_[k];
  return {hermite(theta_[k], theta_prime_[k], theta_[k + 1], theta_prime_[k + 1], h_, s),
          hermite(theta_prime_[k], theta_second_[k], theta_prime_[k + 1], theta_second_[k + 1], h_,
                  s)};
}

double ContactWaveTable::tail_deviation(double eta) const {
  if (constant()) return 0.0;
  if (eta <= eta_.front() || eta >= eta_.back()) return 0.0;
  const auto k = std::min(static_cast<std::size_t>((eta - eta_.front()) / h_), eta_.size() - 2);
  const double s = eta - eta_[k];
  return hermite(tail_[k], theta_prime_[k], tail_[k + 1], theta_prime_[k + 1], h_, s);
}

double required_half_width(double theta_left, double theta_right, const Diffusivity& d) {
  const double delta = std::abs(theta_right - theta_left);
  if (delta == 0.0) return 0.0;
  const double lo = std::min(theta_left, theta_right);
  const double hi = std::max(theta_left, theta_right);
  const double d_max = std::max(d(lo), d(hi));
  // |Θ̂ - θ±| ≲ δ·exp(-η²/(4 D_max)).
  const double decades = std::log(std::max(delta, 1e-10) / 1e-10) + std::log(10.0);
  return std::sqrt(4.0 * d_max * decades);
}

namespace {

using OdeState = std::array<double, 2>;  // (Θ - θ₋, D(Θ)Θ')

struct ContactOde {
  double theta_left;
  double floor;
  Diffusivity d;
  void operator()(const OdeState& y, OdeState& dy, double eta) const {
    const double theta = std::max(theta_left + y[0], floor);
    const double diff = d(theta);
    dy[0] = y[1] / diff;
    dy[1] = -0.5 * eta * y[1] / diff;
  }
};

struct ShotResult {
  std::vector<double> dev;
  std::vector<double> flux;
};

ShotResult shoot(const ContactOde& ode, double flux0, const std::vector<double>& eta) {
  namespace odeint = boost::numeric::odeint;
  auto stepper = odeint::make_controlled(1e-16, 1e-13, odeint::runge_kutta_dopri5<OdeState>());
  OdeState y{0.0, flux0};
  ShotResult out;
  out.dev.reserve(eta.size());
  out.flux.reserve(eta.size());
  odeint::integrate_times(stepper, ode, y, eta.begin(), eta.end(), eta[1] - eta[0],
                          [&](const OdeState& s, double) {
                            out.dev.push_back(s[0]);
                            out.flux.push_back(s[1]);
                          });
  return out;
}

}  // namespace

ContactWaveTable solve_contact_selfsimilar(double theta_left, double theta_right,
                                           const Diffusivity& diffusivity,
                                           const ContactSolveOptions& opts) {
  if (!(theta_left > 0.0) || !(theta_right > 0.0)) {
    throw DomainError("solve_contact_selfsimilar: temperatures must be positive");
  }
  if (!(diffusivity.coeff > 0.0)) {
    throw DomainError("solve_contact_selfsimilar: diffusivity coefficient must be positive");
  }
  const double L = opts.half_width;
  const auto n = static_cast<std::size_t>(std::llround(2.0 * L / opts.eta_step)) + 1;
  std::vector<double> eta = numerics::linspace(-L, L, n);

  if (theta_left == theta_right) {
    return ContactWaveTable(eta, std::vector<double>(n, theta_left), std::vector<double>(n, 0.0),
                            std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), theta_left,
                            theta_right, diffusivity, L, 0.0);
  }
  const double needed = required_half_width(theta_left, theta_right, diffusivity);
  if (L < needed) {
    std::ostringstream os;
    os << "solve_contact_selfsimilar: half-width L = " << L
       << " leaves a Gaussian tail above 1e-10; use L >= " << needed;
    throw UsageError(os.str());
  }

  const double delta = theta_right - theta_left;
  const double sign = delta > 0.0 ? 1.0 : -1.0;
  const ContactOde ode{theta_left, 1e-8 * std::min(theta_left, theta_right), diffusivity};

  // Flux at -L parametrized as sign·exp(z); Θ̂(L) is increasing in z·sign.
  auto miss = [&](double z) {
    const ShotResult r = shoot(ode, sign * std::exp(z), eta);
    const double m = r.dev.back() - delta;
    return std::isfinite(m) ? sign * m : 1e300;
  };
  double z_lo = -700.0;
  double z_hi = std::log(std::abs(delta) * diffusivity(std::max(theta_left, theta_right)));
  int tries = 0;
  while (miss(z_hi) <= 0.0) {
    z_hi += 5.0;
    if (++tries > 40) throw InternalError("solve_contact_selfsimilar: could not bracket shot");
  }
  if (miss(z_lo) >= 0.0) throw InternalError("solve_contact_selfsimilar: could not bracket shot");
  const double z = numerics::find_root(miss, z_lo, z_hi, 0.0, 1e-15, "solve_contact_selfsimilar");

  const ShotResult shot = shoot(ode, sign * std::exp(z), eta);
  const double mismatch = shot.dev.back() - delta;
  if (!(std::abs(mismatch) <= opts.mismatch_tol)) {
    throw InternalError("solve_contact_selfsimilar: boundary mismatch above tolerance");
  }

  std::vector<double> theta(n), dtheta(n), d2theta(n), tail(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double th = theta_left + shot.dev[k];
    const double diff = diffusivity(th);
    dtheta[k] = shot.flux[k] / diff;
    d2theta[k] = -0.5 * eta[k] * dtheta[k] / diff - diffusivity.derivative(th) * dtheta[k] * dtheta[k] / diff;
  }
  // Right-tail deviation Θ̂ - θ₊ = -∫_η^L Θ̂', integrated from +L with the
  // exact integral of the Hermite interpolant of Θ̂'.
  const double h = eta[1] - eta[0];
  std::vector<double> right_dev(n, 0.0);
  for (std::size_t k = n - 1; k-- > 0;) {
    const double seg = 0.5 * h * (dtheta[k] + dtheta[k + 1]) + h * h / 12.0 * (d2theta[k] - d2theta[k + 1]);
    right_dev[k] = right_dev[k + 1] - seg;
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (eta[k] < 0.0) {
      tail[k] = shot.dev[k];
      theta[k] = theta_left + shot.dev[k];
    } else {
      tail[k] = right_dev[k];
      theta[k] = theta_right + right_dev[k];
    }
  }
  return ContactWaveTable(std::move(eta), std::move(theta), std::move(dtheta), std::move(d2theta),
                          std::move(tail), theta_left, theta_right, diffusivity, L, mismatch);
}

GaussianTailFit fit_gaussian_tail(const ContactWaveTable& table, double eta_min, double eta_max,
                                  int samples) {
  std::vector<double> x, y;
  for (double eta : numerics::linspace(eta_min, eta_max, static_cast<std::size_t>(samples))) {
    const double dev = std::abs(table.tail_deviation(eta));
    if (dev > 0.0) {
      x.push_back(eta * eta);
      y.push_back(std::log(dev));
    }
  }
  if (x.size() < 2) throw UsageError("fit_gaussian_tail: profile has no tail to fit");
  const auto fit = numerics::fit_line(x, y);
  return {-fit.slope, fit.r_squared, fit.intercept};
}

}  // namespace wavelab
