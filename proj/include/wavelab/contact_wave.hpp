#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace wavelab {

/// Power-law diffusivity D(θ) = coeff·θ^exponent of the self-similar
/// contact problem  -(η/2)Θ' = (D(Θ)Θ')'.
///   Navier–Stokes form Θ_t = aε(Θ_x/Θ)_x       → D = a/Θ
///   kinetic form       θ_t = ε(a(θ)θ_x)_x with
///   a(θ) = 9p₊λ(θ)/(10θ), λ(θ) = λ₀√θ          → D = 0.9·p₊·λ₀·θ^{-1/2}
struct Diffusivity {
  double coeff = 1.0;
  double exponent = -1.0;

  static Diffusivity navier_stokes(double a) { return {a, -1.0}; }
  static Diffusivity kinetic(double p_plus, double lambda0) { return {0.9 * p_plus * lambda0, -0.5}; }

  double operator()(double theta) const;
  double derivative(double theta) const;
  std::string describe() const;
};

struct ContactSample {
  double theta;        // Θ̂(η)
  double theta_prime;  // Θ̂'(η)
};

/// Dense, immutable table of the self-similar contact profile Θ̂(η) on
/// [-L, L]; outside it the boundary constants are returned.
class ContactWaveTable {
 public:
  ContactWaveTable(std::vector<double> eta, std::vector<double> theta,
                   std::vector<double> theta_prime, std::vector<double> theta_second,
                   std::vector<double> tail_deviation, double theta_left, double theta_right,
                   Diffusivity diffusivity, double half_width, double boundary_mismatch);

  ContactSample sample(double eta) const;
  double value(double eta) const { return sample(eta).theta; }
  double derivative(double eta) const { return sample(eta).theta_prime; }

  /// Θ̂(η) minus the limit on the same side of the origin. Accurate in
  /// relative terms far into the Gaussian tails.
  double tail_deviation(double eta) const;

  const std::vector<double>& eta_grid() const { return eta_; }
  const std::vector<double>& theta_hat() const { return theta_; }
  const std::vector<double>& theta_hat_prime() const { return theta_prime_; }
  double theta_left() const { return theta_left_; }
  double theta_right() const { return theta_right_; }
  double delta_cd() const { return std::abs(theta_right_ - theta_left_); }
  const Diffusivity& diffusivity() const { return diffusivity_; }
  std::string a_coeff() const { return diffusivity_.describe(); }
  double half_width() const { return half_width_; }
  double boundary_mismatch() const { return boundary_mismatch_; }
  bool constant() const { return theta_left_ == theta_right_; }

  /// Number of evaluations that fell outside [-L, L] and were clamped.
  std::uint64_t clamped_evaluations() const { return clamp_count_->load(std::memory_order_relaxed); }

 private:
  std::vector<double> eta_;
  std::vector<double> theta_;
  std::vector<double> theta_prime_;
  std::vector<double> theta_second_;
  std::vector<double> tail_;
  double theta_left_;
  double theta_right_;
  Diffusivity diffusivity_;
  double half_width_;
  double boundary_mismatch_;
  double h_;
  std::shared_ptr<std::atomic<std::uint64_t>> clamp_count_;
};

struct ContactSolveOptions {
  double half_width = 10.0;    // L
  double eta_step = 0.005;     // table spacing
  double mismatch_tol = 1e-10; // required |Θ̂(L) - θ₊|
};

/// Smallest half-width for which the Gaussian tail of the profile is below
/// 1e-10 at ±L (a conservative estimate from the largest diffusivity).
double required_half_width(double theta_left, double theta_right, const Diffusivity& d);

/// Solves the two-point problem -(η/2)Θ̂' = (D(Θ̂)Θ̂')', Θ̂(-L) = θ₋,
/// Θ̂(L) = θ₊ by shooting on the flux D(Θ̂)Θ̂' at -L.
ContactWaveTable solve_contact_selfsimilar(double theta_left, double theta_right,
                                           const Diffusivity& diffusivity,
                                           const ContactSolveOptions& opts = {});

struct GaussianTailFit {
  double c0;         // decay rate in exp(-c0 η²)
  double r_squared;
  double log_prefactor;
};

/// Least-squares fit of log|Θ̂ - θ₊| against η² on [eta_min, eta_max] (right
/// tail; pass negative bounds for the left tail against θ₋).
GaussianTailFit fit_gaussian_tail(const ContactWaveTable& table, double eta_min, double eta_max,
                                  int samples = 61);

}  // namespace wavelab
