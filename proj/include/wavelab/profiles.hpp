#pragma once

#include <memory>
#include <optional>

#include "wavelab/contact_wave.hpp"
#include "wavelab/gas_model.hpp"
#include "wavelab/riemann_solver.hpp"

namespace wavelab {

enum class Model { navier_stokes, kinetic };

const char* model_name(Model m);
Model model_from_string(const std::string& name);

/// Everything needed to evaluate the approximate wave pattern at one ε.
struct ProfileConfig {
  explicit ProfileConfig(WavePattern p) : pattern(std::move(p)) {}

  double eps = 1e-2;
  double t0 = 0.0;
  double sigma = 0.0;
  double nu = 1.0;       // κ = ν·ε
  double mu0 = 1.0;      // kinetic: μ(θ) = μ₀√θ
  double lambda0 = 1.0;  // kinetic: λ(θ) = λ₀√θ
  bool overridden = false;  // t0 or σ not equal to ε^{1/5}, ε^{2/5}
  Model model = Model::navier_stokes;
  GasParams params;
  WavePattern pattern;
  std::shared_ptr<const ContactWaveTable> contact;

  double kappa() const { return nu * eps; }
  double mu(double theta) const { return mu0 * std::sqrt(theta); }
  double lambda(double theta) const { return lambda0 * std::sqrt(theta); }
};

struct ProfileOptions {
  double nu = 1.0;
  double mu0 = 1.0;
  double lambda0 = 1.0;
  std::optional<double> t0;
  std::optional<double> sigma;
  ContactSolveOptions contact;
};

/// Diffusivity of the self-similar contact problem for the model.
Diffusivity contact_diffusivity(Model model, const WavePattern& pattern, const GasParams& params,
                                double nu, double lambda0);

/// Solves the pattern and the contact table. The kinetic model requires
/// R = 2/3, γ = 5/3.
ProfileConfig make_profile_config(double eps, const ThermoState& left, const ThermoState& right,
                                  const GasParams& params, Model model,
                                  const ProfileOptions& opts = {});

/// Same ε-independent pattern and table, new ε (contact table is reused).
ProfileConfig with_eps(const ProfileConfig& cfg, double eps);

/// Profile value with first x-derivatives.
struct ProfileSample {
  ThermoState state;
  double v_x = 0.0;
  double u_x = 0.0;
  double theta_x = 0.0;
};

/// Smoothed i-rarefaction anchored at the intermediate state adjacent to
/// the contact (star for family 1, starstar for family 3).
ProfileSample rarefaction_sample(double t, double x, Family family, const ProfileConfig& cfg);
ThermoState rarefaction_profile(double t, double x, Family family, const ProfileConfig& cfg);

/// General form with an explicit anchor and Burgers end speeds w₋ < w₊.
ProfileSample rarefaction_sample(double t, double x, Family family, const ThermoState& anchor,
                                 double w_minus, double w_plus, double t0, double sigma,
                                 const GasParams& params);

/// Viscous (Navier–Stokes) or kinetic contact wave.
ThermoState contact_profile(double t, double x, const ProfileConfig& cfg);

/// R1 + CD + R3 minus the two intermediate states.
ThermoState superpose(double t, double x, const ProfileConfig& cfg);

}  // namespace wavelab
