#include "wavelab/profiles.hpp"

#include <cmath>

#include "wavelab/burgers.hpp"
#include "wavelab/errors.hpp"

namespace wavelab {

const char* model_name(Model m) { return m == Model::kinetic ? "kinetic" : "navier_stokes"; }

Model model_from_string(const std::string& name) {
  if (name == "navier_stokes" || name == "ns") return Model::navier_stokes;
  if (name == "kinetic" || name == "bgk") return Model::kinetic;
  throw ConfigError("unknown model '" + name + "' (expected navier_stokes or kinetic)");
}

Diffusivity contact_diffusivity(Model model, const WavePattern& pattern, const GasParams& params,
                                double nu, double lambda0) {
  const double p = pattern.p_mid;
  if (model == Model::kinetic) return Diffusivity::kinetic(p, lambda0);
  return Diffusivity::navier_stokes(nu * p * (params.gamma - 1.0) /
                                    (params.R * params.R * params.gamma));
}

namespace {

void check_eps(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw UsageError("profile: eps must be positive");
}

void apply_scales(ProfileConfig& cfg, const ProfileOptions& opts) {
  cfg.t0 = opts.t0.value_or(std::pow(cfg.eps, 0.2));
  cfg.sigma = opts.sigma.value_or(std::pow(cfg.eps, 0.4));
  cfg.overridden = opts.t0.has_value() || opts.sigma.has_value();
  if (!(cfg.t0 >= 0.0) || !(cfg.sigma > 0.0)) throw UsageError("profile: need t0 >= 0, sigma > 0");
}

}  // namespace

ProfileConfig make_profile_config(double eps, const ThermoState& left, const ThermoState& right,
                                  const GasParams& params, Model model,
                                  const ProfileOptions& opts) {
  check_eps(eps);
  params.validate();
  if (opts.nu < 0.1) throw UsageError("profile: nu must be >= 0.1");
  if (!(opts.mu0 > 0.0) || !(opts.lambda0 > 0.0)) {
    throw UsageError("profile: mu0 and lambda0 must be positive");
  }
  if (model == Model::kinetic) {
    const GasParams k = kinetic_gas();
    if (std::abs(params.R - k.R) > 1e-14 || std::abs(params.gamma - k.gamma) > 1e-14) {
      throw UsageError("profile: the kinetic model needs R = 2/3 and gamma = 5/3");
    }
  }
  ProfileConfig cfg(solve_pattern(left, right, params));
  cfg.eps = eps;
  cfg.nu = opts.nu;
  cfg.mu0 = opts.mu0;
  cfg.lambda0 = opts.lambda0;
  cfg.model = model;
  cfg.params = params;
  apply_scales(cfg, opts);
  const Diffusivity d = contact_diffusivity(model, cfg.pattern, params, opts.nu, opts.lambda0);
  cfg.contact = std::make_shared<const ContactWaveTable>(solve_contact_selfsimilar(
      cfg.pattern.star.theta(), cfg.pattern.starstar.theta(), d, opts.contact));
  return cfg;
}

ProfileConfig with_eps(const ProfileConfig& cfg, double eps) {
  check_eps(eps);
  ProfileConfig out = cfg;
  out.eps = eps;
  out.t0 = std::pow(eps, 0.2);
  out.sigma = std::pow(eps, 0.4);
  out.overridden = false;
  return out;
}

ProfileSample rarefaction_sample(double t, double x, Family family, const ThermoState& anchor,
                                 double w_minus, double w_plus, double t0, double sigma,
                                 const GasParams& params) {
  if (!(w_minus < w_plus)) return {anchor, 0.0, 0.0, 0.0};
  const double s = entropy(anchor, params);
  const BurgersSample b = burgers_smooth_sample(t + t0, x, sigma, w_minus, w_plus);
  const double v = char_speed_inverse(b.w, s, family, params);
  const double u = rarefaction_curve_u(v, anchor, family, params);
  const double theta = temperature_isentropic(v, s, params);
  // λ ∝ v^{-(γ+1)/2} on the isentrope.
  const double dlam_dv = -0.5 * (params.gamma + 1.0) * b.w / v;
  const double v_x = b.w_x / dlam_dv;
  return {ThermoState(v, u, theta), v_x, -b.w * v_x, (1.0 - params.gamma) * theta / v * v_x};
}

ProfileSample rarefaction_sample(double t, double x, Family family, const ProfileConfig& cfg) {
  const WavePattern& p = cfg.pattern;
  if (family == Family::one) {
    if (p.fan1_degenerate()) return {p.star, 0.0, 0.0, 0.0};
    return rarefaction_sample(t, x, family, p.star, p.fan1.first, p.fan1.second, cfg.t0,
                              cfg.sigma, cfg.params);
  }
  if (p.fan3_degenerate()) return {p.starstar, 0.0, 0.0, 0.0};
  return rarefaction_sample(t, x, family, p.starstar, p.fan3.first, p.fan3.second, cfg.t0,
                            cfg.sigma, cfg.params);
}

ThermoState rarefaction_profile(double t, double x, Family family, const ProfileConfig& cfg) {
  return rarefaction_sample(t, x, family, cfg).state;
}

ThermoState contact_profile(double t, double x, const ProfileConfig& cfg) {
  if (!(t >= 0.0)) throw UsageError("contact_profile: t must be >= 0");
  if (!cfg.contact) throw UsageError("contact_profile: config has no contact table");
  const WavePattern& pat = cfg.pattern;
  const double p_plus = pat.p_mid;
  const double u_plus = pat.starstar.u();
  const ContactWaveTable& tab = *cfg.contact;
  if (tab.constant()) return ThermoState(pat.starstar.v(), u_plus, pat.starstar.theta());

  const double scale = std::sqrt(cfg.eps * (1.0 + t));
  const double eta = x / scale;
  const ContactSample c = tab.sample(eta);
  const double th = c.theta;
  const double th_x = c.theta_prime / scale;
  const double th_t = -eta * c.theta_prime / (2.0 * (1.0 + t));
  const double R = cfg.params.R;
  const double g = cfg.params.gamma;
  if (cfg.model == Model::navier_stokes) {
    const double V = R * th / p_plus;
    const double U = u_plus + cfg.kappa() * (g - 1.0) / (R * g) * th_x / th;
    const double T = th + cfg.eps * (R * g - cfg.nu * (g - 1.0)) / (g * p_plus) * th_t;
    return ThermoState(V, U, T);
  }
  const double a = tab.diffusivity()(th);
  const double V = 2.0 * th / (3.0 * p_plus);
  const double U = u_plus + 2.0 * cfg.eps * a / (3.0 * p_plus) * th_x;
  const double T = th + 2.0 * cfg.eps / (3.0 * p_plus) * th_t *
                            (4.0 / 3.0 * cfg.mu(th) - 3.0 / 5.0 * cfg.lambda(th));
  return ThermoState(V, U, T);
}

ThermoState superpose(double t, double x, const ProfileConfig& cfg) {
  const ThermoState r1 = rarefaction_profile(t, x, Family::one, cfg);
  const ThermoState cd = contact_profile(t, x, cfg);
  const ThermoState r3 = rarefaction_profile(t, x, Family::three, cfg);
  const ThermoState& a = cfg.pattern.star;
  const ThermoState& b = cfg.pattern.starstar;
  return ThermoState(r1.v() + cd.v() + r3.v() - a.v() - b.v(),
                     r1.u() + cd.u() + r3.u() - a.u() - b.u(),
                     r1.theta() + cd.theta() + r3.theta() - a.theta() - b.theta());
}

}  // namespace wavelab
