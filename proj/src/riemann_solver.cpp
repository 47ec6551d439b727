#include "wavelab/riemann_solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wavelab/numerics.hpp"

namespace wavelab {

double rarefaction_curve_u(double v, const ThermoState& anchor, Family family,
                           const GasParams& params) {
  // ∫ λ₁ dη = 2c/(γ-1) and ∫ λ₃ dη = -2c/(γ-1) with c = √(γ p v).
  const double s = entropy(anchor, params);
  const double dc = sound_speed(v, s, params) - sound_speed(anchor.v(), s, params);
  const double k = 2.0 / (params.gamma - 1.0);
  return family == Family::one ? anchor.u() - k * dc : anchor.u() + k * dc;
}

double rarefaction_u(double v, const ThermoState& anchor, Family family, const GasParams& params) {
  if (!(v > 0.0)) throw DomainError("rarefaction_u: v must be positive");
  if (v > anchor.v() * (1.0 + 1e-12)) {
    throw DomainError("rarefaction_u: v lies on the inadmissible side of the curve (v > v_anchor)");
  }
  return rarefaction_curve_u(v, anchor, family, params);
}

WavePattern solve_pattern(const ThermoState& left, const ThermoState& right,
                          const GasParams& params) {
  params.validate();
  const double g1 = params.gamma - 1.0;
  const double s_l = entropy(left, params);
  const double s_r = entropy(right, params);
  const double p_l = pressure(left, params);
  const double p_r = pressure(right, params);
  const double c_l = sound_speed(left.v(), s_l, params);
  const double c_r = sound_speed(right.v(), s_r, params);

  auto u_star = [&](double p) {
    const double c = sound_speed(volume_isentropic(p, s_l, params), s_l, params);
    return left.u() - 2.0 / g1 * (c - c_l);
  };
  auto u_starstar = [&](double p) {
    const double c = sound_speed(volume_isentropic(p, s_r, params), s_r, params);
    return right.u() + 2.0 / g1 * (c - c_r);
  };
  // Decreasing in p.
  auto mismatch = [&](double p) { return u_star(p) - u_starstar(p); };

  const double p_min = std::min(p_l, p_r);
  const double scale = std::abs(left.u()) + std::abs(right.u()) + c_l + c_r;
  const double d_top = mismatch(p_min);
  double p_mid = p_min;
  if (d_top > 1e-14 * scale) {
    const int family = p_l <= p_r ? 1 : 3;
    throw NotR1CDR3Error("configuration is not R1-CD-R3: family " + std::to_string(family) +
                             " would have to be a shock",
                         family);
  }
  if (d_top < -1e-14 * scale) {
    if (left.u() + 2.0 / g1 * c_l - right.u() + 2.0 / g1 * c_r <= 0.0) {
      throw DomainError("solve_pattern: end states generate a vacuum");
    }
    double p_lo = p_min * 1e-3;
    while (mismatch(p_lo) <= 0.0) {
      p_lo *= 1e-3;
      if (p_lo < 1e-300) throw DomainError("solve_pattern: intermediate pressure underflows");
    }
    p_mid = numerics::find_root(mismatch, p_lo, p_min, 1e-15, 0.0, "solve_pattern");
  }

  const double v_star = p_mid == p_l ? left.v() : volume_isentropic(p_mid, s_l, params);
  const double v_ss = p_mid == p_r ? right.v() : volume_isentropic(p_mid, s_r, params);
  // Average the two sides so the contact conditions hold exactly in u.
  const double u_mid = 0.5 * (u_star(p_mid) + u_starstar(p_mid));
  const ThermoState star = p_mid == p_l ? ThermoState(left.v(), u_mid, left.theta())
                                        : ThermoState(v_star, u_mid, p_mid * v_star / params.R);
  const ThermoState starstar = p_mid == p_r
                                   ? ThermoState(right.v(), u_mid, right.theta())
                                   : ThermoState(v_ss, u_mid, p_mid * v_ss / params.R);

  WavePattern pat{left, right, star, starstar, {}, {}, 0.0, p_mid};
  pat.fan1 = {char_speed(left.v(), s_l, Family::one, params),
              char_speed(star.v(), s_l, Family::one, params)};
  pat.fan3 = {char_speed(starstar.v(), s_r, Family::three, params),
              char_speed(right.v(), s_r, Family::three, params)};
  if (p_mid == p_l) pat.fan1.second = pat.fan1.first;
  if (p_mid == p_r) pat.fan3.first = pat.fan3.second;
  return pat;
}

ThermoState eval_similarity(const WavePattern& pat, double zeta, const GasParams& params) {
  if (zeta <= pat.fan1.first) return pat.left;
  if (zeta < pat.fan1.second) {
    const double s = entropy(pat.star, params);
    const double v = char_speed_inverse(zeta, s, Family::one, params);
    return ThermoState(v, rarefaction_curve_u(v, pat.star, Family::one, params),
                       temperature_isentropic(v, s, params));
  }
  if (zeta < 0.0) return pat.star;
  if (zeta <= pat.fan3.first) return pat.starstar;
  if (zeta < pat.fan3.second) {
    const double s = entropy(pat.starstar, params);
    const double v = char_speed_inverse(zeta, s, Family::three, params);
    return ThermoState(v, rarefaction_curve_u(v, pat.starstar, Family::three, params),
                       temperature_isentropic(v, s, params));
  }
  return pat.right;
}

ThermoState eval_riemann(const WavePattern& pattern, double t, double x, const GasParams& params) {
  if (!(t > 0.0)) throw UsageError("eval_riemann: t must be positive");
  return eval_similarity(pattern, x / t, params);
}

namespace {

double eulerian_ratio(const WavePattern& pat, double zeta, const GasParams& params) {
  const ThermoState s = eval_similarity(pat, zeta, params);
  return s.u() + zeta * s.v();
}

}  // namespace

double eulerian_position(const WavePattern& pattern, double t, double x, const GasParams& params) {
  if (!(t > 0.0)) throw UsageError("eulerian_position: t must be positive");
  return t * eulerian_ratio(pattern, x / t, params);
}

EulerianSample eval_riemann_eulerian(const WavePattern& pat, double t, double y,
                                     const GasParams& params) {
  if (!(t > 0.0)) throw UsageError("eval_riemann_eulerian: t must be positive");
  const double target = y / t;
  // ū + ζ v̄ is continuous and strictly increasing in ζ (derivative v̄).
  const double lo = std::min(pat.fan1.first, (target - pat.left.u()) / pat.left.v()) - 1.0;
  const double hi = std::max(pat.fan3.second, (target - pat.right.u()) / pat.right.v()) + 1.0;
  const double zeta = numerics::find_root(
      [&](double z) { return eulerian_ratio(pat, z, params) - target; }, lo, hi, 1e-15, 1e-16 * (hi - lo),
      "eval_riemann_eulerian");
  return {eval_similarity(pat, zeta, params), zeta * t};
}

}  // namespace wavelab
