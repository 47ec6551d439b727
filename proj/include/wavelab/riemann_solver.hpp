#pragma once

#include <utility>

#include "wavelab/gas_model.hpp"

namespace wavelab {

/// Solved 1-rarefaction / contact / 3-rarefaction Riemann structure in
/// Lagrangian mass coordinates. The contact sits at x = 0.
struct WavePattern {
  ThermoState left;
  ThermoState right;
  ThermoState star;      // between the 1-fan and the contact
  ThermoState starstar;  // between the contact and the 3-fan
  std::pair<double, double> fan1;  // (λ₁(left), λ₁(star)), both < 0
  std::pair<double, double> fan3;  // (λ₃(starstar), λ₃(right)), both > 0
  double contact_speed = 0.0;
  double p_mid = 0.0;  // common pressure of the intermediate states

  bool fan1_degenerate() const { return fan1.first == fan1.second; }
  bool fan3_degenerate() const { return fan3.first == fan3.second; }
  /// |θ^* - θ_*|, the contact strength.
  double contact_strength() const { return std::abs(starstar.theta() - star.theta()); }
};

/// Velocity on the family's rarefaction curve through `anchor`:
/// u = u_anchor - ∫_{v_anchor}^{v} λ_family(η, s_anchor) dη, evaluated in
/// closed form. The anchor is the state adjacent to the contact, so the
/// admissible side is v <= v_anchor for both families (1-fan: left end has
/// smaller v than the star state; 3-fan: right end has smaller v than the
/// starstar state). Throws DomainError on the other side.
double rarefaction_u(double v, const ThermoState& anchor, Family family, const GasParams& params);

/// Same curve without the admissibility check.
double rarefaction_curve_u(double v, const ThermoState& anchor, Family family,
                           const GasParams& params);

/// Intermediate states joining left to right through R1-CD-R3. Throws
/// NotR1CDR3Error if a shock would be needed (the error names the family) and
/// DomainError if the data would produce vacuum.
WavePattern solve_pattern(const ThermoState& left, const ThermoState& right,
                          const GasParams& params);

/// Solution as a function of the similarity variable ζ = x/t. At ζ = 0 the
/// starstar (right-of-contact) value is returned.
ThermoState eval_similarity(const WavePattern& pattern, double zeta, const GasParams& params);

/// Riemann solution (v̄, ū, θ̄)(t, x) in mass coordinates; t must be > 0.
ThermoState eval_riemann(const WavePattern& pattern, double t, double x, const GasParams& params);

/// Eulerian position of mass coordinate x at time t: t·(ū + ζ v̄)(ζ), ζ = x/t.
/// The contact particle moves with u_* and passes the origin at t = 0.
double eulerian_position(const WavePattern& pattern, double t, double x, const GasParams& params);

struct EulerianSample {
  ThermoState state;
  double mass_coordinate;  // Lagrangian x of the particle at this point
};

/// Riemann solution at Eulerian position y, with the matching mass coordinate.
EulerianSample eval_riemann_eulerian(const WavePattern& pattern, double t, double y,
                                     const GasParams& params);

}  // namespace wavelab
