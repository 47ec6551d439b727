#pragma once

#include "wavelab/errors.hpp"

namespace wavelab {

/// Ideal-gas constants. Pressure is p = R·θ/v = A·v^{-γ}·exp((γ-1)s/R).
struct GasParams {
  double R = 1.0;
  double gamma = 1.4;
  double A = 1.0;

  /// Throws DomainError unless R > 0, γ > 1, A > 0.
  void validate() const;
};

/// Monatomic normalization used by the kinetic model: R = 2/3, γ = 5/3, so
/// that the internal energy equals θ.
GasParams kinetic_gas();

/// Point state: specific volume, velocity, temperature.
class ThermoState {
 public:
  ThermoState(double v, double u, double theta);

  double v() const { return v_; }
  double u() const { return u_; }
  double theta() const { return theta_; }

  friend bool operator==(const ThermoState&, const ThermoState&) = default;

 private:
  double v_;
  double u_;
  double theta_;
};

enum class Family { one = 1, three = 3 };

/// Maps 1 → Family::one, 3 → Family::three; anything else is a UsageError.
Family family_from_int(int family);

double pressure(double v, double theta, const GasParams& params);
double pressure(const ThermoState& s, const GasParams& params);
double entropy(double v, double theta, const GasParams& params);
double entropy(const ThermoState& s, const GasParams& params);
double internal_energy(double theta, const GasParams& params);

// Pressure on the isentrope s: A v^{-γ} exp((γ-1)s/R).
double pressure_isentropic(double v, double s, const GasParams& params);
// Temperature on the isentrope s.
double temperature_isentropic(double v, double s, const GasParams& params);
// Volume on the isentrope s carrying pressure p.
double volume_isentropic(double p, double s, const GasParams& params);

/// λ₁ = -√(γp/v), λ₃ = +√(γp/v) with p on the isentrope s.
double char_speed(double v, double s, Family family, const GasParams& params);
double char_speed(double v, double s, int family, const GasParams& params);

/// Inverse of char_speed along the isentrope: the v with λ_family(v, s) =
/// speed. `speed` must carry the family's sign.
double char_speed_inverse(double speed, double s, Family family, const GasParams& params);

/// √(γ p v): the Eulerian sound speed. Along an isentrope the Riemann
/// invariants are u ± 2c/(γ-1).
double sound_speed(double v, double s, const GasParams& params);

}  // namespace wavelab
