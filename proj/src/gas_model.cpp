#include "wavelab/gas_model.hpp"

#include <cmath>
#include <string>

namespace wavelab {

namespace {

void require_positive(double v, double theta, const char* op) {
  if (!(v > 0.0) || !(theta > 0.0)) {
    throw DomainError(std::string(op) + ": specific volume and temperature must be positive");
  }
}

}  // namespace

void GasParams::validate() const {
  if (!(R > 0.0) || !(gamma > 1.0) || !(A > 0.0)) {
    throw DomainError("GasParams: require R > 0, gamma > 1, A > 0");
  }
}

GasParams kinetic_gas() { return GasParams{2.0 / 3.0, 5.0 / 3.0, 1.0}; }

ThermoState::ThermoState(double v, double u, double theta) : v_(v), u_(u), theta_(theta) {
  require_positive(v, theta, "ThermoState");
  if (!std::isfinite(u)) throw DomainError("ThermoState: velocity must be finite");
}

Family family_from_int(int family) {
  if (family == 1) return Family::one;
  if (family == 3) return Family::three;
  throw UsageError("characteristic family must be 1 or 3, got " + std::to_string(family));
}

double pressure(double v, double theta, const GasParams& params) {
  require_positive(v, theta, "pressure");
  return params.R * theta / v;
}

double pressure(const ThermoState& s, const GasParams& params) {
  return pressure(s.v(), s.theta(), params);
}

double entropy(double v, double theta, const GasParams& params) {
  require_positive(v, theta, "entropy");
  const double g1 = params.gamma - 1.0;
  return params.R / g1 * std::log(params.R * theta * std::pow(v, g1) / params.A);
}

double entropy(const ThermoState& s, const GasParams& params) {
  return entropy(s.v(), s.theta(), params);
}

double internal_energy(double theta, const GasParams& params) {
  return params.R * theta / (params.gamma - 1.0);
}

double pressure_isentropic(double v, double s, const GasParams& params) {
  if (!(v > 0.0)) throw DomainError("pressure_isentropic: v must be positive");
  return params.A * std::pow(v, -params.gamma) * std::exp((params.gamma - 1.0) * s / params.R);
}

double temperature_isentropic(double v, double s, const GasParams& params) {
  return pressure_isentropic(v, s, params) * v / params.R;
}

double volume_isentropic(double p, double s, const GasParams& params) {
  if (!(p > 0.0)) throw DomainError("volume_isentropic: p must be positive");
  const double k = params.A * std::exp((params.gamma - 1.0) * s / params.R);
  return std::pow(k / p, 1.0 / params.gamma);
}

double char_speed(double v, double s, Family family, const GasParams& params) {
  const double mag = std::sqrt(params.gamma * pressure_isentropic(v, s, params) / v);
  return family == Family::one ? -mag : mag;
}

double char_speed(double v, double s, int family, const GasParams& params) {
  return char_speed(v, s, family_from_int(family), params);
}

double char_speed_inverse(double speed, double s, Family family, const GasParams& params) {
  if ((family == Family::one && !(speed < 0.0)) || (family == Family::three && !(speed > 0.0))) {
    throw DomainError("char_speed_inverse: speed has the wrong sign for the family");
  }
  // |λ| = √(γ k) v^{-(γ+1)/2} with k = A exp((γ-1)s/R).
  const double k = params.A * std::exp((params.gamma - 1.0) * s / params.R);
  return std::pow(std::sqrt(params.gamma * k) / std::abs(speed), 2.0 / (params.gamma + 1.0));
}

double sound_speed(double v, double s, const GasParams& params) {
  return std::sqrt(params.gamma * pressure_isentropic(v, s, params) * v);
}

}  // namespace wavelab
