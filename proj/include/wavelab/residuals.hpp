#pragma once

#include <vector>

#include "wavelab/grid.hpp"
#include "wavelab/profiles.hpp"

namespace wavelab {

/// Momentum and energy residuals of the superposed profile,
///   Q₁ = U_t + P_x - (m U_x/V)_x
///   Q₂ = c_v Θ_t + P U_x - (k Θ_x/V)_x - m U_x²/V
/// with m = ε, k = κ, c_v = R/(γ-1) for Navier–Stokes and m = (4/3)εμ(Θ),
/// k = ελ(Θ), c_v = 1 for the kinetic model.
struct ResidualField {
  double t = 0.0;
  double dx = 0.0;
  std::vector<double> x;
  std::vector<double> q1;
  std::vector<double> q2;

  double l1_q1() const;
  double l1_q2() const;
  double max_q1() const;
  double max_q2() const;
};

enum class ResidualPart {
  total,        // full ansatz
  interaction,  // total minus the residuals of each wave taken alone
};

/// Grid spacing the residual evaluation needs at time t.
double residual_required_dx(const ProfileConfig& cfg, double t);

/// Residuals at the cell centers of `grid`. Derivatives are 4th-order
/// centered differences. Throws UsageError when dx exceeds
/// residual_required_dx.
ResidualField ansatz_residuals(const ProfileConfig& cfg, const Grid& grid, double t,
                               ResidualPart part = ResidualPart::total);

struct PointResidual {
  double q1;
  double q2;
};

/// Residual at one point with stencil spacing h.
PointResidual residual_at(const ProfileConfig& cfg, double t, double x, double h,
                          ResidualPart part = ResidualPart::total);

}  // namespace wavelab
