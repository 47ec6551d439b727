#pragma once

#include <array>
#include <functional>
#include <vector>

#include "wavelab/grid.hpp"
#include "wavelab/profiles.hpp"

namespace wavelab {

/// Cell-centered (v, u, θ) on a grid.
struct FieldState {
  double t = 0.0;
  Grid grid;
  std::vector<double> v;
  std::vector<double> u;
  std::vector<double> theta;
};

enum class Boundary { dirichlet, periodic };

/// Source term (s_v, s_u, s_E) added to the right-hand side; used for
/// manufactured solutions.
using SourceFn = std::function<std::array<double, 3>(double t, double x)>;

struct SolverConfig {
  double eps = 1e-2;
  double nu = 1.0;  // κ = ν·ε
  GasParams params{1.0, 5.0 / 3.0, 1.0};
  double cfl = 0.4;
  double diff_safety = 0.4;
  double t_end = 1.0;
  std::vector<double> snapshot_times;
  Boundary boundary = Boundary::dirichlet;
  // Far-field states held in the ghost cells (Dirichlet).
  ThermoState left{1.0, 0.0, 1.0};
  ThermoState right{1.0, 0.0, 1.0};
  SourceFn source;
  bool second_order = true;  // linear reconstruction of (v, u, θ)

  double kappa() const { return nu * eps; }
  void validate() const;
};

/// Solver config matching a profile config: same ε, ν, gas and end states.
SolverConfig solver_config_for(const ProfileConfig& cfg, double t_end,
                               std::vector<double> snapshot_times = {});

/// [λ₁(left)·1.5T - 10σ, λ₃(right)·1.5T + 10σ] with T = max(t_end, t0).
Grid preset_domain(const ProfileConfig& cfg, double t_end, double dx);

/// The superposed profile at t = 0 sampled at cell centers.
FieldState init_from_ansatz(const Grid& grid, const ProfileConfig& cfg);

/// Running conservation ledger: Σq·dx compared with the time-integrated
/// boundary fluxes and sources, per conserved quantity (v, u, E).
struct Budget {
  std::array<double, 3> initial{};
  std::array<double, 3> flux_in{};  // ∫ (F_left - F_right) dt + ∫∫ S dx dt
  std::array<double, 3> current{};
  double max_step_drift = 0.0;  // max over steps of |Δ(Σq dx) - flux| / Σ|q| dx
};

struct StepResult {
  FieldState state;
  double dt = 0.0;
  std::array<double, 3> boundary_flux{};  // net inflow over the step
  std::array<double, 3> mass_change{};    // Δ Σ q dx
  double relative_drift = 0.0;
};

/// Largest stable time step for the state.
double stable_dt(const FieldState& state, const SolverConfig& cfg);

/// One Heun (SSP-RK2) step of size dt, or stable_dt if dt <= 0. Throws
/// NumericalAbort on loss of positivity.
StepResult step(const FieldState& state, const SolverConfig& cfg, double dt = 0.0);

struct RunResult {
  std::vector<FieldState> snapshots;
  Budget budget;
  std::size_t steps = 0;
  double min_v = 0.0;
  double min_theta = 0.0;
};

/// Integrates from `initial` to cfg.t_end. Steps are shortened to land on
/// each snapshot time exactly; t_end is always the last snapshot.
RunResult run(const FieldState& initial, const SolverConfig& cfg);

/// init_from_ansatz followed by run.
RunResult run(const Grid& grid, const ProfileConfig& profile, const SolverConfig& cfg);

/// max over cells with |x|/√(1+t) >= h·ε^α of the componentwise
/// |(v, u, θ) - Riemann solution|. Throws UsageError if t < h or the set is
/// empty.
double sup_error_on_sigma(const FieldState& snapshot, const WavePattern& pattern,
                          const GasParams& params, double h, double alpha, double eps);

/// Cells of `grid` that lie in Σ_h at time t.
std::vector<std::size_t> sigma_cells(const Grid& grid, double t, double h, double alpha,
                                     double eps);

}  // namespace wavelab
