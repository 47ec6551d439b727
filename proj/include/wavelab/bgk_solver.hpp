#pragma once

#include <filesystem>
#include <limits>
#include <vector>

#include "wavelab/kinetic.hpp"
#include "wavelab/profiles.hpp"

namespace wavelab {

struct BgkConfig {
  double eps = 1e-2;  // Knudsen number; infinity gives free transport
  double cfl = 0.8;   // max|ξ₁|·dt/dx
  double t_end = 1.0;
  std::vector<double> snapshot_times;
  bool relax = true;  // false: transport only

  static constexpr double free_transport = std::numeric_limits<double>::infinity();
  void validate() const;
};

/// Velocity grid for a pattern: bulk velocities of all pattern states,
/// θ_max from the states, `count` nodes. Validated to 1e-8.
VelocityGrid velocity_grid_for(const WavePattern& pattern, std::size_t count = 64,
                               double R = 2.0 / 3.0);

/// Eulerian domain [(u₋ - c₋)·1.5T - 10σv₋, (u₊ + c₊)·1.5T + 10σv₊] with
/// T = max(t_end, t0) and c the Eulerian sound speed.
Grid kinetic_domain(const ProfileConfig& cfg, double t_end, double dx);

/// Mass coordinate m(y) of the t = 0 profile at each cell center:
/// dm/dy = 1/V(0, m), m(0) = 0.
std::vector<double> initial_mass_coordinates(const Grid& grid, const ProfileConfig& cfg);

/// Maxwellian of the superposed profile at the mass coordinate of each cell.
KineticField init_kinetic_from_ansatz(const Grid& grid, std::shared_ptr<const VelocityGrid> vgrid,
                                      const ProfileConfig& cfg);

/// Far-field Maxwellians held at the inflow boundaries.
struct KineticBoundary {
  MacroState left;
  MacroState right;
};

KineticBoundary boundary_for(const WavePattern& pattern);

/// One step: first-order upwind transport, then f ← M + (f - M)e^{-dt/ε}.
/// Throws NumericalAbort if g or h turns negative or a cell loses ρ, θ > 0.
void bgk_step(KineticField& field, const KineticBoundary& bc, const BgkConfig& cfg, double dt);

double bgk_stable_dt(const KineticField& field, const BgkConfig& cfg);

struct BgkRunResult {
  std::vector<KineticField> snapshots;
  std::size_t steps = 0;
  double min_g = 0.0;
};

/// Integrates to cfg.t_end, landing exactly on each snapshot time.
BgkRunResult bgk_run(KineticField initial, const KineticBoundary& bc, const BgkConfig& cfg);

BgkRunResult bgk_run(const Grid& grid, std::shared_ptr<const VelocityGrid> vgrid,
                     const ProfileConfig& profile, const BgkConfig& cfg);

/// Per-cell moments and distance to the Maxwellian of the Riemann solution.
struct KineticDiagnostics {
  double t = 0.0;
  std::vector<double> x;
  std::vector<double> rho;
  std::vector<double> u;
  std::vector<double> theta;
  std::vector<double> mass_coordinate;  // of the Riemann solution at x
  std::vector<double> distance;         // weighted L²_ξ(1/√M⋆)
  std::vector<bool> in_sigma;
  GlobalMaxwellian m_star{1.0, 0.0, 1.0};
  double sup_on_sigma = 0.0;
};

/// Distances to M[v̄, ū, θ̄] at each cell (Eulerian position mapped through
/// the Riemann solution), with Σ_h evaluated on the mass coordinate.
KineticDiagnostics kinetic_diagnostics(const KineticField& field, const WavePattern& pattern,
                                       double h, double alpha, double eps);

/// Full (x, ξ₁) dump. Layout, little-endian:
///   char[8]  magic "WLBGK001"
///   uint64   nx, nxi
///   f64      t
///   f64[nx]  x, f64[nxi] xi, f64[nxi] weights
///   f64[nx·nxi] g, then h, row-major by cell.
void write_kinetic_dump(const KineticField& field, const std::filesystem::path& path);
KineticField read_kinetic_dump(const std::filesystem::path& path);

}  // namespace wavelab
