#pragma once

#include <array>
#include <memory>
#include <span>
#include <vector>

#include "wavelab/gas_model.hpp"
#include "wavelab/grid.hpp"

namespace wavelab {

// Slab-symmetric distributions are stored through the reduced pair
//   g(ξ₁) = ∫∫ f dξ₂dξ₃,   h(ξ₁) = ∫∫ (ξ₂²+ξ₃²)/2 · f dξ₂dξ₃.

struct MacroState {
  double rho;
  double u;
  double theta;
};

/// Uniform midpoint quadrature in ξ₁.
class VelocityGrid {
 public:
  VelocityGrid(double center, double half_width, std::size_t count);

  /// Covers bulk velocities [u_min, u_max] with 12 thermal widths at θ_max.
  static VelocityGrid for_range(double u_min, double u_max, double theta_max,
                                std::size_t count = 64, double R = 2.0 / 3.0);

  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }
  double center() const { return center_; }
  double half_width() const { return half_width_; }
  double spacing() const { return spacing_; }
  std::size_t count() const { return nodes_.size(); }
  double max_speed() const;

  /// Largest relative error of the Maxwellian moments (ρ, ρu, total energy)
  /// over the corners of the given state box.
  double moment_error(double rho, double u_min, double u_max, double theta_min,
                      double theta_max, double R = 2.0 / 3.0) const;

  /// Throws DomainError if moment_error exceeds `tol`.
  void validate(double u_min, double u_max, double theta_min, double theta_max,
                double R = 2.0 / 3.0, double tol = 1e-8) const;

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
  double center_;
  double half_width_;
  double spacing_;
};

struct ReducedValue {
  double g;
  double h;
};

/// Reduced Maxwellian at one node: g = ρ/√(2πRθ)·exp(-(ξ₁-u)²/(2Rθ)),
/// h = Rθ·g.
ReducedValue maxwellian(double rho, double u1, double theta, double xi, double R = 2.0 / 3.0);

/// Reduced Maxwellian on every node of the grid.
void maxwellian(const MacroState& m, const VelocityGrid& grid, double R, std::span<double> g,
                std::span<double> h);

/// (ρ, ρu₁, ρ(E + u₁²/2)) of a reduced pair.
std::array<double, 3> moments(std::span<const double> g, std::span<const double> h,
                              const VelocityGrid& grid);

/// ρ, u, θ from conserved moments with E = (3/2)Rθ. Throws DomainError
/// unless ρ > 0 and θ > 0.
MacroState macro_from_moments(const std::array<double, 3>& m, double R = 2.0 / 3.0);

/// Distribution on (x, ξ₁), row-major by cell.
class KineticField {
 public:
  KineticField(double t, Grid x_grid, std::shared_ptr<const VelocityGrid> velocity);

  double t = 0.0;

  const Grid& x_grid() const { return x_grid_; }
  const VelocityGrid& velocity() const { return *velocity_; }
  std::shared_ptr<const VelocityGrid> velocity_ptr() const { return velocity_; }
  std::size_t cells() const { return x_grid_.n; }
  std::size_t nodes() const { return velocity_->count(); }

  std::span<double> g(std::size_t cell) { return {g_.data() + cell * nodes(), nodes()}; }
  std::span<double> h(std::size_t cell) { return {h_.data() + cell * nodes(), nodes()}; }
  std::span<const double> g(std::size_t cell) const { return {g_.data() + cell * nodes(), nodes()}; }
  std::span<const double> h(std::size_t cell) const { return {h_.data() + cell * nodes(), nodes()}; }
  std::vector<double>& g_data() { return g_; }
  std::vector<double>& h_data() { return h_; }
  const std::vector<double>& g_data() const { return g_; }
  const std::vector<double>& h_data() const { return h_; }

 private:
  Grid x_grid_;
  std::shared_ptr<const VelocityGrid> velocity_;
  std::vector<double> g_;
  std::vector<double> h_;
};

std::array<double, 3> moments(const KineticField& field, std::size_t cell);
MacroState macro_state(const KineticField& field, std::size_t cell, double R = 2.0 / 3.0);

struct ReducedDistribution {
  std::vector<double> g;
  std::vector<double> h;
};

/// Non-fluid part G = f - M[f] at a cell.
ReducedDistribution project_micro(const KineticField& field, std::size_t cell,
                                  double R = 2.0 / 3.0);

/// The five collision invariants' basis χ_j = p_j(ξ)·M relative to the
/// Maxwellian M of `m`:
///   p₀ = 1/√ρ, p₁ = (ξ₁-u)/√(Rθρ), p₂,₃ = ξ₂,₃/√(Rθρ),
///   p₄ = (|ξ-u|²/(Rθ) - 3)/√(6ρ).
/// Transverse integrals are done in closed form with ∫M dξ⊥ = g_M,
/// ∫|ξ⊥|²M = 2Rθ·g_M, ∫|ξ⊥|⁴M = 8(Rθ)²·g_M, ∫ξ₂²M = Rθ·g_M.
using Gram = std::array<std::array<double, 5>, 5>;
Gram gram_matrix(const MacroState& m, const VelocityGrid& grid, double R = 2.0 / 3.0);

/// ⟨f, χ_j⟩, j = 0..4, for a slab-symmetric f given by (g, h).
std::array<double, 5> chi_coefficients(std::span<const double> g, std::span<const double> h,
                                       const MacroState& m, const VelocityGrid& grid,
                                       double R = 2.0 / 3.0);

/// P₀f = Σ⟨f, χ_j⟩χ_j in reduced form, relative to the Maxwellian of `m`.
ReducedDistribution project_macro(std::span<const double> g, std::span<const double> h,
                                  const MacroState& m, const VelocityGrid& grid,
                                  double R = 2.0 / 3.0);

/// P₁f = f - P₀f.
ReducedDistribution project_micro(std::span<const double> g, std::span<const double> h,
                                  const MacroState& m, const VelocityGrid& grid,
                                  double R = 2.0 / 3.0);

/// Reference Maxwellian M⋆ of the weighted norm.
struct GlobalMaxwellian {
  double v_star;
  double u_star;
  double theta_star;

  /// θ⋆ = 0.9·θ_min, (v⋆, u⋆) as given (domain averages).
  static GlobalMaxwellian choose(double v_avg, double u_avg, double theta_min,
                                 double theta_max);
  /// Throws DomainError unless θ_max/2 < θ⋆ < θ_min.
  void validate(double theta_min, double theta_max) const;
};

/// ‖f - M_ref‖ in L²_ξ(1/√M⋆): the square root of ∫|f - M_ref|²/M⋆ dξ.
/// f is taken to be Maxwellian in (ξ₂, ξ₃) with R·T_f(ξ₁) = h/g, which
/// gives the closed form
///   ∫ φ_a φ_b / φ_⋆ dξ⊥ = θ⋆/(a + b - ab/θ⋆)
/// for the transverse factors at temperatures a, b.
double weighted_distance(const KineticField& field, std::size_t cell, const ThermoState& reference,
                         const GlobalMaxwellian& m_star, double R = 2.0 / 3.0);

double weighted_distance(std::span<const double> g, std::span<const double> h,
                         const VelocityGrid& grid, const ThermoState& reference,
                         const GlobalMaxwellian& m_star, double R = 2.0 / 3.0);

/// Same with the transverse direction dropped: √(Σw(g - g_M)²/g⋆).
double weighted_distance_g(std::span<const double> g, const VelocityGrid& grid,
                           const ThermoState& reference, const GlobalMaxwellian& m_star,
                           double R = 2.0 / 3.0);

}  // namespace wavelab
