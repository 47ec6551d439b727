#include "wavelab/kinetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wavelab/errors.hpp"

namespace wavelab {

VelocityGrid::VelocityGrid(double center, double half_width, std::size_t count)
    : center_(center), half_width_(half_width) {
  if (!(half_width > 0.0)) throw UsageError("VelocityGrid: half-width must be positive");
  if (count < 8) throw UsageError("VelocityGrid: need at least 8 nodes");
  spacing_ = 2.0 * half_width / static_cast<double>(count);
  nodes_.resize(count);
  weights_.assign(count, spacing_);
  for (std::size_t k = 0; k < count; ++k) {
    nodes_[k] = center - half_width + (static_cast<double>(k) + 0.5) * spacing_;
  }
}

VelocityGrid VelocityGrid::for_range(double u_min, double u_max, double theta_max,
                                     std::size_t count, double R) {
  if (!(u_max >= u_min) || !(theta_max > 0.0)) throw UsageError("VelocityGrid: bad state range");
  return VelocityGrid(0.5 * (u_min + u_max), 0.5 * (u_max - u_min) + 12.0 * std::sqrt(R * theta_max),
                      count);
}

double VelocityGrid::max_speed() const {
  return std::max(std::abs(nodes_.front()), std::abs(nodes_.back()));
}

double VelocityGrid::moment_error(double rho, double u_min, double u_max, double theta_min,
                                  double theta_max, double R) const {
  std::vector<double> g(count()), h(count());
  double err = 0.0;
  for (double u : {u_min, u_max, 0.5 * (u_min + u_max)}) {
    for (double th : {theta_min, theta_max}) {
      maxwellian({rho, u, th}, *this, R, g, h);
      const auto m = moments(g, h, *this);
      const double e = rho * (1.5 * R * th + 0.5 * u * u);
      err = std::max({err, std::abs(m[0] - rho) / rho,
                      std::abs(m[1] - rho * u) / (rho * (std::abs(u) + std::sqrt(R * th))),
                      std::abs(m[2] - e) / e});
    }
  }
  return err;
}

void VelocityGrid::validate(double u_min, double u_max, double theta_min, double theta_max,
                            double R, double tol) const {
  const double err = moment_error(1.0, u_min, u_max, theta_min, theta_max, R);
  if (!(err <= tol)) {
    std::ostringstream os;
    os << "VelocityGrid: Maxwellian moments off by " << err << " (> " << tol
       << ") for u in [" << u_min << ", " << u_max << "], theta in [" << theta_min << ", "
       << theta_max << "]";
    throw DomainError(os.str());
  }
}

ReducedValue maxwellian(double rho, double u1, double theta, double xi, double R) {
  if (!(rho > 0.0) || !(theta > 0.0)) throw DomainError("maxwellian: rho and theta must be positive");
  const double rt = R * theta;
  const double d = xi - u1;
  const double g = rho / std::sqrt(2.0 * std::numbers::pi * rt) * std::exp(-d * d / (2.0 * rt));
  return {g, rt * g};
}

void maxwellian(const MacroState& m, const VelocityGrid& grid, double R, std::span<double> g,
                std::span<double> h) {
  if (!(m.rho > 0.0) || !(m.theta > 0.0)) {
    throw DomainError("maxwellian: rho and theta must be positive");
  }
  const double rt = R * m.theta;
  const double norm = m.rho / std::sqrt(2.0 * std::numbers::pi * rt);
  const double inv = 1.0 / (2.0 * rt);
  const auto& xi = grid.nodes();
  const std::size_t n = xi.size();
  // Gaussian recurrence e_{k+1} = e_k·r_k, r_{k+1} = r_k·q, started at the
  // node nearest u and run outward in both directions.
  const double dxi = grid.spacing();
  const double q = std::exp(-2.0 * dxi * dxi * inv);
  const double pos = (m.u - xi.front()) / dxi;
  const auto k0 = static_cast<std::size_t>(std::clamp(std::lround(pos), 0L, static_cast<long>(n - 1)));
  const double d0 = xi[k0] - m.u;
  const double e0 = norm * std::exp(-d0 * d0 * inv);
  g[k0] = e0;
  double e = e0;
  double r = std::exp(-(2.0 * d0 * dxi + dxi * dxi) * inv);
  for (std::size_t k = k0 + 1; k < n; ++k) {
    e *= r;
    r *= q;
    g[k] = e;
  }
  e = e0;
  r = std::exp(-(-2.0 * d0 * dxi + dxi * dxi) * inv);
  for (std::size_t k = k0; k-- > 0;) {
    e *= r;
    r *= q;
    g[k] = e;
  }
  for (std::size_t k = 0; k < n; ++k) h[k] = rt * g[k];
}

std::array<double, 3> moments(std::span<const double> g, std::span<const double> h,
                              const VelocityGrid& grid) {
  const auto& xi = grid.nodes();
  double m0 = 0.0, m1 = 0.0, m2 = 0.0;
  for (std::size_t k = 0; k < xi.size(); ++k) {
    m0 += g[k];
    m1 += xi[k] * g[k];
    m2 += 0.5 * xi[k] * xi[k] * g[k] + h[k];
  }
  const double w = grid.spacing();
  return {m0 * w, m1 * w, m2 * w};
}

MacroState macro_from_moments(const std::array<double, 3>& m, double R) {
  const double rho = m[0];
  if (!(rho > 0.0)) throw DomainError("macro_from_moments: non-positive density");
  const double u = m[1] / rho;
  const double theta = (m[2] / rho - 0.5 * u * u) / (1.5 * R);
  if (!(theta > 0.0)) throw DomainError("macro_from_moments: non-positive temperature");
  return {rho, u, theta};
}

KineticField::KineticField(double time, Grid x_grid, std::shared_ptr<const VelocityGrid> velocity)
    : t(time), x_grid_(x_grid), velocity_(std::move(velocity)) {
  if (!velocity_) throw UsageError("KineticField: velocity grid missing");
  g_.assign(x_grid_.n * velocity_->count(), 0.0);
  h_.assign(x_grid_.n * velocity_->count(), 0.0);
}

std::array<double, 3> moments(const KineticField& field, std::size_t cell) {
  return moments(field.g(cell), field.h(cell), field.velocity());
}

MacroState macro_state(const KineticField& field, std::size_t cell, double R) {
  return macro_from_moments(moments(field, cell), R);
}

ReducedDistribution project_micro(const KineticField& field, std::size_t cell, double R) {
  const MacroState m = macro_state(field, cell, R);
  const std::size_t n = field.nodes();
  ReducedDistribution out{std::vector<double>(n), std::vector<double>(n)};
  maxwellian(m, field.velocity(), R, out.g, out.h);
  const auto g = field.g(cell);
  const auto h = field.h(cell);
  for (std::size_t k = 0; k < n; ++k) {
    out.g[k] = g[k] - out.g[k];
    out.h[k] = h[k] - out.h[k];
  }
  return out;
}

namespace {

// p_j = a_j(ξ₁) + b_j|ξ⊥|² + c_j ξ₂ + d_j ξ₃.
struct ChiPoly {
  double a;
  double b;
  double c;
  double d;
};

std::array<ChiPoly, 5> chi_polys(const MacroState& m, double xi, double R) {
  const double rt = R * m.theta;
  const double s0 = 1.0 / std::sqrt(m.rho);
  const double s1 = 1.0 / std::sqrt(rt * m.rho);
  const double s4 = 1.0 / std::sqrt(6.0 * m.rho);
  const double d = xi - m.u;
  return {{{s0, 0.0, 0.0, 0.0},
           {d * s1, 0.0, 0.0, 0.0},
           {0.0, 0.0, s1, 0.0},
           {0.0, 0.0, 0.0, s1},
           {(d * d / rt - 3.0) * s4, s4 / rt, 0.0, 0.0}}};
}

}  // namespace

Gram gram_matrix(const MacroState& m, const VelocityGrid& grid, double R) {
  const std::size_t n = grid.count();
  std::vector<double> gm(n), hm(n);
  maxwellian(m, grid, R, gm, hm);
  const double rt = R * m.theta;
  Gram out{};
  for (std::size_t k = 0; k < n; ++k) {
    const auto p = chi_polys(m, grid.nodes()[k], R);
    const double w = grid.weights()[k] * gm[k];
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        const double v = p[i].a * p[j].a + (p[i].a * p[j].b + p[j].a * p[i].b) * 2.0 * rt +
                         p[i].b * p[j].b * 8.0 * rt * rt + (p[i].c * p[j].c + p[i].d * p[j].d) * rt;
        out[i][j] += w * v;
      }
    }
  }
  return out;
}

std::array<double, 5> chi_coefficients(std::span<const double> g, std::span<const double> h,
                                       const MacroState& m, const VelocityGrid& grid, double R) {
  std::array<double, 5> out{};
  for (std::size_t k = 0; k < grid.count(); ++k) {
    const auto p = chi_polys(m, grid.nodes()[k], R);
    for (int j = 0; j < 5; ++j) out[j] += grid.weights()[k] * (p[j].a * g[k] + p[j].b * 2.0 * h[k]);
  }
  return out;
}

ReducedDistribution project_macro(std::span<const double> g, std::span<const double> h,
                                  const MacroState& m, const VelocityGrid& grid, double R) {
  const auto coef = chi_coefficients(g, h, m, grid, R);
  const std::size_t n = grid.count();
  std::vector<double> gm(n), hm(n);
  maxwellian(m, grid, R, gm, hm);
  const double rt = R * m.theta;
  ReducedDistribution out{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  for (std::size_t k = 0; k < n; ++k) {
    const auto p = chi_polys(m, grid.nodes()[k], R);
    for (int j = 0; j < 5; ++j) {
      out.g[k] += coef[j] * (p[j].a + p[j].b * 2.0 * rt) * gm[k];
      out.h[k] += coef[j] * (p[j].a * rt + p[j].b * 4.0 * rt * rt) * gm[k];
    }
  }
  return out;
}

ReducedDistribution project_micro(std::span<const double> g, std::span<const double> h,
                                  const MacroState& m, const VelocityGrid& grid, double R) {
  ReducedDistribution out = project_macro(g, h, m, grid, R);
  for (std::size_t k = 0; k < grid.count(); ++k) {
    out.g[k] = g[k] - out.g[k];
    out.h[k] = h[k] - out.h[k];
  }
  return out;
}

GlobalMaxwellian GlobalMaxwellian::choose(double v_avg, double u_avg, double theta_min,
                                          double theta_max) {
  GlobalMaxwellian m{v_avg, u_avg, 0.9 * theta_min};
  m.validate(theta_min, theta_max);
  return m;
}

void GlobalMaxwellian::validate(double theta_min, double theta_max) const {
  if (!(v_star > 0.0)) throw DomainError("GlobalMaxwellian: v_star must be positive");
  if (!(theta_star < theta_min && theta_star > 0.5 * theta_max)) {
    std::ostringstream os;
    os << "GlobalMaxwellian: theta_star = " << theta_star << " outside (theta_max/2, theta_min) = ("
       << 0.5 * theta_max << ", " << theta_min << ")";
    throw DomainError(os.str());
  }
}

namespace {

std::vector<double> star_marginal(const VelocityGrid& grid, const GlobalMaxwellian& m, double R) {
  std::vector<double> g(grid.count()), h(grid.count());
  maxwellian({1.0 / m.v_star, m.u_star, m.theta_star}, grid, R, g, h);
  return g;
}

}  // namespace

double weighted_distance(std::span<const double> g, std::span<const double> h,
                         const VelocityGrid& grid, const ThermoState& reference,
                         const GlobalMaxwellian& m_star, double R) {
  const std::size_t n = grid.count();
  std::vector<double> gm(n), hm(n);
  const double th = reference.theta();
  maxwellian({1.0 / reference.v(), reference.u(), th}, grid, R, gm, hm);
  const std::vector<double> gs = star_marginal(grid, m_star, R);
  const double ts = m_star.theta_star;
  auto overlap = [ts](double a, double b) {
    const double den = a + b - a * b / ts;
    if (!(den > 0.0)) {
      throw DomainError("weighted_distance: transverse temperature too large for theta_star");
    }
    return ts / den;
  };
  const double i_mm = overlap(th, th);
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (!(gs[k] > 0.0)) continue;
    double tf = th;
    if (g[k] > 1e-300) tf = h[k] / (R * g[k]);
    // g²I(a,a) - 2g·g_M·I(a,b) + g_M²I(b,b) regrouped so that it is second
    // order in (g - g_M, a - b) without cancellation.
    const double i_ab = overlap(tf, th);
    const double bracket = (g[k] * g[k] * (1.0 - tf / ts) * overlap(tf, tf) -
                            gm[k] * gm[k] * (1.0 - th / ts) * i_mm) / ts;
    const double dg = g[k] - gm[k];
    const double val = dg * dg * i_ab + (th - tf) * i_ab * bracket;
    sum += grid.weights()[k] * val / gs[k];
  }
  return std::sqrt(std::max(sum, 0.0));
}

double weighted_distance(const KineticField& field, std::size_t cell, const ThermoState& reference,
                         const GlobalMaxwellian& m_star, double R) {
  return weighted_distance(field.g(cell), field.h(cell), field.velocity(), reference, m_star, R);
}

double weighted_distance_g(std::span<const double> g, const VelocityGrid& grid,
                           const ThermoState& reference, const GlobalMaxwellian& m_star,
                           double R) {
  const std::size_t n = grid.count();
  std::vector<double> gm(n), hm(n);
  maxwellian({1.0 / reference.v(), reference.u(), reference.theta()}, grid, R, gm, hm);
  const std::vector<double> gs = star_marginal(grid, m_star, R);
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (!(gs[k] > 0.0)) continue;
    const double d = g[k] - gm[k];
    sum += grid.weights()[k] * d * d / gs[k];
  }
  return std::sqrt(sum);
}

}  // namespace wavelab
