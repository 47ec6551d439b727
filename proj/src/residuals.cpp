#include "wavelab/residuals.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "wavelab/errors.hpp"

namespace wavelab {

namespace {

double l1(const std::vector<double>& q, double dx) {
  double s = 0.0;
  for (double v : q) s += std::abs(v);
  return s * dx;
}

double linf(const std::vector<double>& q) {
  double s = 0.0;
  for (double v : q) s = std::max(s, std::abs(v));
  return s;
}

using StateFn = std::function<ThermoState(double, double)>;

double d1(const std::vector<double>& f, std::size_t k, double h) {
  return (f[k - 2] - 8.0 * f[k - 1] + 8.0 * f[k + 1] - f[k + 2]) / (12.0 * h);
}

double max_speed(const ProfileConfig& cfg) {
  const WavePattern& p = cfg.pattern;
  return std::max({std::abs(p.fan1.first), std::abs(p.fan1.second), std::abs(p.fan3.first),
                   std::abs(p.fan3.second)});
}

// Residuals at x0 + (j+4)h, j < m, from profile samples at x0 + k h, k < m + 8.
void residual_line(const ProfileConfig& cfg, const StateFn& state, double t, double x0, double h,
                   std::size_t m, double* q1, double* q2) {
  const std::size_t n = m + 8;
  std::vector<double> V(n), U(n), T(n), P(n), Ux(n), Tx(n), g1(n), g2(n), visc(n);
  const double R = cfg.params.R;
  const bool kinetic = cfg.model == Model::kinetic;
  for (std::size_t k = 0; k < n; ++k) {
    const ThermoState s = state(t, x0 + static_cast<double>(k) * h);
    V[k] = s.v();
    U[k] = s.u();
    T[k] = s.theta();
    P[k] = R * T[k] / V[k];
  }
  for (std::size_t k = 2; k + 2 < n; ++k) {
    Ux[k] = d1(U, k, h);
    Tx[k] = d1(T, k, h);
    visc[k] = kinetic ? 4.0 / 3.0 * cfg.eps * cfg.mu(T[k]) : cfg.eps;
    const double cond = kinetic ? cfg.eps * cfg.lambda(T[k]) : cfg.kappa();
    g1[k] = visc[k] * Ux[k] / V[k];
    g2[k] = cond * Tx[k] / V[k];
  }
  const double cv = kinetic ? 1.0 : R / (cfg.params.gamma - 1.0);
  const double ht = std::min(h / std::max(max_speed(cfg), 1e-3), 0.25 * t);
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t k = j + 4;
    const double x = x0 + static_cast<double>(k) * h;
    const ThermoState a = state(t - 2 * ht, x);
    const ThermoState b = state(t - ht, x);
    const ThermoState c = state(t + ht, x);
    const ThermoState d = state(t + 2 * ht, x);
    const double Ut = (a.u() - 8.0 * b.u() + 8.0 * c.u() - d.u()) / (12.0 * ht);
    const double Tt = (a.theta() - 8.0 * b.theta() + 8.0 * c.theta() - d.theta()) / (12.0 * ht);
    q1[j] = Ut + d1(P, k, h) - d1(g1, k, h);
    q2[j] = cv * Tt + P[k] * Ux[k] - d1(g2, k, h) - visc[k] * Ux[k] * Ux[k] / V[k];
  }
}

std::vector<StateFn> parts(const ProfileConfig& cfg) {
  return {
      [&cfg](double t, double x) { return rarefaction_profile(t, x, Family::one, cfg); },
      [&cfg](double t, double x) { return contact_profile(t, x, cfg); },
      [&cfg](double t, double x) { return rarefaction_profile(t, x, Family::three, cfg); },
  };
}

void evaluate(const ProfileConfig& cfg, double t, double x0, double h, std::size_t m,
              ResidualPart part, double* q1, double* q2) {
  if (!(t > 0.0)) throw UsageError("ansatz_residuals: t must be > 0");
  const StateFn total = [&cfg](double tt, double x) { return superpose(tt, x, cfg); };
  residual_line(cfg, total, t, x0, h, m, q1, q2);
  if (part == ResidualPart::total) return;
  std::vector<double> a(m), b(m);
  for (const StateFn& f : parts(cfg)) {
    residual_line(cfg, f, t, x0, h, m, a.data(), b.data());
    for (std::size_t j = 0; j < m; ++j) {
      q1[j] -= a[j];
      q2[j] -= b[j];
    }
  }
}

}  // namespace

double ResidualField::l1_q1() const { return l1(q1, dx); }
double ResidualField::l1_q2() const { return l1(q2, dx); }
double ResidualField::max_q1() const { return linf(q1); }
double ResidualField::max_q2() const { return linf(q2); }

double residual_required_dx(const ProfileConfig& cfg, double t) {
  return std::min(cfg.sigma, std::sqrt(cfg.eps * (1.0 + t))) / 8.0;
}

ResidualField ansatz_residuals(const ProfileConfig& cfg, const Grid& grid, double t,
                               ResidualPart part) {
  const double need = residual_required_dx(cfg, t);
  if (grid.dx() > need * (1.0 + 1e-12)) {
    std::ostringstream os;
    os << "ansatz_residuals: grid spacing " << grid.dx() << " under-resolves the profile; need dx <= "
       << need << " (8 points per min(sigma, sqrt(eps(1+t))))";
    throw UsageError(os.str());
  }
  ResidualField out;
  out.t = t;
  out.dx = grid.dx();
  out.x = grid.centers();
  out.q1.resize(grid.n);
  out.q2.resize(grid.n);
  const double h = grid.dx();
  evaluate(cfg, t, grid.center(0) - 4.0 * h, h, grid.n, part, out.q1.data(), out.q2.data());
  return out;
}

PointResidual residual_at(const ProfileConfig& cfg, double t, double x, double h,
                          ResidualPart part) {
  if (!(h > 0.0)) throw UsageError("residual_at: h must be positive");
  PointResidual r{};
  evaluate(cfg, t, x - 4.0 * h, h, 1, part, &r.q1, &r.q2);
  return r;
}

}  // namespace wavelab
