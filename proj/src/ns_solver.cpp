#include "wavelab/ns_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "wavelab/errors.hpp"
#include "wavelab/numerics.hpp"

namespace wavelab {

void SolverConfig::validate() const {
  params.validate();
  if (!(eps > 0.0)) throw UsageError("SolverConfig: eps must be positive");
  if (nu < 0.1) throw UsageError("SolverConfig: nu must be >= 0.1");
  if (!(cfl > 0.0 && cfl <= 0.9)) throw UsageError("SolverConfig: cfl must lie in (0, 0.9]");
  if (!(diff_safety > 0.0 && diff_safety <= 0.5)) {
    throw UsageError("SolverConfig: diff_safety must lie in (0, 0.5]");
  }
  if (!(t_end >= 0.0)) throw UsageError("SolverConfig: t_end must be >= 0");
}

SolverConfig solver_config_for(const ProfileConfig& cfg, double t_end,
                               std::vector<double> snapshot_times) {
  SolverConfig s;
  s.eps = cfg.eps;
  s.nu = cfg.nu;
  s.params = cfg.params;
  s.t_end = t_end;
  s.snapshot_times = std::move(snapshot_times);
  s.left = cfg.pattern.left;
  s.right = cfg.pattern.right;
  return s;
}

Grid preset_domain(const ProfileConfig& cfg, double t_end, double dx) {
  const GasParams& p = cfg.params;
  const double l1 = char_speed(cfg.pattern.left.v(), entropy(cfg.pattern.left, p), Family::one, p);
  const double l3 =
      char_speed(cfg.pattern.right.v(), entropy(cfg.pattern.right, p), Family::three, p);
  const double span = 1.5 * std::max(t_end, cfg.t0);
  return Grid::with_spacing(l1 * span - 10.0 * cfg.sigma, l3 * span + 10.0 * cfg.sigma, dx);
}

FieldState init_from_ansatz(const Grid& grid, const ProfileConfig& cfg) {
  FieldState s;
  s.t = 0.0;
  s.grid = grid;
  s.v.resize(grid.n);
  s.u.resize(grid.n);
  s.theta.resize(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) {
    const ThermoState q = superpose(0.0, grid.center(i), cfg);
    s.v[i] = q.v();
    s.u[i] = q.u();
    s.theta[i] = q.theta();
  }
  return s;
}

namespace {

struct Conserved {
  std::vector<double> v, u, E;
  void resize(std::size_t n) {
    v.resize(n);
    u.resize(n);
    E.resize(n);
  }
};

// Right-hand side evaluator with reusable buffers.
class Rhs {
 public:
  Rhs(const SolverConfig& cfg, const Grid& grid) : cfg_(cfg), grid_(grid) {
    const std::size_t n = grid.n;
    ve_.resize(n + 4);
    ue_.resize(n + 4);
    te_.resize(n + 4);
    fv_.resize(n + 1);
    fu_.resize(n + 1);
    fE_.resize(n + 1);
  }

  // dq/dt into out; boundary inflow (F at left face minus F at right face)
  // and ∫S dx into `inflow`.
  void operator()(const Conserved& q, double t, Conserved& out, std::array<double, 3>& inflow) {
    const std::size_t n = grid_.n;
    const double R = cfg_.params.R;
    const double gm1 = cfg_.params.gamma - 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      ve_[i + 2] = q.v[i];
      ue_[i + 2] = q.u[i];
      te_[i + 2] = gm1 / R * (q.E[i] - 0.5 * q.u[i] * q.u[i]);
    }
    for (std::size_t g = 0; g < 2; ++g) {
      if (cfg_.boundary == Boundary::periodic) {
        ve_[g] = ve_[n + g];
        ue_[g] = ue_[n + g];
        te_[g] = te_[n + g];
        ve_[n + 2 + g] = ve_[2 + g];
        ue_[n + 2 + g] = ue_[2 + g];
        te_[n + 2 + g] = te_[2 + g];
      } else {
        ve_[g] = cfg_.left.v();
        ue_[g] = cfg_.left.u();
        te_[g] = cfg_.left.theta();
        ve_[n + 2 + g] = cfg_.right.v();
        ue_[n + 2 + g] = cfg_.right.u();
        te_[n + 2 + g] = cfg_.right.theta();
      }
    }
    const double dx = grid_.dx();
    const double eps = cfg_.eps;
    const double kap = cfg_.kappa();
    const double gam = cfg_.params.gamma;
    const double half_slope = cfg_.second_order ? 0.25 : 0.0;  // ½ · centered slope ½(q₊-q₋)
    const double inv_dx = 1.0 / dx;
    const double inv_gm1 = 1.0 / gm1;
    const double* ve = ve_.data();
    const double* ue = ue_.data();
    const double* te = te_.data();
    double* fv = fv_.data();
    double* fu = fu_.data();
    double* fE = fE_.data();
    // Branch-free so the face loop vectorizes; a face whose reconstruction
    // is not positive falls back to first order.
    for (std::size_t f = 0; f <= n; ++f) {
      const std::size_t a = f + 1;
      const std::size_t b = f + 2;
      const double vL2 = ve[a] + half_slope * (ve[b] - ve[a - 1]);
      const double uL2 = ue[a] + half_slope * (ue[b] - ue[a - 1]);
      const double tL2 = te[a] + half_slope * (te[b] - te[a - 1]);
      const double vR2 = ve[b] - half_slope * (ve[b + 1] - ve[a]);
      const double uR2 = ue[b] - half_slope * (ue[b + 1] - ue[a]);
      const double tR2 = te[b] - half_slope * (te[b + 1] - te[a]);
      const bool ok = (vL2 > 0.0) & (tL2 > 0.0) & (vR2 > 0.0) & (tR2 > 0.0);
      const double vL = ok ? vL2 : ve[a];
      const double uL = ok ? uL2 : ue[a];
      const double tL = ok ? tL2 : te[a];
      const double vR = ok ? vR2 : ve[b];
      const double uR = ok ? uR2 : ue[b];
      const double tR = ok ? tR2 : te[b];
      const double ivL = 1.0 / vL;
      const double ivR = 1.0 / vR;
      const double pL = R * tL * ivL;
      const double pR = R * tR * ivR;
      const double cL2 = pL * ivL;
      const double cR2 = pR * ivR;
      const double c = std::sqrt(gam * (cL2 > cR2 ? cL2 : cR2));
      const double EL = R * tL * inv_gm1 + 0.5 * uL * uL;
      const double ER = R * tR * inv_gm1 + 0.5 * uR * uR;
      const double ivf = 2.0 / (ve[a] + ve[b]);
      const double uf = 0.5 * (ue[a] + ue[b]);
      const double ux = (ue[b] - ue[a]) * inv_dx;
      const double tx = (te[b] - te[a]) * inv_dx;
      fv[f] = -0.5 * (uL + uR) - 0.5 * c * (vR - vL);
      fu[f] = 0.5 * (pL + pR) - 0.5 * c * (uR - uL) - eps * ux * ivf;
      fE[f] = 0.5 * (pL * uL + pR * uR) - 0.5 * c * (ER - EL) - (kap * tx + eps * uf * ux) * ivf;
    }
    for (std::size_t i = 0; i < n; ++i) {
      out.v[i] = -(fv_[i + 1] - fv_[i]) / dx;
      out.u[i] = -(fu_[i + 1] - fu_[i]) / dx;
      out.E[i] = -(fE_[i + 1] - fE_[i]) / dx;
    }
    inflow = {fv_[0] - fv_[n], fu_[0] - fu_[n], fE_[0] - fE_[n]};
    if (cfg_.source) {
      numerics::KahanSum sv, su, sE;
      for (std::size_t i = 0; i < n; ++i) {
        const auto s = cfg_.source(t, grid_.center(i));
        out.v[i] += s[0];
        out.u[i] += s[1];
        out.E[i] += s[2];
        sv.add(s[0] * dx);
        su.add(s[1] * dx);
        sE.add(s[2] * dx);
      }
      inflow[0] += sv.value();
      inflow[1] += su.value();
      inflow[2] += sE.value();
    }
  }

 private:
  const SolverConfig& cfg_;
  const Grid& grid_;
  std::vector<double> ve_, ue_, te_, fv_, fu_, fE_;
};

void to_conserved(const FieldState& s, const GasParams& p, Conserved& q) {
  const std::size_t n = s.grid.n;
  q.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    q.v[i] = s.v[i];
    q.u[i] = s.u[i];
    q.E[i] = p.R * s.theta[i] / (p.gamma - 1.0) + 0.5 * s.u[i] * s.u[i];
  }
}

struct Extremes {
  double min_v;
  double min_theta;
};

// Throws NumericalAbort unless v, θ > 0 in every cell.
Extremes check_positive(const Conserved& q, const GasParams& p, double t) {
  const double c = (p.gamma - 1.0) / p.R;
  Extremes e{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  for (std::size_t i = 0; i < q.v.size(); ++i) {
    const double th = c * (q.E[i] - 0.5 * q.u[i] * q.u[i]);
    e.min_v = std::min(e.min_v, q.v[i]);
    e.min_theta = std::min(e.min_theta, th);
  }
  if (e.min_v > 0.0 && e.min_theta > 0.0) return e;
  for (std::size_t i = 0; i < q.v.size(); ++i) {
    const double th = c * (q.E[i] - 0.5 * q.u[i] * q.u[i]);
    if (!(q.v[i] > 0.0) || !(th > 0.0)) {
      std::ostringstream os;
      os << "ns_solver: positivity lost at t = " << t << ", cell " << i << " (v = " << q.v[i]
         << ", theta = " << th << ")";
      throw NumericalAbort(os.str(), t, static_cast<long>(i));
    }
  }
  throw NumericalAbort("ns_solver: non-finite state", t, -1);
}

std::array<double, 3> totals(const Conserved& q, double dx) {
  return {numerics::stable_sum(q.v) * dx, numerics::stable_sum(q.u) * dx,
          numerics::stable_sum(q.E) * dx};
}

double abs_total(const Conserved& q, double dx) {
  double s = 0.0;
  for (std::size_t i = 0; i < q.v.size(); ++i) {
    s += std::abs(q.v[i]) + std::abs(q.u[i]) + std::abs(q.E[i]);
  }
  return s * dx;
}

// Heun integrator with reusable buffers.
class Stepper {
 public:
  Stepper(const SolverConfig& cfg, const Grid& grid) : cfg_(cfg), grid_(grid), rhs_(cfg, grid) {
    q1_.resize(grid.n);
    l0_.resize(grid.n);
    l1_.resize(grid.n);
  }

  // Advances q in place from t by dt; returns (inflow, mass change, drift).
  // `before` holds Σq·dx on entry and is updated to the new totals.
  StepResult advance(Conserved& q, double t, double dt, std::array<double, 3>& before) {
    const std::size_t n = grid_.n;
    const double dx = grid_.dx();
    std::array<double, 3> in0{}, in1{};
    rhs_(q, t, l0_, in0);
    for (std::size_t i = 0; i < n; ++i) {
      q1_.v[i] = q.v[i] + dt * l0_.v[i];
      q1_.u[i] = q.u[i] + dt * l0_.u[i];
      q1_.E[i] = q.E[i] + dt * l0_.E[i];
    }
    check_positive(q1_, cfg_.params, t + dt);
    rhs_(q1_, t + dt, l1_, in1);
    for (std::size_t i = 0; i < n; ++i) {
      q.v[i] += 0.5 * dt * (l0_.v[i] + l1_.v[i]);
      q.u[i] += 0.5 * dt * (l0_.u[i] + l1_.u[i]);
      q.E[i] += 0.5 * dt * (l0_.E[i] + l1_.E[i]);
    }
    extremes = check_positive(q, cfg_.params, t + dt);
    const auto after = totals(q, dx);
    StepResult r;
    r.dt = dt;
    double drift = 0.0;
    for (int k = 0; k < 3; ++k) {
      r.boundary_flux[k] = 0.5 * dt * (in0[k] + in1[k]);
      r.mass_change[k] = after[k] - before[k];
      drift = std::max(drift, std::abs(r.mass_change[k] - r.boundary_flux[k]));
    }
    r.relative_drift = drift / std::max(abs_total(q, dx), std::numeric_limits<double>::min());
    before = after;
    return r;
  }

  Extremes extremes{};

 private:
  const SolverConfig& cfg_;
  const Grid& grid_;
  Rhs rhs_;
  Conserved q1_, l0_, l1_;
};

void from_conserved(const Conserved& q, const GasParams& p, FieldState& s) {
  const std::size_t n = q.v.size();
  s.v = q.v;
  s.u = q.u;
  s.theta.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    s.theta[i] = (p.gamma - 1.0) / p.R * (q.E[i] - 0.5 * q.u[i] * q.u[i]);
  }
}

double stable_dt_conserved(const Conserved& q, const SolverConfig& cfg, double dx) {
  const GasParams& p = cfg.params;
  double c2 = 0.0;
  double vmin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < q.v.size(); ++i) {
    const double th = (p.gamma - 1.0) / p.R * (q.E[i] - 0.5 * q.u[i] * q.u[i]);
    c2 = std::max(c2, p.gamma * p.R * th / (q.v[i] * q.v[i]));
    vmin = std::min(vmin, q.v[i]);
  }
  if (cfg.boundary == Boundary::dirichlet) {
    for (const ThermoState& s : {cfg.left, cfg.right}) {
      c2 = std::max(c2, p.gamma * p.R * s.theta() / (s.v() * s.v()));
      vmin = std::min(vmin, s.v());
    }
  }
  // Rates add: taking the smaller of the two limits alone lets the Rusanov
  // dissipation push the diffusive number past the explicit bound.
  const double conv = cfg.cfl * dx / std::sqrt(c2);
  const double diff_coeff = std::max(cfg.eps, cfg.kappa() * (p.gamma - 1.0) / p.R);
  const double diff = cfg.diff_safety * dx * dx * vmin / diff_coeff;
  return 1.0 / (1.0 / conv + 1.0 / diff);
}

}  // namespace

double stable_dt(const FieldState& state, const SolverConfig& cfg) {
  Conserved q;
  to_conserved(state, cfg.params, q);
  return stable_dt_conserved(q, cfg, state.grid.dx());
}

StepResult step(const FieldState& state, const SolverConfig& cfg, double dt) {
  cfg.validate();
  Conserved q;
  to_conserved(state, cfg.params, q);
  if (!(dt > 0.0)) dt = stable_dt_conserved(q, cfg, state.grid.dx());
  Stepper stepper(cfg, state.grid);
  auto before = totals(q, state.grid.dx());
  StepResult r = stepper.advance(q, state.t, dt, before);
  r.state.t = state.t + dt;
  r.state.grid = state.grid;
  from_conserved(q, cfg.params, r.state);
  return r;
}

RunResult run(const FieldState& initial, const SolverConfig& cfg) {
  cfg.validate();
  const double dx = initial.grid.dx();
  std::vector<double> targets;
  for (double t : cfg.snapshot_times) {
    if (t >= initial.t && t <= cfg.t_end) targets.push_back(t);
  }
  targets.push_back(cfg.t_end);
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  RunResult out;
  Conserved q;
  to_conserved(initial, cfg.params, q);
  check_positive(q, cfg.params, initial.t);
  out.budget.initial = totals(q, dx);
  out.budget.current = out.budget.initial;
  std::array<numerics::KahanSum, 3> inflow;
  out.min_v = *std::min_element(initial.v.begin(), initial.v.end());
  out.min_theta = *std::min_element(initial.theta.begin(), initial.theta.end());

  Stepper stepper(cfg, initial.grid);
  auto sums = out.budget.initial;
  double t = initial.t;
  FieldState snap;
  snap.grid = initial.grid;
  for (double target : targets) {
    while (t < target) {
      double dt = stable_dt_conserved(q, cfg, dx);
      if (!(dt > 1e-14 * std::max(1.0, t))) {
        throw NumericalAbort("ns_solver: time step underflow", t, -1);
      }
      const bool last = t + dt >= target * (1.0 - 1e-14);
      if (last) dt = target - t;
      const StepResult r = stepper.advance(q, t, dt, sums);
      t = last ? target : t + dt;
      ++out.steps;
      for (int k = 0; k < 3; ++k) inflow[k].add(r.boundary_flux[k]);
      out.budget.max_step_drift = std::max(out.budget.max_step_drift, r.relative_drift);
      out.min_v = std::min(out.min_v, stepper.extremes.min_v);
      out.min_theta = std::min(out.min_theta, stepper.extremes.min_theta);
    }
    snap.t = t;
    from_conserved(q, cfg.params, snap);
    out.snapshots.push_back(snap);
  }
  out.budget.current = totals(q, dx);
  for (int k = 0; k < 3; ++k) out.budget.flux_in[k] = inflow[k].value();
  return out;
}

RunResult run(const Grid& grid, const ProfileConfig& profile, const SolverConfig& cfg) {
  return run(init_from_ansatz(grid, profile), cfg);
}

std::vector<std::size_t> sigma_cells(const Grid& grid, double t, double h, double alpha,
                                     double eps) {
  const double cut = h * std::pow(eps, alpha);
  const double root = std::sqrt(1.0 + t);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < grid.n; ++i) {
    if (std::abs(grid.center(i)) / root >= cut) out.push_back(i);
  }
  return out;
}

double sup_error_on_sigma(const FieldState& snapshot, const WavePattern& pattern,
                          const GasParams& params, double h, double alpha, double eps) {
  if (!(h > 0.0)) throw UsageError("sup_error_on_sigma: h must be positive");
  if (!(alpha > 0.0 && alpha < 0.5)) throw UsageError("sup_error_on_sigma: alpha must lie in (0, 1/2)");
  if (snapshot.t < h) throw UsageError("sup_error_on_sigma: snapshot time is below h");
  const auto cells = sigma_cells(snapshot.grid, snapshot.t, h, alpha, eps);
  if (cells.empty()) throw UsageError("sup_error_on_sigma: Sigma_h misses the grid");
  double err = 0.0;
  for (std::size_t i : cells) {
    const ThermoState r = eval_riemann(pattern, snapshot.t, snapshot.grid.center(i), params);
    err = std::max({err, std::abs(snapshot.v[i] - r.v()), std::abs(snapshot.u[i] - r.u()),
                    std::abs(snapshot.theta[i] - r.theta())});
  }
  return err;
}

}  // namespace wavelab
