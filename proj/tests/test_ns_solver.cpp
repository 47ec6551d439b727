#include <doctest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "wavelab/ns_solver.hpp"

using namespace wavelab;

namespace {

const GasParams kGas{1.0, 5.0 / 3.0, 1.0};
const ThermoState kLeft(1.0, -0.5, 1.0);
const ThermoState kRight(1.2, 0.5, 1.1);

ProfileConfig sample(double eps) { return make_profile_config(eps, kLeft, kRight, kGas, Model::navier_stokes); }

FieldState constant_state(const Grid& g, const ThermoState& s) {
  FieldState f;
  f.grid = g;
  f.v.assign(g.n, s.v());
  f.u.assign(g.n, s.u());
  f.theta.assign(g.n, s.theta());
  return f;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Coarse-cell average of a field on a grid with twice the cells.
std::vector<double> restrict2(const std::vector<double>& fine) {
  std::vector<double> out(fine.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = 0.5 * (fine[2 * i] + fine[2 * i + 1]);
  return out;
}

double field_diff(const FieldState& coarse, const FieldState& fine) {
  return std::max({max_abs_diff(coarse.v, restrict2(fine.v)), max_abs_diff(coarse.u, restrict2(fine.u)),
                   max_abs_diff(coarse.theta, restrict2(fine.theta))});
}

}  // namespace

TEST_CASE("solver config validation") {
  SolverConfig c;
  CHECK_NOTHROW(c.validate());
  c.cfl = 0.95;
  CHECK_THROWS_AS(c.validate(), UsageError);
  c = SolverConfig{};
  c.nu = 0.05;
  CHECK_THROWS_AS(c.validate(), UsageError);
  c = SolverConfig{};
  c.eps = 0.0;
  CHECK_THROWS_AS(c.validate(), UsageError);
  CHECK_THROWS_AS(Grid(0.0, 1.0, 8), UsageError);
  CHECK_THROWS_AS(Grid(1.0, 0.0, 32), UsageError);
}

TEST_CASE("initial data from the ansatz") {
  const ProfileConfig c = sample(1e-2);
  const Grid g = preset_domain(c, 1.0, c.eps / 8.0);
  const FieldState s = init_from_ansatz(g, c);
  CHECK(std::abs(s.v.front() - kLeft.v()) < 1e-8);
  CHECK(std::abs(s.theta.front() - kLeft.theta()) < 1e-8);
  CHECK(std::abs(s.u.back() - kRight.u()) < 1e-8);
  CHECK(std::abs(s.v.back() - kRight.v()) < 1e-8);
  for (std::size_t i = 0; i < g.n; i += 97) {
    const ThermoState q = superpose(0.0, g.center(i), c);
    CHECK(s.v[i] == q.v());
    CHECK(s.u[i] == q.u());
    CHECK(s.theta[i] == q.theta());
  }
  const ProfileConfig d = make_profile_config(1e-2, kLeft, kLeft, kGas, Model::navier_stokes);
  const FieldState e = init_from_ansatz(g, d);
  for (std::size_t i = 0; i < g.n; ++i) CHECK(e.v[i] == doctest::Approx(kLeft.v()).epsilon(1e-14));
}

TEST_CASE("constant state is preserved") {
  SolverConfig cfg;
  cfg.left = cfg.right = ThermoState(1.3, 0.2, 0.9);
  const FieldState s = constant_state(Grid(-1.0, 1.0, 64), cfg.left);
  const StepResult r = step(s, cfg);
  CHECK(r.dt > 0.0);
  CHECK(max_abs_diff(r.state.v, s.v) < 1e-15);
  CHECK(max_abs_diff(r.state.u, s.u) < 1e-15);
  CHECK(max_abs_diff(r.state.theta, s.theta) < 1e-14);
}

TEST_CASE("one step changes the totals only by boundary fluxes") {
  const ProfileConfig c = sample(1e-2);
  const Grid g = preset_domain(c, 0.1, c.eps / 8.0);
  SolverConfig cfg = solver_config_for(c, 0.1);
  FieldState s = init_from_ansatz(g, c);
  for (int k = 0; k < 5; ++k) {
    const StepResult r = step(s, cfg);
    CHECK(r.relative_drift <= 1e-12);
    for (int j = 0; j < 3; ++j) {
      CHECK(std::abs(r.mass_change[j] - r.boundary_flux[j]) <= 1e-12 * (1.0 + std::abs(r.mass_change[j])) * 10.0);
    }
    s = r.state;
  }
}

TEST_CASE("positivity loss aborts with a diagnostic") {
  SolverConfig cfg;
  cfg.left = ThermoState(1.0, -3.0, 1.0);
  cfg.right = ThermoState(1.0, 3.0, 1.0);
  FieldState s = constant_state(Grid(-1.0, 1.0, 32), cfg.left);
  for (std::size_t i = 16; i < 32; ++i) s.u[i] = 3.0;
  CHECK_THROWS_AS(step(s, cfg, 10.0), NumericalAbort);
}

TEST_CASE("manufactured solution converges at second order") {
  const double pi = std::acos(-1.0);
  oracle::Manufactured m;
  m.eps = 0.05;
  m.kappa = 0.05;
  m.gas = {1.0, 1.4, 1.0};
  m.v = [pi](double t, double x) { return 1.0 + 0.2 * std::sin(2 * pi * (x - t)); };
  m.u = [pi](double t, double x) { return 0.3 * std::cos(2 * pi * x) * std::cos(t); };
  m.theta = [pi](double t, double x) { return 1.0 + 0.2 * std::cos(2 * pi * (x + 0.5 * t)); };

  auto error = [&](std::size_t n) {
    SolverConfig cfg;
    cfg.eps = m.eps;
    cfg.nu = m.kappa / m.eps;
    cfg.params = GasParams{1.0, 1.4, 1.0};
    cfg.boundary = Boundary::periodic;
    cfg.t_end = 0.2;
    cfg.source = [&m](double t, double x) { return m.source(t, x); };
    FieldState s;
    s.grid = Grid(0.0, 1.0, n);
    for (std::size_t i = 0; i < n; ++i) {
      const double x = s.grid.center(i);
      s.v.push_back(m.v(0.0, x));
      s.u.push_back(m.u(0.0, x));
      s.theta.push_back(m.theta(0.0, x));
    }
    const FieldState end = run(s, cfg).snapshots.back();
    double e = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double x = s.grid.center(i);
      e = std::max({e, std::abs(end.v[i] - m.v(end.t, x)), std::abs(end.u[i] - m.u(end.t, x)),
                    std::abs(end.theta[i] - m.theta(end.t, x))});
    }
    return e;
  };
  const double e1 = error(64), e2 = error(128);
  CHECK(std::log2(e1 / e2) >= 1.8);
}

TEST_CASE("run edge cases") {
  const ProfileConfig c = sample(1e-2);
  const Grid g = preset_domain(c, 0.5, c.eps / 4.0);
  SolverConfig cfg = solver_config_for(c, 0.0);
  const RunResult r0 = run(g, c, cfg);
  REQUIRE(r0.snapshots.size() == 1);
  CHECK(r0.snapshots[0].v == init_from_ansatz(g, c).v);

  const ProfileConfig d = make_profile_config(1e-2, kRight, kRight, kGas, Model::navier_stokes);
  SolverConfig cd = solver_config_for(d, 1.0, {0.5});
  const RunResult r1 = run(g, d, cd);
  REQUIRE(r1.snapshots.size() == 2);
  CHECK(r1.snapshots[0].t == 0.5);
  CHECK(r1.snapshots[1].t == 1.0);
  for (const auto& s : r1.snapshots) {
    for (std::size_t i = 0; i < g.n; ++i) {
      CHECK(s.v[i] == doctest::Approx(kRight.v()).epsilon(1e-13));
      CHECK(s.theta[i] == doctest::Approx(kRight.theta()).epsilon(1e-13));
    }
  }
  CHECK(sup_error_on_sigma(r1.snapshots[1], d.pattern, kGas, 0.5, 0.25, d.eps) < 1e-12);
}

TEST_CASE("mirror symmetry") {
  const ThermoState ml(kRight.v(), -kRight.u(), kRight.theta());
  const ThermoState mr(kLeft.v(), -kLeft.u(), kLeft.theta());
  const ProfileConfig a = sample(1e-2);
  const ProfileConfig b = make_profile_config(1e-2, ml, mr, kGas, Model::navier_stokes);
  const Grid ga = preset_domain(a, 0.2, a.eps / 2.0);
  const Grid gb(-ga.x_max, -ga.x_min, ga.n);
  auto mirror_gap = [&](const FieldState& sa, const FieldState& sb) {
    double d = 0.0;
    for (std::size_t i = 0; i < ga.n; ++i) {
      const std::size_t j = ga.n - 1 - i;
      d = std::max({d, std::abs(sa.v[i] - sb.v[j]), std::abs(sa.u[i] + sb.u[j]),
                    std::abs(sa.theta[i] - sb.theta[j])});
    }
    return d;
  };
  const double d0 = mirror_gap(init_from_ansatz(ga, a), init_from_ansatz(gb, b));
  const FieldState sa = run(ga, a, solver_config_for(a, 0.2)).snapshots.back();
  const FieldState sb = run(gb, b, solver_config_for(b, 0.2)).snapshots.back();
  MESSAGE("initial mirror gap " << d0);
  CHECK(mirror_gap(sa, sb) < 1e-8 + 2.0 * d0);
}

TEST_CASE("sup error on the exclusion set") {
  const ProfileConfig c = sample(1e-2);
  const Grid g = preset_domain(c, 1.0, c.eps / 2.0);
  FieldState s;
  s.t = 1.0;
  s.grid = g;
  for (std::size_t i = 0; i < g.n; ++i) {
    const ThermoState q = eval_riemann(c.pattern, 1.0, g.center(i), kGas);
    s.v.push_back(q.v());
    s.u.push_back(q.u());
    s.theta.push_back(q.theta());
  }
  CHECK(sup_error_on_sigma(s, c.pattern, kGas, 0.5, 0.25, c.eps) == 0.0);
  s.t = 0.4;
  CHECK_THROWS_AS(sup_error_on_sigma(s, c.pattern, kGas, 0.5, 0.25, c.eps), UsageError);
  s.t = 1.0;
  CHECK_THROWS_AS(sup_error_on_sigma(s, c.pattern, kGas, 0.5, 0.6, c.eps), UsageError);
  CHECK_THROWS_AS(sup_error_on_sigma(s, c.pattern, kGas, 100.0, 0.25, c.eps), UsageError);
  for (std::size_t i : sigma_cells(g, 1.0, 0.5, 0.25, c.eps)) {
    CHECK(std::abs(g.center(i)) / std::sqrt(2.0) >= 0.5 * std::pow(c.eps, 0.25));
  }
}

TEST_CASE("sample pattern self-convergence and conservation" * doctest::timeout(300)) {
  const ProfileConfig c = sample(1e-2);
  std::vector<FieldState> ends;
  double drift = 0.0;
  const Grid g0 = preset_domain(c, 1.0, c.eps / 2.0);
  for (std::size_t k : {1, 2, 4}) {
    const Grid g(g0.x_min, g0.x_max, g0.n * k);
    const RunResult r = run(g, c, solver_config_for(c, 1.0));
    ends.push_back(r.snapshots.back());
    drift = std::max(drift, r.budget.max_step_drift);
    CHECK(r.min_v > 0.0);
    CHECK(r.min_theta > 0.0);
  }
  const double e1 = field_diff(ends[0], ends[1]);
  const double e2 = field_diff(ends[1], ends[2]);
  CHECK(e2 <= 1e-3);
  CHECK(std::log2(e1 / e2) >= 1.0);
  CHECK(drift <= 1e-12);
}
