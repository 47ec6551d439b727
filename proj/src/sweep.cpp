#include "wavelab/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include "wavelab/bgk_solver.hpp"
#include "wavelab/csv_io.hpp"
#include "wavelab/errors.hpp"
#include "wavelab/ns_solver.hpp"

namespace wavelab {

namespace {

EpsRecord run_navier_stokes(const ExperimentConfig& cfg, const ProfileConfig& profile,
                            const SweepOptions& opts) {
  EpsRecord rec;
  rec.eps = profile.eps;
  const double dx = cfg.dx_per_eps * profile.eps;
  const Grid grid = preset_domain(profile, cfg.t_end, dx);
  const SolverConfig sc = solver_config_for(profile, cfg.t_end, cfg.snapshot_times);
  const RunResult res = run(grid, profile, sc);
  for (const auto& snap : res.snapshots) {
    if (opts.csv_dir) {
      write_snapshot_csv(*opts.csv_dir / snapshot_file_name("ns", profile.eps, snap.t), snap);
    }
    if (snap.t >= cfg.h) {
      rec.errors.push_back({snap.t, sup_error_on_sigma(snap, profile.pattern, profile.params,
                                                       cfg.h, cfg.alpha, profile.eps)});
    }
  }
  rec.metadata = {{"cells", static_cast<double>(grid.n)},
                  {"dx", grid.dx()},
                  {"steps", static_cast<double>(res.steps)},
                  {"min_v", res.min_v},
                  {"min_theta", res.min_theta},
                  {"max_step_drift", res.budget.max_step_drift}};
  return rec;
}

EpsRecord run_kinetic(const ExperimentConfig& cfg, const ProfileConfig& profile,
                      const SweepOptions& opts) {
  EpsRecord rec;
  rec.eps = profile.eps;
  const double dx = cfg.dx_per_eps * profile.eps;
  const Grid grid = kinetic_domain(profile, cfg.t_end, dx);
  auto vgrid = std::make_shared<const VelocityGrid>(
      velocity_grid_for(profile.pattern, 64, profile.params.R));
  BgkConfig bc;
  bc.eps = profile.eps;
  bc.t_end = cfg.t_end;
  bc.snapshot_times = cfg.snapshot_times;
  const BgkRunResult res = bgk_run(grid, vgrid, profile, bc);
  if (opts.csv_dir && opts.kinetic_dump && !res.snapshots.empty()) {
    const KineticField& last = res.snapshots.back();
    write_kinetic_dump(last, *opts.csv_dir / ("bgk_eps" + format_number(profile.eps) + "_t" +
                                              format_number(last.t) + ".bin"));
  }
  double theta_star = 0.0;
  for (const auto& snap : res.snapshots) {
    if (!(snap.t > 0.0)) continue;
    const KineticDiagnostics d =
        kinetic_diagnostics(snap, profile.pattern, cfg.h, cfg.alpha, profile.eps);
    if (opts.csv_dir) {
      write_kinetic_csv(*opts.csv_dir / snapshot_file_name("bgk", profile.eps, snap.t), d);
    }
    if (snap.t >= cfg.h) {
      rec.errors.push_back({snap.t, d.sup_on_sigma});
      theta_star = d.m_star.theta_star;
    }
  }
  rec.metadata = {{"cells", static_cast<double>(grid.n)},
                  {"dx", grid.dx()},
                  {"steps", static_cast<double>(res.steps)},
                  {"velocity_nodes", static_cast<double>(vgrid->count())},
                  {"min_g", res.min_g},
                  {"theta_star", theta_star}};
  return rec;
}

}  // namespace

EpsRecord run_case(const ExperimentConfig& cfg, const ProfileConfig& base, double eps,
                   const SweepOptions& opts) {
  const ProfileConfig profile = with_eps(base, eps);
  try {
    return cfg.model == Model::kinetic ? run_kinetic(cfg, profile, opts)
                                       : run_navier_stokes(cfg, profile, opts);
  } catch (const NumericalAbort& e) {
    EpsRecord rec;
    rec.eps = eps;
    rec.failed = true;
    rec.failure = e.what();
    rec.metadata = {{"abort_time", e.time()}, {"abort_cell", static_cast<double>(e.cell())}};
    return rec;
  }
}

ConvergenceReport sweep(const ExperimentConfig& cfg, const SweepOptions& opts) {
  cfg.validate();
  const ProfileConfig base = profile_config(cfg, cfg.eps_list.front());

  std::vector<EpsRecord> records;
  if (opts.concurrent) {
    std::vector<std::future<EpsRecord>> jobs;
    for (double eps : cfg.eps_list) {
      jobs.push_back(std::async(std::launch::async,
                                [&cfg, &base, &opts, eps] { return run_case(cfg, base, eps, opts); }));
    }
    for (auto& j : jobs) records.push_back(j.get());
  } else {
    for (double eps : cfg.eps_list) records.push_back(run_case(cfg, base, eps, opts));
  }

  ConvergenceReport report;
  report.model = model_name(cfg.model);
  report.h = cfg.h;
  report.alpha = cfg.alpha;
  std::vector<double> fe, fr;
  for (const auto& r : records) {
    if (r.failed || r.errors.empty()) continue;
    fe.push_back(r.eps);
    fr.push_back(r.sup_error());
  }
  report.records = std::move(records);
  report.fit = fit_rate(fe, fr);
  return report;
}

double contact_decay(const ProfileConfig& cfg) {
  if (!cfg.contact || cfg.contact->constant()) return 0.25;
  const double L = cfg.contact->half_width();
  const double lo = 0.25 * L;
  const double hi = 0.5 * L;
  const GaussianTailFit right = fit_gaussian_tail(*cfg.contact, lo, hi);
  const GaussianTailFit left = fit_gaussian_tail(*cfg.contact, -lo, -hi);
  return std::min(right.c0, left.c0);
}

BoundRow bound_row(const ProfileConfig& cfg, double t, double decay) {
  if (!(t > 0.0)) throw UsageError("bound_row: t must be positive");
  const double eps = cfg.eps;
  const double width = std::sqrt(eps * (1.0 + t));
  BoundRow row;
  row.eps = eps;
  row.t = t;
  row.core_half_width = width * std::log(1.0 / eps);
  row.rarefaction_term = (cfg.sigma * std::log(1.0 + t + cfg.t0) +
                          cfg.sigma * std::abs(std::log(cfg.sigma)) + cfg.t0) / t;
  const double delta = cfg.pattern.contact_strength();

  const double dx = std::min(cfg.sigma, width) / 16.0;
  const Grid grid = preset_domain(cfg, t, dx);
  for (std::size_t i = 0; i < grid.n; ++i) {
    const double x = grid.center(i);
    if (std::abs(x) <= row.core_half_width) continue;
    const ThermoState a = superpose(t, x, cfg);
    const ThermoState r = eval_riemann(cfg.pattern, t, x, cfg.params);
    const double diff = std::max({std::abs(a.v() - r.v()), std::abs(a.u() - r.u()),
                                  std::abs(a.theta() - r.theta())});
    const double contact = delta * std::exp(-decay * x * x / (eps * (1.0 + t)));
    const double envelope = row.rarefaction_term + contact;
    const double ratio = diff / envelope;
    row.sup_difference = std::max(row.sup_difference, diff);
    if (ratio > row.ratio) {
      row.ratio = ratio;
      row.x_at_sup = x;
      row.contact_term = contact;
    }
  }
  return row;
}

BoundLedger check_ansatz_bound(const ExperimentConfig& cfg, std::span<const double> eps,
                               std::span<const double> t_samples) {
  BoundLedger ledger;
  if (eps.empty() || t_samples.empty()) throw UsageError("check_ansatz_bound: empty sample set");
  const ProfileConfig base = profile_config(cfg, eps.front());
  ledger.decay = contact_decay(base);
  std::vector<double> per_eps;
  for (double e : eps) {
    const ProfileConfig pc = with_eps(base, e);
    double c_eps = 0.0;
    for (double t : t_samples) {
      BoundRow row = bound_row(pc, t, ledger.decay);
      c_eps = std::max(c_eps, row.ratio);
      ledger.rows.push_back(row);
    }
    per_eps.push_back(c_eps);
    ledger.constant = std::max(ledger.constant, c_eps);
  }
  const double lo = *std::min_element(per_eps.begin(), per_eps.end());
  const double hi = *std::max_element(per_eps.begin(), per_eps.end());
  if (hi == 0.0) {
    ledger.spread = 1.0;
  } else {
    ledger.spread = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
  }
  ledger.pass = ledger.spread <= 2.0;
  return ledger;
}

}  // namespace wavelab
