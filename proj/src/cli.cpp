#include "wavelab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <ostream>

#include "wavelab/csv_io.hpp"
#include "wavelab/errors.hpp"
#include "wavelab/sweep.hpp"

namespace wavelab {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Invocation {
  std::string config_path;
  std::string out_dir;
};

json state_json(const ThermoState& s) { return {{"v", s.v()}, {"u", s.u()}, {"theta", s.theta()}}; }

json pattern_json(const WavePattern& p) {
  return {{"left", state_json(p.left)},
          {"star", state_json(p.star)},
          {"starstar", state_json(p.starstar)},
          {"right", state_json(p.right)},
          {"fan1", {p.fan1.first, p.fan1.second}},
          {"fan3", {p.fan3.first, p.fan3.second}},
          {"contact_speed", p.contact_speed},
          {"p_mid", p.p_mid},
          {"contact_strength", p.contact_strength()}};
}

json record_json(const EpsRecord& r) {
  ConvergenceReport tmp;
  tmp.records.push_back(r);
  return to_json(tmp).at("errors").at(0);
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot write '" + path.string() + "'");
  os << text;
}

ExperimentConfig resolve(const Invocation& inv, Model required) {
  ExperimentConfig cfg = inv.config_path.empty()
                             ? (required == Model::kinetic ? preset_kinetic() : preset_navier_stokes())
                             : load_config(inv.config_path);
  if (!inv.out_dir.empty()) cfg.out_dir = inv.out_dir;
  return cfg;
}

ExperimentConfig resolve_for(const Invocation& inv, Model model, const char* command) {
  ExperimentConfig cfg = resolve(inv, model);
  if (cfg.model != model) {
    throw ConfigError(std::string(command) + " requires model = " + model_name(model));
  }
  return cfg;
}

std::vector<double> positive_times(const ExperimentConfig& cfg) {
  std::vector<double> ts;
  std::copy_if(cfg.snapshot_times.begin(), cfg.snapshot_times.end(), std::back_inserter(ts),
               [](double t) { return t > 0.0; });
  if (ts.empty()) throw ConfigError("config: snapshot_times has no positive time");
  return ts;
}

int cmd_riemann(const Invocation& inv, std::ostream& out) {
  const ExperimentConfig cfg = resolve(inv, Model::navier_stokes);
  const ProfileConfig pc = profile_config(cfg, cfg.eps_list.front());
  for (double t : positive_times(cfg)) {
    const Grid grid = preset_domain(pc, t, cfg.dx_per_eps * pc.eps);
    std::vector<double> x = grid.centers();
    std::vector<ThermoState> s;
    s.reserve(x.size());
    for (double xi : x) s.push_back(eval_riemann(pc.pattern, t, xi, pc.params));
    write_profile_csv(fs::path(cfg.out_dir) / ("riemann_t" + format_number(t) + ".csv"), t, x, s);
  }
  out << pattern_json(pc.pattern).dump(2) << "\n";
  return 0;
}

int cmd_ansatz(const Invocation& inv, std::ostream& out) {
  const ExperimentConfig cfg = resolve(inv, Model::navier_stokes);
  const ProfileConfig base = profile_config(cfg, cfg.eps_list.front());
  json files = json::array();
  for (double eps : cfg.eps_list) {
    const ProfileConfig pc = with_eps(base, eps);
    for (double t : cfg.snapshot_times) {
      const Grid grid = preset_domain(pc, std::max(t, 1e-12), cfg.dx_per_eps * eps);
      std::vector<double> x = grid.centers();
      std::vector<ThermoState> s;
      s.reserve(x.size());
      for (double xi : x) s.push_back(superpose(t, xi, pc));
      const std::string name = snapshot_file_name("ansatz", eps, t);
      write_profile_csv(fs::path(cfg.out_dir) / name, t, x, s);
      files.push_back(name);
    }
  }
  out << json{{"files", files}}.dump(2) << "\n";
  return 0;
}

int cmd_residuals(const Invocation& inv, std::ostream& out) {
  const ExperimentConfig cfg = resolve(inv, Model::navier_stokes);
  const ProfileConfig base = profile_config(cfg, cfg.eps_list.front());
  json rows = json::array();
  for (double eps : cfg.eps_list) {
    const ProfileConfig pc = with_eps(base, eps);
    for (double t : positive_times(cfg)) {
      const Grid domain = preset_domain(pc, t, residual_required_dx(pc, t));
      const ResidualField f = ansatz_residuals(pc, domain, t);
      write_residual_csv(fs::path(cfg.out_dir) / snapshot_file_name("residuals", eps, t), f);
      rows.push_back({{"eps", eps},
                      {"t", t},
                      {"l1_q1", f.l1_q1()},
                      {"l1_q2", f.l1_q2()},
                      {"max_q1", f.max_q1()},
                      {"max_q2", f.max_q2()}});
    }
  }
  out << rows.dump(2) << "\n";
  return 0;
}

int cmd_run(const Invocation& inv, Model model, const char* command, std::ostream& out) {
  const ExperimentConfig cfg = resolve_for(inv, model, command);
  const ProfileConfig base = profile_config(cfg, cfg.eps_list.front());
  SweepOptions opts;
  opts.csv_dir = fs::path(cfg.out_dir);
  opts.kinetic_dump = model == Model::kinetic;
  const EpsRecord rec = run_case(cfg, base, cfg.eps_list.front(), opts);
  out << record_json(rec).dump(2) << "\n";
  return rec.failed ? 2 : 0;
}

int cmd_sweep(const Invocation& inv, Model model, const char* command, std::ostream& out) {
  const ExperimentConfig cfg = resolve_for(inv, model, command);
  SweepOptions opts;
  opts.csv_dir = fs::path(cfg.out_dir);
  ConvergenceReport report = sweep(cfg, opts);
  const std::vector<double> ts = positive_times(cfg);
  if (model == Model::navier_stokes) report.bound_checks = check_ansatz_bound(cfg, cfg.eps_list, ts);
  const std::string text = serialize(report);
  write_text(fs::path(cfg.out_dir) / (std::string(model_name(model)) + "_report.json"), text);
  out << text;
  const bool any_failed = std::any_of(report.records.begin(), report.records.end(),
                                      [](const EpsRecord& r) { return r.failed; });
  return any_failed ? 2 : 0;
}

int cmd_check_bound(const Invocation& inv, std::ostream& out) {
  const ExperimentConfig cfg = resolve(inv, Model::navier_stokes);
  const BoundLedger ledger = check_ansatz_bound(cfg, cfg.eps_list, positive_times(cfg));
  const std::string text = to_json(ledger).dump(2) + "\n";
  write_text(fs::path(cfg.out_dir) / "bound_checks.json", text);
  out << text;
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wave-pattern experiments for 1-D Navier-Stokes and BGK"};
  app.require_subcommand(1);
  Invocation inv;
  std::function<int()> action;

  auto add = [&](const char* name, const char* help, std::function<int()> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", inv.config_path, "key = value config file");
    sub->add_option("--out", inv.out_dir, "output directory (overrides out_dir)");
    sub->callback([&action, fn] { action = fn; });
  };
  add("riemann", "print the R1-CD-R3 pattern and write sampled profiles",
      [&] { return cmd_riemann(inv, out); });
  add("ansatz", "write superposed wave profiles", [&] { return cmd_ansatz(inv, out); });
  add("residuals", "write Q1/Q2 residual fields", [&] { return cmd_residuals(inv, out); });
  add("ns-run", "Navier-Stokes run at the first eps",
      [&] { return cmd_run(inv, Model::navier_stokes, "ns-run", out); });
  add("ns-sweep", "Navier-Stokes eps sweep",
      [&] { return cmd_sweep(inv, Model::navier_stokes, "ns-sweep", out); });
  add("bgk-run", "BGK run at the first eps",
      [&] { return cmd_run(inv, Model::kinetic, "bgk-run", out); });
  add("bgk-sweep", "BGK eps sweep",
      [&] { return cmd_sweep(inv, Model::kinetic, "bgk-sweep", out); });
  add("check-bound", "ansatz versus Riemann bound ledger",
      [&] { return cmd_check_bound(inv, out); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    return action ? action() : 1;
  } catch (const NumericalAbort& e) {
    err << "numerical abort: " << e.what() << " (t = " << e.time() << ", cell " << e.cell() << ")\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace wavelab
