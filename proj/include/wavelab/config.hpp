#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "wavelab/gas_model.hpp"
#include "wavelab/profiles.hpp"

namespace wavelab {

/// Experiment description. File format: UTF-8, one `key = value` per line,
/// `#` starts a comment, lists are comma separated. Keys:
///   model, gamma, R, A, v_left, u_left, theta_left, v_right, u_right,
///   theta_right, eps_list, nu, h, alpha, t_end, snapshot_times,
///   dx_per_eps, out_dir
struct ExperimentConfig {
  Model model = Model::navier_stokes;
  GasParams params{1.0, 5.0 / 3.0, 1.0};
  ThermoState left{1.0, -0.5, 1.0};
  ThermoState right{1.2, 0.5, 1.1};
  std::vector<double> eps_list{1e-2, 3e-3, 1e-3};
  double nu = 1.0;
  double h = 0.5;
  double alpha = 0.25;
  double t_end = 1.0;
  std::vector<double> snapshot_times{0.5, 1.0};
  double dx_per_eps = 0.125;
  std::string out_dir = "out";

  /// Throws ConfigError on any violated invariant.
  void validate() const;
};

ExperimentConfig preset_navier_stokes();
/// Same end states with R = 2/3, γ = 5/3 and dx = ε/2.
ExperimentConfig preset_kinetic();

ExperimentConfig parse_config_string(const std::string& text, const std::string& origin = "<string>");
ExperimentConfig load_config(const std::filesystem::path& path);
std::string to_config_string(const ExperimentConfig& cfg);

/// Profile config for ε, solving the pattern and contact table.
ProfileConfig profile_config(const ExperimentConfig& cfg, double eps);

}  // namespace wavelab
