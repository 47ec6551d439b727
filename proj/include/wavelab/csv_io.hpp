#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "wavelab/bgk_solver.hpp"
#include "wavelab/gas_model.hpp"
#include "wavelab/ns_solver.hpp"
#include "wavelab/residuals.hpp"

namespace wavelab {

/// Shortest round-trip decimal text of v.
std::string format_number(double v);

/// "ns_eps0.001_t0.5.csv" style names.
std::string snapshot_file_name(const std::string& prefix, double eps, double t);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Index of a named column; throws ConfigError if missing.
  std::size_t column(const std::string& name) const;
};

CsvTable read_csv(const std::filesystem::path& path);
void write_csv(const std::filesystem::path& path, const CsvTable& table);

/// Columns t, x, v, u, theta.
void write_profile_csv(const std::filesystem::path& path, double t, const std::vector<double>& x,
                       const std::vector<ThermoState>& states);
/// Columns t, x, q1, q2.
void write_residual_csv(const std::filesystem::path& path, const ResidualField& field);
/// Columns t, x, v, u, theta.
void write_snapshot_csv(const std::filesystem::path& path, const FieldState& state);
/// Columns t, x, rho, u1, theta, dist_weighted.
void write_kinetic_csv(const std::filesystem::path& path, const KineticDiagnostics& diag);

}  // namespace wavelab
