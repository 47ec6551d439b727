#include "wavelab/csv_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "wavelab/errors.hpp"

namespace wavelab {

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw InternalError("format_number: conversion failed");
  return std::string(buf, ptr);
}

std::string snapshot_file_name(const std::string& prefix, double eps, double t) {
  return prefix + "_eps" + format_number(eps) + "_t" + format_number(t) + ".csv";
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw ConfigError("csv: missing column '" + name + "'");
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open '" + path.string() + "'");
  CsvTable table;
  std::string line;
  if (!std::getline(is, line)) throw ConfigError("csv: '" + path.string() + "' is empty");
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) table.header.push_back(cell);
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw ConfigError("csv: bad number '" + cell + "' in '" + path.string() + "'");
      }
      row.push_back(v);
    }
    if (row.size() != table.header.size()) {
      throw ConfigError("csv: row width mismatch in '" + path.string() + "'");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path, std::ios::binary);
  if (!os) throw ConfigError("cannot write '" + path.string() + "'");
  for (std::size_t i = 0; i < table.header.size(); ++i) os << (i ? "," : "") << table.header[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_number(row[i]);
    os << '\n';
  }
  if (!os) throw ConfigError("write failed for '" + path.string() + "'");
}

void write_profile_csv(const std::filesystem::path& path, double t, const std::vector<double>& x,
                       const std::vector<ThermoState>& states) {
  if (x.size() != states.size()) throw UsageError("write_profile_csv: size mismatch");
  CsvTable table{{"t", "x", "v", "u", "theta"}, {}};
  table.rows.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    table.rows.push_back({t, x[i], states[i].v(), states[i].u(), states[i].theta()});
  }
  write_csv(path, table);
}

void write_residual_csv(const std::filesystem::path& path, const ResidualField& field) {
  CsvTable table{{"t", "x", "q1", "q2"}, {}};
  table.rows.reserve(field.x.size());
  for (std::size_t i = 0; i < field.x.size(); ++i) {
    table.rows.push_back({field.t, field.x[i], field.q1[i], field.q2[i]});
  }
  write_csv(path, table);
}

void write_snapshot_csv(const std::filesystem::path& path, const FieldState& state) {
  CsvTable table{{"t", "x", "v", "u", "theta"}, {}};
  table.rows.reserve(state.v.size());
  for (std::size_t i = 0; i < state.v.size(); ++i) {
    table.rows.push_back({state.t, state.grid.center(i), state.v[i], state.u[i], state.theta[i]});
  }
  write_csv(path, table);
}

void write_kinetic_csv(const std::filesystem::path& path, const KineticDiagnostics& d) {
  CsvTable table{{"t", "x", "rho", "u1", "theta", "dist_weighted"}, {}};
  table.rows.reserve(d.x.size());
  for (std::size_t i = 0; i < d.x.size(); ++i) {
    table.rows.push_back({d.t, d.x[i], d.rho[i], d.u[i], d.theta[i], d.distance[i]});
  }
  write_csv(path, table);
}

}  // namespace wavelab
