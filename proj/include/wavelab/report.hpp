#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace wavelab {

struct TimeError {
  double t = 0.0;
  double error = 0.0;  // sup over Σ_h at time t
};

struct EpsRecord {
  double eps = 0.0;
  bool failed = false;
  std::string failure;  // abort message when failed
  std::vector<TimeError> errors;
  std::map<std::string, double> metadata;  // cells, steps, dx, extrema

  /// Max over snapshot times; 0 when there are none.
  double sup_error() const;
};

struct RateFit {
  std::optional<double> rate;
  std::optional<double> constant;
  std::optional<double> residual;
  std::string status = "ok";  // ok | below noise floor | insufficient points
  std::size_t points = 0;
};

/// Least squares of log e against log ε; e ≈ C ε^r. Needs at least three
/// points; flagged "below noise floor" when every error is below floor.
RateFit fit_rate(std::span<const double> eps, std::span<const double> err, double floor = 1e-12);

struct BoundRow {
  double eps = 0.0;
  double t = 0.0;
  double sup_difference = 0.0;  // sup_x |ansatz - Riemann| outside the core
  double x_at_sup = 0.0;  // where the ratio peaks
  double core_half_width = 0.0;
  double rarefaction_term = 0.0;  // (1/t)[σ ln(1+t+t0) + σ|ln σ| + t0]
  double contact_term = 0.0;      // δ e^{-c x²/(ε(1+t))} at x_at_sup
  double ratio = 0.0;             // sup_x difference / (rarefaction + contact)
};

struct BoundLedger {
  std::vector<BoundRow> rows;
  double constant = 0.0;  // C = max ratio
  double decay = 0.0;     // c
  double spread = 1.0;    // max/min over ε of the per-ε constant
  bool pass = false;
};

struct ConvergenceReport {
  std::string model;
  double h = 0.0;
  double alpha = 0.0;
  std::vector<EpsRecord> records;
  RateFit fit;
  std::optional<BoundLedger> bound_checks;
};

nlohmann::json to_json(const BoundLedger& ledger);
BoundLedger bound_ledger_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ConvergenceReport& report);
ConvergenceReport report_from_json(const nlohmann::json& j);

/// Pretty-printed JSON text with a trailing newline.
std::string serialize(const ConvergenceReport& report);
ConvergenceReport parse_report(const std::string& text);

}  // namespace wavelab
