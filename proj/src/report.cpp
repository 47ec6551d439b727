#include "wavelab/report.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "wavelab/errors.hpp"
#include "wavelab/numerics.hpp"

namespace wavelab {

using nlohmann::json;

double EpsRecord::sup_error() const {
  double m = 0.0;
  for (const auto& e : errors) m = std::max(m, e.error);
  return m;
}

RateFit fit_rate(std::span<const double> eps, std::span<const double> err, double floor) {
  if (eps.size() != err.size()) throw UsageError("fit_rate: size mismatch");
  RateFit fit;
  fit.points = eps.size();
  if (eps.size() < 3) {
    fit.status = "insufficient points";
    return fit;
  }
  if (std::all_of(err.begin(), err.end(), [&](double e) { return e < floor; })) {
    fit.status = "below noise floor";
    return fit;
  }
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(eps[i] > 0.0) || !(err[i] > 0.0)) {
      fit.status = "below noise floor";
      return fit;
    }
    lx.push_back(std::log(eps[i]));
    ly.push_back(std::log(err[i]));
  }
  const numerics::LineFit lf = numerics::fit_line(lx, ly);
  fit.rate = lf.slope;
  fit.constant = std::exp(lf.intercept);
  fit.residual = lf.residual;
  return fit;
}

namespace {

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> opt_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

}  // namespace

json to_json(const BoundLedger& ledger) {
  json rows = json::array();
  for (const auto& r : ledger.rows) {
    rows.push_back({{"eps", r.eps},
                    {"t", r.t},
                    {"sup_difference", r.sup_difference},
                    {"x_at_sup", r.x_at_sup},
                    {"core_half_width", r.core_half_width},
                    {"rarefaction_term", r.rarefaction_term},
                    {"contact_term", r.contact_term},
                    {"ratio", r.ratio}});
  }
  return {{"rows", rows},
          {"C", ledger.constant},
          {"c", ledger.decay},
          {"C_spread", ledger.spread},
          {"pass", ledger.pass}};
}

BoundLedger bound_ledger_from_json(const json& j) {
  BoundLedger l;
  for (const auto& r : j.at("rows")) {
    l.rows.push_back({r.at("eps").get<double>(), r.at("t").get<double>(),
                      r.at("sup_difference").get<double>(), r.at("x_at_sup").get<double>(),
                      r.at("core_half_width").get<double>(),
                      r.at("rarefaction_term").get<double>(), r.at("contact_term").get<double>(),
                      r.at("ratio").get<double>()});
  }
  l.constant = j.at("C").get<double>();
  l.decay = j.at("c").get<double>();
  l.spread = j.at("C_spread").get<double>();
  l.pass = j.at("pass").get<bool>();
  return l;
}

json to_json(const ConvergenceReport& report) {
  json eps = json::array();
  json errors = json::array();
  for (const auto& rec : report.records) {
    eps.push_back(rec.eps);
    json times = json::array();
    json sup = json::array();
    for (const auto& e : rec.errors) {
      times.push_back(e.t);
      sup.push_back(e.error);
    }
    json meta = json::object();
    for (const auto& [k, v] : rec.metadata) meta[k] = v;
    errors.push_back({{"eps", rec.eps},
                      {"status", rec.failed ? "failed" : "ok"},
                      {"failure", rec.failure},
                      {"times", times},
                      {"sup_error", sup},
                      {"metadata", meta}});
  }
  return {{"model", report.model},
          {"h", report.h},
          {"alpha", report.alpha},
          {"eps", eps},
          {"errors", errors},
          {"fitted_rate", opt(report.fit.rate)},
          {"fitted_constant", opt(report.fit.constant)},
          {"fit_residual", opt(report.fit.residual)},
          {"fit_status", report.fit.status},
          {"fit_points", report.fit.points},
          {"bound_checks", report.bound_checks ? to_json(*report.bound_checks) : json(nullptr)}};
}

ConvergenceReport report_from_json(const json& j) {
  try {
    ConvergenceReport r;
    r.model = j.at("model").get<std::string>();
    r.h = j.at("h").get<double>();
    r.alpha = j.at("alpha").get<double>();
    for (const auto& e : j.at("errors")) {
      EpsRecord rec;
      rec.eps = e.at("eps").get<double>();
      rec.failed = e.at("status").get<std::string>() == "failed";
      rec.failure = e.at("failure").get<std::string>();
      const auto& times = e.at("times");
      const auto& sup = e.at("sup_error");
      if (times.size() != sup.size()) throw ConfigError("report: times/sup_error length mismatch");
      for (std::size_t i = 0; i < times.size(); ++i) {
        const double err = sup[i].get<double>();
        if (err < 0.0) throw ConfigError("report: negative error");
        rec.errors.push_back({times[i].get<double>(), err});
      }
      for (const auto& [k, v] : e.at("metadata").items()) rec.metadata[k] = v.get<double>();
      r.records.push_back(std::move(rec));
    }
    r.fit.rate = opt_from(j.at("fitted_rate"));
    r.fit.constant = opt_from(j.at("fitted_constant"));
    r.fit.residual = opt_from(j.at("fit_residual"));
    r.fit.status = j.at("fit_status").get<std::string>();
    r.fit.points = j.at("fit_points").get<std::size_t>();
    if (!j.at("bound_checks").is_null()) r.bound_checks = bound_ledger_from_json(j.at("bound_checks"));
    return r;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("report: ") + e.what());
  }
}

std::string serialize(const ConvergenceReport& report) { return to_json(report).dump(2) + "\n"; }

ConvergenceReport parse_report(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("report: ") + e.what());
  }
  return report_from_json(j);
}

}  // namespace wavelab
