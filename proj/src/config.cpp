#include "wavelab/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "wavelab/errors.hpp"

namespace wavelab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& key, const std::string& text, const std::string& where) {
  const std::string t = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw ConfigError(where + ": '" + key + "' expects a number, got '" + t + "'");
  }
  return value;
}

std::vector<double> parse_list(const std::string& key, const std::string& text,
                               const std::string& where) {
  std::string body = trim(text);
  if (body.size() >= 2 && body.front() == '[' && body.back() == ']') {
    body = body.substr(1, body.size() - 2);
  }
  std::vector<double> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(key, item, where));
  if (out.empty()) throw ConfigError(where + ": '" + key + "' is empty");
  return out;
}

std::string format(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

void ExperimentConfig::validate() const {
  try {
    params.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (eps_list.empty()) throw ConfigError("config: eps_list is empty");
  for (std::size_t i = 0; i < eps_list.size(); ++i) {
    if (!(eps_list[i] > 0.0)) throw ConfigError("config: eps_list entries must be positive");
    if (i > 0 && !(eps_list[i] < eps_list[i - 1])) {
      throw ConfigError("config: eps_list must be strictly decreasing");
    }
  }
  if (!(h > 0.0)) throw ConfigError("config: h must be positive");
  if (!(alpha > 0.0 && alpha < 0.5)) throw ConfigError("config: alpha must lie in (0, 1/2)");
  if (nu < 0.1) throw ConfigError("config: nu must be >= 0.1");
  if (!(t_end > 0.0)) throw ConfigError("config: t_end must be positive");
  if (!(dx_per_eps > 0.0)) throw ConfigError("config: dx_per_eps must be positive");
  for (double t : snapshot_times) {
    if (!(t >= 0.0 && t <= t_end)) throw ConfigError("config: snapshot_times must lie in [0, t_end]");
  }
  if (model == Model::kinetic) {
    const GasParams k = kinetic_gas();
    if (std::abs(params.R - k.R) > 1e-12 || std::abs(params.gamma - k.gamma) > 1e-12) {
      throw ConfigError("config: the kinetic model requires R = 2/3 and gamma = 5/3");
    }
  }
}

ExperimentConfig preset_navier_stokes() { return {}; }

ExperimentConfig preset_kinetic() {
  ExperimentConfig c;
  c.model = Model::kinetic;
  c.params = kinetic_gas();
  c.dx_per_eps = 0.5;
  return c;
}

ExperimentConfig parse_config_string(const std::string& text, const std::string& origin) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = origin + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (kv.count(key)) throw ConfigError(where + ": duplicate key '" + key + "'");
    kv[key] = value;
  }

  ExperimentConfig c;
  if (auto it = kv.find("model"); it != kv.end()) {
    c.model = model_from_string(it->second);
    if (c.model == Model::kinetic) c = preset_kinetic();
  }
  auto num = [&](const char* key) -> std::optional<double> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    return parse_number(key, it->second, origin);
  };
  if (auto v = num("gamma")) c.params.gamma = *v;
  if (auto v = num("R")) c.params.R = *v;
  if (auto v = num("A")) c.params.A = *v;
  try {
    c.left = ThermoState(num("v_left").value_or(c.left.v()), num("u_left").value_or(c.left.u()),
                         num("theta_left").value_or(c.left.theta()));
    c.right = ThermoState(num("v_right").value_or(c.right.v()),
                          num("u_right").value_or(c.right.u()),
                          num("theta_right").value_or(c.right.theta()));
  } catch (const DomainError& e) {
    throw ConfigError(origin + ": " + e.what());
  }
  if (auto it = kv.find("eps_list"); it != kv.end()) c.eps_list = parse_list("eps_list", it->second, origin);
  if (auto it = kv.find("snapshot_times"); it != kv.end()) {
    c.snapshot_times = parse_list("snapshot_times", it->second, origin);
  }
  if (auto v = num("nu")) c.nu = *v;
  if (auto v = num("h")) c.h = *v;
  if (auto v = num("alpha")) c.alpha = *v;
  if (auto v = num("t_end")) c.t_end = *v;
  if (auto v = num("dx_per_eps")) c.dx_per_eps = *v;
  if (auto it = kv.find("out_dir"); it != kv.end()) c.out_dir = it->second;

  static const char* known[] = {"model",   "gamma",       "R",          "A",
                                "v_left",  "u_left",      "theta_left", "v_right",
                                "u_right", "theta_right", "eps_list",   "nu",
                                "h",       "alpha",       "t_end",      "snapshot_times",
                                "dx_per_eps", "out_dir"};
  for (const auto& [key, value] : kv) {
    if (std::find_if(std::begin(known), std::end(known),
                     [&](const char* k) { return key == k; }) == std::end(known)) {
      throw ConfigError(origin + ": unknown key '" + key + "'");
    }
  }
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_config_string(ss.str(), path.string());
}

std::string to_config_string(const ExperimentConfig& c) {
  auto list = [](const std::vector<double>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + format(xs[i]);
    return s;
  };
  std::ostringstream os;
  os << "model = " << model_name(c.model) << "\n"
     << "gamma = " << format(c.params.gamma) << "\n"
     << "R = " << format(c.params.R) << "\n"
     << "A = " << format(c.params.A) << "\n"
     << "v_left = " << format(c.left.v()) << "\n"
     << "u_left = " << format(c.left.u()) << "\n"
     << "theta_left = " << format(c.left.theta()) << "\n"
     << "v_right = " << format(c.right.v()) << "\n"
     << "u_right = " << format(c.right.u()) << "\n"
     << "theta_right = " << format(c.right.theta()) << "\n"
     << "eps_list = " << list(c.eps_list) << "\n"
     << "nu = " << format(c.nu) << "\n"
     << "h = " << format(c.h) << "\n"
     << "alpha = " << format(c.alpha) << "\n"
     << "t_end = " << format(c.t_end) << "\n"
     << "snapshot_times = " << list(c.snapshot_times) << "\n"
     << "dx_per_eps = " << format(c.dx_per_eps) << "\n"
     << "out_dir = " << c.out_dir << "\n";
  return os.str();
}

ProfileConfig profile_config(const ExperimentConfig& cfg, double eps) {
  ProfileOptions opts;
  opts.nu = cfg.nu;
  return make_profile_config(eps, cfg.left, cfg.right, cfg.params, cfg.model, opts);
}

}  // namespace wavelab
