#include "wavelab/bgk_solver.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include <boost/numeric/odeint.hpp>

#include "wavelab/errors.hpp"

namespace wavelab {

void BgkConfig::validate() const {
  if (!(eps > 0.0)) throw UsageError("BgkConfig: eps must be positive");
  if (!(cfl > 0.0 && cfl <= 1.0)) throw UsageError("BgkConfig: cfl must lie in (0, 1]");
  if (!(t_end >= 0.0)) throw UsageError("BgkConfig: t_end must be >= 0");
}

namespace {

std::array<ThermoState, 4> pattern_states(const WavePattern& p) {
  return {p.left, p.star, p.starstar, p.right};
}

}  // namespace

VelocityGrid velocity_grid_for(const WavePattern& pattern, std::size_t count, double R) {
  double u_min = pattern.left.u(), u_max = u_min, th_min = pattern.left.theta(), th_max = th_min;
  for (const ThermoState& s : pattern_states(pattern)) {
    u_min = std::min(u_min, s.u());
    u_max = std::max(u_max, s.u());
    th_min = std::min(th_min, s.theta());
    th_max = std::max(th_max, s.theta());
  }
  VelocityGrid grid = VelocityGrid::for_range(u_min, u_max, th_max, count, R);
  grid.validate(u_min, u_max, th_min, th_max, R);
  return grid;
}

Grid kinetic_domain(const ProfileConfig& cfg, double t_end, double dx) {
  const GasParams& p = cfg.params;
  const ThermoState& l = cfg.pattern.left;
  const ThermoState& r = cfg.pattern.right;
  const double span = 1.5 * std::max(t_end, cfg.t0);
  const double cl = sound_speed(l.v(), entropy(l, p), p);
  const double cr = sound_speed(r.v(), entropy(r, p), p);
  return Grid::with_spacing((l.u() - cl) * span - 10.0 * cfg.sigma * l.v(),
                            (r.u() + cr) * span + 10.0 * cfg.sigma * r.v(), dx);
}

std::vector<double> initial_mass_coordinates(const Grid& grid, const ProfileConfig& cfg) {
  namespace odeint = boost::numeric::odeint;
  using State = std::array<double, 1>;
  std::vector<double> m(grid.n);
  std::vector<double> pos_y{0.0}, neg_s{0.0};
  std::vector<std::size_t> pos_i, neg_i;
  for (std::size_t i = 0; i < grid.n; ++i) {
    const double y = grid.center(i);
    if (y >= 0.0) {
      pos_y.push_back(y);
      pos_i.push_back(i);
    }
  }
  for (std::size_t i = grid.n; i-- > 0;) {
    const double y = grid.center(i);
    if (y < 0.0) {
      neg_s.push_back(-y);
      neg_i.push_back(i);
    }
  }
  auto integrate = [&](const std::vector<double>& s, const std::vector<std::size_t>& idx,
                       double sign) {
    if (idx.empty()) return;
    auto rhs = [&](const State& q, State& dq, double) {
      dq[0] = sign / superpose(0.0, q[0], cfg).v();
    };
    State q{0.0};
    std::size_t k = 0;
    auto stepper =
        odeint::make_controlled(1e-13, 1e-12, odeint::runge_kutta_dopri5<State>());
    odeint::integrate_times(stepper, rhs, q, s.begin(), s.end(), 0.25 * grid.dx(),
                            [&](const State& st, double) {
                              if (k > 0) m[idx[k - 1]] = st[0];
                              ++k;
                            });
  };
  integrate(pos_y, pos_i, 1.0);
  integrate(neg_s, neg_i, -1.0);
  return m;
}

KineticField init_kinetic_from_ansatz(const Grid& grid, std::shared_ptr<const VelocityGrid> vgrid,
                                      const ProfileConfig& cfg) {
  const double R = cfg.params.R;
  KineticField f(0.0, grid, std::move(vgrid));
  const std::vector<double> m = initial_mass_coordinates(grid, cfg);
  for (std::size_t i = 0; i < grid.n; ++i) {
    const ThermoState s = superpose(0.0, m[i], cfg);
    maxwellian({1.0 / s.v(), s.u(), s.theta()}, f.velocity(), R, f.g(i), f.h(i));
  }
  return f;
}

KineticBoundary boundary_for(const WavePattern& pattern) {
  const ThermoState& l = pattern.left;
  const ThermoState& r = pattern.right;
  return {{1.0 / l.v(), l.u(), l.theta()}, {1.0 / r.v(), r.u(), r.theta()}};
}

double bgk_stable_dt(const KineticField& field, const BgkConfig& cfg) {
  return cfg.cfl * field.x_grid().dx() / field.velocity().max_speed();
}

namespace {

// Reusable buffers for the transport step.
struct Workspace {
  std::vector<double> g_old, h_old, gl, hl, gr, hr, gm, hm, nu_pos, nu_neg;
};

void bgk_step_impl(KineticField& field, const KineticBoundary& bc, const BgkConfig& cfg,
                   double dt, Workspace& ws, double R) {
  const std::size_t nx = field.cells();
  const std::size_t nv = field.nodes();
  const VelocityGrid& vg = field.velocity();
  if (ws.gl.size() != nv) {
    ws.gl.resize(nv);
    ws.hl.resize(nv);
    ws.gr.resize(nv);
    ws.hr.resize(nv);
    ws.gm.resize(nv);
    ws.hm.resize(nv);
    ws.nu_pos.resize(nv);
    ws.nu_neg.resize(nv);
  }
  maxwellian(bc.left, vg, R, ws.gl, ws.hl);
  maxwellian(bc.right, vg, R, ws.gr, ws.hr);
  const double lam = dt / field.x_grid().dx();
  for (std::size_t k = 0; k < nv; ++k) {
    const double xi = vg.nodes()[k];
    ws.nu_pos[k] = xi > 0.0 ? xi * lam : 0.0;
    ws.nu_neg[k] = xi < 0.0 ? -xi * lam : 0.0;
  }
  ws.g_old.resize(field.g_data().size());
  ws.h_old.resize(field.h_data().size());
  std::swap(ws.g_old, field.g_data());
  std::swap(ws.h_old, field.h_data());
  double* g = field.g_data().data();
  double* h = field.h_data().data();
  const double* np = ws.nu_pos.data();
  const double* nn = ws.nu_neg.data();
  for (std::size_t i = 0; i < nx; ++i) {
    const double* gc = ws.g_old.data() + i * nv;
    const double* hc = ws.h_old.data() + i * nv;
    const double* gL = i > 0 ? gc - nv : ws.gl.data();
    const double* hL = i > 0 ? hc - nv : ws.hl.data();
    const double* gR = i + 1 < nx ? gc + nv : ws.gr.data();
    const double* hR = i + 1 < nx ? hc + nv : ws.hr.data();
    double* go = g + i * nv;
    double* ho = h + i * nv;
    for (std::size_t k = 0; k < nv; ++k) {
      go[k] = gc[k] - np[k] * (gc[k] - gL[k]) - nn[k] * (gc[k] - gR[k]);
      ho[k] = hc[k] - np[k] * (hc[k] - hL[k]) - nn[k] * (hc[k] - hR[k]);
    }
  }
  const double decay = (!cfg.relax || std::isinf(cfg.eps)) ? 1.0 : std::exp(-dt / cfg.eps);
  const double t_new = field.t + dt;
  for (std::size_t i = 0; i < nx; ++i) {
    const auto m = moments(field.g(i), field.h(i), vg);
    if (!(m[0] > 0.0)) {
      throw NumericalAbort("bgk: non-positive density", t_new, static_cast<long>(i));
    }
    if (decay < 1.0) {
      MacroState ms{};
      try {
        ms = macro_from_moments(m, R);
      } catch (const DomainError& e) {
        throw NumericalAbort(std::string("bgk: ") + e.what(), t_new, static_cast<long>(i));
      }
      maxwellian(ms, vg, R, ws.gm, ws.hm);
      double* go = g + i * nv;
      double* ho = h + i * nv;
      for (std::size_t k = 0; k < nv; ++k) {
        go[k] = ws.gm[k] + (go[k] - ws.gm[k]) * decay;
        ho[k] = ws.hm[k] + (ho[k] - ws.hm[k]) * decay;
      }
    }
  }
  field.t = t_new;
}

double min_value(const std::vector<double>& a) { return *std::min_element(a.begin(), a.end()); }

void check_nonnegative(const KineticField& f) {
  const std::size_t nv = f.nodes();
  for (const std::vector<double>* arr : {&f.g_data(), &f.h_data()}) {
    for (std::size_t j = 0; j < arr->size(); ++j) {
      if ((*arr)[j] < 0.0) {
        std::ostringstream os;
        os << "bgk: negative distribution value at t = " << f.t << ", cell " << j / nv
           << ", node " << j % nv;
        throw NumericalAbort(os.str(), f.t, static_cast<long>(j / nv));
      }
    }
  }
}

}  // namespace

void bgk_step(KineticField& field, const KineticBoundary& bc, const BgkConfig& cfg, double dt) {
  cfg.validate();
  if (!(dt > 0.0)) dt = bgk_stable_dt(field, cfg);
  Workspace ws;
  bgk_step_impl(field, bc, cfg, dt, ws, 2.0 / 3.0);
  check_nonnegative(field);
}

BgkRunResult bgk_run(KineticField initial, const KineticBoundary& bc, const BgkConfig& cfg) {
  cfg.validate();
  std::vector<double> targets;
  for (double t : cfg.snapshot_times) {
    if (t >= initial.t && t <= cfg.t_end) targets.push_back(t);
  }
  targets.push_back(cfg.t_end);
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  BgkRunResult out;
  out.min_g = min_value(initial.g_data());
  Workspace ws;
  KineticField& f = initial;
  const double dt_max = bgk_stable_dt(f, cfg);
  for (double target : targets) {
    while (f.t < target) {
      double dt = dt_max;
      const bool last = f.t + dt >= target * (1.0 - 1e-14);
      if (last) dt = target - f.t;
      bgk_step_impl(f, bc, cfg, dt, ws, 2.0 / 3.0);
      if (last) f.t = target;
      ++out.steps;
    }
    check_nonnegative(f);
    out.min_g = std::min(out.min_g, min_value(f.g_data()));
    out.snapshots.push_back(f);
  }
  return out;
}

BgkRunResult bgk_run(const Grid& grid, std::shared_ptr<const VelocityGrid> vgrid,
                     const ProfileConfig& profile, const BgkConfig& cfg) {
  if (profile.model != Model::kinetic) throw UsageError("bgk_run: profile must use the kinetic model");
  return bgk_run(init_kinetic_from_ansatz(grid, std::move(vgrid), profile),
                 boundary_for(profile.pattern), cfg);
}

KineticDiagnostics kinetic_diagnostics(const KineticField& field, const WavePattern& pattern,
                                       double h, double alpha, double eps) {
  if (!(field.t > 0.0)) throw UsageError("kinetic_diagnostics: needs t > 0");
  const GasParams params = kinetic_gas();
  const double R = params.R;
  const std::size_t nx = field.cells();
  KineticDiagnostics d;
  d.t = field.t;
  d.x = field.x_grid().centers();
  d.rho.resize(nx);
  d.u.resize(nx);
  d.theta.resize(nx);
  d.mass_coordinate.resize(nx);
  d.distance.resize(nx);
  d.in_sigma.resize(nx);
  double th_min = pattern.left.theta(), th_max = th_min, v_sum = 0.0, u_sum = 0.0;
  for (const ThermoState& s : pattern_states(pattern)) {
    th_min = std::min(th_min, s.theta());
    th_max = std::max(th_max, s.theta());
  }
  for (std::size_t i = 0; i < nx; ++i) {
    const MacroState m = macro_state(field, i, R);
    d.rho[i] = m.rho;
    d.u[i] = m.u;
    d.theta[i] = m.theta;
    th_min = std::min(th_min, m.theta);
    th_max = std::max(th_max, m.theta);
    v_sum += 1.0 / m.rho;
    u_sum += m.u;
  }
  d.m_star = GlobalMaxwellian::choose(v_sum / static_cast<double>(nx),
                                      u_sum / static_cast<double>(nx), th_min, th_max);
  const double cut = h * std::pow(eps, alpha);
  const double root = std::sqrt(1.0 + field.t);
  bool any = false;
  for (std::size_t i = 0; i < nx; ++i) {
    const EulerianSample s = eval_riemann_eulerian(pattern, field.t, d.x[i], params);
    d.mass_coordinate[i] = s.mass_coordinate;
    d.distance[i] = weighted_distance(field, i, s.state, d.m_star, R);
    d.in_sigma[i] = field.t >= h && std::abs(s.mass_coordinate) / root >= cut;
    if (d.in_sigma[i]) {
      any = true;
      d.sup_on_sigma = std::max(d.sup_on_sigma, d.distance[i]);
    }
  }
  if (field.t >= h && !any) throw UsageError("kinetic_diagnostics: Sigma_h misses the grid");
  return d;
}

namespace {

constexpr char kMagic[8] = {'W', 'L', 'B', 'G', 'K', '0', '0', '1'};

template <class T>
void put(std::ofstream& os, T value) {
  static_assert(sizeof(T) == 8);
  auto bits = std::bit_cast<std::uint64_t>(value);
  if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
  os.write(reinterpret_cast<const char*>(&bits), 8);
}

template <class T>
T get(std::ifstream& is) {
  std::uint64_t bits = 0;
  is.read(reinterpret_cast<char*>(&bits), 8);
  if (!is) throw UsageError("read_kinetic_dump: truncated file");
  if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
  return std::bit_cast<T>(bits);
}

}  // namespace

void write_kinetic_dump(const KineticField& field, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw UsageError("write_kinetic_dump: cannot open " + path.string());
  os.write(kMagic, 8);
  put<std::uint64_t>(os, field.cells());
  put<std::uint64_t>(os, field.nodes());
  put<double>(os, field.t);
  for (std::size_t i = 0; i < field.cells(); ++i) put<double>(os, field.x_grid().center(i));
  for (double xi : field.velocity().nodes()) put<double>(os, xi);
  for (double w : field.velocity().weights()) put<double>(os, w);
  for (double v : field.g_data()) put<double>(os, v);
  for (double v : field.h_data()) put<double>(os, v);
  if (!os) throw UsageError("write_kinetic_dump: write failed for " + path.string());
}

KineticField read_kinetic_dump(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw UsageError("read_kinetic_dump: cannot open " + path.string());
  char magic[8];
  is.read(magic, 8);
  if (!is || std::memcmp(magic, kMagic, 8) != 0) {
    throw UsageError("read_kinetic_dump: bad magic in " + path.string());
  }
  const auto nx = get<std::uint64_t>(is);
  const auto nv = get<std::uint64_t>(is);
  const double t = get<double>(is);
  std::vector<double> x(nx), xi(nv), w(nv);
  for (auto& v : x) v = get<double>(is);
  for (auto& v : xi) v = get<double>(is);
  for (auto& v : w) v = get<double>(is);
  if (nx < 2 || nv < 2) throw UsageError("read_kinetic_dump: dimensions too small");
  const double dx = x[1] - x[0];
  const double dxi = xi[1] - xi[0];
  auto vg = std::make_shared<const VelocityGrid>(0.5 * (xi.front() + xi.back()),
                                                 0.5 * dxi * static_cast<double>(nv), nv);
  KineticField f(t, Grid(x.front() - 0.5 * dx, x.back() + 0.5 * dx, nx), vg);
  for (auto& v : f.g_data()) v = get<double>(is);
  for (auto& v : f.h_data()) v = get<double>(is);
  return f;
}

}  // namespace wavelab
