#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "wavelab/numerics.hpp"
#include "wavelab/profiles.hpp"

using namespace wavelab;

namespace {

const GasParams kGas{1.0, 5.0 / 3.0, 1.0};
const ThermoState kLeft(1.0, -0.5, 1.0);
const ThermoState kRight(1.2, 0.5, 1.1);
const oracle::Gas kOracleGas{1.0, 5.0 / 3.0, 1.0};

ProfileConfig sample(double eps, Model model = Model::navier_stokes) {
  const GasParams g = model == Model::kinetic ? kinetic_gas() : kGas;
  return make_profile_config(eps, kLeft, kRight, g, model);
}

double max_diff(const ThermoState& a, const ThermoState& b) {
  return std::max({std::abs(a.v() - b.v()), std::abs(a.u() - b.u()), std::abs(a.theta() - b.theta())});
}

// Rarefaction state from the Burgers and λ-inversion oracles.
ThermoState oracle_rarefaction(double t, double x, int family, const ProfileConfig& c) {
  const WavePattern& p = c.pattern;
  const ThermoState& anchor = family == 1 ? p.star : p.starstar;
  const auto fan = family == 1 ? p.fan1 : p.fan3;
  const double w = oracle::burgers_smooth(t + c.t0, x, c.sigma, fan.first, fan.second);
  const double pa = anchor.theta() / anchor.v() * kOracleGas.R;
  const double v = oracle::invert_speed(std::abs(w), anchor.v(), pa, kOracleGas);
  const double u = oracle::rarefaction_u(v, anchor.v(), anchor.u(), anchor.theta(), family, kOracleGas);
  const double theta = pa * std::pow(anchor.v() / v, kOracleGas.gamma) * v / kOracleGas.R;
  return ThermoState(v, u, theta);
}

}  // namespace

TEST_CASE("profile config scales and validation") {
  const ProfileConfig c = sample(1e-3);
  CHECK(c.t0 == doctest::Approx(std::pow(1e-3, 0.2)).epsilon(1e-15));
  CHECK(c.sigma == doctest::Approx(std::pow(1e-3, 0.4)).epsilon(1e-15));
  CHECK_FALSE(c.overridden);
  ProfileOptions o;
  o.t0 = 0.5;
  const ProfileConfig d = make_profile_config(1e-3, kLeft, kRight, kGas, Model::navier_stokes, o);
  CHECK(d.overridden);
  CHECK(d.t0 == 0.5);
  o = {};
  o.nu = 0.05;
  CHECK_THROWS_AS(make_profile_config(1e-3, kLeft, kRight, kGas, Model::navier_stokes, o), UsageError);
  CHECK_THROWS_AS(make_profile_config(1e-3, kLeft, kRight, kGas, Model::kinetic), UsageError);
  CHECK_THROWS_AS(make_profile_config(0.0, kLeft, kRight, kGas, Model::navier_stokes), UsageError);
  const ProfileConfig e = with_eps(c, 1e-2);
  CHECK(e.contact == c.contact);
  CHECK(e.sigma == doctest::Approx(std::pow(1e-2, 0.4)));
  CHECK(model_from_string("kinetic") == Model::kinetic);
  CHECK_THROWS_AS(model_from_string("euler"), ConfigError);
}

TEST_CASE("rarefaction profile matches the composed oracle") {
  const ProfileConfig c = sample(1e-3);
  const ThermoState lib = rarefaction_profile(1.0, -0.4, Family::one, c);
  CHECK(max_diff(lib, oracle_rarefaction(1.0, -0.4, 1, c)) < 1e-9);
  for (double x = -2.5; x <= 2.5; x += 0.31) {
    CHECK(max_diff(rarefaction_profile(0.7, x, Family::one, c), oracle_rarefaction(0.7, x, 1, c)) < 1e-9);
    CHECK(max_diff(rarefaction_profile(0.7, x, Family::three, c), oracle_rarefaction(0.7, x, 3, c)) < 1e-9);
  }
}

TEST_CASE("rarefaction profile stays on the anchor isentrope") {
  const ProfileConfig c = sample(1e-2);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  const double s1 = entropy(c.pattern.star, kGas), s3 = entropy(c.pattern.starstar, kGas);
  for (int k = 0; k < 200; ++k) {
    const double t = 3.0 * U(rng), x = -4.0 + 8.0 * U(rng);
    CHECK(std::abs(entropy(rarefaction_profile(t, x, Family::one, c), kGas) - s1) < 1e-10);
    CHECK(std::abs(entropy(rarefaction_profile(t, x, Family::three, c), kGas) - s3) < 1e-10);
  }
}

TEST_CASE("rarefaction tails reach the end states at large time") {
  const ProfileConfig c = sample(1e-2);
  const double t = 1e3;
  CHECK(max_diff(rarefaction_profile(t, c.pattern.fan1.first * (t + c.t0) * 1.5, Family::one, c),
                 kLeft) < 1e-6);
  CHECK(max_diff(rarefaction_profile(t, c.pattern.fan3.second * (t + c.t0) * 1.5, Family::three, c),
                 kRight) < 1e-6);
}

TEST_CASE("U_x is positive and derivative samples are consistent") {
  const ProfileConfig c = sample(1e-2);
  for (Family f : {Family::one, Family::three}) {
    for (double t : {0.0, 0.3, 2.0}) {
      for (double x = -5.0; x <= 5.0; x += 0.01) {
        const ProfileSample s = rarefaction_sample(t, x, f, c);
        CHECK(s.u_x > 0.0);
      }
      for (double x = -1.5; x <= 1.5; x += 0.21) {
        const ProfileSample s = rarefaction_sample(t, x, f, c);
        const double h = 1e-4;
        auto V = [&](double y) { return rarefaction_profile(t, y, f, c).v(); };
        auto Th = [&](double y) { return rarefaction_profile(t, y, f, c).theta(); };
        const double dv = oracle::deriv(V, x, h), dth = oracle::deriv(Th, x, h);
        CHECK(std::abs(s.v_x - dv) <= 1e-6 * std::max(std::abs(dv), 1e-5));
        CHECK(std::abs(s.theta_x - dth) <= 1e-6 * std::max(std::abs(dth), 1e-5));
      }
    }
  }
}

TEST_CASE("derivative norms decay with the expected powers of t + t0") {
  const ProfileConfig c = sample(1e-2);
  std::vector<double> lt, l1, linf;
  for (double t : {20.0, 60.0, 200.0, 600.0}) {
    const double lo = 1.2 * c.pattern.fan1.first * (t + c.t0);
    const double hi = 0.8 * c.pattern.fan1.second * (t + c.t0) + 1.0;
    const int n = 20000;
    const double dx = (hi - lo) / n;
    double sum = 0.0, mx = 0.0;
    for (int i = 0; i < n; ++i) {
      const ProfileSample s = rarefaction_sample(t, lo + (i + 0.5) * dx, Family::one, c);
      const double d = std::max({std::abs(s.v_x), std::abs(s.u_x), std::abs(s.theta_x)});
      sum += d * dx;
      mx = std::max(mx, d);
    }
    lt.push_back(std::log(t + c.t0));
    l1.push_back(std::log(sum));
    linf.push_back(std::log(mx));
  }
  CHECK(std::abs(numerics::fit_line(lt, l1).slope - 0.0) < 0.1);
  CHECK(std::abs(numerics::fit_line(lt, linf).slope + 1.0) < 0.1);
}

TEST_CASE("contact profile") {
  SUBCASE("equal temperatures give constants") {
    const ThermoState l(1.0, 0.0, 1.0), r(1.0, 0.0, 1.0);
    const ProfileConfig c = make_profile_config(1e-2, l, r, kGas, Model::navier_stokes);
    for (double x = -1.0; x <= 1.0; x += 0.1) CHECK(contact_profile(0.5, x, c) == c.pattern.starstar);
  }
  SUBCASE("Gaussian approach to the discontinuity values") {
    const ProfileConfig base = sample(1e-2);
    const double c0 = std::min(fit_gaussian_tail(*base.contact, 2.0, 5.0).c0,
                               fit_gaussian_tail(*base.contact, -2.0, -5.0).c0);
    const double delta = base.pattern.contact_strength();
    for (double eps : {1e-2, 3e-3, 1e-3}) {
      const ProfileConfig c = with_eps(base, eps);
      for (double x : {-0.3, -0.2, 0.15, 0.25}) {
        const ThermoState ref = x < 0.0 ? c.pattern.star : c.pattern.starstar;
        const double bound = 3.0 * delta * std::exp(-0.5 * c0 * x * x / (eps * 2.0));
        CHECK(max_diff(contact_profile(1.0, x, c), ref) <= bound);
      }
    }
  }
  SUBCASE("velocity at the origin from the relaxation oracle") {
    const ProfileConfig c = sample(1e-2);
    const double a = c.nu * c.pattern.p_mid * (kGas.gamma - 1.0) / (kGas.R * kGas.R * kGas.gamma);
    const double tl = c.pattern.star.theta(), tr = c.pattern.starstar.theta();
    const int n = 4000;
    const auto prof = oracle::relax_contact(tl, tr, [a](double th) { return a / th; }, 10.0, n);
    const double h = 20.0 / n;
    const double th0 = prof[n / 2];
    const double thp = (prof[n / 2 + 1] - prof[n / 2 - 1]) / (2.0 * h);
    const double expected = c.pattern.starstar.u() +
                            c.kappa() * (kGas.gamma - 1.0) / (kGas.R * kGas.gamma) * thp /
                                (std::sqrt(c.eps) * th0);
    const ThermoState s = contact_profile(0.0, 0.0, c);
    CHECK(s.u() == doctest::Approx(expected).epsilon(1e-5));
    CHECK(s.theta() == doctest::Approx(th0).epsilon(1e-5));
    CHECK(s.v() == doctest::Approx(kGas.R * th0 / c.pattern.p_mid).epsilon(1e-5));
  }
  SUBCASE("kinetic contact carries the mid pressure") {
    const ProfileConfig c = sample(1e-2, Model::kinetic);
    const ContactWaveTable& tab = *c.contact;
    for (double x = -0.2; x <= 0.2; x += 0.05) {
      const double th_hat = tab.value(x / std::sqrt(c.eps * 2.0));
      const ThermoState s = contact_profile(1.0, x, c);
      CHECK(kinetic_gas().R * th_hat / s.v() == doctest::Approx(c.pattern.p_mid).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(contact_profile(-1.0, 0.0, sample(1e-2)), UsageError);
}

TEST_CASE("superposition") {
  SUBCASE("degenerate pattern is constant") {
    const ProfileConfig c = make_profile_config(1e-2, kLeft, kLeft, kGas, Model::navier_stokes);
    for (double x = -3.0; x <= 3.0; x += 0.25) CHECK(max_diff(superpose(0.5, x, c), kLeft) < 1e-14);
  }
  SUBCASE("far field") {
    const ProfileConfig c = sample(1e-3);
    CHECK(max_diff(superpose(1.0, 3.0 * c.pattern.fan1.first * (1.0 + c.t0), c), kLeft) < 1e-6);
    CHECK(max_diff(superpose(1.0, 3.0 * c.pattern.fan3.second * (1.0 + c.t0), c), kRight) < 1e-6);
  }
  SUBCASE("origin at t = 1 from composed oracles") {
    const ProfileConfig c = sample(1e-3);
    const double a = c.nu * c.pattern.p_mid * (kGas.gamma - 1.0) / (kGas.R * kGas.R * kGas.gamma);
    const int n = 4000;
    const auto prof = oracle::relax_contact(c.pattern.star.theta(), c.pattern.starstar.theta(),
                                            [a](double th) { return a / th; }, 10.0, n);
    const double th0 = prof[n / 2];
    const double thp = (prof[n / 2 + 1] - prof[n / 2 - 1]) / (20.0 / n * 2.0);
    const ThermoState cd(kGas.R * th0 / c.pattern.p_mid,
                         c.pattern.starstar.u() + c.kappa() * (kGas.gamma - 1.0) / (kGas.R * kGas.gamma) *
                                                      thp / (std::sqrt(2.0 * c.eps) * th0),
                         th0);
    const ThermoState r1 = oracle_rarefaction(1.0, 0.0, 1, c);
    const ThermoState r3 = oracle_rarefaction(1.0, 0.0, 3, c);
    const ThermoState& s = c.pattern.star;
    const ThermoState& ss = c.pattern.starstar;
    const ThermoState lib = superpose(1.0, 0.0, c);
    CHECK(lib.v() == doctest::Approx(r1.v() + cd.v() + r3.v() - s.v() - ss.v()).epsilon(1e-5));
    CHECK(lib.u() == doctest::Approx(r1.u() + cd.u() + r3.u() - s.u() - ss.u()).epsilon(1e-5));
    CHECK(lib.theta() == doctest::Approx(r1.theta() + cd.theta() + r3.theta() - s.theta() - ss.theta())
                             .epsilon(1e-5));
  }
}
