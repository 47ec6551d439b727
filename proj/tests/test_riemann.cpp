#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wavelab/riemann_solver.hpp"

using namespace wavelab;

namespace {

const GasParams kGas{1.0, 5.0 / 3.0, 1.0};
const ThermoState kLeft(1.0, -0.5, 1.0);
const ThermoState kRight(1.2, 0.5, 1.1);

oracle::Gas as_oracle(const GasParams& g) { return {g.R, g.gamma, g.A}; }
std::array<double, 3> arr(const ThermoState& s) { return {s.v(), s.u(), s.theta()}; }

double max_diff(const ThermoState& a, const ThermoState& b) {
  return std::max({std::abs(a.v() - b.v()), std::abs(a.u() - b.u()), std::abs(a.theta() - b.theta())});
}

}  // namespace

TEST_CASE("rarefaction_u at the anchor is the anchor velocity") {
  const ThermoState a(1.0, 0.3, 1.0);
  CHECK(rarefaction_u(1.0, a, Family::one, kGas) == 0.3);
  CHECK(rarefaction_u(1.0, a, Family::three, kGas) == 0.3);
}

TEST_CASE("rarefaction_u matches adaptive quadrature") {
  const ThermoState a(1.0, 0.0, 1.0);
  const double u = rarefaction_u(0.8, a, Family::one, kGas);
  CHECK(std::abs(u - oracle::rarefaction_u(0.8, 1.0, 0.0, 1.0, 1, as_oracle(kGas))) < 1e-10);
  for (double gamma : {1.4, 5.0 / 3.0, 3.0}) {
    const GasParams g{0.7, gamma, 2.0};
    const ThermoState b(1.3, -0.2, 0.8);
    for (double v = 1.3; v > 0.05; v *= 0.83) {
      for (int fam : {1, 3}) {
        const double lib = rarefaction_u(v, b, family_from_int(fam), g);
        const double ref = oracle::rarefaction_u(v, 1.3, -0.2, 0.8, fam, as_oracle(g));
        CHECK(std::abs(lib - ref) < 1e-10);
      }
    }
  }
}

TEST_CASE("rarefaction_u offsets of the two families have opposite signs") {
  const ThermoState a(1.0, 0.2, 1.0);
  const double d1 = rarefaction_u(0.7, a, Family::one, kGas) - 0.2;
  const double d3 = rarefaction_u(0.7, a, Family::three, kGas) - 0.2;
  CHECK(d1 * d3 < 0.0);
  CHECK(d1 == doctest::Approx(-d3).epsilon(1e-14));
  CHECK_THROWS_AS(rarefaction_u(1.2, a, Family::one, kGas), DomainError);
}

TEST_CASE("degenerate pattern") {
  const WavePattern p = solve_pattern(kLeft, kLeft, kGas);
  CHECK(max_diff(p.star, kLeft) < 1e-12);
  CHECK(max_diff(p.starstar, kLeft) < 1e-12);
  CHECK(p.fan1_degenerate());
  CHECK(p.fan3_degenerate());
  CHECK(p.contact_strength() < 1e-12);
  CHECK(p.contact_speed == 0.0);
}

TEST_CASE("sample pattern matches a fine brute-force scan") {
  const WavePattern p = solve_pattern(kLeft, kRight, kGas);
  const oracle::Pattern ref = oracle::brute_force_pattern(arr(kLeft), arr(kRight), as_oracle(kGas), 100000);
  CHECK(p.p_mid == doctest::Approx(ref.p_m).epsilon(1e-12));
  CHECK(std::abs(p.star.v() - ref.v_star) < 1e-9);
  CHECK(std::abs(p.star.u() - ref.u_star) < 1e-9);
  CHECK(std::abs(p.star.theta() - ref.theta_star) < 1e-9);
  CHECK(std::abs(p.starstar.v() - ref.v_ss) < 1e-9);
  CHECK(std::abs(p.starstar.u() - ref.u_ss) < 1e-9);
  CHECK(std::abs(p.starstar.theta() - ref.theta_ss) < 1e-9);
  CHECK(std::abs(ref.u_star - ref.u_ss) < 1e-10);
  CHECK(p.p_mid < std::min(pressure(kLeft, kGas), pressure(kRight, kGas)));
}

TEST_CASE("pattern invariants on random cases") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 20; ++k) {
    const oracle::RandomCase c = oracle::random_case(rng);
    const GasParams g{c.gas.R, c.gas.gamma, c.gas.A};
    const ThermoState l(c.left[0], c.left[1], c.left[2]);
    const ThermoState r(c.right[0], c.right[1], c.right[2]);
    const WavePattern p = solve_pattern(l, r, g);
    CHECK(std::abs(p.star.u() - p.starstar.u()) < 1e-10);
    CHECK(std::abs(pressure(p.star, g) - pressure(p.starstar, g)) < 1e-10);
    CHECK(std::abs(entropy(p.star, g) - entropy(l, g)) < 1e-10);
    CHECK(std::abs(entropy(p.starstar, g) - entropy(r, g)) < 1e-10);
    CHECK(p.fan1.first < p.fan1.second);
    CHECK(p.fan1.second < 0.0);
    CHECK(0.0 < p.fan3.first);
    CHECK(p.fan3.first < p.fan3.second);
    CHECK(std::abs(p.star.theta() - c.truth.theta_star) < 1e-9);
    CHECK(std::abs(p.starstar.v() - c.truth.v_ss) < 1e-9);
  }
}

TEST_CASE("shock-requiring data is rejected with the failing family") {
  const ThermoState l(1.0, 0.0, 5.0);
  const ThermoState r(1.0, 0.0, 1.0);
  CHECK_THROWS_AS(oracle::brute_force_pattern(arr(l), arr(r), as_oracle(kGas)), std::runtime_error);
  try {
    solve_pattern(l, r, kGas);
    FAIL("expected NotR1CDR3Error");
  } catch (const NotR1CDR3Error& e) {
    CHECK(e.family() == 3);
  }
  try {
    solve_pattern(r, l, kGas);
    FAIL("expected NotR1CDR3Error");
  } catch (const NotR1CDR3Error& e) {
    CHECK(e.family() == 1);
  }
}

TEST_CASE("eval_riemann regions") {
  const WavePattern p = solve_pattern(kLeft, kRight, kGas);
  CHECK(eval_riemann(p, 1.0, p.fan1.first * 1.01, kGas) == kLeft);
  CHECK(eval_riemann(p, 2.0, p.fan3.second * 2.5, kGas) == kRight);
  CHECK(max_diff(eval_riemann(p, 1.0, p.fan1.second, kGas), p.star) < 1e-10);
  CHECK(max_diff(eval_riemann(p, 1.0, p.fan3.first, kGas), p.starstar) < 1e-10);
  CHECK(max_diff(eval_riemann(p, 1.0, 0.0, kGas), p.starstar) == 0.0);
  CHECK(max_diff(eval_riemann(p, 1.0, -1e-12, kGas), p.star) == 0.0);
  CHECK_THROWS_AS(eval_riemann(p, 0.0, 0.0, kGas), UsageError);
  CHECK_THROWS_AS(eval_riemann(p, -1.0, 0.3, kGas), UsageError);
}

TEST_CASE("interior fan sample matches bisection and quadrature") {
  const WavePattern p = solve_pattern(kLeft, kRight, kGas);
  const oracle::Gas og = as_oracle(kGas);
  const double zeta = 0.5 * (p.fan1.first + p.fan1.second);
  const ThermoState s = eval_riemann(p, 2.0, 2.0 * zeta, kGas);
  const double pl = pressure(kLeft, kGas);
  const double v = oracle::invert_speed(-zeta, kLeft.v(), pl, og);
  CHECK(std::abs(s.v() - v) < 1e-10);
  CHECK(std::abs(s.u() - oracle::rarefaction_u(v, kLeft.v(), kLeft.u(), kLeft.theta(), 1, og)) < 1e-10);
  CHECK(std::abs(s.theta() - pl * std::pow(kLeft.v() / v, kGas.gamma) * v / kGas.R) < 1e-10);
}

TEST_CASE("self-similarity, entropy and fan-edge continuity") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 10; ++k) {
    const oracle::RandomCase c = oracle::random_case(rng);
    const GasParams g{c.gas.R, c.gas.gamma, c.gas.A};
    const ThermoState l(c.left[0], c.left[1], c.left[2]);
    const ThermoState r(c.right[0], c.right[1], c.right[2]);
    const WavePattern p = solve_pattern(l, r, g);
    const double sl = entropy(l, g), sr = entropy(r, g);
    for (double z = -3.0; z <= 3.0; z += 0.0173) {
      const ThermoState a = eval_riemann(p, 1.0, z, g);
      CHECK(max_diff(eval_riemann(p, 3.7, 3.7 * z, g), a) < 1e-12);
      CHECK(std::abs(entropy(a, g) - (z < 0.0 ? sl : sr)) < 1e-10);
    }
    for (double edge : {p.fan1.first, p.fan1.second, p.fan3.first, p.fan3.second}) {
      const double d = 1e-10;
      CHECK(max_diff(eval_riemann(p, 1.0, edge - d, g), eval_riemann(p, 1.0, edge + d, g)) < 1e-8);
    }
  }
}

TEST_CASE("Eulerian evaluation round-trips the mass coordinate") {
  const WavePattern p = solve_pattern(kLeft, kRight, kGas);
  for (double x = -2.0; x <= 2.0; x += 0.137) {
    const double y = eulerian_position(p, 1.0, x, kGas);
    const EulerianSample s = eval_riemann_eulerian(p, 1.0, y, kGas);
    CHECK(s.mass_coordinate == doctest::Approx(x).epsilon(1e-10));
    if (std::abs(x) > 1e-9) CHECK(max_diff(s.state, eval_riemann(p, 1.0, x, kGas)) < 1e-9);
  }
  CHECK(eulerian_position(p, 2.0, 0.0, kGas) == doctest::Approx(2.0 * p.star.u()));
}
