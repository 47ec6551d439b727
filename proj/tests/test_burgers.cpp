#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "wavelab/burgers.hpp"
#include "wavelab/errors.hpp"
#include "wavelab/numerics.hpp"

using namespace wavelab;

TEST_CASE("exact Burgers rarefaction branches") {
  CHECK(burgers_exact(1.0, 0.0, -1.0, 1.0) == 0.0);
  CHECK(burgers_exact(2.0, -3.0, -1.0, 1.0) == -1.0);
  CHECK(burgers_exact(2.0, 1.0, -1.0, 1.0) == 0.5);
  CHECK(burgers_exact(2.0, 3.0, -1.0, 1.0) == 1.0);
  CHECK_THROWS_AS(burgers_exact(1.0, 0.0, 1.0, 1.0), UsageError);
  CHECK_THROWS_AS(burgers_exact(0.0, 0.0, -1.0, 1.0), UsageError);
}

TEST_CASE("smoothed Burgers at t = 0 and far field") {
  CHECK(burgers_smooth(0.0, 0.0, 0.1, -1.0, 3.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(burgers_smooth(0.0, 50.0, 0.1, -1.0, 3.0) == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(burgers_smooth(0.0, -50.0, 0.1, -1.0, 3.0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK_THROWS_AS(burgers_smooth(1.0, 0.0, 0.0, -1.0, 1.0), UsageError);
}

TEST_CASE("smoothed Burgers matches the characteristic bisection oracle") {
  CHECK(std::abs(burgers_smooth(1.5, 0.3, 0.25, -1.0, 1.0) -
                 oracle::burgers_smooth(1.5, 0.3, 0.25, -1.0, 1.0)) < 1e-12);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const double wm = -2.0 + 2.0 * U(rng);
    const double wp = wm + 0.01 + 2.0 * U(rng);
    const double t = 5.0 * U(rng);
    const double sigma = std::pow(10.0, -3.0 * U(rng));
    const double x = (wm - 0.5 + (wp - wm + 1.0) * U(rng)) * t;
    CHECK(std::abs(burgers_smooth(t, x, sigma, wm, wp) - oracle::burgers_smooth(t, x, sigma, wm, wp)) <
          1e-11);
  }
}

TEST_CASE("derivative sample is consistent") {
  const BurgersSample s = burgers_smooth_sample(0.7, 0.2, 0.1, -0.5, 1.0);
  const double fd = oracle::deriv([](double x) { return burgers_smooth(0.7, x, 0.1, -0.5, 1.0); }, 0.2, 1e-4);
  CHECK(s.w_x == doctest::Approx(fd).epsilon(1e-8));
  CHECK(s.x0 + s.w * 0.7 == doctest::Approx(0.2).epsilon(1e-13));
}

TEST_CASE("monotone and inside the end speeds on 10^4 samples") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const double wm = -1.0 + U(rng), wp = wm + 0.1 + U(rng);
    const double t = 0.01 + 3.0 * U(rng), sigma = 0.01 + 0.3 * U(rng);
    double prev = -INFINITY;
    for (int i = 0; i < 100; ++i) {
      const double x = (wm - 0.3) * t + (wp - wm + 0.6) * t * i / 99.0;
      const double w = burgers_smooth(t, x, sigma, wm, wp);
      // tanh saturates in floating point far from the fan; strictness is only
      // representable within a few σ of it.
      CHECK(w >= wm);
      CHECK(w <= wp);
      if (x > wm * t - 3.0 * sigma && x < wp * t + 3.0 * sigma) {
        CHECK(w > wm);
        CHECK(w < wp);
      }
      CHECK(w >= prev);
      prev = w;
    }
  }
}

TEST_CASE("sup distance to the exact fan scales like (sigma/t)(ln(1+t) + |ln sigma|)") {
  std::vector<double> c;
  for (double sigma : {1e-1, 1e-2, 1e-3}) {
    double sup = 0.0;
    for (double x = -3.0; x <= 3.0; x += sigma / 20.0) {
      sup = std::max(sup, std::abs(burgers_smooth(1.0, x, sigma, -1.0, 1.0) -
                                   burgers_exact(1.0, x, -1.0, 1.0)));
    }
    c.push_back(sup / (sigma * (std::log(2.0) + std::abs(std::log(sigma)))));
  }
  const double hi = std::max({c[0], c[1], c[2]});
  const double lo = std::min({c[0], c[1], c[2]});
  CHECK(hi / lo < 2.0);
}

TEST_CASE("saturated far field stays within the end speeds") {
  const double wm = -0.75916214315301778, wp = -0.16561138714907725;
  for (double x = -0.5; x <= 0.5; x += 0.01) {
    const double w = burgers_smooth(3.009, x, 0.01917, wm, wp);
    CHECK(w >= wm);
    CHECK(w <= wp);
  }
}
