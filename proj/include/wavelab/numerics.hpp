#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/tools/toms748_solve.hpp>

#include "wavelab/errors.hpp"

namespace wavelab::numerics {

// Bracketed root of a monotone-or-not continuous f on [lo, hi] with
// f(lo)·f(hi) <= 0. Tolerance is relative on the abscissa, with an absolute
// floor for roots near zero.
template <class F>
double find_root(F&& f, double lo, double hi, double rel_tol = 1e-14,
                 double abs_tol = 0.0, const char* what = "find_root") {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi) || !std::isfinite(flo) ||
      !std::isfinite(fhi)) {
    throw InternalError(std::string(what) + ": root not bracketed");
  }
  auto tol = [rel_tol, abs_tol](double a, double b) {
    return std::abs(b - a) <= std::max(abs_tol, rel_tol * std::min(std::abs(a), std::abs(b)));
  };
  std::uintmax_t max_iter = 200;
  auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, max_iter);
  // Return the endpoint with the smaller residual.
  return std::abs(f(a)) <= std::abs(f(b)) ? a : b;
}

// Compensated (Neumaier) summation.
class KahanSum {
 public:
  void add(double x) {
    double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double stable_sum(std::span<const double> xs) {
  KahanSum s;
  for (double x : xs) s.add(x);
  return s.value();
}

inline std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = a;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return out;
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double residual = 0.0;  // root-mean-square residual
};

// Ordinary least squares y = intercept + slope·x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace wavelab::numerics
