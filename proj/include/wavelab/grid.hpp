#pragma once

#include <cstddef>
#include <vector>

namespace wavelab {

/// Uniform cell-centered grid on [x_min, x_max].
struct Grid {
  double x_min = -1.0;
  double x_max = 1.0;
  std::size_t n = 16;

  Grid() = default;
  Grid(double lo, double hi, std::size_t cells);

  double dx() const { return (x_max - x_min) / static_cast<double>(n); }
  double center(std::size_t i) const { return x_min + (static_cast<double>(i) + 0.5) * dx(); }
  std::vector<double> centers() const;

  /// Grid with spacing at most `dx` covering [lo, hi].
  static Grid with_spacing(double lo, double hi, double dx);
};

}  // namespace wavelab
