#include "wavelab/grid.hpp"

#include <cmath>
#include <string>

#include "wavelab/errors.hpp"

namespace wavelab {

Grid::Grid(double lo, double hi, std::size_t cells) : x_min(lo), x_max(hi), n(cells) {
  if (!(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw UsageError("Grid: need x_min < x_max");
  }
  if (cells < 16) throw UsageError("Grid: need at least 16 cells, got " + std::to_string(cells));
}

std::vector<double> Grid::centers() const {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = center(i);
  return out;
}

Grid Grid::with_spacing(double lo, double hi, double dx) {
  if (!(dx > 0.0)) throw UsageError("Grid: dx must be positive");
  const auto cells = static_cast<std::size_t>(std::ceil((hi - lo) / dx - 1e-9));
  return Grid(lo, hi, std::max<std::size_t>(cells, 16));
}

}  // namespace wavelab
