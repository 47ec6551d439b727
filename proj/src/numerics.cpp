#include "wavelab/numerics.hpp"

namespace wavelab::numerics {

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw UsageError("fit_line: need at least two (x, y) pairs of equal length");
  }
  const double n = static_cast<double>(x.size());
  KahanSum sx, sy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx.add(x[i]);
    sy.add(y[i]);
  }
  const double mx = sx.value() / n;
  const double my = sy.value() / n;
  KahanSum sxx, sxy, syy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx.add((x[i] - mx) * (x[i] - mx));
    sxy.add((x[i] - mx) * (y[i] - my));
    syy.add((y[i] - my) * (y[i] - my));
  }
  if (sxx.value() == 0.0) throw UsageError("fit_line: all abscissae coincide");
  LineFit fit;
  fit.slope = sxy.value() / sxx.value();
  fit.intercept = my - fit.slope * mx;
  KahanSum rss;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    rss.add(r * r);
  }
  fit.residual = std::sqrt(rss.value() / n);
  fit.r_squared = syy.value() > 0.0 ? 1.0 - rss.value() / syy.value() : 1.0;
  return fit;
}

}  // namespace wavelab::numerics
