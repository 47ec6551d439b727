#pragma once

namespace wavelab {

/// Centered rarefaction of w_t + w w_x = 0 with Riemann data w₋ < w₊.
double burgers_exact(double t, double x, double w_minus, double w_plus);

/// Value and x-derivative of the smoothed rarefaction.
struct BurgersSample {
  double w;
  double w_x;
  double x0;  // foot of the characteristic through (t, x)
};

/// Solution of w_t + w w_x = 0 with w(0, x) = (w₊+w₋)/2 + (w₊-w₋)/2·tanh(x/σ),
/// obtained by solving x = x₀ + w_σ(x₀)·t for the characteristic foot x₀.
BurgersSample burgers_smooth_sample(double t, double x, double sigma, double w_minus,
                                    double w_plus);

double burgers_smooth(double t, double x, double sigma, double w_minus, double w_plus);

}  // namespace wavelab
