#pragma once

#include <optional>

#include "stable/params.hpp"

namespace stable {

enum class Strategy {
  ClosedFormAlpha1,
  ClosedFormGauss,
  ClosedFormZero,
  SeriesTail,
  Integral,
  Oracle,
};

const char* strategy_name(Strategy s) noexcept;

struct DensityValue {
  double value;
  Strategy strategy;
  std::optional<double> error_bound;   // certified bound (series) or quadrature estimate
  std::optional<int> n_terms;          // series length when strategy = SeriesTail
  std::optional<double> x_threshold;   // certification threshold when strategy = SeriesTail
  bool converged = true;
};

enum class Method { Auto, Series, Quad, Closed, Oracle };

struct EvalOptions {
  double eps = 1e-5;
  int n_max = 128;
  Method method = Method::Auto;
  std::optional<int> n_terms;  // fixed series length instead of optimal_terms
};

// Density of the strictly stable law at x. Dispatch for Method::Auto:
// rescale to the standard law (x_s = x lambda^{-1/alpha}, result scaled by
// lambda^{-1/alpha}); alpha = 1 closed form; x_s = 0 closed form; alpha = 2
// Gaussian; series tail when |theta*| < 1 and |x_s| clears the optimal
// threshold for eps; adaptive quadrature otherwise (tol = eps/10).
// alpha = 1, theta = +-1 is a degenerate law: value 0 off the atom,
// DegenerateAtom thrown at it. The oracle is never auto-dispatched.
DensityValue density(double x, const StableParams& params,
                     const EvalOptions& opts = {});
DensityValue density(double x, const StableParams& params, double eps);

// g(x, 1, theta) = cos(pi theta/2) / (pi (x^2 - 2 x sin(pi theta/2) + 1))
double closed_form_alpha1(double x, double theta);

// g(0, alpha, theta) = (1/pi) cos(pi theta/2) Gamma(1/alpha + 1)
double density_at_zero(double alpha, double theta);

// g(x, 2, 0) = exp(-x^2/4) / (2 sqrt(pi))
double gaussian_closed_form(double x);

}  // namespace stable
