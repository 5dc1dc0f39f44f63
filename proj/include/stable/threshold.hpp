#pragma once

namespace stable {

struct ThresholdResult {
  double x_threshold;  // unique positive root of remainder_bound(x, alpha, N) = eps
  int n_terms;
  double eps;
  double residual;     // remainder_bound(x_threshold)/eps - 1
  int iterations;
};

// Solves the threshold equation in u = ln x (the bound is strictly
// decreasing in x, so the root is unique) to |residual| <= 1e-10.
// Throws NoBracket or SolverError on failure instead of guessing.
ThresholdResult threshold_coordinate(double alpha, int n_terms, double eps);

// Closed-form upper estimate
//   ((Gamma(alpha N + 1) + Gamma(alpha(N+1) + 1)) / (pi eps N!))^{1/(alpha N + 1)},
// an upper bound for the exact root only when it exceeds 1.
struct ExplicitThreshold {
  double value;
  bool valid;  // value > 1
};

ExplicitThreshold threshold_explicit(double alpha, int n_terms, double eps);

// Smallest threshold over N in [1, n_max]; ties break toward smaller N.
struct OptimalTerms {
  int n_terms;
  double x_threshold;
};

OptimalTerms optimal_terms(double alpha, double eps, int n_max);

}  // namespace stable
