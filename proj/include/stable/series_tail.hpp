#pragma once

namespace stable {

// Convergence regime of the large-x series.
enum class Regime {
  ConvergentAll,          // alpha < 1: converges for every x != 0
  ConvergentOutsideUnit,  // alpha = 1: converges for |x| > 1
  Asymptotic,             // alpha > 1: asymptotic series, diverges for fixed x
};

Regime classify_regime(double alpha);

struct TailSeriesResult {
  double value;
  int n_terms;
  double remainder_bound;
  Regime regime;
};

// n-th summand of the series
//   (1/pi) sum_{n>=0} ((-1)^{n+1}/n!) Gamma(alpha n + 1)
//                     sin((pi/2) alpha n (1+theta)) x^{-alpha n - 1},
// assembled in log space. Exactly 0 whenever the sine factor is 0 (n = 0
// included). Overflow yields a signed infinity for the caller to flag.
double tail_term(int n, double abs_x, double alpha, double theta_star);

// Partial sum of the first N terms at (|x|, theta*), with the remainder
// bound attached. Throws ZeroCoordinate when x = 0, ThetaBoundary when
// theta* = +-1, DivergedTerm when a term exceeds 1e300.
TailSeriesResult tail_density(double x, double alpha, double theta, int n_terms);

// Bound on the truncation error after N terms:
//   x^{-alpha N - 1} / (pi N!) * (Gamma(alpha N + 1) + x^{-alpha} Gamma(alpha(N+1) + 1)).
// Independent of theta. Underflows to 0, overflows to +infinity.
double remainder_bound(double abs_x, double alpha, int n_terms);

// ln of the same bound as a function of ln|x|; stays finite far outside
// double range, which the threshold solver relies on.
double log_remainder_bound(double ln_x, double alpha, int n_terms);

}  // namespace stable
