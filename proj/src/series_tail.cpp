#include "stable/series_tail.hpp"

#include <cmath>

#include "stable/error.hpp"
#include "stable/numerics.hpp"
#include "stable/params.hpp"

namespace stable {

namespace {
constexpr double kLogPi = 1.1447298858494002;  // ln(pi)
}

Regime classify_regime(double alpha) {
  if (alpha < 1.0) return Regime::ConvergentAll;
  if (alpha == 1.0) return Regime::ConvergentOutsideUnit;
  return Regime::Asymptotic;
}

double tail_term(int n, double abs_x, double alpha, double theta_star) {
  if (n <= 0) return 0.0;  // the n = 0 sine factor is exactly 0
  double s = sin_half_pi_product(alpha, n, theta_star);
  if (s == 0.0) return 0.0;
  double log_mag = log_gamma(alpha * n + 1.0) - log_gamma(n + 1.0) +
                   std::log(std::fabs(s)) -
                   (alpha * n + 1.0) * std::log(abs_x) - kLogPi;
  // (-1)^{n+1} is +1 for odd n
  double sign = (n % 2 == 1) ? 1.0 : -1.0;
  if (s < 0.0) sign = -sign;
  return sign * std::exp(log_mag);
}

TailSeriesResult tail_density(double x, double alpha, double theta,
                              int n_terms) {
  validate(alpha, theta);
  if (n_terms < 1) {
    throw Error(Errc::DomainError, "series needs at least one term");
  }
  if (x == 0.0) {
    throw Error(Errc::ZeroCoordinate,
                "the tail series is a large-|x| expansion; x must be nonzero");
  }
  ReflectedPoint r = reflect(x, theta);
  if (std::fabs(r.theta_star) == 1.0) {
    throw Error(Errc::ThetaBoundary,
                "the tail series excludes theta* = +-1");
  }
  CompensatedAccumulator acc;
  for (int n = 1; n < n_terms; ++n) {
    double term = tail_term(n, r.abs_x, alpha, r.theta_star);
    if (!(std::fabs(term) <= 1e300)) {
      throw Error(Errc::DivergedTerm,
                  "series term exceeded 1e300; the asymptotic series "
                  "diverges at this x and N");
    }
    acc.add(term);
  }
  return {acc.value(), n_terms, remainder_bound(r.abs_x, alpha, n_terms),
          classify_regime(alpha)};
}

double log_remainder_bound(double ln_x, double alpha, int n_terms) {
  double n = n_terms;
  double lg_a = log_gamma(alpha * n + 1.0);
  double lg_b = log_gamma(alpha * (n + 1.0) + 1.0);
  // ln of x^{-aN-1}/(pi N!) * (e^{lg_a} + x^{-a} e^{lg_b}), log-sum-exp form
  double t2 = lg_b - alpha * ln_x;
  double m = std::max(lg_a, t2);
  return -(alpha * n + 1.0) * ln_x - kLogPi - log_gamma(n + 1.0) + m +
         std::log1p(std::exp(-std::fabs(lg_a - t2)));
}

double remainder_bound(double abs_x, double alpha, int n_terms) {
  if (!(abs_x > 0.0)) {
    throw Error(Errc::DomainError, "remainder bound needs |x| > 0");
  }
  if (n_terms < 1) {
    throw Error(Errc::DomainError, "remainder bound needs N >= 1");
  }
  return std::exp(log_remainder_bound(std::log(abs_x), alpha, n_terms));
}

}  // namespace stable
