#include "stable/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

#include "stable/error.hpp"
#include "stable/numerics.hpp"
#include "stable/series_tail.hpp"

namespace stable {

namespace {

constexpr double kLogPi = 1.1447298858494002;

// ln RHS(e^u) with the three log-gammas hoisted out of the iteration
struct BoundCoeffs {
  double alpha;
  double a_n1;   // alpha N + 1
  double lg_a;   // ln Gamma(alpha N + 1)
  double lg_b;   // ln Gamma(alpha (N+1) + 1)
  double lg_f;   // ln Gamma(N + 1)
};

BoundCoeffs make_coeffs(double alpha, int n_terms) {
  double n = n_terms;
  return {alpha, alpha * n + 1.0, log_gamma(alpha * n + 1.0),
          log_gamma(alpha * (n + 1.0) + 1.0), log_gamma(n + 1.0)};
}

double log_bound_at(const BoundCoeffs& c, double u) {
  double t2 = c.lg_b - c.alpha * u;
  double m = std::max(c.lg_a, t2);
  return -c.a_n1 * u - kLogPi - c.lg_f + m +
         std::log1p(std::exp(-std::fabs(c.lg_a - t2)));
}

double log_explicit(const BoundCoeffs& c, double eps) {
  double m = std::max(c.lg_a, c.lg_b);
  double lse = m + std::log1p(std::exp(-std::fabs(c.lg_a - c.lg_b)));
  return (lse - kLogPi - c.lg_f - std::log(eps)) / c.a_n1;
}

void check_inputs(double alpha, int n_terms, double eps) {
  if (!(alpha > 0.0) || alpha > 2.0 || !std::isfinite(alpha)) {
    throw Error(Errc::AlphaOutOfRange, "alpha must lie in (0, 2]");
  }
  if (n_terms < 1) {
    throw Error(Errc::DomainError, "threshold needs N >= 1");
  }
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw Error(Errc::DomainError, "eps must be positive and finite");
  }
}

template <class Key, class Value>
class BoundedMemo {
 public:
  bool lookup(const Key& key, Value* out) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    *out = it->second;
    return true;
  }

  void store(const Key& key, const Value& value) {
    std::unique_lock lock(mutex_);
    if (map_.size() >= 512) map_.clear();
    map_.emplace(key, value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<Key, Value> map_;
};

}  // namespace

ThresholdResult threshold_coordinate(double alpha, int n_terms, double eps) {
  check_inputs(alpha, n_terms, eps);

  using Key = std::tuple<double, int, double>;
  static BoundedMemo<Key, ThresholdResult> memo;
  Key key{alpha, n_terms, eps};
  ThresholdResult cached;
  if (memo.lookup(key, &cached)) return cached;

  BoundCoeffs c = make_coeffs(alpha, n_terms);
  double log_eps = std::log(eps);
  auto f = [&](double u) { return log_bound_at(c, u) - log_eps; };

  // seed from the dominant-term closed form, clamped away from 0
  double u0 = log_explicit(c, eps);
  u0 = std::max(u0, std::log(1e-6));
  double lo = u0 - 50.0;
  double hi = u0 + 50.0;
  double f_lo = f(lo);
  double f_hi = f(hi);
  int expand = 0;
  while (f_lo < 0.0 && expand < 8) {
    lo -= 50.0 * (1 << expand);
    f_lo = f(lo);
    ++expand;
  }
  expand = 0;
  while (f_hi > 0.0 && expand < 8) {
    hi += 50.0 * (1 << expand);
    f_hi = f(hi);
    ++expand;
  }
  if (!(f_lo > 0.0) || !(f_hi < 0.0)) {
    throw Error(Errc::NoBracket,
                "failed to bracket the threshold equation root");
  }

  // f is strictly decreasing in u, so plain bisection is reliable
  double mid = 0.5 * (lo + hi);
  int iterations = 0;
  for (; iterations < 200; ++iterations) {
    mid = 0.5 * (lo + hi);
    double f_mid = f(mid);
    if (std::fabs(f_mid) < 1e-12 ||
        hi - lo < 1e-13 * std::max(1.0, std::fabs(mid))) {
      break;
    }
    if (f_mid > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  double x = std::exp(mid);
  double residual =
      std::expm1(log_remainder_bound(std::log(x), alpha, n_terms) - log_eps);
  if (!(std::fabs(residual) <= 1e-10)) {
    throw Error(Errc::SolverError,
                "threshold bisection did not reach the residual target");
  }
  ThresholdResult result{x, n_terms, eps, residual, iterations};
  memo.store(key, result);
  return result;
}

ExplicitThreshold threshold_explicit(double alpha, int n_terms, double eps) {
  check_inputs(alpha, n_terms, eps);
  double value = std::exp(log_explicit(make_coeffs(alpha, n_terms), eps));
  return {value, value > 1.0};
}

OptimalTerms optimal_terms(double alpha, double eps, int n_max) {
  check_inputs(alpha, 1, eps);
  if (n_max < 1) {
    throw Error(Errc::DomainError, "optimal_terms needs n_max >= 1");
  }

  using Key = std::tuple<double, double, int>;
  static BoundedMemo<Key, OptimalTerms> memo;
  Key key{alpha, eps, n_max};
  OptimalTerms cached;
  if (memo.lookup(key, &cached)) return cached;

  OptimalTerms best{0, 0.0};
  for (int n = 1; n <= n_max; ++n) {
    ThresholdResult r = threshold_coordinate(alpha, n, eps);
    if (best.n_terms == 0 || r.x_threshold < best.x_threshold) {
      best = {n, r.x_threshold};
    }
  }
  memo.store(key, best);
  return best;
}

}  // namespace stable
