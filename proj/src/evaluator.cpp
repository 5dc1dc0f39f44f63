#include "stable/evaluator.hpp"

#include <algorithm>
#include <cmath>

#include "stable/error.hpp"
#include "stable/numerics.hpp"
#include "stable/params.hpp"
#include "stable/quadrature.hpp"
#include "stable/series_tail.hpp"
#include "stable/threshold.hpp"

namespace stable {

const char* strategy_name(Strategy strategy) noexcept {
  switch (strategy) {
    case Strategy::ClosedFormAlpha1:
      return "ClosedFormAlpha1";
    case Strategy::ClosedFormGauss:
      return "ClosedFormGauss";
    case Strategy::ClosedFormZero:
      return "ClosedFormZero";
    case Strategy::SeriesTail:
      return "SeriesTail";
    case Strategy::Integral:
      return "Integral";
    case Strategy::Oracle:
      return "Oracle";
  }
  return "Unknown";
}

double closed_form_alpha1(double x, double theta) {
  double s = sin_half_pi(theta);
  double c = sin_half_pi(1.0 - theta);
  double dx = x - s;
  if (c == 0.0 && std::fabs(dx) <= 1e-12) {
    throw Error(Errc::DegenerateAtom,
                "alpha = 1, theta = +-1 is a point mass at x = theta; "
                "no density exists there");
  }
  // x^2 - 2 x sin(pi theta/2) + 1 rewritten cancellation-free
  return c / (M_PI * (dx * dx + c * c));
}

double density_at_zero(double alpha, double theta) {
  validate(alpha, theta);
  return sin_half_pi(1.0 - theta) * std::exp(log_gamma(1.0 / alpha + 1.0)) /
         M_PI;
}

double gaussian_closed_form(double x) {
  return std::exp(-0.25 * x * x) * (0.5 / std::sqrt(M_PI));
}

namespace {

DensityValue make_closed(double value, Strategy strategy) {
  DensityValue out;
  out.value = std::max(0.0, value);
  out.strategy = strategy;
  out.converged = true;
  return out;
}

DensityValue from_series(double xs, double alpha, double theta, int n_terms,
                         double x_threshold, double scale) {
  TailSeriesResult ts = tail_density(xs, alpha, theta, n_terms);
  DensityValue out;
  out.value = std::max(0.0, scale * ts.value);
  out.strategy = Strategy::SeriesTail;
  out.error_bound = scale * ts.remainder_bound;
  out.n_terms = n_terms;
  out.x_threshold = x_threshold;
  out.converged = std::fabs(xs) >= x_threshold;
  return out;
}

DensityValue from_quadrature(double xs, double alpha, double theta,
                             double eps, double scale) {
  QuadOptions options;
  options.tol = 0.1 * eps;
  options.tol_abs = 0.0;  // certified path wants pure relative control
  QuadResult q = density_integral(xs, alpha, theta, options);
  DensityValue out;
  out.value = std::max(0.0, scale * q.value);
  out.strategy = Strategy::Integral;
  out.error_bound = scale * q.err_estimate;
  out.converged = q.converged;
  return out;
}

}  // namespace

DensityValue density(double x, const StableParams& params,
                     const EvalOptions& opts) {
  StableParams p = validate(params);
  if (!std::isfinite(x)) {
    throw Error(Errc::DomainError, "x must be finite");
  }
  if (!(opts.eps > 0.0) || !std::isfinite(opts.eps)) {
    throw Error(Errc::DomainError, "eps must be positive and finite");
  }
  if (opts.n_max < 1) {
    throw Error(Errc::DomainError, "n_max must be at least 1");
  }
  if (opts.n_terms && *opts.n_terms < 1) {
    throw Error(Errc::DomainError, "n_terms must be at least 1");
  }

  // lambda standardization: evaluate at x lambda^{-1/alpha}, rescale the
  // density by the same factor
  double scale = std::pow(p.lambda, -1.0 / p.alpha);
  double xs = x * scale;

  switch (opts.method) {
    case Method::Closed: {
      if (p.alpha == 1.0) {
        return make_closed(scale * closed_form_alpha1(xs, p.theta),
                           Strategy::ClosedFormAlpha1);
      }
      if (xs == 0.0) {
        return make_closed(scale * density_at_zero(p.alpha, p.theta),
                           Strategy::ClosedFormZero);
      }
      if (p.alpha == 2.0) {
        return make_closed(scale * gaussian_closed_form(xs),
                           Strategy::ClosedFormGauss);
      }
      throw Error(Errc::DomainError,
                  "no closed form at these parameters; closed forms cover "
                  "alpha = 1, alpha = 2, and x = 0");
    }
    case Method::Series: {
      int n = opts.n_terms ? *opts.n_terms
                           : optimal_terms(p.alpha, opts.eps, opts.n_max)
                                 .n_terms;
      double x_eps =
          threshold_coordinate(p.alpha, n, opts.eps).x_threshold;
      DensityValue out = from_series(xs, p.alpha, p.theta, n, x_eps, scale);
      return out;
    }
    case Method::Quad:
      return from_quadrature(xs, p.alpha, p.theta, opts.eps, scale);
    case Method::Oracle: {
      QuadResult q = fourier_oracle(xs, p.alpha, p.theta, 0.1 * opts.eps);
      DensityValue out;
      out.value = std::max(0.0, scale * q.value);
      out.strategy = Strategy::Oracle;
      out.error_bound = scale * q.err_estimate;
      out.converged = q.converged;
      return out;
    }
    case Method::Auto:
      break;
  }

  if (p.alpha == 1.0) {
    return make_closed(scale * closed_form_alpha1(xs, p.theta),
                       Strategy::ClosedFormAlpha1);
  }
  if (xs == 0.0) {
    return make_closed(scale * density_at_zero(p.alpha, p.theta),
                       Strategy::ClosedFormZero);
  }
  if (p.alpha == 2.0) {
    return make_closed(scale * gaussian_closed_form(xs),
                       Strategy::ClosedFormGauss);
  }

  ReflectedPoint r = reflect(xs, p.theta);
  if (std::fabs(r.theta_star) != 1.0) {
    int n;
    double x_eps;
    if (opts.n_terms) {
      n = *opts.n_terms;
      x_eps = threshold_coordinate(p.alpha, n, opts.eps).x_threshold;
    } else {
      OptimalTerms ot = optimal_terms(p.alpha, opts.eps, opts.n_max);
      n = ot.n_terms;
      x_eps = ot.x_threshold;
    }
    if (r.abs_x >= x_eps) {
      return from_series(xs, p.alpha, p.theta, n, x_eps, scale);
    }
  }
  return from_quadrature(xs, p.alpha, p.theta, opts.eps, scale);
}

DensityValue density(double x, const StableParams& params, double eps) {
  EvalOptions opts;
  opts.eps = eps;
  return density(x, params, opts);
}

}  // namespace stable
