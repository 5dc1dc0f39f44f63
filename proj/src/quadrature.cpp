#include "stable/quadrature.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <vector>

#include "stable/error.hpp"
#include "stable/numerics.hpp"
#include "stable/params.hpp"

namespace stable {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
// low word of pi/2 in double-double
constexpr double kHalfPiLo = 6.123233995736766e-17;

// 15-point Kronrod rule with embedded 7-point Gauss rule
constexpr double kXgk[8] = {
    0.99145537112081263921, 0.94910791234275852453, 0.86486442335976907279,
    0.74153118559939443986, 0.58608723546769113029, 0.40584515137739716691,
    0.20778495500789846760, 0.0};
constexpr double kWgk[8] = {
    0.02293532201052922496, 0.06309209262997855329, 0.10479001032225018384,
    0.14065325971552591875, 0.16900472663926790283, 0.19035057806478540991,
    0.20443294007529889241, 0.20948214108472782801};
constexpr double kWg[4] = {0.12948496616886969327, 0.27970539148927666790,
                           0.38183005050511894495, 0.41795918367346938776};

struct Panel {
  double a;
  double b;
  double value;
  double err;
};

template <class F>
Panel gk15_panel(const F& f, double a, double b, int& evals) {
  double center = 0.5 * (a + b);
  double h = 0.5 * (b - a);
  double fv[15];
  fv[7] = f(center);
  for (int j = 0; j < 7; ++j) {
    fv[j] = f(center - h * kXgk[j]);
    fv[14 - j] = f(center + h * kXgk[j]);
  }
  evals += 15;

  double resk = kWgk[7] * fv[7];
  double resabs = kWgk[7] * std::fabs(fv[7]);
  double resg = kWg[3] * fv[7];
  for (int j = 0; j < 7; ++j) {
    double pair = fv[j] + fv[14 - j];
    resk += kWgk[j] * pair;
    resabs += kWgk[j] * (std::fabs(fv[j]) + std::fabs(fv[14 - j]));
    if (j % 2 == 1) resg += kWg[(j - 1) / 2] * pair;
  }
  double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::fabs(fv[7] - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::fabs(fv[j] - reskh) +
                         std::fabs(fv[14 - j] - reskh));
  }

  double value = resk * h;
  resabs *= h;
  resasc *= h;
  double err = std::fabs((resk - resg) * h);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  if (resabs > DBL_MIN / (50.0 * DBL_EPSILON)) {
    err = std::max(50.0 * DBL_EPSILON * resabs, err);
  }
  return {a, b, value, err};
}

// Globally adaptive bisection: always split the panel with the largest
// error estimate, stop once total_err <= max(epsabs, epsrel |total|).
template <class F>
QuadResult adaptive_gk(const F& f, double a, double b, double epsabs,
                       double epsrel, int max_subdivisions,
                       const std::vector<double>& interior_breaks) {
  int evals = 0;
  std::vector<Panel> panels;
  panels.reserve(16);
  double lo = a;
  for (double brk : interior_breaks) {
    panels.push_back(gk15_panel(f, lo, brk, evals));
    lo = brk;
  }
  panels.push_back(gk15_panel(f, lo, b, evals));

  double total = 0.0;
  double err = 0.0;
  int splits = 0;
  while (true) {
    total = 0.0;
    err = 0.0;
    size_t worst = 0;
    double worst_err = -1.0;
    for (size_t i = 0; i < panels.size(); ++i) {
      total += panels[i].value;
      err += panels[i].err;
      if (panels[i].err > worst_err) {
        worst_err = panels[i].err;
        worst = i;
      }
    }
    if (err <= std::max(epsabs, epsrel * std::fabs(total))) break;
    if (splits >= max_subdivisions) break;
    double mid = 0.5 * (panels[worst].a + panels[worst].b);
    if (!(mid > panels[worst].a && mid < panels[worst].b)) break;
    Panel left = gk15_panel(f, panels[worst].a, mid, evals);
    Panel right = gk15_panel(f, mid, panels[worst].b, evals);
    panels[worst] = left;
    panels.push_back(right);
    ++splits;
  }
  bool converged = err <= std::max(epsabs, epsrel * std::fabs(total));
  return {total, err, evals, converged};
}

// Integrand of the angular representation, in the shifted coordinate
// t = phi + pi theta*/2 over (0, L), L = (pi/2)(1 + theta*). The distance
// to the upper endpoint s = L - t is kept exact (Sterbenz) so the
// endpoint-zero factors can be evaluated without cancellation:
//   sin(alpha t)              = sin(kappa + alpha s)
//   cos(phi)                  = sin(s)
//   cos((1-alpha) t - c)      = sin(kappa + (alpha-1) s)
// with c = (pi/2) theta* and kappa = (pi/2)(2 - alpha(1 + theta*)) carried
// in double-double because it vanishes when alpha(1 + theta*) -> 2.
struct AngularKernel {
  double alpha;
  double theta_star;
  double L;
  double c;
  double kappa_hi;
  double kappa_lo;
  double expo;  // alpha/(1-alpha)
  double lw;    // ln|x|^{alpha/(alpha-1)}
  double lp;    // ln|x|^{1/(alpha-1)}
  double pref;  // alpha/(pi |alpha-1|)

  double log_u(double t, double s) const {
    double f1 = (t <= s) ? std::sin(alpha * t)
                         : std::sin(kappa_hi + alpha * s + kappa_lo);
    double f2 = (s <= t) ? std::sin(s) : std::cos(t - c);
    double f3 = (t <= s)
                    ? std::cos((1.0 - alpha) * t - c)
                    : std::sin(kappa_hi + (alpha - 1.0) * s + kappa_lo);
    if (!(f1 > 0.0) || !(f2 > 0.0) || !(f3 > 0.0)) return kNan;
    double lf2 = std::log(f2);
    return expo * (std::log(f1) - lf2) + std::log(f3) - lf2;
  }

  // ln of the full integrand (-inf where it vanishes)
  double log_integrand(double t) const {
    if (!(t > 0.0)) return -kInf;
    double s = L - t;
    if (!(s > 0.0)) return -kInf;
    double lu = log_u(t, s);
    if (std::isnan(lu)) return -kInf;
    double ex = lw + lu;
    double wu = (ex > 709.0) ? kInf : std::exp(ex);
    return lu + lp - wu;
  }

  double operator()(double t) const {
    double le = log_integrand(t);
    return (le < -745.0) ? 0.0 : std::exp(le);
  }
};

AngularKernel make_kernel(double alpha, double theta_star, double abs_x) {
  AngularKernel k;
  k.alpha = alpha;
  k.theta_star = theta_star;
  k.L = M_PI_2 * (1.0 + theta_star);
  k.c = M_PI_2 * theta_star;
  double two_m = 2.0 - alpha * (1.0 + theta_star);
  k.kappa_hi = M_PI_2 * two_m;
  k.kappa_lo = std::fma(M_PI_2, two_m, -k.kappa_hi) + kHalfPiLo * two_m;
  k.expo = alpha / (1.0 - alpha);
  double lx = std::log(abs_x);
  k.lw = alpha / (alpha - 1.0) * lx;
  k.lp = 1.0 / (alpha - 1.0) * lx;
  k.pref = alpha / (M_PI * std::fabs(alpha - 1.0));
  return k;
}

// Maximum of the log-integrand: coarse geometric scan from both endpoints
// to bracket the peak, then golden-section refinement. The integrand is
// unimodal (concave exponent composed with a monotone ln U).
double find_peak_t(const AngularKernel& k) {
  double L = k.L;
  std::vector<double> ts;
  ts.reserve(95);
  for (int j = 48; j >= 1; --j) ts.push_back(L * std::ldexp(1.0, -j));
  for (int j = 2; j <= 48; ++j) ts.push_back(L - L * std::ldexp(1.0, -j));

  double best = -kInf;
  size_t best_i = 0;
  for (size_t i = 0; i < ts.size(); ++i) {
    double h = k.log_integrand(ts[i]);
    if (h > best) {
      best = h;
      best_i = i;
    }
  }
  if (!std::isfinite(best)) return 0.5 * L;

  double a = (best_i == 0) ? 0.0 : ts[best_i - 1];
  double b = (best_i + 1 == ts.size()) ? L : ts[best_i + 1];
  constexpr double kInvPhi = 0.6180339887498949;
  double c1 = b - kInvPhi * (b - a);
  double d1 = a + kInvPhi * (b - a);
  double fc = k.log_integrand(c1);
  double fd = k.log_integrand(d1);
  while (b - a > 1e-10) {
    if (fc > fd) {
      b = d1;
      d1 = c1;
      fd = fc;
      c1 = b - kInvPhi * (b - a);
      fc = k.log_integrand(c1);
    } else {
      a = c1;
      c1 = d1;
      fc = fd;
      d1 = a + kInvPhi * (b - a);
      fd = k.log_integrand(d1);
    }
  }
  return 0.5 * (a + b);
}

// A narrow peak can hide between the nodes of a wide panel: every node
// lands where the integrand underflows to zero, so the panel reports a
// confident zero and is never refined. Seeding breaks where the
// log-integrand has dropped kSpikeDrop below the peak keeps the panels
// adjacent to the spike comparable to the spike width; the mass outside
// the bracket is at most e^{-kSpikeDrop} of the peak times the interval.
constexpr double kSpikeDrop = 60.0;

double decay_break(const AngularKernel& k, double t_near, double t_far,
                   double target) {
  if (k.log_integrand(t_far) >= target) return t_far;
  for (int i = 0; i < 120; ++i) {
    double mid = 0.5 * (t_near + t_far);
    if (mid == t_near || mid == t_far) break;
    if (k.log_integrand(mid) >= target) {
      t_near = mid;
    } else {
      t_far = mid;
    }
  }
  return t_far;
}

void check_domain(double alpha, double x) {
  if (alpha == 1.0) {
    throw Error(Errc::AlphaOne,
                "the angular representation excludes alpha = 1");
  }
  if (x == 0.0) {
    throw Error(Errc::ZeroCoordinate,
                "the angular representation excludes x = 0");
  }
}

}  // namespace

UKernelPoint u_kernel(double phi, double alpha, double theta_star) {
  validate(alpha, theta_star);
  if (alpha == 1.0) {
    throw Error(Errc::AlphaOne,
                "the angular representation excludes alpha = 1");
  }
  AngularKernel k = make_kernel(alpha, theta_star, 1.0);
  double t = phi + k.c;
  double s = M_PI_2 - phi;
  if (!(t > 0.0) || !(s > 0.0)) return {phi, kNan, false};
  double lu = k.log_u(t, s);
  return {phi, lu, !std::isnan(lu)};
}

double peak_locate(double x, double alpha, double theta_star) {
  validate(alpha, theta_star);
  check_domain(alpha, x);
  AngularKernel k = make_kernel(alpha, theta_star, std::fabs(x));
  if (k.L <= 0.0) return -k.c;
  return find_peak_t(k) - k.c;
}

QuadResult density_integral(double x, double alpha, double theta,
                            const QuadOptions& options) {
  validate(alpha, theta);
  check_domain(alpha, x);
  if (!(options.tol > 0.0) || !std::isfinite(options.tol)) {
    throw Error(Errc::DomainError, "tol must be positive and finite");
  }
  if (!(options.tol_abs >= 0.0)) {
    throw Error(Errc::DomainError, "tol_abs must be nonnegative");
  }
  if (options.max_subdivisions < 1) {
    throw Error(Errc::DomainError, "max_subdivisions must be at least 1");
  }

  ReflectedPoint r = reflect(x, theta);
  AngularKernel k = make_kernel(alpha, r.theta_star, r.abs_x);
  if (k.L <= 0.0) return {0.0, 0.0, 0, true};  // theta* = -1: no mass here

  std::vector<double> breaks;
  if (options.split_at_peak) {
    double t_peak = find_peak_t(k);
    if (t_peak > 0.0 && t_peak < k.L) {
      double top = k.log_integrand(t_peak);
      if (std::isfinite(top)) {
        double lo = decay_break(k, t_peak, 0.0, top - kSpikeDrop);
        double hi = decay_break(k, t_peak, k.L, top - kSpikeDrop);
        if (lo > 0.0 && lo < t_peak) breaks.push_back(lo);
        breaks.push_back(t_peak);
        if (hi > t_peak && hi < k.L) breaks.push_back(hi);
      } else {
        breaks.push_back(t_peak);
      }
    }
  }
  QuadResult q = adaptive_gk(k, 0.0, k.L, options.tol_abs, options.tol,
                             options.max_subdivisions, breaks);
  q.value *= k.pref;
  q.err_estimate *= k.pref;
  // endpoint-zero collisions at the domain boundary reduce confidence
  double m = alpha * (1.0 + r.theta_star);
  if (std::fabs(r.theta_star) >= 1.0 - 1e-9 || m >= 2.0 - 1e-9) {
    q.err_estimate *= 10.0;
  }
  return q;
}

QuadResult density_integral(double x, double alpha, double theta,
                            double tol) {
  QuadOptions options;
  options.tol = tol;
  return density_integral(x, alpha, theta, options);
}

namespace {

// Alternating-series acceleration (van Wijngaarden's variant of Euler's
// transformation). add() returns the increment applied to the running sum.
class EulerAccumulator {
 public:
  double add(double term) {
    if (n_ == 0) {
      wksp_.assign(1, term);
      n_ = 1;
      sum_ = 0.5 * term;
      return sum_;
    }
    double tmp = wksp_[0];
    wksp_[0] = term;
    for (size_t j = 1; j < n_; ++j) {
      double dum = wksp_[j];
      wksp_[j] = 0.5 * (wksp_[j - 1] + tmp);
      tmp = dum;
    }
    wksp_.push_back(0.5 * (wksp_[n_ - 1] + tmp));
    double incr;
    if (std::fabs(wksp_[n_]) <= std::fabs(wksp_[n_ - 1])) {
      incr = 0.5 * wksp_[n_];
      ++n_;
    } else {
      incr = wksp_[n_];
      wksp_.pop_back();
    }
    sum_ += incr;
    return incr;
  }

  double value() const { return sum_; }
  size_t terms() const { return n_; }

 private:
  std::vector<double> wksp_;
  size_t n_ = 0;
  double sum_ = 0.0;
};

struct FourierCtx {
  double x;   // |x| after reflection
  double sb;  // sin((pi/2) alpha theta*)
  double cb;  // cos((pi/2) alpha theta*)
  double alpha;

  double envelope_exp(double t) const { return cb * std::pow(t, alpha); }
  double psi(double t) const { return x * t - sb * std::pow(t, alpha); }
  double dpsi(double t) const {
    return x - sb * alpha * std::pow(t, alpha - 1.0);
  }
  double operator()(double t) const {
    if (!(t > 0.0)) return (t == 0.0) ? 1.0 : 0.0;  // limit at t = 0
    double e = envelope_exp(t);
    return (e > 745.0) ? 0.0 : std::exp(-e) * std::cos(psi(t));
  }
};

// Solve psi(t) = target on [lo, hi] where psi is monotone and the target is
// known to be crossed inside. Plain bisection; psi is cheap.
double phase_crossing(const FourierCtx& ctx, double lo, double hi,
                      double target, double sign_dir) {
  for (int i = 0; i < 90; ++i) {
    double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    if (sign_dir * (ctx.psi(mid) - target) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct StretchSum {
  double value = 0.0;
  double err = 0.0;
  int evals = 0;
  bool converged = true;
};

// Integrate one monotone-phase stretch [a, b] arch by arch between the
// zeros of cos(psi). With extrapolate set, b is a truncation point with the
// envelope still alive: full arches are fed to the Euler accumulator and
// the alternating tail beyond b is taken from the accelerated limit.
StretchSum integrate_stretch(const FourierCtx& ctx, double a, double b,
                             bool extrapolate, double incr_stop) {
  StretchSum out;
  double psi_a = ctx.psi(a);
  double psi_b = ctx.psi(b);
  double dir = (psi_b >= psi_a) ? 1.0 : -1.0;

  double target;
  if (dir > 0.0) {
    target = (std::floor((psi_a - M_PI_2) / M_PI) + 1.0) * M_PI + M_PI_2;
    if (target <= psi_a) target += M_PI;
  } else {
    target = (std::ceil((psi_a - M_PI_2) / M_PI) - 1.0) * M_PI + M_PI_2;
    if (target >= psi_a) target -= M_PI;
  }

  // the t^alpha cusp at t = 0 and the envelope curvature at a stretch start
  // need a tight adaptive pass; interior arches get a per-arch error budget
  // small against the marching stop threshold
  auto piece = [&](double lo, double hi) {
    double eps_abs = (lo == a || lo == 0.0) ? 0.0 : 0.05 * incr_stop;
    QuadResult q = adaptive_gk(ctx, lo, hi, eps_abs, 1e-12, 60, {});
    out.evals += q.evaluations;
    out.err += q.err_estimate;
    return q.value;
  };

  EulerAccumulator euler;
  double direct = 0.0;
  double cur = a;
  bool first_piece = true;
  int small_in_row = 0;
  double last_incr = 0.0;
  bool done = false;
  for (int arch = 0; arch < 20000; ++arch) {
    if (dir * (target - psi_b) > 0.0) {
      // target beyond the stretch: close with the final partial arch, or
      // leave the tail to the accelerated limit when extrapolating
      if (!extrapolate && b > cur) {
        direct += piece(cur, b);
      }
      if (extrapolate) out.err += 2.0 * std::fabs(last_incr);
      done = true;
      break;
    }
    // bracket the crossing, stepping by the local phase speed; the speed
    // is infinite at t = 0 when alpha < 1, where the full interval is the
    // only safe bracket
    double speed = std::fabs(ctx.dpsi(cur));
    double step = (speed > 0.0 && std::isfinite(speed))
                      ? 1.5 * M_PI / speed
                      : (b - cur);
    double hi = std::min(cur + step, b);
    int grow = 0;
    while (dir * (ctx.psi(hi) - target) < 0.0 && grow < 60) {
      step *= 2.0;
      hi = std::min(cur + step, b);
      ++grow;
      if (hi >= b) break;
    }
    double z = phase_crossing(ctx, cur, hi, target, dir);
    double v = piece(cur, z);
    if (first_piece) {
      direct += v;  // partial arch from a to the first zero
      first_piece = false;
    } else if (extrapolate) {
      double incr = euler.add(v);
      last_incr = incr;
      if (std::fabs(incr) < incr_stop &&
          ctx.envelope_exp(z) > 6.9) {  // envelope below 1e-3
        if (++small_in_row >= 2) {
          out.err += 2.0 * std::fabs(incr);
          done = true;
          break;
        }
      } else {
        small_in_row = 0;
      }
    } else {
      direct += v;
    }
    cur = z;
    target += dir * M_PI;
  }
  if (!done) out.converged = false;
  out.value = direct + euler.value();
  return out;
}

}  // namespace

QuadResult fourier_oracle(double x, double alpha, double theta, double tol) {
  validate(alpha, theta);
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw Error(Errc::DomainError, "tol must be positive and finite");
  }
  ReflectedPoint r = reflect(x, theta);
  FourierCtx ctx;
  ctx.x = r.abs_x;
  ctx.alpha = alpha;
  ctx.sb = sin_half_pi(alpha * r.theta_star);
  ctx.cb = sin_half_pi(1.0 - alpha * r.theta_star);
  if (!(ctx.cb > 1e-15)) {
    // characteristic function does not decay (alpha = 1, |theta| = 1)
    return {0.0, kInf, 0, false};
  }

  double budget = std::max(45.0, -std::log(tol) + 12.0);
  double t_env = std::pow(budget / ctx.cb, 1.0 / alpha);
  double t_trunc = (ctx.x > 0.0) ? std::max(50.0, 50.0 / ctx.x) : t_env;
  double t_cut = std::min(t_env, t_trunc);
  bool extrapolate = t_cut < t_env;

  double oscillations =
      (ctx.x * t_env + std::fabs(ctx.sb) * std::pow(t_env, alpha)) / M_PI;
  if (oscillations <= 48.0) {
    QuadResult q = adaptive_gk(ctx, 0.0, t_env, 0.5 * tol * M_PI,
                               0.5 * tol, 200, {});
    q.value /= M_PI;
    q.err_estimate = q.err_estimate / M_PI + std::exp(-budget);
    return q;
  }

  // split at the stationary phase point if it lies inside
  std::vector<std::pair<double, double>> stretches;
  double t_s = 0.0;
  if (ctx.sb > 0.0 && alpha != 1.0) {
    t_s = std::pow(ctx.x / (alpha * ctx.sb), 1.0 / (alpha - 1.0));
  }
  if (t_s > 0.0 && t_s < t_cut) {
    stretches.emplace_back(0.0, t_s);
    stretches.emplace_back(t_s, t_cut);
  } else {
    stretches.emplace_back(0.0, t_cut);
  }

  double total = 0.0;
  double err = 0.0;
  int evals = 0;
  bool converged = true;
  for (size_t i = 0; i < stretches.size(); ++i) {
    bool last = (i + 1 == stretches.size());
    StretchSum s =
        integrate_stretch(ctx, stretches[i].first, stretches[i].second,
                          extrapolate && last, 0.1 * tol * M_PI);
    total += s.value;
    err += s.err;
    evals += s.evals;
    converged = converged && s.converged;
  }
  if (!extrapolate) err += std::exp(-budget);
  return {total / M_PI, err / M_PI, evals, converged};
}

}  // namespace stable
