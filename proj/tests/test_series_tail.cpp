#include <cmath>

#include "doctest.h"
#include "reference_values.hpp"
#include "stable/error.hpp"
#include "stable/series_tail.hpp"
#include "test_support.hpp"

using stable::classify_regime;
using stable::Errc;
using stable::log_remainder_bound;
using stable::Regime;
using stable::remainder_bound;
using stable::tail_density;
using stable::tail_term;
using stable::TailSeriesResult;
using testsup::rel_close;
using testsup::thrown_code;

TEST_CASE("regime classification") {
  CHECK(classify_regime(0.5) == Regime::ConvergentAll);
  CHECK(classify_regime(1.0) == Regime::ConvergentOutsideUnit);
  CHECK(classify_regime(1.5) == Regime::Asymptotic);
}

TEST_CASE("tail_term") {
  // the n = 0 summand vanishes identically
  CHECK(tail_term(0, 2.0, 0.7, 0.2) == 0.0);
  CHECK(tail_term(0, 0.3, 1.9, 0.0) == 0.0);
  CHECK(tail_term(-2, 2.0, 0.7, 0.2) == 0.0);

  CHECK(rel_close(tail_term(2, 10.0, 0.7, 0.2),
                  refvals::tail_term_n2_x10_a07_t02, 1e-13));

  // exact zeros of the sine factor
  CHECK(tail_term(2, 5.0, 1.0, 0.0) == 0.0);
  CHECK(tail_term(4, 2.0, 0.5, 1.0) == 0.0);

  // alternating signs while the sine factor stays positive
  CHECK(tail_term(1, 3.0, 0.7, 0.0) > 0.0);
  CHECK(tail_term(2, 3.0, 0.7, 0.0) < 0.0);
}

TEST_CASE("partial sums match the high-precision oracle") {
  struct Case {
    double x, alpha, theta, want;
    int n;
    Regime regime;
  };
  const Case cases[] = {
      {10.0, 0.7, 0.2, refvals::tail_sum_x10_a07_t02_n30, 30,
       Regime::ConvergentAll},
      {50.0, 1.3, 0.1, refvals::tail_sum_x50_a13_t01_n10, 10,
       Regime::Asymptotic},
      {3.0, 1.0, 0.5, refvals::tail_sum_x3_a10_t05_n25, 25,
       Regime::ConvergentOutsideUnit},
      {5.0, 0.3, -0.9, refvals::tail_sum_x5_a03_tm09_n40, 40,
       Regime::ConvergentAll},
  };
  for (const Case& c : cases) {
    CAPTURE(c.x);
    CAPTURE(c.alpha);
    TailSeriesResult r = tail_density(c.x, c.alpha, c.theta, c.n);
    CHECK(rel_close(r.value, c.want, 1e-11));
    CHECK(r.n_terms == c.n);
    CHECK(r.regime == c.regime);
    CHECK(r.remainder_bound == remainder_bound(c.x, c.alpha, c.n));
  }
}

TEST_CASE("series reflection symmetry is bitwise") {
  CHECK(tail_density(-7.3, 0.7, 0.2, 20).value ==
        tail_density(7.3, 0.7, -0.2, 20).value);
  CHECK(tail_density(-2.5, 1.3, -0.4, 15).value ==
        tail_density(2.5, 1.3, 0.4, 15).value);
}

TEST_CASE("gaussian series vanishes term by term") {
  // alpha = 2: every power coefficient is zero, the density decays faster
  CHECK(tail_density(3.0, 2.0, 0.0, 10).value == 0.0);
}

TEST_CASE("series error reporting") {
  CHECK(thrown_code([] { tail_density(0.0, 0.7, 0.2, 10); }) ==
        Errc::ZeroCoordinate);
  CHECK(thrown_code([] { tail_density(2.0, 0.7, 0.2, 0); }) ==
        Errc::DomainError);
  CHECK(thrown_code([] { tail_density(2.0, 0.6, 1.0, 10); }) ==
        Errc::ThetaBoundary);
  // reflection lands on theta* = +1
  CHECK(thrown_code([] { tail_density(-2.0, 0.6, -1.0, 10); }) ==
        Errc::ThetaBoundary);
  CHECK(thrown_code([] { tail_density(2.0, 2.5, 0.0, 10); }) ==
        Errc::AlphaOutOfRange);
  // asymptotic terms blow past 1e300 well before 200 terms at x = 0.5
  CHECK(thrown_code([] { tail_density(0.5, 1.9, 0.0, 200); }) ==
        Errc::DivergedTerm);
}

TEST_CASE("remainder bound") {
  CHECK(rel_close(remainder_bound(10.0, 0.7, 3), refvals::remainder_x10_a07_n3,
                  1e-12));

  // log form agrees with the direct form
  struct Probe {
    double x, alpha;
    int n;
  };
  for (const Probe& p : {Probe{5.0, 0.7, 10}, Probe{2.0, 1.3, 30},
                         Probe{1.5, 1.0, 7}}) {
    CAPTURE(p.x);
    CHECK(rel_close(std::exp(log_remainder_bound(std::log(p.x), p.alpha, p.n)),
                    remainder_bound(p.x, p.alpha, p.n), 1e-12));
  }

  // strictly decreasing in x
  CHECK(remainder_bound(2.0, 0.7, 10) > remainder_bound(5.0, 0.7, 10));
  CHECK(remainder_bound(5.0, 0.7, 10) > remainder_bound(20.0, 0.7, 10));

  // graceful saturation at the double range edges
  CHECK(remainder_bound(1e300, 0.7, 30) == 0.0);
  CHECK(std::isinf(remainder_bound(1e-300, 1.9, 90)));

  // the log form stays finite far outside double range
  double lr = log_remainder_bound(2000.0, 0.7, 30);
  CHECK(std::isfinite(lr));
  CHECK(lr < -10000.0);

  CHECK(thrown_code([] { remainder_bound(0.0, 0.7, 3); }) ==
        Errc::DomainError);
  CHECK(thrown_code([] { remainder_bound(2.0, 0.7, 0); }) ==
        Errc::DomainError);
}

TEST_CASE("remainder bound dominates the truncation error") {
  // convergent regime: compare against a much longer partial sum
  double short_sum = tail_density(3.0, 0.7, 0.2, 5).value;
  double long_sum = tail_density(3.0, 0.7, 0.2, 30).value;
  CHECK(std::fabs(long_sum - short_sum) <= remainder_bound(3.0, 0.7, 5));
}
