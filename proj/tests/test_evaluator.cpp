#include <cmath>
#include <limits>

#include "doctest.h"
#include "reference_values.hpp"
#include "stable/error.hpp"
#include "stable/evaluator.hpp"
#include "test_support.hpp"

using stable::closed_form_alpha1;
using stable::density;
using stable::density_at_zero;
using stable::DensityValue;
using stable::Errc;
using stable::EvalOptions;
using stable::gaussian_closed_form;
using stable::Method;
using stable::StableParams;
using stable::Strategy;
using testsup::rel_close;
using testsup::thrown_code;

TEST_CASE("closed forms") {
  CHECK(rel_close(closed_form_alpha1(1.0, 0.5), refvals::alpha1_x1_t05,
                  1e-14));
  CHECK(rel_close(closed_form_alpha1(0.0, 0.0), 1.0 / M_PI, 1e-15));

  // theta = +-1 degenerates: zero density away from the atom
  CHECK(closed_form_alpha1(2.0, 1.0) == 0.0);
  CHECK(closed_form_alpha1(-3.0, -1.0) == 0.0);
  CHECK(thrown_code([] { closed_form_alpha1(1.0, 1.0); }) ==
        Errc::DegenerateAtom);
  CHECK(thrown_code([] { closed_form_alpha1(-1.0, -1.0); }) ==
        Errc::DegenerateAtom);

  CHECK(rel_close(density_at_zero(1.4, 0.2), refvals::density_zero_a14_t02,
                  1e-13));
  CHECK(rel_close(density_at_zero(0.7, 0.4), density_at_zero(0.7, -0.4),
                  1e-15));
  CHECK(rel_close(gaussian_closed_form(1.0), refvals::gauss_x1, 1e-15));
}

TEST_CASE("density matches the cross-checked table") {
  for (const refvals::DensityRef& row : refvals::density_table) {
    CAPTURE(row.x);
    CAPTURE(row.alpha);
    CAPTURE(row.theta);
    DensityValue v = density(row.x, StableParams{row.alpha, row.theta}, 1e-8);
    CHECK(v.converged);
    CHECK(v.value >= 0.0);
    CHECK(rel_close(v.value, row.value, 1e-7));
  }
}

TEST_CASE("auto dispatch picks the documented strategy") {
  CHECK(density(1.5, StableParams{1.0, 0.5}).strategy ==
        Strategy::ClosedFormAlpha1);

  DensityValue zero = density(0.0, StableParams{1.4, 0.2});
  CHECK(zero.strategy == Strategy::ClosedFormZero);
  CHECK(rel_close(zero.value, refvals::density_zero_a14_t02, 1e-13));

  CHECK(density(1.0, StableParams{2.0, 0.0}).strategy ==
        Strategy::ClosedFormGauss);

  DensityValue far = density(30.0, StableParams{0.7, 0.2});
  CHECK(far.strategy == Strategy::SeriesTail);
  CHECK(far.converged);
  CHECK(far.n_terms.has_value());
  CHECK(far.x_threshold.has_value());
  REQUIRE(far.error_bound.has_value());
  CHECK(*far.error_bound <= 1e-5);

  CHECK(density(0.05, StableParams{0.7, 0.2}).strategy == Strategy::Integral);

  // series is excluded on the one-sided boundary
  CHECK(density(2.0, StableParams{0.5, 1.0}).strategy == Strategy::Integral);
  DensityValue off_support = density(-2.0, StableParams{0.5, 1.0});
  CHECK(off_support.value == 0.0);
  CHECK(off_support.converged);
}

TEST_CASE("degenerate atom at alpha = 1, theta = +-1") {
  CHECK(thrown_code([] { density(1.0, StableParams{1.0, 1.0}); }) ==
        Errc::DegenerateAtom);
  CHECK(thrown_code([] { density(-1.0, StableParams{1.0, -1.0}); }) ==
        Errc::DegenerateAtom);
  CHECK(density(2.0, StableParams{1.0, 1.0}).value == 0.0);

  // the atom sits at x = lambda * theta after rescaling
  CHECK(thrown_code([] { density(2.0, StableParams{1.0, 1.0, 2.0}); }) ==
        Errc::DegenerateAtom);
}

TEST_CASE("lambda rescales coordinate and density together") {
  struct Case {
    double x, alpha, theta, lambda;
  };
  const Case cases[] = {{2.3, 0.7, 0.3, 4.0}, {-1.2, 1.5, -0.2, 0.5}};
  for (const Case& c : cases) {
    CAPTURE(c.alpha);
    double s = std::pow(c.lambda, -1.0 / c.alpha);
    double scaled = density(c.x, StableParams{c.alpha, c.theta, c.lambda},
                            1e-8)
                        .value;
    double standard =
        s * density(s * c.x, StableParams{c.alpha, c.theta}, 1e-8).value;
    CHECK(rel_close(scaled, standard, 1e-13));
  }

  // closed-form paths scale the same way
  DensityValue g = density(1.5, StableParams{2.0, 0.0, 9.0});
  CHECK(rel_close(g.value, gaussian_closed_form(0.5) / 3.0, 1e-14));
  DensityValue c1 = density(1.5, StableParams{1.0, 0.5, 3.0});
  CHECK(rel_close(c1.value, closed_form_alpha1(0.5, 0.5) / 3.0, 1e-14));
}

TEST_CASE("explicit method selection") {
  EvalOptions series;
  series.method = Method::Series;
  series.n_terms = 30;
  DensityValue s = density(10.0, StableParams{0.7, 0.2}, series);
  CHECK(s.strategy == Strategy::SeriesTail);
  CHECK(s.n_terms == 30);
  CHECK(s.converged);

  // below the certification threshold the value is reported unconverged
  DensityValue below = density(0.05, StableParams{0.7, 0.2}, series);
  CHECK(below.strategy == Strategy::SeriesTail);
  CHECK(!below.converged);
  CHECK(std::isfinite(below.value));

  EvalOptions quad;
  quad.method = Method::Quad;
  quad.eps = 1e-7;
  DensityValue q = density(10.0, StableParams{0.7, 0.2}, quad);
  CHECK(q.strategy == Strategy::Integral);
  CHECK(rel_close(q.value, s.value, 1e-6));

  EvalOptions closed;
  closed.method = Method::Closed;
  CHECK(density(0.0, StableParams{1.3, 0.2}, closed).strategy ==
        Strategy::ClosedFormZero);
  CHECK(thrown_code([&] { density(1.0, StableParams{1.3, 0.2}, closed); }) ==
        Errc::DomainError);

  EvalOptions oracle;
  oracle.method = Method::Oracle;
  DensityValue o = density(1.0, StableParams{0.7, 0.2}, oracle);
  CHECK(o.strategy == Strategy::Oracle);
  CHECK(rel_close(o.value, 0.15047640539743604, 1e-6));
}

TEST_CASE("evaluator input guards") {
  CHECK(thrown_code([] { density(std::nan(""), StableParams{0.7, 0.2}); }) ==
        Errc::DomainError);
  CHECK(thrown_code([] {
          density(std::numeric_limits<double>::infinity(),
                  StableParams{0.7, 0.2});
        }) == Errc::DomainError);
  CHECK(thrown_code([] { density(1.0, StableParams{0.7, 0.2}, 0.0); }) ==
        Errc::DomainError);
  CHECK(thrown_code([] { density(1.0, StableParams{2.5, 0.0}); }) ==
        Errc::AlphaOutOfRange);
  CHECK(thrown_code([] { density(1.0, StableParams{0.7, 0.2, -1.0}); }) ==
        Errc::LambdaNonPositive);

  EvalOptions bad_n;
  bad_n.n_terms = 0;
  CHECK(thrown_code([&] { density(1.0, StableParams{0.7, 0.2}, bad_n); }) ==
        Errc::DomainError);
  EvalOptions bad_cap;
  bad_cap.n_max = 0;
  CHECK(thrown_code([&] { density(1.0, StableParams{0.7, 0.2}, bad_cap); }) ==
        Errc::DomainError);
}

TEST_CASE("evaluator reflection symmetry is bitwise") {
  CHECK(density(-2.0, StableParams{0.7, 0.3}, 1e-6).value ==
        density(2.0, StableParams{0.7, -0.3}, 1e-6).value);
  CHECK(density(-1.5, StableParams{1.0, 0.5}).value ==
        density(1.5, StableParams{1.0, -0.5}).value);
}
