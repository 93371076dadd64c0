#include <doctest.h>

#include <cmath>

#include "ricalc/operators.hpp"
#include "ricalc/piecewise_expr.hpp"
#include "ricalc/quadrature.hpp"
#include "ricalc/step_function.hpp"

using namespace ricalc;

TEST_CASE("head average of an indicator") {
  const StepFunction f = StepFunction::indicator(0.0, 1.0);
  const PiecewiseExpr p = apply_P(f);
  CHECK(p.eval(0.5) == doctest::Approx(1.0));
  CHECK(p.eval(2.0) == doctest::Approx(0.5));
  CHECK(p.eval(10.0) == doctest::Approx(0.1));
}

TEST_CASE("log tail integral of a two-step function") {
  const StepFunction f({1.0, 3.0}, {2.0, 1.0});
  const PiecewiseExpr q = apply_Q(f);
  // Q f(1) = int_1^3 ds/s = log 3.
  CHECK(q.eval(1.0) == doctest::Approx(std::log(3.0)));
  CHECK(q.eval(0.5) == doctest::Approx(2.0 * std::log(2.0) + std::log(3.0)));
  CHECK(q.eval(4.0) == 0.0);
}

TEST_CASE("integral of the head-average tail and log singularity") {
  // int_0^1 (1 - log t) dt = 2.
  const PiecewiseExpr s = apply_S(StepFunction::indicator(0.0, 1.0));
  CHECK(integrate(s, 0.0, 1.0) == doctest::Approx(2.0));
  // Divergent improper integrals signal infinity, not garbage.
  const PiecewiseExpr p = apply_P(StepFunction::indicator(0.0, 1.0));
  CHECK(std::isinf(integrate(p, 1.0, kInf)));
}

TEST_CASE("power-weighted combination at alpha = 2") {
  const StepFunction f = StepFunction::indicator(0.0, 1.0);
  const PiecewiseExpr s2 = apply_S_alpha(f, 2.0);
  // t <= 1: t^{-1/2} t + 2(1 - sqrt t) = sqrt t + 2 - 2 sqrt t.
  CHECK(s2.eval(1.0) == doctest::Approx(1.0));
  CHECK(s2.eval(0.25) == doctest::Approx(2.0 - 0.5));
  CHECK(s2.eval(4.0) == doctest::Approx(0.5));
}

TEST_CASE("supremum operator on a nonmonotone step function") {
  const StepFunction f({1.0, 2.0}, {1.0, 2.0});
  const PiecewiseExpr t1 = apply_T_alpha(f, 1.0);
  // f* = 2 on (0,1), 1 on (1,2): sup_{s>=t} s f*(s) = 2 for t <= 1 (and = 2 at
  // s = 2), so T f(t) = 2/t up to the end of the support.
  CHECK(t1.eval(0.5) == doctest::Approx(4.0));
  CHECK(t1.eval(1.5) == doctest::Approx(2.0 / 1.5));
  CHECK(t1.eval(3.0) == 0.0);
}

TEST_CASE("weighted tail integral of an indicator") {
  const StepFunction chi = StepFunction::indicator(0.0, 1.0);
  const PiecewiseExpr r = apply_R(chi, 0.5, 1.0);
  // R chi(t) = int_t^1 s^{-1/2} ds = 2 (1 - sqrt t) for t <= 1.
  CHECK(r.eval(0.25) == doctest::Approx(1.0));
  CHECK(r.eval(1.0) == doctest::Approx(0.0));
  CHECK(r.eval(0.0 + 1e-14) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("operator compositions agree with the sum form") {
  const StepFunction f({0.7, 2.0, 5.0}, {3.0, 1.0, 0.5});
  const PiecewiseExpr S = apply_S(f);
  const PiecewiseExpr PQ = compose_P(apply_Q(f));
  const PiecewiseExpr QP = compose_Q(apply_P(f));
  for (double t : {0.1, 0.7, 1.0, 2.0, 3.3, 5.0, 8.0}) {
    CHECK(PQ.eval(t) == doctest::Approx(S.eval(t)).epsilon(1e-10));
    CHECK(QP.eval(t) == doctest::Approx(S.eval(t)).epsilon(1e-10));
  }
}

TEST_CASE("duality of the head and tail operators") {
  const StepFunction f({1.0, 2.5}, {2.0, 1.0});
  const StepFunction g({0.5, 3.0}, {1.0, 0.5});
  CHECK(check_PQ_duality(f, g) < 1e-12);
}

TEST_CASE("weighted tail integral helper matches closed forms") {
  const PiecewiseExpr pf = apply_P(StepFunction::indicator(0.0, 1.0));
  // int_1^inf (1/s) s^{-1/2} ds = 2.
  CHECK(weighted_tail_integral(pf, 1.0, -0.5) == doctest::Approx(2.0));
  // Divergent weight signals infinity.
  CHECK(std::isinf(weighted_tail_integral(pf, 1.0, 0.5)));
}

TEST_CASE("weighted supremum helper") {
  const PiecewiseExpr fss = doublestar(StepFunction::indicator(0.0, 1.0));
  // s^{1/2} min(1, 1/s): increasing to 1 at s = 1, then s^{-1/2}: sup over
  // [t, inf) is 1 for t <= 1 and t^{-1/2} beyond.
  CHECK(sup_power_weighted(fss, 0.1, 0.5) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(sup_power_weighted(fss, 4.0, 0.5) == doctest::Approx(0.5).epsilon(1e-6));
}
