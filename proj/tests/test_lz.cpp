#include <doctest.h>

#include <cmath>

#include "ricalc/lz.hpp"
#include "ricalc/operators.hpp"
#include "ricalc/quadrature.hpp"
#include "ricalc/step_function.hpp"

using namespace ricalc;

namespace {
LZParams make(double p, double q, double a0 = 0.0, double aI = 0.0) {
  LZParams x;
  x.p = p;
  x.q = q;
  x.a0 = a0;
  x.aI = aI;
  return x;
}
} // namespace

TEST_CASE("broken logarithm values") {
  CHECK(broken_log(1.0, 2.0, 3.0) == doctest::Approx(1.0));
  CHECK(broken_log(std::exp(-1.0), 2.0, 0.0) == doctest::Approx(4.0));
  CHECK(broken_log(std::exp(1.0), 0.0, 3.0) == doctest::Approx(8.0));
  // Mixed-sign exponents on the two branches.
  CHECK(broken_log(std::exp(-1.0), 1.0, -1.0) == doctest::Approx(2.0));
  CHECK(broken_loglog(std::exp(-1.0), 2.0, 0.0) ==
        doctest::Approx(std::pow(1.0 + std::log(2.0), 2.0)));
}

TEST_CASE("indicator norms match the Lorentz closed form") {
  // ||chi_(0,a)||_{p,q} = (p/q)^{1/q} a^{1/p}.
  for (double a : {0.5, 1.0, 3.0}) {
    const StepFunction chi = StepFunction::indicator(0.0, a);
    CHECK(lz_norm(chi, make(2, 1)) ==
          doctest::Approx(2.0 * std::sqrt(a)).epsilon(1e-9));
    CHECK(lz_norm(chi, make(2, 2)) == doctest::Approx(std::sqrt(a)).epsilon(1e-9));
    CHECK(lz_norm(chi, make(3, 1.5)) ==
          doctest::Approx(std::pow(2.0, 1.0 / 1.5) * std::pow(a, 1.0 / 3.0))
              .epsilon(1e-9));
    CHECK(fundamental_function(make(2, 1), a) ==
          doctest::Approx(2.0 * std::sqrt(a)).epsilon(1e-9));
  }
}

TEST_CASE("sup norms and infinite cases") {
  const StepFunction f({1.0, 2.0}, {2.0, 1.0});
  CHECK(lz_norm(f, make(kInf, kInf)) == doctest::Approx(2.0));
  // L^{2,inf} of the indicator: sup t^{1/2} over (0,1) = 1.
  CHECK(lz_norm(StepFunction::indicator(0.0, 1.0), make(2, kInf)) ==
        doctest::Approx(1.0).epsilon(1e-9));
  // L^1 of a tail-heavy expression diverges.
  const PiecewiseExpr pf = apply_P(StepFunction::indicator(0.0, 1.0));
  CHECK(std::isinf(lz_norm_nonincreasing(pf, make(1, 1))));
  // ... but the L^2 norm of min(1, 1/t) is sqrt 2.
  CHECK(lz_norm_nonincreasing(pf, make(2, 2)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("doublestar variant measures the level function") {
  LZParams x = make(2, 2);
  x.use_doublestar = true;
  // ||min(1,1/t)||_2 = sqrt 2 for chi_(0,1).
  CHECK(lz_norm(StepFunction::indicator(0.0, 1.0), x) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("classification helpers") {
  CHECK(lz_valid(make(1, 1)));
  CHECK_FALSE(lz_valid(make(0.5, 1)));
  CHECK(lz_certified_ri(make(2, 7)));
  CHECK(lz_certified_ri(make(1, 1, 1.0, -2.0)));
  CHECK_FALSE(lz_certified_ri(make(1, 1, -1.0, 0.0)));
  CHECK(lz_certified_ri(make(kInf, kInf, -1.0, 1.0)));
  CHECK_FALSE(lz_certified_ri(make(1, 2)));
  CHECK(lz_exact_norm(make(2, 2)));
  CHECK_FALSE(lz_exact_norm(make(2, 1)));
  // p = inf with q < inf and a0 + 1/q >= 0: only the zero function is finite.
  CHECK(lz_trivial_space(make(kInf, 2)));
  CHECK_FALSE(lz_trivial_space(make(kInf, 2, -1.0, 0.0)));
}

TEST_CASE("associate parameters") {
  const auto a = associate_params(make(2, 1, 1.0, -1.0));
  REQUIRE(a.has_value());
  CHECK(a->p == doctest::Approx(2.0));
  CHECK(std::isinf(a->q));
  CHECK(a->a0 == doctest::Approx(-1.0));
  CHECK(a->aI == doctest::Approx(1.0));
  const auto b = associate_params(make(1, 1, 1.0, -1.0));
  REQUIRE(b.has_value());
  CHECK(std::isinf(b->p));
  CHECK(b->a0 == doctest::Approx(-1.0));
  CHECK_FALSE(associate_params(make(1, 2)).has_value());
}

TEST_CASE("Hoelder defect is nonnegative") {
  const StepFunction f({1.0, 2.0}, {2.0, 1.0});
  const StepFunction g({0.5, 1.5}, {1.0, 3.0});
  CHECK(holder_defect(f, g, make(2, 2)) >= -1e-9);
  CHECK(holder_defect(f, g, make(1.5, 1.5)) >= -1e-9);
}

TEST_CASE("log-weighted norms") {
  // For p = q = 2 the weight t^{1/p - 1/q} drops out and the squared norm of
  // chi_(0,1) is int_0^1 (1 - log t)^2 dt = 5.
  const StepFunction chi = StepFunction::indicator(0.0, 1.0);
  const double v = lz_norm(chi, make(2, 2, 1.0, -1.0));
  CHECK(v == doctest::Approx(std::sqrt(5.0)).epsilon(1e-9));
}
