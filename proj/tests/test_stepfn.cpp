#include <doctest.h>

#include "ricalc/step_function.hpp"

using namespace ricalc;

TEST_CASE("canonicalization merges equal neighbors and drops trailing zeros") {
  const StepFunction f({1.0, 2.0, 3.0, 4.0}, {2.0, 2.0, 1.0, 0.0});
  CHECK(f.segment_count() == 2);
  CHECK(f.breakpoints() == std::vector<double>{2.0, 3.0});
  CHECK(f.support_bound() == 3.0);
  CHECK(f(1.5) == 2.0);
  CHECK(f(2.5) == 1.0);
  CHECK(f(5.0) == 0.0);
}

TEST_CASE("rearrangement sorts level blocks by value") {
  const StepFunction f({1.0, 2.0, 3.0}, {1.0, 3.0, 2.0});
  const StepFunction fs = rearrange(f);
  CHECK(is_nonincreasing(fs));
  CHECK(fs(0.5) == 3.0);
  CHECK(fs(1.5) == 2.0);
  CHECK(fs(2.5) == 1.0);
  CHECK(fs.total_integral() == doctest::Approx(f.total_integral()));
  CHECK(rearrange(fs) == fs);
}

TEST_CASE("distribution uses strict inequality") {
  const StepFunction f({1.0, 3.0}, {2.0, 1.0});
  CHECK(distribution(f, 0.0) == doctest::Approx(3.0));
  CHECK(distribution(f, 1.0) == doctest::Approx(1.0));
  CHECK(distribution(f, 1.5) == doctest::Approx(1.0));
  CHECK(distribution(f, 2.0) == doctest::Approx(0.0));
}

TEST_CASE("partial integrals and inner products are exact") {
  const StepFunction f({1.0, 2.0}, {2.0, 1.0});
  CHECK(partial_integral(f, 0.5) == doctest::Approx(1.0));
  CHECK(partial_integral(f, 1.5) == doctest::Approx(2.5));
  CHECK(partial_integral(f, 10.0) == doctest::Approx(3.0));
  const StepFunction g({1.5}, {3.0});
  CHECK(inner_product(f, g) == doctest::Approx(2.0 * 3.0 * 1.0 + 1.0 * 3.0 * 0.5));
}

TEST_CASE("dilation scales breakpoints by 1/a") {
  const StepFunction f({2.0}, {1.0});
  const StepFunction d = dilate(f, 2.0);
  CHECK(d.support_bound() == doctest::Approx(1.0));
  CHECK(d(0.5) == 1.0);
}

TEST_CASE("running-integral comparison detects order and violations") {
  const StepFunction g({1.0, 2.0}, {2.0, 1.0});
  const StepFunction f = StepFunction::indicator(0.0, 2.0, 1.5); // prefix average
  CHECK(hlp_compare(f, g).holds);
  CHECK_FALSE(hlp_compare(g, StepFunction::indicator(0.0, 1.0)).holds);
}
