#pragma once

#include <cstddef>
#include <vector>

namespace ricalc {

/// Compactly supported, nonnegative, piecewise-constant function on (0, inf).
/// The function equals values[i] on (breakpoints[i-1], breakpoints[i]) with
/// an implicit left endpoint 0, and vanishes beyond the last breakpoint.
/// Construction canonicalizes: adjacent equal values are merged and trailing
/// zero segments are dropped, so structural equality is function equality.
class StepFunction {
 public:
  StepFunction() = default;
  StepFunction(std::vector<double> breakpoints, std::vector<double> values);

  static StepFunction indicator(double a, double b, double value = 1.0);
  static StepFunction zero() { return StepFunction(); }

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t segment_count() const { return values_.size(); }
  bool is_zero() const { return values_.empty(); }

  /// Right edge of the support (0 for the zero function).
  double support_bound() const;

  double operator()(double t) const;
  bool operator==(const StepFunction& other) const;

  /// Total integral over (0, inf).
  double total_integral() const;

 private:
  std::vector<double> breakpoints_; // strictly increasing, > 0
  std::vector<double> values_;      // nonnegative, canonical
};

/// Nonincreasing rearrangement f*.
StepFunction rearrange(const StepFunction& f);

bool is_nonincreasing(const StepFunction& f);

/// Dilation (D_a f)(t) = f(a t); breakpoints scale by 1/a.
StepFunction dilate(const StepFunction& f, double a);

/// Lebesgue measure of {f > lambda} (strict inequality).
double distribution(const StepFunction& f, double lambda);

/// Integral over (a, b) with 0 <= a < b <= inf.
double integrate(const StepFunction& f, double a, double b);

/// Pointwise sum on the union grid.
StepFunction add(const StepFunction& f, const StepFunction& g);

/// Pointwise scaling by c >= 0.
StepFunction scale(const StepFunction& f, double c);

/// Exact \int f g over (0, inf).
double inner_product(const StepFunction& f, const StepFunction& g);

/// Partial integral \int_0^t f.
double partial_integral(const StepFunction& f, double t);

struct HlpResult {
  bool holds = true;
  double fails_at = 0.0; // first grid point where the relation is violated
};

/// Hardy-Littlewood-Polya relation: \int_0^t f* <= \int_0^t g* for all t.
HlpResult hlp_compare(const StepFunction& f, const StepFunction& g);

} // namespace ricalc
