#pragma once

#include <functional>
#include <vector>

#include "ricalc/step_function.hpp"

namespace ricalc {

/// Compactly supported, nonnegative step function on the real line:
/// value values[i] on (breakpoints[i], breakpoints[i+1]), zero outside.
struct LineStepFunction {
  std::vector<double> breakpoints; // increasing, size = values.size() + 1
  std::vector<double> values;      // nonnegative

  LineStepFunction() = default;
  LineStepFunction(std::vector<double> bps, std::vector<double> vals);

  double operator()(double x) const;
  double total_integral() const;
  bool is_zero() const { return values.empty(); }
};

/// Nonincreasing rearrangement onto (0, inf).
StepFunction rearrange_line(const LineStepFunction& f);

/// Uncentered maximal function M f(x) = sup over intervals containing x of the
/// average of f; exact via candidate-endpoint enumeration.
double maximal_function_at(const LineStepFunction& f, double x);

/// Exact Lebesgue measure of { M f > lambda } (lambda > 0), via the closed-form
/// solution set of each candidate-endpoint branch.
double maximal_distribution(const LineStepFunction& f, double lambda);

/// (M f)*(t), by bisection on the exact distribution.
double maximal_rearrangement_at(const LineStepFunction& f, double t);

/// Fractional uncentered maximal function with weight |I|^{gamma - 1} (n = 1);
/// exact candidate endpoints plus closed-form interior stationary points.
double fractional_maximal_at(const LineStepFunction& f, double gamma, double x);

struct HilbertValue {
  double value = 0.0;
  bool at_breakpoint = false; // the closed form degenerates; value is +-inf-ish
};

/// Hilbert transform (1/pi) pv-integral of f(y)/(x-y): closed logarithmic form.
HilbertValue hilbert_transform(const LineStepFunction& f, double x);

/// Riesz potential (I_gamma f)(x) = c(gamma) \int f(y) |x-y|^{gamma-1} dy with
/// the Gamma-function normalization constant (n = 1).
double riesz_potential(const LineStepFunction& f, double gamma, double x);

/// The normalization constant c(gamma) at n = 1.
double riesz_constant(double gamma);

/// Grid-based rearrangement of a sampled nonnegative function on [lo, hi]:
/// uniform cells, midpoint samples, sorted into a step function.
StepFunction empirical_rearrangement(const std::function<double(double)>& g, double lo,
                                     double hi, int cells);

} // namespace ricalc
