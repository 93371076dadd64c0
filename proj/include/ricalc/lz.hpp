#pragma once

#include <optional>

#include "ricalc/operators.hpp"
#include "ricalc/piecewise_expr.hpp"
#include "ricalc/step_function.hpp"

namespace ricalc {

/// Parameter tuple (p, q, A = [a0, aI], optional B = [b0, bI]) of a
/// Lorentz-Zygmund functional; p and q may be kInf. The doublestar variant
/// measures the level function f** instead of f*.
struct LZParams {
  double p = 1.0;
  double q = 1.0;
  double a0 = 0.0;
  double aI = 0.0;
  bool has_B = false;
  double b0 = 0.0;
  double bI = 0.0;
  bool use_doublestar = false;
};

/// Two-branch broken logarithm: (1 - log t)^{a0} on (0,1), (1 + log t)^{aI}
/// on [1, inf); continuous at 1 with value 1.
double broken_log(double t, double a0, double aI);

/// Iterated version: (1 + log(1 - log t))^{b0} on (0,1), (1 + log(1 + log t))^{bI}
/// on [1, inf).
double broken_loglog(double t, double b0, double bI);

/// Log-coordinate forms (u = log t), safe for |u| beyond the range where
/// exp(u) over/underflows.
double broken_log_u(double u, double a0, double aI);
double broken_loglog_u(double u, double b0, double bI);

/// p, q in [1, inf] — the tuple is evaluable as a functional.
bool lz_valid(const LZParams& x);

/// The tuple is one of the certified rearrangement-invariant-norm cases:
/// 1 < p < inf with 1 <= q <= inf; or p = q = 1 with a0 >= 0 >= aI; or
/// p = q = inf with a0 <= 0 <= aI. Other tuples are quasi-norms at best.
bool lz_certified_ri(const LZParams& x);

/// p = inf, q < inf tuples whose only finite-functional element is 0.
bool lz_trivial_space(const LZParams& x);

/// The functional is an exact norm with no equivalence constant:
/// p = q, A = B = 0.
bool lz_exact_norm(const LZParams& x);

/// Associate-space parameters from the encoded table:
/// (p, q, A) -> (p', q', -A) for 1 < p < inf;
/// (1, 1, A) -> (inf, inf, -A) for a0 >= 0 >= aI.
/// Anything else (including nonzero B) is not in the table.
std::optional<LZParams> associate_params(const LZParams& x);

/// Norm of a nonnegative nonincreasing piecewise expression g (taken as its
/// own rearrangement): || t^{1/p - 1/q} l^A(t) ll^B(t) g(t) ||_q.
/// Returns kInf when the analytic finiteness test says the integral/sup
/// diverges; the test is exact (exponent comparisons, never overflow).
double lz_norm_nonincreasing(const PiecewiseExpr& g, const LZParams& x);

/// Norm of a step function: rearranges (or takes the level function for the
/// doublestar variant) and defers to lz_norm_nonincreasing.
double lz_norm(const StepFunction& f, const LZParams& x);

/// Norm of the indicator of a set of measure t.
double fundamental_function(const LZParams& x, double t);

/// ||f||_X ||g||_{X'} - \int f g (a Hoelder defect); requires the associate
/// parameters to be in the table.
double holder_defect(const StepFunction& f, const StepFunction& g, const LZParams& x);

} // namespace ricalc
