#pragma once

#include "ricalc/piecewise_expr.hpp"
#include "ricalc/step_function.hpp"

namespace ricalc {

/// Head average (Pf)(t) = (1/t) \int_0^t f.
PiecewiseExpr apply_P(const StepFunction& f);

/// Logarithmic tail integral (Qf)(t) = \int_t^inf f(s) ds/s.
PiecewiseExpr apply_Q(const StepFunction& f);

/// Stieltjes combination (Sf)(t) = (Pf)(t) + (Qf)(t).
PiecewiseExpr apply_S(const StepFunction& f);

/// Power-weighted combination
/// (S_alpha f)(t) = t^{1/alpha - 1} \int_0^t f + \int_t^inf f(s) s^{1/alpha - 1} ds,
/// alpha > 1.
PiecewiseExpr apply_S_alpha(const StepFunction& f, double alpha);

/// Supremum operator T_alpha f(t) = t^{-alpha} sup_{s >= t} s^alpha f*(s),
/// alpha >= 0. Defined through f*, so f need not be monotone.
PiecewiseExpr apply_T_alpha(const StepFunction& f, double alpha);

/// Weighted tail integral Rg(t) = \int_t^inf g(s) s^{gamma/n - 1} ds, 0 < gamma < n.
PiecewiseExpr apply_R(const StepFunction& g, double gamma, double n);

/// Weighted head average R'g(t) = t^{gamma/n - 1} \int_0^t g.
PiecewiseExpr apply_Rprime(const StepFunction& g, double gamma, double n);

/// Level operator f**(t) = (1/t) \int_0^t f*.
PiecewiseExpr doublestar(const StepFunction& f);

/// P applied to a piecewise expression integrable at 0 (e.g. Qf, f**).
PiecewiseExpr compose_P(const PiecewiseExpr& g);

/// Q applied to a piecewise expression with decaying tail (e.g. Pf, f**).
PiecewiseExpr compose_Q(const PiecewiseExpr& g);

/// |\int (Pf) g - \int f (Qg)|; vanishes up to rounding on all step pairs.
double check_PQ_duality(const StepFunction& f, const StepFunction& g);

/// Exact \int_t^inf g(s) s^w ds by per-term antiderivatives; +inf if divergent.
double weighted_tail_integral(const PiecewiseExpr& g, double t, double w);

/// sup_{s >= t} s^w g(s), by sampled scan with golden refinement per segment
/// (assumes the product decays at infinity).
double sup_power_weighted(const PiecewiseExpr& g, double t, double w);

} // namespace ricalc
