#pragma once

#include <vector>

#include "ricalc/step_function.hpp"

namespace ricalc {

/// One term c * t^beta * (log t)^logpow. A constant is beta = 0, logpow = 0;
/// a pure power has logpow = 0; a logarithm has beta = 0, logpow = 1.
struct ExprTerm {
  double c = 0.0;
  double beta = 0.0;
  int logpow = 0; // 0, 1 or 2
};

/// Terms valid on the open interval (lo, hi); hi may be +inf.
struct ExprSegment {
  double lo = 0.0;
  double hi = 0.0;
  std::vector<ExprTerm> terms;
};

/// Leading behavior coeff * t^beta * (log t)^logpow at an endpoint; coeff = 0
/// means the function vanishes identically near that endpoint.
struct Asymptote {
  double coeff = 0.0;
  double beta = 0.0;
  int logpow = 0;
};

/// Exact symbolic image of an operator applied to a step function: finitely
/// many segments partitioning (0, inf), each a sum of power/log terms.
class PiecewiseExpr {
 public:
  PiecewiseExpr() = default;
  explicit PiecewiseExpr(std::vector<ExprSegment> segments);

  static PiecewiseExpr zero();
  static PiecewiseExpr from_step(const StepFunction& f);

  const std::vector<ExprSegment>& segments() const { return segments_; }
  bool is_zero() const;

  double eval(double t) const;

  /// Interior segment boundaries (useful as critical points).
  std::vector<double> boundaries() const;

  Asymptote behavior_at_zero() const;
  Asymptote behavior_at_infinity() const;

 private:
  std::vector<ExprSegment> segments_; // contiguous, first lo = 0, last hi = inf
};

/// Exact antiderivative-based integral of a single term over (a, b) within one
/// segment; improper endpoints allowed, +inf when divergent.
double term_integral(const ExprTerm& term, double a, double b);

/// Exact integral over (a, b) with 0 <= a < b <= inf; +inf when any improper
/// endpoint diverges (decided analytically from exponents, never by overflow).
double integrate(const PiecewiseExpr& g, double a, double b);

/// Exact \int_0^inf g * f for step f (refines to the common grid).
double inner_product(const PiecewiseExpr& g, const StepFunction& f);

/// Pointwise sum.
PiecewiseExpr add(const PiecewiseExpr& g, const PiecewiseExpr& h);

/// Pointwise scaling.
PiecewiseExpr scale(const PiecewiseExpr& g, double c);

} // namespace ricalc
