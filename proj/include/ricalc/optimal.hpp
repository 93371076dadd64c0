#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ricalc/lz.hpp"
#include "ricalc/operators.hpp"
#include "ricalc/piecewise_expr.hpp"
#include "ricalc/step_function.hpp"

namespace ricalc {

enum class Ternary { False, True, Unknown };

// ---------------------------------------------------------------------------
// Range/domain norm functionals.

/// sigma(f) = ||Q f*||_{X'} — the induced range norm for the maximal operator.
double maximal_range_norm(const StepFunction& f, const LZParams& X);

/// rho(f) = ||f**||_Y — the induced domain norm for the maximal operator.
double maximal_domain_norm(const StepFunction& f, const LZParams& Y);

/// ||R f*||_{X'} with Rg(t) = \int_t^inf g(s) s^{gamma/n - 1} ds — the simple
/// form of the fractional range norm.
double frac_range_norm_simple(const StepFunction& f, const LZParams& X, double gamma,
                              double n);

/// sigma(f) = ||S f*||_{X'} — the induced range norm for the Hilbert transform.
double hilbert_range_norm(const StepFunction& f, const LZParams& X);

/// sigma(f) = ||S_{n/gamma} f*||_{X'} — the induced range norm for the Riesz
/// potential.
double riesz_range_norm(const StepFunction& f, const LZParams& X, double gamma,
                        double n);

struct SupEstimate {
  double lower = 0.0;   // certified lower bound on the equimeasurable supremum
  int candidates = 0;   // placements evaluated
};

/// Lower-bound search for sup over h equimeasurable with f of ||R h||_{X'}:
/// the level blocks of f* are placed as disjoint intervals (identity placement,
/// far translations, and coordinate ascent on the offsets within the budget).
SupEstimate frac_range_norm_sup_estimate(const StepFunction& f, const LZParams& X,
                                         double gamma, double n, int budget = 200);

// ---------------------------------------------------------------------------
// Existence-condition predicates (analytic finiteness tests).

/// chi_(0,1)(t) log(1/t) in X' — range condition for the maximal operator.
Ternary psi_condition(const LZParams& X);

/// min(1, 1/t) in Y — domain condition for the maximal operator.
Ternary maximal_domain_condition(const LZParams& Y);

/// eta = chi_(0,1](1 - log t) + chi_(1,inf)/t in X' — Hilbert condition.
Ternary eta_condition(const LZParams& X);

/// (t+1)^{1/alpha - 1} in X' — Riesz condition with alpha = n/gamma.
Ternary xi_condition(const LZParams& X, double alpha);

/// (1+t)^{gamma/n - 1} in Y — domain condition for the fractional maximal
/// operator.
Ternary frac_domain_condition(const LZParams& Y, double gamma, double n);

/// inf_{t >= 1} phi_X(t) t^{-gamma/n} > 0, evaluated analytically from the
/// asymptotics t^{1/p} l^A(t) of the fundamental function.
bool frac_fund_condition(const LZParams& X, double gamma, double n);

/// Boundedness of T_alpha (alpha = gamma/n) on the space X, by the encoded
/// case split; Unknown for uncertified parameter tuples.
Ternary T_boundedness_predicate(const LZParams& X, double alpha);

/// Direct numerical probe of the same boundedness: head-integral (or head-sup)
/// ratio on a tau-grid; divergent numerator or sustained growth means
/// unbounded.
bool T_boundedness_numeric(const LZParams& X, double alpha);

// ---------------------------------------------------------------------------
// Optimal-partner lookup tables.

enum class ClassicalOperator { MaximalM, FractionalM, HilbertH, RieszI };
enum class PartnerDirection { Range, Domain };

struct OptimalPartnerResult {
  enum class Kind { Lz, Induced, None, Untabulated } kind = Kind::Untabulated;
  std::optional<LZParams> params;    // for Kind::Lz
  std::string norm_description;      // for Kind::Induced
  std::string condition_name;
  Ternary condition_holds = Ternary::Unknown;
};

OptimalPartnerResult optimal_partner_lookup(ClassicalOperator op, const LZParams& X,
                                            PartnerDirection direction,
                                            double gamma = 0.0, double n = 1.0);

// ---------------------------------------------------------------------------
// Lemma-level checks.

/// Continuous piecewise-linear function, linear between nodes and constant
/// beyond the last node; nodes start at (0, 0).
struct PiecewiseLinear {
  std::vector<double> xs; // increasing, xs[0] = 0
  std::vector<double> ys; // ys[0] = 0

  double eval(double t) const;
};

/// Builds min_j c_j * min(t, m_j) — a concave nondecreasing (hence
/// quasiconcave) piecewise-linear function.
PiecewiseLinear quasiconcave_from_lines(const std::vector<double>& slopes,
                                        const std::vector<double>& caps);

struct UnsupCheck {
  double lhs = 0.0; // \int_0^tau sup_{t <= s} phi(s) f(s) dt
  double rhs = 0.0; // \int_0^tau (phi f)*(t) dt
  bool pass = true; // lhs <= 6 rhs
};

/// Exact evaluation of both sides of the supremum-vs-rearrangement estimate
/// with constant 6, for quasiconcave phi and nonincreasing step f.
UnsupCheck lemma_unsup_check(const PiecewiseLinear& phi, const StepFunction& f,
                             double tau);

struct LenkaCheck {
  double lhs = 0.0;  // || \int_t^inf u(s) s^{-beta} ds ||_X
  double rhs = 0.0;  // || sum a_i t_i^{1-beta} chi_(0,t_i) ||_X
  double ratio = 0.0;
};

/// Both sides of the simple-function reduction with I(t) = t^beta, beta < 1.
LenkaCheck lemma_lenka_check(const std::vector<double>& a, const std::vector<double>& t,
                             double beta, const LZParams& X);

} // namespace ricalc
