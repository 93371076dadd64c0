#include "ricalc/optimal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ricalc/quadrature.hpp"

namespace ricalc {

namespace {

constexpr double kExpTol = 1e-9;

double inv(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

PiecewiseExpr psi_expr() {
  return PiecewiseExpr({{0.0, 1.0, {{-1.0, 0.0, 1}}}, {1.0, kInf, {}}});
}

PiecewiseExpr eta_expr() {
  return PiecewiseExpr(
      {{0.0, 1.0, {{1.0, 0.0, 0}, {-1.0, 0.0, 1}}}, {1.0, kInf, {{1.0, -1.0, 0}}}});
}

// Finiteness proxy for (t+1)^{e} with e < 0: constant near zero, t^{e} at
// infinity. The proxy brackets the function up to constants, so membership in
// any Lorentz-Zygmund space is equivalent.
PiecewiseExpr shifted_power_proxy(double e) {
  return PiecewiseExpr({{0.0, 1.0, {{1.0, 0.0, 0}}}, {1.0, kInf, {{1.0, e, 0}}}});
}

PiecewiseExpr min_one_over_t_expr() {
  return PiecewiseExpr({{0.0, 1.0, {{1.0, 0.0, 0}}}, {1.0, kInf, {{1.0, -1.0, 0}}}});
}

Ternary finite_in(const PiecewiseExpr& g, const LZParams& space) {
  if (!lz_valid(space)) return Ternary::Unknown;
  return std::isinf(lz_norm_nonincreasing(g, space)) ? Ternary::False : Ternary::True;
}

Ternary finite_in_associate(const PiecewiseExpr& g, const LZParams& X) {
  const auto assoc = associate_params(X);
  if (!assoc) return Ternary::Unknown;
  return finite_in(g, *assoc);
}

LZParams require_associate(const LZParams& X) {
  const auto assoc = associate_params(X);
  if (!assoc) throw std::invalid_argument("associate parameters not in table");
  return *assoc;
}

// Divergence near the improper endpoint of \int t^{s-1} |log t|^m dt.
bool weight_diverges(double s, double m) {
  if (s > kExpTol) return false;
  if (s < -kExpTol) return true;
  return m >= -1.0 - kExpTol;
}

// \int_0^tau t^{e-1} l^{A q}(t) dt in log coordinates.
double head_weight_integral(double e, double a0q, double aIq, double tau) {
  auto J = [&](double u) { return std::exp(e * u) * broken_log_u(u, a0q, aIq); };
  const double utau = std::log(tau);
  if (utau <= 0.0) return integrate_left_tail(J, utau);
  return integrate_left_tail(J, 0.0) + adaptive_simpson(J, 0.0, utau);
}

// sup_{0<t<=tau} t^{e} l^A(t).
double head_weight_sup(double e, double a0, double aI, double tau) {
  auto h = [&](double u) { return std::exp(e * u) * broken_log_u(u, a0, aI); };
  const double utau = std::log(tau);
  return scan_maximum(h, std::min(utau, 0.0) - 46.0, utau, 257);
}

} // namespace

// ---------------------------------------------------------------------------
// Norm functionals.

double maximal_range_norm(const StepFunction& f, const LZParams& X) {
  if (f.is_zero()) return 0.0;
  return lz_norm_nonincreasing(apply_Q(rearrange(f)), require_associate(X));
}

double maximal_domain_norm(const StepFunction& f, const LZParams& Y) {
  if (f.is_zero()) return 0.0;
  return lz_norm_nonincreasing(doublestar(f), Y);
}

double frac_range_norm_simple(const StepFunction& f, const LZParams& X, double gamma,
                              double n) {
  if (f.is_zero()) return 0.0;
  return lz_norm_nonincreasing(apply_R(rearrange(f), gamma, n), require_associate(X));
}

double hilbert_range_norm(const StepFunction& f, const LZParams& X) {
  if (f.is_zero()) return 0.0;
  return lz_norm_nonincreasing(apply_S(rearrange(f)), require_associate(X));
}

double riesz_range_norm(const StepFunction& f, const LZParams& X, double gamma,
                        double n) {
  if (f.is_zero()) return 0.0;
  return lz_norm_nonincreasing(apply_S_alpha(rearrange(f), n / gamma),
                               require_associate(X));
}

SupEstimate frac_range_norm_sup_estimate(const StepFunction& f, const LZParams& X,
                                         double gamma, double n, int budget) {
  SupEstimate result;
  if (f.is_zero()) return result;
  const LZParams Xp = require_associate(X);
  const StepFunction fs = rearrange(f);

  // Level blocks of f*: lengths and values.
  std::vector<double> lengths, values;
  double prev = 0.0;
  for (std::size_t i = 0; i < fs.values().size(); ++i) {
    lengths.push_back(fs.breakpoints()[i] - prev);
    values.push_back(fs.values()[i]);
    prev = fs.breakpoints()[i];
  }
  const std::size_t m = lengths.size();

  auto evaluate = [&](std::vector<double> offsets) -> double {
    // Sanitize into disjoint intervals (stable order by offset).
    std::vector<std::size_t> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return offsets[a] < offsets[b]; });
    std::vector<double> bps, vals;
    double cursor = 0.0;
    for (std::size_t k : idx) {
      double start = std::max(offsets[k], cursor);
      if (start > cursor) {
        bps.push_back(start);
        vals.push_back(0.0);
      }
      cursor = start + lengths[k];
      bps.push_back(cursor);
      vals.push_back(values[k]);
    }
    const StepFunction h(std::move(bps), std::move(vals));
    ++result.candidates;
    return lz_norm_nonincreasing(apply_R(h, gamma, n), Xp);
  };

  auto cumulative = [&](double shift) {
    std::vector<double> o(m);
    double c = shift;
    for (std::size_t i = 0; i < m; ++i) {
      o[i] = c;
      c += lengths[i];
    }
    return o;
  };

  // Identity placement (h = f*) and far translations of the whole profile.
  std::vector<double> best_offsets = cumulative(0.0);
  result.lower = evaluate(best_offsets);
  for (double r : {1.0, 10.0, 100.0, 1000.0, 10000.0}) {
    const auto o = cumulative(r);
    const double val = evaluate(o);
    if (val > result.lower) {
      result.lower = val;
      best_offsets = o;
    }
  }
  // Spread placements: blocks separated by widening gaps.
  for (double gap : {1.0, 10.0, 100.0}) {
    std::vector<double> o(m);
    double c = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      o[i] = c;
      c += lengths[i] + gap;
    }
    const double val = evaluate(o);
    if (val > result.lower) {
      result.lower = val;
      best_offsets = o;
    }
  }
  // Coordinate ascent on the offsets (multiplicative moves) within budget.
  bool improved = true;
  while (improved && result.candidates < budget) {
    improved = false;
    for (std::size_t i = 0; i < m && result.candidates < budget; ++i) {
      for (double factor : {2.0, 0.5}) {
        std::vector<double> o = best_offsets;
        o[i] = o[i] > 0.0 ? o[i] * factor : (factor > 1.0 ? lengths[i] : 0.0);
        const double val = evaluate(o);
        if (val > result.lower * (1.0 + 1e-12)) {
          result.lower = val;
          best_offsets = o;
          improved = true;
        }
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Condition predicates.

Ternary psi_condition(const LZParams& X) { return finite_in_associate(psi_expr(), X); }

Ternary maximal_domain_condition(const LZParams& Y) {
  return finite_in(min_one_over_t_expr(), Y);
}

Ternary eta_condition(const LZParams& X) { return finite_in_associate(eta_expr(), X); }

Ternary xi_condition(const LZParams& X, double alpha) {
  if (!(alpha > 1.0)) throw std::invalid_argument("xi condition requires alpha > 1");
  return finite_in_associate(shifted_power_proxy(1.0 / alpha - 1.0), X);
}

Ternary frac_domain_condition(const LZParams& Y, double gamma, double n) {
  if (!(gamma > 0.0 && gamma < n)) throw std::invalid_argument("need 0 < gamma < n");
  return finite_in(shifted_power_proxy(gamma / n - 1.0), Y);
}

bool frac_fund_condition(const LZParams& X, double gamma, double n) {
  const double d = inv(X.p) - gamma / n;
  if (d > kExpTol) return true;
  if (d < -kExpTol) return false;
  if (X.aI > kExpTol) return true;
  if (X.aI < -kExpTol) return false;
  return !X.has_B || X.bI >= 0.0;
}

Ternary T_boundedness_predicate(const LZParams& X, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("T boundedness requires alpha in (0,1)");
  if (!lz_certified_ri(X)) return Ternary::Unknown;
  const double critical = 1.0 / alpha; // = n/gamma
  if (!std::isinf(X.q)) {
    return X.p < critical - kExpTol ? Ternary::True : Ternary::False;
  }
  if (X.p < critical - kExpTol) return Ternary::True;
  if (std::abs(X.p - critical) <= kExpTol)
    return (X.a0 <= 0.0 && X.aI >= 0.0) ? Ternary::True : Ternary::False;
  return Ternary::False;
}

bool T_boundedness_numeric(const LZParams& X, double alpha) {
  const double invp = inv(X.p);
  // The ratio test needs tau far beyond the transient scale exp(1/eps) of
  // near-critical parameters; all integrals run in log coordinates, so very
  // large tau costs nothing.
  const std::vector<double> taus = {1e-4, 1.0, 1e2, 1e4, 1e8, 1e16, 1e32, 1e64};
  const double growth_threshold = 1.5;
  if (!std::isinf(X.q)) {
    const double q = X.q;
    const double e_num = q * (invp - alpha);
    const double e_den = q * invp;
    if (weight_diverges(e_num, q * X.a0)) return false; // numerator blows up at 0
    if (weight_diverges(e_den, q * X.a0)) return true;  // ratio is trivially zero
    std::vector<double> F;
    for (double tau : taus) {
      const double num = head_weight_integral(e_num, q * X.a0, q * X.aI, tau);
      const double den = head_weight_integral(e_den, q * X.a0, q * X.aI, tau);
      F.push_back(std::pow(tau, alpha) * std::pow(num / den, 1.0 / q));
    }
    return F.back() / F[F.size() - 4] < growth_threshold;
  }
  // q = infinity: supremum version of the same ratio.
  const double e_num = invp - alpha;
  const bool num_blows_up =
      e_num < -kExpTol || (std::abs(e_num) <= kExpTol && X.a0 > kExpTol);
  const bool den_blows_up = invp < kExpTol && X.a0 > kExpTol;
  if (num_blows_up) return den_blows_up; // infinite/infinite treated as vacuous
  std::vector<double> F;
  for (double tau : taus) {
    const double num = head_weight_sup(e_num, X.a0, X.aI, tau);
    const double den = head_weight_sup(invp, X.a0, X.aI, tau);
    F.push_back(std::pow(tau, alpha) * num / den);
  }
  return F.back() / F[F.size() - 4] < growth_threshold;
}

// ---------------------------------------------------------------------------
// Optimal-partner lookup.

namespace {

OptimalPartnerResult lz_result(LZParams y, std::string condition, Ternary holds) {
  OptimalPartnerResult r;
  r.kind = OptimalPartnerResult::Kind::Lz;
  r.params = y;
  r.condition_name = std::move(condition);
  r.condition_holds = holds;
  return r;
}

OptimalPartnerResult induced_result(std::string desc, std::string condition,
                                    Ternary holds) {
  OptimalPartnerResult r;
  r.kind = OptimalPartnerResult::Kind::Induced;
  r.norm_description = std::move(desc);
  r.condition_name = std::move(condition);
  r.condition_holds = holds;
  return r;
}

OptimalPartnerResult none_result(std::string condition) {
  OptimalPartnerResult r;
  r.kind = OptimalPartnerResult::Kind::None;
  r.condition_name = std::move(condition);
  r.condition_holds = Ternary::False;
  return r;
}

OptimalPartnerResult untabulated_result(std::string condition, Ternary holds) {
  OptimalPartnerResult r;
  r.kind = OptimalPartnerResult::Kind::Untabulated;
  r.condition_name = std::move(condition);
  r.condition_holds = holds;
  return r;
}

OptimalPartnerResult lookup_maximal_range(const LZParams& X) {
  const Ternary cond = psi_condition(X);
  const bool p1 = X.p == 1.0 && X.q == 1.0;
  if (p1 && X.a0 >= 1.0 && X.aI < -1.0) {
    LZParams y = X;
    y.a0 -= 1.0;
    y.aI -= 1.0;
    return lz_result(y, "psi-in-associate", cond);
  }
  if (p1 && X.a0 >= 1.0 && X.aI >= -1.0 && X.aI <= 0.0) {
    return induced_result(
        "||f||_{Y'} = sup_t l^{-A}(t) Integral_t^inf f*(s) ds/s",
        "psi-in-associate", cond);
  }
  if (1.0 < X.p && !std::isinf(X.p)) return lz_result(X, "psi-in-associate", cond);
  if (std::isinf(X.p) && !std::isinf(X.q) && X.a0 + 1.0 / X.q < 0.0)
    return lz_result(X, "psi-in-associate", cond);
  if (std::isinf(X.p) && std::isinf(X.q) && X.a0 <= 0.0)
    return lz_result(X, "psi-in-associate", cond);
  if (cond == Ternary::False) return none_result("psi-in-associate");
  return untabulated_result("psi-in-associate", cond);
}

OptimalPartnerResult lookup_fractional_range(const LZParams& X, double gamma, double n) {
  const double crit = n / gamma;
  const bool fund = frac_fund_condition(X, gamma, n);
  const Ternary cond = fund ? Ternary::True : Ternary::False;
  if (X.p == 1.0 && X.q == 1.0 && X.a0 >= 0.0 && X.aI <= 0.0) {
    return induced_result(
        "||f||_{Y1'} = sup_t l^{-A}(t) Integral_t^inf f*(s) s^{gamma/n-1} ds",
        "fundamental-decay", cond);
  }
  if (1.0 < X.p && X.p < crit - kExpTol) {
    LZParams y = X;
    y.p = n * X.p / (n - gamma * X.p);
    return lz_result(y, "fundamental-decay", cond);
  }
  if (std::abs(X.p - crit) <= kExpTol) {
    if (std::isinf(X.q) && X.a0 <= 0.0 && X.aI >= 0.0) {
      LZParams y = X;
      y.p = kInf;
      return lz_result(y, "fundamental-decay", cond);
    }
    if (!std::isinf(X.q) && X.aI >= 0.0) {
      return induced_result(
          "||f||_{Y2'} = sup_{h~f} || t^{1-gamma/n-1/q'} l^{-A}(t) "
          "Integral_t^inf h(s) s^{gamma/n-1} ds ||_{q'}",
          "fundamental-decay", cond);
    }
    if (std::isinf(X.q) && X.a0 > 0.0 && X.aI >= 0.0) {
      return induced_result(
          "||f||_{Y2'} = sup_{h~f} || t^{1-gamma/n-1/q'} l^{-A}(t) "
          "Integral_t^inf h(s) s^{gamma/n-1} ds ||_{q'}",
          "fundamental-decay", cond);
    }
  }
  if (!fund) return none_result("fundamental-decay");
  return untabulated_result("fundamental-decay", cond);
}

OptimalPartnerResult lookup_hilbert_range(const LZParams& X) {
  const Ternary cond = eta_condition(X);
  if (X.p == 1.0 && X.q == 1.0 && X.a0 >= 1.0 && X.aI < 0.0) {
    LZParams y = X;
    y.a0 -= 1.0;
    y.aI -= 1.0;
    return lz_result(y, "eta-in-associate", cond);
  }
  if (1.0 < X.p && !std::isinf(X.p)) return lz_result(X, "eta-in-associate", cond);
  if (std::isinf(X.p) && !std::isinf(X.q)) {
    const double qp = X.q == 1.0 ? kInf : X.q / (X.q - 1.0);
    const bool case_q1 = X.q == 1.0 && X.a0 < -1.0 && X.aI >= 0.0;
    const bool case_q = X.q > 1.0 && X.a0 + 1.0 / X.q < 0.0 && X.aI + 1.0 / qp > 0.0;
    if (case_q1 || case_q) {
      return induced_result(
          "||f||_{Y'} = || Integral_t^inf f**(s) ds/s ||_{L^{(1,q';-A-1)}}",
          "eta-in-associate", cond);
    }
  }
  if (std::isinf(X.p) && std::isinf(X.q) && X.a0 <= 0.0 && X.aI > 1.0) {
    LZParams y = X;
    y.a0 -= 1.0;
    y.aI -= 1.0;
    return lz_result(y, "eta-in-associate", cond);
  }
  if (cond == Ternary::False) return none_result("eta-in-associate");
  return untabulated_result("eta-in-associate", cond);
}

OptimalPartnerResult lookup_riesz_range(const LZParams& X, double gamma, double n) {
  const double crit = n / gamma;
  const Ternary cond = xi_condition(X, crit);
  if (X.p == 1.0 && X.q == 1.0 && X.a0 >= 0.0 && X.aI <= 0.0) {
    return induced_result(
        "||f||_{Y1'} = sup_t l^{-A}(t) Integral_t^inf f**(s) s^{gamma/n-1} ds",
        "xi-in-associate", cond);
  }
  if (1.0 < X.p && X.p < crit - kExpTol) {
    LZParams y = X;
    y.p = n * X.p / (n - gamma * X.p);
    return lz_result(y, "xi-in-associate", cond);
  }
  if (std::abs(X.p - crit) <= kExpTol) {
    const double invqp = std::isinf(X.q) ? 1.0 : 1.0 - 1.0 / X.q; // 1/q'
    if (X.a0 < invqp && X.aI > invqp) {
      LZParams y = X;
      y.p = kInf;
      y.a0 -= 1.0;
      y.aI -= 1.0;
      return lz_result(y, "xi-in-associate", cond);
    }
    if (X.q > 1.0 && X.a0 == invqp && X.aI > invqp) {
      LZParams y;
      y.p = kInf;
      y.q = X.q;
      y.a0 = std::isinf(X.q) ? 0.0 : -1.0 / X.q;
      y.aI = X.aI - 1.0;
      y.has_B = true;
      y.b0 = -1.0;
      y.bI = 0.0;
      return lz_result(y, "xi-in-associate", cond);
    }
    if (X.q == 1.0 && X.a0 < 0.0 && X.aI == 0.0) {
      return induced_result(
          "||f||_{Y2} = ||f||_inf + || t^{-1/q} l^{aI-1}(t) f*(t) ||_{L^q(1,inf)}",
          "xi-in-associate", cond);
    }
    if (X.q == 1.0 && X.a0 == 0.0 && X.aI > 0.0) {
      return induced_result(
          "||f|| = || t^{-1} l^{[-1,aI-1]}(t) ll^{[-1,0]}(t) lll^{[-1,0]}(t) f*(t) "
          "||_{L^1}",
          "xi-in-associate", cond);
    }
    if (X.q == 1.0 && X.a0 >= 0.0 && X.aI == 0.0) {
      LZParams y;
      y.p = kInf;
      y.q = kInf;
      return lz_result(y, "xi-in-associate", cond);
    }
    if (X.q == 1.0 && X.a0 > 0.0 && X.aI > 0.0) {
      return induced_result(
          "||f||_{Y3} = || t^{-1} l^{a0-1}(t) f*(t) ||_{L^1(0,1)}",
          "xi-in-associate", cond);
    }
    if (X.q > 1.0 && X.a0 > invqp && X.aI > invqp) {
      return induced_result(
          "||f||_{Y2} = ||f||_inf + || t^{-1/q} l^{aI-1}(t) f*(t) ||_{L^q(1,inf)}",
          "xi-in-associate", cond);
    }
  }
  if (cond == Ternary::False) return none_result("xi-in-associate");
  return untabulated_result("xi-in-associate", cond);
}

} // namespace

OptimalPartnerResult optimal_partner_lookup(ClassicalOperator op, const LZParams& X,
                                            PartnerDirection direction, double gamma,
                                            double n) {
  if (direction == PartnerDirection::Domain) {
    if (op == ClassicalOperator::MaximalM) {
      const Ternary cond = maximal_domain_condition(X);
      if (cond == Ternary::True)
        return induced_result("||f|| = ||f**||_Y", "min(1,1/t)-in-target", cond);
      if (cond == Ternary::False) return none_result("min(1,1/t)-in-target");
      return untabulated_result("min(1,1/t)-in-target", cond);
    }
    if (op == ClassicalOperator::FractionalM) {
      const Ternary cond = frac_domain_condition(X, gamma, n);
      return untabulated_result("(1+t)^{gamma/n-1}-in-target", cond);
    }
    return untabulated_result("", Ternary::Unknown);
  }
  switch (op) {
    case ClassicalOperator::MaximalM:
      return lookup_maximal_range(X);
    case ClassicalOperator::FractionalM:
      return lookup_fractional_range(X, gamma, n);
    case ClassicalOperator::HilbertH:
      return lookup_hilbert_range(X);
    case ClassicalOperator::RieszI:
      return lookup_riesz_range(X, gamma, n);
  }
  return untabulated_result("", Ternary::Unknown);
}

// ---------------------------------------------------------------------------
// Lemma-level checks.

double PiecewiseLinear::eval(double t) const {
  if (t <= 0.0) return 0.0;
  if (t >= xs.back()) return ys.back();
  auto it = std::upper_bound(xs.begin(), xs.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - xs.begin());
  const double x0 = xs[i - 1], x1 = xs[i];
  const double y0 = ys[i - 1], y1 = ys[i];
  return y0 + (y1 - y0) * (t - x0) / (x1 - x0);
}

PiecewiseLinear quasiconcave_from_lines(const std::vector<double>& slopes,
                                        const std::vector<double>& caps) {
  if (slopes.empty() || slopes.size() != caps.size())
    throw std::invalid_argument("need matching nonempty slope/cap lists");
  for (std::size_t j = 0; j < slopes.size(); ++j)
    if (!(slopes[j] > 0.0) || !(caps[j] > 0.0))
      throw std::invalid_argument("slopes and caps must be positive");
  auto phi = [&](double t) {
    double v = kInf;
    for (std::size_t j = 0; j < slopes.size(); ++j)
      v = std::min(v, slopes[j] * std::min(t, caps[j]));
    return v;
  };
  // Candidate kinks: every cap, plus every crossing of an uncapped line with a
  // capped one.
  std::vector<double> xs_cand;
  for (std::size_t j = 0; j < slopes.size(); ++j) {
    xs_cand.push_back(caps[j]);
    for (std::size_t k = 0; k < slopes.size(); ++k)
      xs_cand.push_back(slopes[k] * caps[k] / slopes[j]);
  }
  std::sort(xs_cand.begin(), xs_cand.end());
  xs_cand.erase(std::unique(xs_cand.begin(), xs_cand.end()), xs_cand.end());
  PiecewiseLinear out;
  out.xs.push_back(0.0);
  out.ys.push_back(0.0);
  for (double x : xs_cand) {
    if (x <= 0.0) continue;
    out.xs.push_back(x);
    out.ys.push_back(phi(x));
  }
  return out;
}

UnsupCheck lemma_unsup_check(const PiecewiseLinear& phi, const StepFunction& f,
                             double tau) {
  for (std::size_t i = 0; i + 1 < phi.ys.size(); ++i)
    if (phi.ys[i] > phi.ys[i + 1] + 1e-12)
      throw std::invalid_argument("phi must be nondecreasing");
  for (std::size_t i = 1; i < phi.xs.size(); ++i) {
    const double r0 = phi.ys[i - 1] / std::max(phi.xs[i - 1], 1e-300);
    const double r1 = phi.ys[i] / phi.xs[i];
    if (i > 1 && r1 > r0 * (1.0 + 1e-9))
      throw std::invalid_argument("phi(t)/t must be nonincreasing");
  }
  UnsupCheck out;
  if (f.is_zero() || !(tau > 0.0)) return out;
  if (!is_nonincreasing(f)) throw std::invalid_argument("f must be nonincreasing");

  // Common grid: cells on which f is constant and phi is linear.
  std::vector<double> grid;
  grid.insert(grid.end(), f.breakpoints().begin(), f.breakpoints().end());
  for (double x : phi.xs)
    if (x > 0.0 && x < f.support_bound()) grid.push_back(x);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  const std::size_t m = grid.size();
  std::vector<double> lo(m), hi(m), fv(m), ya(m), yb(m);
  double prev = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    lo[i] = prev;
    hi[i] = grid[i];
    fv[i] = f(0.5 * (prev + grid[i]));
    ya[i] = fv[i] * phi.eval(lo[i]);
    yb[i] = fv[i] * phi.eval(hi[i]);
    prev = grid[i];
  }

  // lhs: sup_{s >= t} phi(s) f(s) is constant on each cell because phi is
  // nondecreasing (the in-cell supremum sits at the right edge).
  std::vector<double> sup_from(m + 1, 0.0);
  for (std::size_t i = m; i-- > 0;) sup_from[i] = std::max(sup_from[i + 1], yb[i]);
  double lhs = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double a = lo[i], b = std::min(hi[i], tau);
    if (b > a) lhs += sup_from[i] * (b - a);
  }
  out.lhs = lhs;

  // rhs: layer-cake form of \int_0^tau (phi f)*: integrate min(tau, d(lambda))
  // where d is the (piecewise-linear) distribution function of phi*f.
  auto dist = [&](double lambda) {
    double meas = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double len = hi[i] - lo[i];
      if (lambda < ya[i]) {
        meas += len;
      } else if (lambda < yb[i]) {
        meas += len * (yb[i] - lambda) / (yb[i] - ya[i]);
      }
    }
    return meas;
  };
  std::vector<double> levels = {0.0};
  for (std::size_t i = 0; i < m; ++i) {
    levels.push_back(ya[i]);
    levels.push_back(yb[i]);
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  double rhs = 0.0;
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    double l0 = levels[k], l1 = levels[k + 1];
    double d0 = dist(l0), d1 = dist(l1);
    // d is linear on (l0, l1); clip at tau, splitting at the crossing.
    if (d0 <= tau && d1 <= tau) {
      rhs += 0.5 * (d0 + d1) * (l1 - l0);
    } else if (d0 >= tau && d1 >= tau) {
      rhs += tau * (l1 - l0);
    } else {
      // d decreasing: d0 > tau >= d1.
      const double cross = l0 + (l1 - l0) * (d0 - tau) / (d0 - d1);
      rhs += tau * (cross - l0) + 0.5 * (tau + d1) * (l1 - cross);
    }
  }
  out.rhs = rhs;
  out.pass = lhs <= 6.0 * rhs * (1.0 + 1e-9) + 1e-12;
  return out;
}

LenkaCheck lemma_lenka_check(const std::vector<double>& a, const std::vector<double>& t,
                             double beta, const LZParams& X) {
  if (a.size() != t.size() || a.empty())
    throw std::invalid_argument("need matching nonempty coefficient/breakpoint lists");
  if (!(beta > 0.0 && beta < 1.0))
    throw std::invalid_argument("beta must lie in (0,1)");
  StepFunction u, v;
  for (std::size_t i = 0; i < a.size(); ++i) {
    u = add(u, StepFunction::indicator(0.0, t[i], a[i]));
    v = add(v, StepFunction::indicator(0.0, t[i], a[i] * std::pow(t[i], 1.0 - beta)));
  }
  LenkaCheck out;
  // \int_t^inf u(s) s^{-beta} ds is the weighted tail integral with exponent
  // gamma/n - 1 = -beta.
  out.lhs = lz_norm_nonincreasing(apply_R(u, 1.0 - beta, 1.0), X);
  out.rhs = lz_norm(v, X);
  out.ratio = out.rhs > 0.0 ? out.lhs / out.rhs : 0.0;
  return out;
}

} // namespace ricalc
