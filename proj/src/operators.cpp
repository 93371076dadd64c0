#include "ricalc/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ricalc/quadrature.hpp"

namespace ricalc {

namespace {

// Exact term expansion of the antiderivative of c * t^beta * (log t)^k.
std::vector<ExprTerm> antiderivative_terms(const ExprTerm& t) {
  const double c = t.c;
  if (t.beta == -1.0) {
    return {{c / (t.logpow + 1.0), 0.0, t.logpow + 1}};
  }
  const double b1 = t.beta + 1.0;
  switch (t.logpow) {
    case 0:
      return {{c / b1, b1, 0}};
    case 1:
      return {{c / b1, b1, 1}, {-c / (b1 * b1), b1, 0}};
    default:
      return {{c / b1, b1, 2},
              {-2.0 * c / (b1 * b1), b1, 1},
              {2.0 * c / (b1 * b1 * b1), b1, 0}};
  }
}

double eval_term(const ExprTerm& t, double x) {
  double v = t.c;
  if (t.beta != 0.0) v *= std::pow(x, t.beta);
  const double lx = std::log(x);
  for (int k = 0; k < t.logpow; ++k) v *= lx;
  return v;
}

double eval_antiderivative(const std::vector<ExprTerm>& terms, double x) {
  double v = 0.0;
  for (const ExprTerm& t : terms) v += eval_term(t, x);
  return v;
}

} // namespace

PiecewiseExpr apply_P(const StepFunction& f) {
  std::vector<ExprSegment> segs;
  double prev = 0.0;
  double head = 0.0; // integral of f over (0, prev)
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    const double v = f.values()[i];
    const double hi = f.breakpoints()[i];
    // F(t) = head + v (t - prev) on this segment, (Pf)(t) = F(t)/t.
    segs.push_back({prev, hi, {{v, 0.0, 0}, {head - v * prev, -1.0, 0}}});
    head += v * (hi - prev);
    prev = hi;
  }
  segs.push_back({prev, kInf, {{head, -1.0, 0}}});
  return PiecewiseExpr(std::move(segs));
}

PiecewiseExpr apply_Q(const StepFunction& f) {
  const std::size_t n = f.values().size();
  // tail[i] = Qf at breakpoint i (integral over (t_i, inf)).
  std::vector<double> tail(n + 1, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    const double lo = i == 0 ? 0.0 : f.breakpoints()[i - 1];
    tail[i] = tail[i + 1];
    if (lo > 0.0) tail[i] += f.values()[i] * std::log(f.breakpoints()[i] / lo);
  }
  std::vector<ExprSegment> segs;
  double prev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = f.values()[i];
    const double hi = f.breakpoints()[i];
    // (Qf)(t) = v (log hi - log t) + tail_{i+1}.
    segs.push_back({prev, hi, {{v * std::log(hi) + tail[i + 1], 0.0, 0}, {-v, 0.0, 1}}});
    prev = hi;
  }
  segs.push_back({prev, kInf, {}});
  return PiecewiseExpr(std::move(segs));
}

PiecewiseExpr apply_S(const StepFunction& f) { return add(apply_P(f), apply_Q(f)); }

PiecewiseExpr apply_S_alpha(const StepFunction& f, double alpha) {
  if (!(alpha > 1.0)) throw std::invalid_argument("S_alpha requires alpha > 1");
  const double r = 1.0 / alpha; // in (0, 1)
  const std::size_t n = f.values().size();
  std::vector<double> tail(n + 1, 0.0); // \int_{t_i}^inf f(s) s^{r-1} ds
  for (std::size_t i = n; i-- > 0;) {
    const double lo = i == 0 ? 0.0 : f.breakpoints()[i - 1];
    const double hi = f.breakpoints()[i];
    tail[i] = tail[i + 1] + f.values()[i] * (std::pow(hi, r) - std::pow(lo, r)) / r;
  }
  std::vector<ExprSegment> segs;
  double prev = 0.0;
  double head = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = f.values()[i];
    const double hi = f.breakpoints()[i];
    // t^{r-1} (head + v(t - prev)) + v (hi^r - t^r)/r + tail_{i+1}
    segs.push_back({prev, hi,
                    {{v * (1.0 - 1.0 / r), r, 0},
                     {head - v * prev, r - 1.0, 0},
                     {v * std::pow(hi, r) / r + tail[i + 1], 0.0, 0}}});
    head += v * (hi - prev);
    prev = hi;
  }
  segs.push_back({prev, kInf, {{head, r - 1.0, 0}}});
  return PiecewiseExpr(std::move(segs));
}

PiecewiseExpr apply_T_alpha(const StepFunction& f, double alpha) {
  if (!(alpha >= 0.0)) throw std::invalid_argument("T_alpha requires alpha >= 0");
  const StepFunction fs = rearrange(f);
  const std::size_t n = fs.values().size();
  // For nonincreasing fs the inner supremum over each level interval is
  // attained at its right endpoint, so the running maximum from the right
  // determines the value: T f(t) = t^{-alpha} max_{k >= i} t_k^alpha v_k.
  std::vector<double> running(n, 0.0);
  double best = 0.0;
  for (std::size_t i = n; i-- > 0;) {
    best = std::max(best, std::pow(fs.breakpoints()[i], alpha) * fs.values()[i]);
    running[i] = best;
  }
  std::vector<ExprSegment> segs;
  double prev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    segs.push_back({prev, fs.breakpoints()[i], {{running[i], -alpha, 0}}});
    prev = fs.breakpoints()[i];
  }
  segs.push_back({prev, kInf, {}});
  return PiecewiseExpr(std::move(segs));
}

PiecewiseExpr apply_R(const StepFunction& g, double gamma, double n_dim) {
  if (!(gamma > 0.0 && gamma < n_dim)) throw std::invalid_argument("need 0 < gamma < n");
  const double r = gamma / n_dim;
  const std::size_t n = g.values().size();
  std::vector<double> tail(n + 1, 0.0);
  for (std::size_t i = n; i-- > 0;) {
    const double lo = i == 0 ? 0.0 : g.breakpoints()[i - 1];
    const double hi = g.breakpoints()[i];
    tail[i] = tail[i + 1] + g.values()[i] * (std::pow(hi, r) - std::pow(lo, r)) / r;
  }
  std::vector<ExprSegment> segs;
  double prev = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = g.values()[i];
    const double hi = g.breakpoints()[i];
    segs.push_back({prev, hi,
                    {{-v / r, r, 0}, {v * std::pow(hi, r) / r + tail[i + 1], 0.0, 0}}});
    prev = hi;
  }
  segs.push_back({prev, kInf, {}});
  return PiecewiseExpr(std::move(segs));
}

PiecewiseExpr apply_Rprime(const StepFunction& g, double gamma, double n_dim) {
  if (!(gamma > 0.0 && gamma < n_dim)) throw std::invalid_argument("need 0 < gamma < n");
  const double r = gamma / n_dim;
  std::vector<ExprSegment> segs;
  double prev = 0.0;
  double head = 0.0;
  for (std::size_t i = 0; i < g.values().size(); ++i) {
    const double v = g.values()[i];
    const double hi = g.breakpoints()[i];
    segs.push_back({prev, hi, {{v, r, 0}, {head - v * prev, r - 1.0, 0}}});
    head += v * (hi - prev);
    prev = hi;
  }
  segs.push_back({prev, kInf, {{head, r - 1.0, 0}}});
  return PiecewiseExpr(std::move(segs));
}

PiecewiseExpr doublestar(const StepFunction& f) { return apply_P(rearrange(f)); }

PiecewiseExpr compose_P(const PiecewiseExpr& g) {
  std::vector<ExprSegment> segs;
  double head = 0.0; // \int_0^{lo} g
  for (const ExprSegment& s : g.segments()) {
    // Value on the segment: (head + A(t) - A(lo)) / t with A the local
    // antiderivative; at lo = 0 integrability forces A(0+) = 0.
    std::vector<ExprTerm> out;
    double constant = head;
    for (const ExprTerm& t : s.terms) {
      for (ExprTerm a : antiderivative_terms(t)) {
        if (s.lo == 0.0) {
          if (!(a.beta > 0.0)) throw std::invalid_argument("P of non-integrable head");
        } else {
          constant -= eval_term(a, s.lo);
        }
        a.beta -= 1.0;
        out.push_back(a);
      }
    }
    out.push_back({constant, -1.0, 0});
    if (!std::isinf(s.hi)) head += integrate(g, s.lo, s.hi);
    segs.push_back({s.lo, s.hi, std::move(out)});
  }
  return PiecewiseExpr(std::move(segs));
}

PiecewiseExpr compose_Q(const PiecewiseExpr& g) {
  const auto& segs_in = g.segments();
  // beyond[i] = \int_{hi_i}^inf g(s)/s ds, accumulated from the right.
  std::vector<double> beyond_tbl(segs_in.size(), 0.0);
  for (std::size_t i = segs_in.size() - 1; i-- > 0;) {
    const ExprSegment& s = segs_in[i + 1];
    double part = 0.0;
    for (const ExprTerm& t : s.terms) {
      ExprTerm shifted = t;
      shifted.beta -= 1.0;
      part += term_integral(shifted, s.lo, s.hi);
    }
    if (std::isinf(part)) throw std::invalid_argument("Q of non-decaying tail");
    beyond_tbl[i] = beyond_tbl[i + 1] + part;
  }
  std::vector<ExprSegment> out;
  for (std::size_t i = 0; i < segs_in.size(); ++i) {
    const ExprSegment& s = segs_in[i];
    const double beyond = beyond_tbl[i];
    std::vector<ExprTerm> terms;
    double constant = beyond;
    for (const ExprTerm& t : s.terms) {
      ExprTerm shifted = t;
      shifted.beta -= 1.0;
      for (ExprTerm a : antiderivative_terms(shifted)) {
        // \int_t^{hi} = A(hi) - A(t)
        if (std::isinf(s.hi)) {
          if (!(a.beta < 0.0)) throw std::invalid_argument("Q of non-decaying tail");
        } else {
          constant += eval_term(a, s.hi);
        }
        a.c = -a.c;
        terms.push_back(a);
      }
    }
    terms.push_back({constant, 0.0, 0});
    out.push_back({s.lo, s.hi, std::move(terms)});
  }
  return PiecewiseExpr(std::move(out));
}

double weighted_tail_integral(const PiecewiseExpr& g, double t, double w) {
  double total = 0.0;
  for (const ExprSegment& s : g.segments()) {
    if (s.hi <= t) continue;
    const double lo = std::max(s.lo, t);
    for (const ExprTerm& term : s.terms) {
      ExprTerm shifted = term;
      shifted.beta += w;
      const double part = term_integral(shifted, lo, s.hi);
      if (std::isinf(part)) return kInf;
      total += part;
    }
  }
  return total;
}

double sup_power_weighted(const PiecewiseExpr& g, double t, double w) {
  const auto weighted = [&](double s) { return std::pow(s, w) * g.eval(s); };
  double best = 0.0;
  const double u_hi = 46.0; // e^46 ~ 1e20, far past any breakpoint in use
  for (const ExprSegment& s : g.segments()) {
    if (s.hi <= t) continue;
    const double lo = std::max(s.lo, std::max(t, 1e-300));
    const double a = std::log(lo);
    const double b = std::isinf(s.hi) ? u_hi : std::log(s.hi);
    if (b <= a) continue;
    const auto in_log = [&](double u) { return weighted(std::exp(u)); };
    best = std::max(best, scan_maximum(in_log, a, b, 129));
  }
  return best;
}

double check_PQ_duality(const StepFunction& f, const StepFunction& g) {
  const double lhs = inner_product(apply_P(f), g);
  const double rhs = inner_product(apply_Q(g), f);
  return std::abs(lhs - rhs);
}

} // namespace ricalc
