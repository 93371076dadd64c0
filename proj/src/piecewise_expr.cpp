#include "ricalc/piecewise_expr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ricalc/quadrature.hpp"

namespace ricalc {

namespace {

void merge_terms(std::vector<ExprTerm>& terms) {
  std::sort(terms.begin(), terms.end(), [](const ExprTerm& a, const ExprTerm& b) {
    if (a.beta != b.beta) return a.beta < b.beta;
    return a.logpow < b.logpow;
  });
  std::vector<ExprTerm> out;
  for (const ExprTerm& t : terms) {
    if (!out.empty() && out.back().beta == t.beta && out.back().logpow == t.logpow) {
      out.back().c += t.c;
    } else {
      out.push_back(t);
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const ExprTerm& t) { return t.c == 0.0; }),
            out.end());
  terms = std::move(out);
}

double eval_terms(const std::vector<ExprTerm>& terms, double t) {
  double sum = 0.0;
  const double lt = std::log(t);
  for (const ExprTerm& term : terms) {
    double val = term.c;
    if (term.beta != 0.0) val *= std::pow(t, term.beta);
    for (int k = 0; k < term.logpow; ++k) val *= lt;
    sum += val;
  }
  return sum;
}

// Antiderivative of c * t^beta * (log t)^k at a finite positive point.
double antiderivative(const ExprTerm& term, double t) {
  const double lt = std::log(t);
  if (term.beta == -1.0) {
    switch (term.logpow) {
      case 0: return term.c * lt;
      case 1: return term.c * lt * lt / 2.0;
      default: return term.c * lt * lt * lt / 3.0;
    }
  }
  const double b1 = term.beta + 1.0;
  const double p = std::pow(t, b1);
  switch (term.logpow) {
    case 0: return term.c * p / b1;
    case 1: return term.c * p * (lt / b1 - 1.0 / (b1 * b1));
    default:
      return term.c * p * (lt * lt / b1 - 2.0 * lt / (b1 * b1) + 2.0 / (b1 * b1 * b1));
  }
}

// Dominant term near 0 (smallest exponent, then highest log power).
const ExprTerm* dominant_at_zero(const std::vector<ExprTerm>& terms) {
  const ExprTerm* best = nullptr;
  for (const ExprTerm& t : terms) {
    if (!best || t.beta < best->beta ||
        (t.beta == best->beta && t.logpow > best->logpow))
      best = &t;
  }
  return best;
}

// Dominant term near infinity (largest exponent, then highest log power).
const ExprTerm* dominant_at_infinity(const std::vector<ExprTerm>& terms) {
  const ExprTerm* best = nullptr;
  for (const ExprTerm& t : terms) {
    if (!best || t.beta > best->beta ||
        (t.beta == best->beta && t.logpow > best->logpow))
      best = &t;
  }
  return best;
}

} // namespace

PiecewiseExpr::PiecewiseExpr(std::vector<ExprSegment> segments)
    : segments_(std::move(segments)) {
  if (segments_.empty()) {
    segments_.push_back({0.0, kInf, {}});
  }
  if (segments_.front().lo != 0.0 || segments_.back().hi != kInf)
    throw std::invalid_argument("segments must cover (0, inf)");
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i > 0 && segments_[i].lo != segments_[i - 1].hi)
      throw std::invalid_argument("segments must be contiguous");
    if (!(segments_[i].lo < segments_[i].hi))
      throw std::invalid_argument("segment interval must be nonempty");
    merge_terms(segments_[i].terms);
  }
  // Merge adjacent segments with identical term lists.
  std::vector<ExprSegment> out;
  for (ExprSegment& s : segments_) {
    auto same = [](const std::vector<ExprTerm>& a, const std::vector<ExprTerm>& b) {
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].c != b[i].c || a[i].beta != b[i].beta || a[i].logpow != b[i].logpow)
          return false;
      return true;
    };
    if (!out.empty() && same(out.back().terms, s.terms)) {
      out.back().hi = s.hi;
    } else {
      out.push_back(std::move(s));
    }
  }
  segments_ = std::move(out);
}

PiecewiseExpr PiecewiseExpr::zero() { return PiecewiseExpr(); }

PiecewiseExpr PiecewiseExpr::from_step(const StepFunction& f) {
  std::vector<ExprSegment> segs;
  double prev = 0.0;
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    segs.push_back({prev, f.breakpoints()[i], {{f.values()[i], 0.0, 0}}});
    prev = f.breakpoints()[i];
  }
  segs.push_back({prev, kInf, {}});
  return PiecewiseExpr(std::move(segs));
}

bool PiecewiseExpr::is_zero() const {
  for (const ExprSegment& s : segments_)
    if (!s.terms.empty()) return false;
  return true;
}

double PiecewiseExpr::eval(double t) const {
  if (!(t > 0.0)) return 0.0;
  for (const ExprSegment& s : segments_) {
    if (t <= s.hi) return eval_terms(s.terms, t);
  }
  return eval_terms(segments_.back().terms, t);
}

std::vector<double> PiecewiseExpr::boundaries() const {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < segments_.size(); ++i) out.push_back(segments_[i].hi);
  return out;
}

Asymptote PiecewiseExpr::behavior_at_zero() const {
  const auto& terms = segments_.front().terms;
  const ExprTerm* d = dominant_at_zero(terms);
  if (!d) return {};
  return {d->c, d->beta, d->logpow};
}

Asymptote PiecewiseExpr::behavior_at_infinity() const {
  const auto& terms = segments_.back().terms;
  const ExprTerm* d = dominant_at_infinity(terms);
  if (!d) return {};
  return {d->c, d->beta, d->logpow};
}

double term_integral(const ExprTerm& term, double a, double b) {
  if (term.c == 0.0 || !(b > a)) return 0.0;
  double Fa, Fb;
  if (a == 0.0) {
    if (term.beta <= -1.0) return term.c > 0.0 ? kInf : -kInf;
    Fa = 0.0;
  } else {
    Fa = antiderivative(term, a);
  }
  if (std::isinf(b)) {
    if (term.beta >= -1.0) return term.c > 0.0 ? kInf : -kInf;
    Fb = 0.0;
  } else {
    Fb = antiderivative(term, b);
  }
  return Fb - Fa;
}

double integrate(const PiecewiseExpr& g, double a, double b) {
  if (!(b > a)) return 0.0;
  double total = 0.0;
  for (const ExprSegment& s : g.segments()) {
    const double lo = std::max(s.lo, a);
    const double hi = std::min(s.hi, b);
    if (!(hi > lo) || s.terms.empty()) continue;
    // Divergence at an improper endpoint is decided by the dominant term; the
    // sign of the divergence is the sign of the function near the endpoint.
    if (lo == 0.0) {
      const ExprTerm* d = dominant_at_zero(s.terms);
      if (d->beta <= -1.0) {
        const double sample = std::min(0.5 * (std::isinf(hi) ? 1.0 : hi), 1e-9);
        return eval_terms(s.terms, sample) >= 0.0 ? kInf : -kInf;
      }
    }
    if (std::isinf(hi)) {
      const ExprTerm* d = dominant_at_infinity(s.terms);
      if (d->beta >= -1.0) {
        const double sample = std::max(2.0 * lo, 1e9);
        return eval_terms(s.terms, sample) >= 0.0 ? kInf : -kInf;
      }
    }
    for (const ExprTerm& t : s.terms) total += term_integral(t, lo, hi);
  }
  return total;
}

double inner_product(const PiecewiseExpr& g, const StepFunction& f) {
  double total = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    if (f.values()[i] != 0.0)
      total += f.values()[i] * integrate(g, prev, f.breakpoints()[i]);
    prev = f.breakpoints()[i];
  }
  return total;
}

PiecewiseExpr add(const PiecewiseExpr& g, const PiecewiseExpr& h) {
  std::vector<double> grid;
  for (double b : g.boundaries()) grid.push_back(b);
  for (double b : h.boundaries()) grid.push_back(b);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::vector<ExprSegment> segs;
  double prev = 0.0;
  auto terms_at = [](const PiecewiseExpr& e, double mid) -> const std::vector<ExprTerm>& {
    for (const ExprSegment& s : e.segments())
      if (mid < s.hi) return s.terms;
    return e.segments().back().terms;
  };
  grid.push_back(kInf);
  for (double b : grid) {
    const double mid = std::isinf(b) ? prev + 1.0 : 0.5 * (prev + b);
    std::vector<ExprTerm> terms = terms_at(g, mid);
    const auto& ht = terms_at(h, mid);
    terms.insert(terms.end(), ht.begin(), ht.end());
    segs.push_back({prev, b, std::move(terms)});
    prev = b;
  }
  return PiecewiseExpr(std::move(segs));
}

PiecewiseExpr scale(const PiecewiseExpr& g, double c) {
  std::vector<ExprSegment> segs = g.segments();
  for (ExprSegment& s : segs)
    for (ExprTerm& t : s.terms) t.c *= c;
  return PiecewiseExpr(std::move(segs));
}

} // namespace ricalc
