#include "ricalc/lz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "ricalc/quadrature.hpp"

namespace ricalc {

namespace {

// Tolerance for classifying critical exponents: parameter combinations either
// vanish exactly or differ by far more than this.
constexpr double kExpTol = 1e-9;

double inv(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

// Convergence of \int_0 t^{s-1} |log t|^m (log|log t|)^{mm} dt near zero
// (equivalently near infinity with the same normal form). Boundary ties count
// as divergent.
bool head_integral_diverges(double s, double m, double mm) {
  if (s > kExpTol) return false;
  if (s < -kExpTol) return true;
  if (m < -1.0 - kExpTol) return false;
  if (m > -1.0 + kExpTol) return true;
  return mm >= -1.0 - kExpTol;
}

struct SupLimit {
  bool infinite = false;
  double value = 0.0;
};

// Limit of |c| t^{e} |log t|^{l} (log|log t|)^{ll} at 0+ or at infinity, with
// e oriented so that e > 0 means decay.
SupLimit sup_limit(double c, double e, double l, double ll) {
  if (c == 0.0) return {false, 0.0};
  if (e < -kExpTol) return {true, 0.0};
  if (e > kExpTol) return {false, 0.0};
  if (l > kExpTol) return {true, 0.0};
  if (l < -kExpTol) return {false, 0.0};
  if (ll > kExpTol) return {true, 0.0};
  if (ll < -kExpTol) return {false, 0.0};
  return {false, std::abs(c)};
}

} // namespace

double broken_log(double t, double a0, double aI) {
  if (t < 1.0) return std::pow(1.0 - std::log(t), a0);
  return std::pow(1.0 + std::log(t), aI);
}

double broken_loglog(double t, double b0, double bI) {
  if (t < 1.0) return std::pow(1.0 + std::log(1.0 - std::log(t)), b0);
  return std::pow(1.0 + std::log(1.0 + std::log(t)), bI);
}

double broken_log_u(double u, double a0, double aI) {
  if (u < 0.0) return std::pow(1.0 - u, a0);
  return std::pow(1.0 + u, aI);
}

double broken_loglog_u(double u, double b0, double bI) {
  if (u < 0.0) return std::pow(1.0 + std::log(1.0 - u), b0);
  return std::pow(1.0 + std::log(1.0 + u), bI);
}

bool lz_valid(const LZParams& x) { return x.p >= 1.0 && x.q >= 1.0; }

bool lz_certified_ri(const LZParams& x) {
  if (!lz_valid(x)) return false;
  if (x.has_B && (x.b0 != 0.0 || x.bI != 0.0)) return false;
  if (1.0 < x.p && !std::isinf(x.p)) return true;
  if (x.p == 1.0 && x.q == 1.0) return x.a0 >= 0.0 && x.aI <= 0.0;
  if (std::isinf(x.p) && std::isinf(x.q)) return x.a0 <= 0.0 && x.aI >= 0.0;
  return false;
}

bool lz_trivial_space(const LZParams& x) {
  if (!std::isinf(x.p) || std::isinf(x.q)) return false;
  // Finiteness of the weight near zero against a function with a positive
  // limit there: \int_0 t^{-1} (1 - log t)^{q a0} ... dt.
  return head_integral_diverges(0.0, x.q * x.a0, x.has_B ? x.q * x.b0 : 0.0);
}

bool lz_exact_norm(const LZParams& x) {
  return x.p == x.q && x.a0 == 0.0 && x.aI == 0.0 &&
         (!x.has_B || (x.b0 == 0.0 && x.bI == 0.0));
}

std::optional<LZParams> associate_params(const LZParams& x) {
  if (!lz_valid(x)) return std::nullopt;
  if (x.has_B && (x.b0 != 0.0 || x.bI != 0.0)) return std::nullopt;
  if (x.use_doublestar) return std::nullopt;
  LZParams y;
  if (1.0 < x.p && !std::isinf(x.p)) {
    y.p = x.p / (x.p - 1.0);
    y.q = std::isinf(x.q) ? 1.0 : (x.q == 1.0 ? kInf : x.q / (x.q - 1.0));
    y.a0 = -x.a0;
    y.aI = -x.aI;
    return y;
  }
  if (x.p == 1.0 && x.q == 1.0 && x.a0 >= 0.0 && x.aI <= 0.0) {
    y.p = kInf;
    y.q = kInf;
    y.a0 = -x.a0;
    y.aI = -x.aI;
    return y;
  }
  return std::nullopt;
}

double lz_norm_nonincreasing(const PiecewiseExpr& g, const LZParams& x) {
  if (!lz_valid(x)) throw std::invalid_argument("invalid Lorentz-Zygmund parameters");
  if (g.is_zero()) return 0.0;
  const double invp = inv(x.p);
  const Asymptote at0 = g.behavior_at_zero();
  const Asymptote atI = g.behavior_at_infinity();

  if (std::isinf(x.q)) {
    // sup_t t^{1/p} l^A(t) ll^B(t) g(t): analytic endpoint limits plus a
    // sampled scan (with golden-section refinement) over each segment.
    const SupLimit lim0 = sup_limit(at0.coeff, invp + at0.beta, at0.logpow + x.a0,
                                    x.has_B ? x.b0 : 0.0);
    if (lim0.infinite) return kInf;
    const SupLimit limI = sup_limit(atI.coeff, -(invp + atI.beta), atI.logpow + x.aI,
                                    x.has_B ? x.bI : 0.0);
    if (limI.infinite) return kInf;
    double best = std::max(lim0.value, limI.value);
    auto h = [&](double u) {
      // exp is clamped so extreme tails cannot underflow into NaN products;
      // the log weights use u directly and stay exact.
      const double t = std::exp(std::clamp(u, -700.0, 700.0));
      const double gv = std::max(g.eval(t), 0.0);
      double w = gv;
      if (invp != 0.0) w *= std::exp(u * invp);
      w *= broken_log_u(u, x.a0, x.aI);
      if (x.has_B) w *= broken_loglog_u(u, x.b0, x.bI);
      return w;
    };
    for (const ExprSegment& s : g.segments()) {
      if (s.terms.empty()) continue;
      double ulo = s.lo == 0.0 ? -46.0 : std::max(std::log(s.lo), -46.0);
      double uhi = std::isinf(s.hi) ? 46.0 : std::min(std::log(s.hi), 46.0);
      if (!(uhi > ulo)) continue;
      if (ulo < 0.0 && uhi > 0.0) {
        best = std::max(best, scan_maximum(h, ulo, 0.0, 129));
        best = std::max(best, scan_maximum(h, 0.0, uhi, 129));
      } else {
        best = std::max(best, scan_maximum(h, ulo, uhi, 129));
      }
    }
    return best;
  }

  // q < inf: analytic finiteness test at both improper endpoints, then
  // adaptive quadrature in u = log t coordinates.
  const double q = x.q;
  if (at0.coeff != 0.0 &&
      head_integral_diverges(q * (invp + at0.beta), q * (at0.logpow + x.a0),
                             x.has_B ? q * x.b0 : 0.0))
    return kInf;
  if (atI.coeff != 0.0 &&
      head_integral_diverges(-q * (invp + atI.beta), q * (atI.logpow + x.aI),
                             x.has_B ? q * x.bI : 0.0))
    return kInf;

  auto J = [&](double u) {
    const double t = std::exp(std::clamp(u, -700.0, 700.0));
    const double gv = std::max(g.eval(t), 0.0);
    if (gv == 0.0) return 0.0;
    double w = std::pow(gv, q) * std::exp(u * q * invp);
    w *= std::pow(broken_log_u(u, x.a0, x.aI), q);
    if (x.has_B) w *= std::pow(broken_loglog_u(u, x.b0, x.bI), q);
    return w;
  };
  double total = 0.0;
  for (const ExprSegment& s : g.segments()) {
    if (s.terms.empty()) continue;
    std::vector<double> cuts;
    const bool left_open = s.lo == 0.0;
    const bool right_open = std::isinf(s.hi);
    double ulo = left_open ? 0.0 : std::log(s.lo);
    double uhi = right_open ? 0.0 : std::log(s.hi);
    if (left_open && right_open) {
      total += integrate_left_tail(J, 0.0);
      total += integrate_right_tail(J, 0.0);
      continue;
    }
    if (left_open) {
      const double split = std::min(uhi, 0.0);
      total += integrate_left_tail(J, split);
      if (uhi > split) total += adaptive_simpson(J, split, uhi);
      continue;
    }
    if (right_open) {
      const double split = std::max(ulo, 0.0);
      if (split > ulo) total += adaptive_simpson(J, ulo, split);
      total += integrate_right_tail(J, split);
      continue;
    }
    if (ulo < 0.0 && uhi > 0.0) {
      total += adaptive_simpson(J, ulo, 0.0);
      total += adaptive_simpson(J, 0.0, uhi);
    } else {
      total += adaptive_simpson(J, ulo, uhi);
    }
  }
  return std::pow(total, 1.0 / q);
}

double lz_norm(const StepFunction& f, const LZParams& x) {
  if (!lz_valid(x)) throw std::invalid_argument("invalid Lorentz-Zygmund parameters");
  if (f.is_zero()) return 0.0;
  LZParams inner = x;
  inner.use_doublestar = false;
  const PiecewiseExpr g =
      x.use_doublestar ? doublestar(f) : PiecewiseExpr::from_step(rearrange(f));
  return lz_norm_nonincreasing(g, inner);
}

double fundamental_function(const LZParams& x, double t) {
  if (!(t > 0.0)) return 0.0;
  return lz_norm(StepFunction::indicator(0.0, t), x);
}

double holder_defect(const StepFunction& f, const StepFunction& g, const LZParams& x) {
  const auto assoc = associate_params(x);
  if (!assoc) throw std::invalid_argument("associate parameters not in table");
  const double nf = lz_norm(f, x);
  const double ng = lz_norm(g, *assoc);
  const double ip = inner_product(f, g);
  if (nf == 0.0 || ng == 0.0) return -ip; // a zero norm forces a zero integral
  if (std::isinf(nf) || std::isinf(ng)) return kInf;
  return nf * ng - ip;
}

} // namespace ricalc
