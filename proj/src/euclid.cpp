#include "ricalc/euclid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ricalc/quadrature.hpp"

namespace ricalc {

namespace {

// Cumulative integral values F(x_i) at the breakpoints.
std::vector<double> cumulative(const LineStepFunction& f) {
  std::vector<double> F(f.breakpoints.size(), 0.0);
  for (std::size_t i = 0; i < f.values.size(); ++i)
    F[i + 1] = F[i] + f.values[i] * (f.breakpoints[i + 1] - f.breakpoints[i]);
  return F;
}

double F_at(const LineStepFunction& f, const std::vector<double>& F, double x) {
  if (x <= f.breakpoints.front()) return 0.0;
  if (x >= f.breakpoints.back()) return F.back();
  auto it = std::upper_bound(f.breakpoints.begin(), f.breakpoints.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - f.breakpoints.begin());
  return F[i - 1] + f.values[i - 1] * (x - f.breakpoints[i - 1]);
}

struct Interval {
  double lo, hi;
};

double merged_measure(std::vector<Interval>& xs) {
  std::sort(xs.begin(), xs.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  double total = 0.0;
  double cur_lo = 0.0, cur_hi = 0.0;
  bool open = false;
  for (const Interval& iv : xs) {
    if (!(iv.hi > iv.lo)) continue;
    if (!open) {
      cur_lo = iv.lo;
      cur_hi = iv.hi;
      open = true;
    } else if (iv.lo <= cur_hi) {
      cur_hi = std::max(cur_hi, iv.hi);
    } else {
      total += cur_hi - cur_lo;
      cur_lo = iv.lo;
      cur_hi = iv.hi;
    }
  }
  if (open) total += cur_hi - cur_lo;
  return total;
}

} // namespace

LineStepFunction::LineStepFunction(std::vector<double> bps, std::vector<double> vals) {
  if (bps.size() != vals.size() + 1 || vals.empty())
    throw std::invalid_argument("need n+1 breakpoints for n values");
  for (std::size_t i = 0; i + 1 < bps.size(); ++i)
    if (!(bps[i] < bps[i + 1]))
      throw std::invalid_argument("breakpoints must be strictly increasing");
  for (double v : vals)
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument("values must be nonnegative and finite");
  // Canonical form: merge equal neighbors, trim zero edges.
  breakpoints.push_back(bps.front());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (!values.empty() && values.back() == vals[i]) {
      breakpoints.back() = bps[i + 1];
    } else {
      values.push_back(vals[i]);
      breakpoints.push_back(bps[i + 1]);
    }
  }
  while (!values.empty() && values.front() == 0.0) {
    values.erase(values.begin());
    breakpoints.erase(breakpoints.begin());
  }
  while (!values.empty() && values.back() == 0.0) {
    values.pop_back();
    breakpoints.pop_back();
  }
  if (values.empty()) breakpoints.clear();
}

double LineStepFunction::operator()(double x) const {
  for (std::size_t i = 0; i < values.size(); ++i)
    if (x > breakpoints[i] && x < breakpoints[i + 1]) return values[i];
  return 0.0;
}

double LineStepFunction::total_integral() const {
  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i)
    total += values[i] * (breakpoints[i + 1] - breakpoints[i]);
  return total;
}

StepFunction rearrange_line(const LineStepFunction& f) {
  struct Seg {
    double value, length;
  };
  std::vector<Seg> segs;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    if (f.values[i] > 0.0)
      segs.push_back({f.values[i], f.breakpoints[i + 1] - f.breakpoints[i]});
  std::stable_sort(segs.begin(), segs.end(),
                   [](const Seg& a, const Seg& b) { return a.value > b.value; });
  std::vector<double> bps, vals;
  double t = 0.0;
  for (const Seg& s : segs) {
    t += s.length;
    bps.push_back(t);
    vals.push_back(s.value);
  }
  return StepFunction(std::move(bps), std::move(vals));
}

double maximal_function_at(const LineStepFunction& f, double x) {
  if (f.is_zero()) return 0.0;
  const std::vector<double> F = cumulative(f);
  // Optimal interval endpoints lie at breakpoints or at x itself: the average
  // is monotone in each endpoint while it crosses a constancy interval of f.
  std::vector<double> as = {x}, bs = {x};
  for (double b : f.breakpoints) {
    if (b <= x) as.push_back(b);
    if (b >= x) bs.push_back(b);
  }
  double best = 0.0;
  for (double a : as)
    for (double b : bs) {
      if (!(b > a)) continue;
      best = std::max(best, (F_at(f, F, b) - F_at(f, F, a)) / (b - a));
    }
  // Degenerate interval shrinking to x recovers f(x).
  best = std::max(best, f(x));
  return best;
}

double maximal_distribution(const LineStepFunction& f, double lambda) {
  if (f.is_zero()) return 0.0;
  if (!(lambda > 0.0)) return kInf;
  const std::vector<double> F = cumulative(f);
  const std::size_t n = f.values.size();
  const double x0 = f.breakpoints.front();
  const double xN = f.breakpoints.back();
  std::vector<Interval> parts;

  // Pure breakpoint pairs: the whole interval qualifies when its average
  // exceeds lambda.
  for (std::size_t j = 0; j + 1 < F.size(); ++j)
    for (std::size_t k = j + 1; k < F.size(); ++k) {
      const double avg = (F[k] - F[j]) / (f.breakpoints[k] - f.breakpoints[j]);
      if (avg > lambda) parts.push_back({f.breakpoints[j], f.breakpoints[k]});
    }

  // Branch a = x_j, b = x inside segment i (or beyond the support): solve the
  // linear inequality F(x) - F_j - lambda (x - x_j) > 0 on the segment.
  for (std::size_t j = 0; j < F.size(); ++j) {
    const double xj = f.breakpoints[j];
    const double Fj = F[j];
    for (std::size_t i = j; i < n; ++i) {
      const double lo = std::max(f.breakpoints[i], xj);
      const double hi = f.breakpoints[i + 1];
      if (!(hi > lo)) continue;
      const double v = f.values[i];
      // g(x) = (F_i + v (x - x_i) - F_j) - lambda (x - x_j), slope v - lambda.
      const double slope = v - lambda;
      const double icept = F[i] - v * f.breakpoints[i] - Fj + lambda * xj;
      if (slope > 0.0) {
        const double xs = -icept / slope;
        parts.push_back({std::max(lo, xs), hi});
      } else if (slope < 0.0) {
        const double xs = -icept / slope;
        parts.push_back({lo, std::min(hi, xs)});
      } else if (icept > 0.0) {
        parts.push_back({lo, hi});
      }
    }
    // Beyond the support: (F_N - F_j)/(x - x_j) > lambda.
    if (F.back() > Fj) parts.push_back({xN, xj + (F.back() - Fj) / lambda});
  }

  // Mirrored branch b = x_k, a = x inside segment i (or before the support).
  for (std::size_t k = 0; k < F.size(); ++k) {
    const double xk = f.breakpoints[k];
    const double Fk = F[k];
    for (std::size_t i = 0; i < std::min(k, n); ++i) {
      const double lo = f.breakpoints[i];
      const double hi = std::min(f.breakpoints[i + 1], xk);
      if (!(hi > lo)) continue;
      const double v = f.values[i];
      // g(x) = F_k - (F_i + v (x - x_i)) - lambda (x_k - x), slope lambda - v.
      const double slope = lambda - v;
      const double icept = Fk - F[i] + v * f.breakpoints[i] - lambda * xk;
      if (slope > 0.0) {
        const double xs = -icept / slope;
        parts.push_back({std::max(lo, xs), hi});
      } else if (slope < 0.0) {
        const double xs = -icept / slope;
        parts.push_back({lo, std::min(hi, xs)});
      } else if (icept > 0.0) {
        parts.push_back({lo, hi});
      }
    }
    if (Fk > 0.0) parts.push_back({xk - Fk / lambda, x0});
  }
  return merged_measure(parts);
}

double maximal_rearrangement_at(const LineStepFunction& f, double t) {
  if (f.is_zero()) return 0.0;
  const double vmax = *std::max_element(f.values.begin(), f.values.end());
  double lo = 0.0, hi = vmax; // dist(lo+) > t >= dist(hi)
  if (maximal_distribution(f, vmax) > t) return vmax;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (maximal_distribution(f, mid) > t) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double fractional_maximal_at(const LineStepFunction& f, double gamma, double x) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("need gamma in (0,1) at n = 1");
  if (f.is_zero()) return 0.0;
  const std::vector<double> F = cumulative(f);
  const std::size_t n = f.values.size();
  auto value = [&](double a, double b) {
    if (!(b > a)) return 0.0;
    return (F_at(f, F, b) - F_at(f, F, a)) * std::pow(b - a, gamma - 1.0);
  };
  std::vector<double> as = {x}, bs = {x};
  for (double b : f.breakpoints) {
    if (b <= x) as.push_back(b);
    if (b >= x) bs.push_back(b);
  }
  // Closed-form interior stationary points: moving the left endpoint a inside
  // a constancy segment of value v, optimality gives
  // (1 - gamma)(F(b) - F(a)) = v (b - a); similarly for the right endpoint.
  std::vector<double> a_extra, b_extra;
  for (double b : bs) {
    for (std::size_t s = 0; s < n; ++s) {
      const double v = f.values[s];
      if (!(v > 0.0)) continue;
      const double K = F_at(f, F, b) - F[s] + v * f.breakpoints[s];
      const double astar = (v * b - (1.0 - gamma) * K) / (gamma * v);
      if (astar > f.breakpoints[s] && astar < f.breakpoints[s + 1] && astar <= x &&
          astar < b)
        a_extra.push_back(astar);
    }
  }
  for (double a : as) {
    for (std::size_t s = 0; s < n; ++s) {
      const double v = f.values[s];
      if (!(v > 0.0)) continue;
      const double L = F[s] - v * f.breakpoints[s] - F_at(f, F, a);
      const double bstar = ((1.0 - gamma) * L + v * a) / (gamma * v);
      if (bstar > f.breakpoints[s] && bstar < f.breakpoints[s + 1] && bstar >= x &&
          bstar > a)
        b_extra.push_back(bstar);
    }
  }
  as.insert(as.end(), a_extra.begin(), a_extra.end());
  bs.insert(bs.end(), b_extra.begin(), b_extra.end());
  double best = 0.0;
  for (double a : as)
    for (double b : bs)
      if (a <= x && b >= x) best = std::max(best, value(a, b));
  return best;
}

HilbertValue hilbert_transform(const LineStepFunction& f, double x) {
  HilbertValue out;
  for (double b : f.breakpoints)
    if (x == b) {
      out.at_breakpoint = true;
      return out;
    }
  constexpr double pi = 3.14159265358979323846;
  double sum = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (f.values[i] == 0.0) continue;
    sum += f.values[i] * std::log(std::abs((x - f.breakpoints[i]) /
                                           (x - f.breakpoints[i + 1])));
  }
  out.value = sum / pi;
  return out;
}

double riesz_constant(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("need gamma in (0,1) at n = 1");
  return std::tgamma((1.0 - gamma) / 2.0) /
         (std::sqrt(3.14159265358979323846) * std::pow(2.0, gamma) *
          std::tgamma(gamma / 2.0));
}

double riesz_potential(const LineStepFunction& f, double gamma, double x) {
  const double c = riesz_constant(gamma);
  double sum = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const double v = f.values[i];
    if (v == 0.0) continue;
    const double a = f.breakpoints[i], b = f.breakpoints[i + 1];
    double piece;
    if (x <= a) {
      piece = (std::pow(b - x, gamma) - std::pow(a - x, gamma)) / gamma;
    } else if (x >= b) {
      piece = (std::pow(x - a, gamma) - std::pow(x - b, gamma)) / gamma;
    } else {
      piece = (std::pow(x - a, gamma) + std::pow(b - x, gamma)) / gamma;
    }
    sum += v * piece;
  }
  return c * sum;
}

StepFunction empirical_rearrangement(const std::function<double(double)>& g, double lo,
                                     double hi, int cells) {
  if (!(hi > lo) || cells < 1) throw std::invalid_argument("bad sampling window");
  const double width = (hi - lo) / cells;
  std::vector<double> samples(cells);
  for (int i = 0; i < cells; ++i)
    samples[i] = std::max(g(lo + (i + 0.5) * width), 0.0);
  std::sort(samples.begin(), samples.end(), std::greater<double>());
  std::vector<double> bps(cells), vals(cells);
  for (int i = 0; i < cells; ++i) {
    bps[i] = (i + 1) * width;
    vals[i] = samples[i];
  }
  return StepFunction(std::move(bps), std::move(vals));
}

} // namespace ricalc
