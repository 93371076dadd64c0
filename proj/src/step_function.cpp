#include "ricalc/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ricalc {

namespace {

constexpr double kMergeEps = 0.0; // canonical form merges exact equals only

void canonicalize(std::vector<double>& bps, std::vector<double>& vals) {
  // Drop trailing zero segments, merge adjacent equal values.
  std::vector<double> out_b, out_v;
  out_b.reserve(bps.size());
  out_v.reserve(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (!out_v.empty() && vals[i] == out_v.back()) {
      out_b.back() = bps[i];
    } else {
      out_b.push_back(bps[i]);
      out_v.push_back(vals[i]);
    }
  }
  while (!out_v.empty() && out_v.back() == 0.0) {
    out_b.pop_back();
    out_v.pop_back();
  }
  // A single leading zero segment collapses entirely: value 0 on (0,t1) and
  // 0 beyond means the zero function once trailing zeros are dropped; interior
  // zeros must stay.
  bps = std::move(out_b);
  vals = std::move(out_v);
}

} // namespace

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() != values_.size())
    throw std::invalid_argument("breakpoints/values size mismatch");
  double prev = 0.0;
  for (double b : breakpoints_) {
    if (!(b > prev) || !std::isfinite(b))
      throw std::invalid_argument("breakpoints must be strictly increasing and positive");
    prev = b;
  }
  for (double v : values_) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument("values must be nonnegative and finite");
  }
  canonicalize(breakpoints_, values_);
}

StepFunction StepFunction::indicator(double a, double b, double value) {
  if (!(0.0 <= a && a < b))
    throw std::invalid_argument("indicator requires 0 <= a < b");
  if (a == 0.0) return StepFunction({b}, {value});
  return StepFunction({a, b}, {0.0, value});
}

double StepFunction::support_bound() const {
  return breakpoints_.empty() ? 0.0 : breakpoints_.back();
}

double StepFunction::operator()(double t) const {
  if (!(t > 0.0)) return 0.0;
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
  if (it == breakpoints_.end()) return 0.0;
  return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

bool StepFunction::operator==(const StepFunction& other) const {
  return breakpoints_ == other.breakpoints_ && values_ == other.values_;
}

double StepFunction::total_integral() const {
  double total = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    total += values_[i] * (breakpoints_[i] - prev);
    prev = breakpoints_[i];
  }
  return total;
}

StepFunction rearrange(const StepFunction& f) {
  // Sort segments by value descending; lay lengths end to end.
  struct Seg {
    double value;
    double length;
  };
  std::vector<Seg> segs;
  double prev = 0.0;
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    const double len = f.breakpoints()[i] - prev;
    prev = f.breakpoints()[i];
    if (f.values()[i] > 0.0) segs.push_back({f.values()[i], len});
  }
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

bool is_nonincreasing(const StepFunction& f) {
  const auto& v = f.values();
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] < v[i + 1]) return false;
  return true;
}

StepFunction dilate(const StepFunction& f, double a) {
  if (!(a > 0.0)) throw std::invalid_argument("dilation parameter must be positive");
  std::vector<double> bps = f.breakpoints();
  for (double& b : bps) b /= a;
  return StepFunction(std::move(bps), f.values());
}

double distribution(const StepFunction& f, double lambda) {
  double measure = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    if (f.values()[i] > lambda) measure += f.breakpoints()[i] - prev;
    prev = f.breakpoints()[i];
  }
  return measure;
}

double integrate(const StepFunction& f, double a, double b) {
  double total = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    const double lo = std::max(prev, a);
    const double hi = std::min(f.breakpoints()[i], b);
    if (hi > lo) total += f.values()[i] * (hi - lo);
    prev = f.breakpoints()[i];
  }
  return total;
}

double partial_integral(const StepFunction& f, double t) {
  return integrate(f, 0.0, t);
}

StepFunction add(const StepFunction& f, const StepFunction& g) {
  std::vector<double> grid;
  grid.reserve(f.breakpoints().size() + g.breakpoints().size());
  std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(),
             g.breakpoints().end(), std::back_inserter(grid));
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  std::vector<double> vals;
  vals.reserve(grid.size());
  double prev = 0.0;
  for (double b : grid) {
    const double mid = 0.5 * (prev + b);
    vals.push_back(f(mid) + g(mid));
    prev = b;
  }
  return StepFunction(std::move(grid), std::move(vals));
}

StepFunction scale(const StepFunction& f, double c) {
  if (!(c >= 0.0)) throw std::invalid_argument("scale factor must be nonnegative");
  std::vector<double> vals = f.values();
  for (double& v : vals) v *= c;
  return StepFunction(f.breakpoints(), std::move(vals));
}

double inner_product(const StepFunction& f, const StepFunction& g) {
  double total = 0.0;
  double prev = 0.0;
  std::size_t i = 0, j = 0;
  const auto& fb = f.breakpoints();
  const auto& gb = g.breakpoints();
  while (i < fb.size() && j < gb.size()) {
    const double next = std::min(fb[i], gb[j]);
    total += f.values()[i] * g.values()[j] * (next - prev);
    if (fb[i] <= next) ++i;
    if (j < gb.size() && gb[j] <= next) ++j;
    prev = next;
  }
  return total;
}

HlpResult hlp_compare(const StepFunction& f, const StepFunction& g) {
  const StepFunction fs = rearrange(f);
  const StepFunction gs = rearrange(g);
  // Partial integrals are piecewise linear; checking at union-grid breakpoints
  // plus 0 and the larger support bound suffices.
  std::vector<double> grid;
  grid.insert(grid.end(), fs.breakpoints().begin(), fs.breakpoints().end());
  grid.insert(grid.end(), gs.breakpoints().begin(), gs.breakpoints().end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  const double tol = 1e-12;
  for (double t : grid) {
    const double lhs = partial_integral(fs, t);
    const double rhs = partial_integral(gs, t);
    if (lhs > rhs * (1.0 + 1e-12) + tol) return {false, t};
  }
  return {true, 0.0};
}

} // namespace ricalc
