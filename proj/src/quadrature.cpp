#include "ricalc/quadrature.hpp"

#include <algorithm>
#include <cstdlib>
#include <vector>

namespace ricalc {

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa, double m,
               double fm, double b, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa,
                     double m, double fm, double b, double fb, double whole,
                     double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(f, a, fa, lm, flm, m, fm);
  const double right = simpson(f, m, fm, rm, frm, b, fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_step(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol, int max_depth) {
  if (!(b > a)) return 0.0;
  // Split into a few panels first so narrow features are not missed.
  const int panels = 8;
  double total = 0.0;
  double rough = 0.0;
  std::vector<double> xs(panels + 1), fs(panels + 1);
  for (int i = 0; i <= panels; ++i) {
    xs[i] = a + (b - a) * i / panels;
    fs[i] = f(xs[i]);
    rough += std::abs(fs[i]);
  }
  const double scale = rough * (b - a) / panels + 1e-300;
  for (int i = 0; i < panels; ++i) {
    const double m = 0.5 * (xs[i] + xs[i + 1]);
    const double fm = f(m);
    const double whole = simpson(f, xs[i], fs[i], m, fm, xs[i + 1], fs[i + 1]);
    total += adaptive_step(f, xs[i], fs[i], m, fm, xs[i + 1], fs[i + 1], whole,
                           rel_tol * scale / panels, max_depth);
  }
  return total;
}

// Chunk widths double up to a cap: slowly decaying integrands need a long
// reach, but huge chunks would force the adaptive rule absurdly deep.
constexpr double kMaxChunkWidth = 32.0;

double integrate_left_tail(const std::function<double(double)>& f, double b,
                           double rel_tol) {
  double total = 0.0;
  double width = 1.0;
  double hi = b;
  for (int k = 0; k < 4096; ++k) {
    const double lo = hi - width;
    const double chunk = adaptive_simpson(f, lo, hi, rel_tol);
    total += chunk;
    if (std::abs(chunk) < rel_tol * (std::abs(total) + 1e-300) && k > 3) break;
    hi = lo;
    width = std::min(width * 2.0, kMaxChunkWidth);
  }
  return total;
}

double integrate_right_tail(const std::function<double(double)>& f, double a,
                            double rel_tol) {
  double total = 0.0;
  double width = 1.0;
  double lo = a;
  for (int k = 0; k < 4096; ++k) {
    const double hi = lo + width;
    const double chunk = adaptive_simpson(f, lo, hi, rel_tol);
    total += chunk;
    if (std::abs(chunk) < rel_tol * (std::abs(total) + 1e-300) && k > 3) break;
    lo = hi;
    width = std::min(width * 2.0, kMaxChunkWidth);
  }
  return total;
}

double golden_max(const std::function<double(double)>& f, double a, double b,
                  double tol) {
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - phi * (b - a);
  double x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol * (1.0 + std::abs(a) + std::abs(b))) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    }
  }
  return std::max(f1, f2);
}

double scan_maximum(const std::function<double(double)>& f, double a, double b,
                    int samples) {
  if (!(b > a)) return f(a);
  double best = -kInf;
  int best_i = 0;
  std::vector<double> vals(samples);
  for (int i = 0; i < samples; ++i) {
    const double x = a + (b - a) * i / (samples - 1);
    vals[i] = f(x);
    if (vals[i] > best) {
      best = vals[i];
      best_i = i;
    }
  }
  const double h = (b - a) / (samples - 1);
  const double lo = std::max(a, a + (best_i - 1) * h);
  const double hi = std::min(b, a + (best_i + 1) * h);
  return std::max(best, golden_max(f, lo, hi));
}

double bisect_root(const std::function<double(double)>& f, double a, double b,
                   int iters) {
  double fa = f(a);
  for (int i = 0; i < iters; ++i) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if ((fa <= 0.0) == (fm <= 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

} // namespace ricalc
