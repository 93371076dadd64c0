#include "ricalc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <thread>

#include "ricalc/corpus.hpp"
#include "ricalc/euclid.hpp"
#include "ricalc/json_io.hpp"
#include "ricalc/lz.hpp"
#include "ricalc/operators.hpp"
#include "ricalc/optimal.hpp"
#include "ricalc/quadrature.hpp"
#include "ricalc/step_function.hpp"

namespace ricalc {

namespace {

// ---------------------------------------------------------------------------
// Input digests (FNV-1a over fixed-format renderings).

class Digest {
 public:
  void feed_bytes(const char* s) {
    for (; *s; ++s) {
      h_ ^= static_cast<unsigned char>(*s);
      h_ *= 1099511628211ull;
    }
  }
  void feed(double v) {
    char b[48];
    std::snprintf(b, sizeof(b), "%.17g;", v);
    feed_bytes(b);
  }
  void feed(const std::string& s) {
    feed_bytes(s.c_str());
    feed_bytes("|");
  }
  void feed(const StepFunction& f) {
    for (double b : f.breakpoints()) feed(b);
    for (double v : f.values()) feed(v);
    feed_bytes("/");
  }
  void feed(const LineStepFunction& f) {
    for (double b : f.breakpoints) feed(b);
    for (double v : f.values) feed(v);
    feed_bytes("/");
  }
  void feed(const LZParams& x) {
    feed(x.p);
    feed(x.q);
    feed(x.a0);
    feed(x.aI);
    if (x.has_B) {
      feed(x.b0);
      feed(x.bI);
    }
    feed_bytes(x.use_doublestar ? "**" : "*");
  }
  std::string hex() const {
    char b[20];
    std::snprintf(b, sizeof(b), "%016llx", static_cast<unsigned long long>(h_));
    return b;
  }

 private:
  std::uint64_t h_ = 1469598103934665603ull;
};

template <typename... Ts>
std::string digest_of(const Ts&... parts) {
  Digest d;
  (d.feed(parts), ...);
  return d.hex();
}

double rel_defect(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return (std::isinf(a) && std::isinf(b)) ? 0.0 : kInf;
  return std::abs(a - b) / (1.0 + std::abs(a) + std::abs(b));
}

// Probe points around and between all segment boundaries of two expressions.
std::vector<double> probe_points(const PiecewiseExpr& a, const PiecewiseExpr& b) {
  std::vector<double> bs = a.boundaries();
  const auto b2 = b.boundaries();
  bs.insert(bs.end(), b2.begin(), b2.end());
  std::sort(bs.begin(), bs.end());
  bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
  std::vector<double> pts;
  double prev = 0.0;
  for (double x : bs) {
    pts.push_back(prev == 0.0 ? x / 2.0 : std::sqrt(prev * x));
    pts.push_back(x);
    prev = x;
  }
  if (prev == 0.0) prev = 1.0;
  pts.push_back(2.0 * prev);
  pts.push_back(10.0 * prev);
  return pts;
}

double max_rel_diff(const PiecewiseExpr& a, const PiecewiseExpr& b) {
  double worst = 0.0;
  for (double t : probe_points(a, b)) worst = std::max(worst, rel_defect(a.eval(t), b.eval(t)));
  return worst;
}

// A ~-pair f <= g in the Hardy-Littlewood-Polya order, built by flattening a
// prefix of a nonincreasing g to its average.
std::pair<StepFunction, StepFunction> hlp_pair(std::mt19937_64& rng) {
  const StepFunction g = random_nonincreasing_step(rng);
  std::uniform_int_distribution<std::size_t> pick(0, g.segment_count() - 1);
  const double m = g.breakpoints()[pick(rng)];
  const double avg = partial_integral(g, m) / m;
  return {StepFunction::indicator(0.0, m, avg), g};
}

LZParams make_lz(double p, double q, double a0 = 0.0, double aI = 0.0) {
  LZParams x;
  x.p = p;
  x.q = q;
  x.a0 = a0;
  x.aI = aI;
  return x;
}

// Norms used by the order-monotonicity and lemma checks: exact norms plus two
// certified Lorentz tuples.
std::vector<LZParams> monotone_norms() {
  return {make_lz(1, 1), make_lz(2, 2), make_lz(kInf, kInf), make_lz(2, 1),
          make_lz(1.5, 1)};
}

double support_measure(const LineStepFunction& f) {
  double mu = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    if (f.values[i] > 0.0) mu += f.breakpoints[i + 1] - f.breakpoints[i];
  return mu > 0.0 ? mu : 1.0;
}

std::vector<double> log_grid(double lo, double hi, int count) {
  std::vector<double> g;
  for (int i = 0; i < count; ++i)
    g.push_back(lo * std::pow(hi / lo, i / double(count - 1)));
  return g;
}

struct Task {
  std::string id;
  std::function<std::vector<VerifyRow>(std::mt19937_64&)> run;
};

VerifyRow row(std::string check, std::string digest, double lhs, double rhs,
              double constant, double tolerance, bool pass) {
  return {std::move(check), std::move(digest), lhs, rhs, constant, tolerance, pass};
}

// ---------------------------------------------------------------------------
// Suite: preliminaries.

void add_preliminaries(std::vector<Task>& tasks, const SuiteConfig& cfg) {
  const int n = cfg.n;
  const double tol = cfg.tol;

  tasks.push_back({"pq-duality", [n, tol](std::mt19937_64& rng) {
    std::vector<VerifyRow> rows;
    for (int i = 0; i < n; ++i) {
      const StepFunction f = random_step(rng), g = random_step(rng);
      const double lhs = inner_product(apply_P(f), g);
      const double rhs = inner_product(apply_Q(g), f);
      const double d = rel_defect(lhs, rhs);
      rows.push_back(row("pq-duality", digest_of(f, g), lhs, rhs, d, tol, d < tol));
    }
    return rows;
  }});

  tasks.push_back({"stieltjes-identities", [n, tol](std::mt19937_64& rng) {
    std::vector<VerifyRow> rows;
    for (int i = 0; i < n; ++i) {
      const StepFunction f = random_step(rng);
      const PiecewiseExpr S = apply_S(f);
      const double d_sum = max_rel_diff(S, add(apply_P(f), apply_Q(f)));
      rows.push_back(
          row("s-sum", digest_of(f), 0.0, 0.0, d_sum, tol, d_sum < tol));
      const double d_pq = max_rel_diff(S, compose_P(apply_Q(f)));
      rows.push_back(row("s-compose-pq", digest_of(f), 0.0, 0.0, d_pq, tol, d_pq < tol));
      const double d_qp = max_rel_diff(S, compose_Q(apply_P(f)));
      rows.push_back(row("s-compose-qp", digest_of(f), 0.0, 0.0, d_qp, tol, d_qp < tol));
      const PiecewiseExpr Ss = apply_S(rearrange(f));
      const double d_lvl = max_rel_diff(Ss, compose_Q(doublestar(f)));
      rows.push_back(
          row("s-level-identity", digest_of(f), 0.0, 0.0, d_lvl, tol, d_lvl < tol));
    }
    return rows;
  }});

  tasks.push_back({"rearrangement-axioms", [n](std::mt19937_64& rng) {
    std::vector<VerifyRow> rows;
    for (int i = 0; i < n; ++i) {
      const StepFunction f = random_step(rng), g = random_step(rng);
      const StepFunction fs = rearrange(f), gs = rearrange(g);
      // Equimeasurability: identical distribution at all critical levels.
      double worst = 0.0;
      std::vector<double> levels = {0.0};
      for (double v : f.values()) {
        levels.push_back(v * 0.5);
        levels.push_back(v);
        levels.push_back(v * 1.0000001);
      }
      for (double lam : levels)
        worst = std::max(worst, std::abs(distribution(f, lam) - distribution(fs, lam)));
      rows.push_back(row("equimeasurable", digest_of(f), 0.0, 0.0, worst, 1e-12,
                         worst <= 1e-12));
      // Idempotence of the rearrangement.
      const bool idem = rearrange(fs) == fs;
      rows.push_back(row("rearrange-idempotent", digest_of(f), idem ? 0.0 : 1.0, 0.0,
                         idem ? 0.0 : 1.0, 0.0, idem));
      // Subadditivity of the running integral of the rearrangement.
      const StepFunction hs = rearrange(add(f, g));
      std::vector<double> grid = hs.breakpoints();
      grid.insert(grid.end(), fs.breakpoints().begin(), fs.breakpoints().end());
      grid.insert(grid.end(), gs.breakpoints().begin(), gs.breakpoints().end());
      double viol = 0.0;
      for (double t : grid)
        viol = std::max(viol, partial_integral(hs, t) - partial_integral(fs, t) -
                                  partial_integral(gs, t));
      const double scale = 1.0 + fs.total_integral() + gs.total_integral();
      rows.push_back(row("doublestar-subadditive", digest_of(f, g), 0.0, 0.0,
                         viol / scale, 1e-12, viol <= 1e-12 * scale));
      // Hardy-Littlewood inequality.
      const double hl_l = inner_product(f, g);
      const double hl_r = inner_product(fs, gs);
      rows.push_back(row("hardy-littlewood", digest_of(f, g), hl_l, hl_r, hl_r - hl_l,
                         1e-12, hl_l <= hl_r * (1.0 + 1e-12) + 1e-12));
    }
    return rows;
  }});

  tasks.push_back({"hardy-lemma", [n](std::mt19937_64& rng) {
    std::vector<VerifyRow> rows;
    for (int i = 0; i < n; ++i) {
      auto [f, g] = hlp_pair(rng);
      const StepFunction h = random_nonincreasing_step(rng);
      const bool order = hlp_compare(f, g).holds;
      const double lhs = inner_product(f, h);
      const double rhs = inner_product(g, h);
      const bool pass = order && lhs <= rhs * (1.0 + 1e-12) + 1e-12;
      rows.push_back(row("hardy-lemma", digest_of(f, g, h), lhs, rhs, rhs - lhs, 1e-12,
                         pass));
    }
    return rows;
  }});

  const int pairs = std::min(n, 200);
  tasks.push_back({"hlp-norm-monotone", [pairs](std::mt19937_64& rng) {
    std::vector<VerifyRow> rows;
    const auto norms = monotone_norms();
    for (int i = 0; i < pairs; ++i) {
      auto [f, g] = hlp_pair(rng);
      double worst = 0.0;
      for (const LZParams& X : norms) {
        const double nf = lz_norm(f, X), ng = lz_norm(g, X);
        worst = std::max(worst, (nf - ng) / (1.0 + ng));
      }
      rows.push_back(row("hlp-norm-monotone", digest_of(f, g), 0.0, 0.0, worst, 1e-7,
                         worst <= 1e-7));
    }
    return rows;
  }});

  const int dil = std::min(n, 100);
  tasks.push_back({"dilation-bound", [dil](std::mt19937_64& rng) {
    std::vector<VerifyRow> rows;
    std::uniform_real_distribution<double> la(-0.7, 0.7);
    for (int i = 0; i < dil; ++i) {
      const StepFunction f = random_step(rng);
      const double a = std::pow(10.0, la(rng));
      double worst = 0.0;
      for (double p : {1.0, 2.0, kInf}) {
        const LZParams X = make_lz(p, p);
        const double nd = lz_norm(dilate(f, a), X);
        const double bound = std::max(1.0, 1.0 / a) * lz_norm(f, X);
        worst = std::max(worst, (nd - bound) / (1.0 + bound));
      }
      rows.push_back(
          row("dilation-bound", digest_of(f, a), 0.0, 0.0, worst, 1e-7, worst <= 1e-7));
    }
    return rows;
  }});

  tasks.push_back({"fundamental-relation", [](std::mt19937_64&) {
    std::vector<VerifyRow> rows;
    const std::vector<double> ts = {0.1, 0.7, 1.0, 3.0, 10.0};
    for (double p : {1.0, 2.0, kInf}) {
      const LZParams X = make_lz(p, p);
      const double pp = std::isinf(p) ? 1.0 : (p == 1.0 ? kInf : p / (p - 1.0));
      const LZParams Xp = make_lz(pp, pp);
      double worst = 0.0;
      for (double t : ts)
        worst = std::max(
            worst,
            std::abs(fundamental_function(X, t) * fundamental_function(Xp, t) - t) / t);
      rows.push_back(row("fundamental-exact", digest_of(X), 0.0, 0.0, worst, 1e-9,
                         worst < 1e-9));
    }
    // Quasinorm case: the product is only proportional to t; assert the ratio
    // is constant across scales.
    const LZParams X = make_lz(2, 1);
    const LZParams Xp = make_lz(2, kInf);
    double lo = kInf, hi = 0.0;
    for (double t : ts) {
      const double r = fundamental_function(X, t) * fundamental_function(Xp, t) / t;
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    rows.push_back(row("fundamental-proportional", digest_of(X), lo, hi, hi / lo, 1e-6,
                       hi / lo <= 1.0 + 1e-6));
    return rows;
  }});
}

// ---------------------------------------------------------------------------
// Suite: maximal.

// Ratio interval of f**(t) / (Mf)*(t) over a log grid.
std::pair<double, double> herz_interval(const LineStepFunction& f, int grid_points) {
  const StepFunction fs = rearrange_line(f);
  const PiecewiseExpr fss = apply_P(fs);
  const double mu = support_measure(f);
  double lo = kInf, hi = 0.0;
  for (double t : log_grid(0.01 * mu, 100.0 * mu, grid_points)) {
    const double r = fss.eval(t) / maximal_rearrangement_at(f, t);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return {lo, hi};
}

void add_maximal(std::vector<Task>& tasks, const SuiteConfig& cfg) {
  (void)cfg;

  tasks.push_back({"herz-explicit", [](std::mt19937_64&) {
    std::vector<VerifyRow> rows;
    const LineStepFunction f({0.0, 1.0}, {1.0});
    double worst = 0.0, rlo = kInf, rhi = 0.0;
    for (double t : log_grid(0.01, 100.0, 50)) {
      const double exact = std::min(1.0, 2.0 / (t + 1.0));
      const double computed = maximal_rearrangement_at(f, t);
      worst = std::max(worst, std::abs(computed - exact));
      const double r = std::min(1.0, 1.0 / t) / computed;
      rlo = std::min(rlo, r);
      rhi = std::max(rhi, r);
    }
    rows.push_back(
        row("herz-explicit", digest_of(f), 0.0, 0.0, worst, 1e-6, worst < 1e-6));
    rows.push_back(row("herz-explicit-ratio", digest_of(f), rlo, rhi, rhi / rlo, 1e-6,
                       rlo >= 0.5 - 1e-6 && rhi <= 1.0 + 1e-6));
    return rows;
  }});

  tasks.push_back({"herz-corpus", [](std::mt19937_64& rng) {
    std::vector<VerifyRow> rows;
    double lo20 = kInf, hi20 = 0.0, lo40 = kInf, hi40 = 0.0;
    for (int i = 0; i < 40; ++i) {
      const LineStepFunction f = random_line_step(rng);
      auto [lo, hi] = herz_interval(f, 50);
      const bool ok = lo > 1e-6 && hi < 1e6;
      rows.push_back(row("herz-ratio", digest_of(f), lo, hi, hi / lo, 0.0, ok));
      if (i < 20) {
        lo20 = std::min(lo20, lo);
        hi20 = std::max(hi20, hi);
      }
      lo40 = std::min(lo40, lo);
      hi40 = std::max(hi40, hi);
    }
    const double drift =
        std::max(std::abs(lo40 - lo20) / lo20, std::abs(hi40 - hi20) / hi20);
    rows.push_back(row("herz-stability", digest_of(std::string("corpus-40")), lo40,
                       hi40, drift, 0.10, drift < 0.10));
    return rows;
  }});

  tasks.push_back({"maximal-dominates", [](std::mt19937_64& rng) {
    std::vector<VerifyRow> rows;
    for (int i = 0; i < 25; ++i) {
      const LineStepFunction f = random_line_step(rng);
      double worst = 0.0;
      for (std::size_t k = 0; k < f.values.size(); ++k) {
        const double x = 0.5 * (f.breakpoints[k] + f.breakpoints[k + 1]);
        worst = std::max(worst, f(x) - maximal_function_at(f, x));
      }
      rows.push_back(
          row("maximal-dominates", digest_of(f), 0.0, 0.0, worst, 1e-9, worst <= 1e-9));
    }
    return rows;
  }});

  tasks.push_back({"maximal-invariance", [](std::mt19937_64& rng) {
    std::vector<VerifyRow> rows;
    const LZParams X = make_lz(2, 2);
    for (int i = 0; i < 10; ++i) {
      const StepFunction f = random_step(rng);
      const StepFunction fs = rearrange(f);
      // An equimeasurable reshuffle: permute the level blocks and shift them.
      std::vector<std::size_t> order(fs.segment_count());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      std::uniform_real_distribution<double> off(0.0, 3.0);
      double cursor = off(rng);
      std::vector<double> bps = {cursor}, vals = {0.0};
      for (std::size_t k : order) {
        const double len =
            fs.breakpoints()[k] - (k == 0 ? 0.0 : fs.breakpoints()[k - 1]);
        cursor += len;
        bps.push_back(cursor);
        vals.push_back(fs.values()[k]);
      }
      const StepFunction shuffled(bps, vals);
      const double a = maximal_range_norm(f, X);
      const double b = maximal_range_norm(shuffled, X);
      const double d = rel_defect(a, b);
      rows.push_back(row("maximal-invariance", digest_of(f, shuffled), a, b, d, 1e-12,
                         d <= 1e-12));
    }
    return rows;
  }});

  tasks.push_back({"maximal-nonexistence", [](std::mt19937_64&) {
    std::vector<VerifyRow> rows;
    const LZParams X = make_lz(1, 1);
    const StepFunction chi = StepFunction::indicator(0.0, 1.0);
    const double sigma = maximal_range_norm(chi, X);
    const bool cond_false = psi_condition(X) == Ternary::False;
    rows.push_back(row("maximal-nonexistence", digest_of(X, chi), sigma, kInf, 0.0, 0.0,
                       std::isinf(sigma) && cond_false));
    return rows;
  }});

  tasks.push_back({"maximal-chain", [](std::mt19937_64& rng) {
    std::vector<VerifyRow> rows;
    // Induced range norm for X = L^{1,1;[1,-2]} against the closed-form
    // partner norm L^{inf,inf;[0,3]}.
    const LZParams X = make_lz(1, 1, 1.0, -2.0);
    const LZParams closed = make_lz(kInf, kInf, 0.0, 3.0);
    double rlo = kInf, rhi = 0.0;
    for (int i = 0; i < 20; ++i) {
      const StepFunction f = random_step(rng);
      const double a = maximal_range_norm(f, X);
      const double b = lz_norm(f, closed);
      const double r = a / b;
      rlo = std::min(rlo, r);
      rhi = std::max(rhi, r);
      rows.push_back(row("maximal-chain", digest_of(f, X), a, b, r, 0.0,
                         std::isfinite(r) && r > 0.0));
    }
    rows.push_back(row("maximal-chain-interval", digest_of(X), rlo, rhi, rhi / rlo, 0.0,
                       std::isfinite(rhi / rlo) && rhi / rlo < 50.0));
    return rows;
  }});
}

// ---------------------------------------------------------------------------
// Suite: fractional (gamma = 1/2, n = 1 throughout).

void add_fractional(std::vector<Task>& tasks, const SuiteConfig& cfg) {
  const double gamma = 0.5, ndim = 1.0;
  const int n = std::min(cfg.n, 200);

  tasks.push_back({"t-alpha-properties", [n](std::mt19937_64& rng) {
    std::vector<VerifyRow> rows;
    for (int i = 0; i < n; ++i) {
      const StepFunction f = random_step(rng);
      const PiecewiseExpr t0 = apply_T_alpha(f, 0.0);
      const double d0 = max_rel_diff(t0, PiecewiseExpr::from_step(rearrange(f)));
      rows.push_back(row("t-alpha-zero", digest_of(f), 0.0, 0.0, d0, 1e-12, d0 < 1e-12));
      const PiecewiseExpr th = apply_T_alpha(f, 0.5);
      const StepFunction fs = rearrange(f);
      double worst = 0.0;
      for (double t : probe_points(th, PiecewiseExpr::from_step(fs)))
        worst = std::max(worst, fs(t) - th.eval(t));
      rows.push_back(row("t-alpha-dominates", digest_of(f), 0.0, 0.0, worst, 1e-9,
                         worst <= 1e-9));
    }
    return rows;
  }});

  tasks.push_back({"frac-upper-bound", [gamma](std::mt19937_64& rng) {
    std::vector<VerifyRow> rows;
    double c10 = 0.0, c20 = 0.0;
    for (int i = 0; i < 20; ++i) {
      const LineStepFunction f = random_line_step(rng);
      const double mu = support_measure(f);
      const StepFunction mg_star = empirical_rearrangement(
          [&](double x) { return fractional_maximal_at(f, gamma, x); }, -400.0, 400.0,
          4000);
      const PiecewiseExpr fss = doublestar(rearrange_line(f));
      double C = 0.0;
      for (double t : log_grid(0.02 * mu, 5.0 * mu, 25)) {
        const double lhs = mg_star(t);
        const double rhs = sup_power_weighted(fss, t, gamma);
        C = std::max(C, lhs / rhs);
      }
      rows.push_back(
          row("frac-upper-bound", digest_of(f), 0.0, 0.0, C, 0.0, C < 100.0));
      if (i < 10) c10 = std::max(c10, C);
      c20 = std::max(c20, C);
    }
    const double drift = (c20 - c10) / c10;
    rows.push_back(row("frac-upper-stability", digest_of(std::string("corpus-20")), c10,
                       c20, drift, 0.10, drift < 0.10));
    return rows;
  }});

  tasks.push_back({"frac-sup-vs-simple", [gamma, ndim](std::mt19937_64& rng) {
    std::vector<VerifyRow> rows;
    const LZParams X = make_lz(2, 2);
    for (int i = 0; i < 10; ++i) {
      const StepFunction f = random_step(rng);
      const double simple = frac_range_norm_simple(f, X, gamma, ndim);
      const double est = frac_range_norm_sup_estimate(f, X, gamma, ndim, 60).lower;
      rows.push_back(row("frac-sup-vs-simple", digest_of(f, X), est, simple,
                         est / simple, 1e-9, est >= simple * (1.0 - 1e-9)));
    }
    return rows;
  }});

  tasks.push_back({"t-bound-match", [gamma, ndim](std::mt19937_64&) {
    std::vector<VerifyRow> rows;
    const double alpha = gamma / ndim;
    for (const LZParams& X : t_boundedness_sweep()) {
      const Ternary pred = T_boundedness_predicate(X, alpha);
      const bool num = T_boundedness_numeric(X, alpha);
      const double l = pred == Ternary::True ? 1.0 : 0.0;
      const double r = num ? 1.0 : 0.0;
      rows.push_back(row("t-bound-match", digest_of(X), l, r, std::abs(l - r), 0.0,
                         pred != Ternary::Unknown && l == r));
    }
    return rows;
  }});

  tasks.push_back({"frac-growth-witness", [gamma, ndim](std::mt19937_64&) {
    std::vector<VerifyRow> rows;
    // X = L^{4,4} fails the fundamental-decay condition at gamma/n = 1/2:
    // translated unit blocks drive the range functional arbitrarily high.
    const LZParams X = make_lz(4, 4);
    const LZParams Xp = make_lz(4.0 / 3.0, 4.0 / 3.0);
    const bool fund = frac_fund_condition(X, gamma, ndim);
    double prev = lz_norm_nonincreasing(
        apply_R(StepFunction::indicator(0.0, 1.0), gamma, ndim), Xp);
    const double base = prev;
    for (double b : {10.0, 100.0, 1000.0}) {
      const StepFunction h = StepFunction::indicator(b, b + 1.0);
      const double v = lz_norm_nonincreasing(apply_R(h, gamma, ndim), Xp);
      rows.push_back(
          row("frac-growth-witness", digest_of(X, b), v, prev, v / prev, 0.0, v > prev));
      prev = v;
    }
    rows.push_back(row("frac-growth-total", digest_of(X), prev, base, prev / base, 0.0,
                       !fund && prev / base > 3.0));
    return rows;
  }});
}

// ---------------------------------------------------------------------------
// Suite: hilbert.

void add_hilbert(std::vector<Task>& tasks, const SuiteConfig& cfg) {
  (void)cfg;

  tasks.push_back({"hilbert-log-value", [](std::mt19937_64&) {
    std::vector<VerifyRow> rows;
    const LineStepFunction f({-1.0, 1.0}, {1.0});
    const double expected = std::log(3.0) / std::acos(-1.0);
    const double at2 = hilbert_transform(f, 2.0).value;
    const double atm2 = hilbert_transform(f, -2.0).value;
    const double d = std::abs(at2 - expected) + std::abs(atm2 + expected);
    rows.push_back(row("hilbert-log-value", digest_of(f), at2, expected, d, 1e-12,
                       d < 1e-12));
    return rows;
  }});

  tasks.push_back({"hilbert-odd-symmetry", [](std::mt19937_64& rng) {
    std::vector<VerifyRow> rows;
    std::uniform_real_distribution<double> radius(0.1, 3.0), value(0.1, 4.0),
        center(-2.0, 2.0), probe(0.05, 6.0);
    for (int i = 0; i < 50; ++i) {
      // A function symmetric about a random center c.
      const double c = center(rng);
      std::vector<double> rs = {radius(rng), radius(rng)};
      std::sort(rs.begin(), rs.end());
      if (rs[1] - rs[0] < 1e-3) rs[1] = rs[0] + 1e-3;
      std::vector<double> vs = {value(rng), value(rng)};
      const LineStepFunction f(
          {c - rs[1], c - rs[0], c + rs[0], c + rs[1]}, {vs[1], vs[0], vs[1]});
      const double d = probe(rng) + rs[1]; // outside the breakpoints
      const double sum =
          hilbert_transform(f, c + d).value + hilbert_transform(f, c - d).value;
      const double scale = 1.0 + std::abs(hilbert_transform(f, c + d).value);
      rows.push_back(row("hilbert-odd-symmetry", digest_of(f, d), 0.0, 0.0,
                         std::abs(sum) / scale, 1e-10, std::abs(sum) <= 1e-10 * scale));
    }
    return rows;
  }});

  tasks.push_back({"hilbert-vs-stieltjes", [](std::mt19937_64& rng) {
    std::vector<VerifyRow> rows;
    for (int i = 0; i < 10; ++i) {
      const LineStepFunction f = random_line_step(rng);
      const double mu = support_measure(f);
      const StepFunction hf_star = empirical_rearrangement(
          [&](double x) {
            const HilbertValue h = hilbert_transform(f, x);
            return h.at_breakpoint ? 0.0 : std::abs(h.value);
          },
          -100.0, 100.0, 4000);
      const PiecewiseExpr sf = apply_S(rearrange_line(f));
      double C = 0.0;
      for (double t : log_grid(0.05 * mu, 5.0 * mu, 25))
        C = std::max(C, hf_star(t) / sf.eval(t));
      rows.push_back(
          row("hilbert-vs-stieltjes", digest_of(f), 0.0, 0.0, C, 0.0, C < 10.0));
    }
    return rows;
  }});

  tasks.push_back({"eta-checks", [](std::mt19937_64&) {
    std::vector<VerifyRow> rows;
    const StepFunction chi = StepFunction::indicator(0.0, 1.0);
    const double v = hilbert_range_norm(chi, make_lz(2, 2));
    const double expected = std::sqrt(6.0);
    rows.push_back(row("eta-norm", digest_of(chi), v, expected,
                       std::abs(v - expected), 1e-7, std::abs(v - expected) < 1e-7));
    const bool c1 = eta_condition(make_lz(2, 2)) == Ternary::True;
    const bool c2 = eta_condition(make_lz(1, 1)) == Ternary::False;
    rows.push_back(row("eta-condition", digest_of(std::string("L2,L1")), c1 ? 1 : 0,
                       c2 ? 1 : 0, 0.0, 0.0, c1 && c2));
    return rows;
  }});
}

// ---------------------------------------------------------------------------
// Suite: riesz (gamma = 1/2, n = 1; alpha = n/gamma = 2).

void add_riesz(std::vector<Task>& tasks, const SuiteConfig& cfg) {
  const double gamma = 0.5, ndim = 1.0;
  const int n = std::min(cfg.n, 100);

  tasks.push_back({"riesz-closed-form", [gamma](std::mt19937_64&) {
    std::vector<VerifyRow> rows;
    const LineStepFunction f({-1.0, 1.0}, {1.0});
    const double v = riesz_potential(f, gamma, 0.0);
    const double expected = riesz_constant(gamma) * 2.0 / gamma;
    rows.push_back(row("riesz-closed-form", digest_of(f), v, expected,
                       std::abs(v - expected), 1e-12, std::abs(v - expected) < 1e-12));
    // Translation invariance.
    const LineStepFunction g({4.0, 6.0}, {1.0});
    const double w = riesz_potential(g, gamma, 5.0);
    rows.push_back(row("riesz-translation", digest_of(g), w, expected,
                       std::abs(w - expected), 1e-12, std::abs(w - expected) < 1e-12));
    return rows;
  }});

  tasks.push_back({"s-alpha-tail-identity", [n](std::mt19937_64& rng) {
    std::vector<VerifyRow> rows;
    for (int i = 0; i < n; ++i) {
      const StepFunction f = random_step(rng);
      for (double alpha : {1.5, 2.0, 3.0}) {
        const PiecewiseExpr S = apply_S_alpha(f, alpha);
        const double c_alpha = (alpha - 1.0) / alpha;
        const PiecewiseExpr Pf = apply_P(f);
        double worst = 0.0;
        for (double t : probe_points(S, Pf)) {
          const double lhs = S.eval(t);
          const double rhs =
              c_alpha * weighted_tail_integral(Pf, t, 1.0 / alpha - 1.0);
          worst = std::max(worst, rel_defect(lhs, rhs));
        }
        rows.push_back(row("s-alpha-tail-identity", digest_of(f, alpha), 0.0, 0.0,
                           worst, 1e-9, worst < 1e-9));
      }
    }
    return rows;
  }});

  tasks.push_back({"s-alpha-lower-bound", [n, gamma, ndim](std::mt19937_64& rng) {
    std::vector<VerifyRow> rows;
    const double r = gamma / ndim;
    for (int i = 0; i < n; ++i) {
      const StepFunction g = random_step(rng);
      const PiecewiseExpr gss = doublestar(g);
      double worst = 0.0;
      for (double t : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        const double lhs = weighted_tail_integral(gss, t, r - 1.0);
        const double rhs = (1.0 / (1.0 - r)) * std::pow(t, r) * gss.eval(t);
        worst = std::max(worst, (rhs - lhs) / (1.0 + rhs));
      }
      rows.push_back(row("s-alpha-lower-bound", digest_of(g), 0.0, 0.0, worst, 1e-9,
                         worst <= 1e-9));
    }
    return rows;
  }});

  tasks.push_back({"riesz-rearranged-bound", [gamma](std::mt19937_64& rng) {
    std::vector<VerifyRow> rows;
    for (int i = 0; i < 10; ++i) {
      const LineStepFunction f = random_line_step(rng);
      const double mu = support_measure(f);
      const StepFunction ig_star = empirical_rearrangement(
          [&](double x) { return riesz_potential(f, gamma, x); }, -400.0, 400.0, 4000);
      const PiecewiseExpr fss = doublestar(rearrange_line(f));
      double C = 0.0;
      for (double t : log_grid(0.02 * mu, 5.0 * mu, 25)) {
        const double rhs = weighted_tail_integral(fss, t, gamma - 1.0);
        C = std::max(C, ig_star(t) / rhs);
      }
      rows.push_back(
          row("riesz-rearranged-bound", digest_of(f), 0.0, 0.0, C, 0.0, C < 100.0));
    }
    return rows;
  }});

  tasks.push_back({"xi-checks", [](std::mt19937_64&) {
    std::vector<VerifyRow> rows;
    const double alpha = 2.0; // n/gamma
    const bool c1 = xi_condition(make_lz(1.5, 1.5), alpha) == Ternary::True;
    const bool c2 = xi_condition(make_lz(4, 4), alpha) == Ternary::False;
    rows.push_back(row("xi-condition", digest_of(std::string("L3/2,L4")), c1 ? 1 : 0,
                       c2 ? 1 : 0, 0.0, 0.0, c1 && c2));
    return rows;
  }});

  tasks.push_back({"riesz-chain", [gamma, ndim](std::mt19937_64& rng) {
    std::vector<VerifyRow> rows;
    // X = L^{3/2,3/2}: the tabulated range partner is Y = L^{6,3/2}; the
    // induced functional should be equivalent to the Y-associate norm.
    const LZParams X = make_lz(1.5, 1.5);
    const LZParams Yp = make_lz(6.0 / 5.0, 3.0);
    double rlo = kInf, rhi = 0.0;
    for (int i = 0; i < 20; ++i) {
      const StepFunction f = random_step(rng);
      const double a = riesz_range_norm(f, X, gamma, ndim);
      const double b = lz_norm(f, Yp);
      const double r = a / b;
      rlo = std::min(rlo, r);
      rhi = std::max(rhi, r);
      rows.push_back(
          row("riesz-chain", digest_of(f, X), a, b, r, 0.0, std::isfinite(r) && r > 0.0));
    }
    rows.push_back(row("riesz-chain-interval", digest_of(X), rlo, rhi, rhi / rlo, 0.0,
                       std::isfinite(rhi / rlo) && rhi / rlo < 50.0));
    return rows;
  }});
}

// ---------------------------------------------------------------------------
// Suite: lemmas.

LenkaCheck random_lenka(std::mt19937_64& rng, double beta, const LZParams& X) {
  std::uniform_int_distribution<int> nn(1, 6);
  std::uniform_real_distribution<double> coeff(0.1, 3.0), pos(0.1, 8.0);
  const int k = nn(rng);
  std::vector<double> a, t;
  for (int j = 0; j < k; ++j) {
    a.push_back(coeff(rng));
    t.push_back(pos(rng));
  }
  std::sort(t.begin(), t.end());
  for (std::size_t j = 1; j < t.size(); ++j)
    if (t[j] <= t[j - 1]) t[j] = t[j - 1] + 1e-3;
  return lemma_lenka_check(a, t, beta, X);
}

void add_lemmas(std::vector<Task>& tasks, const SuiteConfig& cfg) {
  const int n = cfg.n;

  tasks.push_back({"unsup-ratio", [n](std::mt19937_64& rng) {
    std::vector<VerifyRow> rows;
    std::uniform_real_distribution<double> tau_pick(0.05, 12.0);
    double max_ratio = 0.0;
    for (int i = 0; i < n; ++i) {
      const PiecewiseLinear phi = random_quasiconcave(rng);
      const StepFunction f = random_nonincreasing_step(rng);
      const double tau = tau_pick(rng);
      const UnsupCheck c = lemma_unsup_check(phi, f, tau);
      const double ratio = c.rhs > 0.0 ? c.lhs / c.rhs : 0.0;
      max_ratio = std::max(max_ratio, ratio);
      rows.push_back(row("unsup-ratio", digest_of(f, tau), c.lhs, c.rhs, ratio, 6.0,
                         c.pass));
    }
    rows.push_back(row("unsup-max-ratio", digest_of(std::string("summary")), max_ratio,
                       6.0, max_ratio, 6.0, max_ratio <= 6.0 * (1.0 + 1e-9)));
    return rows;
  }});

  tasks.push_back({"lenka", [](std::mt19937_64& rng) {
    std::vector<VerifyRow> rows;
    const std::vector<double> betas = {0.25, 0.5, 0.75};
    const std::vector<LZParams> spaces = {make_lz(1, 1), make_lz(2, 2), make_lz(2, 1),
                                          make_lz(kInf, kInf)};
    double lo100 = kInf, hi100 = 0.0, lo200 = kInf, hi200 = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double beta = betas[i % betas.size()];
      const LZParams& X = spaces[(i / 3) % spaces.size()];
      const LenkaCheck c = random_lenka(rng, beta, X);
      if (i < 100) {
        rows.push_back(row("lenka-ratio", digest_of(beta, X, double(i)), c.lhs, c.rhs,
                           c.ratio, 0.0,
                           std::isfinite(c.ratio) && c.ratio > 0.0));
        lo100 = std::min(lo100, c.ratio);
        hi100 = std::max(hi100, c.ratio);
      }
      lo200 = std::min(lo200, c.ratio);
      hi200 = std::max(hi200, c.ratio);
    }
    const double drift =
        std::max(std::abs(lo200 - lo100) / lo100, std::abs(hi200 - hi100) / hi100);
    rows.push_back(row("lenka-stability", digest_of(std::string("corpus-200")), lo200,
                       hi200, drift, 0.10, drift < 0.10));
    return rows;
  }});
}

} // namespace

// Parameter sweep for the supremum-operator boundedness criterion at
// alpha = 1/2 (critical index 2): covers bounded and unbounded regions,
// including the borderline p = 2 with and without admissible log exponents.
std::vector<LZParams> t_boundedness_sweep() {
  std::vector<LZParams> sweep;
  const auto add = [&](double p, double q, double a0, double aI) {
    sweep.push_back(make_lz(p, q, a0, aI));
  };
  for (double p : {1.2, 1.5, 1.9})
    for (double q : {1.0, 2.0, kInf}) {
      add(p, q, 0.0, 0.0);
      add(p, q, 1.0, -1.0);
    }                                            // 18 bounded
  add(1, 1, 0.0, 0.0);
  add(1, 1, 1.0, 0.0);
  add(1, 1, 0.0, -1.0);                          // 3 bounded
  for (double q : {1.0, 2.0}) {
    add(2, q, 0.0, 0.0);
    add(2, q, 1.0, -1.0);
    add(2, q, -1.0, 1.0);
  }                                              // 6 unbounded
  add(2, kInf, 0.0, 0.0);
  add(2, kInf, -1.0, 1.0);
  add(2, kInf, -0.5, 2.0);
  add(2, kInf, 0.0, 0.5);                        // 4 bounded
  add(2, kInf, 1.0, 0.0);
  add(2, kInf, 0.0, -1.0);
  add(2, kInf, 1.0, -1.0);
  add(2, kInf, 0.5, 1.0);
  add(2, kInf, -1.0, -0.5);                      // 5 unbounded
  for (double p : {2.5, 3.0, 4.0})
    for (double q : {1.0, 2.0, kInf}) {
      add(p, q, 0.0, 0.0);
      add(p, q, 1.0, 1.0);
    }                                            // 18 unbounded
  for (double p : {1.1, 1.3})
    for (double q : {1.5, 3.0}) add(p, q, 0.5, -0.5); // 4 bounded
  add(2, 4, 0.0, 0.0);
  add(2, 4, 2.0, 2.0);                           // 2 unbounded
  return sweep;                                  // 60 tuples
}

std::vector<VerifyRow> run_suite(const SuiteConfig& cfg) {
  std::vector<Task> tasks;
  const bool all = cfg.suite == "all";
  if (all || cfg.suite == "preliminaries") add_preliminaries(tasks, cfg);
  if (all || cfg.suite == "maximal") add_maximal(tasks, cfg);
  if (all || cfg.suite == "fractional") add_fractional(tasks, cfg);
  if (all || cfg.suite == "hilbert") add_hilbert(tasks, cfg);
  if (all || cfg.suite == "riesz") add_riesz(tasks, cfg);
  if (all || cfg.suite == "lemmas") add_lemmas(tasks, cfg);
  if (tasks.empty()) throw std::invalid_argument("unknown suite: " + cfg.suite);

  std::vector<std::vector<VerifyRow>> results(tasks.size());
  const int jobs = std::max(1, cfg.jobs);
  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      // Each task owns a stream derived from (seed, task id), so scheduling
      // cannot influence the results.
      Digest d;
      d.feed(tasks[i].id);
      std::mt19937_64 rng(cfg.seed * 0x9e3779b97f4a7c15ull ^
                          std::hash<std::string>{}(tasks[i].id));
      results[i] = tasks[i].run(rng);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<VerifyRow> rows;
  for (auto& part : results) rows.insert(rows.end(), part.begin(), part.end());
  std::sort(rows.begin(), rows.end(), [](const VerifyRow& a, const VerifyRow& b) {
    if (a.check != b.check) return a.check < b.check;
    if (a.inputs_digest != b.inputs_digest) return a.inputs_digest < b.inputs_digest;
    if (a.lhs != b.lhs) return a.lhs < b.lhs;
    if (a.rhs != b.rhs) return a.rhs < b.rhs;
    return a.constant < b.constant;
  });
  return rows;
}

void write_report_csv(const std::vector<VerifyRow>& rows, std::ostream& os) {
  os << "check,inputs_digest,lhs,rhs,constant,tolerance,pass\n";
  for (const VerifyRow& r : rows) {
    os << r.check << ',' << r.inputs_digest << ',' << format_number(r.lhs) << ','
       << format_number(r.rhs) << ',' << format_number(r.constant) << ','
       << format_number(r.tolerance) << ',' << (r.pass ? "true" : "false") << '\n';
  }
}

int count_failures(const std::vector<VerifyRow>& rows) {
  int failures = 0;
  for (const VerifyRow& r : rows)
    if (!r.pass) ++failures;
  return failures;
}

nlohmann::json summary_json(const SuiteConfig& cfg, const std::vector<VerifyRow>& rows) {
  nlohmann::json by_check = nlohmann::json::object();
  for (const VerifyRow& r : rows) {
    auto& entry = by_check[r.check];
    if (entry.is_null()) entry = {{"rows", 0}, {"failures", 0}};
    entry["rows"] = entry["rows"].get<int>() + 1;
    if (!r.pass) entry["failures"] = entry["failures"].get<int>() + 1;
  }
  return {{"suite", cfg.suite},
          {"seed", cfg.seed},
          {"n", cfg.n},
          {"tol", cfg.tol},
          {"rows", rows.size()},
          {"failures", count_failures(rows)},
          {"checks", by_check}};
}

} // namespace ricalc
