#pragma once

#include <random>
#include <vector>

#include "ricalc/euclid.hpp"
#include "ricalc/optimal.hpp"
#include "ricalc/step_function.hpp"

namespace ricalc {

/// Deterministic test-input generators: every draw is a pure function of the
/// generator state, so a seed fully determines a corpus.

inline StepFunction random_step(std::mt19937_64& rng, int max_segments = 6) {
  std::uniform_int_distribution<int> nseg(1, max_segments);
  std::uniform_real_distribution<double> pos(0.05, 10.0);
  std::uniform_real_distribution<double> val(0.0, 4.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const int n = nseg(rng);
  std::vector<double> bps;
  for (int i = 0; i < n; ++i) bps.push_back(pos(rng));
  std::sort(bps.begin(), bps.end());
  for (std::size_t i = 1; i < bps.size(); ++i)
    if (bps[i] <= bps[i - 1]) bps[i] = bps[i - 1] + 1e-3;
  std::vector<double> vals;
  for (int i = 0; i < n; ++i) vals.push_back(coin(rng) < 0.15 ? 0.0 : val(rng));
  StepFunction f(bps, vals);
  if (f.is_zero()) return StepFunction::indicator(0.0, 1.0);
  return f;
}

inline StepFunction random_nonincreasing_step(std::mt19937_64& rng,
                                              int max_segments = 6) {
  return rearrange(random_step(rng, max_segments));
}

inline LineStepFunction random_line_step(std::mt19937_64& rng, int max_segments = 5) {
  std::uniform_int_distribution<int> nseg(1, max_segments);
  std::uniform_real_distribution<double> pos(-5.0, 5.0);
  std::uniform_real_distribution<double> val(0.1, 4.0);
  const int n = nseg(rng);
  std::vector<double> bps;
  for (int i = 0; i <= n; ++i) bps.push_back(pos(rng));
  std::sort(bps.begin(), bps.end());
  for (std::size_t i = 1; i < bps.size(); ++i)
    if (bps[i] <= bps[i - 1]) bps[i] = bps[i - 1] + 1e-3;
  std::vector<double> vals;
  for (int i = 0; i < n; ++i) vals.push_back(val(rng));
  return LineStepFunction(bps, vals);
}

inline PiecewiseLinear random_quasiconcave(std::mt19937_64& rng, int max_lines = 3) {
  std::uniform_int_distribution<int> nl(1, max_lines);
  std::uniform_real_distribution<double> logu(-1.0, 1.0);
  const int n = nl(rng);
  std::vector<double> slopes, caps;
  for (int i = 0; i < n; ++i) {
    slopes.push_back(std::pow(10.0, logu(rng)));
    caps.push_back(std::pow(10.0, logu(rng)));
  }
  return quasiconcave_from_lines(slopes, caps);
}

} // namespace ricalc
