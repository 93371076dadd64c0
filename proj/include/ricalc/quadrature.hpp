#pragma once

#include <cmath>
#include <functional>
#include <limits>

namespace ricalc {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Adaptive Simpson integration of a smooth function on a finite interval.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rel_tol = 1e-11, int max_depth = 30);

/// Integral of f over (-inf, b] (in the given coordinate), assuming f decays.
/// Proceeds by chunks of doubling width until the last chunk is negligible.
double integrate_left_tail(const std::function<double(double)>& f, double b,
                           double rel_tol = 1e-11);

/// Integral of f over [a, +inf), assuming f decays.
double integrate_right_tail(const std::function<double(double)>& f, double a,
                            double rel_tol = 1e-11);

/// Maximum of a continuous function on [a, b]: coarse scan plus golden-section
/// refinement around the best samples.
double scan_maximum(const std::function<double(double)>& f, double a, double b,
                    int samples = 257);

/// Golden-section search for the maximum of a unimodal function on [a, b].
double golden_max(const std::function<double(double)>& f, double a, double b,
                  double tol = 1e-12);

/// Root of a continuous monotone-crossing function on [a, b] with f(a), f(b)
/// of opposite signs, by bisection.
double bisect_root(const std::function<double(double)>& f, double a, double b,
                   int iters = 90);

} // namespace ricalc
