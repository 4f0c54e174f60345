// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <limits>
#include <span>

namespace bayesbench {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

//! log(sigmoid(m)), stable for large |m|.
inline double log_sigmoid(double m) {
  return m >= 0.0 ? -std::log1p(std::exp(-m)) : m - std::log1p(std::exp(m));
}

//! log(1 - exp(-s)) for s >= 0. Switches estimator at log 2 to avoid
//! losing precision at either end; returns -inf at s = 0.
inline double log1mexp(double s) {
  if (s <= 0.0) return kNegInf;
  if (s < 0.6931471805599453) return std::log(-std::expm1(-s));
  return std::log1p(-std::exp(-s));
}

//! log(exp(a) + exp(b)); treats -inf operands as absent mass.
inline double log_add_exp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = a > b ? a : b;
  const double lo = a > b ? b : a;
  return hi + std::log1p(std::exp(lo - hi));
}

//! log sum of exponentials over a span; -inf for empty or all -inf input.
inline double log_sum_exp(std::span<const double> xs) {
  double hi = kNegInf;
  for (double x : xs) {
    if (x > hi) hi = x;
  }
  if (hi == kNegInf) return kNegInf;
  double acc = 0.0;
  for (double x : xs) acc += std::exp(x - hi);
  return hi + std::log(acc);
}

}  // namespace bayesbench
