// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#include "bayesbench/diagnostics/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bayesbench {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kEssCapFactor = 1.5;
constexpr int kMaxLag = 4000;

double mean_of(const Eigen::VectorXd& x) { return x.mean(); }

double sample_variance(const Eigen::VectorXd& x) {
  const double m = x.mean();
  return (x.array() - m).square().sum() / static_cast<double>(x.size() - 1);
}

// Biased autocovariance at lag t, normalized by the series length.
double autocovariance(const Eigen::VectorXd& x, double mean, int t) {
  const int n = static_cast<int>(x.size());
  double acc = 0.0;
  for (int i = 0; i + t < n; ++i) acc += (x[i] - mean) * (x[i + t] - mean);
  return acc / static_cast<double>(n);
}

Eigen::Index common_length(const std::vector<Eigen::VectorXd>& chains) {
  Eigen::Index n = chains.front().size();
  for (const auto& c : chains) n = std::min(n, c.size());
  return n;
}

}  // namespace

double split_rhat(const std::vector<Eigen::VectorXd>& chains) {
  if (chains.empty()) throw std::invalid_argument("split_rhat: no chains");
  const Eigen::Index n = common_length(chains);
  if (n < 4) throw std::invalid_argument("split_rhat: chains shorter than 4");

  const Eigen::Index half = n / 2;
  std::vector<Eigen::VectorXd> halves;
  halves.reserve(2 * chains.size());
  for (const auto& c : chains) {
    halves.push_back(c.head(half));
    halves.push_back(c.segment(n - half, half));
  }

  const auto m = static_cast<Eigen::Index>(halves.size());
  Eigen::VectorXd means(m);
  Eigen::VectorXd vars(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    means[j] = mean_of(halves[j]);
    vars[j] = sample_variance(halves[j]);
  }

  const double w = vars.mean();
  const double b_over_n = sample_variance(means);
  if (w <= 0.0) {
    // Flat halves: flag outright-constant input, report divergence otherwise.
    return b_over_n <= 0.0 ? kNaN
                           : std::numeric_limits<double>::infinity();
  }
  const double nn = static_cast<double>(half);
  const double var_plus = (nn - 1.0) / nn * w + b_over_n;
  return std::sqrt(var_plus / w);
}

double ess(const std::vector<Eigen::VectorXd>& chains) {
  if (chains.empty()) throw std::invalid_argument("ess: no chains");
  const Eigen::Index n = common_length(chains);
  if (n < 8) throw std::invalid_argument("ess: chains shorter than 8");

  const auto m = static_cast<Eigen::Index>(chains.size());
  Eigen::VectorXd means(m);
  Eigen::VectorXd vars(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    means[j] = mean_of(chains[j].head(n));
    vars[j] = sample_variance(chains[j].head(n));
  }
  const double w = vars.mean();
  const double nn = static_cast<double>(n);
  double var_plus = (nn - 1.0) / nn * w;
  if (m >= 2) var_plus += sample_variance(means);
  if (!(var_plus > 0.0)) return kNaN;

  const double pooled = static_cast<double>(m) * nn;

  // Combined autocorrelation at lag t (lag 0 is 1 by convention).
  const auto rho = [&](int t) {
    double mean_acov = 0.0;
    for (Eigen::Index j = 0; j < m; ++j) {
      mean_acov += autocovariance(chains[j].head(n), means[j], t);
    }
    mean_acov /= static_cast<double>(m);
    return 1.0 - (w - mean_acov) / var_plus;
  };

  // Sum consecutive-lag pairs while they stay positive, forcing the pair
  // sums to be non-increasing (initial monotone positive sequence).
  const int max_lag = std::min(static_cast<int>(n) - 1, kMaxLag);
  double tau = -1.0;
  double prev_pair = std::numeric_limits<double>::infinity();
  for (int t = 0; t + 1 <= max_lag; t += 2) {
    const double even = t == 0 ? 1.0 : rho(t);
    const double odd = rho(t + 1);
    double pair = even + odd;
    if (pair <= 0.0) break;
    pair = std::min(pair, prev_pair);
    prev_pair = pair;
    tau += 2.0 * pair;
  }

  tau = std::max(tau, 1.0 / kEssCapFactor);
  return std::min(pooled / tau, kEssCapFactor * pooled);
}

}  // namespace bayesbench
