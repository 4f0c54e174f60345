// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#include "bayesbench/diagnostics/pll.hpp"

#include <cmath>
#include <stdexcept>

#include "bayesbench/math.hpp"

namespace bayesbench {

double pll_at_n(std::span<const double> test_logliks, int n) {
  if (n < 1) throw std::domain_error("pll_at_n: n must be positive");
  if (static_cast<std::size_t>(n) > test_logliks.size()) {
    throw std::domain_error("pll_at_n: fewer than n log likelihoods");
  }
  return log_sum_exp(test_logliks.subspan(0, static_cast<std::size_t>(n))) -
         std::log(static_cast<double>(n));
}

Eigen::VectorXd sample_test_logliks(const ModelInstance& instance,
                                    const ObservationBlock& test,
                                    const std::vector<ParamPoint>& samples) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(samples.size()));
  for (std::size_t i = 0; i < samples.size(); ++i) {
    out[static_cast<Eigen::Index>(i)] =
        test_pred_loglik(instance, test, samples[i]);
  }
  return out;
}

PllCurve pll_curve_from_logliks(std::string backend_id,
                                const std::vector<Eigen::VectorXd>& per_trial) {
  if (per_trial.empty()) {
    throw std::invalid_argument("pll_curve: need at least one trial");
  }
  const Eigen::Index n = per_trial.front().size();
  for (const auto& t : per_trial) {
    if (t.size() != n) {
      throw std::invalid_argument("pll_curve: trials have mismatched lengths");
    }
  }

  PllCurve curve;
  curve.backend_id = std::move(backend_id);
  curve.min.resize(n);
  curve.mean.resize(n);
  curve.max.resize(n);
  curve.min.setConstant(std::numeric_limits<double>::infinity());
  curve.mean.setZero();
  curve.max.setConstant(kNegInf);

  const double n_trials = static_cast<double>(per_trial.size());
  for (const auto& logliks : per_trial) {
    // Running logsumexp, so the whole sequence costs O(n).
    double lse = kNegInf;
    for (Eigen::Index i = 0; i < n; ++i) {
      lse = log_add_exp(lse, logliks[i]);
      const double pll = lse - std::log(static_cast<double>(i + 1));
      curve.min[i] = std::min(curve.min[i], pll);
      curve.max[i] = std::max(curve.max[i], pll);
      curve.mean[i] += pll / n_trials;
    }
  }
  return curve;
}

PllCurve pll_curve(const std::vector<Chain>& chains,
                   const ModelInstance& instance, const ObservationBlock& test,
                   bool include_warmup) {
  if (chains.empty()) {
    throw std::invalid_argument("pll_curve: need at least one chain");
  }
  std::vector<Eigen::VectorXd> per_trial;
  per_trial.reserve(chains.size());
  for (const Chain& chain : chains) {
    Eigen::VectorXd logliks =
        sample_test_logliks(instance, test, chain.samples);
    if (include_warmup && !chain.warmup_samples.empty()) {
      Eigen::VectorXd warm =
          sample_test_logliks(instance, test, chain.warmup_samples);
      Eigen::VectorXd joined(warm.size() + logliks.size());
      joined << warm, logliks;
      logliks = std::move(joined);
    }
    per_trial.push_back(std::move(logliks));
  }
  return pll_curve_from_logliks(chains.front().backend_id, per_trial);
}

}  // namespace bayesbench
