// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "bayesbench/inference/chain.hpp"
#include "bayesbench/model/model.hpp"

namespace bayesbench {

//! Predictive log likelihood after n samples: log of the average held-out
//! likelihood over the first n per-sample log likelihoods,
//! logsumexp(x_1..x_n) - log(n).
double pll_at_n(std::span<const double> test_logliks, int n);

//! Per-sample-index min/mean/max of the predictive log likelihood across
//! trials, for one backend.
struct PllCurve {
  std::string backend_id;
  Eigen::VectorXd min;
  Eigen::VectorXd mean;
  Eigen::VectorXd max;
};

//! Held-out log likelihood of every sample in order.
Eigen::VectorXd sample_test_logliks(const ModelInstance& instance,
                                    const ObservationBlock& test,
                                    const std::vector<ParamPoint>& samples);

//! Aggregate per-trial running PLL sequences into a curve. All trials must
//! provide the same number of samples.
PllCurve pll_curve_from_logliks(std::string backend_id,
                                const std::vector<Eigen::VectorXd>& per_trial);

//! Convenience composition: score every chain against the test block, then
//! aggregate. With include_warmup, each trial's sequence is its warmup
//! samples followed by its retained samples.
PllCurve pll_curve(const std::vector<Chain>& chains,
                   const ModelInstance& instance, const ObservationBlock& test,
                   bool include_warmup = false);

}  // namespace bayesbench
