// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "bayesbench/inference/chain.hpp"
#include "bayesbench/model/config.hpp"

namespace bayesbench {

//! Convergence metrics for one flattened scalar coordinate. NaN entries are
//! flagged rather than fatal: a stuck coordinate must not abort a report.
struct VariableDiagnostics {
  std::string name;
  double r_hat = 0.0;
  double ess = 0.0;
  double ess_per_sec = 0.0;
  std::vector<std::string> flags;
};

struct EssPerSecSummary {
  double min = 0.0;
  double median = 0.0;
  double max = 0.0;
};

//! One row of the final report: per-variable diagnostics plus per-trial
//! timing and final predictive log likelihood.
struct BackendMetrics {
  std::string backend_id;
  bool ok = true;
  std::string failure_reason;  // set when !ok; no diagnostics in that case
  std::vector<VariableDiagnostics> variables;
  std::vector<double> trial_inference_seconds;
  std::vector<double> trial_accept_rate;
  std::vector<double> trial_final_pll;
  double total_inference_seconds = 0.0;
  EssPerSecSummary ess_per_sec;
  bool rhat_omitted = false;  // true when fewer than 2 trials ran
};

struct RunMetrics {
  std::vector<BackendMetrics> backends;
};

//! Names of the flattened scalar coordinates, e.g. beta[3] or theta[2][1][0].
std::vector<std::string> coordinate_names(const ModelConfig& config);
Eigen::VectorXd flatten_point(const ModelConfig& config, const ParamPoint& point);

//! Completed trials of one backend, ready for summary.
struct BackendRun {
  std::string backend_id;
  std::vector<Chain> trials;
  std::vector<double> trial_final_pll;  // PLL over each trial's full chain
};

//! Treat each trial as a chain: split-Rhat and ESS per coordinate, ESS per
//! second against summed inference time, and the min/median/max ESS/s row.
//! With a single trial, Rhat is omitted and flagged; ESS is still computed.
BackendMetrics summarize_backend(const BackendRun& run,
                                 const ModelConfig& config);

RunMetrics summarize(const std::vector<BackendRun>& runs,
                     const ModelConfig& config);

//! Middle order statistic (mean of the two middle values for even counts).
double median_of(std::vector<double> values);

}  // namespace bayesbench
