// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "bayesbench/model/param_point.hpp"
#include "bayesbench/rng.hpp"

namespace bayesbench {

//! Per-chain sampling protocol. Defaults match the benchmark protocol of
//! 1000 warmup iterations followed by 1000 recorded samples.
struct ChainSettings {
  int n_warmup = 1000;
  int n_samples = 1000;
  double target_accept = 0.35;
  double init_scale = 0.1;
  double temperature = 0.1;  // relaxed noisy-or backend only
  bool record_warmup = false;
  RngStream rng{0};
};

//! Ordered posterior samples from one trial. `samples` holds exactly the
//! post-warmup draws in constrained space; warmup draws are kept separately
//! and only when requested. inference_seconds covers warmup plus sampling
//! and nothing else.
struct Chain {
  std::vector<ParamPoint> samples;
  std::vector<ParamPoint> warmup_samples;
  double accept_rate = 0.0;
  double inference_seconds = 0.0;
  std::string backend_id;
};

}  // namespace bayesbench
