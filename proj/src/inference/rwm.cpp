// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#include "bayesbench/inference/rwm.hpp"

#include <cmath>
#include <stdexcept>

#include "bayesbench/distributions.hpp"
#include "bayesbench/math.hpp"

namespace bayesbench {

RwmResult rwm_step(const LogDensity& target, const Eigen::VectorXd& state,
                   double current_log_density, double scale, RngStream& rng) {
  if (!(current_log_density > kNegInf)) {
    throw std::invalid_argument("rwm_step: current state has zero density");
  }
  Eigen::VectorXd proposal(state.size());
  for (Eigen::Index i = 0; i < state.size(); ++i) {
    proposal[i] = state[i] + scale * sample_standard_normal(rng);
  }
  const double proposal_log_density = target(proposal);
  const double log_ratio = proposal_log_density - current_log_density;
  // The uniform is drawn unconditionally to keep the stream layout fixed.
  const double log_u = std::log(rng.next_uniform());
  if (log_u < log_ratio) {
    return {std::move(proposal), proposal_log_density, true};
  }
  return {state, current_log_density, false};
}

RwmResult rwm_step(const LogDensity& target, const Eigen::VectorXd& state,
                   double scale, RngStream& rng) {
  return rwm_step(target, state, target(state), scale, rng);
}

double adapt_scale(double scale, bool accepted, int step_index,
                   double target_accept) {
  const double rate = std::pow(static_cast<double>(step_index), -0.6);
  const double indicator = accepted ? 1.0 : 0.0;
  return scale * std::exp(rate * (indicator - target_accept));
}

}  // namespace bayesbench
