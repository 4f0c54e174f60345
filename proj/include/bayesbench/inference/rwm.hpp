// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <functional>

#include "bayesbench/rng.hpp"

namespace bayesbench {

using LogDensity = std::function<double(const Eigen::VectorXd&)>;

struct RwmResult {
  Eigen::VectorXd state;
  double log_density = 0.0;
  bool accepted = false;
};

//! One random-walk Metropolis step: propose state + scale * eps with eps iid
//! standard normal, accept with probability min(1, exp(delta)). The cached
//! log density of the current state is passed in and the new one is returned,
//! so the target is evaluated once per step.
RwmResult rwm_step(const LogDensity& target, const Eigen::VectorXd& state,
                   double current_log_density, double scale, RngStream& rng);

//! Convenience overload that evaluates the current log density first; throws
//! std::invalid_argument when the starting state has zero density.
RwmResult rwm_step(const LogDensity& target, const Eigen::VectorXd& state,
                   double scale, RngStream& rng);

//! Robbins-Monro update on log(scale): step_index^(-0.6) times the
//! difference between the accept indicator and target_accept. Only used
//! during warmup; the scale is frozen afterwards.
double adapt_scale(double scale, bool accepted, int step_index,
                   double target_accept);

}  // namespace bayesbench
