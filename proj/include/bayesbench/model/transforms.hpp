// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "bayesbench/model/config.hpp"
#include "bayesbench/model/param_point.hpp"

namespace bayesbench {

// Bijection between a model's constrained continuous parameters and a flat
// unconstrained vector: identity for location parameters, log for positive
// scalars, and an anchored softmax for each simplex. Discrete coordinates
// (noisy-or topic states) are excluded, so that model maps to an empty
// vector. The Jacobian term of the inverse map is added to the unconstrained
// target density by the samplers.

int unconstrained_dim(const ModelConfig& config);

Eigen::VectorXd to_unconstrained(const ModelConfig& config,
                                 const ParamPoint& point);

struct ConstrainedPoint {
  ParamPoint point;
  double log_jacobian = 0.0;
};

ConstrainedPoint from_unconstrained(const ModelConfig& config,
                                    const Eigen::VectorXd& v);

//! Softmax with the last logit anchored at zero: maps u in R^(C-1) onto the
//! interior of the C-simplex; the uniform simplex corresponds to u = 0.
struct SimplexValue {
  Eigen::VectorXd x;
  double log_jacobian = 0.0;  // log|det| of the logits -> simplex map
};
SimplexValue logits_to_simplex(const Eigen::VectorXd& logits);
Eigen::VectorXd simplex_to_logits(const Eigen::VectorXd& x);

}  // namespace bayesbench
