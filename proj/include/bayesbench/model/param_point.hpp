// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <vector>

namespace bayesbench {

//! One point in a model's constrained parameter space. Only the fields of
//! the owning model kind are populated.
struct ParamPoint {
  // regression: intercept and coefficients; robust adds Student-T nu/sigma
  double alpha = 0.0;
  Eigen::VectorXd beta;
  double nu = 0.0;
  double sigma = 0.0;

  // noisy-or: per-topic activation. Exact samplers keep entries in {0, 1};
  // the relaxed backend stores soft values in (0, 1).
  Eigen::VectorXd z_topics;

  // crowdsourced: class prevalence and per-labeler confusion matrices
  // (row = true class, column = reported class; each row is a simplex)
  Eigen::VectorXd pi;
  std::vector<Eigen::MatrixXd> theta;
};

}  // namespace bayesbench
