// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <vector>

namespace bayesbench {

//! Labels one item received: labelers[i] produced labels[i]. Labeler ids are
//! distinct within an item.
struct ItemLabels {
  std::vector<int> labelers;
  std::vector<int> labels;
};

//! Observations for one split. Regression models fill x/y, the noisy-or
//! model fills word_obs, the crowdsourced model fills items.
struct ObservationBlock {
  Eigen::MatrixXd x;         // n x k covariates
  Eigen::VectorXd y;         // outcomes; 0/1 for logistic
  Eigen::VectorXi word_obs;  // 0/1 per word node
  std::vector<ItemLabels> items;
};

//! Train/test pair simulated from one model instance. The two blocks are
//! drawn independently from sibling random streams.
struct Dataset {
  ObservationBlock train;
  ObservationBlock test;
};

}  // namespace bayesbench
