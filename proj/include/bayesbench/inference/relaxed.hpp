// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "bayesbench/model/model.hpp"

namespace bayesbench {

//! Concrete-distribution relaxation of one binary choice:
//! softmax((log_alpha + gumbels) / tau). The first coordinate is the soft
//! "active" value used downstream in place of the binary state.
Eigen::Vector2d gumbel_softmax_relax(const Eigen::Vector2d& log_alpha,
                                     double tau, const Eigen::Vector2d& gumbels);

//! Continuous surrogate of the noisy-or posterior. The chain state is one
//! Gumbel pair per topic, laid out [g_active_0, g_inactive_0, g_active_1,
//! ...]; each pair carries a standard Gumbel prior and deterministically
//! induces the topic's soft activation through the tempered softmax, with
//! parent activations feeding children top-down. Binary states in the word
//! likelihood are replaced by the soft values.
class RelaxedNoisyOr {
 public:
  RelaxedNoisyOr(const ModelInstance& instance, const ObservationBlock& train,
                 double tau);

  int dim() const { return 2 * n_topics_; }

  //! Soft activation per topic implied by the Gumbel pairs.
  Eigen::VectorXd soft_activations(const Eigen::VectorXd& gumbels) const;

  //! Gumbel prior over the pairs plus the word likelihood at the induced
  //! soft activations.
  double log_density(const Eigen::VectorXd& gumbels) const;

 private:
  const ModelInstance* instance_;
  const ObservationBlock* train_;
  double tau_;
  int n_topics_;
};

}  // namespace bayesbench
