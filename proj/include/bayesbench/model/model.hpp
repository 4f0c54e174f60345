// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "bayesbench/model/config.hpp"
#include "bayesbench/model/dataset.hpp"
#include "bayesbench/model/graph.hpp"
#include "bayesbench/model/param_point.hpp"
#include "bayesbench/rng.hpp"

namespace bayesbench {

//! Which labelers see each item; fixed when the model is instantiated so the
//! train assignment never depends on the test set size.
struct LabelerAssignment {
  std::vector<std::vector<int>> train;
  std::vector<std::vector<int>> test;
};

//! A model with ground-truth parameters and fixed structure: it can simulate
//! data and score posterior samples. Immutable after construction.
struct ModelInstance {
  ModelConfig config;
  ParamPoint ground_truth;
  GraphStructure structure;      // noisy-or only
  LabelerAssignment assignment;  // crowdsourced only
};

//! Dirichlet parameter matrix for labeler confusion rows: diagonal
//! gamma_conc * rho_correct, off-diagonal gamma_conc * (1 - rho_correct) /
//! (n_categories - 1). Row m parameterizes the confusion row for true
//! class m.
Eigen::MatrixXd build_alpha_matrix(int n_categories, double gamma_conc,
                                   double rho_correct);

//! P(node active) = 1 - exp(-leak_weight - sum_i edge_weights[i] *
//! parent_states[i]). States may be soft values in [0, 1].
double activation_probability(double leak_weight,
                              const Eigen::VectorXd& edge_weights,
                              const Eigen::VectorXd& parent_states);

//! Draw ground truth from the hyperprior; for the noisy-or model this also
//! samples the graph structure, and for the crowdsourced model the labeler
//! assignment.
ModelInstance instantiate(const ModelConfig& config, RngStream rng);

//! Draw the continuous parameters (and, for noisy-or, the topic states) from
//! the prior of an existing instance. Used for ground truth and for chain
//! initialization.
ParamPoint draw_from_prior(const ModelInstance& instance, RngStream& rng);

//! Simulate disjoint train and test blocks from the instance. Sibling
//! streams keep the train block invariant under changes to the test size.
Dataset simulate(const ModelInstance& instance, RngStream rng);

//! Unnormalized log posterior: log prior(point) + log likelihood(train |
//! point). Support violations yield -inf rather than an exception. The
//! crowdsourced target is collapsed over per-item classes; the noisy-or
//! target is over the binary topic vector with structure weights known.
double log_joint(const ModelInstance& instance, const ObservationBlock& train,
                 const ParamPoint& point);

//! log sum_m pi[m] * prod_(l,y) theta[l](m, y), computed in log space.
double collapsed_item_loglik(const Eigen::VectorXd& pi,
                             const std::vector<Eigen::MatrixXd>& theta,
                             const ItemLabels& labels);

//! log P(test | point) for one posterior sample.
double test_pred_loglik(const ModelInstance& instance,
                        const ObservationBlock& test, const ParamPoint& point);

//! Human-readable description of the first violated support constraint, or
//! nullopt when the point is valid for the model. Noisy-or activations may
//! be soft (anywhere in [0, 1]).
std::optional<std::string> support_violation(const ModelConfig& config,
                                             const ParamPoint& point);

}  // namespace bayesbench
