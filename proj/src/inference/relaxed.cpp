// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#include "bayesbench/inference/relaxed.hpp"

#include <cmath>
#include <stdexcept>

#include "bayesbench/distributions.hpp"
#include "bayesbench/math.hpp"

namespace bayesbench {
namespace {

double weight_sum(const GraphStructure& g, int node, const Eigen::VectorXd& z) {
  double s = g.leak_weight[node];
  const auto& ps = g.parents[node];
  const auto& ws = g.edge_weights[node];
  for (std::size_t i = 0; i < ps.size(); ++i) s += ws[i] * z[ps[i]];
  return s;
}

}  // namespace

Eigen::Vector2d gumbel_softmax_relax(const Eigen::Vector2d& log_alpha,
                                     double tau,
                                     const Eigen::Vector2d& gumbels) {
  if (!(std::isfinite(tau) && tau > 0.0)) {
    throw std::domain_error("gumbel_softmax_relax: tau must be positive");
  }
  if (!log_alpha.allFinite()) {
    throw std::domain_error("gumbel_softmax_relax: log_alpha must be finite");
  }
  const Eigen::Vector2d t = (log_alpha + gumbels) / tau;
  const double hi = t.maxCoeff();
  Eigen::Vector2d x = (t.array() - hi).exp();
  return x / x.sum();
}

RelaxedNoisyOr::RelaxedNoisyOr(const ModelInstance& instance,
                               const ObservationBlock& train, double tau)
    : instance_(&instance), train_(&train), tau_(tau),
      n_topics_(instance.structure.n_topics) {
  if (instance.config.kind != ModelKind::noisy_or_topic) {
    throw std::invalid_argument("RelaxedNoisyOr: not a noisy-or model");
  }
  if (!(std::isfinite(tau) && tau > 0.0)) {
    throw std::domain_error("RelaxedNoisyOr: tau must be positive");
  }
}

Eigen::VectorXd RelaxedNoisyOr::soft_activations(
    const Eigen::VectorXd& gumbels) const {
  if (gumbels.size() != dim()) {
    throw std::invalid_argument("RelaxedNoisyOr: wrong state length");
  }
  const GraphStructure& g = instance_->structure;
  Eigen::VectorXd z(n_topics_);
  for (int j = 0; j < n_topics_; ++j) {
    // Parents have lower indices, so their soft values are already in z.
    const double s = weight_sum(g, j, z);
    // log of (P(active), P(inactive)): log(1 - exp(-s)) and -s.
    const Eigen::Vector2d log_alpha(log1mexp(s), -s);
    const Eigen::Vector2d pair = gumbel_softmax_relax(
        log_alpha, tau_, gumbels.segment<2>(2 * j));
    z[j] = pair[0];
  }
  return z;
}

double RelaxedNoisyOr::log_density(const Eigen::VectorXd& gumbels) const {
  if (gumbels.size() != dim()) {
    throw std::invalid_argument("RelaxedNoisyOr: wrong state length");
  }
  if (!gumbels.allFinite()) return kNegInf;
  double lp = 0.0;
  for (Eigen::Index i = 0; i < gumbels.size(); ++i) {
    lp += log_pdf_gumbel(gumbels[i]);
  }
  const Eigen::VectorXd z = soft_activations(gumbels);
  const GraphStructure& g = instance_->structure;
  for (int w = 0; w < g.n_words; ++w) {
    const double s = weight_sum(g, g.n_topics + w, z);
    lp += train_->word_obs[w] == 1 ? log1mexp(s) : -s;
  }
  return lp;
}

}  // namespace bayesbench
