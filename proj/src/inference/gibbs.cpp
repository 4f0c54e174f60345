// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#include "bayesbench/inference/gibbs.hpp"

#include <cmath>
#include <stdexcept>

#include "bayesbench/distributions.hpp"
#include "bayesbench/math.hpp"

namespace bayesbench {
namespace {

double node_weight_sum(const GraphStructure& g, int node,
                       const Eigen::VectorXd& z) {
  double s = g.leak_weight[node];
  const auto& ps = g.parents[node];
  const auto& ws = g.edge_weights[node];
  for (std::size_t i = 0; i < ps.size(); ++i) s += ws[i] * z[ps[i]];
  return s;
}

double node_state(const GraphStructure& g, const ObservationBlock& train,
                  const Eigen::VectorXd& z, int node) {
  return g.is_word(node) ? static_cast<double>(train.word_obs[node - g.n_topics])
                         : z[node];
}

double log_factor(double state, double weight_sum) {
  return state > 0.5 ? log1mexp(weight_sum) : -weight_sum;
}

// Sum of the log factors touching `topic` with its state forced to `value`:
// the topic's own activation prior plus every child factor.
double local_log_score(const ModelInstance& instance,
                       const ObservationBlock& train, Eigen::VectorXd& z,
                       int topic, double value) {
  const GraphStructure& g = instance.structure;
  const double saved = z[topic];
  z[topic] = value;
  double lp = log_factor(value, node_weight_sum(g, topic, z));
  for (int child : g.children[topic]) {
    lp += log_factor(node_state(g, train, z, child),
                     node_weight_sum(g, child, z));
  }
  z[topic] = saved;
  return lp;
}

}  // namespace

double gibbs_conditional(const ModelInstance& instance,
                         const ObservationBlock& train,
                         const ParamPoint& point, int topic) {
  if (instance.config.kind != ModelKind::noisy_or_topic) {
    throw std::invalid_argument("gibbs_conditional: not a noisy-or model");
  }
  Eigen::VectorXd z = point.z_topics;
  const double lp1 = local_log_score(instance, train, z, topic, 1.0);
  const double lp0 = local_log_score(instance, train, z, topic, 0.0);
  // p1 / (p0 + p1) in log space
  return 1.0 / (1.0 + std::exp(lp0 - lp1));
}

ParamPoint gibbs_flip_step(const ModelInstance& instance,
                           const ObservationBlock& train, ParamPoint point,
                           RngStream& rng) {
  if (instance.config.kind != ModelKind::noisy_or_topic) {
    throw std::invalid_argument("gibbs_flip_step: not a noisy-or model");
  }
  Eigen::VectorXd& z = point.z_topics;
  for (int topic = 0; topic < instance.structure.n_topics; ++topic) {
    const double lp1 = local_log_score(instance, train, z, topic, 1.0);
    const double lp0 = local_log_score(instance, train, z, topic, 0.0);
    const double p1 = 1.0 / (1.0 + std::exp(lp0 - lp1));
    z[topic] = sample_bernoulli(rng, p1) ? 1.0 : 0.0;
  }
  return point;
}

}  // namespace bayesbench
