// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#include "bayesbench/model/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "bayesbench/distributions.hpp"
#include "bayesbench/math.hpp"

namespace bayesbench {
namespace {

constexpr double kSimplexTol = 1e-9;

// Sub-stream keys. Layout matters for reproducibility: the train block must
// never see a draw that belongs to the test block.
enum : std::uint64_t {
  kStreamParams = 0,
  kStreamStructure = 1,
  kStreamLeakWeights = 2,
  kStreamGroundTruth = 3,
  kStreamAssignTrain = 4,
  kStreamAssignTest = 5,
  kStreamTrain = 0,
  kStreamTest = 1,
  kStreamCovariates = 0,
  kStreamOutcomes = 1,
};

void check_config(const ModelConfig& config) {
  const auto errors = config.validation_errors();
  if (!errors.empty()) {
    std::string msg = "invalid model config";
    for (const auto& e : errors) msg += "; " + e;
    throw std::invalid_argument(msg);
  }
}

// log P(state | total weight s), with P(active) = 1 - exp(-s).
double log_bernoulli_noisy_or(double state, double weight_sum) {
  return state > 0.5 ? log1mexp(weight_sum) : -weight_sum;
}

// Total incoming weight of `node` given per-topic activations z (exact or
// soft). Only topic parents contribute; the leak is always on.
double incoming_weight(const GraphStructure& g, int node,
                       const Eigen::VectorXd& z) {
  double s = g.leak_weight[node];
  const auto& ps = g.parents[node];
  const auto& ws = g.edge_weights[node];
  for (std::size_t i = 0; i < ps.size(); ++i) s += ws[i] * z[ps[i]];
  return s;
}

// c distinct values from pool[0..pool.size()), by partial Fisher-Yates.
std::vector<int> choose_without_replacement(std::vector<int> pool,
                                            std::size_t c, RngStream& rng) {
  for (std::size_t t = 0; t < c; ++t) {
    const std::size_t j =
        t + static_cast<std::size_t>(rng.next_below(pool.size() - t));
    std::swap(pool[t], pool[j]);
  }
  pool.resize(c);
  return pool;
}

GraphStructure sample_structure(const ModelConfig& config, RngStream rng) {
  GraphStructure g;
  g.n_topics = config.n_topics;
  g.n_words = config.n_words;
  g.parents.assign(g.n_nodes(), {});
  g.edge_weights.assign(g.n_nodes(), {});
  g.leak_weight.assign(g.n_nodes(), 0.0);

  RngStream structure_rng = rng.derive(kStreamStructure);
  for (int topic = 0; topic < g.n_topics; ++topic) {
    // Candidate children: strictly higher-index topics plus every word, so
    // the node order is already topological.
    std::vector<int> pool;
    pool.reserve(static_cast<std::size_t>(g.n_nodes() - topic - 1));
    for (int t = topic + 1; t < g.n_topics; ++t) pool.push_back(t);
    for (int w = g.n_topics; w < g.n_nodes(); ++w) pool.push_back(w);

    const auto wanted =
        static_cast<std::size_t>(sample_poisson(structure_rng, 3.0));
    const std::size_t count = std::min(wanted, pool.size());
    for (int child :
         choose_without_replacement(std::move(pool), count, structure_rng)) {
      g.parents[child].push_back(topic);
      g.edge_weights[child].push_back(sample_exponential(structure_rng, 1.0));
    }
  }

  RngStream leak_rng = rng.derive(kStreamLeakWeights);
  for (int node = 0; node < g.n_nodes(); ++node) {
    g.leak_weight[node] = sample_exponential(leak_rng, 0.1);
  }

  g.rebuild_children();
  return g;
}

// Item -> labeler sets: |J_i| ~ Poisson(j_loc) resampled into [1, n_labelers],
// members drawn uniformly without replacement.
std::vector<std::vector<int>> sample_assignment(const ModelConfig& config,
                                                int n_items, RngStream rng) {
  std::vector<std::vector<int>> assignment(n_items);
  std::vector<int> all(config.n_labelers);
  std::iota(all.begin(), all.end(), 0);
  for (int i = 0; i < n_items; ++i) {
    std::int64_t size = 0;
    do {
      size = sample_poisson(rng, config.j_loc);
    } while (size < 1 || size > config.n_labelers);
    assignment[i] =
        choose_without_replacement(all, static_cast<std::size_t>(size), rng);
  }
  return assignment;
}

ObservationBlock simulate_regression(const ModelInstance& instance, int n,
                                     RngStream rng) {
  const ModelConfig& config = instance.config;
  const ParamPoint& truth = instance.ground_truth;
  ObservationBlock block;
  block.x.resize(n, config.k_covariates);
  block.y.resize(n);

  RngStream x_rng = rng.derive(kStreamCovariates);
  RngStream y_rng = rng.derive(kStreamOutcomes);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < config.k_covariates; ++k) {
      block.x(i, k) = sample_normal(x_rng, 0.0, 10.0);
    }
  }
  for (int i = 0; i < n; ++i) {
    const double mu = truth.alpha + block.x.row(i).dot(truth.beta);
    if (config.kind == ModelKind::logistic_regression) {
      const double p = 1.0 / (1.0 + std::exp(-mu));
      block.y[i] = sample_bernoulli(y_rng, p) ? 1.0 : 0.0;
    } else {
      block.y[i] = sample_student_t(y_rng, truth.nu, mu, truth.sigma);
    }
  }
  return block;
}

ObservationBlock simulate_words(const ModelInstance& instance, RngStream rng) {
  const GraphStructure& g = instance.structure;
  ObservationBlock block;
  block.word_obs.resize(g.n_words);
  for (int w = 0; w < g.n_words; ++w) {
    const int node = g.n_topics + w;
    const double s = incoming_weight(g, node, instance.ground_truth.z_topics);
    block.word_obs[w] = sample_bernoulli(rng, -std::expm1(-s)) ? 1 : 0;
  }
  return block;
}

ObservationBlock simulate_items(const ModelInstance& instance,
                                const std::vector<std::vector<int>>& assignment,
                                RngStream rng) {
  const ParamPoint& truth = instance.ground_truth;
  ObservationBlock block;
  block.items.resize(assignment.size());

  RngStream class_rng = rng.derive(0);
  RngStream label_rng = rng.derive(1);
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    const int z = sample_categorical(class_rng, truth.pi);
    ItemLabels& item = block.items[i];
    item.labelers = assignment[i];
    item.labels.reserve(item.labelers.size());
    for (int labeler : item.labelers) {
      const Eigen::VectorXd row = truth.theta[labeler].row(z).transpose();
      item.labels.push_back(sample_categorical(label_rng, row));
    }
  }
  return block;
}

double log_prior_regression(const ModelConfig& config, const ParamPoint& p) {
  double lp = log_pdf_normal(p.alpha, 0.0, 10.0);
  for (int k = 0; k < config.k_covariates; ++k) {
    lp += log_pdf_normal(p.beta[k], 0.0, 2.5);
  }
  if (config.kind == ModelKind::robust_regression) {
    lp += log_pdf_gamma(p.nu, 2.0, 10.0);
    lp += log_pdf_exponential(p.sigma, 1.0);
  }
  return lp;
}

double log_lik_regression(const ModelConfig& config,
                          const ObservationBlock& block, const ParamPoint& p) {
  double ll = 0.0;
  const Eigen::VectorXd mu =
      (block.x * p.beta).array() + p.alpha;  // one pass over the design matrix
  const auto n = block.y.size();
  if (config.kind == ModelKind::logistic_regression) {
    for (Eigen::Index i = 0; i < n; ++i) {
      ll += log_sigmoid(block.y[i] > 0.5 ? mu[i] : -mu[i]);
    }
  } else {
    for (Eigen::Index i = 0; i < n; ++i) {
      ll += log_pdf_student_t(block.y[i], p.nu, mu[i], p.sigma);
    }
  }
  return ll;
}

double log_lik_words(const GraphStructure& g, const ObservationBlock& block,
                     const Eigen::VectorXd& z) {
  double ll = 0.0;
  for (int w = 0; w < g.n_words; ++w) {
    const int node = g.n_topics + w;
    ll += log_bernoulli_noisy_or(static_cast<double>(block.word_obs[w]),
                                 incoming_weight(g, node, z));
  }
  return ll;
}

bool is_binary(const Eigen::VectorXd& z) {
  for (Eigen::Index j = 0; j < z.size(); ++j) {
    if (z[j] != 0.0 && z[j] != 1.0) return false;
  }
  return true;
}

bool rows_are_simplexes(const Eigen::MatrixXd& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    double sum = 0.0;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (!(std::isfinite(m(r, c)) && m(r, c) >= 0.0)) return false;
      sum += m(r, c);
    }
    if (std::abs(sum - 1.0) > kSimplexTol) return false;
  }
  return true;
}

}  // namespace

Eigen::MatrixXd build_alpha_matrix(int n_categories, double gamma_conc,
                                   double rho_correct) {
  if (n_categories < 2) {
    throw std::domain_error("build_alpha_matrix: need at least 2 categories");
  }
  if (!(std::isfinite(gamma_conc) && gamma_conc > 0.0)) {
    throw std::domain_error("build_alpha_matrix: gamma_conc must be positive");
  }
  if (!(std::isfinite(rho_correct) && rho_correct > 0.0 && rho_correct < 1.0)) {
    throw std::domain_error("build_alpha_matrix: rho_correct must be in (0, 1)");
  }
  const double off = gamma_conc * (1.0 - rho_correct) / (n_categories - 1);
  Eigen::MatrixXd alpha =
      Eigen::MatrixXd::Constant(n_categories, n_categories, off);
  alpha.diagonal().setConstant(gamma_conc * rho_correct);
  return alpha;
}

double activation_probability(double leak_weight,
                              const Eigen::VectorXd& edge_weights,
                              const Eigen::VectorXd& parent_states) {
  if (!(std::isfinite(leak_weight) && leak_weight >= 0.0)) {
    throw std::domain_error("activation_probability: negative leak weight");
  }
  if (edge_weights.size() != parent_states.size()) {
    throw std::invalid_argument(
        "activation_probability: weights and states differ in length");
  }
  double s = leak_weight;
  for (Eigen::Index i = 0; i < edge_weights.size(); ++i) {
    if (!(std::isfinite(edge_weights[i]) && edge_weights[i] >= 0.0)) {
      throw std::domain_error("activation_probability: negative edge weight");
    }
    s += edge_weights[i] * parent_states[i];
  }
  return -std::expm1(-s);
}

ParamPoint draw_from_prior(const ModelInstance& instance, RngStream& rng) {
  const ModelConfig& config = instance.config;
  ParamPoint p;
  switch (config.kind) {
    case ModelKind::robust_regression:
    case ModelKind::logistic_regression: {
      p.alpha = sample_normal(rng, 0.0, 10.0);
      p.beta.resize(config.k_covariates);
      for (int k = 0; k < config.k_covariates; ++k) {
        p.beta[k] = sample_normal(rng, 0.0, 2.5);
      }
      if (config.kind == ModelKind::robust_regression) {
        p.nu = sample_gamma(rng, 2.0, 10.0);
        p.sigma = sample_exponential(rng, 1.0);
      }
      break;
    }
    case ModelKind::noisy_or_topic: {
      const GraphStructure& g = instance.structure;
      p.z_topics.resize(g.n_topics);
      for (int j = 0; j < g.n_topics; ++j) {
        const double s = incoming_weight(g, j, p.z_topics);
        p.z_topics[j] = sample_bernoulli(rng, -std::expm1(-s)) ? 1.0 : 0.0;
      }
      break;
    }
    case ModelKind::crowdsourced_annotation: {
      const int c = config.n_categories;
      p.pi = sample_dirichlet(
          rng, Eigen::VectorXd::Constant(c, 1.0 / static_cast<double>(c)));
      const Eigen::MatrixXd alpha =
          build_alpha_matrix(c, config.gamma_conc, config.rho_correct);
      p.theta.resize(config.n_labelers);
      for (int l = 0; l < config.n_labelers; ++l) {
        p.theta[l].resize(c, c);
        for (int m = 0; m < c; ++m) {
          p.theta[l].row(m) =
              sample_dirichlet(rng, alpha.row(m).transpose()).transpose();
        }
      }
      break;
    }
  }
  return p;
}

ModelInstance instantiate(const ModelConfig& raw_config, RngStream rng) {
  ModelConfig config = raw_config.resolved();
  check_config(config);

  ModelInstance instance;
  instance.config = config;

  if (config.kind == ModelKind::noisy_or_topic) {
    instance.structure = sample_structure(config, rng);
  }
  if (config.kind == ModelKind::crowdsourced_annotation) {
    instance.assignment.train = sample_assignment(
        config, config.n_items, rng.derive(kStreamAssignTrain));
    instance.assignment.test = sample_assignment(
        config, config.n_test, rng.derive(kStreamAssignTest));
  }

  RngStream truth_rng = config.kind == ModelKind::noisy_or_topic
                            ? rng.derive(kStreamGroundTruth)
                            : rng.derive(kStreamParams);
  instance.ground_truth = draw_from_prior(instance, truth_rng);
  return instance;
}

Dataset simulate(const ModelInstance& instance, RngStream rng) {
  const ModelConfig& config = instance.config;
  Dataset data;
  RngStream train_rng = rng.derive(kStreamTrain);
  RngStream test_rng = rng.derive(kStreamTest);
  switch (config.kind) {
    case ModelKind::logistic_regression:
    case ModelKind::robust_regression:
      data.train = simulate_regression(instance, config.n_train, train_rng);
      data.test = simulate_regression(instance, config.n_test, test_rng);
      break;
    case ModelKind::noisy_or_topic:
      // Topic states stay fixed; each block is an independent word instance.
      data.train = simulate_words(instance, train_rng);
      data.test = simulate_words(instance, test_rng);
      break;
    case ModelKind::crowdsourced_annotation:
      data.train = simulate_items(instance, instance.assignment.train, train_rng);
      data.test = simulate_items(instance, instance.assignment.test, test_rng);
      break;
  }
  return data;
}

double collapsed_item_loglik(const Eigen::VectorXd& pi,
                             const std::vector<Eigen::MatrixXd>& theta,
                             const ItemLabels& labels) {
  if (labels.labelers.empty()) {
    throw std::invalid_argument(
        "collapsed_item_loglik: item has an empty label list");
  }
  if (labels.labelers.size() != labels.labels.size()) {
    throw std::invalid_argument(
        "collapsed_item_loglik: labeler/label lists differ in length");
  }
  double acc = kNegInf;
  for (Eigen::Index m = 0; m < pi.size(); ++m) {
    double term = pi[m] > 0.0 ? std::log(pi[m]) : kNegInf;
    for (std::size_t i = 0; i < labels.labelers.size() && term > kNegInf; ++i) {
      const int l = labels.labelers[i];
      if (l < 0 || static_cast<std::size_t>(l) >= theta.size()) {
        throw std::invalid_argument(
            "collapsed_item_loglik: label references an unknown labeler");
      }
      const double t = theta[l](m, labels.labels[i]);
      term += t > 0.0 ? std::log(t) : kNegInf;
    }
    acc = log_add_exp(acc, term);
  }
  return acc;
}

double log_joint(const ModelInstance& instance, const ObservationBlock& train,
                 const ParamPoint& point) {
  const ModelConfig& config = instance.config;
  switch (config.kind) {
    case ModelKind::logistic_regression:
    case ModelKind::robust_regression: {
      if (point.beta.size() != config.k_covariates) {
        throw std::invalid_argument("log_joint: beta has the wrong length");
      }
      if (!std::isfinite(point.alpha) || !point.beta.allFinite()) return kNegInf;
      if (config.kind == ModelKind::robust_regression &&
          (!(point.nu > 0.0) || !(point.sigma > 0.0))) {
        return kNegInf;
      }
      return log_prior_regression(config, point) +
             log_lik_regression(config, train, point);
    }
    case ModelKind::noisy_or_topic: {
      const GraphStructure& g = instance.structure;
      if (point.z_topics.size() != g.n_topics) {
        throw std::invalid_argument("log_joint: z has the wrong length");
      }
      if (!is_binary(point.z_topics)) return kNegInf;
      double lp = 0.0;
      for (int j = 0; j < g.n_topics; ++j) {
        lp += log_bernoulli_noisy_or(point.z_topics[j],
                                     incoming_weight(g, j, point.z_topics));
      }
      return lp + log_lik_words(g, train, point.z_topics);
    }
    case ModelKind::crowdsourced_annotation: {
      const int c = config.n_categories;
      if (point.pi.size() != c ||
          point.theta.size() != static_cast<std::size_t>(config.n_labelers)) {
        throw std::invalid_argument("log_joint: pi/theta have the wrong shape");
      }
      if (!rows_are_simplexes(point.pi.transpose())) return kNegInf;
      for (const auto& t : point.theta) {
        if (t.rows() != c || t.cols() != c || !rows_are_simplexes(t)) {
          return kNegInf;
        }
      }
      const Eigen::VectorXd prior_alpha =
          Eigen::VectorXd::Constant(c, 1.0 / static_cast<double>(c));
      double lp = log_pdf_dirichlet(point.pi, prior_alpha);
      const Eigen::MatrixXd alpha =
          build_alpha_matrix(c, config.gamma_conc, config.rho_correct);
      for (const auto& t : point.theta) {
        for (int m = 0; m < c; ++m) {
          lp += log_pdf_dirichlet(t.row(m).transpose(), alpha.row(m).transpose());
          if (lp == kNegInf) return kNegInf;
        }
      }
      for (const auto& item : train.items) {
        lp += collapsed_item_loglik(point.pi, point.theta, item);
      }
      return lp;
    }
  }
  return kNegInf;
}

double test_pred_loglik(const ModelInstance& instance,
                        const ObservationBlock& test, const ParamPoint& point) {
  const ModelConfig& config = instance.config;
  // Soft noisy-or activations pass this check, so the relaxed backend can be
  // scored through the same code path as the exact one.
  if (support_violation(config, point)) return kNegInf;
  switch (config.kind) {
    case ModelKind::logistic_regression:
    case ModelKind::robust_regression:
      return log_lik_regression(config, test, point);
    case ModelKind::noisy_or_topic:
      return log_lik_words(instance.structure, test, point.z_topics);
    case ModelKind::crowdsourced_annotation: {
      double ll = 0.0;
      for (const auto& item : test.items) {
        ll += collapsed_item_loglik(point.pi, point.theta, item);
      }
      return ll;
    }
  }
  return kNegInf;
}

std::optional<std::string> support_violation(const ModelConfig& config,
                                             const ParamPoint& point) {
  auto fmt_index = [](const char* name, Eigen::Index i) {
    return std::string(name) + "[" + std::to_string(i) + "]";
  };
  switch (config.kind) {
    case ModelKind::logistic_regression:
    case ModelKind::robust_regression: {
      if (!std::isfinite(point.alpha)) return std::string("alpha is not finite");
      if (point.beta.size() != config.k_covariates) {
        return std::string("beta must have length ") +
               std::to_string(config.k_covariates);
      }
      for (Eigen::Index k = 0; k < point.beta.size(); ++k) {
        if (!std::isfinite(point.beta[k]))
          return fmt_index("beta", k) + " is not finite";
      }
      if (config.kind == ModelKind::robust_regression) {
        if (!(std::isfinite(point.nu) && point.nu > 0.0))
          return std::string("nu must be positive");
        if (!(std::isfinite(point.sigma) && point.sigma > 0.0))
          return std::string("sigma must be positive");
      }
      return std::nullopt;
    }
    case ModelKind::noisy_or_topic: {
      if (point.z_topics.size() != config.n_topics) {
        return std::string("z must have length ") +
               std::to_string(config.n_topics);
      }
      for (Eigen::Index j = 0; j < point.z_topics.size(); ++j) {
        const double v = point.z_topics[j];
        if (!(std::isfinite(v) && v >= 0.0 && v <= 1.0)) {
          return fmt_index("z", j) + " must lie in [0, 1]";
        }
      }
      return std::nullopt;
    }
    case ModelKind::crowdsourced_annotation: {
      const int c = config.n_categories;
      if (point.pi.size() != c) {
        return std::string("pi must have length ") + std::to_string(c);
      }
      double sum = 0.0;
      for (Eigen::Index m = 0; m < point.pi.size(); ++m) {
        if (!(std::isfinite(point.pi[m]) && point.pi[m] >= 0.0)) {
          return fmt_index("pi", m) + " must be nonnegative";
        }
        sum += point.pi[m];
      }
      if (std::abs(sum - 1.0) > kSimplexTol) {
        return std::string("pi must sum to 1");
      }
      if (point.theta.size() != static_cast<std::size_t>(config.n_labelers)) {
        return std::string("theta must have one matrix per labeler");
      }
      for (std::size_t l = 0; l < point.theta.size(); ++l) {
        const auto& t = point.theta[l];
        if (t.rows() != c || t.cols() != c) {
          return "theta[" + std::to_string(l) + "] must be " +
                 std::to_string(c) + "x" + std::to_string(c);
        }
        for (int m = 0; m < c; ++m) {
          double row_sum = 0.0;
          for (int n = 0; n < c; ++n) {
            if (!(std::isfinite(t(m, n)) && t(m, n) >= 0.0)) {
              return "theta[" + std::to_string(l) + "][" + std::to_string(m) +
                     "][" + std::to_string(n) + "] must be nonnegative";
            }
            row_sum += t(m, n);
          }
          if (std::abs(row_sum - 1.0) > kSimplexTol) {
            return "theta[" + std::to_string(l) + "][" + std::to_string(m) +
                   "] must sum to 1";
          }
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace bayesbench
