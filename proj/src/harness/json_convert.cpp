// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#include "bayesbench/harness/json_convert.hpp"

#include <set>

#include "bayesbench/harness/errors.hpp"

namespace bayesbench {
namespace {

using nlohmann::json;

json vector_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

Eigen::VectorXd vector_from_json(const json& j, const std::string& key,
                                 Eigen::Index expected) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != expected) {
    throw ParseError("params key \"" + key + "\" must be an array of length " +
                     std::to_string(expected));
  }
  Eigen::VectorXd v(expected);
  for (Eigen::Index i = 0; i < expected; ++i) {
    if (!j[static_cast<std::size_t>(i)].is_number()) {
      throw ParseError("params key \"" + key + "\" must hold numbers");
    }
    v[i] = j[static_cast<std::size_t>(i)].get<double>();
  }
  return v;
}

double number_from_json(const json& j, const std::string& key) {
  if (!j.is_number()) {
    throw ParseError("params key \"" + key + "\" must be a number");
  }
  return j.get<double>();
}

void require_keys(const json& params, const std::set<std::string>& expected) {
  for (const auto& [key, value] : params.items()) {
    (void)value;
    if (!expected.contains(key)) {
      throw ParseError("params key \"" + key + "\" unknown to the model layout");
    }
  }
  for (const auto& key : expected) {
    if (!params.contains(key)) {
      throw ParseError("params key \"" + key + "\" is missing");
    }
  }
}

}  // namespace

json param_point_to_json(const ModelConfig& config, const ParamPoint& point) {
  switch (config.kind) {
    case ModelKind::logistic_regression:
      return json{{"alpha", point.alpha}, {"beta", vector_to_json(point.beta)}};
    case ModelKind::robust_regression:
      return json{{"alpha", point.alpha},
                  {"beta", vector_to_json(point.beta)},
                  {"nu", point.nu},
                  {"sigma", point.sigma}};
    case ModelKind::noisy_or_topic:
      return json{{"z", vector_to_json(point.z_topics)}};
    case ModelKind::crowdsourced_annotation: {
      json theta = json::array();
      for (const auto& t : point.theta) theta.push_back(matrix_to_json(t));
      return json{{"pi", vector_to_json(point.pi)}, {"theta", std::move(theta)}};
    }
  }
  return {};
}

ParamPoint param_point_from_json(const ModelConfig& config, const json& params) {
  if (!params.is_object()) throw ParseError("params must be an object");
  ParamPoint point;
  switch (config.kind) {
    case ModelKind::logistic_regression:
    case ModelKind::robust_regression: {
      const bool robust = config.kind == ModelKind::robust_regression;
      require_keys(params, robust
                               ? std::set<std::string>{"alpha", "beta", "nu", "sigma"}
                               : std::set<std::string>{"alpha", "beta"});
      point.alpha = number_from_json(params.at("alpha"), "alpha");
      point.beta =
          vector_from_json(params.at("beta"), "beta", config.k_covariates);
      if (robust) {
        point.nu = number_from_json(params.at("nu"), "nu");
        point.sigma = number_from_json(params.at("sigma"), "sigma");
      }
      break;
    }
    case ModelKind::noisy_or_topic:
      require_keys(params, {"z"});
      point.z_topics = vector_from_json(params.at("z"), "z", config.n_topics);
      break;
    case ModelKind::crowdsourced_annotation: {
      require_keys(params, {"pi", "theta"});
      const int c = config.n_categories;
      point.pi = vector_from_json(params.at("pi"), "pi", c);
      const json& theta = params.at("theta");
      if (!theta.is_array() ||
          theta.size() != static_cast<std::size_t>(config.n_labelers)) {
        throw ParseError("params key \"theta\" must have one matrix per labeler");
      }
      point.theta.resize(config.n_labelers);
      for (int l = 0; l < config.n_labelers; ++l) {
        const json& mat = theta[static_cast<std::size_t>(l)];
        if (!mat.is_array() || mat.size() != static_cast<std::size_t>(c)) {
          throw ParseError("params key \"theta\": matrix " + std::to_string(l) +
                           " must have " + std::to_string(c) + " rows");
        }
        point.theta[l].resize(c, c);
        for (int m = 0; m < c; ++m) {
          const Eigen::VectorXd row = vector_from_json(
              mat[static_cast<std::size_t>(m)],
              "theta[" + std::to_string(l) + "][" + std::to_string(m) + "]", c);
          point.theta[l].row(m) = row.transpose();
        }
      }
      break;
    }
  }
  return point;
}

json observation_block_to_json(const ModelConfig& config,
                               const ObservationBlock& block) {
  switch (config.kind) {
    case ModelKind::logistic_regression:
    case ModelKind::robust_regression:
      return json{{"x", matrix_to_json(block.x)}, {"y", vector_to_json(block.y)}};
    case ModelKind::noisy_or_topic: {
      json obs = json::array();
      for (Eigen::Index i = 0; i < block.word_obs.size(); ++i) {
        obs.push_back(block.word_obs[i]);
      }
      return json{{"word_obs", std::move(obs)}};
    }
    case ModelKind::crowdsourced_annotation: {
      json items = json::array();
      for (const auto& item : block.items) {
        items.push_back(
            json{{"labelers", item.labelers}, {"labels", item.labels}});
      }
      return json{{"items", std::move(items)}};
    }
  }
  return {};
}

json instance_to_json(const ModelInstance& instance) {
  const ModelConfig& config = instance.config;
  json out{{"config",
            {{"model_kind", to_string(config.kind)},
             {"n_train", config.n_train},
             {"n_test", config.n_test},
             {"k_covariates", config.k_covariates},
             {"n_topics", config.n_topics},
             {"n_words", config.n_words},
             {"n_items", config.n_items},
             {"n_labelers", config.n_labelers},
             {"n_categories", config.n_categories},
             {"j_loc", config.j_loc},
             {"gamma_conc", config.gamma_conc},
             {"rho_correct", config.rho_correct}}},
           {"ground_truth", param_point_to_json(config, instance.ground_truth)}};

  if (config.kind == ModelKind::noisy_or_topic) {
    const GraphStructure& g = instance.structure;
    json roles = json::array();
    json parents = json::array();
    json weights = json::array();
    for (int node = 0; node < g.n_nodes(); ++node) {
      roles.push_back(g.is_word(node) ? "word" : "topic");
      parents.push_back(g.parents[node]);
      weights.push_back(g.edge_weights[node]);
    }
    out["structure"] = json{{"n_topics", g.n_topics},
                            {"n_words", g.n_words},
                            {"leak_weight", g.leak_weight},
                            {"parents", std::move(parents)},
                            {"edge_weights", std::move(weights)},
                            {"role", std::move(roles)}};
  }
  if (config.kind == ModelKind::crowdsourced_annotation) {
    out["assignment"] = json{{"train", instance.assignment.train},
                             {"test", instance.assignment.test}};
  }
  return out;
}

json dataset_to_json(const ModelInstance& instance, const Dataset& dataset) {
  return json{{"model_kind", to_string(instance.config.kind)},
              {"instance", instance_to_json(instance)},
              {"train", observation_block_to_json(instance.config, dataset.train)},
              {"test", observation_block_to_json(instance.config, dataset.test)}};
}

}  // namespace bayesbench
