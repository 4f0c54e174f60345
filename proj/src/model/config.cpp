// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#include "bayesbench/model/config.hpp"

#include <cmath>

namespace bayesbench {

const char* to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::logistic_regression: return "logistic_regression";
    case ModelKind::robust_regression: return "robust_regression";
    case ModelKind::noisy_or_topic: return "noisy_or_topic";
    case ModelKind::crowdsourced_annotation: return "crowdsourced_annotation";
  }
  return "unknown";
}

std::optional<ModelKind> model_kind_from_string(std::string_view name) {
  if (name == "logistic_regression") return ModelKind::logistic_regression;
  if (name == "robust_regression") return ModelKind::robust_regression;
  if (name == "noisy_or_topic") return ModelKind::noisy_or_topic;
  if (name == "crowdsourced_annotation") return ModelKind::crowdsourced_annotation;
  return std::nullopt;
}

ModelConfig ModelConfig::resolved() const {
  ModelConfig out = *this;
  if (out.n_test == 0) {
    switch (kind) {
      case ModelKind::logistic_regression:
      case ModelKind::robust_regression:
        out.n_test = n_train;
        break;
      case ModelKind::crowdsourced_annotation:
        out.n_test = n_items;
        break;
      case ModelKind::noisy_or_topic:
        out.n_test = 1;  // one held-out word instance
        break;
    }
  }
  return out;
}

std::vector<std::string> ModelConfig::validation_errors() const {
  std::vector<std::string> errors;
  auto positive = [&errors](int value, const char* name) {
    if (value < 1) errors.push_back(std::string(name) + " must be a positive integer");
  };
  switch (kind) {
    case ModelKind::logistic_regression:
    case ModelKind::robust_regression:
      positive(n_train, "n_train");
      if (n_test != 0) positive(n_test, "n_test");
      positive(k_covariates, "k_covariates");
      break;
    case ModelKind::noisy_or_topic:
      positive(n_topics, "n_topics");
      positive(n_words, "n_words");
      break;
    case ModelKind::crowdsourced_annotation:
      positive(n_items, "n_items");
      if (n_test != 0) positive(n_test, "n_test");
      positive(n_labelers, "n_labelers");
      if (n_categories < 2) errors.push_back("n_categories must be at least 2");
      if (!(std::isfinite(j_loc) && j_loc > 0.0))
        errors.push_back("j_loc must be a positive real");
      if (!(std::isfinite(gamma_conc) && gamma_conc > 0.0))
        errors.push_back("gamma_conc must be a positive real");
      if (!(std::isfinite(rho_correct) && rho_correct > 0.0 && rho_correct < 1.0))
        errors.push_back("rho_correct must lie in the open interval (0, 1)");
      break;
  }
  return errors;
}

}  // namespace bayesbench
