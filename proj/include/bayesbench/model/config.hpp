// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bayesbench {

enum class ModelKind {
  logistic_regression,
  robust_regression,
  noisy_or_topic,
  crowdsourced_annotation,
};

const char* to_string(ModelKind kind);
std::optional<ModelKind> model_kind_from_string(std::string_view name);

//! Sizes and hyperparameters for one benchmark model. Only the fields
//! relevant to `kind` are consulted; the rest are ignored.
struct ModelConfig {
  ModelKind kind = ModelKind::logistic_regression;

  // regression models
  int n_train = 20000;
  int k_covariates = 10;

  // noisy-or topic model
  int n_topics = 30;
  int n_words = 300;

  // crowdsourced annotation model
  int n_items = 10000;
  int n_labelers = 100;
  int n_categories = 3;
  double j_loc = 2.5;
  double gamma_conc = 10.0;
  double rho_correct = 0.5;

  // Held-out set size; 0 means "use the model default" (regression: n_train,
  // crowdsourced: n_items). The noisy-or model always holds out exactly one
  // extra word instance and ignores this field.
  int n_test = 0;

  //! Copy with n_test made concrete.
  ModelConfig resolved() const;

  //! Every violated constraint, one message per field; empty when valid.
  std::vector<std::string> validation_errors() const;
};

}  // namespace bayesbench
