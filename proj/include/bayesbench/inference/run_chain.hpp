// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string_view>

#include "bayesbench/inference/chain.hpp"
#include "bayesbench/model/model.hpp"

namespace bayesbench {

//! Built-in posterior samplers. rwm targets the unconstrained continuous
//! parameters of the regression and crowdsourced models; the other two are
//! for the noisy-or model: exact single-site Gibbs over the binary topics,
//! and random-walk Metropolis over the Gumbel-softmax relaxation.
enum class Backend { rwm, rwm_within_gibbs, relaxed_rwm };

const char* to_string(Backend backend);
std::optional<Backend> backend_from_string(std::string_view name);
bool backend_supports(Backend backend, ModelKind kind);

//! Run one single-chain trial: initialize from the prior (retrying up to 100
//! times if the density is zero), adapt the proposal scale over n_warmup
//! steps, then record n_samples at a frozen scale. The sampling loop is
//! strictly sequential and the reported time covers exactly warmup plus
//! sampling.
Chain run_chain(const ModelInstance& instance, const Dataset& dataset,
                Backend backend, const ChainSettings& settings);

}  // namespace bayesbench
