// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "bayesbench/model/model.hpp"

namespace bayesbench {

//! Parameter values keyed by name, with nested arrays in row-major order.
nlohmann::json param_point_to_json(const ModelConfig& config,
                                   const ParamPoint& point);

//! Strict inverse of param_point_to_json: unknown keys, missing keys, and
//! shape mismatches throw ParseError naming the offending key.
ParamPoint param_point_from_json(const ModelConfig& config,
                                 const nlohmann::json& params);

nlohmann::json observation_block_to_json(const ModelConfig& config,
                                         const ObservationBlock& block);

nlohmann::json instance_to_json(const ModelInstance& instance);

//! Full dataset.json document: model kind, instance (ground truth included;
//! adapters are expected to read only "train"), and both splits.
nlohmann::json dataset_to_json(const ModelInstance& instance,
                               const Dataset& dataset);

}  // namespace bayesbench
