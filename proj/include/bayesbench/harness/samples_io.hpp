// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include "bayesbench/inference/chain.hpp"
#include "bayesbench/model/config.hpp"

namespace bayesbench {

// Samples file protocol (JSON Lines). One object per retained sample:
//   {"idx": <0-based consecutive int>, "params": {<name>: <scalar or
//   nested array>}}
// followed by a single footer line:
//   {"meta": {"inference_seconds": <real>, "accept_rate": <real>}}
// Values round-trip bit-exactly. This is also the wire format external
// adapters must produce.

void write_samples(const std::filesystem::path& path, const Chain& chain,
                   const ModelConfig& config);

//! Parse and validate a samples file: indices must be consecutive, params
//! must match the model layout, every sample must satisfy the model's
//! support constraints, and the meta footer must be present. Violations
//! throw ParseError naming the line, sample, and coordinate.
Chain read_samples(const std::filesystem::path& path, const ModelConfig& config);

}  // namespace bayesbench
