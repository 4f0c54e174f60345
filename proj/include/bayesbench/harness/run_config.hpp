// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "bayesbench/harness/errors.hpp"
#include "bayesbench/inference/run_chain.hpp"
#include "bayesbench/model/config.hpp"

namespace bayesbench {

//! External engine plugged in over the samples-file protocol: the command is
//! spawned with --dataset/--settings/--out/--seed arguments appended.
struct AdapterSpec {
  std::string backend_id;
  std::vector<std::string> command;
  int timeout_seconds = 600;
};

using BackendSpec = std::variant<Backend, AdapterSpec>;

std::string backend_id_of(const BackendSpec& spec);

//! Full description of one benchmark run, as read from the JSON config.
struct RunConfig {
  ModelConfig model;
  std::vector<BackendSpec> backends;
  int n_trials = 4;
  ChainSettings chain;
  std::uint64_t seed = 42;
  bool include_warmup_in_plot = false;
  std::filesystem::path output_dir = "bench_run";
  bool serial = false;  // CLI-only switch; not a config key
};

//! Strict parse: unknown keys are rejected by name, defaults are filled in,
//! and every violation is reported at once. Throws ConfigError.
RunConfig parse_run_config(const nlohmann::json& j);

//! parse_run_config over a file; parse failures carry the byte offset.
RunConfig load_config(const std::filesystem::path& path);

//! Resolved config (defaults made explicit), as echoed into config.json.
nlohmann::json run_config_to_json(const RunConfig& config);

}  // namespace bayesbench
