// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#include "bayesbench/harness/run_config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <set>

namespace bayesbench {
namespace {

using nlohmann::json;

bool safe_id(const std::string& id) {
  if (id.empty()) return false;
  for (char c : id) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
          c == '.')) {
      return false;
    }
  }
  return true;
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         const std::set<std::string>& allowed,
                         std::vector<std::string>& errors) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.contains(key)) {
      errors.push_back(path + ": unknown key \"" + key + "\"");
    }
  }
}

void read_int(const json& obj, const char* key, const std::string& path,
              int& out, std::vector<std::string>& errors) {
  if (!obj.contains(key)) return;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) {
    errors.push_back(path + "." + key + ": expected an integer");
    return;
  }
  out = v.get<int>();
}

void read_real(const json& obj, const char* key, const std::string& path,
               double& out, std::vector<std::string>& errors) {
  if (!obj.contains(key)) return;
  const json& v = obj.at(key);
  if (!v.is_number()) {
    errors.push_back(path + "." + key + ": expected a number");
    return;
  }
  out = v.get<double>();
}

void read_bool(const json& obj, const char* key, const std::string& path,
               bool& out, std::vector<std::string>& errors) {
  if (!obj.contains(key)) return;
  const json& v = obj.at(key);
  if (!v.is_boolean()) {
    errors.push_back(path + "." + key + ": expected a boolean");
    return;
  }
  out = v.get<bool>();
}

ModelConfig parse_model(const json& obj, std::vector<std::string>& errors) {
  ModelConfig model;
  const std::string path = "model";
  if (!obj.is_object()) {
    errors.push_back(path + ": expected an object");
    return model;
  }
  reject_unknown_keys(obj, path,
                      {"model_kind", "n_train", "n_test", "k_covariates",
                       "n_topics", "n_words", "n_items", "n_labelers",
                       "n_categories", "j_loc", "gamma_conc", "rho_correct"},
                      errors);
  if (!obj.contains("model_kind") || !obj.at("model_kind").is_string()) {
    errors.push_back(path + ".model_kind: required string");
  } else {
    const auto kind = model_kind_from_string(obj.at("model_kind").get<std::string>());
    if (!kind) {
      errors.push_back(path + ".model_kind: unknown model \"" +
                       obj.at("model_kind").get<std::string>() + "\"");
    } else {
      model.kind = *kind;
    }
  }
  read_int(obj, "n_train", path, model.n_train, errors);
  read_int(obj, "n_test", path, model.n_test, errors);
  read_int(obj, "k_covariates", path, model.k_covariates, errors);
  read_int(obj, "n_topics", path, model.n_topics, errors);
  read_int(obj, "n_words", path, model.n_words, errors);
  read_int(obj, "n_items", path, model.n_items, errors);
  read_int(obj, "n_labelers", path, model.n_labelers, errors);
  read_int(obj, "n_categories", path, model.n_categories, errors);
  read_real(obj, "j_loc", path, model.j_loc, errors);
  read_real(obj, "gamma_conc", path, model.gamma_conc, errors);
  read_real(obj, "rho_correct", path, model.rho_correct, errors);
  for (const auto& e : model.validation_errors()) {
    errors.push_back(path + ": " + e);
  }
  return model;
}

ChainSettings parse_chain(const json& obj, std::vector<std::string>& errors) {
  ChainSettings chain;
  const std::string path = "chain";
  if (!obj.is_object()) {
    errors.push_back(path + ": expected an object");
    return chain;
  }
  reject_unknown_keys(obj, path,
                      {"n_warmup", "n_samples", "target_accept", "init_scale",
                       "temperature"},
                      errors);
  read_int(obj, "n_warmup", path, chain.n_warmup, errors);
  read_int(obj, "n_samples", path, chain.n_samples, errors);
  read_real(obj, "target_accept", path, chain.target_accept, errors);
  read_real(obj, "init_scale", path, chain.init_scale, errors);
  read_real(obj, "temperature", path, chain.temperature, errors);

  if (chain.n_warmup < 0) errors.push_back(path + ".n_warmup: must be nonnegative");
  if (chain.n_samples < 1) errors.push_back(path + ".n_samples: must be positive");
  if (!(chain.target_accept > 0.0 && chain.target_accept < 1.0)) {
    errors.push_back(path + ".target_accept: must lie in the open interval (0, 1)");
  }
  if (!(std::isfinite(chain.init_scale) && chain.init_scale > 0.0)) {
    errors.push_back(path + ".init_scale: must be positive");
  }
  if (!(std::isfinite(chain.temperature) && chain.temperature > 0.0)) {
    errors.push_back(path + ".temperature: must be positive");
  }
  return chain;
}

BackendSpec parse_backend(const json& entry, const std::string& path,
                          std::vector<std::string>& errors) {
  if (entry.is_string()) {
    const auto builtin = backend_from_string(entry.get<std::string>());
    if (!builtin) {
      errors.push_back(path + ": unknown built-in backend \"" +
                       entry.get<std::string>() + "\"");
      return Backend::rwm;
    }
    return *builtin;
  }
  AdapterSpec adapter;
  if (!entry.is_object()) {
    errors.push_back(path + ": expected a backend name or an adapter object");
    return adapter;
  }
  reject_unknown_keys(entry, path, {"backend_id", "command", "timeout_seconds"},
                      errors);
  if (!entry.contains("backend_id") || !entry.at("backend_id").is_string()) {
    errors.push_back(path + ".backend_id: required string");
  } else {
    adapter.backend_id = entry.at("backend_id").get<std::string>();
    if (!safe_id(adapter.backend_id)) {
      errors.push_back(path + ".backend_id: must match [A-Za-z0-9_.-]+");
    }
    if (backend_from_string(adapter.backend_id)) {
      errors.push_back(path + ".backend_id: \"" + adapter.backend_id +
                       "\" collides with a built-in backend name");
    }
  }
  if (!entry.contains("command") || !entry.at("command").is_array() ||
      entry.at("command").empty()) {
    errors.push_back(path + ".command: required non-empty array of strings");
  } else {
    for (const auto& part : entry.at("command")) {
      if (!part.is_string()) {
        errors.push_back(path + ".command: entries must be strings");
        break;
      }
      adapter.command.push_back(part.get<std::string>());
    }
  }
  read_int(entry, "timeout_seconds", path, adapter.timeout_seconds, errors);
  if (adapter.timeout_seconds < 1) {
    errors.push_back(path + ".timeout_seconds: must be positive");
  }
  return adapter;
}

std::vector<BackendSpec> default_backends(ModelKind kind) {
  if (kind == ModelKind::noisy_or_topic) {
    return {Backend::rwm_within_gibbs, Backend::relaxed_rwm};
  }
  return {Backend::rwm};
}

}  // namespace

std::string backend_id_of(const BackendSpec& spec) {
  if (const auto* builtin = std::get_if<Backend>(&spec)) {
    return to_string(*builtin);
  }
  return std::get<AdapterSpec>(spec).backend_id;
}

RunConfig parse_run_config(const json& j) {
  std::vector<std::string> errors;
  RunConfig config;

  if (!j.is_object()) {
    throw ConfigError("config must be a JSON object");
  }
  reject_unknown_keys(j, "config",
                      {"model", "backends", "n_trials", "chain", "seed",
                       "include_warmup_in_plot", "output_dir"},
                      errors);

  if (j.contains("model")) {
    config.model = parse_model(j.at("model"), errors);
  } else {
    errors.push_back("model: required object");
  }

  if (j.contains("chain")) {
    config.chain = parse_chain(j.at("chain"), errors);
  }

  if (j.contains("backends")) {
    const json& list = j.at("backends");
    if (!list.is_array() || list.empty()) {
      errors.push_back("backends: expected a non-empty array");
    } else {
      for (std::size_t i = 0; i < list.size(); ++i) {
        config.backends.push_back(parse_backend(
            list[i], "backends[" + std::to_string(i) + "]", errors));
      }
    }
  } else {
    config.backends = default_backends(config.model.kind);
  }

  read_int(j, "n_trials", "config", config.n_trials, errors);
  if (config.n_trials < 1) errors.push_back("n_trials: must be positive");

  if (j.contains("seed")) {
    const json& v = j.at("seed");
    if (v.is_number_unsigned()) {
      config.seed = v.get<std::uint64_t>();
    } else if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
      config.seed = static_cast<std::uint64_t>(v.get<std::int64_t>());
    } else {
      errors.push_back("seed: expected a nonnegative integer");
    }
  }

  read_bool(j, "include_warmup_in_plot", "config", config.include_warmup_in_plot,
            errors);

  if (j.contains("output_dir")) {
    if (!j.at("output_dir").is_string() ||
        j.at("output_dir").get<std::string>().empty()) {
      errors.push_back("output_dir: expected a non-empty string");
    } else {
      config.output_dir = j.at("output_dir").get<std::string>();
    }
  }

  // Cross-field checks.
  std::set<std::string> seen_ids;
  for (const auto& spec : config.backends) {
    const std::string id = backend_id_of(spec);
    if (!seen_ids.insert(id).second) {
      errors.push_back("backends: duplicate backend id \"" + id + "\"");
    }
    if (const auto* builtin = std::get_if<Backend>(&spec)) {
      if (!backend_supports(*builtin, config.model.kind)) {
        errors.push_back("backends: " + id + " does not support model " +
                         to_string(config.model.kind));
      }
    }
  }

  if (!errors.empty()) {
    throw ConfigError("invalid configuration", std::move(errors));
  }
  config.model = config.model.resolved();
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file: " + path.string());
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file " + path.string() + " is not valid JSON: " +
                      e.what());
  }
  return parse_run_config(j);
}

nlohmann::json run_config_to_json(const RunConfig& config) {
  const ModelConfig model = config.model.resolved();
  json model_json{{"model_kind", to_string(model.kind)},
                  {"n_train", model.n_train},
                  {"n_test", model.n_test},
                  {"k_covariates", model.k_covariates},
                  {"n_topics", model.n_topics},
                  {"n_words", model.n_words},
                  {"n_items", model.n_items},
                  {"n_labelers", model.n_labelers},
                  {"n_categories", model.n_categories},
                  {"j_loc", model.j_loc},
                  {"gamma_conc", model.gamma_conc},
                  {"rho_correct", model.rho_correct}};

  json backends = json::array();
  for (const auto& spec : config.backends) {
    if (const auto* builtin = std::get_if<Backend>(&spec)) {
      backends.push_back(to_string(*builtin));
    } else {
      const auto& adapter = std::get<AdapterSpec>(spec);
      backends.push_back(json{{"backend_id", adapter.backend_id},
                              {"command", adapter.command},
                              {"timeout_seconds", adapter.timeout_seconds}});
    }
  }

  return json{{"model", model_json},
              {"backends", backends},
              {"n_trials", config.n_trials},
              {"chain",
               {{"n_warmup", config.chain.n_warmup},
                {"n_samples", config.chain.n_samples},
                {"target_accept", config.chain.target_accept},
                {"init_scale", config.chain.init_scale},
                {"temperature", config.chain.temperature}}},
              {"seed", config.seed},
              {"include_warmup_in_plot", config.include_warmup_in_plot},
              {"output_dir", config.output_dir.string()}};
}

}  // namespace bayesbench
