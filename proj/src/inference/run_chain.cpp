// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#include "bayesbench/inference/run_chain.hpp"

#include <chrono>
#include <stdexcept>

#include "bayesbench/distributions.hpp"
#include "bayesbench/inference/gibbs.hpp"
#include "bayesbench/inference/relaxed.hpp"
#include "bayesbench/inference/rwm.hpp"
#include "bayesbench/math.hpp"
#include "bayesbench/model/transforms.hpp"

namespace bayesbench {
namespace {

constexpr int kMaxInitRetries = 100;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  const std::chrono::duration<double> d = Clock::now() - start;
  // inference_seconds is contractually positive; clocks can tie at ns
  // resolution on trivial runs.
  return std::max(d.count(), 1e-9);
}

void check_settings(const ChainSettings& settings) {
  if (settings.n_warmup < 0) {
    throw std::invalid_argument("run_chain: n_warmup must be nonnegative");
  }
  if (settings.n_samples < 1) {
    throw std::invalid_argument("run_chain: n_samples must be positive");
  }
  if (!(settings.target_accept > 0.0 && settings.target_accept < 1.0)) {
    throw std::invalid_argument("run_chain: target_accept must be in (0, 1)");
  }
  if (!(settings.init_scale > 0.0)) {
    throw std::invalid_argument("run_chain: init_scale must be positive");
  }
  if (!(settings.temperature > 0.0)) {
    throw std::invalid_argument("run_chain: temperature must be positive");
  }
}

// Generic adaptive RWM driver over an unconstrained target. `to_point` maps
// a state vector to the constrained sample that gets recorded.
template <typename TargetFn, typename ToPointFn>
Chain drive_rwm(const TargetFn& target, const ToPointFn& to_point,
                Eigen::VectorXd state, const ChainSettings& settings,
                RngStream rng) {
  Chain chain;
  double log_density = target(state);
  double scale = settings.init_scale;

  const LogDensity density_fn = [&target](const Eigen::VectorXd& v) {
    return target(v);
  };

  if (settings.record_warmup) chain.warmup_samples.reserve(settings.n_warmup);
  for (int i = 1; i <= settings.n_warmup; ++i) {
    RwmResult step = rwm_step(density_fn, state, log_density, scale, rng);
    state = std::move(step.state);
    log_density = step.log_density;
    scale = adapt_scale(scale, step.accepted, i, settings.target_accept);
    if (settings.record_warmup) chain.warmup_samples.push_back(to_point(state));
  }

  chain.samples.reserve(settings.n_samples);
  int accepted = 0;
  for (int i = 0; i < settings.n_samples; ++i) {
    RwmResult step = rwm_step(density_fn, state, log_density, scale, rng);
    state = std::move(step.state);
    log_density = step.log_density;
    accepted += step.accepted ? 1 : 0;
    chain.samples.push_back(to_point(state));
  }
  chain.accept_rate = static_cast<double>(accepted) / settings.n_samples;
  return chain;
}

Chain run_continuous_rwm(const ModelInstance& instance, const Dataset& dataset,
                         const ChainSettings& settings) {
  const ModelConfig& config = instance.config;
  const auto target = [&](const Eigen::VectorXd& v) {
    ConstrainedPoint cp = from_unconstrained(config, v);
    const double lj = log_joint(instance, dataset.train, cp.point);
    return lj == kNegInf ? kNegInf : lj + cp.log_jacobian;
  };
  const auto to_point = [&](const Eigen::VectorXd& v) {
    return from_unconstrained(config, v).point;
  };

  RngStream init_rng = settings.rng.derive(0);
  RngStream step_rng = settings.rng.derive(1);
  Eigen::VectorXd state;
  bool initialized = false;
  for (int attempt = 0; attempt < kMaxInitRetries && !initialized; ++attempt) {
    const ParamPoint start = draw_from_prior(instance, init_rng);
    state = to_unconstrained(config, start);
    initialized = target(state) > kNegInf;
  }
  if (!initialized) {
    throw std::runtime_error(
        "run_chain: failed to find a prior draw with positive density");
  }
  return drive_rwm(target, to_point, std::move(state), settings, step_rng);
}

Chain run_gibbs(const ModelInstance& instance, const Dataset& dataset,
                const ChainSettings& settings) {
  RngStream init_rng = settings.rng.derive(0);
  RngStream step_rng = settings.rng.derive(1);

  Chain chain;
  ParamPoint point = draw_from_prior(instance, init_rng);
  if (settings.record_warmup) chain.warmup_samples.reserve(settings.n_warmup);
  for (int i = 0; i < settings.n_warmup; ++i) {
    point = gibbs_flip_step(instance, dataset.train, std::move(point), step_rng);
    if (settings.record_warmup) chain.warmup_samples.push_back(point);
  }
  chain.samples.reserve(settings.n_samples);
  for (int i = 0; i < settings.n_samples; ++i) {
    point = gibbs_flip_step(instance, dataset.train, std::move(point), step_rng);
    chain.samples.push_back(point);
  }
  chain.accept_rate = 1.0;  // Gibbs moves are always accepted
  return chain;
}

Chain run_relaxed(const ModelInstance& instance, const Dataset& dataset,
                  const ChainSettings& settings) {
  const RelaxedNoisyOr relaxed(instance, dataset.train, settings.temperature);
  const auto target = [&](const Eigen::VectorXd& g) {
    return relaxed.log_density(g);
  };
  const auto to_point = [&](const Eigen::VectorXd& g) {
    ParamPoint p;
    p.z_topics = relaxed.soft_activations(g);
    return p;
  };

  RngStream init_rng = settings.rng.derive(0);
  RngStream step_rng = settings.rng.derive(1);
  Eigen::VectorXd state(relaxed.dim());
  bool initialized = false;
  for (int attempt = 0; attempt < kMaxInitRetries && !initialized; ++attempt) {
    for (int i = 0; i < relaxed.dim(); ++i) state[i] = sample_gumbel(init_rng);
    initialized = target(state) > kNegInf;
  }
  if (!initialized) {
    throw std::runtime_error(
        "run_chain: failed to find a prior draw with positive density");
  }
  return drive_rwm(target, to_point, std::move(state), settings, step_rng);
}

}  // namespace

const char* to_string(Backend backend) {
  switch (backend) {
    case Backend::rwm: return "rwm";
    case Backend::rwm_within_gibbs: return "rwm_within_gibbs";
    case Backend::relaxed_rwm: return "relaxed_rwm";
  }
  return "unknown";
}

std::optional<Backend> backend_from_string(std::string_view name) {
  if (name == "rwm") return Backend::rwm;
  if (name == "rwm_within_gibbs") return Backend::rwm_within_gibbs;
  if (name == "relaxed_rwm") return Backend::relaxed_rwm;
  return std::nullopt;
}

bool backend_supports(Backend backend, ModelKind kind) {
  switch (backend) {
    case Backend::rwm:
      return kind == ModelKind::logistic_regression ||
             kind == ModelKind::robust_regression ||
             kind == ModelKind::crowdsourced_annotation;
    case Backend::rwm_within_gibbs:
    case Backend::relaxed_rwm:
      return kind == ModelKind::noisy_or_topic;
  }
  return false;
}

Chain run_chain(const ModelInstance& instance, const Dataset& dataset,
                Backend backend, const ChainSettings& settings) {
  check_settings(settings);
  if (!backend_supports(backend, instance.config.kind)) {
    throw std::invalid_argument(
        std::string("run_chain: backend ") + to_string(backend) +
        " does not support model " + to_string(instance.config.kind));
  }

  const auto start = Clock::now();
  Chain chain;
  switch (backend) {
    case Backend::rwm:
      chain = run_continuous_rwm(instance, dataset, settings);
      break;
    case Backend::rwm_within_gibbs:
      chain = run_gibbs(instance, dataset, settings);
      break;
    case Backend::relaxed_rwm:
      chain = run_relaxed(instance, dataset, settings);
      break;
  }
  chain.inference_seconds = seconds_since(start);
  chain.backend_id = to_string(backend);
  return chain;
}

}  // namespace bayesbench
