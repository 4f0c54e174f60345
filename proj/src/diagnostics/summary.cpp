// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#include "bayesbench/diagnostics/summary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bayesbench/diagnostics/convergence.hpp"

namespace bayesbench {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string idx(const std::string& base, int i) {
  return base + "[" + std::to_string(i) + "]";
}

}  // namespace

std::vector<std::string> coordinate_names(const ModelConfig& config) {
  std::vector<std::string> names;
  switch (config.kind) {
    case ModelKind::logistic_regression:
    case ModelKind::robust_regression:
      names.push_back("alpha");
      for (int k = 0; k < config.k_covariates; ++k) names.push_back(idx("beta", k));
      if (config.kind == ModelKind::robust_regression) {
        names.push_back("nu");
        names.push_back("sigma");
      }
      break;
    case ModelKind::noisy_or_topic:
      for (int j = 0; j < config.n_topics; ++j) names.push_back(idx("z", j));
      break;
    case ModelKind::crowdsourced_annotation:
      for (int m = 0; m < config.n_categories; ++m) names.push_back(idx("pi", m));
      for (int l = 0; l < config.n_labelers; ++l) {
        for (int m = 0; m < config.n_categories; ++m) {
          for (int n = 0; n < config.n_categories; ++n) {
            names.push_back(idx(idx(idx("theta", l), m), n));
          }
        }
      }
      break;
  }
  return names;
}

Eigen::VectorXd flatten_point(const ModelConfig& config,
                              const ParamPoint& point) {
  switch (config.kind) {
    case ModelKind::logistic_regression:
    case ModelKind::robust_regression: {
      const bool robust = config.kind == ModelKind::robust_regression;
      Eigen::VectorXd v(1 + config.k_covariates + (robust ? 2 : 0));
      v[0] = point.alpha;
      v.segment(1, config.k_covariates) = point.beta;
      if (robust) {
        v[1 + config.k_covariates] = point.nu;
        v[2 + config.k_covariates] = point.sigma;
      }
      return v;
    }
    case ModelKind::noisy_or_topic:
      return point.z_topics;
    case ModelKind::crowdsourced_annotation: {
      const int c = config.n_categories;
      Eigen::VectorXd v(c + config.n_labelers * c * c);
      v.head(c) = point.pi;
      Eigen::Index at = c;
      for (int l = 0; l < config.n_labelers; ++l) {
        for (int m = 0; m < c; ++m) {
          for (int n = 0; n < c; ++n) v[at++] = point.theta[l](m, n);
        }
      }
      return v;
    }
  }
  return {};
}

double median_of(std::vector<double> values) {
  if (values.empty()) return kNaN;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

BackendMetrics summarize_backend(const BackendRun& run,
                                 const ModelConfig& config) {
  if (run.trials.empty()) {
    throw std::invalid_argument("summarize_backend: no trials");
  }
  BackendMetrics out;
  out.backend_id = run.backend_id;
  out.trial_final_pll = run.trial_final_pll;
  out.rhat_omitted = run.trials.size() < 2;

  for (const Chain& chain : run.trials) {
    out.trial_inference_seconds.push_back(chain.inference_seconds);
    out.trial_accept_rate.push_back(chain.accept_rate);
    out.total_inference_seconds += chain.inference_seconds;
  }

  // One scalar series per trial per coordinate.
  const std::vector<std::string> names = coordinate_names(config);
  const auto n_coords = static_cast<Eigen::Index>(names.size());
  std::vector<Eigen::MatrixXd> per_trial;  // samples x coords
  for (const Chain& chain : run.trials) {
    Eigen::MatrixXd flat(static_cast<Eigen::Index>(chain.samples.size()),
                         n_coords);
    for (std::size_t s = 0; s < chain.samples.size(); ++s) {
      flat.row(static_cast<Eigen::Index>(s)) =
          flatten_point(config, chain.samples[s]).transpose();
    }
    per_trial.push_back(std::move(flat));
  }

  std::vector<double> ess_rates;
  for (Eigen::Index c = 0; c < n_coords; ++c) {
    std::vector<Eigen::VectorXd> series;
    series.reserve(per_trial.size());
    for (const auto& flat : per_trial) series.push_back(flat.col(c));

    VariableDiagnostics var;
    var.name = names[static_cast<std::size_t>(c)];
    var.ess = ess(series);
    if (std::isnan(var.ess)) var.flags.push_back("degenerate_variance");
    if (out.rhat_omitted) {
      var.r_hat = kNaN;
      var.flags.push_back("rhat_omitted_single_trial");
    } else {
      var.r_hat = split_rhat(series);
      if (std::isnan(var.r_hat) &&
          var.flags.empty()) {  // constant series already flagged via ess
        var.flags.push_back("degenerate_variance");
      }
    }
    var.ess_per_sec = var.ess / out.total_inference_seconds;
    if (!std::isnan(var.ess_per_sec)) ess_rates.push_back(var.ess_per_sec);
    out.variables.push_back(std::move(var));
  }

  if (ess_rates.empty()) {
    out.ess_per_sec = {kNaN, kNaN, kNaN};
  } else {
    out.ess_per_sec.min = *std::min_element(ess_rates.begin(), ess_rates.end());
    out.ess_per_sec.max = *std::max_element(ess_rates.begin(), ess_rates.end());
    out.ess_per_sec.median = median_of(ess_rates);
  }
  return out;
}

RunMetrics summarize(const std::vector<BackendRun>& runs,
                     const ModelConfig& config) {
  RunMetrics metrics;
  metrics.backends.reserve(runs.size());
  for (const BackendRun& run : runs) {
    metrics.backends.push_back(summarize_backend(run, config));
  }
  return metrics;
}

}  // namespace bayesbench
