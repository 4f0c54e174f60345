// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#include "bayesbench/model/transforms.hpp"

#include <cmath>
#include <stdexcept>

#include "bayesbench/math.hpp"

namespace bayesbench {
namespace {

void require_finite(const Eigen::VectorXd& v, const char* what) {
  if (!v.allFinite()) {
    throw std::domain_error(std::string(what) + ": non-finite input");
  }
}

}  // namespace

SimplexValue logits_to_simplex(const Eigen::VectorXd& logits) {
  require_finite(logits, "logits_to_simplex");
  const Eigen::Index c = logits.size() + 1;
  Eigen::VectorXd t(c);
  t.head(c - 1) = logits;
  t[c - 1] = 0.0;
  const double hi = t.maxCoeff();
  Eigen::VectorXd x = (t.array() - hi).exp();
  x /= x.sum();

  SimplexValue out;
  out.log_jacobian = x.array().log().sum();  // det of the anchored softmax
  out.x = std::move(x);
  return out;
}

Eigen::VectorXd simplex_to_logits(const Eigen::VectorXd& x) {
  require_finite(x, "simplex_to_logits");
  const Eigen::Index c = x.size();
  if (c < 2) throw std::invalid_argument("simplex_to_logits: need length >= 2");
  Eigen::VectorXd logits(c - 1);
  const double anchor = std::log(x[c - 1]);
  for (Eigen::Index i = 0; i + 1 < c; ++i) {
    logits[i] = std::log(x[i]) - anchor;
  }
  return logits;
}

int unconstrained_dim(const ModelConfig& config) {
  switch (config.kind) {
    case ModelKind::logistic_regression:
      return 1 + config.k_covariates;
    case ModelKind::robust_regression:
      return 3 + config.k_covariates;
    case ModelKind::noisy_or_topic:
      return 0;
    case ModelKind::crowdsourced_annotation:
      return (config.n_categories - 1) *
             (1 + config.n_labelers * config.n_categories);
  }
  return 0;
}

Eigen::VectorXd to_unconstrained(const ModelConfig& config,
                                 const ParamPoint& point) {
  Eigen::VectorXd v(unconstrained_dim(config));
  switch (config.kind) {
    case ModelKind::logistic_regression:
    case ModelKind::robust_regression: {
      v[0] = point.alpha;
      v.segment(1, config.k_covariates) = point.beta;
      if (config.kind == ModelKind::robust_regression) {
        if (!(point.nu > 0.0) || !(point.sigma > 0.0)) {
          throw std::domain_error("to_unconstrained: nu/sigma must be positive");
        }
        v[1 + config.k_covariates] = std::log(point.nu);
        v[2 + config.k_covariates] = std::log(point.sigma);
      }
      break;
    }
    case ModelKind::noisy_or_topic:
      break;  // all coordinates are discrete
    case ModelKind::crowdsourced_annotation: {
      const int c = config.n_categories;
      Eigen::Index at = 0;
      v.segment(at, c - 1) = simplex_to_logits(point.pi);
      at += c - 1;
      for (int l = 0; l < config.n_labelers; ++l) {
        for (int m = 0; m < c; ++m) {
          v.segment(at, c - 1) =
              simplex_to_logits(point.theta[l].row(m).transpose());
          at += c - 1;
        }
      }
      break;
    }
  }
  require_finite(v, "to_unconstrained");
  return v;
}

ConstrainedPoint from_unconstrained(const ModelConfig& config,
                                    const Eigen::VectorXd& v) {
  if (v.size() != unconstrained_dim(config)) {
    throw std::invalid_argument("from_unconstrained: wrong vector length");
  }
  require_finite(v, "from_unconstrained");

  ConstrainedPoint out;
  switch (config.kind) {
    case ModelKind::logistic_regression:
    case ModelKind::robust_regression: {
      out.point.alpha = v[0];
      out.point.beta = v.segment(1, config.k_covariates);
      if (config.kind == ModelKind::robust_regression) {
        const double log_nu = v[1 + config.k_covariates];
        const double log_sigma = v[2 + config.k_covariates];
        out.point.nu = std::exp(log_nu);
        out.point.sigma = std::exp(log_sigma);
        out.log_jacobian = log_nu + log_sigma;
      }
      break;
    }
    case ModelKind::noisy_or_topic:
      break;
    case ModelKind::crowdsourced_annotation: {
      const int c = config.n_categories;
      Eigen::Index at = 0;
      SimplexValue pi = logits_to_simplex(v.segment(at, c - 1));
      at += c - 1;
      out.point.pi = std::move(pi.x);
      out.log_jacobian = pi.log_jacobian;
      out.point.theta.resize(config.n_labelers);
      for (int l = 0; l < config.n_labelers; ++l) {
        out.point.theta[l].resize(c, c);
        for (int m = 0; m < c; ++m) {
          SimplexValue row = logits_to_simplex(v.segment(at, c - 1));
          at += c - 1;
          out.point.theta[l].row(m) = row.x.transpose();
          out.log_jacobian += row.log_jacobian;
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace bayesbench
