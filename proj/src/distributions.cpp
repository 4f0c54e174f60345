// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#include "bayesbench/distributions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bayesbench/math.hpp"

namespace bayesbench {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kHalfLogTwoPi = 0.91893853320467274178032973640562;
constexpr double kUnitEps = 1e-15;

// Keep uniforms away from 0 and 1 before they hit a log.
double clamp_unit(double u) {
  if (u < kUnitEps) return kUnitEps;
  if (u > 1.0 - kUnitEps) return 1.0 - kUnitEps;
  return u;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

}  // namespace

double sample_standard_normal(RngStream& rng) {
  // Box-Muller; the second variate of the pair is discarded.
  const double u1 = clamp_unit(rng.next_uniform());
  const double u2 = rng.next_uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double sample_normal(RngStream& rng, double loc, double scale) {
  require(std::isfinite(loc) && std::isfinite(scale) && scale > 0.0,
          "sample_normal: scale must be finite and positive");
  return loc + scale * sample_standard_normal(rng);
}

double log_pdf_normal(double x, double loc, double scale) {
  require(std::isfinite(scale) && scale > 0.0,
          "log_pdf_normal: scale must be positive");
  const double z = (x - loc) / scale;
  return -kHalfLogTwoPi - std::log(scale) - 0.5 * z * z;
}

double sample_gamma(RngStream& rng, double shape, double rate) {
  require(std::isfinite(shape) && shape > 0.0,
          "sample_gamma: shape must be positive");
  require(std::isfinite(rate) && rate > 0.0,
          "sample_gamma: rate must be positive");
  if (shape < 1.0) {
    // Boost trick: Gamma(shape) = Gamma(shape + 1) * U^(1/shape).
    const double g = sample_gamma(rng, shape + 1.0, 1.0);
    const double u = clamp_unit(rng.next_uniform());
    return g * std::pow(u, 1.0 / shape) / rate;
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / (3.0 * std::sqrt(d));
  for (;;) {
    double x = 0.0;
    double v = 0.0;
    do {
      x = sample_standard_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = clamp_unit(rng.next_uniform());
    if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) {
      return d * v / rate;
    }
  }
}

double log_pdf_gamma(double x, double shape, double rate) {
  require(std::isfinite(shape) && shape > 0.0,
          "log_pdf_gamma: shape must be positive");
  require(std::isfinite(rate) && rate > 0.0,
          "log_pdf_gamma: rate must be positive");
  if (!(x > 0.0)) return kNegInf;
  return shape * std::log(rate) - std::lgamma(shape) +
         (shape - 1.0) * std::log(x) - rate * x;
}

double sample_exponential(RngStream& rng, double rate) {
  require(std::isfinite(rate) && rate > 0.0,
          "sample_exponential: rate must be positive");
  return -std::log(clamp_unit(rng.next_uniform())) / rate;
}

double log_pdf_exponential(double x, double rate) {
  require(std::isfinite(rate) && rate > 0.0,
          "log_pdf_exponential: rate must be positive");
  if (x < 0.0) return kNegInf;
  return std::log(rate) - rate * x;
}

double sample_student_t(RngStream& rng, double nu, double loc, double scale) {
  require(std::isfinite(nu) && nu > 0.0, "sample_student_t: nu must be positive");
  require(std::isfinite(scale) && scale > 0.0,
          "sample_student_t: scale must be positive");
  const double z = sample_standard_normal(rng);
  const double v = sample_gamma(rng, 0.5 * nu, 0.5);  // chi-squared(nu)
  return loc + scale * z / std::sqrt(v / nu);
}

double log_pdf_student_t(double x, double nu, double loc, double scale) {
  require(std::isfinite(nu) && nu > 0.0, "log_pdf_student_t: nu must be positive");
  require(std::isfinite(scale) && scale > 0.0,
          "log_pdf_student_t: scale must be positive");
  const double z = (x - loc) / scale;
  return std::lgamma(0.5 * (nu + 1.0)) - std::lgamma(0.5 * nu) -
         0.5 * std::log(nu * 3.141592653589793238462643383280) -
         std::log(scale) - 0.5 * (nu + 1.0) * std::log1p(z * z / nu);
}

std::int64_t sample_poisson(RngStream& rng, double lambda) {
  require(std::isfinite(lambda) && lambda > 0.0,
          "sample_poisson: lambda must be positive");
  // Count unit-rate arrivals in [0, lambda); exact for any lambda and free of
  // the exp(-lambda) underflow in the classic multiplicative form.
  std::int64_t count = 0;
  double t = sample_exponential(rng, 1.0);
  while (t <= lambda) {
    ++count;
    t += sample_exponential(rng, 1.0);
  }
  return count;
}

Eigen::VectorXd sample_dirichlet(RngStream& rng, const Eigen::VectorXd& alpha) {
  require(alpha.size() > 0, "sample_dirichlet: alpha must be non-empty");
  for (Eigen::Index i = 0; i < alpha.size(); ++i) {
    require(std::isfinite(alpha[i]) && alpha[i] > 0.0,
            "sample_dirichlet: alpha entries must be positive");
  }
  Eigen::VectorXd out(alpha.size());
  for (Eigen::Index i = 0; i < alpha.size(); ++i) {
    out[i] = std::max(sample_gamma(rng, alpha[i], 1.0),
                      std::numeric_limits<double>::min());
  }
  out /= out.sum();
  return out;
}

double log_pdf_dirichlet(const Eigen::VectorXd& x, const Eigen::VectorXd& alpha) {
  require(alpha.size() > 0 && x.size() == alpha.size(),
          "log_pdf_dirichlet: dimension mismatch");
  double lp = std::lgamma(alpha.sum());
  for (Eigen::Index i = 0; i < alpha.size(); ++i) {
    require(std::isfinite(alpha[i]) && alpha[i] > 0.0,
            "log_pdf_dirichlet: alpha entries must be positive");
    if (!(x[i] > 0.0)) return kNegInf;
    lp += (alpha[i] - 1.0) * std::log(x[i]) - std::lgamma(alpha[i]);
  }
  return lp;
}

int sample_categorical(RngStream& rng, const Eigen::VectorXd& probs) {
  require(probs.size() > 0, "sample_categorical: probs must be non-empty");
  double sum = 0.0;
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    require(std::isfinite(probs[i]) && probs[i] >= 0.0,
            "sample_categorical: probabilities must be nonnegative");
    sum += probs[i];
  }
  require(sum > 0.0, "sample_categorical: probabilities sum to zero");
  const double u = rng.next_uniform() * sum;
  double acc = 0.0;
  int last_positive = 0;
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    if (probs[i] > 0.0) last_positive = static_cast<int>(i);
    acc += probs[i];
    if (u < acc) return static_cast<int>(i);
  }
  return last_positive;  // rounding pushed u past the final cumulative step
}

double sample_gumbel(RngStream& rng) {
  const double u = clamp_unit(rng.next_uniform());
  return -std::log(-std::log(u));
}

double log_pdf_gumbel(double x) { return -x - std::exp(-x); }

bool sample_bernoulli(RngStream& rng, double p) {
  require(std::isfinite(p) && p >= 0.0 && p <= 1.0,
          "sample_bernoulli: p must lie in [0, 1]");
  return rng.next_uniform() < p;
}

}  // namespace bayesbench
