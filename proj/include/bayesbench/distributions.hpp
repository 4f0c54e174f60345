// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "bayesbench/rng.hpp"

namespace bayesbench {

// Samplers and log densities for the distributions the benchmark models use.
// Conventions: Normal takes a standard deviation, Gamma and Exponential take
// a rate. Log densities return -inf outside the support instead of throwing;
// invalid parameters (non-finite or out of domain) throw std::domain_error.

double sample_standard_normal(RngStream& rng);
double sample_normal(RngStream& rng, double loc, double scale);
double log_pdf_normal(double x, double loc, double scale);

//! Gamma with mean shape/rate (Marsaglia-Tsang squeeze sampler).
double sample_gamma(RngStream& rng, double shape, double rate);
double log_pdf_gamma(double x, double shape, double rate);

double sample_exponential(RngStream& rng, double rate);
double log_pdf_exponential(double x, double rate);

double sample_student_t(RngStream& rng, double nu, double loc, double scale);
double log_pdf_student_t(double x, double nu, double loc, double scale);

std::int64_t sample_poisson(RngStream& rng, double lambda);

//! Dirichlet draw via normalized Gamma(alpha_i, 1) variates. Entries are
//! strictly positive and sum to 1 up to rounding.
Eigen::VectorXd sample_dirichlet(RngStream& rng, const Eigen::VectorXd& alpha);
double log_pdf_dirichlet(const Eigen::VectorXd& x, const Eigen::VectorXd& alpha);

//! Index drawn with probability probs[i] after renormalization. probs must be
//! nonnegative with a positive sum.
int sample_categorical(RngStream& rng, const Eigen::VectorXd& probs);

//! Standard Gumbel(0, 1) draw; the underlying uniform is clamped to
//! [1e-15, 1 - 1e-15] so the output is always finite.
double sample_gumbel(RngStream& rng);

double log_pdf_gumbel(double x);

bool sample_bernoulli(RngStream& rng, double p);

}  // namespace bayesbench
