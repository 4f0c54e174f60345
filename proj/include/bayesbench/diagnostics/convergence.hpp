// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <vector>

namespace bayesbench {

//! Split Gelman-Rubin statistic over one scalar coordinate: each chain is
//! halved, and the classic sqrt(var_plus / W) form is computed over the
//! resulting half-chains. Returns NaN when every half is constant (the
//! degenerate-variance flag) and +inf when halves are constant but unequal.
double split_rhat(const std::vector<Eigen::VectorXd>& chains);

//! Effective sample size of pooled chains: per-chain autocovariances
//! (biased, normalized by the pooled variance), combined across chains, and
//! truncated by the initial monotone positive pair-sum rule. Capped at 1.5x
//! the pooled draw count; NaN for constant input.
double ess(const std::vector<Eigen::VectorXd>& chains);

}  // namespace bayesbench
