// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "bayesbench/model/model.hpp"
#include "bayesbench/rng.hpp"

namespace bayesbench {

//! Full conditional P(Z_topic = 1 | all other topics, observed words),
//! computed from the factors that touch the topic: its own activation prior
//! and the factors of its children.
double gibbs_conditional(const ModelInstance& instance,
                         const ObservationBlock& train,
                         const ParamPoint& point, int topic);

//! One single-site Gibbs sweep over all topics in index order.
ParamPoint gibbs_flip_step(const ModelInstance& instance,
                           const ObservationBlock& train, ParamPoint point,
                           RngStream& rng);

}  // namespace bayesbench
