// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#include "bayesbench/model/graph.hpp"

namespace bayesbench {

void GraphStructure::rebuild_children() {
  children.assign(n_nodes(), {});
  for (int node = 0; node < n_nodes(); ++node) {
    for (int parent : parents[node]) {
      children[parent].push_back(node);
    }
  }
}

}  // namespace bayesbench
