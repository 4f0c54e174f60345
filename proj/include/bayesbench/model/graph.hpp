// Copyright (c) bayesbench contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace bayesbench {

enum class NodeRole { topic, word };

//! Noisy-or network over topic and word nodes. Nodes are indexed with topics
//! first (0..n_topics-1) and words after; the always-on leak is implicit and
//! contributes leak_weight[j] to every node. Edges run from a lower-index
//! topic to a higher-index topic or to a word, so the graph is a DAG and a
//! top-down sweep in index order respects all dependencies.
struct GraphStructure {
  int n_topics = 0;
  int n_words = 0;

  std::vector<std::vector<int>> parents;       // per node, excluding the leak
  std::vector<std::vector<double>> edge_weights;  // aligned with parents
  std::vector<double> leak_weight;

  // child adjacency derived from parents; call rebuild_children after edits
  std::vector<std::vector<int>> children;

  int n_nodes() const { return n_topics + n_words; }
  bool is_word(int node) const { return node >= n_topics; }
  NodeRole role(int node) const {
    return is_word(node) ? NodeRole::word : NodeRole::topic;
  }

  void rebuild_children();
};

}  // namespace bayesbench
