// Copyright 2026 The treecover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TREECOVER_TREE_H_
#define TREECOVER_TREE_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treecover/errors.h"

namespace treecover {

// Node ids are 1-based and contiguous. Index 0 is never a valid node.
using NodeId = int32_t;
// Edge lengths, depths and walk costs are exact integers.
using Cost = int64_t;

struct Edge {
  NodeId parent = 0;
  NodeId child = 0;
  Cost length = 1;
};

// Immutable rooted tree with positive integer edge lengths.
//
// Children are kept in ascending id order, which fixes the depth-first
// traversal and therefore the leaf order used by every solver. A leaf is a
// non-root node without children; a single-node tree has no leaves.
class RootedTree {
 public:
  // Validates the edge list and precomputes depths and traversal orders.
  // Throws TreeError when the edges do not form a tree rooted at `root`.
  RootedTree(int32_t node_count, NodeId root, std::span<const Edge> edges);

  int32_t node_count() const { return node_count_; }
  NodeId root() const { return root_; }
  bool contains(NodeId v) const { return v >= 1 && v <= node_count_; }

  // Parent of `v`; 0 for the root.
  NodeId parent(NodeId v) const { return parent_[v]; }
  std::span<const NodeId> children(NodeId v) const { return children_[v]; }
  // Length of the edge from parent(v) to v; 0 for the root.
  Cost parent_edge_length(NodeId v) const { return parent_length_[v]; }
  Cost depth(NodeId v) const { return depth_[v]; }
  bool is_leaf(NodeId v) const { return leaf_index_[v] >= 0; }

  // Leaves in depth-first order.
  std::span<const NodeId> leaves() const { return leaves_; }
  // Position of `v` in leaves(), or -1 when `v` is not a leaf.
  int32_t leaf_index(NodeId v) const { return leaf_index_[v]; }
  // All nodes in depth-first preorder; parents precede children.
  std::span<const NodeId> preorder() const { return preorder_; }

  Cost height() const { return height_; }
  // Sum of all edge lengths.
  Cost total_length() const { return total_length_; }

  // Edges in depth-first preorder of their child endpoint.
  std::vector<Edge> edges() const;

  bool operator==(const RootedTree& other) const;

 private:
  int32_t node_count_;
  NodeId root_;
  std::vector<NodeId> parent_;
  std::vector<Cost> parent_length_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<Cost> depth_;
  std::vector<NodeId> preorder_;
  std::vector<NodeId> leaves_;
  std::vector<int32_t> leaf_index_;
  Cost height_ = 0;
  Cost total_length_ = 0;
};

// Reads the tree file format: a `n root` header followed by n-1 lines of
// `parent child length`. Lines starting with '#' and blank lines are ignored.
// Errors carry the 1-based line number of the offending line.
RootedTree parse_tree(std::istream& in);
RootedTree parse_tree(std::string_view text);
RootedTree load_tree(const std::string& path);

// Canonical text: header line then edges in depth-first preorder.
std::string serialize_tree(const RootedTree& tree);

Cost height(const RootedTree& tree);

NodeId lowest_common_ancestor(const RootedTree& tree, NodeId u, NodeId v);

// Path length between two nodes. Throws TreeError for unknown ids.
Cost node_distance(const RootedTree& tree, NodeId u, NodeId v);

std::vector<NodeId> dfs_leaf_order(const RootedTree& tree);

// Random tree on nodes 1..n rooted at 1 with unit edges: each new node w,
// drawn uniformly from the unattached ones, hangs from a node v drawn
// uniformly from the attached ones.
RootedTree random_tree(int32_t n, uint64_t seed);

struct InstanceParams {
  Cost p = 0;   // autonomy: maximum cost of a single immersion
  int32_t k = 1;  // number of agents
};

// Empty when the instance is solvable; otherwise a description of every
// violated condition.
std::optional<std::string> validate_instance(const RootedTree& tree,
                                             const InstanceParams& params);

// Throws InfeasibleError if validate_instance reports a violation.
void require_feasible(const RootedTree& tree, Cost p);

}  // namespace treecover

#endif  // TREECOVER_TREE_H_
