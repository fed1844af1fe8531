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

#ifndef TREECOVER_IMMERSION_H_
#define TREECOVER_IMMERSION_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "treecover/tree.h"

namespace treecover {

// A root-closed covering walk, identified by the leaves it reaches. The walk
// itself is the depth-first closed walk of the union of root-to-leaf paths, so
// its cost is twice the total length of that union.
class Immersion {
 public:
  Immersion() = default;

  // Computes the cost from `tree`; leaves are stored in depth-first order.
  // Throws TreeError if a member is not a leaf or appears twice.
  static Immersion of(const RootedTree& tree, std::vector<NodeId> leaves);

  // Takes the cost as given (e.g. read back from a solution file). Nothing is
  // checked here; verify_solution compares the stated cost against the tree.
  Immersion(std::vector<NodeId> leaves, Cost cost)
      : leaves_(std::move(leaves)), cost_(cost) {}

  std::span<const NodeId> leaves() const { return leaves_; }
  size_t size() const { return leaves_.size(); }
  bool empty() const { return leaves_.empty(); }
  Cost cost() const { return cost_; }

  bool operator==(const Immersion&) const = default;

 private:
  std::vector<NodeId> leaves_;
  Cost cost_ = 0;
};

// A covering set of immersions, optionally split among agents.
struct CoverSolution {
  std::vector<Immersion> immersions;
  // assignment[j] lists the immersion indices run by agent j.
  std::optional<std::vector<std::vector<size_t>>> assignment;
  Cost total_distance = 0;
  std::optional<Cost> makespan;

  size_t immersion_count() const { return immersions.size(); }
};

// Builds a solution and fills total_distance; makespan is set only when an
// assignment is given.
CoverSolution make_solution(std::vector<Immersion> immersions,
                            std::optional<std::vector<std::vector<size_t>>> assignment =
                                std::nullopt);

// Union of root-to-leaf paths for a changing leaf set.
//
// Keeps, per node, how many selected leaves lie below it. Adding or removing
// a leaf walks its root path once, so every update is O(depth).
class SubtreeMarker {
 public:
  explicit SubtreeMarker(const RootedTree& tree);

  // Cost increase (2 x new edge length) that adding `leaf` would cause.
  Cost cost_if_added(NodeId leaf) const;
  // Adds `leaf` and returns the cost increase.
  Cost add(NodeId leaf);
  // Removes a previously added `leaf` and returns the cost decrease.
  Cost remove(NodeId leaf);
  void clear();

  Cost cost() const { return cost_; }
  bool covers(NodeId v) const { return v == tree_->root() || below_[v] > 0; }

 private:
  const RootedTree* tree_;
  std::vector<int32_t> below_;
  std::vector<NodeId> selected_;
  Cost cost_ = 0;
};

// 2 x total edge length of the union of root-to-leaf paths over `leaves`.
// Throws TreeError for a non-leaf member.
Cost immersion_cost(const RootedTree& tree, std::span<const NodeId> leaves);

// immersion_cost(current + leaf) - current.cost(), i.e. twice the distance from
// `leaf` to the nearest node of the current subtree (the root alone when
// `current` is empty). Throws TreeError if `leaf` is not a leaf or already in
// `current`.
Cost added_cost(const RootedTree& tree, const Immersion& current, NodeId leaf);

// Cost of a walk over a run of consecutive depth-first leaves, summed as
// d(r,l_i) + d(l_i,l_i+1) + ... + d(l_i+c,r). Throws TreeError when the run
// is not contiguous in dfs_leaf_order.
Cost consecutive_leaf_cost(const RootedTree& tree, std::span<const NodeId> run);

bool is_feasible(const RootedTree& tree, std::span<const NodeId> leaves, Cost p);

// Checks leaf partition, per-immersion budget, stated costs, assignment
// arithmetic and totals. Returns every violation found; empty means valid.
std::vector<std::string> verify_solution(const RootedTree& tree,
                                         const InstanceParams& params,
                                         const CoverSolution& solution);

// Solution text format:
//   # p=<p> k=<k>                       (optional parameter comment)
//   I<i>: <leaf ids> cost=<c>           (one per immersion, 1-based)
//   agent <j>: <immersion indices> time=<sum>   (optional, 1-based)
//   total=<d> makespan=<m>
// Without an assignment the makespan is reported for a single agent, which is
// the total distance.
std::string format_solution(const CoverSolution& solution,
                            std::optional<InstanceParams> params = std::nullopt);

struct ParsedSolution {
  // Costs, total and makespan are the stated values, not recomputed ones.
  CoverSolution solution;
  // Values from the `# p= k=` comment, when present.
  std::optional<Cost> p;
  std::optional<int32_t> k;
  std::vector<Cost> stated_agent_times;
};

// Reads the solution text format. Unknown `key=value` diagnostic lines are
// ignored. Throws std::invalid_argument on malformed input.
ParsedSolution parse_solution(std::string_view text);

// verify_solution plus a check of each stated per-agent time.
std::vector<std::string> verify_parsed_solution(const RootedTree& tree,
                                                const InstanceParams& params,
                                                const ParsedSolution& parsed);

}  // namespace treecover

#endif  // TREECOVER_IMMERSION_H_
