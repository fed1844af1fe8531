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

#ifndef TREECOVER_EXACT_H_
#define TREECOVER_EXACT_H_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "treecover/immersion.h"
#include "treecover/tree.h"

namespace treecover {

struct SearchOptions {
  // Abort after this many search nodes and return the incumbent; 0 disables
  // the limit.
  uint64_t node_budget = 0;
  // Wall-clock limit in milliseconds, checked every few thousand nodes; 0
  // disables it. Results under a time limit are not reproducible.
  double time_limit_ms = 0;
};

struct SearchResult {
  CoverSolution solution;
  uint64_t nodes_explored = 0;
  // False when a budget or time limit ran out before the search finished.
  bool proven_optimal = true;
};

// Exact minimum total distance by branch-and-cut over leaf partitions.
//
// Leaves are processed deepest first. Each new immersion is anchored at the
// first uncovered leaf, so every partition has exactly one search path; the
// remaining leaves are branched on include (when the walk still fits in p)
// then exclude. Branches are cut when the committed cost plus the current
// immersion plus twice the union of paths to already-excluded leaves reaches
// the incumbent, which starts from the better heuristic solution.
//
// Throws InfeasibleError if p < 2h.
SearchResult bc_min_distance(const RootedTree& tree, Cost p, const SearchOptions& options = {});

// Same search minimizing the number of immersions, ties broken by total
// distance.
SearchResult bc_min_immersions(const RootedTree& tree, Cost p, const SearchOptions& options = {});

// Default leaf cap of the partition-enumerating oracles (B_10 = 115975).
inline constexpr size_t kBruteForceLeafCap = 10;

// Calls `visit` with every set partition of the tree's leaves together with
// the walk cost of each block. Blocks list leaves in depth-first order.
// Throws CapExceededError above `leaf_cap` leaves.
void for_each_leaf_partition(
    const RootedTree& tree, size_t leaf_cap,
    const std::function<void(std::span<const std::vector<NodeId>>, std::span<const Cost>)>& visit);

// Exhaustive oracles over all leaf partitions. Throw CapExceededError above
// `leaf_cap` leaves and InfeasibleError if p < 2h.
CoverSolution brute_force_min_distance(const RootedTree& tree, Cost p,
                                       size_t leaf_cap = kBruteForceLeafCap);
CoverSolution brute_force_min_immersions(const RootedTree& tree, Cost p,
                                         size_t leaf_cap = kBruteForceLeafCap);

// Number of set partitions of an m-element set.
uint64_t bell_number(int m);

}  // namespace treecover

#endif  // TREECOVER_EXACT_H_
