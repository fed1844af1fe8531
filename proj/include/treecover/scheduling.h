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

#ifndef TREECOVER_SCHEDULING_H_
#define TREECOVER_SCHEDULING_H_

#include <cstdint>
#include <span>
#include <vector>

#include "treecover/immersion.h"
#include "treecover/tree.h"

namespace treecover {

struct Schedule {
  Cost makespan = 0;
  // blocks[j] holds the job indices given to agent j; exactly k blocks, some
  // possibly empty.
  std::vector<std::vector<size_t>> blocks;
};

// Optimal makespan of `costs` over k identical agents.
//
// Forward dynamic program over sorted load vectors: jobs are taken in
// decreasing cost, each reachable load vector is extended by adding the job to
// every distinct load value, vectors whose maximum exceeds the greedy
// longest-processing-time bound are dropped and duplicates merged. Agents are
// numbered by the first job they receive in input order.
//
// Throws std::invalid_argument if k < 1 or a cost is negative.
Schedule dp_makespan_partition(std::span<const Cost> costs, int32_t k);

// Default cap on k^m for brute_force_makespan.
inline constexpr uint64_t kBruteForceAssignmentCap = 10'000'000;

// Minimum makespan over all k^m assignments. Throws CapExceededError when k^m
// is above `cap`.
Cost brute_force_makespan(std::span<const Cost> costs, int32_t k,
                          uint64_t cap = kBruteForceAssignmentCap);

// Heuristic Min-Time pipeline: DFTN immersions, then the optimal split of
// their costs among k agents.
CoverSolution min_time_heuristic(const RootedTree& tree, Cost p, int32_t k);

// Default leaf cap for brute_force_min_time.
inline constexpr size_t kMinTimeLeafCap = 9;

// Exact Min-Time by trying every leaf partition whose blocks fit in p and
// scheduling each optimally. Throws CapExceededError above `leaf_cap` leaves.
CoverSolution brute_force_min_time(const RootedTree& tree, Cost p, int32_t k,
                                   size_t leaf_cap = kMinTimeLeafCap);

}  // namespace treecover

#endif  // TREECOVER_SCHEDULING_H_
