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

#include "treecover/scheduling.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "treecover/exact.h"
#include "treecover/heuristics.h"

namespace treecover {

namespace {

void check_jobs(std::span<const Cost> costs, int32_t k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  for (Cost c : costs) {
    if (c < 0) throw std::invalid_argument("job costs must be non-negative");
  }
}

// Sorted, non-decreasing agent loads. Agents are interchangeable, so equal
// vectors are the same state.
using LoadVector = std::vector<Cost>;

struct LoadVectorHash {
  size_t operator()(const LoadVector& v) const {
    size_t h = 0xcbf29ce484222325ULL;
    for (Cost x : v) {
      h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct DpState {
  LoadVector loads;
  int32_t parent = -1;
  // Position in the parent's sorted loads that received the job.
  int32_t slot = -1;
};

Cost lpt_makespan(std::span<const Cost> sorted_desc, size_t agents) {
  std::vector<Cost> loads(agents, 0);
  for (Cost c : sorted_desc) {
    *std::min_element(loads.begin(), loads.end()) += c;
  }
  return *std::max_element(loads.begin(), loads.end());
}

}  // namespace

Schedule dp_makespan_partition(std::span<const Cost> costs, int32_t k) {
  check_jobs(costs, k);
  Schedule result;
  result.blocks.resize(static_cast<size_t>(k));
  const size_t m = costs.size();
  if (m == 0) return result;

  std::vector<size_t> jobs(m);
  std::iota(jobs.begin(), jobs.end(), size_t{0});
  std::stable_sort(jobs.begin(), jobs.end(),
                   [&](size_t a, size_t b) { return costs[a] > costs[b]; });
  std::vector<Cost> sorted_costs;
  for (size_t j : jobs) sorted_costs.push_back(costs[j]);

  // More agents than jobs never helps; the surplus stays idle.
  const size_t agents = std::min(static_cast<size_t>(k), m);
  const Cost bound = lpt_makespan(sorted_costs, agents);

  // layers[j] holds the states after the first j jobs.
  std::vector<std::vector<DpState>> layers(m + 1);
  layers[0].push_back({LoadVector(agents, 0), -1, -1});
  for (size_t j = 0; j < m; ++j) {
    const Cost c = sorted_costs[j];
    std::unordered_map<LoadVector, int32_t, LoadVectorHash> seen;
    auto& next = layers[j + 1];
    const auto& layer = layers[j];
    for (size_t s = 0; s < layer.size(); ++s) {
      const LoadVector& loads = layer[s].loads;
      for (size_t slot = 0; slot < agents; ++slot) {
        if (slot > 0 && loads[slot] == loads[slot - 1]) continue;
        if (loads[slot] + c > bound) continue;
        LoadVector grown = loads;
        grown[slot] += c;
        // Restore sorted order by bubbling the grown entry right.
        for (size_t i = slot; i + 1 < agents && grown[i] > grown[i + 1]; ++i) {
          std::swap(grown[i], grown[i + 1]);
        }
        if (seen.contains(grown)) continue;
        seen.emplace(grown, static_cast<int32_t>(next.size()));
        next.push_back({std::move(grown), static_cast<int32_t>(s), static_cast<int32_t>(slot)});
      }
    }
  }

  const auto& final_layer = layers[m];
  size_t best = 0;
  for (size_t s = 1; s < final_layer.size(); ++s) {
    if (final_layer[s].loads.back() < final_layer[best].loads.back()) best = s;
  }
  result.makespan = final_layer[best].loads.back();

  // Walk the parent links back to recover the state after each job.
  std::vector<size_t> path(m + 1);
  path[m] = best;
  for (size_t j = m; j > 0; --j) path[j - 1] = static_cast<size_t>(layers[j][path[j]].parent);

  // Replay with agent identities: the job goes to the first agent whose load
  // equals the chosen sorted-load value.
  std::vector<Cost> agent_load(agents, 0);
  std::vector<size_t> agent_of(m);
  for (size_t j = 0; j < m; ++j) {
    const auto slot = static_cast<size_t>(layers[j + 1][path[j + 1]].slot);
    const Cost target = layers[j][path[j]].loads[slot];
    size_t a = 0;
    while (agent_load[a] != target) ++a;
    agent_load[a] += sorted_costs[j];
    agent_of[jobs[j]] = a;
  }

  // Number agents by first appearance in input order.
  std::vector<int64_t> relabel(agents, -1);
  size_t next_label = 0;
  for (size_t i = 0; i < m; ++i) {
    auto& label = relabel[agent_of[i]];
    if (label < 0) label = static_cast<int64_t>(next_label++);
    result.blocks[static_cast<size_t>(label)].push_back(i);
  }
  return result;
}

Cost brute_force_makespan(std::span<const Cost> costs, int32_t k, uint64_t cap) {
  check_jobs(costs, k);
  uint64_t count = 1;
  for (size_t i = 0; i < costs.size(); ++i) {
    if (count > cap / static_cast<uint64_t>(k)) {
      throw CapExceededError("brute_force_makespan: k^m exceeds cap " + std::to_string(cap));
    }
    count *= static_cast<uint64_t>(k);
  }
  if (count > cap) {
    throw CapExceededError("brute_force_makespan: k^m exceeds cap " + std::to_string(cap));
  }
  std::vector<Cost> loads(static_cast<size_t>(k), 0);
  Cost best = std::numeric_limits<Cost>::max();
  const std::function<void(size_t)> assign = [&](size_t i) {
    if (i == costs.size()) {
      best = std::min(best, *std::max_element(loads.begin(), loads.end()));
      return;
    }
    for (auto& load : loads) {
      load += costs[i];
      assign(i + 1);
      load -= costs[i];
    }
  };
  assign(0);
  return best;
}

namespace {

CoverSolution schedule_immersions(std::vector<Immersion> immersions, int32_t k) {
  std::vector<Cost> costs;
  costs.reserve(immersions.size());
  for (const Immersion& im : immersions) costs.push_back(im.cost());
  Schedule schedule = dp_makespan_partition(costs, k);
  return make_solution(std::move(immersions), std::move(schedule.blocks));
}

}  // namespace

CoverSolution min_time_heuristic(const RootedTree& tree, Cost p, int32_t k) {
  if (k < 1) throw InfeasibleError("infeasible instance: k < 1");
  CoverSolution cover = dftn(tree, p);
  return schedule_immersions(std::move(cover.immersions), k);
}

CoverSolution brute_force_min_time(const RootedTree& tree, Cost p, int32_t k, size_t leaf_cap) {
  if (k < 1) throw InfeasibleError("infeasible instance: k < 1");
  require_feasible(tree, p);
  Cost best_makespan = std::numeric_limits<Cost>::max();
  Cost best_total = std::numeric_limits<Cost>::max();
  std::vector<std::vector<NodeId>> best_blocks;
  std::vector<Cost> best_costs;
  bool found = false;
  for_each_leaf_partition(
      tree, leaf_cap,
      [&](std::span<const std::vector<NodeId>> blocks, std::span<const Cost> costs) {
        Cost total = 0;
        for (Cost c : costs) {
          if (c > p) return;
          total += c;
        }
        const Cost makespan = dp_makespan_partition(costs, k).makespan;
        if (found && (makespan > best_makespan ||
                      (makespan == best_makespan && total >= best_total))) {
          return;
        }
        found = true;
        best_makespan = makespan;
        best_total = total;
        best_blocks.assign(blocks.begin(), blocks.end());
        best_costs.assign(costs.begin(), costs.end());
      });
  std::vector<Immersion> immersions;
  for (size_t b = 0; b < best_blocks.size(); ++b) {
    immersions.emplace_back(std::move(best_blocks[b]), best_costs[b]);
  }
  return schedule_immersions(std::move(immersions), k);
}

}  // namespace treecover
