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

#include "treecover/exact.h"

#include <algorithm>
#include <chrono>
#include <limits>

#include "treecover/heuristics.h"

namespace treecover {

namespace {

enum class Objective { kDistance, kImmersions };

// Objective value ordered lexicographically. For kDistance the count is
// ignored.
struct Score {
  size_t count = std::numeric_limits<size_t>::max();
  Cost distance = std::numeric_limits<Cost>::max();
};

bool better(Objective objective, const Score& a, const Score& b) {
  if (objective == Objective::kDistance) return a.distance < b.distance;
  if (a.count != b.count) return a.count < b.count;
  return a.distance < b.distance;
}

Score score_of(const CoverSolution& s) { return {s.immersion_count(), s.total_distance}; }

class BranchAndCut {
 public:
  BranchAndCut(const RootedTree& tree, Cost p, Objective objective, const SearchOptions& options)
      : tree_(tree),
        p_(p),
        objective_(objective),
        budget_(options.node_budget),
        time_limit_ms_(options.time_limit_ms),
        start_(std::chrono::steady_clock::now()),
        current_(tree) {
    const auto leaves = tree.leaves();
    order_.assign(leaves.begin(), leaves.end());
    // Depth decreasing; std::stable_sort keeps depth-first order among ties.
    std::stable_sort(order_.begin(), order_.end(),
                     [&](NodeId a, NodeId b) { return tree.depth(a) > tree.depth(b); });
    covered_.assign(order_.size(), 0);
    // new_node holds a reference into excluded_ across recursion.
    excluded_.reserve(order_.size() + 1);
  }

  SearchResult run() {
    CoverSolution seed = sweeping_leaves(tree_, p_);
    CoverSolution alt = dftn(tree_, p_);
    if (better(objective_, score_of(alt), score_of(seed))) seed = std::move(alt);
    best_score_ = score_of(seed);
    best_ = std::move(seed);

    new_tree();

    SearchResult result;
    result.solution = std::move(best_);
    result.nodes_explored = nodes_;
    result.proven_optimal = !aborted_;
    return result;
  }

 private:
  bool out_of_budget() {
    ++nodes_;
    if (budget_ != 0 && nodes_ > budget_) aborted_ = true;
    if (time_limit_ms_ > 0 && (nodes_ & 0xfff) == 0) {
      const std::chrono::duration<double, std::milli> elapsed =
          std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > time_limit_ms_) aborted_ = true;
    }
    return aborted_;
  }

  SubtreeMarker& excluded_at(size_t level) {
    while (excluded_.size() <= level) excluded_.emplace_back(tree_);
    return excluded_[level];
  }

  // Opens the next immersion at the first uncovered leaf, or records a
  // complete cover.
  void new_tree() {
    if (out_of_budget()) return;
    size_t first = 0;
    while (first < order_.size() && covered_[first]) ++first;
    if (first == order_.size()) {
      const Score score{committed_.size(), committed_cost_};
      if (better(objective_, score, best_score_)) {
        best_score_ = score;
        std::vector<Immersion> ims;
        ims.reserve(committed_.size());
        for (size_t i = 0; i < committed_.size(); ++i) {
          ims.emplace_back(committed_[i], committed_costs_[i]);
        }
        best_ = make_solution(std::move(ims));
      }
      return;
    }
    covered_[first] = 1;
    current_.add(order_[first]);
    members_.push_back(order_[first]);
    new_node(first + 1);
    members_.pop_back();
    current_.remove(order_[first]);
    covered_[first] = 0;
  }

  bool dominated(const SubtreeMarker& excluded) const {
    const Cost distance = committed_cost_ + current_.cost() + excluded.cost();
    if (objective_ == Objective::kDistance) return distance >= best_score_.distance;
    size_t count = committed_.size() + 1;
    if (excluded.cost() > 0) {
      // Each further immersion costs at most p and together they must cover
      // the excluded leaves' paths.
      count += static_cast<size_t>((excluded.cost() + p_ - 1) / p_);
    }
    if (count != best_score_.count) return count > best_score_.count;
    return distance >= best_score_.distance;
  }

  // Decides leaf order_[i] for the open immersion.
  void new_node(size_t i) {
    if (out_of_budget()) return;
    SubtreeMarker& excluded = excluded_at(committed_.size());
    if (dominated(excluded)) return;
    while (i < order_.size() && covered_[i]) ++i;
    if (i == order_.size()) {
      commit_and_continue();
      return;
    }
    const NodeId leaf = order_[i];
    if (current_.cost() + current_.cost_if_added(leaf) <= p_) {
      covered_[i] = 1;
      current_.add(leaf);
      members_.push_back(leaf);
      new_node(i + 1);
      members_.pop_back();
      current_.remove(leaf);
      covered_[i] = 0;
      if (aborted_) return;
    }
    excluded.add(leaf);
    new_node(i + 1);
    excluded.remove(leaf);
  }

  void commit_and_continue() {
    std::vector<NodeId> members = members_;
    std::sort(members.begin(), members.end(), [&](NodeId a, NodeId b) {
      return tree_.leaf_index(a) < tree_.leaf_index(b);
    });
    const Cost cost = current_.cost();
    committed_.push_back(std::move(members));
    committed_costs_.push_back(cost);
    committed_cost_ += cost;

    // The open immersion's subtree must be empty for the next one; stash and
    // restore it around the recursion.
    const std::vector<NodeId> stash = members_;
    for (NodeId v : stash) current_.remove(v);
    members_.clear();

    new_tree();

    members_ = stash;
    for (NodeId v : stash) current_.add(v);
    committed_cost_ -= cost;
    committed_costs_.pop_back();
    committed_.pop_back();
  }

  const RootedTree& tree_;
  const Cost p_;
  const Objective objective_;
  const uint64_t budget_;
  const double time_limit_ms_;
  const std::chrono::steady_clock::time_point start_;

  std::vector<NodeId> order_;
  std::vector<char> covered_;
  SubtreeMarker current_;
  std::vector<NodeId> members_;
  // One marker per open-immersion level: leaves skipped by that immersion.
  std::vector<SubtreeMarker> excluded_;
  std::vector<std::vector<NodeId>> committed_;
  std::vector<Cost> committed_costs_;
  Cost committed_cost_ = 0;

  Score best_score_;
  CoverSolution best_;
  uint64_t nodes_ = 0;
  bool aborted_ = false;
};

CoverSolution brute_force(const RootedTree& tree, Cost p, size_t leaf_cap, Objective objective) {
  require_feasible(tree, p);
  Score best_score;
  CoverSolution best;
  bool found = false;
  for_each_leaf_partition(
      tree, leaf_cap,
      [&](std::span<const std::vector<NodeId>> blocks, std::span<const Cost> costs) {
        Cost total = 0;
        for (Cost c : costs) {
          if (c > p) return;
          total += c;
        }
        const Score score{blocks.size(), total};
        if (found && !better(objective, score, best_score)) return;
        found = true;
        best_score = score;
        std::vector<Immersion> ims;
        for (size_t b = 0; b < blocks.size(); ++b) ims.emplace_back(blocks[b], costs[b]);
        best = make_solution(std::move(ims));
      });
  return best;
}

}  // namespace

SearchResult bc_min_distance(const RootedTree& tree, Cost p, const SearchOptions& options) {
  require_feasible(tree, p);
  return BranchAndCut(tree, p, Objective::kDistance, options).run();
}

SearchResult bc_min_immersions(const RootedTree& tree, Cost p, const SearchOptions& options) {
  require_feasible(tree, p);
  return BranchAndCut(tree, p, Objective::kImmersions, options).run();
}

void for_each_leaf_partition(
    const RootedTree& tree, size_t leaf_cap,
    const std::function<void(std::span<const std::vector<NodeId>>, std::span<const Cost>)>& visit) {
  const auto leaves = tree.leaves();
  if (leaves.size() > leaf_cap) {
    throw CapExceededError("leaf partition enumeration: " + std::to_string(leaves.size()) +
                           " leaves exceeds cap " + std::to_string(leaf_cap));
  }
  std::vector<std::vector<NodeId>> blocks;
  std::vector<SubtreeMarker> markers;
  std::vector<Cost> costs;

  // Restricted growth: leaf i joins one of the existing blocks or opens a new
  // one, so each partition is produced exactly once.
  const std::function<void(size_t)> assign = [&](size_t i) {
    if (i == leaves.size()) {
      costs.resize(blocks.size());
      for (size_t b = 0; b < blocks.size(); ++b) costs[b] = markers[b].cost();
      visit(blocks, costs);
      return;
    }
    const NodeId leaf = leaves[i];
    for (size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(leaf);
      markers[b].add(leaf);
      assign(i + 1);
      markers[b].remove(leaf);
      blocks[b].pop_back();
    }
    blocks.push_back({leaf});
    if (markers.size() < blocks.size()) markers.emplace_back(tree);
    markers[blocks.size() - 1].add(leaf);
    assign(i + 1);
    markers[blocks.size() - 1].remove(leaf);
    blocks.pop_back();
  };
  assign(0);
}

CoverSolution brute_force_min_distance(const RootedTree& tree, Cost p, size_t leaf_cap) {
  return brute_force(tree, p, leaf_cap, Objective::kDistance);
}

CoverSolution brute_force_min_immersions(const RootedTree& tree, Cost p, size_t leaf_cap) {
  return brute_force(tree, p, leaf_cap, Objective::kImmersions);
}

uint64_t bell_number(int m) {
  if (m < 0) return 0;
  // Bell triangle.
  std::vector<uint64_t> row{1};
  for (int i = 0; i < m; ++i) {
    std::vector<uint64_t> next{row.back()};
    for (uint64_t v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

}  // namespace treecover
