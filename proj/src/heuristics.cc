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

#include "treecover/heuristics.h"

#include <limits>
#include <vector>

namespace treecover {

CoverSolution sweeping_leaves(const RootedTree& tree, Cost p) {
  require_feasible(tree, p);
  std::vector<Immersion> out;
  SubtreeMarker marker(tree);
  std::vector<NodeId> run;
  for (NodeId leaf : tree.leaves()) {
    if (marker.cost() + marker.cost_if_added(leaf) > p) {
      out.emplace_back(std::move(run), marker.cost());
      run.clear();
      marker.clear();
    }
    marker.add(leaf);
    run.push_back(leaf);
  }
  if (!run.empty()) out.emplace_back(std::move(run), marker.cost());
  return make_solution(std::move(out));
}

CoverSolution dftn(const RootedTree& tree, Cost p) {
  require_feasible(tree, p);
  const auto leaves = tree.leaves();
  const auto preorder = tree.preorder();
  std::vector<char> covered(leaves.size(), 0);
  size_t remaining = leaves.size();
  // anchor[v]: depth of the deepest ancestor of v (v included) inside the
  // current immersion's subtree. The subtree is closed under ancestors, so the
  // distance from a leaf to it is depth(leaf) - anchor[leaf].
  std::vector<Cost> anchor(static_cast<size_t>(tree.node_count()) + 1, 0);
  SubtreeMarker marker(tree);
  std::vector<Immersion> out;

  const auto refresh_anchors = [&] {
    for (NodeId v : preorder) {
      if (v == tree.root()) {
        anchor[v] = 0;
      } else {
        anchor[v] = marker.covers(v) ? tree.depth(v) : anchor[tree.parent(v)];
      }
    }
  };

  while (remaining > 0) {
    size_t deepest = leaves.size();
    for (size_t i = 0; i < leaves.size(); ++i) {
      if (!covered[i] &&
          (deepest == leaves.size() || tree.depth(leaves[i]) > tree.depth(leaves[deepest]))) {
        deepest = i;
      }
    }
    marker.clear();
    std::vector<NodeId> current{leaves[deepest]};
    marker.add(leaves[deepest]);
    covered[deepest] = 1;
    --remaining;

    while (remaining > 0) {
      refresh_anchors();
      size_t nearest = leaves.size();
      Cost best = std::numeric_limits<Cost>::max();
      for (size_t i = 0; i < leaves.size(); ++i) {
        if (covered[i]) continue;
        const Cost gap = tree.depth(leaves[i]) - anchor[leaves[i]];
        if (gap < best) {
          best = gap;
          nearest = i;
        }
      }
      if (marker.cost() + 2 * best > p) break;
      marker.add(leaves[nearest]);
      current.push_back(leaves[nearest]);
      covered[nearest] = 1;
      --remaining;
    }
    out.emplace_back(std::move(current), marker.cost());
  }
  return make_solution(std::move(out));
}

}  // namespace treecover
