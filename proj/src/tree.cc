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

#include "treecover/tree.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

namespace treecover {

namespace {

std::string node_str(NodeId v) { return std::to_string(v); }

}  // namespace

RootedTree::RootedTree(int32_t node_count, NodeId root, std::span<const Edge> edges)
    : node_count_(node_count), root_(root) {
  if (node_count < 1) throw TreeError("node count must be at least 1");
  if (!contains(root)) throw TreeError("root " + node_str(root) + " out of range");
  if (static_cast<int64_t>(edges.size()) != node_count - 1) {
    throw TreeError("expected " + std::to_string(node_count - 1) + " edges, got " +
                    std::to_string(edges.size()));
  }
  const auto size = static_cast<size_t>(node_count) + 1;
  parent_.assign(size, 0);
  parent_length_.assign(size, 0);
  children_.assign(size, {});
  depth_.assign(size, 0);
  leaf_index_.assign(size, -1);

  for (const Edge& e : edges) {
    if (!contains(e.parent) || !contains(e.child)) {
      throw TreeError("edge " + node_str(e.parent) + "-" + node_str(e.child) +
                      " references a node outside 1.." + std::to_string(node_count));
    }
    if (e.length < 1) {
      throw TreeError("edge " + node_str(e.parent) + "-" + node_str(e.child) +
                      " has non-positive length");
    }
    if (e.child == root || e.parent == e.child) {
      throw TreeError("edge " + node_str(e.parent) + "-" + node_str(e.child) +
                      " creates a cycle");
    }
    if (parent_[e.child] != 0) {
      throw TreeError("node " + node_str(e.child) + " has two parents");
    }
    parent_[e.child] = e.parent;
    parent_length_[e.child] = e.length;
    children_[e.parent].push_back(e.child);
  }
  for (auto& c : children_) std::sort(c.begin(), c.end());

  // Iterative DFS; children pushed in reverse so the smallest id pops first.
  preorder_.reserve(static_cast<size_t>(node_count));
  std::vector<NodeId> stack{root};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    preorder_.push_back(v);
    if (v != root) depth_[v] = depth_[parent_[v]] + parent_length_[v];
    height_ = std::max(height_, depth_[v]);
    total_length_ += parent_length_[v];
    if (v != root && children_[v].empty()) {
      leaf_index_[v] = static_cast<int32_t>(leaves_.size());
      leaves_.push_back(v);
    }
    for (auto it = children_[v].rbegin(); it != children_[v].rend(); ++it) {
      stack.push_back(*it);
    }
  }
  if (static_cast<int32_t>(preorder_.size()) != node_count) {
    // Every non-root node has exactly one parent, so an unreachable node sits
    // on a cycle.
    for (NodeId v = 1; v <= node_count; ++v) {
      if (v != root && depth_[v] == 0) {
        throw TreeError("node " + node_str(v) + " lies on a cycle");
      }
    }
    throw TreeError("tree is not connected");
  }
}

std::vector<Edge> RootedTree::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(node_count_ - 1));
  for (NodeId v : preorder_) {
    if (v != root_) out.push_back({parent_[v], v, parent_length_[v]});
  }
  return out;
}

bool RootedTree::operator==(const RootedTree& other) const {
  return node_count_ == other.node_count_ && root_ == other.root_ &&
         parent_ == other.parent_ && parent_length_ == other.parent_length_;
}

namespace {

bool blank_or_comment(std::string_view line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string_view::npos || line[pos] == '#';
}

// Splits on whitespace and parses every token as a decimal integer.
std::optional<std::vector<int64_t>> parse_ints(std::string_view line) {
  std::vector<int64_t> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j) return std::nullopt;
    out.push_back(value);
    i = j;
  }
  return out;
}

}  // namespace

RootedTree parse_tree(std::istream& in) {
  std::string line;
  int line_no = 0;
  int32_t n = 0;
  NodeId root = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::vector<int> child_line;

  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    const auto ints = parse_ints(line);
    if (!have_header) {
      if (!ints || ints->size() != 2) {
        throw TreeError("malformed header, expected `n root`", line_no);
      }
      if ((*ints)[0] < 1 || (*ints)[0] > 100'000'000) {
        throw TreeError("node count out of range", line_no);
      }
      n = static_cast<int32_t>((*ints)[0]);
      if ((*ints)[1] < 1 || (*ints)[1] > n) {
        throw TreeError("root id out of range 1.." + std::to_string(n), line_no);
      }
      root = static_cast<NodeId>((*ints)[1]);
      child_line.assign(static_cast<size_t>(n) + 1, 0);
      have_header = true;
      continue;
    }
    if (!ints || ints->size() != 3) {
      throw TreeError("malformed edge line, expected `parent child length`", line_no);
    }
    const int64_t parent = (*ints)[0];
    const int64_t child = (*ints)[1];
    const int64_t length = (*ints)[2];
    if (static_cast<int64_t>(edges.size()) == n - 1) {
      throw TreeError("more than n-1 edge lines", line_no);
    }
    if (parent < 1 || parent > n || child < 1 || child > n) {
      throw TreeError("node id out of range 1.." + std::to_string(n), line_no);
    }
    if (length < 1) throw TreeError("edge length must be positive", line_no);
    if (parent == child || child == root) {
      throw TreeError("edge " + std::to_string(parent) + "-" + std::to_string(child) +
                          " creates a cycle",
                      line_no);
    }
    if (child_line[child] != 0) {
      throw TreeError("duplicate child " + std::to_string(child) + " (first on line " +
                          std::to_string(child_line[child]) + ")",
                      line_no);
    }
    child_line[child] = line_no;
    edges.push_back({static_cast<NodeId>(parent), static_cast<NodeId>(child), length});
  }
  if (!have_header) throw TreeError("missing header line", line_no + 1);
  if (static_cast<int64_t>(edges.size()) < n - 1) {
    NodeId missing = 0;
    for (NodeId v = 1; v <= n && missing == 0; ++v) {
      if (v != root && child_line[v] == 0) missing = v;
    }
    throw TreeError("node " + std::to_string(missing) + " is disconnected (" +
                        std::to_string(edges.size()) + " of " + std::to_string(n - 1) +
                        " edges)",
                    line_no + 1);
  }

  // Remaining failure mode is a cycle among non-root nodes; find the first
  // node whose parent chain never reaches the root.
  std::vector<NodeId> parent(static_cast<size_t>(n) + 1, 0);
  for (const Edge& e : edges) parent[e.child] = e.parent;
  std::vector<int8_t> state(static_cast<size_t>(n) + 1, 0);  // 0 new, 1 active, 2 ok
  state[root] = 2;
  for (NodeId v = 1; v <= n; ++v) {
    std::vector<NodeId> chain;
    NodeId u = v;
    while (state[u] == 0) {
      state[u] = 1;
      chain.push_back(u);
      u = parent[u];
    }
    if (state[u] == 1) {
      throw TreeError("edge into node " + std::to_string(u) + " closes a cycle",
                      child_line[u]);
    }
    for (NodeId w : chain) state[w] = 2;
  }
  return RootedTree(n, root, edges);
}

RootedTree parse_tree(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_tree(in);
}

RootedTree load_tree(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tree file: " + path);
  return parse_tree(in);
}

std::string serialize_tree(const RootedTree& tree) {
  std::ostringstream out;
  out << tree.node_count() << ' ' << tree.root() << '\n';
  for (const Edge& e : tree.edges()) {
    out << e.parent << ' ' << e.child << ' ' << e.length << '\n';
  }
  return out.str();
}

Cost height(const RootedTree& tree) { return tree.height(); }

NodeId lowest_common_ancestor(const RootedTree& tree, NodeId u, NodeId v) {
  if (!tree.contains(u) || !tree.contains(v)) {
    throw TreeError("unknown node id " + std::to_string(tree.contains(u) ? v : u));
  }
  // Depth is weighted, but every edge is positive, so a strictly deeper node
  // is never an ancestor of the shallower one.
  while (u != v) {
    if (tree.depth(u) >= tree.depth(v)) {
      u = tree.parent(u);
    } else {
      v = tree.parent(v);
    }
  }
  return u;
}

Cost node_distance(const RootedTree& tree, NodeId u, NodeId v) {
  const NodeId a = lowest_common_ancestor(tree, u, v);
  return tree.depth(u) + tree.depth(v) - 2 * tree.depth(a);
}

std::vector<NodeId> dfs_leaf_order(const RootedTree& tree) {
  const auto leaves = tree.leaves();
  return {leaves.begin(), leaves.end()};
}

RootedTree random_tree(int32_t n, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tree: n must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<NodeId> attached{1};
  std::vector<NodeId> pending;
  for (NodeId v = 2; v <= n; ++v) pending.push_back(v);
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n - 1));
  while (!pending.empty()) {
    std::uniform_int_distribution<size_t> pick_v(0, attached.size() - 1);
    std::uniform_int_distribution<size_t> pick_w(0, pending.size() - 1);
    const NodeId v = attached[pick_v(rng)];
    const size_t wi = pick_w(rng);
    const NodeId w = pending[wi];
    edges.push_back({v, w, 1});
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(wi));
    attached.push_back(w);
  }
  return RootedTree(n, 1, edges);
}

std::optional<std::string> validate_instance(const RootedTree& tree,
                                             const InstanceParams& params) {
  std::string report;
  if (params.p < 2 * tree.height()) {
    report += "p < 2h (p=" + std::to_string(params.p) +
              ", 2h=" + std::to_string(2 * tree.height()) + ")";
  }
  if (params.k < 1) {
    if (!report.empty()) report += "; ";
    report += "k < 1 (k=" + std::to_string(params.k) + ")";
  }
  if (report.empty()) return std::nullopt;
  return report;
}

void require_feasible(const RootedTree& tree, Cost p) {
  if (auto violation = validate_instance(tree, {p, 1})) {
    throw InfeasibleError("infeasible instance: " + *violation);
  }
}

}  // namespace treecover
