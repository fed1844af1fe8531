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

#include "treecover/immersion.h"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace treecover {

namespace {

void require_leaf(const RootedTree& tree, NodeId v) {
  if (!tree.contains(v)) throw TreeError("unknown node id " + std::to_string(v));
  if (!tree.is_leaf(v)) throw TreeError("node " + std::to_string(v) + " is not a leaf");
}

}  // namespace

Immersion Immersion::of(const RootedTree& tree, std::vector<NodeId> leaves) {
  for (NodeId v : leaves) require_leaf(tree, v);
  std::sort(leaves.begin(), leaves.end(), [&](NodeId a, NodeId b) {
    return tree.leaf_index(a) < tree.leaf_index(b);
  });
  if (std::adjacent_find(leaves.begin(), leaves.end()) != leaves.end()) {
    throw TreeError("leaf listed twice in one immersion");
  }
  const Cost cost = immersion_cost(tree, leaves);
  return Immersion(std::move(leaves), cost);
}

CoverSolution make_solution(std::vector<Immersion> immersions,
                            std::optional<std::vector<std::vector<size_t>>> assignment) {
  CoverSolution s;
  s.immersions = std::move(immersions);
  for (const Immersion& im : s.immersions) s.total_distance += im.cost();
  if (assignment) {
    Cost worst = 0;
    for (const auto& block : *assignment) {
      Cost sum = 0;
      for (size_t i : block) sum += s.immersions.at(i).cost();
      worst = std::max(worst, sum);
    }
    s.makespan = worst;
    s.assignment = std::move(assignment);
  }
  return s;
}

SubtreeMarker::SubtreeMarker(const RootedTree& tree)
    : tree_(&tree), below_(static_cast<size_t>(tree.node_count()) + 1, 0) {}

Cost SubtreeMarker::cost_if_added(NodeId leaf) const {
  Cost extra = 0;
  const NodeId root = tree_->root();
  for (NodeId v = leaf; v != root && below_[v] == 0; v = tree_->parent(v)) {
    extra += tree_->parent_edge_length(v);
  }
  return 2 * extra;
}

Cost SubtreeMarker::add(NodeId leaf) {
  Cost extra = 0;
  const NodeId root = tree_->root();
  for (NodeId v = leaf; v != root; v = tree_->parent(v)) {
    if (below_[v]++ == 0) extra += tree_->parent_edge_length(v);
  }
  selected_.push_back(leaf);
  cost_ += 2 * extra;
  return 2 * extra;
}

Cost SubtreeMarker::remove(NodeId leaf) {
  Cost freed = 0;
  const NodeId root = tree_->root();
  for (NodeId v = leaf; v != root; v = tree_->parent(v)) {
    if (--below_[v] == 0) freed += tree_->parent_edge_length(v);
  }
  if (auto it = std::find(selected_.rbegin(), selected_.rend(), leaf); it != selected_.rend()) {
    selected_.erase(std::next(it).base());
  }
  cost_ -= 2 * freed;
  return 2 * freed;
}

void SubtreeMarker::clear() {
  const NodeId root = tree_->root();
  for (NodeId leaf : selected_) {
    for (NodeId v = leaf; v != root && below_[v] != 0; v = tree_->parent(v)) below_[v] = 0;
  }
  selected_.clear();
  cost_ = 0;
}

Cost immersion_cost(const RootedTree& tree, std::span<const NodeId> leaves) {
  // Climb from each leaf until an already-marked node; each edge counted once.
  std::vector<char> marked(static_cast<size_t>(tree.node_count()) + 1, 0);
  Cost length = 0;
  for (NodeId leaf : leaves) {
    require_leaf(tree, leaf);
    for (NodeId v = leaf; v != tree.root() && !marked[v]; v = tree.parent(v)) {
      marked[v] = 1;
      length += tree.parent_edge_length(v);
    }
  }
  return 2 * length;
}

Cost added_cost(const RootedTree& tree, const Immersion& current, NodeId leaf) {
  require_leaf(tree, leaf);
  SubtreeMarker marker(tree);
  for (NodeId v : current.leaves()) {
    if (v == leaf) {
      throw TreeError("leaf " + std::to_string(leaf) + " already in the immersion");
    }
    require_leaf(tree, v);
    marker.add(v);
  }
  return marker.cost_if_added(leaf);
}

Cost consecutive_leaf_cost(const RootedTree& tree, std::span<const NodeId> run) {
  if (run.empty()) return 0;
  for (size_t i = 0; i < run.size(); ++i) {
    require_leaf(tree, run[i]);
    if (i > 0 && tree.leaf_index(run[i]) != tree.leaf_index(run[i - 1]) + 1) {
      throw TreeError("leaf run is not contiguous in depth-first order");
    }
  }
  Cost total = node_distance(tree, tree.root(), run.front());
  for (size_t i = 1; i < run.size(); ++i) total += node_distance(tree, run[i - 1], run[i]);
  total += node_distance(tree, run.back(), tree.root());
  return total;
}

bool is_feasible(const RootedTree& tree, std::span<const NodeId> leaves, Cost p) {
  return immersion_cost(tree, leaves) <= p;
}

std::vector<std::string> verify_solution(const RootedTree& tree,
                                         const InstanceParams& params,
                                         const CoverSolution& solution) {
  std::vector<std::string> violations;
  const size_t m = solution.immersions.size();
  std::vector<int32_t> owner(static_cast<size_t>(tree.node_count()) + 1, -1);
  std::vector<Cost> actual(m, 0);

  for (size_t i = 0; i < m; ++i) {
    const Immersion& im = solution.immersions[i];
    const std::string name = "I" + std::to_string(i + 1);
    std::vector<NodeId> valid;
    for (NodeId v : im.leaves()) {
      if (!tree.contains(v) || !tree.is_leaf(v)) {
        violations.push_back("not a leaf: " + std::to_string(v) + " in " + name);
        continue;
      }
      if (owner[v] >= 0) {
        violations.push_back("leaf multiply covered: " + std::to_string(v) + " in I" +
                             std::to_string(owner[v] + 1) + " and " + name);
        if (static_cast<size_t>(owner[v]) == i) continue;
      }
      owner[v] = static_cast<int32_t>(i);
      valid.push_back(v);
    }
    actual[i] = immersion_cost(tree, valid);
    if (actual[i] != im.cost()) {
      violations.push_back("cost mismatch: " + name + " states " + std::to_string(im.cost()) +
                           ", actual " + std::to_string(actual[i]));
    }
    if (actual[i] > params.p) {
      violations.push_back("budget exceeded: " + name + " cost " + std::to_string(actual[i]) +
                           " > p=" + std::to_string(params.p));
    }
  }
  for (NodeId leaf : tree.leaves()) {
    if (owner[leaf] < 0) violations.push_back("leaf not covered: " + std::to_string(leaf));
  }

  Cost total = 0;
  for (Cost c : actual) total += c;
  if (solution.total_distance != total) {
    violations.push_back("total mismatch: states " + std::to_string(solution.total_distance) +
                         ", actual " + std::to_string(total));
  }

  if (solution.assignment) {
    const auto& blocks = *solution.assignment;
    if (blocks.size() > static_cast<size_t>(std::max(params.k, 0))) {
      violations.push_back("assignment uses " + std::to_string(blocks.size()) +
                           " agents but k=" + std::to_string(params.k));
    }
    std::vector<int> seen(m, 0);
    Cost worst = 0;
    for (const auto& block : blocks) {
      Cost sum = 0;
      for (size_t i : block) {
        if (i >= m) {
          violations.push_back("assignment references missing immersion I" +
                               std::to_string(i + 1));
          continue;
        }
        ++seen[i];
        sum += actual[i];
      }
      worst = std::max(worst, sum);
    }
    for (size_t i = 0; i < m; ++i) {
      if (seen[i] == 0) violations.push_back("immersion unassigned: I" + std::to_string(i + 1));
      if (seen[i] > 1) {
        violations.push_back("immersion assigned " + std::to_string(seen[i]) +
                             " times: I" + std::to_string(i + 1));
      }
    }
    if (!solution.makespan) {
      violations.push_back("makespan missing for assigned solution");
    } else if (*solution.makespan != worst) {
      violations.push_back("makespan mismatch: states " + std::to_string(*solution.makespan) +
                           ", actual " + std::to_string(worst));
    }
  } else if (solution.makespan && *solution.makespan != total) {
    violations.push_back("makespan mismatch: states " + std::to_string(*solution.makespan) +
                         ", single-agent time " + std::to_string(total));
  }
  return violations;
}

std::string format_solution(const CoverSolution& solution,
                            std::optional<InstanceParams> params) {
  std::ostringstream out;
  if (params) out << "# p=" << params->p << " k=" << params->k << '\n';
  for (size_t i = 0; i < solution.immersions.size(); ++i) {
    const Immersion& im = solution.immersions[i];
    out << 'I' << i + 1 << ':';
    for (NodeId v : im.leaves()) out << ' ' << v;
    out << " cost=" << im.cost() << '\n';
  }
  if (solution.assignment) {
    for (size_t j = 0; j < solution.assignment->size(); ++j) {
      const auto& block = (*solution.assignment)[j];
      Cost sum = 0;
      out << "agent " << j + 1 << ':';
      for (size_t i : block) {
        out << ' ' << i + 1;
        if (i < solution.immersions.size()) sum += solution.immersions[i].cost();
      }
      out << " time=" << sum << '\n';
    }
  }
  out << "total=" << solution.total_distance
      << " makespan=" << solution.makespan.value_or(solution.total_distance) << '\n';
  return out.str();
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int64_t to_int(std::string_view token, int line_no) {
  int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": expected an integer, got '" +
                                std::string(token) + "'");
  }
  return v;
}

// Parses `key=value` and returns the value, or nullopt if the key differs.
std::optional<int64_t> keyed(std::string_view token, std::string_view key, int line_no) {
  if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key ||
      token[key.size()] != '=') {
    return std::nullopt;
  }
  return to_int(token.substr(key.size() + 1), line_no);
}

// Cost over the members that are actual leaves; invalid ids are reported
// elsewhere.
Cost valid_leaf_cost(const RootedTree& tree, std::span<const NodeId> leaves) {
  std::vector<NodeId> valid;
  for (NodeId v : leaves) {
    if (tree.contains(v) && tree.is_leaf(v)) valid.push_back(v);
  }
  return immersion_cost(tree, valid);
}

}  // namespace

ParsedSolution parse_solution(std::string_view text) {
  ParsedSolution parsed;
  std::vector<std::vector<size_t>> blocks;
  bool have_trailer = false;
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    const auto fail = [&](const std::string& what) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
    };

    if (tokens[0] == "#") {
      for (size_t t = 1; t < tokens.size(); ++t) {
        if (auto p = keyed(tokens[t], "p", line_no)) parsed.p = *p;
        if (auto k = keyed(tokens[t], "k", line_no)) parsed.k = static_cast<int32_t>(*k);
      }
      continue;
    }
    if (tokens[0].front() == '#') continue;

    if (tokens[0].front() == 'I' && tokens[0].back() == ':') {
      const auto index = to_int(tokens[0].substr(1, tokens[0].size() - 2), line_no);
      if (index != static_cast<int64_t>(parsed.solution.immersions.size()) + 1) {
        fail("immersions must be numbered consecutively from I1");
      }
      if (tokens.size() < 2) fail("immersion line without cost");
      const auto cost = keyed(tokens.back(), "cost", line_no);
      if (!cost) fail("immersion line must end with cost=<c>");
      std::vector<NodeId> leaves;
      for (size_t t = 1; t + 1 < tokens.size(); ++t) {
        leaves.push_back(static_cast<NodeId>(to_int(tokens[t], line_no)));
      }
      parsed.solution.immersions.emplace_back(std::move(leaves), *cost);
      continue;
    }
    if (tokens[0] == "agent") {
      if (tokens.size() < 3 || tokens[1].back() != ':') fail("malformed agent line");
      const auto index = to_int(tokens[1].substr(0, tokens[1].size() - 1), line_no);
      if (index != static_cast<int64_t>(blocks.size()) + 1) {
        fail("agents must be numbered consecutively from 1");
      }
      const auto time = keyed(tokens.back(), "time", line_no);
      if (!time) fail("agent line must end with time=<t>");
      std::vector<size_t> block;
      for (size_t t = 2; t + 1 < tokens.size(); ++t) {
        const auto i = to_int(tokens[t], line_no);
        if (i < 1) fail("immersion index must be positive");
        block.push_back(static_cast<size_t>(i - 1));
      }
      blocks.push_back(std::move(block));
      parsed.stated_agent_times.push_back(*time);
      continue;
    }
    if (auto total = keyed(tokens[0], "total", line_no)) {
      parsed.solution.total_distance = *total;
      for (size_t t = 1; t < tokens.size(); ++t) {
        if (auto mk = keyed(tokens[t], "makespan", line_no)) parsed.solution.makespan = *mk;
      }
      have_trailer = true;
      continue;
    }
    // Diagnostics such as nodes_explored=<n> are accepted and ignored.
    if (tokens[0].find('=') != std::string_view::npos) continue;
    fail("unrecognized line");
  }
  if (!have_trailer) throw std::invalid_argument("missing `total=` trailer line");
  if (!blocks.empty()) parsed.solution.assignment = std::move(blocks);
  return parsed;
}

std::vector<std::string> verify_parsed_solution(const RootedTree& tree,
                                                const InstanceParams& params,
                                                const ParsedSolution& parsed) {
  auto violations = verify_solution(tree, params, parsed.solution);
  if (parsed.solution.assignment) {
    const auto& blocks = *parsed.solution.assignment;
    const auto& ims = parsed.solution.immersions;
    for (size_t j = 0; j < blocks.size() && j < parsed.stated_agent_times.size(); ++j) {
      Cost sum = 0;
      for (size_t i : blocks[j]) {
        if (i < ims.size()) sum += valid_leaf_cost(tree, ims[i].leaves());
      }
      if (sum != parsed.stated_agent_times[j]) {
        violations.push_back("agent time mismatch: agent " + std::to_string(j + 1) + " states " +
                             std::to_string(parsed.stated_agent_times[j]) + ", actual " +
                             std::to_string(sum));
      }
    }
  }
  return violations;
}

}  // namespace treecover
