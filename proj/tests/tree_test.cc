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

#include <gtest/gtest.h>

#include <algorithm>
#include <queue>
#include <set>
#include <vector>

namespace treecover {
namespace {

constexpr const char* kFig2 = "4 1\n1 2 1\n2 3 1\n2 4 1\n";

// Path lengths by breadth-first search over the undirected edge list; shares
// nothing with the parent-walking implementation.
std::vector<Cost> bfs_distances(const RootedTree& t, NodeId source) {
  std::vector<std::vector<std::pair<NodeId, Cost>>> adj(t.node_count() + 1);
  for (const Edge& e : t.edges()) {
    adj[e.parent].push_back({e.child, e.length});
    adj[e.child].push_back({e.parent, e.length});
  }
  std::vector<Cost> dist(t.node_count() + 1, -1);
  std::queue<NodeId> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const NodeId u = q.front();
    q.pop();
    for (auto [v, w] : adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + w;
        q.push(v);
      }
    }
  }
  return dist;
}

int error_line(std::string_view text) {
  try {
    parse_tree(text);
  } catch (const TreeError& e) {
    return e.line();
  }
  return -1;
}

std::string error_message(std::string_view text) {
  try {
    parse_tree(text);
  } catch (const TreeError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseTree, Fig2Sample) {
  const RootedTree t = parse_tree(kFig2);
  EXPECT_EQ(t.node_count(), 4);
  EXPECT_EQ(t.root(), 1);
  EXPECT_EQ(dfs_leaf_order(t), (std::vector<NodeId>{3, 4}));
  EXPECT_EQ(height(t), 2);
  EXPECT_EQ(t.depth(3), 2);
  EXPECT_EQ(t.parent(3), 2);
}

TEST(ParseTree, SingleNode) {
  const RootedTree t = parse_tree("1 1");
  EXPECT_EQ(t.node_count(), 1);
  EXPECT_TRUE(t.leaves().empty());
  EXPECT_EQ(height(t), 0);
}

TEST(ParseTree, Star) {
  const RootedTree t = parse_tree("3 1\n1 2 1\n1 3 1");
  EXPECT_EQ(dfs_leaf_order(t), (std::vector<NodeId>{2, 3}));
  EXPECT_EQ(height(t), 1);
}

TEST(ParseTree, CommentsBlankLinesAndAnyRoot) {
  const RootedTree t = parse_tree("# sample\n\n3 2\n# edges\n2 1 5\n  2 3 1\n");
  EXPECT_EQ(t.root(), 2);
  EXPECT_EQ(t.depth(1), 5);
  EXPECT_EQ(height(t), 5);
  EXPECT_EQ(dfs_leaf_order(t), (std::vector<NodeId>{1, 3}));
}

TEST(ParseTree, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("4 1\n1 2 1\n2 3\n2 4 1"), 3);           // malformed
  EXPECT_EQ(error_line("4 1\n1 2 1\n2 3 x\n2 4 1"), 3);         // malformed token
  EXPECT_EQ(error_line("4 1\n1 2 1\n2 3 1\n1 3 1"), 4);         // duplicate child
  EXPECT_EQ(error_line("4 1\n1 2 1\n2 3 0\n2 4 1"), 3);         // non-positive length
  EXPECT_EQ(error_line("4 1\n1 2 1\n2 3 -2\n2 4 1"), 3);
  EXPECT_EQ(error_line("4 1\n1 2 1\n2 5 1\n2 4 1"), 3);         // out of range
  EXPECT_EQ(error_line("4 1\n1 2 1\n2 3 1"), 4);                // disconnected at EOF
  EXPECT_EQ(error_line("4 1\n1 2 1\n2 2 1\n2 4 1"), 3);         // self loop
  EXPECT_EQ(error_line("4 1\n1 2 1\n2 1 1\n2 4 1"), 3);         // edge into root
  EXPECT_EQ(error_line("4 1\n1 2 1\n3 4 1\n4 3 1"), 4);         // cycle 3-4
  EXPECT_EQ(error_line("3 1\n1 2 1\n1 3 1\n2 3 1"), 4);         // extra line
  EXPECT_EQ(error_line("4 9\n"), 1);                            // bad root
  EXPECT_EQ(error_line("# only a comment\n"), 2);               // no header
}

TEST(ParseTree, ErrorMessagesNameTheProblem) {
  EXPECT_NE(error_message("4 1\n1 2 1\n2 3 1\n1 3 1").find("duplicate child 3"),
            std::string::npos);
  EXPECT_NE(error_message("4 1\n1 2 1\n3 4 1\n4 3 1").find("cycle"), std::string::npos);
  EXPECT_NE(error_message("4 1\n1 2 1\n2 3 1").find("node 4 is disconnected"),
            std::string::npos);
  EXPECT_NE(error_message("4 1\n1 2 1\n2 3 0\n2 4 1").find("positive"), std::string::npos);
  EXPECT_NE(error_message("4 1\n1 2 1\n2 5 1\n2 4 1").find("out of range"), std::string::npos);
}

TEST(RootedTree, ConstructorRejectsBadEdges) {
  const std::vector<Edge> two_parents{{1, 2, 1}, {1, 3, 1}, {2, 3, 1}};
  EXPECT_THROW(RootedTree(4, 1, two_parents), TreeError);
  const std::vector<Edge> cycle{{1, 2, 1}, {3, 4, 1}, {4, 3, 1}};
  EXPECT_THROW(RootedTree(4, 1, cycle), TreeError);
  const std::vector<Edge> zero{{1, 2, 0}};
  EXPECT_THROW(RootedTree(2, 1, zero), TreeError);
  EXPECT_THROW(RootedTree(0, 1, {}), TreeError);
}

TEST(SerializeTree, CanonicalForms) {
  EXPECT_EQ(serialize_tree(parse_tree("1 1")), "1 1\n");
  EXPECT_EQ(serialize_tree(parse_tree("4 1\n2 4 1\n1 2 1\n2 3 1")), kFig2);
  EXPECT_EQ(serialize_tree(parse_tree("5 1\n4 5 1\n1 4 1\n2 3 1\n1 2 1")),
            "5 1\n1 2 1\n2 3 1\n1 4 1\n4 5 1\n");
}

TEST(SerializeTree, RoundTripOnGeneratedTrees) {
  for (int32_t n = 1; n <= 60; ++n) {
    for (uint64_t seed = 0; seed < 5; ++seed) {
      const RootedTree t = random_tree(n, seed);
      EXPECT_EQ(parse_tree(serialize_tree(t)), t) << "n=" << n << " seed=" << seed;
    }
  }
}

TEST(Height, Examples) {
  EXPECT_EQ(height(parse_tree(kFig2)), 2);
  EXPECT_EQ(height(parse_tree("1 1")), 0);
  EXPECT_EQ(height(parse_tree("4 1\n1 2 1\n2 3 1\n3 4 1")), 3);
}

TEST(NodeDistance, Examples) {
  const RootedTree t = parse_tree(kFig2);
  EXPECT_EQ(node_distance(t, 3, 4), 2);
  EXPECT_EQ(node_distance(t, 1, 4), t.depth(4));
  EXPECT_EQ(node_distance(t, 3, 3), 0);
  EXPECT_THROW(node_distance(t, 3, 7), TreeError);
  EXPECT_THROW(node_distance(t, 0, 1), TreeError);
}

TEST(NodeDistance, WeightedEdges) {
  const RootedTree t = parse_tree("5 1\n1 2 3\n2 3 2\n1 4 1\n4 5 7");
  EXPECT_EQ(node_distance(t, 3, 5), 3 + 2 + 1 + 7);
  EXPECT_EQ(node_distance(t, 2, 3), 2);
  EXPECT_EQ(lowest_common_ancestor(t, 3, 5), 1);
}

TEST(NodeDistance, MatchesBfsAndIsAMetric) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const int32_t n = 2 + static_cast<int32_t>(seed % 49);
    const RootedTree t = random_tree(n, seed * 7919);
    std::vector<std::vector<Cost>> d(n + 1);
    for (NodeId u = 1; u <= n; ++u) d[u] = bfs_distances(t, u);
    for (NodeId u = 1; u <= n; ++u) {
      for (NodeId v = 1; v <= n; ++v) {
        ASSERT_EQ(node_distance(t, u, v), d[u][v]);
        ASSERT_EQ(node_distance(t, u, v), node_distance(t, v, u));
        for (NodeId w = 1; w <= n; ++w) {
          ASSERT_LE(d[u][w], d[u][v] + d[v][w]);
        }
      }
    }
  }
}

TEST(DfsLeafOrder, Examples) {
  EXPECT_EQ(dfs_leaf_order(parse_tree(kFig2)), (std::vector<NodeId>{3, 4}));
  EXPECT_EQ(dfs_leaf_order(parse_tree("4 1\n1 4 1\n1 3 1\n1 2 1")),
            (std::vector<NodeId>{2, 3, 4}));
  EXPECT_EQ(dfs_leaf_order(parse_tree("5 1\n1 2 1\n2 3 1\n1 4 1\n4 5 1")),
            (std::vector<NodeId>{3, 5}));
}

TEST(DfsLeafOrder, ListsEveryLeafOnceAndNoInnerNode) {
  for (uint64_t seed = 0; seed < 200; ++seed) {
    const RootedTree t = random_tree(1 + static_cast<int32_t>(seed % 45), seed);
    const auto order = dfs_leaf_order(t);
    std::set<NodeId> unique(order.begin(), order.end());
    ASSERT_EQ(unique.size(), order.size());
    for (NodeId v = 1; v <= t.node_count(); ++v) {
      const bool leaf = v != t.root() && t.children(v).empty();
      ASSERT_EQ(unique.count(v) == 1, leaf) << "node " << v;
    }
  }
}

TEST(RandomTree, SmallCases) {
  const RootedTree one = random_tree(1, 42);
  EXPECT_EQ(one.node_count(), 1);
  EXPECT_EQ(serialize_tree(one), "1 1\n");
  for (uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_EQ(serialize_tree(random_tree(2, seed)), "2 1\n1 2 1\n");
  }
  EXPECT_THROW(random_tree(0, 1), std::invalid_argument);
}

TEST(RandomTree, InvariantsOnThousandInstances) {
  for (int i = 0; i < 1000; ++i) {
    const int32_t n = 1 + i % 60;
    const uint64_t seed = 1000003ULL * static_cast<uint64_t>(i);
    const RootedTree t = random_tree(n, seed);
    ASSERT_EQ(t.node_count(), n);
    ASSERT_EQ(t.root(), 1);
    const auto edges = t.edges();
    ASSERT_EQ(static_cast<int32_t>(edges.size()), n - 1);
    for (const Edge& e : edges) ASSERT_EQ(e.length, 1);
    // Connected and acyclic: every node reaches the root in fewer than n steps.
    for (NodeId v = 1; v <= n; ++v) {
      NodeId u = v;
      int steps = 0;
      while (u != t.root() && steps < n) {
        u = t.parent(u);
        ++steps;
      }
      ASSERT_EQ(u, t.root());
      ASSERT_EQ(t.depth(v), steps);
    }
    ASSERT_EQ(t.preorder().size(), static_cast<size_t>(n));
  }
}

TEST(RandomTree, ReproducibleForFixedSeed) {
  EXPECT_EQ(random_tree(30, 7), random_tree(30, 7));
  EXPECT_FALSE(random_tree(30, 7) == random_tree(30, 8));
}

TEST(ValidateInstance, Examples) {
  const RootedTree t = parse_tree(kFig2);
  EXPECT_FALSE(validate_instance(t, {4, 1}).has_value());
  const auto low = validate_instance(t, {3, 1});
  ASSERT_TRUE(low.has_value());
  EXPECT_NE(low->find("p < 2h"), std::string::npos);
  EXPECT_FALSE(validate_instance(t, {6, 2}).has_value());
  const auto no_agents = validate_instance(t, {6, 0});
  ASSERT_TRUE(no_agents.has_value());
  EXPECT_NE(no_agents->find("k < 1"), std::string::npos);
  EXPECT_THROW(require_feasible(t, 3), InfeasibleError);
}

}  // namespace
}  // namespace treecover
