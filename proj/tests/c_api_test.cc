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

#include "treecover/treecover_c.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <memory>
#include <string>
#include <thread>
#include <vector>

namespace {

struct TreeDeleter {
  void operator()(tc_tree* t) const { tc_tree_free(t); }
};
struct SolutionDeleter {
  void operator()(tc_solution* s) const { tc_solution_free(s); }
};
struct StringDeleter {
  void operator()(char* s) const { tc_string_free(s); }
};
using TreePtr = std::unique_ptr<tc_tree, TreeDeleter>;
using SolutionPtr = std::unique_ptr<tc_solution, SolutionDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

constexpr const char* kFig2 = "4 1\n1 2 1\n2 3 1\n2 4 1\n";

TreePtr parse(const char* text) {
  tc_tree* raw = nullptr;
  EXPECT_EQ(tc_tree_parse(text, &raw), TC_OK) << tc_last_error();
  return TreePtr(raw);
}

SolutionPtr solve(const tc_tree* tree, tc_algorithm algo, int64_t p, int32_t k = 1) {
  tc_solve_options options{k, 0, 0};
  tc_solution* raw = nullptr;
  EXPECT_EQ(tc_solve(tree, algo, p, &options, &raw), TC_OK) << tc_last_error();
  return SolutionPtr(raw);
}

TEST(CApi, Version) { EXPECT_STREQ(tc_version(), "1.0.0"); }

TEST(CApi, AlgorithmNamesRoundTrip) {
  for (int a = TC_ALGO_SWEEPING; a <= TC_ALGO_MINTIME_EXACT; ++a) {
    tc_algorithm out;
    const char* name = tc_algorithm_name(static_cast<tc_algorithm>(a));
    ASSERT_NE(name, nullptr);
    ASSERT_EQ(tc_algorithm_from_name(name, &out), TC_OK) << name;
    EXPECT_EQ(out, a);
  }
  tc_algorithm out;
  EXPECT_EQ(tc_algorithm_from_name("simplex", &out), TC_ERR_INVALID_ARGUMENT);
  EXPECT_NE(std::string(tc_last_error()).find("simplex"), std::string::npos);
}

TEST(CApi, TreeQueries) {
  TreePtr t = parse(kFig2);
  EXPECT_EQ(tc_tree_node_count(t.get()), 4);
  EXPECT_EQ(tc_tree_leaf_count(t.get()), 2);
  EXPECT_EQ(tc_tree_height(t.get()), 2);
  int64_t d = 0;
  ASSERT_EQ(tc_tree_distance(t.get(), 3, 4, &d), TC_OK);
  EXPECT_EQ(d, 2);
  EXPECT_EQ(tc_tree_distance(t.get(), 3, 9, &d), TC_ERR_INVALID_ARGUMENT);

  int32_t leaves[1];
  size_t count = 0;
  ASSERT_EQ(tc_tree_leaves(t.get(), leaves, 1, &count), TC_OK);
  EXPECT_EQ(count, 2u);
  EXPECT_EQ(leaves[0], 3);

  char* text = nullptr;
  ASSERT_EQ(tc_tree_serialize(t.get(), &text), TC_OK);
  EXPECT_STREQ(text, kFig2);
  tc_string_free(text);
}

TEST(CApi, ParseErrors) {
  tc_tree* raw = nullptr;
  EXPECT_EQ(tc_tree_parse("4 1\n1 2 1\n2 3 1\n2 3 1\n", &raw), TC_ERR_PARSE);
  EXPECT_EQ(raw, nullptr);
  EXPECT_NE(std::string(tc_last_error()).find("line 4"), std::string::npos);
  EXPECT_EQ(tc_tree_parse(nullptr, &raw), TC_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(tc_tree_load("/nonexistent/tree.txt", &raw), TC_ERR_IO);
}

TEST(CApi, RandomTreeIsReproducible) {
  tc_tree* a = nullptr;
  tc_tree* b = nullptr;
  ASSERT_EQ(tc_tree_random(30, 9, &a), TC_OK);
  ASSERT_EQ(tc_tree_random(30, 9, &b), TC_OK);
  TreePtr pa(a), pb(b);
  char* ta = nullptr;
  char* tb = nullptr;
  tc_tree_serialize(a, &ta);
  tc_tree_serialize(b, &tb);
  StringPtr sa(ta), sb(tb);
  EXPECT_STREQ(ta, tb);
  tc_tree* bad = nullptr;
  EXPECT_EQ(tc_tree_random(0, 1, &bad), TC_ERR_INVALID_ARGUMENT);
}

TEST(CApi, ValidateInstance) {
  TreePtr t = parse(kFig2);
  EXPECT_EQ(tc_validate_instance(t.get(), 4, 1), TC_OK);
  EXPECT_EQ(tc_validate_instance(t.get(), 3, 1), TC_ERR_INFEASIBLE);
  EXPECT_EQ(tc_validate_instance(t.get(), 4, 0), TC_ERR_INFEASIBLE);
}

TEST(CApi, SolveFig2) {
  TreePtr t = parse(kFig2);
  SolutionPtr d = solve(t.get(), TC_ALGO_BC_DIST, 6);
  EXPECT_EQ(tc_solution_total(d.get()), 6);
  EXPECT_EQ(tc_solution_immersion_count(d.get()), 1u);
  EXPECT_EQ(tc_solution_immersion_cost(d.get(), 0), 6);
  EXPECT_TRUE(tc_solution_proven_optimal(d.get()));
  EXPECT_GT(tc_solution_nodes_explored(d.get()), 0u);
  EXPECT_GE(tc_solution_runtime_ms(d.get()), 0.0);

  SolutionPtr mt = solve(t.get(), TC_ALGO_MINTIME_EXACT, 6, 2);
  EXPECT_EQ(tc_solution_makespan(mt.get()), 4);
  SolutionPtr h = solve(t.get(), TC_ALGO_MINTIME, 4, 2);
  EXPECT_EQ(tc_solution_makespan(h.get()), 4);
  EXPECT_EQ(tc_solution_total(h.get()), 8);

  for (tc_algorithm a : {TC_ALGO_SWEEPING, TC_ALGO_DFTN, TC_ALGO_BRUTE_DIST, TC_ALGO_BRUTE_IMM,
                         TC_ALGO_BC_IMM}) {
    SolutionPtr s = solve(t.get(), a, 6);
    EXPECT_EQ(tc_solution_total(s.get()), 6) << tc_algorithm_name(a);
    EXPECT_EQ(tc_solution_makespan(s.get()), 6);
  }
}

TEST(CApi, SolveErrors) {
  TreePtr t = parse(kFig2);
  tc_solution* raw = nullptr;
  EXPECT_EQ(tc_solve(t.get(), TC_ALGO_DFTN, 3, nullptr, &raw), TC_ERR_INFEASIBLE);
  EXPECT_EQ(raw, nullptr);
  EXPECT_NE(std::string(tc_last_error()).find("p=3"), std::string::npos) << tc_last_error();

  tc_tree* wide_raw = nullptr;
  std::string star = "12 1\n";
  for (int v = 2; v <= 12; ++v) star += "1 " + std::to_string(v) + " 1\n";
  ASSERT_EQ(tc_tree_parse(star.c_str(), &wide_raw), TC_OK);
  TreePtr wide(wide_raw);
  EXPECT_EQ(tc_solve(wide.get(), TC_ALGO_BRUTE_DIST, 2, nullptr, &raw), TC_ERR_CAP_EXCEEDED);
  EXPECT_EQ(tc_solve(t.get(), static_cast<tc_algorithm>(42), 6, nullptr, &raw),
            TC_ERR_INVALID_ARGUMENT);
}

TEST(CApi, NodeBudget) {
  tc_tree* raw = nullptr;
  ASSERT_EQ(tc_tree_random(45, 5, &raw), TC_OK);
  TreePtr t(raw);
  tc_solve_options options{1, 5, 0};
  tc_solution* s = nullptr;
  ASSERT_EQ(tc_solve(t.get(), TC_ALGO_BC_DIST, 2 * tc_tree_height(t.get()), &options, &s), TC_OK);
  SolutionPtr sol(s);
  EXPECT_FALSE(tc_solution_proven_optimal(s));
}

TEST(CApi, FormatAndVerify) {
  TreePtr t = parse(kFig2);
  SolutionPtr s = solve(t.get(), TC_ALGO_MINTIME, 4, 2);
  char* text = nullptr;
  ASSERT_EQ(tc_solution_format(s.get(), 4, 2, &text), TC_OK);
  StringPtr owned(text);
  EXPECT_EQ(std::string(text).rfind("# p=4 k=2\n", 0), 0u) << text;
  char* report = nullptr;
  EXPECT_EQ(tc_verify_text(t.get(), text, 0, 0, &report), TC_OK);
  StringPtr owned_report(report);
  EXPECT_STREQ(report, "");

  // One agent cannot hold an assignment over two.
  char* report2 = nullptr;
  EXPECT_EQ(tc_verify_text(t.get(), text, 0, 1, &report2), TC_ERR_VIOLATION);
  StringPtr owned_report2(report2);
  EXPECT_NE(std::string(report2).find("k=1"), std::string::npos);

  const char* doubled = "I1: 3 4 cost=6\nI2: 4 cost=4\ntotal=10 makespan=10\n";
  char* report3 = nullptr;
  EXPECT_EQ(tc_verify_text(t.get(), doubled, 6, 1, &report3), TC_ERR_VIOLATION);
  StringPtr owned_report3(report3);
  EXPECT_NE(std::string(report3).find("leaf multiply covered"), std::string::npos);

  EXPECT_EQ(tc_verify_text(t.get(), "garbage", 6, 1, nullptr), TC_ERR_PARSE);
}

TEST(CApi, Schedule) {
  const int64_t costs[] = {5, 3, 3, 3};
  int64_t makespan = 0;
  int32_t agent[4] = {-1, -1, -1, -1};
  ASSERT_EQ(tc_schedule(costs, 4, 2, &makespan, agent), TC_OK);
  EXPECT_EQ(makespan, 8);
  int64_t load[2] = {0, 0};
  for (int i = 0; i < 4; ++i) {
    ASSERT_GE(agent[i], 0);
    ASSERT_LT(agent[i], 2);
    load[agent[i]] += costs[i];
  }
  EXPECT_EQ(std::max(load[0], load[1]), 8);
  EXPECT_EQ(tc_schedule(costs, 4, 0, &makespan, nullptr), TC_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(tc_schedule(costs, 4, 2, nullptr, nullptr), TC_ERR_INVALID_ARGUMENT);
}

TEST(CApi, BenchRun) {
  const auto dir = std::filesystem::temp_directory_path() / "treecover_c_api_bench";
  std::filesystem::remove_all(dir);
  const int32_t sizes[] = {5, 8};
  const std::string out = dir.string();
  tc_bench_config config{sizes, 2, 2, 3u, 2, 1, 45, 0, 0, 1, out.c_str(), 0};
  ASSERT_EQ(tc_bench_run(&config), TC_OK) << tc_last_error();
  EXPECT_TRUE(std::filesystem::exists(dir / "results.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "runtime.svg"));
  config.policy_mask = 0;
  EXPECT_EQ(tc_bench_run(&config), TC_ERR_INVALID_ARGUMENT);
  std::filesystem::remove_all(dir);
}

TEST(CApi, LastErrorIsPerThread) {
  tc_tree* raw = nullptr;
  EXPECT_EQ(tc_tree_parse("x", &raw), TC_ERR_PARSE);
  const std::string here = tc_last_error();
  std::string there;
  std::thread([&] { there = tc_last_error(); }).join();
  EXPECT_FALSE(here.empty());
  EXPECT_TRUE(there.empty());
}

}  // namespace
