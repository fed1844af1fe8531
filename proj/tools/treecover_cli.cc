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

// Command-line frontend over the treecover C API.
//
//   treecover gen --n <int> --seed <int> [--out <file>]
//   treecover solve --algo <name> (--p <int> | --p-policy <2h|2h+2>) [--k <int>] <treefile>
//   treecover schedule --k <int> --costs <comma list>
//   treecover bench --sizes <list> --trees-per-size <int> --p-policy <both|2h|2h+2>
//                   --k <int> --seed <int> --out-dir <dir>
//   treecover verify <treefile> <solutionfile>
//
// Exit status: 0 on success, 1 on usage errors, 2 on bad or infeasible input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "treecover/treecover_c.h"

namespace {

constexpr int kUsageError = 1;
constexpr int kInputError = 2;

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

// Thrown to unwind with a specific exit status after printing `what`.
struct Exit {
  int status;
  std::string message;
};

int status_exit_code(tc_status status) {
  return status == TC_ERR_INVALID_ARGUMENT ? kUsageError : kInputError;
}

void check(tc_status status, const std::string& context) {
  if (status != TC_OK) {
    throw Exit{status_exit_code(status), context + ": " + tc_last_error()};
  }
}

TreePtr load(const std::string& path) {
  tc_tree* raw = nullptr;
  check(tc_tree_load(path.c_str(), &raw), path);
  return TreePtr(raw);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kInputError, "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<int64_t> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    // a..b or a..b:step expands to an inclusive range.
    const auto dots = item.find("..");
    try {
      if (dots == std::string::npos) {
        size_t used = 0;
        out.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
        continue;
      }
      const auto colon = item.find(':', dots);
      const int64_t lo = std::stoll(item.substr(0, dots));
      const int64_t hi = std::stoll(item.substr(dots + 2, colon - dots - 2));
      const int64_t step = colon == std::string::npos ? 1 : std::stoll(item.substr(colon + 1));
      if (step <= 0) throw std::invalid_argument(item);
      for (int64_t v = lo; v <= hi; v += step) out.push_back(v);
    } catch (const std::exception&) {
      throw Exit{kUsageError, flag + ": cannot parse '" + item + "'"};
    }
  }
  if (out.empty()) throw Exit{kUsageError, flag + ": empty list"};
  return out;
}

int64_t autonomy(const tc_tree* tree, int64_t p, const std::string& policy) {
  if (p > 0) return p;
  const int64_t h = tc_tree_height(tree);
  if (policy == "2h") return 2 * h;
  if (policy == "2h+2") return 2 * h + 2;
  throw Exit{kUsageError, "--p-policy must be 2h or 2h+2"};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-constrained tree inspection solvers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tc_version());

  // gen
  int32_t gen_n = 0;
  uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a random tree file");
  gen->add_option("--n", gen_n, "Node count")->required();
  gen->add_option("--seed", gen_seed, "Random seed")->required();
  gen->add_option("--out", gen_out, "Output file (stdout when omitted)");

  // solve
  std::string solve_algo;
  int64_t solve_p = 0;
  std::string solve_policy = "2h";
  int32_t solve_k = 1;
  uint64_t solve_budget = 0;
  uint32_t solve_cap = 0;
  std::string solve_tree;
  auto* solve = app.add_subcommand("solve", "Solve one tree");
  solve
      ->add_option("--algo", solve_algo,
                   "sweeping|dftn|bc-dist|bc-imm|brute-dist|brute-imm|mintime|mintime-exact")
      ->required();
  auto* p_opt = solve->add_option("--p", solve_p, "Autonomy");
  solve->add_option("--p-policy", solve_policy, "2h or 2h+2 (default 2h)")->excludes(p_opt);
  solve->add_option("--k", solve_k, "Agents (Min-Time algorithms)");
  solve->add_option("--node-budget", solve_budget,
                    "Stop branch-and-cut after this many nodes and report the incumbent");
  solve->add_option("--leaf-cap", solve_cap, "Leaf cap of the exhaustive oracles");
  solve->add_option("treefile", solve_tree, "Tree file")->required();

  // schedule
  int32_t sched_k = 1;
  std::string sched_costs;
  auto* schedule = app.add_subcommand("schedule", "Optimal makespan split of job costs");
  schedule->add_option("--k", sched_k, "Agents")->required();
  schedule->add_option("--costs", sched_costs, "Comma-separated job costs")->required();

  // bench
  std::string bench_sizes;
  int32_t bench_trees = 15;
  std::string bench_policy = "both";
  int32_t bench_k = 2;
  uint64_t bench_seed = 0;
  std::string bench_out;
  int32_t bench_exact_max_n = 45;
  uint64_t bench_budget = 0;
  double bench_time_limit = 0;
  uint32_t bench_threads = 0;
  bool bench_verbose = false;
  auto* bench = app.add_subcommand("bench", "Run the random-tree experiment");
  bench->add_option("--sizes", bench_sizes, "Node counts, e.g. 30 or 20,25,30 or 20..45:5")
      ->required();
  bench->add_option("--trees-per-size", bench_trees, "Random trees per size");
  bench->add_option("--p-policy", bench_policy, "both|2h|2h+2");
  bench->add_option("--k", bench_k, "Agents for the mT column");
  bench->add_option("--seed", bench_seed, "Run seed");
  bench->add_option("--out-dir", bench_out, "Output directory")->required();
  bench->add_option("--exact-max-n", bench_exact_max_n, "Largest n given to exact solvers");
  bench->add_option("--node-budget", bench_budget, "Per-call branch-and-cut node budget");
  bench->add_option("--time-limit-ms", bench_time_limit, "Per-call branch-and-cut time limit");
  bench->add_option("--threads", bench_threads, "Worker threads (0: all cores)");
  bench->add_flag("--verbose", bench_verbose, "Per-tree progress on stderr");

  // verify
  std::string verify_tree;
  std::string verify_solution;
  int64_t verify_p = 0;
  int32_t verify_k = 0;
  auto* verify = app.add_subcommand("verify", "Check a solution file against a tree");
  verify->add_option("treefile", verify_tree, "Tree file")->required();
  verify->add_option("solutionfile", verify_solution, "Solution file")->required();
  verify->add_option("--p", verify_p, "Autonomy (default: from the solution, else 2h)");
  verify->add_option("--k", verify_k, "Agents (default: from the solution, else 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  try {
    if (*gen) {
      tc_tree* raw = nullptr;
      check(tc_tree_random(gen_n, gen_seed, &raw), "gen");
      TreePtr tree(raw);
      char* text_raw = nullptr;
      check(tc_tree_serialize(tree.get(), &text_raw), "gen");
      StringPtr text(text_raw);
      if (gen_out.empty()) {
        std::cout << text.get();
      } else {
        std::ofstream out(gen_out, std::ios::binary);
        if (!out) throw Exit{kInputError, "cannot write " + gen_out};
        out << text.get();
      }
    } else if (*solve) {
      tc_algorithm algo{};
      check(tc_algorithm_from_name(solve_algo.c_str(), &algo), "--algo");
      TreePtr tree = load(solve_tree);
      const int64_t p = autonomy(tree.get(), solve_p, solve_policy);
      const tc_solve_options options{solve_k, solve_budget, solve_cap};
      tc_solution* raw = nullptr;
      check(tc_solve(tree.get(), algo, p, &options, &raw), solve_algo);
      SolutionPtr solution(raw);
      char* text_raw = nullptr;
      check(tc_solution_format(solution.get(), p, solve_k, &text_raw), "format");
      StringPtr text(text_raw);
      std::cout << text.get();
      if (!tc_solution_proven_optimal(solution.get())) {
        std::cout << "# incumbent, not proven optimal\n";
        std::cerr << "node budget exhausted: incumbent, not proven optimal\n";
      }
      std::printf("nodes_explored=%llu\nruntime_ms=%.3f\n",
                  static_cast<unsigned long long>(tc_solution_nodes_explored(solution.get())),
                  tc_solution_runtime_ms(solution.get()));
    } else if (*schedule) {
      const auto costs = parse_int_list(sched_costs, "--costs");
      int64_t makespan = 0;
      std::vector<int32_t> agent(costs.size(), 0);
      check(tc_schedule(costs.data(), costs.size(), sched_k, &makespan, agent.data()),
            "schedule");
      for (int32_t j = 0; j < sched_k; ++j) {
        int64_t time = 0;
        std::cout << "agent " << j + 1 << ':';
        for (size_t i = 0; i < costs.size(); ++i) {
          if (agent[i] == j) {
            std::cout << ' ' << i + 1;
            time += costs[i];
          }
        }
        std::cout << " time=" << time << '\n';
      }
      std::cout << "makespan=" << makespan << '\n';
    } else if (*bench) {
      std::vector<int32_t> sizes;
      for (int64_t n : parse_int_list(bench_sizes, "--sizes")) sizes.push_back(static_cast<int32_t>(n));
      uint32_t mask = 0;
      if (bench_policy == "both") {
        mask = 3;
      } else if (bench_policy == "2h") {
        mask = 1;
      } else if (bench_policy == "2h+2") {
        mask = 2;
      } else {
        throw Exit{kUsageError, "--p-policy must be both, 2h or 2h+2"};
      }
      tc_bench_config config{};
      config.sizes = sizes.data();
      config.size_count = sizes.size();
      config.trees_per_size = bench_trees;
      config.policy_mask = mask;
      config.k = bench_k;
      config.seed = bench_seed;
      config.exact_max_n = bench_exact_max_n;
      config.exact_node_budget = bench_budget;
      config.exact_time_limit_ms = bench_time_limit;
      config.threads = bench_threads;
      config.out_dir = bench_out.c_str();
      config.verbose = bench_verbose ? 1 : 0;
      check(tc_bench_run(&config), "bench");
      std::cout << "wrote results.csv, ratios.csv, runtime.csv and plots to " << bench_out
                << '\n';
    } else if (*verify) {
      TreePtr tree = load(verify_tree);
      const std::string text = read_file(verify_solution);
      char* report_raw = nullptr;
      const tc_status status =
          tc_verify_text(tree.get(), text.c_str(), verify_p, verify_k, &report_raw);
      StringPtr report(report_raw);
      if (status == TC_ERR_VIOLATION) {
        std::cerr << "invalid solution:\n" << (report ? report.get() : "");
        return kInputError;
      }
      check(status, verify_solution);
      std::cout << "ok\n";
    }
  } catch (const Exit& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.status;
  }
  return 0;
}
