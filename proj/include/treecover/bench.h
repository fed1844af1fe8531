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

#ifndef TREECOVER_BENCH_H_
#define TREECOVER_BENCH_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "treecover/tree.h"

namespace treecover {

// Autonomy relative to the tree height: p = 2(h + slack).
struct PPolicy {
  int32_t slack = 0;

  Cost autonomy_for(const RootedTree& tree) const { return 2 * (tree.height() + slack); }
  // "2h", "2h+2", ...
  std::string name() const;
  static std::optional<PPolicy> from_name(const std::string& name);
  bool operator==(const PPolicy&) const = default;
};

struct BenchConfig {
  std::vector<int32_t> sizes;
  int32_t trees_per_size = 1;
  std::vector<PPolicy> policies{PPolicy{0}, PPolicy{1}};
  int32_t k = 2;
  uint64_t seed = 0;
  // Exact solvers only run on trees with at most this many nodes.
  int32_t exact_max_n = 45;
  bool run_exact = true;
  // Per exact call; 0 means unlimited. A node budget keeps runs reproducible,
  // a time limit does not.
  uint64_t exact_node_budget = 0;
  double exact_time_limit_ms = 0;
  // Worker threads; 0 uses the hardware concurrency.
  unsigned threads = 0;
};

struct AlgoOutcome {
  bool ran = false;
  // For exact solvers: finished without hitting a budget.
  bool complete = false;
  Cost distance = 0;
  size_t immersions = 0;
  double runtime_ms = 0;
};

struct PolicyBlock {
  PPolicy policy;
  Cost p = 0;
  AlgoOutcome bc_min_distance;
  AlgoOutcome bc_min_immersions;
  AlgoOutcome dftn;
  AlgoOutcome sweeping;
  // Makespan of the DFTN + scheduling pipeline for config.k agents.
  AlgoOutcome min_time;
};

struct BenchRecord {
  std::string tree_id;
  int32_t n = 0;
  size_t leaf_count = 0;
  Cost height = 0;
  uint64_t tree_seed = 0;
  std::vector<PolicyBlock> blocks;
};

struct RatioSummary {
  int32_t n = 0;
  std::string policy;
  std::string algorithm;  // "dftn" or "sweeping"
  std::string metric;     // "distance" or "immersions"
  size_t samples = 0;
  // Records skipped because the exact solver did not finish.
  size_t excluded = 0;
  double min = 0;
  double mean = 0;
  double max = 0;
};

struct BenchResult {
  std::vector<BenchRecord> records;
  std::vector<RatioSummary> summaries;
};

// Seed of the t-th tree of size n under a run seed.
uint64_t tree_seed(uint64_t run_seed, int32_t n, int32_t t);

// Solves one tree under every policy and verifies each solution; throws
// std::logic_error if a solver returns an invalid cover.
BenchRecord bench_tree(const RootedTree& tree, const std::string& tree_id,
                       const BenchConfig& config);

// Generates trees_per_size random trees for every size and benchmarks them.
// Records come back in (size, tree) order whatever the thread count.
BenchResult run_benchmark(const BenchConfig& config, std::ostream* log = nullptr);

std::vector<RatioSummary> summarize_ratios(std::span<const BenchRecord> records,
                                           std::span<const PPolicy> policies);

// One row per tree. Columns: tree_id,n,l,h then, per policy with prefix
// `<policy>_`: p, bcmd_dist, bcmd_im, bcmi_dist, bcmi_im, dftn_dist, dftn_im,
// swpl_dist, swpl_im, mT, exact_complete, and the runtime columns ending in
// `_ms`. Cells of solvers that did not run are empty.
std::string records_csv(std::span<const BenchRecord> records, std::span<const PPolicy> policies);
std::string ratios_csv(std::span<const RatioSummary> summaries);
// Mean runtime per (n, policy, algorithm).
std::string runtime_csv(std::span<const BenchRecord> records, std::span<const PPolicy> policies);

// Drops every column whose header ends in `_ms`.
std::string strip_runtime_columns(const std::string& csv);

// Ratio intervals (min..max with mean marker) against n for one metric.
std::string ratio_svg(std::span<const RatioSummary> summaries, const std::string& metric);
// Mean runtime against n, one series per algorithm; algorithms without
// samples are left out and reported to `log`.
std::string runtime_svg(std::span<const BenchRecord> records, std::span<const PPolicy> policies,
                        std::ostream* log = nullptr);

// Writes ratios.csv, runtime.csv, ratio_distance.svg, ratio_immersions.svg
// and runtime.svg into `dir`. Returns the paths written.
std::vector<std::filesystem::path> emit_plots(std::span<const RatioSummary> summaries,
                                              std::span<const BenchRecord> records,
                                              std::span<const PPolicy> policies,
                                              const std::filesystem::path& dir,
                                              std::ostream* log = nullptr);

// results.csv plus everything emit_plots writes.
std::vector<std::filesystem::path> write_bench_outputs(const BenchResult& result,
                                                       const BenchConfig& config,
                                                       const std::filesystem::path& dir,
                                                       std::ostream* log = nullptr);

}  // namespace treecover

#endif  // TREECOVER_BENCH_H_
