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

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <iostream>
#include <new>
#include <string>
#include <system_error>

#include "treecover/bench.h"
#include "treecover/errors.h"
#include "treecover/exact.h"
#include "treecover/heuristics.h"
#include "treecover/immersion.h"
#include "treecover/scheduling.h"
#include "treecover/tree.h"

struct tc_tree {
  treecover::RootedTree tree;
};

struct tc_solution {
  treecover::CoverSolution solution;
  uint64_t nodes_explored = 0;
  bool proven_optimal = true;
  double runtime_ms = 0;
};

namespace {

thread_local std::string last_error;

tc_status fail(tc_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Maps the exception in flight to a status code.
tc_status translate_exception() {
  try {
    throw;
  } catch (const treecover::InfeasibleError& e) {
    return fail(TC_ERR_INFEASIBLE, e.what());
  } catch (const treecover::CapExceededError& e) {
    return fail(TC_ERR_CAP_EXCEEDED, e.what());
  } catch (const std::filesystem::filesystem_error& e) {
    return fail(TC_ERR_IO, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(TC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TC_ERR_INTERNAL, "out of memory");
  } catch (const std::logic_error& e) {
    return fail(TC_ERR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(TC_ERR_IO, e.what());
  } catch (...) {
    return fail(TC_ERR_INTERNAL, "unknown error");
  }
}

template <typename Body>
tc_status guarded(Body&& body) {
  try {
    return body();
  } catch (...) {
    return translate_exception();
  }
}

// Tree errors raised while reading input are parse errors; elsewhere they are
// invalid arguments.
template <typename Body>
tc_status guarded_parse(Body&& body) {
  try {
    return body();
  } catch (const treecover::TreeError& e) {
    return fail(TC_ERR_PARSE, e.what());
  } catch (...) {
    return translate_exception();
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tc_status null_argument(const char* what) {
  return fail(TC_ERR_INVALID_ARGUMENT, std::string(what) + " must not be NULL");
}

constexpr const char* kAlgorithmNames[] = {"sweeping",   "dftn",      "bc-dist", "bc-imm",
                                           "brute-dist", "brute-imm", "mintime", "mintime-exact"};

}  // namespace

extern "C" {

const char* tc_version(void) { return "1.0.0"; }

const char* tc_last_error(void) { return last_error.c_str(); }

void tc_string_free(char* s) { std::free(s); }

const char* tc_algorithm_name(tc_algorithm algo) {
  const auto i = static_cast<size_t>(algo);
  return i < std::size(kAlgorithmNames) ? kAlgorithmNames[i] : "unknown";
}

tc_status tc_algorithm_from_name(const char* name, tc_algorithm* out) {
  if (name == nullptr || out == nullptr) return null_argument("name and out");
  for (size_t i = 0; i < std::size(kAlgorithmNames); ++i) {
    if (std::strcmp(name, kAlgorithmNames[i]) == 0) {
      *out = static_cast<tc_algorithm>(i);
      return TC_OK;
    }
  }
  return fail(TC_ERR_INVALID_ARGUMENT, std::string("unknown algorithm '") + name + "'");
}

tc_status tc_tree_parse(const char* text, tc_tree** out) {
  if (text == nullptr || out == nullptr) return null_argument("text and out");
  return guarded_parse([&] {
    *out = new tc_tree{treecover::parse_tree(std::string_view(text))};
    return TC_OK;
  });
}

tc_status tc_tree_load(const char* path, tc_tree** out) {
  if (path == nullptr || out == nullptr) return null_argument("path and out");
  return guarded_parse([&] {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
      return fail(TC_ERR_IO, std::string("cannot read tree file: ") + path);
    }
    *out = new tc_tree{treecover::load_tree(path)};
    return TC_OK;
  });
}

tc_status tc_tree_random(int32_t n, uint64_t seed, tc_tree** out) {
  if (out == nullptr) return null_argument("out");
  if (n < 1) return fail(TC_ERR_INVALID_ARGUMENT, "n must be at least 1");
  return guarded([&] {
    *out = new tc_tree{treecover::random_tree(n, seed)};
    return TC_OK;
  });
}

void tc_tree_free(tc_tree* tree) { delete tree; }

tc_status tc_tree_serialize(const tc_tree* tree, char** out) {
  if (tree == nullptr || out == nullptr) return null_argument("tree and out");
  return guarded([&] {
    *out = dup_string(treecover::serialize_tree(tree->tree));
    return TC_OK;
  });
}

int32_t tc_tree_node_count(const tc_tree* tree) {
  return tree != nullptr ? tree->tree.node_count() : 0;
}

int32_t tc_tree_leaf_count(const tc_tree* tree) {
  return tree != nullptr ? static_cast<int32_t>(tree->tree.leaves().size()) : 0;
}

int64_t tc_tree_height(const tc_tree* tree) { return tree != nullptr ? tree->tree.height() : 0; }

tc_status tc_tree_distance(const tc_tree* tree, int32_t u, int32_t v, int64_t* out) {
  if (tree == nullptr || out == nullptr) return null_argument("tree and out");
  return guarded([&] {
    *out = treecover::node_distance(tree->tree, u, v);
    return TC_OK;
  });
}

tc_status tc_tree_leaves(const tc_tree* tree, int32_t* leaves, size_t capacity, size_t* count) {
  if (tree == nullptr || count == nullptr) return null_argument("tree and count");
  if (leaves == nullptr && capacity > 0) return null_argument("leaves");
  const auto all = tree->tree.leaves();
  *count = all.size();
  for (size_t i = 0; i < all.size() && i < capacity; ++i) leaves[i] = all[i];
  return TC_OK;
}

tc_status tc_validate_instance(const tc_tree* tree, int64_t p, int32_t k) {
  if (tree == nullptr) return null_argument("tree");
  if (auto violation = treecover::validate_instance(tree->tree, {p, k})) {
    return fail(TC_ERR_INFEASIBLE, "infeasible instance: " + *violation);
  }
  return TC_OK;
}

tc_status tc_solve(const tc_tree* tree, tc_algorithm algo, int64_t p,
                   const tc_solve_options* options, tc_solution** out) {
  if (tree == nullptr || out == nullptr) return null_argument("tree and out");
  tc_solve_options opts{1, 0, 0};
  if (options != nullptr) opts = *options;
  return guarded([&] {
    namespace tc = treecover;
    const tc::RootedTree& t = tree->tree;
    auto result = std::make_unique<tc_solution>();
    const auto start = std::chrono::steady_clock::now();
    const tc::SearchOptions search{opts.node_budget, 0};
    switch (algo) {
      case TC_ALGO_SWEEPING:
        result->solution = tc::sweeping_leaves(t, p);
        break;
      case TC_ALGO_DFTN:
        result->solution = tc::dftn(t, p);
        break;
      case TC_ALGO_BC_DIST:
      case TC_ALGO_BC_IMM: {
        tc::SearchResult r = algo == TC_ALGO_BC_DIST ? tc::bc_min_distance(t, p, search)
                                                     : tc::bc_min_immersions(t, p, search);
        result->solution = std::move(r.solution);
        result->nodes_explored = r.nodes_explored;
        result->proven_optimal = r.proven_optimal;
        break;
      }
      case TC_ALGO_BRUTE_DIST:
        result->solution = tc::brute_force_min_distance(
            t, p, opts.leaf_cap != 0 ? opts.leaf_cap : tc::kBruteForceLeafCap);
        break;
      case TC_ALGO_BRUTE_IMM:
        result->solution = tc::brute_force_min_immersions(
            t, p, opts.leaf_cap != 0 ? opts.leaf_cap : tc::kBruteForceLeafCap);
        break;
      case TC_ALGO_MINTIME:
        result->solution = tc::min_time_heuristic(t, p, opts.k);
        break;
      case TC_ALGO_MINTIME_EXACT:
        result->solution = tc::brute_force_min_time(
            t, p, opts.k, opts.leaf_cap != 0 ? opts.leaf_cap : tc::kMinTimeLeafCap);
        break;
      default:
        return fail(TC_ERR_INVALID_ARGUMENT, "unknown algorithm");
    }
    result->runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    *out = result.release();
    return TC_OK;
  });
}

void tc_solution_free(tc_solution* solution) { delete solution; }

int64_t tc_solution_total(const tc_solution* solution) {
  return solution != nullptr ? solution->solution.total_distance : 0;
}

int64_t tc_solution_makespan(const tc_solution* solution) {
  if (solution == nullptr) return 0;
  return solution->solution.makespan.value_or(solution->solution.total_distance);
}

size_t tc_solution_immersion_count(const tc_solution* solution) {
  return solution != nullptr ? solution->solution.immersion_count() : 0;
}

int64_t tc_solution_immersion_cost(const tc_solution* solution, size_t index) {
  if (solution == nullptr || index >= solution->solution.immersions.size()) return -1;
  return solution->solution.immersions[index].cost();
}

int tc_solution_proven_optimal(const tc_solution* solution) {
  return solution != nullptr && solution->proven_optimal ? 1 : 0;
}

uint64_t tc_solution_nodes_explored(const tc_solution* solution) {
  return solution != nullptr ? solution->nodes_explored : 0;
}

double tc_solution_runtime_ms(const tc_solution* solution) {
  return solution != nullptr ? solution->runtime_ms : 0.0;
}

tc_status tc_solution_format(const tc_solution* solution, int64_t p, int32_t k, char** out) {
  if (solution == nullptr || out == nullptr) return null_argument("solution and out");
  return guarded([&] {
    std::optional<treecover::InstanceParams> params;
    if (p > 0) params = treecover::InstanceParams{p, k > 0 ? k : 1};
    *out = dup_string(treecover::format_solution(solution->solution, params));
    return TC_OK;
  });
}

tc_status tc_verify_text(const tc_tree* tree, const char* solution_text, int64_t p, int32_t k,
                         char** report) {
  if (tree == nullptr || solution_text == nullptr) return null_argument("tree and solution_text");
  if (report != nullptr) *report = nullptr;
  return guarded([&] {
    treecover::ParsedSolution parsed;
    try {
      parsed = treecover::parse_solution(solution_text);
    } catch (const std::invalid_argument& e) {
      return fail(TC_ERR_PARSE, std::string("solution: ") + e.what());
    }
    treecover::InstanceParams params{2 * tree->tree.height(), 1};
    if (parsed.p) params.p = *parsed.p;
    if (parsed.k) params.k = *parsed.k;
    if (p > 0) params.p = p;
    if (k > 0) params.k = k;
    const auto violations = treecover::verify_parsed_solution(tree->tree, params, parsed);
    std::string text;
    for (const auto& v : violations) text += v + "\n";
    if (report != nullptr) *report = dup_string(text);
    if (violations.empty()) return TC_OK;
    return fail(TC_ERR_VIOLATION, violations.front());
  });
}

tc_status tc_schedule(const int64_t* costs, size_t count, int32_t k, int64_t* makespan,
                      int32_t* assignment) {
  if ((costs == nullptr && count > 0) || makespan == nullptr) {
    return null_argument("costs and makespan");
  }
  return guarded([&] {
    const auto schedule =
        treecover::dp_makespan_partition(std::span<const int64_t>(costs, count), k);
    *makespan = schedule.makespan;
    if (assignment != nullptr) {
      for (size_t j = 0; j < schedule.blocks.size(); ++j) {
        for (size_t i : schedule.blocks[j]) assignment[i] = static_cast<int32_t>(j);
      }
    }
    return TC_OK;
  });
}

tc_status tc_bench_run(const tc_bench_config* config) {
  if (config == nullptr || config->out_dir == nullptr) return null_argument("config and out_dir");
  if (config->sizes == nullptr && config->size_count > 0) return null_argument("sizes");
  return guarded([&] {
    treecover::BenchConfig c;
    c.sizes.assign(config->sizes, config->sizes + config->size_count);
    c.trees_per_size = config->trees_per_size;
    c.policies.clear();
    if (config->policy_mask & 1u) c.policies.push_back({0});
    if (config->policy_mask & 2u) c.policies.push_back({1});
    if (c.policies.empty()) return fail(TC_ERR_INVALID_ARGUMENT, "no autonomy policy selected");
    c.k = config->k;
    c.seed = config->seed;
    c.exact_max_n = config->exact_max_n;
    c.exact_node_budget = config->exact_node_budget;
    c.exact_time_limit_ms = config->exact_time_limit_ms;
    c.threads = config->threads;
    std::ostream* log = config->verbose ? &std::cerr : nullptr;
    const auto result = treecover::run_benchmark(c, log);
    treecover::write_bench_outputs(result, c, config->out_dir, &std::cerr);
    return TC_OK;
  });
}

}  // extern "C"
