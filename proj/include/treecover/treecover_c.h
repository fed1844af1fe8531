/* Copyright 2026 The treecover Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of the treecover shared library.
 *
 * Objects are opaque handles created by the library and released with the
 * matching *_free function. Every fallible call returns a tc_status; on
 * failure tc_last_error() describes the problem for the calling thread until
 * the next failing call on that thread. Strings handed out through char**
 * parameters are owned by the caller and released with tc_string_free.
 */
#ifndef TREECOVER_TREECOVER_C_H_
#define TREECOVER_TREECOVER_C_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(TREECOVER_BUILDING_LIBRARY)
#define TC_API __declspec(dllexport)
#else
#define TC_API __declspec(dllimport)
#endif
#else
#define TC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tc_status {
  TC_OK = 0,
  TC_ERR_INVALID_ARGUMENT = 1,
  TC_ERR_PARSE = 2,
  TC_ERR_INFEASIBLE = 3,
  TC_ERR_CAP_EXCEEDED = 4,
  TC_ERR_IO = 5,
  /* tc_verify found violations; the report lists them. */
  TC_ERR_VIOLATION = 6,
  TC_ERR_INTERNAL = 7
} tc_status;

typedef enum tc_algorithm {
  TC_ALGO_SWEEPING = 0,
  TC_ALGO_DFTN = 1,
  TC_ALGO_BC_DIST = 2,
  TC_ALGO_BC_IMM = 3,
  TC_ALGO_BRUTE_DIST = 4,
  TC_ALGO_BRUTE_IMM = 5,
  /* DFTN immersions scheduled optimally over k agents. */
  TC_ALGO_MINTIME = 6,
  /* Exhaustive Min-Time oracle, small trees only. */
  TC_ALGO_MINTIME_EXACT = 7
} tc_algorithm;

typedef struct tc_tree tc_tree;
typedef struct tc_solution tc_solution;

typedef struct tc_solve_options {
  /* Agents; only used by the Min-Time algorithms. */
  int32_t k;
  /* Search-node limit for the branch-and-cut solvers, 0 for none. */
  uint64_t node_budget;
  /* Leaf cap of the exhaustive oracles, 0 for the default. */
  uint32_t leaf_cap;
} tc_solve_options;

typedef struct tc_bench_config {
  const int32_t* sizes;
  size_t size_count;
  int32_t trees_per_size;
  /* Bit 0: p = 2h, bit 1: p = 2h+2. */
  uint32_t policy_mask;
  int32_t k;
  uint64_t seed;
  int32_t exact_max_n;
  uint64_t exact_node_budget;
  double exact_time_limit_ms;
  uint32_t threads;
  /* Directory receiving the CSV and SVG outputs. */
  const char* out_dir;
  /* Non-zero to echo per-tree progress to stderr. */
  int verbose;
} tc_bench_config;

TC_API const char* tc_version(void);
TC_API const char* tc_last_error(void);
TC_API void tc_string_free(char* s);

TC_API const char* tc_algorithm_name(tc_algorithm algo);
/* Accepts the CLI spellings: sweeping, dftn, bc-dist, bc-imm, brute-dist,
 * brute-imm, mintime, mintime-exact. */
TC_API tc_status tc_algorithm_from_name(const char* name, tc_algorithm* out);

TC_API tc_status tc_tree_parse(const char* text, tc_tree** out);
TC_API tc_status tc_tree_load(const char* path, tc_tree** out);
TC_API tc_status tc_tree_random(int32_t n, uint64_t seed, tc_tree** out);
TC_API void tc_tree_free(tc_tree* tree);
TC_API tc_status tc_tree_serialize(const tc_tree* tree, char** out);
TC_API int32_t tc_tree_node_count(const tc_tree* tree);
TC_API int32_t tc_tree_leaf_count(const tc_tree* tree);
TC_API int64_t tc_tree_height(const tc_tree* tree);
TC_API tc_status tc_tree_distance(const tc_tree* tree, int32_t u, int32_t v, int64_t* out);
/* Writes up to `capacity` leaf ids in depth-first order; *count receives the
 * total number of leaves. */
TC_API tc_status tc_tree_leaves(const tc_tree* tree, int32_t* leaves, size_t capacity,
                                size_t* count);
/* TC_OK when p >= 2h and k >= 1, TC_ERR_INFEASIBLE otherwise. */
TC_API tc_status tc_validate_instance(const tc_tree* tree, int64_t p, int32_t k);

/* `options` may be NULL (k = 1, no budget, default caps). */
TC_API tc_status tc_solve(const tc_tree* tree, tc_algorithm algo, int64_t p,
                          const tc_solve_options* options, tc_solution** out);
TC_API void tc_solution_free(tc_solution* solution);
TC_API int64_t tc_solution_total(const tc_solution* solution);
/* Makespan of the assignment, or the total for single-agent solutions. */
TC_API int64_t tc_solution_makespan(const tc_solution* solution);
TC_API size_t tc_solution_immersion_count(const tc_solution* solution);
TC_API int64_t tc_solution_immersion_cost(const tc_solution* solution, size_t index);
/* Non-zero unless a node budget cut the search short. */
TC_API int tc_solution_proven_optimal(const tc_solution* solution);
TC_API uint64_t tc_solution_nodes_explored(const tc_solution* solution);
TC_API double tc_solution_runtime_ms(const tc_solution* solution);
/* Solution text, preceded by a `# p= k=` line when p > 0. */
TC_API tc_status tc_solution_format(const tc_solution* solution, int64_t p, int32_t k,
                                    char** out);

/* Verifies solution text against a tree. p <= 0 or k <= 0 take the values
 * from the solution's `# p= k=` line, falling back to p = 2h and k = 1.
 * Returns TC_ERR_VIOLATION and a newline-separated report when invalid;
 * `report` may be NULL. */
TC_API tc_status tc_verify_text(const tc_tree* tree, const char* solution_text, int64_t p,
                                int32_t k, char** report);

/* Optimal makespan of `costs` over k agents; `assignment`, if not NULL,
 * receives the 0-based agent of each job. */
TC_API tc_status tc_schedule(const int64_t* costs, size_t count, int32_t k, int64_t* makespan,
                             int32_t* assignment);

TC_API tc_status tc_bench_run(const tc_bench_config* config);

#ifdef __cplusplus
}
#endif

#endif /* TREECOVER_TREECOVER_C_H_ */
