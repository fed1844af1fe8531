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

#include "treecover/bench.h"

#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace treecover {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  return cells;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::string line;
  std::istringstream in(text);
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

BenchConfig small_config() {
  BenchConfig c;
  c.sizes = {6, 10, 14};
  c.trees_per_size = 3;
  c.seed = 17;
  c.threads = 2;
  return c;
}

TEST(PPolicy, Names) {
  EXPECT_EQ(PPolicy{0}.name(), "2h");
  EXPECT_EQ(PPolicy{1}.name(), "2h+2");
  EXPECT_EQ(PPolicy::from_name("2h"), PPolicy{0});
  EXPECT_EQ(PPolicy::from_name("2h+2"), PPolicy{1});
  EXPECT_EQ(PPolicy::from_name("2h+4"), PPolicy{2});
  EXPECT_FALSE(PPolicy::from_name("3h").has_value());
  const RootedTree t = parse_tree("4 1\n1 2 1\n2 3 1\n2 4 1");
  EXPECT_EQ(PPolicy{0}.autonomy_for(t), 4);
  EXPECT_EQ(PPolicy{1}.autonomy_for(t), 6);
}

TEST(Bench, TwoNodeTree) {
  BenchConfig c;
  c.sizes = {2};
  c.trees_per_size = 1;
  c.threads = 1;
  const BenchResult r = run_benchmark(c);
  ASSERT_EQ(r.records.size(), 1u);
  const BenchRecord& rec = r.records[0];
  EXPECT_EQ(rec.tree_id, "n2-t000");
  EXPECT_EQ(rec.leaf_count, 1u);
  EXPECT_EQ(rec.height, 1);
  ASSERT_EQ(rec.blocks.size(), 2u);
  EXPECT_EQ(rec.blocks[0].p, 2);
  EXPECT_EQ(rec.blocks[1].p, 4);
  for (const PolicyBlock& b : rec.blocks) {
    for (const AlgoOutcome* a : {&b.bc_min_distance, &b.bc_min_immersions, &b.dftn, &b.sweeping}) {
      EXPECT_TRUE(a->ran);
      EXPECT_EQ(a->distance, 2);
      EXPECT_EQ(a->immersions, 1u);
    }
    EXPECT_EQ(b.min_time.distance, 2);
  }
}

TEST(Bench, ResultsSchema) {
  const BenchConfig c = small_config();
  const BenchResult r = run_benchmark(c);
  const std::string csv = records_csv(r.records, c.policies);
  const auto rows = lines(csv);
  ASSERT_EQ(rows.size(), 1u + 9u);
  const auto header = split(rows[0]);
  std::vector<std::string> expected{"tree_id", "n", "l", "h"};
  for (const PPolicy& policy : c.policies) {
    for (const char* col : {"p", "bcmd_dist", "bcmd_im", "bcmi_dist", "bcmi_im", "dftn_dist",
                            "dftn_im", "swpl_dist", "swpl_im", "mT", "exact_complete", "bcmd_ms",
                            "bcmi_ms", "dftn_ms", "swpl_ms", "mT_ms"}) {
      expected.push_back(policy.name() + "_" + col);
    }
  }
  EXPECT_EQ(header, expected);
  for (size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(split(rows[i]).size(), header.size()) << rows[i];
  }
  EXPECT_EQ(split(rows[1])[0], "n6-t000");
}

TEST(Bench, RecordsAreConsistent) {
  const BenchResult r = run_benchmark(small_config());
  for (const BenchRecord& rec : r.records) {
    const RootedTree t = random_tree(rec.n, rec.tree_seed);
    EXPECT_EQ(rec.leaf_count, t.leaves().size());
    EXPECT_EQ(rec.height, t.height());
    for (const PolicyBlock& b : rec.blocks) {
      EXPECT_EQ(b.p, b.policy.autonomy_for(t));
      EXPECT_TRUE(b.bc_min_distance.complete);
      EXPECT_LE(b.bc_min_distance.distance, b.dftn.distance);
      EXPECT_LE(b.bc_min_distance.distance, b.sweeping.distance);
      EXPECT_LE(b.bc_min_immersions.immersions, b.dftn.immersions);
      EXPECT_LE(b.bc_min_immersions.immersions, b.sweeping.immersions);
      EXPECT_LE(b.min_time.distance, b.dftn.distance);
    }
  }
}

TEST(Bench, DeterministicApartFromRuntime) {
  BenchConfig a = small_config();
  BenchConfig b = small_config();
  b.threads = 1;
  const BenchResult ra = run_benchmark(a);
  const BenchResult rb = run_benchmark(b);
  EXPECT_EQ(strip_runtime_columns(records_csv(ra.records, a.policies)),
            strip_runtime_columns(records_csv(rb.records, b.policies)));
  EXPECT_EQ(ratios_csv(ra.summaries), ratios_csv(rb.summaries));
  EXPECT_EQ(strip_runtime_columns(runtime_csv(ra.records, a.policies)),
            strip_runtime_columns(runtime_csv(rb.records, b.policies)));

  BenchConfig other = small_config();
  other.seed = 18;
  const BenchResult rc = run_benchmark(other);
  EXPECT_NE(strip_runtime_columns(records_csv(ra.records, a.policies)),
            strip_runtime_columns(records_csv(rc.records, other.policies)));
}

TEST(Bench, StripRuntimeColumns) {
  EXPECT_EQ(strip_runtime_columns("a,b_ms,c\n1,2,3\n"), "a,c\n1,3\n");
  EXPECT_EQ(strip_runtime_columns("x_ms\n5\n"), "\n\n");
}

TEST(Bench, RatioSummaryMatchesRecords) {
  const BenchConfig c = small_config();
  const BenchResult r = run_benchmark(c);
  for (const RatioSummary& s : r.summaries) {
    double lo = 1e9, hi = 0, sum = 0;
    size_t count = 0;
    for (const BenchRecord& rec : r.records) {
      if (rec.n != s.n) continue;
      const size_t pi = s.policy == "2h" ? 0 : 1;
      const PolicyBlock& b = rec.blocks[pi];
      const AlgoOutcome& h = s.algorithm == "dftn" ? b.dftn : b.sweeping;
      const double ratio =
          s.metric == "distance"
              ? static_cast<double>(h.distance) / static_cast<double>(b.bc_min_distance.distance)
              : static_cast<double>(h.immersions) /
                    static_cast<double>(b.bc_min_immersions.immersions);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      sum += ratio;
      ++count;
    }
    EXPECT_EQ(s.samples, count);
    EXPECT_EQ(s.excluded, 0u);
    EXPECT_DOUBLE_EQ(s.min, lo);
    EXPECT_DOUBLE_EQ(s.max, hi);
    EXPECT_NEAR(s.mean, sum / static_cast<double>(count), 1e-12);
    EXPECT_GE(s.min, 1.0);
  }
  EXPECT_EQ(r.summaries.size(), 3u * 2u * 2u * 2u);
}

TEST(Bench, SvgIntervalsMatchRatiosCsv) {
  const BenchConfig c = small_config();
  const BenchResult r = run_benchmark(c);
  std::set<std::string> from_csv;
  const auto rows = lines(ratios_csv(r.summaries));
  for (size_t i = 1; i < rows.size(); ++i) {
    const auto cells = split(rows[i]);
    if (cells[3] != "distance") continue;
    from_csv.insert(cells[0] + "," + cells[1] + "," + cells[2] + "," + cells[6] + "," +
                    cells[7] + "," + cells[8]);
  }
  const std::string svg = ratio_svg(r.summaries, "distance");
  const std::regex group(
      "data-n=\"(\\d+)\" data-policy=\"([^\"]+)\" data-algorithm=\"([^\"]+)\" "
      "data-min=\"([^\"]+)\" data-mean=\"([^\"]+)\" data-max=\"([^\"]+)\"");
  std::set<std::string> from_svg;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), group); it != std::sregex_iterator();
       ++it) {
    const auto& m = *it;
    from_svg.insert(m[1].str() + "," + m[2].str() + "," + m[3].str() + "," + m[4].str() + "," +
                    m[5].str() + "," + m[6].str());
  }
  EXPECT_FALSE(from_svg.empty());
  EXPECT_EQ(from_svg, from_csv);
}

TEST(Bench, EmptySeriesIsLogged) {
  BenchConfig c = small_config();
  c.run_exact = false;
  const BenchResult r = run_benchmark(c);
  EXPECT_TRUE(r.summaries.empty());
  std::ostringstream log;
  const std::string svg = runtime_svg(r.records, c.policies, &log);
  EXPECT_NE(log.str().find("bc-dist"), std::string::npos);
  EXPECT_NE(log.str().find("series omitted"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Bench, WritesOutputFiles) {
  const BenchConfig c = small_config();
  const BenchResult r = run_benchmark(c);
  const auto dir = std::filesystem::temp_directory_path() / "treecover_bench_test";
  std::filesystem::remove_all(dir);
  const auto files = write_bench_outputs(r, c, dir);
  std::set<std::string> names;
  for (const auto& f : files) {
    EXPECT_TRUE(std::filesystem::exists(f)) << f;
    names.insert(f.filename().string());
  }
  for (const char* expected : {"results.csv", "ratios.csv", "runtime.csv", "ratio_distance.svg",
                               "ratio_immersions.svg", "runtime.svg"}) {
    EXPECT_TRUE(names.count(expected)) << expected;
  }
  std::ifstream in(dir / "results.csv");
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), records_csv(r.records, c.policies));
  std::filesystem::remove_all(dir);
}

TEST(Bench, TreeSeedsDiffer) {
  std::set<uint64_t> seeds;
  for (int32_t n = 20; n <= 45; n += 5) {
    for (int32_t t = 0; t < 50; ++t) seeds.insert(tree_seed(1, n, t));
  }
  EXPECT_EQ(seeds.size(), 6u * 50u);
  EXPECT_NE(tree_seed(1, 20, 0), tree_seed(2, 20, 0));
}

}  // namespace
}  // namespace treecover
