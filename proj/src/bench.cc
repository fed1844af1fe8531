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

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "treecover/exact.h"
#include "treecover/heuristics.h"
#include "treecover/immersion.h"
#include "treecover/scheduling.h"

namespace treecover {

std::string PPolicy::name() const {
  return slack == 0 ? "2h" : "2h+" + std::to_string(2 * slack);
}

std::optional<PPolicy> PPolicy::from_name(const std::string& name) {
  if (name == "2h") return PPolicy{0};
  if (name.rfind("2h+", 0) != 0) return std::nullopt;
  try {
    size_t used = 0;
    const int extra = std::stoi(name.substr(3), &used);
    if (used != name.size() - 3 || extra <= 0 || extra % 2 != 0) return std::nullopt;
    return PPolicy{extra / 2};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

uint64_t tree_seed(uint64_t run_seed, int32_t n, int32_t t) {
  std::seed_seq seq{static_cast<uint32_t>(run_seed), static_cast<uint32_t>(run_seed >> 32),
                    static_cast<uint32_t>(n), static_cast<uint32_t>(t)};
  std::array<uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<uint64_t>(out[0]) << 32) | out[1];
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_valid(const RootedTree& tree, const InstanceParams& params,
                 const CoverSolution& solution, const std::string& what) {
  const auto violations = verify_solution(tree, params, solution);
  if (!violations.empty()) {
    throw std::logic_error(what + " produced an invalid cover: " + violations.front());
  }
}

template <typename Solve>
AlgoOutcome timed(Solve&& solve) {
  AlgoOutcome out;
  const auto start = Clock::now();
  solve(out);
  out.runtime_ms = ms_since(start);
  out.ran = true;
  return out;
}

}  // namespace

BenchRecord bench_tree(const RootedTree& tree, const std::string& tree_id,
                       const BenchConfig& config) {
  BenchRecord record;
  record.tree_id = tree_id;
  record.n = tree.node_count();
  record.leaf_count = tree.leaves().size();
  record.height = tree.height();
  const bool exact = config.run_exact && tree.node_count() <= config.exact_max_n;
  const SearchOptions options{config.exact_node_budget, config.exact_time_limit_ms};

  for (const PPolicy& policy : config.policies) {
    PolicyBlock block;
    block.policy = policy;
    block.p = policy.autonomy_for(tree);
    const InstanceParams single{block.p, 1};
    const std::string where = tree_id + " p=" + std::to_string(block.p);

    const auto heuristic = [&](auto&& fn, const char* name) {
      return timed([&](AlgoOutcome& out) {
        const CoverSolution s = fn(tree, block.p);
        check_valid(tree, single, s, std::string(name) + " on " + where);
        out.complete = true;
        out.distance = s.total_distance;
        out.immersions = s.immersion_count();
      });
    };
    block.sweeping = heuristic(sweeping_leaves, "sweeping");
    block.dftn = heuristic(dftn, "dftn");

    if (exact) {
      const auto search = [&](auto&& fn, const char* name) {
        return timed([&](AlgoOutcome& out) {
          const SearchResult r = fn(tree, block.p, options);
          check_valid(tree, single, r.solution, std::string(name) + " on " + where);
          out.complete = r.proven_optimal;
          out.distance = r.solution.total_distance;
          out.immersions = r.solution.immersion_count();
        });
      };
      block.bc_min_distance = search(bc_min_distance, "bc-dist");
      block.bc_min_immersions = search(bc_min_immersions, "bc-imm");
    }

    block.min_time = timed([&](AlgoOutcome& out) {
      const CoverSolution s = min_time_heuristic(tree, block.p, config.k);
      check_valid(tree, {block.p, config.k}, s, "mintime on " + where);
      out.complete = true;
      out.distance = s.makespan.value_or(s.total_distance);
      out.immersions = s.immersion_count();
    });
    record.blocks.push_back(block);
  }
  return record;
}

BenchResult run_benchmark(const BenchConfig& config, std::ostream* log) {
  if (config.trees_per_size < 0) throw std::invalid_argument("trees per size must be >= 0");
  if (config.k < 1) throw std::invalid_argument("k must be at least 1");
  for (int32_t n : config.sizes) {
    if (n < 1) throw std::invalid_argument("tree sizes must be at least 1");
  }

  struct Job {
    int32_t n;
    int32_t t;
  };
  std::vector<Job> jobs;
  for (int32_t n : config.sizes) {
    for (int32_t t = 0; t < config.trees_per_size; ++t) jobs.push_back({n, t});
  }

  BenchResult result;
  result.records.resize(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<size_t> next{0};
  std::mutex log_mutex;

  const auto worker = [&] {
    for (size_t i = next++; i < jobs.size(); i = next++) {
      const Job job = jobs[i];
      try {
        const uint64_t seed = tree_seed(config.seed, job.n, job.t);
        char id[32];
        std::snprintf(id, sizeof id, "n%d-t%03d", job.n, job.t);
        const RootedTree tree = random_tree(job.n, seed);
        result.records[i] = bench_tree(tree, id, config);
        result.records[i].tree_seed = seed;
        if (log) {
          std::lock_guard lock(log_mutex);
          *log << "bench: " << id << " l=" << tree.leaves().size() << " h=" << tree.height()
               << " done\n";
        }
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  unsigned threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  result.summaries = summarize_ratios(result.records, config.policies);
  return result;
}

std::vector<RatioSummary> summarize_ratios(std::span<const BenchRecord> records,
                                           std::span<const PPolicy> policies) {
  std::vector<RatioSummary> out;
  std::vector<int32_t> sizes;
  for (const auto& r : records) sizes.push_back(r.n);
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  const char* algorithms[] = {"dftn", "sweeping"};
  const char* metrics[] = {"distance", "immersions"};
  for (int32_t n : sizes) {
    for (size_t pi = 0; pi < policies.size(); ++pi) {
      for (const char* metric : metrics) {
        for (const char* algorithm : algorithms) {
          RatioSummary s;
          s.n = n;
          s.policy = policies[pi].name();
          s.algorithm = algorithm;
          s.metric = metric;
          double sum = 0;
          for (const auto& r : records) {
            if (r.n != n || pi >= r.blocks.size()) continue;
            const PolicyBlock& b = r.blocks[pi];
            const bool by_distance = s.metric == "distance";
            const AlgoOutcome& exact = by_distance ? b.bc_min_distance : b.bc_min_immersions;
            if (!exact.ran || !exact.complete) {
              ++s.excluded;
              continue;
            }
            const AlgoOutcome& h = s.algorithm == "dftn" ? b.dftn : b.sweeping;
            const double ratio =
                by_distance ? static_cast<double>(h.distance) / static_cast<double>(exact.distance)
                            : static_cast<double>(h.immersions) /
                                  static_cast<double>(exact.immersions);
            if (s.samples == 0) {
              s.min = s.max = ratio;
            } else {
              s.min = std::min(s.min, ratio);
              s.max = std::max(s.max, ratio);
            }
            sum += ratio;
            ++s.samples;
          }
          if (s.samples == 0) continue;
          s.mean = sum / static_cast<double>(s.samples);
          out.push_back(s);
        }
      }
    }
  }
  return out;
}

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string ms3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

void dist_im(std::ostream& out, const AlgoOutcome& a) {
  if (a.ran) {
    out << ',' << a.distance << ',' << a.immersions;
  } else {
    out << ",,";
  }
}

void runtime_cell(std::ostream& out, const AlgoOutcome& a) {
  out << ',';
  if (a.ran) out << ms3(a.runtime_ms);
}

}  // namespace

std::string records_csv(std::span<const BenchRecord> records, std::span<const PPolicy> policies) {
  std::ostringstream out;
  out << "tree_id,n,l,h";
  for (const PPolicy& policy : policies) {
    const std::string pre = policy.name() + "_";
    for (const char* col : {"p", "bcmd_dist", "bcmd_im", "bcmi_dist", "bcmi_im", "dftn_dist",
                            "dftn_im", "swpl_dist", "swpl_im", "mT", "exact_complete"}) {
      out << ',' << pre << col;
    }
    for (const char* col : {"bcmd_ms", "bcmi_ms", "dftn_ms", "swpl_ms", "mT_ms"}) {
      out << ',' << pre << col;
    }
  }
  out << '\n';
  for (const BenchRecord& r : records) {
    out << r.tree_id << ',' << r.n << ',' << r.leaf_count << ',' << r.height;
    for (const PolicyBlock& b : r.blocks) {
      out << ',' << b.p;
      dist_im(out, b.bc_min_distance);
      dist_im(out, b.bc_min_immersions);
      dist_im(out, b.dftn);
      dist_im(out, b.sweeping);
      out << ',' << b.min_time.distance;
      const bool complete = b.bc_min_distance.ran && b.bc_min_distance.complete &&
                            b.bc_min_immersions.ran && b.bc_min_immersions.complete;
      out << ',' << (complete ? 1 : 0);
      runtime_cell(out, b.bc_min_distance);
      runtime_cell(out, b.bc_min_immersions);
      runtime_cell(out, b.dftn);
      runtime_cell(out, b.sweeping);
      runtime_cell(out, b.min_time);
    }
    out << '\n';
  }
  return out.str();
}

std::string ratios_csv(std::span<const RatioSummary> summaries) {
  std::ostringstream out;
  out << "n,policy,algorithm,metric,samples,excluded,min,mean,max\n";
  for (const RatioSummary& s : summaries) {
    out << s.n << ',' << s.policy << ',' << s.algorithm << ',' << s.metric << ',' << s.samples
        << ',' << s.excluded << ',' << fixed6(s.min) << ',' << fixed6(s.mean) << ','
        << fixed6(s.max) << '\n';
  }
  return out.str();
}

namespace {

struct RuntimeSeries {
  std::string algorithm;
  std::string policy;
  // n -> (sum, count)
  std::map<int32_t, std::pair<double, size_t>> points;
};

std::vector<RuntimeSeries> runtime_series(std::span<const BenchRecord> records,
                                          std::span<const PPolicy> policies) {
  std::vector<RuntimeSeries> series;
  const std::pair<const char*, AlgoOutcome PolicyBlock::*> algos[] = {
      {"bc-dist", &PolicyBlock::bc_min_distance},
      {"bc-imm", &PolicyBlock::bc_min_immersions},
      {"dftn", &PolicyBlock::dftn},
      {"sweeping", &PolicyBlock::sweeping},
      {"mintime", &PolicyBlock::min_time}};
  for (size_t pi = 0; pi < policies.size(); ++pi) {
    for (const auto& [name, member] : algos) {
      RuntimeSeries s{name, policies[pi].name(), {}};
      for (const BenchRecord& r : records) {
        if (pi >= r.blocks.size()) continue;
        const AlgoOutcome& a = r.blocks[pi].*member;
        if (!a.ran) continue;
        auto& [sum, count] = s.points[r.n];
        sum += a.runtime_ms;
        ++count;
      }
      series.push_back(std::move(s));
    }
  }
  return series;
}

}  // namespace

std::string runtime_csv(std::span<const BenchRecord> records, std::span<const PPolicy> policies) {
  std::ostringstream out;
  out << "n,policy,algorithm,samples,mean_ms\n";
  for (const RuntimeSeries& s : runtime_series(records, policies)) {
    for (const auto& [n, acc] : s.points) {
      out << n << ',' << s.policy << ',' << s.algorithm << ',' << acc.second << ','
          << ms3(acc.first / static_cast<double>(acc.second)) << '\n';
    }
  }
  return out.str();
}

std::string strip_runtime_columns(const std::string& csv) {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string line;
  std::vector<bool> keep;
  bool header = true;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream row(line);
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    if (header) {
      for (const auto& c : cells) {
        keep.push_back(!(c.size() >= 3 && c.compare(c.size() - 3, 3, "_ms") == 0));
      }
      header = false;
    }
    bool first = true;
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i < keep.size() && !keep[i]) continue;
      if (!first) out << ',';
      out << cells[i];
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

constexpr double kWidth = 720;
constexpr double kHeight = 420;
constexpr double kLeft = 70;
constexpr double kRight = 170;
constexpr double kTop = 40;
constexpr double kBottom = 50;
const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                "#9467bd", "#8c564b", "#e377c2", "#17becf",
                                "#7f7f7f", "#bcbd22"};

struct Axes {
  double x_lo, x_hi, y_lo, y_hi;
  double x(double v) const {
    const double span = x_hi > x_lo ? x_hi - x_lo : 1;
    return kLeft + (v - x_lo) / span * (kWidth - kLeft - kRight);
  }
  double y(double v) const {
    const double span = y_hi > y_lo ? y_hi - y_lo : 1;
    return kHeight - kBottom - (v - y_lo) / span * (kHeight - kTop - kBottom);
  }
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

void svg_open(std::ostream& out, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
      << title << "</text>\n";
}

void svg_axes(std::ostream& out, const Axes& ax, const std::vector<int32_t>& xs,
              const std::vector<std::pair<double, std::string>>& yticks, const std::string& xlabel,
              const std::string& ylabel) {
  const double x0 = kLeft;
  const double x1 = kWidth - kRight;
  const double y0 = kHeight - kBottom;
  const double y1 = kTop;
  out << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1
      << "\" stroke=\"black\"/>\n";
  for (int32_t n : xs) {
    out << "<text x=\"" << num(ax.x(n)) << "\" y=\"" << y0 + 16
        << "\" text-anchor=\"middle\">" << n << "</text>\n";
  }
  for (const auto& [v, label] : yticks) {
    out << "<line x1=\"" << x0 - 4 << "\" y1=\"" << num(ax.y(v)) << "\" x2=\"" << x1
        << "\" y2=\"" << num(ax.y(v)) << "\" stroke=\"#e0e0e0\"/>\n";
    out << "<text x=\"" << x0 - 8 << "\" y=\"" << num(ax.y(v) + 4)
        << "\" text-anchor=\"end\">" << label << "</text>\n";
  }
  out << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\">" << xlabel << "</text>\n";
  out << "<text x=\"16\" y=\"" << (y0 + y1) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
      << (y0 + y1) / 2 << ")\">" << ylabel << "</text>\n";
}

void svg_legend(std::ostream& out, size_t index, const std::string& label, const char* color) {
  const double x = kWidth - kRight + 16;
  const double y = kTop + 10 + 18 * static_cast<double>(index);
  out << "<rect x=\"" << x << "\" y=\"" << y - 9 << "\" width=\"12\" height=\"12\" fill=\""
      << color << "\"/>\n";
  out << "<text x=\"" << x + 18 << "\" y=\"" << y + 1 << "\">" << label << "</text>\n";
}

}  // namespace

std::string ratio_svg(std::span<const RatioSummary> summaries, const std::string& metric) {
  std::vector<const RatioSummary*> rows;
  for (const auto& s : summaries) {
    if (s.metric == metric) rows.push_back(&s);
  }
  std::vector<int32_t> xs;
  std::vector<std::string> keys;
  double y_hi = 1.0;
  for (const RatioSummary* s : rows) {
    xs.push_back(s->n);
    const std::string key = s->algorithm + " (p=" + s->policy + ")";
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) keys.push_back(key);
    y_hi = std::max(y_hi, s->max);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  // Round the top up to the next 0.05 step, with at least one step of room.
  y_hi = std::ceil(y_hi * 20.0 + 1e-9) / 20.0;
  if (y_hi <= 1.0) y_hi = 1.05;
  Axes ax{xs.empty() ? 0.0 : xs.front() - 2.5, xs.empty() ? 1.0 : xs.back() + 2.5, 1.0, y_hi};

  std::ostringstream out;
  svg_open(out, "Approximation ratio (" + metric + ") vs optimum");
  std::vector<std::pair<double, std::string>> ticks;
  for (double v = 1.0; v <= y_hi + 1e-9; v += 0.05) ticks.emplace_back(v, num(v));
  svg_axes(out, ax, xs, ticks, "n (nodes)", "heuristic / optimal");

  const double spread = 3.0;
  for (size_t si = 0; si < keys.size(); ++si) {
    const char* color = kPalette[si % std::size(kPalette)];
    const double offset =
        keys.size() > 1 ? (static_cast<double>(si) / static_cast<double>(keys.size() - 1) - 0.5) *
                              spread
                        : 0.0;
    std::string polyline;
    for (const RatioSummary* s : rows) {
      if (s->algorithm + " (p=" + s->policy + ")" != keys[si]) continue;
      const double x = ax.x(s->n + offset);
      out << "<g class=\"interval\" data-n=\"" << s->n << "\" data-policy=\"" << s->policy
          << "\" data-algorithm=\"" << s->algorithm << "\" data-min=\"" << fixed6(s->min)
          << "\" data-mean=\"" << fixed6(s->mean) << "\" data-max=\"" << fixed6(s->max) << "\">"
          << "<line x1=\"" << num(x) << "\" y1=\"" << num(ax.y(s->min)) << "\" x2=\"" << num(x)
          << "\" y2=\"" << num(ax.y(s->max)) << "\" stroke=\"" << color
          << "\" stroke-width=\"2\"/>"
          << "<circle cx=\"" << num(x) << "\" cy=\"" << num(ax.y(s->mean))
          << "\" r=\"3\" fill=\"" << color << "\"/></g>\n";
      polyline += num(x) + "," + num(ax.y(s->mean)) + " ";
    }
    out << "<polyline points=\"" << polyline << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-dasharray=\"4 3\"/>\n";
    svg_legend(out, si, keys[si], color);
  }
  out << "</svg>\n";
  return out.str();
}

std::string runtime_svg(std::span<const BenchRecord> records, std::span<const PPolicy> policies,
                        std::ostream* log) {
  auto series = runtime_series(records, policies);
  std::vector<int32_t> xs;
  double lo = 1e300;
  double hi = -1e300;
  std::vector<const RuntimeSeries*> drawn;
  for (const RuntimeSeries& s : series) {
    if (s.points.empty()) {
      if (log) *log << "runtime plot: no samples for " << s.algorithm << " (p=" << s.policy
                    << "), series omitted\n";
      continue;
    }
    drawn.push_back(&s);
    for (const auto& [n, acc] : s.points) {
      xs.push_back(n);
      const double mean = std::max(acc.first / static_cast<double>(acc.second), 1e-4);
      lo = std::min(lo, std::log10(mean));
      hi = std::max(hi, std::log10(mean));
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (drawn.empty()) {
    lo = -1;
    hi = 1;
  }
  lo = std::floor(lo);
  hi = std::max(std::ceil(hi), lo + 1);
  Axes ax{xs.empty() ? 0.0 : xs.front() - 2.5, xs.empty() ? 1.0 : xs.back() + 2.5, lo, hi};

  std::ostringstream out;
  svg_open(out, "Mean running time vs n");
  std::vector<std::pair<double, std::string>> ticks;
  for (double e = lo; e <= hi + 1e-9; e += 1) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "1e%d", static_cast<int>(e));
    ticks.emplace_back(e, buf);
  }
  svg_axes(out, ax, xs, ticks, "n (nodes)", "mean runtime (ms, log scale)");
  for (size_t si = 0; si < drawn.size(); ++si) {
    const RuntimeSeries& s = *drawn[si];
    const char* color = kPalette[si % std::size(kPalette)];
    std::string polyline;
    for (const auto& [n, acc] : s.points) {
      const double mean = acc.first / static_cast<double>(acc.second);
      const double y = ax.y(std::log10(std::max(mean, 1e-4)));
      out << "<circle class=\"point\" data-n=\"" << n << "\" data-algorithm=\"" << s.algorithm
          << "\" data-policy=\"" << s.policy << "\" data-mean-ms=\"" << ms3(mean) << "\" cx=\""
          << num(ax.x(n)) << "\" cy=\"" << num(y) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
      polyline += num(ax.x(n)) + "," + num(y) + " ";
    }
    out << "<polyline points=\"" << polyline << "\" fill=\"none\" stroke=\"" << color << "\"/>\n";
    svg_legend(out, si, s.algorithm + " (p=" + s.policy + ")", color);
  }
  out << "</svg>\n";
  return out.str();
}

namespace {

std::filesystem::path write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("error writing " + path.string());
  return path;
}

}  // namespace

std::vector<std::filesystem::path> emit_plots(std::span<const RatioSummary> summaries,
                                              std::span<const BenchRecord> records,
                                              std::span<const PPolicy> policies,
                                              const std::filesystem::path& dir,
                                              std::ostream* log) {
  std::filesystem::create_directories(dir);
  if (summaries.empty() && log) {
    *log << "ratio plots: no completed exact runs, plots are empty\n";
  }
  return {write_file(dir / "ratios.csv", ratios_csv(summaries)),
          write_file(dir / "runtime.csv", runtime_csv(records, policies)),
          write_file(dir / "ratio_distance.svg", ratio_svg(summaries, "distance")),
          write_file(dir / "ratio_immersions.svg", ratio_svg(summaries, "immersions")),
          write_file(dir / "runtime.svg", runtime_svg(records, policies, log))};
}

std::vector<std::filesystem::path> write_bench_outputs(const BenchResult& result,
                                                       const BenchConfig& config,
                                                       const std::filesystem::path& dir,
                                                       std::ostream* log) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written{
      write_file(dir / "results.csv", records_csv(result.records, config.policies))};
  for (auto& p : emit_plots(result.summaries, result.records, config.policies, dir, log)) {
    written.push_back(std::move(p));
  }
  return written;
}

}  // namespace treecover
