#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cliquerich/census.hpp"
#include "cliquerich/clubs.hpp"
#include "cliquerich/graph.hpp"
#include "cliquerich/netgen.hpp"

namespace cliquerich {

/// Vertices ordered by descending score; ties broken by ascending index so
/// every ranking is reproducible.
template <typename T>
std::vector<int> rank_vertices(std::span<const T> scores) {
  std::vector<int> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&scores](int a, int b) { return scores[a] > scores[b]; });
  return order;
}

namespace detail {

inline void check_permutation(std::span<const int> p, std::size_t n) {
  if (p.size() != n) throw Error("rankings have different lengths");
  std::vector<bool> seen(n, false);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= n || seen[x])
      throw Error("ranking is not a permutation of 0.." + std::to_string(n - 1));
    seen[x] = true;
  }
}

// inversion count by merge sort
inline std::uint64_t count_inversions(std::vector<int>& a, std::vector<int>& buf,
                                      std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t inv = count_inversions(a, buf, lo, mid) + count_inversions(a, buf, mid, hi);
  std::size_t i = lo, j = mid, out = lo;
  while (i < mid && j < hi) {
    if (a[i] <= a[j])
      buf[out++] = a[i++];
    else {
      inv += mid - i;
      buf[out++] = a[j++];
    }
  }
  while (i < mid) buf[out++] = a[i++];
  while (j < hi) buf[out++] = a[j++];
  std::copy(buf.begin() + lo, buf.begin() + hi, a.begin() + lo);
  return inv;
}

} // namespace detail

/**
 * Minimum number of adjacent transpositions turning ranking `a` into `b`
 * (Kendall tau distance), counted as inversions in O(n log n).
 */
inline std::uint64_t swap_distance(std::span<const int> a, std::span<const int> b) {
  detail::check_permutation(a, a.size());
  detail::check_permutation(b, a.size());
  std::vector<int> position_in_b(a.size());
  for (std::size_t i = 0; i < b.size(); ++i) position_in_b[b[i]] = static_cast<int>(i);
  std::vector<int> seq(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) seq[i] = position_in_b[a[i]];
  std::vector<int> buf(seq.size());
  return detail::count_inversions(seq, buf, 0, seq.size());
}

/// Overlap proportions of two vertex sets. Proportions over an empty set are
/// reported as absent rather than 0.
struct OverlapReport {
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  std::size_t size_common = 0;
  std::optional<double> common_over_a;
  std::optional<double> common_over_b;
  std::optional<double> only_a_over_a;
  std::optional<double> only_b_over_b;

  friend bool operator==(const OverlapReport&, const OverlapReport&) = default;
};

inline OverlapReport overlap_report(std::span<const int> set_a, std::span<const int> set_b) {
  std::vector<int> a(set_a.begin(), set_a.end());
  std::vector<int> b(set_b.begin(), set_b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  std::sort(b.begin(), b.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));

  OverlapReport report;
  report.size_a = a.size();
  report.size_b = b.size();
  report.size_common = common.size();
  if (!a.empty()) {
    report.common_over_a = static_cast<double>(common.size()) / a.size();
    report.only_a_over_a = 1.0 - *report.common_over_a;
  }
  if (!b.empty()) {
    report.common_over_b = static_cast<double>(common.size()) / b.size();
    report.only_b_over_b = 1.0 - *report.common_over_b;
  }
  return report;
}

/**
 * Degree ranking versus participation ranking on one graph, with the two
 * clubs R (degree) and S (participation) chosen to be as close in size as
 * the score ties allow.
 */
struct RankComparison {
  std::vector<int> ranking_by_degree;
  std::vector<int> ranking_by_participation;
  std::uint64_t swap_distance = 0;
  std::int64_t degree_threshold = 0;        // j
  std::int64_t participation_threshold = 0; // j'
  std::vector<int> set_r;
  std::vector<int> set_s;
  OverlapReport overlap;

  friend bool operator==(const RankComparison&, const RankComparison&) = default;
};

struct CompareOptions {
  std::optional<std::int64_t> degree_threshold;        // fixed j
  std::optional<std::int64_t> participation_threshold; // fixed j'
  std::optional<std::size_t> target_size;              // pick j for this size
  int workers = 1;
};

inline RankComparison compare_degree_vs_participation(const Graph& g, int k,
                                                      const CompareOptions& options = {}) {
  const int n = g.order();
  std::vector<std::uint64_t> degree_scores(n);
  for (int v = 0; v < n; ++v) degree_scores[v] = static_cast<std::uint64_t>(g.degree(v));
  ParticipationTable table = exact_census(g, k, options.workers);

  RankComparison cmp;
  cmp.ranking_by_degree = rank_vertices(std::span<const std::uint64_t>(degree_scores));
  cmp.ranking_by_participation =
      rank_vertices(std::span<const std::uint64_t>(table.vertex_counts));
  cmp.swap_distance = swap_distance(cmp.ranking_by_degree, cmp.ranking_by_participation);

  std::int64_t j;
  if (options.degree_threshold)
    j = *options.degree_threshold;
  else if (options.target_size)
    j = select_threshold_for_size(degree_scores, *options.target_size);
  else
    throw Error("comparison needs either a degree threshold or a target club size");
  for (int v = 0; v < n; ++v)
    if (static_cast<std::int64_t>(degree_scores[v]) > j) cmp.set_r.push_back(v);

  std::int64_t jp = options.participation_threshold
                        ? *options.participation_threshold
                        : select_threshold_for_size(table.vertex_counts, cmp.set_r.size());
  for (int v = 0; v < n; ++v)
    if (static_cast<std::int64_t>(table.vertex_counts[v]) > jp) cmp.set_s.push_back(v);

  cmp.degree_threshold = j;
  cmp.participation_threshold = jp;
  cmp.overlap = overlap_report(cmp.set_r, cmp.set_s);
  return cmp;
}

/// One (family, n, density) cell of the randomized comparison experiment.
struct ExperimentCell {
  GenFamily family = GenFamily::ws;
  int n = 0;
  double density = 0.0;
  double beta = 0.1;
  int samples = 0; // N
  int k = 3;
  std::size_t club_target = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const ExperimentCell&, const ExperimentCell&) = default;
};

struct SampleResult {
  std::uint64_t seed = 0;
  std::uint64_t swap_distance = 0;
  std::size_t r_size = 0;
  std::size_t s_size = 0;
  std::size_t common = 0;
  std::optional<double> common_over_r;
  std::optional<double> common_over_s;

  friend bool operator==(const SampleResult&, const SampleResult&) = default;
};

struct CellSummary {
  ExperimentCell cell;
  double swap_mean = 0.0;
  double swap_sd = 0.0; // sample standard deviation, n-1
  std::optional<double> mean_common_over_r;
  std::optional<double> mean_common_over_s;
  std::vector<SampleResult> samples;

  friend bool operator==(const CellSummary&, const CellSummary&) = default;
};

inline SampleResult run_sample(const ExperimentCell& cell, std::uint64_t sample_seed,
                               int workers = 1) {
  GenSpec spec;
  spec.family = cell.family;
  spec.n = cell.n;
  spec.target_density = cell.density;
  spec.rewiring_beta = cell.beta;
  spec.seed = sample_seed;
  Graph g = generate(spec);

  CompareOptions options;
  options.target_size = cell.club_target;
  options.workers = workers;
  RankComparison cmp = compare_degree_vs_participation(g, cell.k, options);

  SampleResult r;
  r.seed = sample_seed;
  r.swap_distance = cmp.swap_distance;
  r.r_size = cmp.overlap.size_a;
  r.s_size = cmp.overlap.size_b;
  r.common = cmp.overlap.size_common;
  r.common_over_r = cmp.overlap.common_over_a;
  r.common_over_s = cmp.overlap.common_over_b;
  return r;
}

/// Runs every cell: N seeded samples, swap-distance mean and sample standard
/// deviation plus mean overlap proportions. At least two samples per cell.
inline std::vector<CellSummary> batch_experiment(std::span<const ExperimentCell> cells,
                                                 int workers = 1) {
  for (const auto& cell : cells)
    if (cell.samples < 2)
      throw Error("batch experiment needs at least 2 samples per cell for the "
                  "standard deviation");
  std::vector<CellSummary> out;
  out.reserve(cells.size());
  for (const auto& cell : cells) {
    CellSummary summary;
    summary.cell = cell;
    double sum = 0.0, sum_sq = 0.0, sum_r = 0.0, sum_s = 0.0;
    int defined_r = 0, defined_s = 0;
    for (int s = 0; s < cell.samples; ++s) {
      SampleResult sample =
          run_sample(cell, SplitMix64::derive(cell.seed, static_cast<std::uint64_t>(s)),
                     workers);
      sum += static_cast<double>(sample.swap_distance);
      sum_sq += static_cast<double>(sample.swap_distance) *
                static_cast<double>(sample.swap_distance);
      if (sample.common_over_r) {
        sum_r += *sample.common_over_r;
        ++defined_r;
      }
      if (sample.common_over_s) {
        sum_s += *sample.common_over_s;
        ++defined_s;
      }
      summary.samples.push_back(std::move(sample));
    }
    const double n = cell.samples;
    summary.swap_mean = sum / n;
    summary.swap_sd = std::sqrt(std::max(0.0, (sum_sq - sum * sum / n) / (n - 1)));
    if (defined_r > 0) summary.mean_common_over_r = sum_r / defined_r;
    if (defined_s > 0) summary.mean_common_over_s = sum_s / defined_s;
    out.push_back(std::move(summary));
  }
  return out;
}

} // namespace cliquerich
