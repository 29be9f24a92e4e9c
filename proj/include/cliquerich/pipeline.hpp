#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cliquerich/census.hpp"
#include "cliquerich/graph.hpp"

namespace cliquerich {

/**
 * Percentile ladder driving the iterative thresholding. The default doubles
 * the retained tail each step after the two median passes: 50, 50, 75, 87.5,
 * ... closing at 99.8046875 (ten entries).
 */
struct PercentileSchedule {
  std::vector<double> entries;

  static PercentileSchedule default_schedule() {
    PercentileSchedule s;
    s.entries = {50.0, 50.0};
    while (s.entries.size() < 10) s.entries.push_back((100.0 + s.entries.back()) / 2.0);
    return s;
  }

  friend bool operator==(const PercentileSchedule&, const PercentileSchedule&) = default;
};

/// Nearest-rank percentile: the ceil(P/100 * m)-th smallest of m values.
inline double percentile_value(std::span<const double> values, double percentile) {
  if (values.empty()) throw Error("percentile of an empty multiset");
  if (!(percentile > 0.0) || percentile > 100.0)
    throw Error("percentile must lie in (0, 100]");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  auto rank = static_cast<std::size_t>(
      std::ceil(percentile * static_cast<double>(sorted.size()) / 100.0));
  if (rank < 1) rank = 1;
  if (rank > sorted.size()) rank = sorted.size();
  return sorted[rank - 1];
}

struct IterationRecord {
  int iteration = 0;   // schedule index i; the iteration consumed G_i
  int graph_index = 0; // index of the produced graph, i+1
  double percentile = 0.0;
  double threshold = 0.0; // w_i
  std::uint64_t pseudo_total = 0;
  std::size_t surviving_edges = 0;
  std::vector<std::uint64_t> vertex_counts;

  friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

enum class HaltReason { converged, schedule_exhausted };

inline const char* to_string(HaltReason r) {
  return r == HaltReason::converged ? "converged" : "schedule-exhausted";
}

/**
 * Full record of a pipeline run: one entry per executed iteration, the final
 * SUpernode set (non-isolated vertices of the last graph) and why the run
 * stopped. Surviving edge sets are nested across iterations.
 */
struct PipelineTrace {
  int k = 5;
  int n = 0;
  std::vector<IterationRecord> iterations;
  std::vector<int> supernodes;
  HaltReason halt_reason = HaltReason::schedule_exhausted;

  friend bool operator==(const PipelineTrace&, const PipelineTrace&) = default;
};

struct PipelineOptions {
  int workers = 1;
  // Literal reading of "retain the top P percent of edges": additionally cut
  // g_next down to edges at or above its (100-P)th participation percentile.
  // Off by default; kept for side-by-side comparison.
  bool hard_percentile_cut = false;
};

/**
 * One pass: threshold w_i is the P-th nearest-rank percentile of the current
 * edge weights, a pseudo census at w_i re-weights every edge by its
 * participation, and edges that participate in nothing are dropped.
 */
inline std::pair<Graph, IterationRecord> run_iteration(const Graph& g, int k,
                                                       double percentile,
                                                       const PipelineOptions& options = {}) {
  if (g.edge_count() == 0) throw Error("pipeline iteration on an edgeless graph");
  std::vector<double> weights;
  weights.reserve(g.edge_count());
  for (const auto& e : g.edges()) weights.push_back(e.weight);
  const double threshold = percentile_value(weights, percentile);

  ParticipationTable census = pseudo_census(g, k, threshold, options.workers);

  std::vector<WeightedEdge> surviving;
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (census.edge_counts[i] > 0)
      surviving.push_back(
          {edges[i].u, edges[i].v, static_cast<double>(census.edge_counts[i])});

  if (options.hard_percentile_cut && !surviving.empty() && percentile < 100.0) {
    std::vector<double> participation;
    participation.reserve(surviving.size());
    for (const auto& e : surviving) participation.push_back(e.weight);
    const double cut = percentile_value(participation, 100.0 - percentile);
    std::erase_if(surviving, [cut](const WeightedEdge& e) { return e.weight < cut; });
  }

  IterationRecord record;
  record.percentile = percentile;
  record.threshold = threshold;
  record.pseudo_total = census.total;
  record.surviving_edges = surviving.size();
  record.vertex_counts = std::move(census.vertex_counts);

  return {Graph(g.order(), std::move(surviving)), std::move(record)};
}

/**
 * Iterates run_iteration along the schedule, working on the original weights
 * first and on participation weights from then on. Halts when an iteration
 * reproduces the previous pseudo count, when the graph runs out of edges, or
 * when the schedule ends. SUpernodes are the vertices still carrying edges.
 */
inline PipelineTrace run_pipeline(const Graph& g0, int k,
                                  const PercentileSchedule& schedule =
                                      PercentileSchedule::default_schedule(),
                                  const PipelineOptions& options = {}) {
  if (g0.edge_count() == 0) throw Error("pipeline requires a graph with at least one edge");
  if (schedule.entries.empty()) throw Error("empty percentile schedule");

  PipelineTrace trace;
  trace.k = k;
  trace.n = g0.order();
  Graph current = g0;
  for (std::size_t i = 0; i < schedule.entries.size(); ++i) {
    auto [next, record] = run_iteration(current, k, schedule.entries[i], options);
    record.iteration = static_cast<int>(i);
    record.graph_index = static_cast<int>(i) + 1;
    const bool same_total = i > 0 && record.pseudo_total == trace.iterations.back().pseudo_total;
    trace.iterations.push_back(std::move(record));
    current = std::move(next);
    if (same_total || current.edge_count() == 0) {
      trace.halt_reason = HaltReason::converged;
      break;
    }
  }
  for (int v = 0; v < current.order(); ++v)
    if (current.degree(v) > 0) trace.supernodes.push_back(v);
  return trace;
}

} // namespace cliquerich
