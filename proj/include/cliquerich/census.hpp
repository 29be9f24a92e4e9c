#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "cliquerich/graph.hpp"

namespace cliquerich {

enum class CensusMode { exact, pseudo };

/**
 * Per-vertex and per-edge participation counts for one census run.
 * vertex_counts[v] is the number of qualifying k-subsets containing v;
 * edge_counts is parallel to Graph::edges(). Counts are 64-bit: brain-scale
 * graphs reach vertex participations beyond 2.5e8.
 */
struct ParticipationTable {
  int k = 2;
  CensusMode mode = CensusMode::exact;
  double threshold = 0.0; // pseudo mode only
  std::uint64_t total = 0;
  std::vector<std::uint64_t> vertex_counts;
  std::vector<std::uint64_t> edge_counts;
  std::uint64_t graph_digest = 0;

  friend bool operator==(const ParticipationTable&, const ParticipationTable&) = default;

  std::uint64_t edge_count_of(const Graph& g, int u, int v) const {
    auto idx = g.edge_index(u, v);
    return idx ? edge_counts[*idx] : 0;
  }
};

/// Peeling order by repeatedly removing a minimum-degree vertex. The pick
/// among ties is fixed, so the order is reproducible run to run.
inline std::vector<int> degeneracy_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> deg(n), order;
  order.reserve(n);
  int max_deg = 0;
  for (int v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<std::vector<int>> bins(max_deg + 1);
  for (int v = 0; v < n; ++v) bins[deg[v]].push_back(v);
  std::vector<bool> removed(n, false);
  std::vector<int> cursor(max_deg + 1, 0);
  int current = 0;
  for (int step = 0; step < n; ++step) {
    while (current <= max_deg &&
           (cursor[current] >= static_cast<int>(bins[current].size()) ||
            removed[bins[current][cursor[current]]] ||
            deg[bins[current][cursor[current]]] != current)) {
      if (cursor[current] >= static_cast<int>(bins[current].size()))
        ++current;
      else
        ++cursor[current];
    }
    int v = bins[current][cursor[current]++];
    removed[v] = true;
    order.push_back(v);
    for (int w : g.neighbors(v)) {
      if (removed[w]) continue;
      --deg[w];
      bins[deg[w]].push_back(w);
      if (deg[w] < current) current = deg[w];
    }
  }
  return order;
}

/**
 * Upper median of the C(|S|,2) pair weights of a vertex subset: absent pairs
 * contribute 0, the sorted value at 1-based position floor(m/2)+1 is returned
 * (the exact middle when m is odd).
 */
inline double median_pair_weight(const Graph& g, std::span<const int> subset) {
  const std::size_t k = subset.size();
  if (k < 2) throw Error("median_pair_weight: subset needs at least 2 vertices");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (subset[i] == subset[j])
        throw Error("median_pair_weight: duplicate vertex " + std::to_string(subset[i]));
  std::vector<double> weights;
  weights.reserve(k * (k - 1) / 2);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      weights.push_back(g.weight(subset[i], subset[j]));
  std::sort(weights.begin(), weights.end());
  return weights[weights.size() / 2];
}

namespace detail {

inline void check_census_args(const Graph& g, int k) {
  if (k < 2 || k > g.order())
    throw Error("census order k=" + std::to_string(k) + " out of range [2, " +
                std::to_string(g.order()) + "]");
}

struct CensusTally {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> vertex_counts;
  std::vector<std::uint64_t> edge_counts;

  explicit CensusTally(const Graph& g)
      : vertex_counts(g.order(), 0), edge_counts(g.edge_count(), 0) {}

  void merge(const CensusTally& other) {
    total += other.total;
    for (std::size_t i = 0; i < vertex_counts.size(); ++i)
      vertex_counts[i] += other.vertex_counts[i];
    for (std::size_t i = 0; i < edge_counts.size(); ++i)
      edge_counts[i] += other.edge_counts[i];
  }
};

/// Runs fn(worker_tally, root) for every root in [0,n); work is handed out
/// through a shared counter and merged by summation, so results do not
/// depend on the worker count.
template <typename Fn>
CensusTally parallel_over_roots(const Graph& g, int n, int workers, Fn&& fn) {
  workers = std::max(1, workers);
  if (workers == 1) {
    CensusTally tally(g);
    for (int r = 0; r < n; ++r) fn(tally, r);
    return tally;
  }
  std::atomic<int> next{0};
  std::vector<CensusTally> partial(workers, CensusTally(g));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int r = next.fetch_add(1); r < n; r = next.fetch_add(1))
        fn(partial[w], r);
    });
  }
  for (auto& t : pool) t.join();
  CensusTally tally(g);
  for (const auto& p : partial) tally.merge(p);
  return tally;
}

struct RankSpace {
  std::vector<int> order;       // rank -> original vertex
  std::vector<int> rank;        // original vertex -> rank
  std::vector<Bitset> adjacency; // rank space

  RankSpace(const Graph& g, bool positive_weights_only)
      : order(degeneracy_order(g)), rank(g.order()) {
    const int n = g.order();
    for (int r = 0; r < n; ++r) rank[order[r]] = r;
    adjacency.assign(n, Bitset(n));
    for (const auto& e : g.edges()) {
      if (positive_weights_only && !(e.weight > 0.0)) continue;
      adjacency[rank[e.u]].set(rank[e.v]);
      adjacency[rank[e.v]].set(rank[e.u]);
    }
  }
};

inline void tally_subset(const Graph& g, CensusTally& tally,
                         std::span<const int> members) {
  ++tally.total;
  for (std::size_t i = 0; i < members.size(); ++i) {
    ++tally.vertex_counts[members[i]];
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (auto idx = g.edge_index(members[i], members[j]))
        ++tally.edge_counts[*idx];
  }
}

} // namespace detail

/**
 * Counts every k-vertex subset inducing a complete subgraph; tallies per
 * member vertex and per member edge. Enumeration walks the degeneracy
 * orientation so each clique is produced exactly once; tallies are integer
 * sums, so any worker count yields the identical table.
 */
inline ParticipationTable exact_census(const Graph& g, int k, int workers = 1) {
  detail::check_census_args(g, k);
  const int n = g.order();
  detail::RankSpace rs(g, /*positive_weights_only=*/false);

  // forward adjacency: neighbours with a higher degeneracy rank
  std::vector<Bitset> fwd(n, Bitset(n));
  for (int r = 0; r < n; ++r) {
    fwd[r] = rs.adjacency[r];
    fwd[r].keep_above(r);
  }

  auto tally = detail::parallel_over_roots(g, n, workers, [&](detail::CensusTally& t, int root) {
    std::vector<int> members(k);
    members[0] = rs.order[root];
    std::vector<Bitset> cand_at(k);
    cand_at[1] = fwd[root];

    auto recurse = [&](auto&& self, int depth) -> void {
      const Bitset& cand = cand_at[depth];
      const int need = k - depth;
      if (need == 0) {
        detail::tally_subset(g, t, members);
        return;
      }
      if (cand.count() < need) return;
      cand.for_each([&](int c) {
        members[depth] = rs.order[c];
        if (need == 1) {
          detail::tally_subset(g, t, members);
        } else {
          cand_at[depth + 1] = cand;
          cand_at[depth + 1] &= fwd[c];
          self(self, depth + 1);
        }
      });
    };
    recurse(recurse, 1);
  });

  ParticipationTable table;
  table.k = k;
  table.mode = CensusMode::exact;
  table.threshold = 0.0;
  table.total = tally.total;
  table.vertex_counts = std::move(tally.vertex_counts);
  table.edge_counts = std::move(tally.edge_counts);
  table.graph_digest = g.digest();
  return table;
}

/**
 * Counts every k-vertex subset whose positive-weight induced subgraph is
 * connected and whose upper-median pair weight is >= threshold (absent pairs
 * weigh 0). Connected subsets are grown ESU-style, each exactly once; a
 * branch dies as soon as its fixed pairs alone push the median below the
 * threshold.
 */
inline ParticipationTable pseudo_census(const Graph& g, int k, double threshold,
                                        int workers = 1) {
  detail::check_census_args(g, k);
  if (!(threshold >= 0.0))
    throw Error("pseudo census threshold must be non-negative");
  const int n = g.order();
  detail::RankSpace rs(g, /*positive_weights_only=*/true);
  const int pair_total = k * (k - 1) / 2;
  const int low_cap = pair_total / 2; // at most this many pairs may fall below w

  auto tally = detail::parallel_over_roots(g, n, workers, [&](detail::CensusTally& t, int root) {
    std::vector<int> members(k);
    members[0] = rs.order[root];
    // per-depth scratch: extension set and closed neighbourhood of the subset
    std::vector<Bitset> ext_at(k + 1), seen_at(k + 1);
    ext_at[1] = rs.adjacency[root];
    ext_at[1].keep_above(root);
    seen_at[1] = rs.adjacency[root];
    seen_at[1].set(root);

    auto extend = [&](auto&& self, int depth, int low_count) -> void {
      if (depth == k) {
        detail::tally_subset(g, t, members);
        return;
      }
      Bitset ext = ext_at[depth]; // local copy: siblings mutate it in turn
      for (int w = ext.find_first(); w >= 0; w = ext.find_first()) {
        ext.reset(w);
        int orig_w = rs.order[w];
        int low = low_count;
        for (int i = 0; i < depth; ++i)
          if (g.weight(orig_w, members[i]) < threshold) ++low;
        if (low > low_cap) continue; // median unreachable below this branch
        members[depth] = orig_w;
        if (depth + 1 == k) {
          detail::tally_subset(g, t, members);
          continue;
        }
        ext_at[depth + 1] = rs.adjacency[w];
        ext_at[depth + 1].and_not(seen_at[depth]);
        ext_at[depth + 1].keep_above(root);
        ext_at[depth + 1] |= ext;
        seen_at[depth + 1] = seen_at[depth];
        seen_at[depth + 1] |= rs.adjacency[w];
        seen_at[depth + 1].set(w);
        self(self, depth + 1, low);
      }
    };
    extend(extend, 1, 0);
  });

  ParticipationTable table;
  table.k = k;
  table.mode = CensusMode::pseudo;
  table.threshold = threshold;
  table.total = tally.total;
  table.vertex_counts = std::move(tally.vertex_counts);
  table.edge_counts = std::move(tally.edge_counts);
  table.graph_digest = g.digest();
  return table;
}

/**
 * Unpruned enumeration of all k-subsets; the verification oracle. Contract
 * identical to exact_census / pseudo_census, but every check is done the
 * slow direct way on the Graph accessors, sharing nothing with the
 * optimized paths. Refuses instances beyond C(n,k) = 1e7.
 */
inline ParticipationTable brute_force_census(const Graph& g, int k, CensusMode mode,
                                             double threshold = 0.0) {
  detail::check_census_args(g, k);
  const int n = g.order();
  double subsets = 1.0;
  for (int i = 0; i < k; ++i) subsets = subsets * (n - i) / (i + 1);
  if (subsets > 1e7)
    throw Error("brute_force_census: C(" + std::to_string(n) + "," +
                std::to_string(k) + ") exceeds the 1e7 oracle guard");

  detail::CensusTally tally(g);
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);

  auto qualifies = [&](const std::vector<int>& s) -> bool {
    if (mode == CensusMode::exact) {
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (!g.has_edge(s[i], s[j])) return false;
      return true;
    }
    // connectivity over strictly positive weights, by plain BFS
    std::vector<int> stack{0};
    std::vector<bool> visited(k, false);
    visited[0] = true;
    int reached = 1;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < k; ++j)
        if (!visited[j] && g.weight(s[i], s[j]) > 0.0) {
          visited[j] = true;
          ++reached;
          stack.push_back(j);
        }
    }
    if (reached != k) return false;
    std::vector<double> weights;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) weights.push_back(g.weight(s[i], s[j]));
    std::sort(weights.begin(), weights.end());
    return weights[weights.size() / 2] >= threshold;
  };

  while (true) {
    if (qualifies(pick)) detail::tally_subset(g, tally, pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }

  ParticipationTable table;
  table.k = k;
  table.mode = mode;
  table.threshold = mode == CensusMode::pseudo ? threshold : 0.0;
  table.total = tally.total;
  table.vertex_counts = std::move(tally.vertex_counts);
  table.edge_counts = std::move(tally.edge_counts);
  table.graph_digest = g.digest();
  return table;
}

} // namespace cliquerich
