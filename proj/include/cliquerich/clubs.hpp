#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cliquerich/census.hpp"
#include "cliquerich/graph.hpp"

namespace cliquerich {

enum class ClubKind { rich_club, super_rich_club, rich_edge_club };

inline const char* to_string(ClubKind kind) {
  switch (kind) {
    case ClubKind::rich_club: return "rich-club";
    case ClubKind::super_rich_club: return "super-rich-club";
    case ClubKind::rich_edge_club: return "rich-edge-club";
  }
  return "?";
}

/**
 * Membership plus coefficient for one club selection. member_edges are the
 * club graph's edges in original vertex indices: the induced edges for the
 * vertex clubs (weighted by edge participation for the super rich-club), or
 * the selected edges for the edge club. An absent coefficient means the club
 * is too small or the denominator vanished -- "no club" stays distinguishable
 * from "sparse club".
 */
struct ClubReport {
  ClubKind kind = ClubKind::rich_club;
  int k = 2;
  std::int64_t threshold = 0;
  int n = 0; // order of the source graph
  std::vector<int> members;
  std::vector<WeightedEdge> member_edges;
  std::optional<double> coefficient;

  friend bool operator==(const ClubReport&, const ClubReport&) = default;
};

/// Materializes the club graph: induced and re-indexed for the vertex clubs,
/// full vertex set with selected edges for the edge club.
inline InducedSubgraph club_graph(const ClubReport& report) {
  if (report.kind == ClubKind::rich_edge_club) {
    std::vector<int> identity(report.n);
    for (int v = 0; v < report.n; ++v) identity[v] = v;
    return InducedSubgraph{Graph(report.n, report.member_edges), std::move(identity)};
  }
  std::vector<int> old_to_new(report.n, -1);
  for (std::size_t i = 0; i < report.members.size(); ++i)
    old_to_new[report.members[i]] = static_cast<int>(i);
  std::vector<WeightedEdge> edges;
  edges.reserve(report.member_edges.size());
  for (const auto& e : report.member_edges)
    edges.push_back({old_to_new[e.u], old_to_new[e.v], e.weight});
  return InducedSubgraph{Graph(static_cast<int>(report.members.size()), std::move(edges)),
                         report.members};
}

namespace detail {

inline std::optional<double> density_of_club(std::size_t member_count,
                                             std::size_t internal_edges) {
  if (member_count < 2) return std::nullopt;
  return static_cast<double>(internal_edges) /
         (static_cast<double>(member_count) * (member_count - 1) / 2.0);
}

inline void check_table(const Graph& g, int k, const ParticipationTable& table) {
  if (table.k != k)
    throw Error("participation table was computed for k=" + std::to_string(table.k) +
                ", not k=" + std::to_string(k));
  if (table.graph_digest != g.digest())
    throw Error("participation table does not belong to this graph");
}

} // namespace detail

/// Vertices of degree > j and the density of the subgraph they induce.
inline ClubReport rich_club(const Graph& g, std::int64_t j) {
  ClubReport report;
  report.kind = ClubKind::rich_club;
  report.k = 2;
  report.threshold = j;
  report.n = g.order();
  std::vector<bool> in(g.order(), false);
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) > j) {
      report.members.push_back(v);
      in[v] = true;
    }
  for (const auto& e : g.edges())
    if (in[e.u] && in[e.v]) report.member_edges.push_back(e);
  report.coefficient =
      detail::density_of_club(report.members.size(), report.member_edges.size());
  return report;
}

/**
 * Vertices with participation xi(v,k) > j; coefficient is the density of the
 * induced subgraph, whose edges carry xi(e,k) as weight. The table must have
 * been computed on this graph at this order.
 */
inline ClubReport super_rich_club(const Graph& g, int k, std::int64_t j,
                                  const ParticipationTable& table) {
  detail::check_table(g, k, table);
  ClubReport report;
  report.kind = ClubKind::super_rich_club;
  report.k = k;
  report.threshold = j;
  report.n = g.order();
  std::vector<bool> in(g.order(), false);
  for (int v = 0; v < g.order(); ++v)
    if (static_cast<std::int64_t>(table.vertex_counts[v]) > j) {
      report.members.push_back(v);
      in[v] = true;
    }
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (in[edges[i].u] && in[edges[i].v])
      report.member_edges.push_back(
          {edges[i].u, edges[i].v, static_cast<double>(table.edge_counts[i])});
  report.coefficient =
      detail::density_of_club(report.members.size(), report.member_edges.size());
  return report;
}

/**
 * Sum of weights internal to `members` over the sum of all edge weights > t.
 * The weight cutoff t is deliberately separate from any participation
 * threshold: counts and weights live on different scales. Absent when the
 * denominator is 0.
 */
inline std::optional<double> weighted_participation_coefficient(
    const Graph& g, std::span<const int> members, double t = 0.0) {
  std::vector<bool> in(g.order(), false);
  for (int v : members) {
    if (v < 0 || v >= g.order())
      throw Error("member vertex " + std::to_string(v) + " out of range");
    in[v] = true;
  }
  double numerator = 0.0, denominator = 0.0;
  for (const auto& e : g.edges()) {
    if (in[e.u] && in[e.v]) numerator += e.weight;
    if (e.weight > t) denominator += e.weight;
  }
  if (denominator == 0.0) return std::nullopt;
  return numerator / denominator;
}

/**
 * Edges with xi(e,k) > j; members are their endpoints. The coefficient is
 * the selected participation mass over C(k,2) * total, so it is always in
 * [0,1]. Requires an exact-mode table; absent coefficient when the graph has
 * no K_k at all.
 */
inline ClubReport edge_club(const Graph& g, int k, std::int64_t j,
                            const ParticipationTable& table) {
  detail::check_table(g, k, table);
  if (table.mode != CensusMode::exact)
    throw Error("edge_club requires an exact-mode participation table");
  ClubReport report;
  report.kind = ClubKind::rich_edge_club;
  report.k = k;
  report.threshold = j;
  report.n = g.order();
  const auto& edges = g.edges();
  std::uint64_t selected_mass = 0;
  std::vector<bool> in(g.order(), false);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (static_cast<std::int64_t>(table.edge_counts[i]) > j) {
      report.member_edges.push_back(
          {edges[i].u, edges[i].v, static_cast<double>(table.edge_counts[i])});
      selected_mass += table.edge_counts[i];
      in[edges[i].u] = true;
      in[edges[i].v] = true;
    }
  }
  for (int v = 0; v < g.order(); ++v)
    if (in[v]) report.members.push_back(v);
  if (table.total > 0) {
    const double denom = static_cast<double>(k) * (k - 1) / 2.0 *
                         static_cast<double>(table.total);
    report.coefficient = static_cast<double>(selected_mass) / denom;
  }
  return report;
}

/**
 * Largest integer threshold whose club size |{v : score > j'}| lands closest
 * to `target`; distance ties resolve toward the smaller club. Equal scores
 * are never split, so the achievable sizes are the block boundaries only.
 * For the empty club the smallest adequate threshold (the maximum score) is
 * returned, since any larger value selects the same club.
 */
inline std::int64_t select_threshold_for_size(std::span<const std::uint64_t> scores,
                                              std::size_t target) {
  if (scores.empty()) return 0;
  std::vector<std::uint64_t> distinct(scores.begin(), scores.end());
  std::sort(distinct.begin(), distinct.end(), std::greater<>());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  // candidate clubs: one per distinct-score prefix, plus the empty club
  std::size_t best_size = 0;
  std::int64_t best_threshold = static_cast<std::int64_t>(distinct.front());
  auto distance = [target](std::size_t size) {
    return size > target ? size - target : target - size;
  };
  std::size_t prefix = 0;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    for (auto s : scores)
      if (s == distinct[i]) ++prefix;
    // club of everything scoring >= distinct[i]; largest admitting threshold
    // is one below the smallest in-club score
    std::int64_t threshold = static_cast<std::int64_t>(distinct[i]) - 1;
    // candidates grow, so keeping only strict improvements resolves distance
    // ties toward the smaller club
    if (distance(prefix) < distance(best_size)) {
      best_size = prefix;
      best_threshold = threshold;
    }
  }
  return best_threshold;
}

} // namespace cliquerich
