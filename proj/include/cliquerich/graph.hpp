#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cliquerich/bitset.hpp"
#include "cliquerich/error.hpp"

namespace cliquerich {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  double weight = 1.0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

class Graph;

/// An induced subgraph together with the map new index -> original index.
struct InducedSubgraph;

/**
 * Immutable simple undirected weighted graph. Vertices are dense indices
 * 0..n-1; an absent pair has implicit weight 0. Unweighted inputs store
 * weight 1 per edge. Safe for concurrent reads once constructed.
 */
class Graph {
public:
  Graph() = default;

  explicit Graph(int n) : n_(n) { build_index(); }

  Graph(int n, std::vector<WeightedEdge> edges) : n_(n), edges_(std::move(edges)) {
    normalize_and_validate();
    build_index();
  }

  static Graph complete(int n, double weight = 1.0) {
    std::vector<WeightedEdge> es;
    es.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) es.push_back({u, v, weight});
    return Graph(n, std::move(es));
  }

  /// Parses line-oriented "u v [w]" records. '#' starts a comment; blank
  /// lines are skipped. Missing weight defaults to 1; duplicate records with
  /// equal weight collapse, conflicting weights are an error.
  static Graph from_edge_list(std::string_view text);

  /// Parses a square numeric matrix, CSV or whitespace-delimited. Requires a
  /// zero diagonal, non-negative entries, and symmetry within 1e-9 absolute;
  /// the stored weight is the mean of the two mirror entries.
  static Graph from_dense_matrix(std::string_view text);

  int order() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<WeightedEdge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const { return edge_index(u, v).has_value(); }

  /// Weight of the pair {u,v}; 0 when the pair is not an edge.
  double weight(int u, int v) const {
    auto idx = edge_index(u, v);
    return idx ? edges_[*idx].weight : 0.0;
  }

  /// Position of {u,v} in edges(), if present.
  std::optional<std::size_t> edge_index(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return std::nullopt;
    const auto& row = nbr_[u];
    auto it = std::lower_bound(row.begin(), row.end(), v,
                               [](const auto& a, int b) { return a.first < b; });
    if (it == row.end() || it->first != v) return std::nullopt;
    return it->second;
  }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(nbr_[v].size());
  }

  std::vector<int> neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    out.reserve(nbr_[v].size());
    for (const auto& [w, idx] : nbr_[v]) out.push_back(w);
    return out;
  }

  const Bitset& adjacency_row(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  /// 2|E| / (n^2 - n). Undefined (throws) for graphs with fewer than 2 vertices.
  double density() const {
    if (n_ < 2) throw Error("density undefined: graph has fewer than 2 vertices");
    return 2.0 * static_cast<double>(edges_.size()) /
           (static_cast<double>(n_) * n_ - n_);
  }

  InducedSubgraph induced_subgraph(std::span<const int> vertices) const;

  /// Structural hash over order, edges and weight bit patterns.
  std::uint64_t digest() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
      h ^= x;
      h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(n_));
    for (const auto& e : edges_) {
      mix(static_cast<std::uint64_t>(e.u));
      mix(static_cast<std::uint64_t>(e.v));
      mix(std::bit_cast<std::uint64_t>(e.weight));
    }
    return h;
  }

  const std::optional<std::vector<std::string>>& labels() const { return labels_; }

  /// Attach per-vertex names. Count must equal order, names must be unique.
  /// Intended for the construction phase; reads stay thread-safe afterwards.
  void attach_labels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != n_)
      throw Error("label count " + std::to_string(labels.size()) +
                  " does not match vertex count " + std::to_string(n_));
    auto sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error("vertex labels must be unique");
    labels_ = std::move(labels);
  }

  std::string label_of(int v) const {
    check_vertex(v);
    return labels_ ? (*labels_)[v] : std::to_string(v);
  }

  /// One "u v w" line per edge; optional leading comment lines (pass text
  /// without the '#', one line per entry).
  std::string to_edge_list(std::span<const std::string> header_comments = {}) const;

  /// Row-major CSV, zero diagonal, symmetric.
  std::string to_dense_matrix() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
  }

private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw Error("vertex " + std::to_string(v) + " out of range [0, " +
                  std::to_string(n_) + ")");
  }

  void normalize_and_validate() {
    for (auto& e : edges_) {
      if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
        throw Error("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                    "} out of range for order " + std::to_string(n_));
      if (e.u == e.v)
        throw Error("self-loop at vertex " + std::to_string(e.u));
      if (!(e.weight >= 0.0) || !std::isfinite(e.weight))
        throw Error("negative or non-finite weight on edge {" +
                    std::to_string(e.u) + "," + std::to_string(e.v) + "}");
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(), [](const auto& a, const auto& b) {
      return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    std::vector<WeightedEdge> dedup;
    dedup.reserve(edges_.size());
    for (const auto& e : edges_) {
      if (!dedup.empty() && dedup.back().u == e.u && dedup.back().v == e.v) {
        if (dedup.back().weight != e.weight)
          throw Error("duplicate edge {" + std::to_string(e.u) + "," +
                      std::to_string(e.v) + "} with conflicting weights");
        continue;
      }
      dedup.push_back(e);
    }
    edges_ = std::move(dedup);
  }

  void build_index() {
    adj_.assign(n_, Bitset(n_));
    nbr_.assign(n_, {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto& e = edges_[i];
      adj_[e.u].set(e.v);
      adj_[e.v].set(e.u);
      nbr_[e.u].emplace_back(e.v, i);
      nbr_[e.v].emplace_back(e.u, i);
    }
    for (auto& row : nbr_) std::sort(row.begin(), row.end());
  }

  int n_ = 0;
  std::vector<WeightedEdge> edges_;
  std::vector<Bitset> adj_;
  std::vector<std::vector<std::pair<int, std::size_t>>> nbr_;
  std::optional<std::vector<std::string>> labels_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertex_map; // new index -> original index
};

namespace detail {

inline std::string format_weight(double w) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", w);
  // trim to the shortest representation that round-trips
  for (int prec = 1; prec < 17; ++prec) {
    char shorter[32];
    std::snprintf(shorter, sizeof shorter, "%.*g", prec, w);
    double back = 0;
    std::sscanf(shorter, "%lf", &back);
    if (back == w) return shorter;
  }
  return buf;
}

inline double parse_number(std::string_view tok, int line_no, const char* what) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw Error("line " + std::to_string(line_no) + ": malformed " + what + " '" +
                std::string(tok) + "'");
  return value;
}

inline int parse_vertex(std::string_view tok, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0)
    throw Error("line " + std::to_string(line_no) + ": malformed vertex id '" +
                std::string(tok) + "'");
  return value;
}

template <typename OnLine>
void for_each_data_line(std::string_view text, OnLine&& on_line) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = (eol == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, eol - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
      line.remove_prefix(1);
    if (!line.empty()) on_line(line, line_no);
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
}

inline std::vector<std::string_view> split_tokens(std::string_view line, bool commas) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  auto is_sep = [&](char c) {
    return commas ? (c == ',') : (c == ' ' || c == '\t');
  };
  while (i < line.size()) {
    while (i < line.size() && (is_sep(line[i]) || line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_sep(line[j]) && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

} // namespace detail

inline Graph Graph::from_edge_list(std::string_view text) {
  std::vector<WeightedEdge> edges;
  int max_vertex = -1;
  detail::for_each_data_line(text, [&](std::string_view line, int line_no) {
    auto toks = detail::split_tokens(line, /*commas=*/false);
    if (toks.size() != 2 && toks.size() != 3)
      throw Error("line " + std::to_string(line_no) +
                  ": expected 'u v [w]', got '" + std::string(line) + "'");
    int u = detail::parse_vertex(toks[0], line_no);
    int v = detail::parse_vertex(toks[1], line_no);
    if (u == v)
      throw Error("line " + std::to_string(line_no) + ": self-loop at vertex " +
                  std::to_string(u));
    double w = 1.0;
    if (toks.size() == 3) {
      w = detail::parse_number(toks[2], line_no, "weight");
      if (!(w >= 0.0) || !std::isfinite(w))
        throw Error("line " + std::to_string(line_no) + ": negative weight " +
                    std::string(toks[2]));
    }
    edges.push_back({u, v, w});
    max_vertex = std::max({max_vertex, u, v});
  });
  return Graph(max_vertex + 1, std::move(edges));
}

inline Graph Graph::from_dense_matrix(std::string_view text) {
  std::vector<std::vector<double>> rows;
  detail::for_each_data_line(text, [&](std::string_view line, int line_no) {
    bool commas = line.find(',') != std::string_view::npos;
    auto toks = detail::split_tokens(line, commas);
    std::vector<double> row;
    row.reserve(toks.size());
    for (auto t : toks) row.push_back(detail::parse_number(t, line_no, "matrix entry"));
    rows.push_back(std::move(row));
  });
  const int n = static_cast<int>(rows.size());
  for (const auto& row : rows)
    if (static_cast<int>(row.size()) != n)
      throw Error("matrix is not square: " + std::to_string(n) + " rows, row with " +
                  std::to_string(row.size()) + " columns");
  constexpr double kSymTol = 1e-9;
  std::vector<WeightedEdge> edges;
  for (int u = 0; u < n; ++u) {
    if (rows[u][u] != 0.0)
      throw Error("nonzero diagonal entry at (" + std::to_string(u) + "," +
                  std::to_string(u) + ")");
    for (int v = u + 1; v < n; ++v) {
      double a = rows[u][v];
      double b = rows[v][u];
      if (a < 0.0 || b < 0.0)
        throw Error("negative matrix entry at (" + std::to_string(u) + "," +
                    std::to_string(v) + ")");
      if (std::abs(a - b) > kSymTol)
        throw Error("asymmetric entries at (" + std::to_string(u) + "," +
                    std::to_string(v) + "): " + detail::format_weight(a) + " vs " +
                    detail::format_weight(b));
      double w = (a + b) / 2.0;
      if (w > 0.0) edges.push_back({u, v, w});
    }
  }
  return Graph(n, std::move(edges));
}

inline InducedSubgraph Graph::induced_subgraph(std::span<const int> vertices) const {
  std::vector<int> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (int v : keep) check_vertex(v);

  std::vector<int> old_to_new(n_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) old_to_new[keep[i]] = static_cast<int>(i);

  std::vector<WeightedEdge> sub_edges;
  for (const auto& e : edges_)
    if (old_to_new[e.u] >= 0 && old_to_new[e.v] >= 0)
      sub_edges.push_back({old_to_new[e.u], old_to_new[e.v], e.weight});

  Graph sub(static_cast<int>(keep.size()), std::move(sub_edges));
  if (labels_) {
    std::vector<std::string> sub_labels;
    sub_labels.reserve(keep.size());
    for (int v : keep) sub_labels.push_back((*labels_)[v]);
    sub.attach_labels(std::move(sub_labels));
  }
  return InducedSubgraph{std::move(sub), std::move(keep)};
}

inline std::string Graph::to_edge_list(std::span<const std::string> header_comments) const {
  std::string out;
  for (const auto& c : header_comments) {
    out += "# ";
    out += c;
    out += '\n';
  }
  for (const auto& e : edges_) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += ' ';
    out += detail::format_weight(e.weight);
    out += '\n';
  }
  return out;
}

inline std::string Graph::to_dense_matrix() const {
  std::vector<std::vector<double>> m(n_, std::vector<double>(n_, 0.0));
  for (const auto& e : edges_) {
    m[e.u][e.v] = e.weight;
    m[e.v][e.u] = e.weight;
  }
  std::string out;
  for (int u = 0; u < n_; ++u) {
    for (int v = 0; v < n_; ++v) {
      if (v) out += ',';
      out += detail::format_weight(m[u][v]);
    }
    out += '\n';
  }
  return out;
}

} // namespace cliquerich
