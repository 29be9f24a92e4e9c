#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "cliquerich/graph.hpp"

namespace cliquerich {

/**
 * SplitMix64: portable 64-bit generator with cheap stream derivation, so
 * batches stay reproducible across platforms and worker counts. Bounded
 * draws use Lemire's rejection method (no modulo bias, no distribution
 * objects that differ between standard libraries).
 */
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, range); range must be positive.
  std::uint64_t bounded(std::uint64_t range) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * range;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < range) {
      const std::uint64_t cutoff = (0 - range) % range;
      while (lo < cutoff) {
        m = static_cast<unsigned __int128>(next()) * range;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform in [0, 1) with 53 bits of precision.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Deterministic sub-stream seed for parallel/batch item `stream`.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 rng(seed ^ (0x632be59bd9b4e019ull * (stream + 1)));
    return rng.next();
  }

private:
  std::uint64_t state_;
};

enum class GenFamily { er, ws };

struct GenSpec {
  GenFamily family = GenFamily::er;
  int n = 0;
  double target_density = 0.0;
  double rewiring_beta = 0.1; // ws only
  std::uint64_t seed = 0;

  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

namespace detail {

/// Linear index of the pair (u,v), u < v, in lexicographic order.
inline std::uint64_t pair_to_index(int u, int v, int n) {
  return static_cast<std::uint64_t>(u) * (2 * n - u - 1) / 2 +
         static_cast<std::uint64_t>(v - u - 1);
}

inline std::pair<int, int> index_to_pair(std::uint64_t e, int n) {
  int u = static_cast<int>(n - 2 -
                           std::floor(std::sqrt(-8.0 * static_cast<double>(e) +
                                                4.0 * n * (n - 1.0) - 7.0) /
                                          2.0 -
                                      0.5));
  // fix up floating slop around block boundaries
  while (u > 0 && pair_to_index(u, u + 1, n) > e) --u;
  while (u + 1 < n - 1 && pair_to_index(u + 1, u + 2, n) <= e) ++u;
  int v = static_cast<int>(e - pair_to_index(u, u + 1, n)) + u + 1;
  return {u, v};
}

} // namespace detail

/// Ring degree for a Watts-Strogatz lattice: nearest even integer to
/// density*(n-1), ties rounded down.
inline int ws_ring_degree(double target_density, int n) {
  const double x = target_density * (n - 1);
  const int lo = 2 * static_cast<int>(std::floor(x / 2.0));
  const int hi = lo + 2;
  return (x - lo <= hi - x) ? lo : hi;
}

/**
 * G(n,M): a uniform graph with exactly round(density * C(n,2)) edges, all
 * weight 1. Edge indices are drawn by Floyd's sampling, so the result is a
 * pure function of the spec.
 */
inline Graph gen_er(const GenSpec& spec) {
  if (spec.n < 2) throw Error("gen_er requires n >= 2");
  if (!(spec.target_density > 0.0) || spec.target_density > 1.0)
    throw Error("gen_er requires target density in (0, 1]");
  const std::uint64_t pairs =
      static_cast<std::uint64_t>(spec.n) * (spec.n - 1) / 2;
  const auto m = static_cast<std::uint64_t>(
      std::llround(spec.target_density * static_cast<double>(pairs)));

  SplitMix64 rng(spec.seed);
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  std::vector<std::uint64_t> picks;
  picks.reserve(m);
  for (std::uint64_t j = pairs - m; j < pairs; ++j) {
    const std::uint64_t t = rng.bounded(j + 1);
    if (chosen.insert(t).second) {
      picks.push_back(t);
    } else {
      chosen.insert(j);
      picks.push_back(j);
    }
  }
  std::vector<WeightedEdge> edges;
  edges.reserve(picks.size());
  for (const auto e : picks) {
    auto [u, v] = detail::index_to_pair(e, spec.n);
    edges.push_back({u, v, 1.0});
  }
  return Graph(spec.n, std::move(edges));
}

/**
 * Watts-Strogatz: ring lattice at the derived even degree, then each lattice
 * edge is rewired with probability beta to a uniform non-adjacent endpoint.
 * Rewiring never changes the edge count.
 */
inline Graph gen_ws(const GenSpec& spec) {
  if (spec.n < 4) throw Error("gen_ws requires n >= 4");
  if (spec.rewiring_beta < 0.0 || spec.rewiring_beta > 1.0)
    throw Error("rewiring probability must lie in [0, 1]");
  const int n = spec.n;
  const int k_ring = ws_ring_degree(spec.target_density, n);
  if (k_ring < 2)
    throw Error("target density " + std::to_string(spec.target_density) +
                " too low for a ring lattice on " + std::to_string(n) + " vertices");
  if (k_ring >= n) throw Error("derived ring degree must stay below n");

  std::vector<Bitset> adj(n, Bitset(n));
  std::vector<int> deg(n, 0);
  auto add = [&](int a, int b) {
    adj[a].set(b);
    adj[b].set(a);
    ++deg[a];
    ++deg[b];
  };
  auto remove = [&](int a, int b) {
    adj[a].reset(b);
    adj[b].reset(a);
    --deg[a];
    --deg[b];
  };
  for (int u = 0; u < n; ++u)
    for (int d = 1; d <= k_ring / 2; ++d) add(u, (u + d) % n);

  SplitMix64 rng(spec.seed);
  for (int u = 0; u < n; ++u) {
    for (int d = 1; d <= k_ring / 2; ++d) {
      const int v = (u + d) % n;
      if (rng.next_double() >= spec.rewiring_beta) continue;
      if (deg[u] >= n - 1) continue; // saturated, nothing to rewire to
      int w;
      do {
        w = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(n)));
      } while (w == u || adj[u].test(w));
      remove(u, v);
      add(u, w);
    }
  }

  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<std::size_t>(n) * k_ring / 2);
  for (int u = 0; u < n; ++u)
    adj[u].for_each([&](int v) {
      if (u < v) edges.push_back({u, v, 1.0});
    });
  return Graph(n, std::move(edges));
}

inline Graph generate(const GenSpec& spec) {
  return spec.family == GenFamily::er ? gen_er(spec) : gen_ws(spec);
}

} // namespace cliquerich
