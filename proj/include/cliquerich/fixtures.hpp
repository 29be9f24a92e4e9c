#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cliquerich/graph.hpp"

namespace cliquerich::fixtures {

/**
 * Built-in worked-example graphs. They ship inside the library so the golden
 * tests and the CLI never depend on external files.
 *
 * fig1_*: a 15-vertex tree-like graph whose three degree-5 vertices form a
 * rich-club that is empty, one-third dense, or complete depending on which
 * extra edges are present.
 * fig2: two K4s hanging off a pair of hubs; the hubs dominate by degree but
 * participate in no triangle.
 * fig3: a 12-vertex graph where exactly two edges sit in three triangles.
 * fig5_*: K5 and two near-complete 5-vertex graphs (unit weights).
 * fig6_*: two weighted 5-vertex graphs around the median-weight rule.
 */

inline Graph fig1_G() {
  // hubs v1, v3, v5 carry pendant leaves w1..w8
  std::vector<WeightedEdge> edges = {
      {0, 1, 1}, {0, 5, 1},             // v0 - v1, v0 - v5
      {1, 2, 1},                        // v1 - v2
      {3, 4, 1}, {2, 3, 1}, {6, 3, 1},  // v3 - v4, v2 - v3, v6 - v3
      {5, 4, 1},                        // v5 - v4
      {1, 7, 1}, {1, 8, 1}, {1, 9, 1},  // v1 leaves
      {5, 10, 1}, {5, 11, 1}, {5, 12, 1}, // v5 leaves
      {3, 13, 1}, {3, 14, 1},           // v3 leaves
  };
  Graph g(15, std::move(edges));
  g.attach_labels({"v0", "v1", "v2", "v3", "v4", "v5", "v6", "w1", "w2", "w3",
                   "w4", "w5", "w6", "w7", "w8"});
  return g;
}

inline Graph fig1_Gprime() {
  auto base = fig1_G();
  std::vector<WeightedEdge> edges = base.edges();
  edges.push_back({1, 5, 1});
  Graph g(15, std::move(edges));
  g.attach_labels(*base.labels());
  return g;
}

inline Graph fig1_Gdoubleprime() {
  auto base = fig1_G();
  std::vector<WeightedEdge> edges = base.edges();
  edges.push_back({1, 5, 1});
  edges.push_back({1, 3, 1});
  edges.push_back({3, 5, 1});
  Graph g(15, std::move(edges));
  g.attach_labels(*base.labels());
  return g;
}

inline Graph fig2() {
  // v1..v10 are 0..9; p1..p3 hang off v1, p4..p6 off v6
  std::vector<WeightedEdge> edges = {
      {0, 1, 1}, {0, 2, 1}, {0, 5, 1},               // v1 - v2, v3, v6
      {0, 10, 1}, {0, 11, 1}, {0, 12, 1},            // v1 pendants
      {5, 3, 1}, {5, 4, 1},                          // v6 - v4, v5
      {5, 13, 1}, {5, 14, 1}, {5, 15, 1},            // v6 pendants
      {1, 3, 1}, {1, 6, 1}, {1, 7, 1},               // v2 - v4, v7, v8
      {6, 7, 1}, {3, 7, 1}, {6, 3, 1},               // left K4 closes
      {2, 4, 1}, {2, 8, 1}, {2, 9, 1},               // v3 - v5, v9, v10
      {8, 4, 1}, {4, 9, 1}, {8, 9, 1},               // right K4 closes
  };
  Graph g(16, std::move(edges));
  g.attach_labels({"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9", "v10",
                   "p1", "p2", "p3", "p4", "p5", "p6"});
  return g;
}

inline Graph fig3() {
  // u1..u5 are 0..4; the seven peripheral vertices are a..g (5..11)
  std::vector<WeightedEdge> edges = {
      {0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1}, // u1 - u2, u3, u4, u5
      {1, 3, 1},                                  // u2 - u4
      {2, 4, 1},                                  // u3 - u5
      {5, 3, 1}, {5, 0, 1},                       // a - u4, a - u1
      {0, 6, 1}, {1, 6, 1},                       // b - u1, u2
      {0, 7, 1}, {1, 7, 1},                       // e - u1, u2
      {2, 8, 1}, {4, 8, 1},                       // c - u3, u5
      {2, 9, 1}, {4, 9, 1},                       // d - u3, u5
      {10, 11, 1}, {1, 10, 1}, {1, 11, 1},        // f - g, u2 - f, u2 - g
  };
  Graph g(12, std::move(edges));
  g.attach_labels({"u1", "u2", "u3", "u4", "u5", "a", "b", "e", "c", "d", "f", "g"});
  return g;
}

inline Graph fig5_exact() { return Graph::complete(5); }

/// K5 minus two edges sharing a vertex; still has upper-median weight 1.
inline Graph fig5_pseudo_a() {
  std::vector<WeightedEdge> edges = {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1},
                                     {1, 3, 1}, {2, 3, 1}, {2, 4, 1}, {3, 4, 1}};
  return Graph(5, std::move(edges));
}

/// K5 minus four edges; six unit pairs keep the upper median at 1.
inline Graph fig5_pseudo_b() {
  std::vector<WeightedEdge> edges = {{0, 1, 1}, {0, 2, 1}, {1, 2, 1},
                                     {1, 3, 1}, {1, 4, 1}, {3, 4, 1}};
  return Graph(5, std::move(edges));
}

inline Graph fig6_top() {
  std::vector<WeightedEdge> edges = {{0, 2, 120}, {0, 3, 1000}, {0, 4, 300},
                                     {1, 2, 400}, {2, 4, 200},  {3, 4, 225}};
  Graph g(5, std::move(edges));
  g.attach_labels({"a", "b", "c", "d", "e"});
  return g;
}

inline Graph fig6_bottom() {
  std::vector<WeightedEdge> edges = {{0, 1, 5},      {0, 2, 0.5}, {0, 3, 100},
                                     {1, 2, 70},     {1, 3, 6.99}, {2, 3, 500},
                                     {2, 4, 111.22}, {3, 4, 98}};
  Graph g(5, std::move(edges));
  g.attach_labels({"u", "v", "x", "y", "z"});
  return g;
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> kNames = {
      "fig1_G",       "fig1_Gprime",   "fig1_Gdoubleprime", "fig2",
      "fig3",         "fig5_exact",    "fig5_pseudo_a",     "fig5_pseudo_b",
      "fig6_top",     "fig6_bottom",
  };
  return kNames;
}

inline Graph by_name(std::string_view name) {
  if (name == "fig1_G") return fig1_G();
  if (name == "fig1_Gprime") return fig1_Gprime();
  if (name == "fig1_Gdoubleprime") return fig1_Gdoubleprime();
  if (name == "fig2") return fig2();
  if (name == "fig3") return fig3();
  if (name == "fig5_exact") return fig5_exact();
  if (name == "fig5_pseudo_a") return fig5_pseudo_a();
  if (name == "fig5_pseudo_b") return fig5_pseudo_b();
  if (name == "fig6_top") return fig6_top();
  if (name == "fig6_bottom") return fig6_bottom();
  throw Error("unknown fixture '" + std::string(name) + "'");
}

} // namespace cliquerich::fixtures
