// Acceptance suite: one criterion per function, one [PASS]/[FAIL] line each,
// nonzero exit when anything fails. Tolerances and limits are pinned in the
// checks themselves.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cliquerich/cliquerich.hpp"
#include "test_support.hpp"

using namespace cliquerich;
using Clock = std::chrono::steady_clock;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// --- criterion 1: fig1 fixtures, rich-club coefficients ----------------------

Check criterion_fig1() {
  Check c;
  const auto start = Clock::now();
  auto phi = [](const Graph& g) { return rich_club(g, 4).coefficient; };
  auto a = phi(fixtures::fig1_G());
  auto b = phi(fixtures::fig1_Gprime());
  auto d = phi(fixtures::fig1_Gdoubleprime());
  c.expect(a && *a == 0.0, "phi(G,4) != 0");
  c.expect(b && std::abs(*b - 1.0 / 3.0) <= 1e-12, "phi(G',4) != 1/3");
  c.expect(d && *d == 1.0, "phi(G'',4) != 1");
  c.expect(seconds_since(start) < 1.0, "runtime >= 1 s");
  return c;
}

// --- criterion 2: fig2 fixture, participation and super rich-club ------------

Check criterion_fig2() {
  Check c;
  Graph g = fixtures::fig2();
  auto table = exact_census(g, 3);
  const std::vector<int> super_set{1, 2, 3, 4, 6, 7, 8, 9}; // v2..v5, v7..v10
  for (int v = 0; v < g.order(); ++v) {
    const bool expected_member =
        std::find(super_set.begin(), super_set.end(), v) != super_set.end();
    c.expect(table.vertex_counts[v] == (expected_member ? 3u : 0u),
             "xi(" + g.label_of(v) + ",3) off");
  }
  auto club = super_rich_club(g, 3, 2, table);
  c.expect(club.members == super_set, "super rich-club members off");
  return c;
}

// --- criterion 3: fig3 fixture, edge participations and edge club ------------

Check criterion_fig3() {
  Check c;
  Graph g = fixtures::fig3();
  auto table = exact_census(g, 3);
  c.expect(table.edge_count_of(g, 0, 1) == 3, "xi({u1,u2},3) != 3");
  c.expect(table.edge_count_of(g, 2, 4) == 3, "xi({u3,u5},3) != 3");
  auto club = edge_club(g, 3, 2, table);
  c.expect(club.members == std::vector<int>({0, 1, 2, 4}),
           "edge-club member vertices off");
  return c;
}

// --- criterion 4: fig5/fig6 fixtures, medians and pseudo classification ------

Check criterion_fig56() {
  Check c;
  const std::vector<int> all{0, 1, 2, 3, 4};
  c.expect(median_pair_weight(fixtures::fig6_top(), all) == 200.0,
           "fig6 top median != 200");
  c.expect(median_pair_weight(fixtures::fig6_bottom(), all) == 70.0,
           "fig6 bottom median != 70");
  c.expect(pseudo_census(fixtures::fig6_top(), 5, 200.0).total == 1,
           "fig6 top not accepted at w=200");
  c.expect(pseudo_census(fixtures::fig6_bottom(), 5, 200.0).total == 0,
           "fig6 bottom not rejected at w=200");
  c.expect(pseudo_census(fixtures::fig5_pseudo_a(), 5, 1.0).total == 1,
           "fig5 pseudo (a) fails at w=1");
  c.expect(pseudo_census(fixtures::fig5_pseudo_b(), 5, 1.0).total == 1,
           "fig5 pseudo (b) fails at w=1");
  return c;
}

// --- criterion 5: identity suite ---------------------------------------------

Check criterion_identities() {
  Check c;
  const auto start = Clock::now();
  int graphs = 0;
  for (std::uint64_t seed = 1; graphs < 200; ++seed, ++graphs) {
    const int n = 6 + static_cast<int>(seed % 9); // 6..14
    Graph g = testsupport::random_weighted_graph(seed, n, 0.45);
    for (int k : {3, 4, 5}) {
      if (k > n) continue;
      auto t = exact_census(g, k);
      std::uint64_t vsum = std::accumulate(t.vertex_counts.begin(),
                                           t.vertex_counts.end(), std::uint64_t{0});
      std::uint64_t esum = std::accumulate(t.edge_counts.begin(),
                                           t.edge_counts.end(), std::uint64_t{0});
      c.expect(vsum == static_cast<std::uint64_t>(k) * t.total, "vertex handshake");
      c.expect(esum == binom(k, 2) * t.total, "edge handshake");
    }
    auto degrees = exact_census(g, 2);
    for (int v = 0; v < n; ++v)
      c.expect(degrees.vertex_counts[v] == static_cast<std::uint64_t>(g.degree(v)),
               "xi(v,2) != degree");
    for (int j = 0; j < n; ++j) {
      auto rc = rich_club(g, j);
      auto sc = super_rich_club(g, 2, j, degrees);
      c.expect(rc.coefficient.has_value() == sc.coefficient.has_value(),
               "phi/c definedness mismatch");
      if (rc.coefficient && *rc.coefficient != *sc.coefficient)
        c.expect(false, "c(G,2,j) != phi(G,j)");
    }
    if (!c.ok) break;
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 30.0, "runtime >= 30 s");
  c.note("200 graphs in " + std::to_string(elapsed) + " s");
  return c;
}

// --- criterion 6: oracle equivalence -----------------------------------------

Check criterion_oracle() {
  Check c;
  const auto start = Clock::now();
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const int n = 8 + static_cast<int>(seed % 5); // 8..12
    const bool weighted = seed % 2 == 0;
    Graph g = weighted ? testsupport::random_weighted_graph(seed, n, 0.45)
                       : testsupport::random_graph(seed, n, 0.45);
    testsupport::Xorshift rng(seed * 1337);
    const int k = 3 + static_cast<int>(rng.below(3));
    const double w = weighted ? static_cast<double>(rng.below(11)) : 1.0;
    if (exact_census(g, k) != brute_force_census(g, k, CensusMode::exact)) {
      c.expect(false, "exact mismatch at seed " + std::to_string(seed));
      break;
    }
    if (pseudo_census(g, k, w) != brute_force_census(g, k, CensusMode::pseudo, w)) {
      c.expect(false, "pseudo mismatch at seed " + std::to_string(seed));
      break;
    }
  }
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 60.0, "runtime >= 60 s");
  c.note("100 graphs in " + std::to_string(elapsed) + " s");
  return c;
}

// --- criterion 7: default percentile schedule --------------------------------

Check criterion_schedule() {
  Check c;
  const std::vector<double> pinned{50.0,      50.0,      75.0,      87.5,
                                      93.75,     96.875,    98.4375,   99.21875,
                                      99.609375, 99.8046875};
  c.expect(PercentileSchedule::default_schedule().entries == pinned,
           "default schedule differs from the pinned ladder");
  return c;
}

// --- criterion 8: pipeline properties ----------------------------------------

Check criterion_pipeline() {
  Check c;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const int n = 10 + static_cast<int>(seed % 31); // 10..40
    Graph g = testsupport::random_weighted_graph(seed, n, 0.35);
    if (g.edge_count() == 0) continue;
    auto trace = run_pipeline(g, 5);
    c.expect(trace.iterations.size() <= 10, "more than 10 iterations");
    std::size_t previous = g.edge_count();
    for (const auto& rec : trace.iterations) {
      c.expect(rec.surviving_edges <= previous, "edge sets not nested");
      previous = rec.surviving_edges;
    }
    if (!c.ok) {
      c.note("seed " + std::to_string(seed));
      break;
    }
  }
  // two disjoint K6s plus 20 isolated chaff vertices
  std::vector<WeightedEdge> edges;
  for (int base : {0, 6})
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v) edges.push_back({base + u, base + v, 1.0});
  auto trace = run_pipeline(Graph(32, std::move(edges)), 5);
  std::vector<int> expected(12);
  std::iota(expected.begin(), expected.end(), 0);
  c.expect(trace.supernodes == expected, "two-K6 supernodes are not the 12 clique vertices");
  return c;
}

// --- criterion 9: swap-distance oracle ----------------------------------------

std::uint64_t bubble_swap_count(std::vector<int> a, const std::vector<int>& b) {
  std::vector<int> position(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) position[b[i]] = static_cast<int>(i);
  std::uint64_t swaps = 0;
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (std::size_t i = 0; i + 1 < a.size(); ++i)
      if (position[a[i]] > position[a[i + 1]]) {
        std::swap(a[i], a[i + 1]);
        ++swaps;
        dirty = true;
      }
  }
  return swaps;
}

Check criterion_swap_distance() {
  Check c;
  for (int n = 1; n <= 7 && c.ok; ++n) {
    std::vector<int> p(n), id(n);
    std::iota(p.begin(), p.end(), 0);
    std::iota(id.begin(), id.end(), 0);
    do {
      if (swap_distance(p, id) != bubble_swap_count(p, id)) {
        c.expect(false, "bubble-sort oracle mismatch at n=" + std::to_string(n));
        break;
      }
    } while (std::next_permutation(p.begin(), p.end()));
  }
  testsupport::Xorshift rng(2718);
  auto random_perm = [&rng](int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
    return p;
  };
  for (int trial = 0; trial < 1000 && c.ok; ++trial) {
    const int n = 2 + rng.below(10);
    auto a = random_perm(n), b = random_perm(n), d = random_perm(n);
    c.expect(swap_distance(a, b) == swap_distance(b, a), "symmetry");
    c.expect(swap_distance(a, a) == 0, "identity");
    if (a != b) c.expect(swap_distance(a, b) > 0, "indiscernibles");
    c.expect(swap_distance(a, d) <= swap_distance(a, b) + swap_distance(b, d),
             "triangle inequality");
  }
  return c;
}

// --- criterion 10: experiment harness ------------------------------------------

Check criterion_experiment() {
  Check c;
  const std::vector<int> orders{50, 100, 200};
  const std::vector<double> densities{0.25, 0.5, 0.75, 0.9};

  ExperimentRecipe recipe;
  recipe.family = GenFamily::ws;
  recipe.orders = orders;
  recipe.densities = densities;
  recipe.samples = 10;
  recipe.k = 3;
  recipe.beta = 0.1;
  recipe.club_fraction = 0.2;

  const auto start = Clock::now();
  recipe.seed = 1;
  auto first = run_experiment(recipe);
  const double grid_seconds = seconds_since(start);
  c.expect(first.summaries.size() == 12, "expected 12 cells");
  c.expect(grid_seconds < 600.0, "grid runtime >= 10 min");
  for (const auto& cell : first.summaries)
    c.expect(std::isfinite(cell.swap_mean) && std::isfinite(cell.swap_sd),
             "mu/sigma not emitted");

  // qualitative trend, averaged over 5 seeds: the common-member proportion
  // is weakly increasing in density within each order
  std::map<std::pair<int, double>, double> avg;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    recipe.seed = seed;
    auto result = seed == 1 ? std::move(first) : run_experiment(recipe);
    for (const auto& cell : result.summaries)
      avg[{cell.cell.n, cell.cell.density}] +=
          cell.mean_common_over_r.value_or(0.0) / 5.0;
  }
  for (int n : orders) {
    for (std::size_t d = 0; d + 1 < densities.size(); ++d) {
      const double lo = avg[{n, densities[d]}];
      const double hi = avg[{n, densities[d + 1]}];
      std::ostringstream msg;
      msg << "proportion not weakly increasing at n=" << n << ": p(" << densities[d]
          << ")=" << lo << " > p(" << densities[d + 1] << ")=" << hi;
      c.expect(lo <= hi + 1e-12, msg.str());
    }
    c.expect(avg[{n, densities.back()}] > 0.5,
             "degenerate overlap proportions at n=" + std::to_string(n));
  }
  c.note("grid in " + std::to_string(grid_seconds) + " s");
  return c;
}

// --- criterion 11: census performance and scaling --------------------------------

Check criterion_performance() {
  Check c;
  GenSpec spec;
  spec.family = GenFamily::er;
  spec.n = 100;
  spec.target_density = 0.5;
  spec.seed = 20260808;
  Graph g = gen_er(spec);

  const auto t1 = Clock::now();
  auto single = exact_census(g, 5, 1);
  const double single_seconds = seconds_since(t1);
  c.expect(single_seconds < 60.0, "single-threaded census >= 60 s");

  const auto t4 = Clock::now();
  auto quad = exact_census(g, 5, 4);
  const double quad_seconds = seconds_since(t4);
  c.expect(quad == single, "4-worker output differs from single-threaded");

  std::ostringstream timing;
  timing << "1 worker " << single_seconds << " s, 4 workers " << quad_seconds << " s";
  if (std::thread::hardware_concurrency() >= 4) {
    c.expect(single_seconds / quad_seconds >= 2.5,
             "speedup below 2.5x on 4 workers (" + timing.str() + ")");
    c.note(timing.str());
  } else {
    c.note("speedup check skipped: only " +
           std::to_string(std::thread::hardware_concurrency()) +
           " hardware thread(s) on this host; " + timing.str());
  }
  return c;
}

} // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria{
      {"1 fig1 fixtures: rich-club coefficients 0, 1/3, 1", criterion_fig1},
      {"2 fig2 fixture: vertex participation and super rich-club members", criterion_fig2},
      {"3 fig3 fixture: edge participations and edge-club members", criterion_fig3},
      {"4 fig5/fig6 fixtures: medians and pseudo classification", criterion_fig56},
      {"5 handshake and degree identities on 200 seeded graphs", criterion_identities},
      {"6 oracle equivalence on 100 seeded graphs", criterion_oracle},
      {"7 default percentile schedule matches the pinned ladder", criterion_schedule},
      {"8 pipeline nesting, termination and two-K6 supernodes", criterion_pipeline},
      {"9 swap distance vs bubble-sort oracle and metric axioms", criterion_swap_distance},
      {"10 experiment grid under 10 min with increasing overlap trend", criterion_experiment},
      {"11 exact census k=5 on G(100, 0.5): time and worker determinism", criterion_performance},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    Check result;
    try {
      result = criterion.run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    std::printf("[%s] criterion %s%s%s\n", result.ok ? "PASS" : "FAIL",
                criterion.name, result.detail.empty() ? "" : " -- ",
                result.detail.c_str());
    std::fflush(stdout);
    if (!result.ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
