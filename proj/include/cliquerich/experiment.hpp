#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "cliquerich/io.hpp"
#include "cliquerich/rank.hpp"

namespace cliquerich {

/**
 * Declarative description of a comparison experiment: a grid of
 * (order x density) cells, N seeded samples each. Club sizes default to a
 * fifth of the order; an explicit club_sizes list (parallel to n) overrides.
 */
struct ExperimentRecipe {
  GenFamily family = GenFamily::ws;
  std::vector<int> orders;
  std::vector<double> densities;
  int samples = 0; // N
  int k = 3;
  std::uint64_t seed = 0;
  double beta = 0.1;
  double club_fraction = 0.2;
  std::vector<std::size_t> club_sizes; // optional, parallel to orders
};

inline ExperimentRecipe parse_recipe(const json& j) {
  ExperimentRecipe r;
  if (!j.contains("family") || !j.contains("n") || !j.contains("density") ||
      !j.contains("N") || !j.contains("seed"))
    throw Error("recipe must declare family, n, density, N and seed");
  const auto family = j.at("family").get<std::string>();
  if (family == "er")
    r.family = GenFamily::er;
  else if (family == "ws")
    r.family = GenFamily::ws;
  else
    throw Error("recipe family must be 'er' or 'ws'");
  j.at("n").get_to(r.orders);
  j.at("density").get_to(r.densities);
  j.at("N").get_to(r.samples);
  j.at("seed").get_to(r.seed);
  r.k = j.value("k", 3);
  r.beta = j.value("beta", 0.1);
  r.club_fraction = j.value("club_fraction", 0.2);
  if (j.contains("club_sizes")) j.at("club_sizes").get_to(r.club_sizes);

  if (r.orders.empty() || r.densities.empty())
    throw Error("recipe needs at least one order and one density");
  if (r.samples < 1) throw Error("recipe needs N >= 1 samples");
  if (r.k < 2) throw Error("recipe needs k >= 2");
  if (!r.club_sizes.empty() && r.club_sizes.size() != r.orders.size())
    throw Error("club_sizes must be parallel to n");
  for (double d : r.densities)
    if (!(d > 0.0) || d > 1.0) throw Error("recipe densities must lie in (0, 1]");
  return r;
}

inline std::vector<ExperimentCell> recipe_cells(const ExperimentRecipe& r) {
  std::vector<ExperimentCell> cells;
  cells.reserve(r.orders.size() * r.densities.size());
  for (std::size_t ni = 0; ni < r.orders.size(); ++ni) {
    const std::size_t target =
        !r.club_sizes.empty()
            ? r.club_sizes[ni]
            : static_cast<std::size_t>(
                  std::lround(r.club_fraction * r.orders[ni]));
    for (double d : r.densities) {
      ExperimentCell cell;
      cell.family = r.family;
      cell.n = r.orders[ni];
      cell.density = d;
      cell.beta = r.beta;
      cell.samples = r.samples;
      cell.k = r.k;
      cell.club_target = target;
      // stream keyed by the cell coordinates, so adding cells never
      // perturbs the samples of the others
      cell.seed = SplitMix64::derive(
          r.seed, static_cast<std::uint64_t>(ni) * 1000003ull +
                      std::hash<double>{}(d));
      cells.push_back(cell);
    }
  }
  return cells;
}

struct ExperimentResult {
  std::vector<CellSummary> summaries; // empty when N == 1
  std::vector<CellSummary> per_sample; // always filled, one entry per cell
};

/// Runs the whole grid. With N >= 2 the Table-style summary (mean/sd) is
/// produced; a single-sample recipe yields the per-sample report only.
inline ExperimentResult run_experiment(const ExperimentRecipe& recipe, int workers = 1) {
  auto cells = recipe_cells(recipe);
  ExperimentResult result;
  if (recipe.samples >= 2) {
    result.summaries = batch_experiment(cells, workers);
    result.per_sample = result.summaries;
  } else {
    for (const auto& cell : cells) {
      CellSummary summary;
      summary.cell = cell;
      SampleResult sample = run_sample(cell, SplitMix64::derive(cell.seed, 0), workers);
      summary.swap_mean = static_cast<double>(sample.swap_distance);
      summary.swap_sd = 0.0;
      summary.mean_common_over_r = sample.common_over_r;
      summary.mean_common_over_s = sample.common_over_s;
      summary.samples.push_back(std::move(sample));
      result.per_sample.push_back(std::move(summary));
    }
  }
  return result;
}

} // namespace cliquerich
