// cliquerich: participation censuses, club coefficients and the SUpernode
// pipeline over simple weighted graphs, plus generators and experiment
// harness. See README.md for the report formats.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cliquerich/cliquerich.hpp"

namespace {

using namespace cliquerich;

/// Missing or inconsistent flags: exit 1, unlike data errors which exit 2.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct CommonArgs {
  std::string input;
  std::string fixture;
  std::string format = "edgelist";
  std::string labels_path;
  std::string out;
  std::string output_format = "json";
  int workers = 1;
};

void add_input_options(CLI::App* cmd, CommonArgs& args) {
  auto* input = cmd->add_option("--input,-i", args.input, "input graph file");
  auto* fixture =
      cmd->add_option("--fixture", args.fixture,
                      "built-in fixture name (see the fixtures subcommand)");
  input->excludes(fixture);
  cmd->add_option("--format", args.format, "input format")
      ->check(CLI::IsMember({"edgelist", "matrix"}));
  cmd->add_option("--labels", args.labels_path,
                  "file with one vertex label per line");
}

void add_output_options(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--out,-o", args.out, "write the report here instead of stdout");
  cmd->add_option("--output-format", args.output_format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));
}

void add_worker_option(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--workers", args.workers, "parallel census workers")
      ->check(CLI::PositiveNumber);
}

int env_workers() {
  if (const char* env = std::getenv("CLIQUERICH_WORKERS")) {
    int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const CommonArgs& args) {
  Graph g;
  if (!args.fixture.empty()) {
    g = fixtures::by_name(args.fixture);
  } else if (!args.input.empty()) {
    const std::string text = read_file(args.input);
    g = args.format == "matrix" ? Graph::from_dense_matrix(text)
                                : Graph::from_edge_list(text);
  } else {
    throw Error("no input: pass --input or --fixture");
  }
  if (!args.labels_path.empty()) {
    std::vector<std::string> labels;
    std::istringstream in(read_file(args.labels_path));
    for (std::string line; std::getline(in, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) labels.push_back(line);
    }
    g.attach_labels(std::move(labels));
  }
  return g;
}

void write_report(const CommonArgs& args, const std::string& text) {
  if (args.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(args.out, std::ios::binary);
  if (!out) throw Error("cannot write '" + args.out + "'");
  out << text;
}

void write_json(const CommonArgs& args, const json& j) {
  write_report(args, j.dump(2) + "\n");
}

ParticipationTable compute_table(const Graph& g, int k, const std::string& mode,
                                 double threshold, int workers) {
  if (mode == "pseudo") return pseudo_census(g, k, threshold, workers);
  return exact_census(g, k, workers);
}

PercentileSchedule load_schedule(const std::string& path) {
  if (path.empty()) return PercentileSchedule::default_schedule();
  PercentileSchedule schedule;
  json j = json::parse(read_file(path));
  schedule.entries = j.get<std::vector<double>>();
  if (schedule.entries.empty()) throw Error("schedule file holds no percentiles");
  return schedule;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"participation censuses, rich clubs and SUpernodes on simple "
               "weighted graphs"};
  app.require_subcommand(1);

  CommonArgs args;
  args.workers = env_workers();

  // density
  auto* density_cmd = app.add_subcommand("density", "graph density");
  add_input_options(density_cmd, args);
  add_output_options(density_cmd, args);

  // census
  int census_k = 3;
  std::string census_mode = "exact";
  double census_threshold = 0.0;
  auto* census_cmd =
      app.add_subcommand("census", "vertex and edge participation counts");
  add_input_options(census_cmd, args);
  add_output_options(census_cmd, args);
  add_worker_option(census_cmd, args);
  census_cmd->add_option("-k", census_k, "subgraph order")->check(CLI::Range(2, 1 << 20));
  census_cmd->add_option("--mode", census_mode, "census mode")
      ->check(CLI::IsMember({"exact", "pseudo"}));
  census_cmd->add_option("--pseudo-threshold,-w", census_threshold,
                         "median pair-weight threshold (pseudo mode)");

  // rich-club
  std::int64_t club_j = 0;
  std::optional<std::size_t> club_target;
  auto* rich_cmd = app.add_subcommand("rich-club", "vertices of degree > j");
  add_input_options(rich_cmd, args);
  add_output_options(rich_cmd, args);
  auto* rich_j = rich_cmd->add_option("-j", club_j, "degree threshold");
  auto* rich_target = rich_cmd->add_option(
      "--target-size", club_target, "choose j so the club size comes closest");
  rich_j->excludes(rich_target);

  // super-rich-club
  int super_k = 3;
  std::string super_mode = "exact";
  double super_threshold = 0.0;
  auto* super_cmd = app.add_subcommand(
      "super-rich-club", "vertices with participation xi(v,k) > j");
  add_input_options(super_cmd, args);
  add_output_options(super_cmd, args);
  add_worker_option(super_cmd, args);
  super_cmd->add_option("-k", super_k, "subgraph order")->check(CLI::Range(2, 1 << 20));
  auto* super_j = super_cmd->add_option("-j", club_j, "participation threshold");
  auto* super_target = super_cmd->add_option(
      "--target-size", club_target, "choose j so the club size comes closest");
  super_j->excludes(super_target);
  super_cmd->add_option("--mode", super_mode, "census mode")
      ->check(CLI::IsMember({"exact", "pseudo"}));
  super_cmd->add_option("--pseudo-threshold,-w", super_threshold,
                        "median pair-weight threshold (pseudo mode)");
  double weight_cutoff = 0.0;
  super_cmd->add_option("--weight-cutoff,-t", weight_cutoff,
                        "weight cutoff for the weighted participation "
                        "coefficient denominator (default 0)");

  // edge-club
  int edge_k = 3;
  auto* edge_cmd =
      app.add_subcommand("edge-club", "edges with participation xi(e,k) > j");
  add_input_options(edge_cmd, args);
  add_output_options(edge_cmd, args);
  add_worker_option(edge_cmd, args);
  edge_cmd->add_option("-k", edge_k, "subgraph order")->check(CLI::Range(2, 1 << 20));
  auto* edge_j = edge_cmd->add_option("-j", club_j, "participation threshold");
  auto* edge_target = edge_cmd->add_option(
      "--target-size", club_target,
      "choose j so the edge-club size comes closest");
  edge_j->excludes(edge_target);

  // supernodes
  int pipe_k = 5;
  std::string schedule_path;
  std::string trace_csv_path;
  bool hard_cut = false;
  auto* super_nodes_cmd = app.add_subcommand(
      "supernodes", "iterative pseudo-census thresholding pipeline");
  add_input_options(super_nodes_cmd, args);
  add_output_options(super_nodes_cmd, args);
  add_worker_option(super_nodes_cmd, args);
  super_nodes_cmd->add_option("-k", pipe_k, "subgraph order")
      ->check(CLI::Range(2, 1 << 20));
  super_nodes_cmd->add_option("--schedule", schedule_path,
                              "JSON array of percentiles overriding the default");
  super_nodes_cmd->add_option("--trace-csv", trace_csv_path,
                              "also write the per-iteration participation matrix");
  super_nodes_cmd->add_flag(
      "--hard-percentile-cut", hard_cut,
      "additionally cut each new graph at its (100-P)th participation percentile");

  // gen
  GenSpec gen_spec;
  std::string gen_family = "er";
  bool seed_given = false;
  auto* gen_cmd = app.add_subcommand("gen", "seeded random graph generators");
  add_output_options(gen_cmd, args);
  gen_cmd->add_option("--family", gen_family, "er or ws")
      ->check(CLI::IsMember({"er", "ws"}));
  gen_cmd->add_option("-n", gen_spec.n, "vertex count")->required();
  gen_cmd->add_option("--density", gen_spec.target_density, "target density")
      ->required();
  gen_cmd->add_option("--beta", gen_spec.rewiring_beta,
                      "ws rewiring probability (default 0.1)");
  gen_cmd->add_option_function<std::uint64_t>(
             "--seed",
             [&](const std::uint64_t& s) {
               gen_spec.seed = s;
               seed_given = true;
             },
             "generator seed (required: no silent entropy)")
      ->required();

  // compare
  int compare_k = 3;
  std::optional<std::int64_t> compare_j, compare_jp;
  auto* compare_cmd = app.add_subcommand(
      "compare", "degree ranking and club versus participation ranking and club");
  add_input_options(compare_cmd, args);
  add_output_options(compare_cmd, args);
  add_worker_option(compare_cmd, args);
  compare_cmd->add_option("-k", compare_k, "subgraph order")
      ->check(CLI::Range(2, 1 << 20));
  compare_cmd->add_option("-j", compare_j, "degree threshold for R");
  compare_cmd->add_option("--j-prime", compare_jp, "participation threshold for S");
  compare_cmd->add_option("--target-size", club_target,
                          "choose thresholds so |R| (and then |S|) come closest");

  // experiment
  std::string recipe_path;
  std::string out_prefix = "experiment";
  bool experiment_seed_given = true; // seed lives in the recipe
  auto* exp_cmd = app.add_subcommand("experiment", "run a JSON recipe grid");
  add_worker_option(exp_cmd, args);
  exp_cmd->add_option("--recipe", recipe_path, "recipe JSON file")->required();
  exp_cmd->add_option("--out-prefix", out_prefix,
                      "prefix for <prefix>_summary.csv, <prefix>_samples.csv, "
                      "<prefix>.json");

  // fixtures
  std::string fixture_name;
  std::string fixture_emit = "edgelist";
  auto* fixtures_cmd =
      app.add_subcommand("fixtures", "list built-in graphs or dump one");
  add_output_options(fixtures_cmd, args);
  fixtures_cmd->add_option("--name", fixture_name, "fixture to dump");
  fixtures_cmd->add_option("--emit", fixture_emit, "dump format")
      ->check(CLI::IsMember({"edgelist", "matrix"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1; // usage errors exit 1
  }

  (void)seed_given;
  (void)experiment_seed_given;

  try {
    if (density_cmd->parsed()) {
      Graph g = load_graph(args);
      json j{{"n", g.order()}, {"edges", g.edge_count()}, {"density", g.density()}};
      write_json(args, j);
    } else if (census_cmd->parsed()) {
      Graph g = load_graph(args);
      ParticipationTable table =
          compute_table(g, census_k, census_mode, census_threshold, args.workers);
      if (args.output_format == "csv")
        write_report(args, participation_csv(g, table));
      else
        write_json(args, participation_json(table, g));
    } else if (rich_cmd->parsed()) {
      Graph g = load_graph(args);
      if (club_target) {
        std::vector<std::uint64_t> degrees(g.order());
        for (int v = 0; v < g.order(); ++v)
          degrees[v] = static_cast<std::uint64_t>(g.degree(v));
        club_j = select_threshold_for_size(degrees, *club_target);
      } else if (rich_j->count() == 0) {
        throw UsageError("rich-club needs -j or --target-size");
      }
      ClubReport report = rich_club(g, club_j);
      if (args.output_format == "csv")
        write_report(args, club_csv(g, report));
      else
        write_json(args, club_report_json(report, g));
    } else if (super_cmd->parsed()) {
      Graph g = load_graph(args);
      ParticipationTable table =
          compute_table(g, super_k, super_mode, super_threshold, args.workers);
      if (club_target)
        club_j = select_threshold_for_size(table.vertex_counts, *club_target);
      else if (super_j->count() == 0)
        throw UsageError("super-rich-club needs -j or --target-size");
      ClubReport report = super_rich_club(g, super_k, club_j, table);
      if (args.output_format == "csv") {
        write_report(args, club_csv(g, report));
      } else {
        json j = club_report_json(report, g);
        j["weighted_coefficient"] = detail::optional_to_json(
            weighted_participation_coefficient(g, report.members, weight_cutoff));
        j["weight_cutoff"] = weight_cutoff;
        write_json(args, j);
      }
    } else if (edge_cmd->parsed()) {
      Graph g = load_graph(args);
      ParticipationTable table = exact_census(g, edge_k, args.workers);
      if (club_target)
        club_j = select_threshold_for_size(table.edge_counts, *club_target);
      else if (edge_j->count() == 0)
        throw UsageError("edge-club needs -j or --target-size");
      ClubReport report = edge_club(g, edge_k, club_j, table);
      if (args.output_format == "csv")
        write_report(args, club_csv(g, report));
      else
        write_json(args, club_report_json(report, g));
    } else if (super_nodes_cmd->parsed()) {
      Graph g = load_graph(args);
      PipelineOptions options;
      options.workers = args.workers;
      options.hard_percentile_cut = hard_cut;
      PipelineTrace trace = run_pipeline(g, pipe_k, load_schedule(schedule_path), options);
      if (!trace_csv_path.empty()) {
        std::ofstream out(trace_csv_path, std::ios::binary);
        if (!out) throw Error("cannot write '" + trace_csv_path + "'");
        out << trace_csv(trace, &g);
      }
      if (args.output_format == "csv")
        write_report(args, trace_csv(trace, &g));
      else
        write_json(args, json(trace));
    } else if (gen_cmd->parsed()) {
      gen_spec.family = gen_family == "er" ? GenFamily::er : GenFamily::ws;
      Graph g = generate(gen_spec);
      std::vector<std::string> header = {json(gen_spec).dump()};
      write_report(args, g.to_edge_list(header));
    } else if (compare_cmd->parsed()) {
      if (!compare_j && !club_target)
        throw UsageError("compare needs -j or --target-size");
      Graph g = load_graph(args);
      CompareOptions options;
      options.degree_threshold = compare_j;
      options.participation_threshold = compare_jp;
      options.target_size = club_target;
      options.workers = args.workers;
      RankComparison cmp = compare_degree_vs_participation(g, compare_k, options);
      if (args.output_format == "csv")
        write_report(args, rank_comparison_csv(cmp));
      else
        write_json(args, json(cmp));
    } else if (exp_cmd->parsed()) {
      ExperimentRecipe recipe = parse_recipe(json::parse(read_file(recipe_path)));
      ExperimentResult result = run_experiment(recipe, args.workers);
      const auto& rows = result.summaries.empty() ? result.per_sample : result.summaries;
      auto write_file = [](const std::string& path, const std::string& text) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("cannot write '" + path + "'");
        out << text;
      };
      write_file(out_prefix + "_summary.csv", experiment_summary_csv(rows));
      write_file(out_prefix + "_samples.csv", experiment_samples_csv(rows));
      json j;
      j["cells"] = rows;
      write_file(out_prefix + ".json", j.dump(2) + "\n");
      std::cout << "wrote " << out_prefix << "_summary.csv, " << out_prefix
                << "_samples.csv, " << out_prefix << ".json\n";
    } else if (fixtures_cmd->parsed()) {
      if (fixture_name.empty()) {
        std::string listing;
        for (const auto& name : fixtures::names()) listing += name + "\n";
        write_report(args, listing);
      } else {
        Graph g = fixtures::by_name(fixture_name);
        write_report(args, fixture_emit == "matrix" ? g.to_dense_matrix()
                                                    : g.to_edge_list());
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
