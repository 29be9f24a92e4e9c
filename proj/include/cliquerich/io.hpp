#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliquerich/census.hpp"
#include "cliquerich/clubs.hpp"
#include "cliquerich/graph.hpp"
#include "cliquerich/netgen.hpp"
#include "cliquerich/pipeline.hpp"
#include "cliquerich/rank.hpp"

namespace cliquerich {

using json = nlohmann::json;

// ---- JSON ------------------------------------------------------------

namespace detail {

inline json optional_to_json(const std::optional<double>& v) {
  if (!v) return json("undefined");
  return json(*v);
}

inline std::optional<double> optional_from_json(const json& j) {
  if (j.is_string()) return std::nullopt;
  return j.get<double>();
}

} // namespace detail

inline void to_json(json& j, const WeightedEdge& e) {
  j = json{{"u", e.u}, {"v", e.v}, {"weight", e.weight}};
}

inline void from_json(const json& j, WeightedEdge& e) {
  j.at("u").get_to(e.u);
  j.at("v").get_to(e.v);
  j.at("weight").get_to(e.weight);
}

inline void to_json(json& j, const ParticipationTable& t) {
  j = json{{"k", t.k},
           {"mode", t.mode == CensusMode::exact ? "exact" : "pseudo"},
           {"total", t.total},
           {"vertex_counts", t.vertex_counts},
           {"graph_digest", t.graph_digest}};
  if (t.mode == CensusMode::pseudo) j["threshold"] = t.threshold;
  j["edge_counts"] = t.edge_counts;
}

inline void from_json(const json& j, ParticipationTable& t) {
  j.at("k").get_to(t.k);
  t.mode = j.at("mode").get<std::string>() == "exact" ? CensusMode::exact
                                                      : CensusMode::pseudo;
  t.threshold = j.value("threshold", 0.0);
  j.at("total").get_to(t.total);
  j.at("vertex_counts").get_to(t.vertex_counts);
  j.at("edge_counts").get_to(t.edge_counts);
  j.at("graph_digest").get_to(t.graph_digest);
}

inline void to_json(json& j, const ClubReport& r) {
  j = json{{"kind", to_string(r.kind)},
           {"k", r.k},
           {"threshold", r.threshold},
           {"n", r.n},
           {"members", r.members},
           {"member_edges", r.member_edges},
           {"coefficient", detail::optional_to_json(r.coefficient)}};
}

inline void from_json(const json& j, ClubReport& r) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "rich-club")
    r.kind = ClubKind::rich_club;
  else if (kind == "super-rich-club")
    r.kind = ClubKind::super_rich_club;
  else if (kind == "rich-edge-club")
    r.kind = ClubKind::rich_edge_club;
  else
    throw Error("unknown club kind '" + kind + "'");
  j.at("k").get_to(r.k);
  j.at("threshold").get_to(r.threshold);
  j.at("n").get_to(r.n);
  j.at("members").get_to(r.members);
  j.at("member_edges").get_to(r.member_edges);
  r.coefficient = detail::optional_from_json(j.at("coefficient"));
}

/// ParticipationTable JSON augmented with per-edge records carrying their
/// endpoints, for human-facing output. Parsing back ignores the extras.
inline json participation_json(const ParticipationTable& t, const Graph& g) {
  json j = t;
  json records = json::array();
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    records.push_back({{"u", edges[i].u},
                       {"v", edges[i].v},
                       {"count", t.edge_counts[i]}});
  j["edge_records"] = records;
  return j;
}

/// ClubReport JSON with label names resolved, for human-facing output.
inline json club_report_json(const ClubReport& r, const Graph& g) {
  json j = r;
  if (g.labels()) {
    std::vector<std::string> named;
    named.reserve(r.members.size());
    for (int v : r.members) named.push_back(g.label_of(v));
    j["member_labels"] = named;
  }
  return j;
}

inline void to_json(json& j, const IterationRecord& r) {
  j = json{{"iteration", r.iteration},
           {"graph_index", r.graph_index},
           {"percentile", r.percentile},
           {"threshold", r.threshold},
           {"pseudo_total", r.pseudo_total},
           {"surviving_edges", r.surviving_edges},
           {"vertex_counts", r.vertex_counts}};
}

inline void from_json(const json& j, IterationRecord& r) {
  j.at("iteration").get_to(r.iteration);
  j.at("graph_index").get_to(r.graph_index);
  j.at("percentile").get_to(r.percentile);
  j.at("threshold").get_to(r.threshold);
  j.at("pseudo_total").get_to(r.pseudo_total);
  j.at("surviving_edges").get_to(r.surviving_edges);
  j.at("vertex_counts").get_to(r.vertex_counts);
}

inline void to_json(json& j, const PipelineTrace& t) {
  j = json{{"k", t.k},
           {"n", t.n},
           {"iterations", t.iterations},
           {"supernodes", t.supernodes},
           {"halt_reason", to_string(t.halt_reason)}};
}

inline void from_json(const json& j, PipelineTrace& t) {
  j.at("k").get_to(t.k);
  j.at("n").get_to(t.n);
  j.at("iterations").get_to(t.iterations);
  j.at("supernodes").get_to(t.supernodes);
  t.halt_reason = j.at("halt_reason").get<std::string>() == "converged"
                      ? HaltReason::converged
                      : HaltReason::schedule_exhausted;
}

inline void to_json(json& j, const OverlapReport& o) {
  j = json{{"size_a", o.size_a},
           {"size_b", o.size_b},
           {"size_common", o.size_common},
           {"common_over_a", detail::optional_to_json(o.common_over_a)},
           {"common_over_b", detail::optional_to_json(o.common_over_b)},
           {"only_a_over_a", detail::optional_to_json(o.only_a_over_a)},
           {"only_b_over_b", detail::optional_to_json(o.only_b_over_b)}};
}

inline void from_json(const json& j, OverlapReport& o) {
  j.at("size_a").get_to(o.size_a);
  j.at("size_b").get_to(o.size_b);
  j.at("size_common").get_to(o.size_common);
  o.common_over_a = detail::optional_from_json(j.at("common_over_a"));
  o.common_over_b = detail::optional_from_json(j.at("common_over_b"));
  o.only_a_over_a = detail::optional_from_json(j.at("only_a_over_a"));
  o.only_b_over_b = detail::optional_from_json(j.at("only_b_over_b"));
}

inline void to_json(json& j, const RankComparison& c) {
  j = json{{"ranking_by_degree", c.ranking_by_degree},
           {"ranking_by_participation", c.ranking_by_participation},
           {"swap_distance", c.swap_distance},
           {"degree_threshold", c.degree_threshold},
           {"participation_threshold", c.participation_threshold},
           {"set_r", c.set_r},
           {"set_s", c.set_s},
           {"overlap", c.overlap}};
}

inline void from_json(const json& j, RankComparison& c) {
  j.at("ranking_by_degree").get_to(c.ranking_by_degree);
  j.at("ranking_by_participation").get_to(c.ranking_by_participation);
  j.at("swap_distance").get_to(c.swap_distance);
  j.at("degree_threshold").get_to(c.degree_threshold);
  j.at("participation_threshold").get_to(c.participation_threshold);
  j.at("set_r").get_to(c.set_r);
  j.at("set_s").get_to(c.set_s);
  j.at("overlap").get_to(c.overlap);
}

inline void to_json(json& j, const SampleResult& s) {
  j = json{{"seed", s.seed},
           {"swap_distance", s.swap_distance},
           {"r_size", s.r_size},
           {"s_size", s.s_size},
           {"common", s.common},
           {"common_over_r", detail::optional_to_json(s.common_over_r)},
           {"common_over_s", detail::optional_to_json(s.common_over_s)}};
}

inline void from_json(const json& j, SampleResult& s) {
  j.at("seed").get_to(s.seed);
  j.at("swap_distance").get_to(s.swap_distance);
  j.at("r_size").get_to(s.r_size);
  j.at("s_size").get_to(s.s_size);
  j.at("common").get_to(s.common);
  s.common_over_r = detail::optional_from_json(j.at("common_over_r"));
  s.common_over_s = detail::optional_from_json(j.at("common_over_s"));
}

inline void to_json(json& j, const ExperimentCell& c) {
  j = json{{"family", c.family == GenFamily::er ? "er" : "ws"},
           {"n", c.n},
           {"density", c.density},
           {"beta", c.beta},
           {"samples", c.samples},
           {"k", c.k},
           {"club_target", c.club_target},
           {"seed", c.seed}};
}

inline void from_json(const json& j, ExperimentCell& c) {
  c.family = j.at("family").get<std::string>() == "er" ? GenFamily::er : GenFamily::ws;
  j.at("n").get_to(c.n);
  j.at("density").get_to(c.density);
  j.at("beta").get_to(c.beta);
  j.at("samples").get_to(c.samples);
  j.at("k").get_to(c.k);
  j.at("club_target").get_to(c.club_target);
  j.at("seed").get_to(c.seed);
}

inline void to_json(json& j, const CellSummary& c) {
  j = json{{"cell", c.cell},
           {"swap_mean", c.swap_mean},
           {"swap_sd", c.swap_sd},
           {"mean_common_over_r", detail::optional_to_json(c.mean_common_over_r)},
           {"mean_common_over_s", detail::optional_to_json(c.mean_common_over_s)},
           {"samples", c.samples}};
}

inline void from_json(const json& j, CellSummary& c) {
  j.at("cell").get_to(c.cell);
  j.at("swap_mean").get_to(c.swap_mean);
  j.at("swap_sd").get_to(c.swap_sd);
  c.mean_common_over_r = detail::optional_from_json(j.at("mean_common_over_r"));
  c.mean_common_over_s = detail::optional_from_json(j.at("mean_common_over_s"));
  j.at("samples").get_to(c.samples);
}

inline void to_json(json& j, const GenSpec& s) {
  j = json{{"family", s.family == GenFamily::er ? "er" : "ws"},
           {"n", s.n},
           {"target_density", s.target_density},
           {"rewiring_beta", s.rewiring_beta},
           {"seed", s.seed}};
}

inline void from_json(const json& j, GenSpec& s) {
  s.family = j.at("family").get<std::string>() == "er" ? GenFamily::er : GenFamily::ws;
  j.at("n").get_to(s.n);
  j.at("target_density").get_to(s.target_density);
  s.rewiring_beta = j.value("rewiring_beta", 0.1);
  j.at("seed").get_to(s.seed);
}

// ---- CSV -------------------------------------------------------------

namespace detail {

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

} // namespace detail

/// One row per vertex, then one row per edge.
inline std::string participation_csv(const Graph& g, const ParticipationTable& t) {
  std::string out = "record,u,v,count\n";
  for (int v = 0; v < g.order(); ++v) {
    out += "vertex," + detail::csv_escape(g.label_of(v)) + ",," +
           std::to_string(t.vertex_counts[v]) + "\n";
  }
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out += "edge," + detail::csv_escape(g.label_of(edges[i].u)) + "," +
           detail::csv_escape(g.label_of(edges[i].v)) + "," +
           std::to_string(t.edge_counts[i]) + "\n";
  }
  return out;
}

inline std::string club_csv(const Graph& g, const ClubReport& r) {
  std::string out = "record,u,v,value\n";
  for (int v : r.members)
    out += "member," + detail::csv_escape(g.label_of(v)) + ",,\n";
  for (const auto& e : r.member_edges)
    out += "edge," + detail::csv_escape(g.label_of(e.u)) + "," +
           detail::csv_escape(g.label_of(e.v)) + "," +
           cliquerich::detail::format_weight(e.weight) + "\n";
  out += "coefficient,,,";
  out += r.coefficient ? cliquerich::detail::format_weight(*r.coefficient)
                       : std::string("undefined");
  out += "\n";
  return out;
}

/// Vertex-by-iteration matrix of participation counts; the last column flags
/// SUpernode membership.
inline std::string trace_csv(const PipelineTrace& trace,
                             const Graph* source_graph = nullptr) {
  if (trace.iterations.empty()) throw Error("cannot emit an empty trace");
  std::string out = "vertex";
  for (const auto& rec : trace.iterations)
    out += ",xi_iter" + std::to_string(rec.iteration);
  out += ",supernode\n";
  std::vector<bool> is_super(trace.n, false);
  for (int v : trace.supernodes) is_super[v] = true;
  for (int v = 0; v < trace.n; ++v) {
    out += source_graph ? detail::csv_escape(source_graph->label_of(v))
                        : std::to_string(v);
    for (const auto& rec : trace.iterations)
      out += "," + std::to_string(rec.vertex_counts[v]);
    out += is_super[v] ? ",1\n" : ",0\n";
  }
  return out;
}

inline std::string rank_comparison_csv(const RankComparison& c) {
  std::string out = "field,value\n";
  out += "swap_distance," + std::to_string(c.swap_distance) + "\n";
  out += "degree_threshold," + std::to_string(c.degree_threshold) + "\n";
  out += "participation_threshold," + std::to_string(c.participation_threshold) + "\n";
  out += "r_size," + std::to_string(c.overlap.size_a) + "\n";
  out += "s_size," + std::to_string(c.overlap.size_b) + "\n";
  out += "common," + std::to_string(c.overlap.size_common) + "\n";
  auto prop = [](const std::optional<double>& p) {
    return p ? cliquerich::detail::format_weight(*p) : std::string("undefined");
  };
  out += "common_over_r," + prop(c.overlap.common_over_a) + "\n";
  out += "common_over_s," + prop(c.overlap.common_over_b) + "\n";
  return out;
}

inline std::string experiment_summary_csv(std::span<const CellSummary> cells) {
  std::string out =
      "family,n,density,samples,k,club_target,swap_mean,swap_sd,"
      "mean_common_over_r,mean_common_over_s\n";
  auto prop = [](const std::optional<double>& p) {
    return p ? cliquerich::detail::format_weight(*p) : std::string("undefined");
  };
  for (const auto& c : cells) {
    out += c.cell.family == GenFamily::er ? "er," : "ws,";
    out += std::to_string(c.cell.n) + "," +
           cliquerich::detail::format_weight(c.cell.density) + "," +
           std::to_string(c.cell.samples) + "," + std::to_string(c.cell.k) + "," +
           std::to_string(c.cell.club_target) + "," +
           cliquerich::detail::format_weight(c.swap_mean) + "," +
           cliquerich::detail::format_weight(c.swap_sd) + "," +
           prop(c.mean_common_over_r) + "," + prop(c.mean_common_over_s) + "\n";
  }
  return out;
}

inline std::string experiment_samples_csv(std::span<const CellSummary> cells) {
  std::string out =
      "family,n,density,sample,seed,swap_distance,r_size,s_size,common,"
      "common_over_r,common_over_s\n";
  auto prop = [](const std::optional<double>& p) {
    return p ? cliquerich::detail::format_weight(*p) : std::string("undefined");
  };
  for (const auto& c : cells) {
    for (std::size_t s = 0; s < c.samples.size(); ++s) {
      const auto& smp = c.samples[s];
      out += c.cell.family == GenFamily::er ? "er," : "ws,";
      out += std::to_string(c.cell.n) + "," +
             cliquerich::detail::format_weight(c.cell.density) + "," +
             std::to_string(s) + "," + std::to_string(smp.seed) + "," +
             std::to_string(smp.swap_distance) + "," + std::to_string(smp.r_size) +
             "," + std::to_string(smp.s_size) + "," + std::to_string(smp.common) +
             "," + prop(smp.common_over_r) + "," + prop(smp.common_over_s) + "\n";
    }
  }
  return out;
}

} // namespace cliquerich
