#pragma once

#include <json.hpp>

#include "imtw/experiments.hpp"
#include "imtw/extraction.hpp"
#include "imtw/measures.hpp"
#include "imtw/solvers.hpp"
#include "imtw/transform.hpp"
#include "imtw/tree_decomposition.hpp"

// JSON records for the CLI. Vertex and node indices are 1-based, as in files;
// big integers are decimal strings.

namespace imtw::json {

using nlohmann::json;

inline json vertices(const VertexSet &s) {
  json a = json::array();
  s.for_each([&](Vertex v) { a.push_back(v + 1); });
  return a;
}

inline json edges(const Matching &m) {
  json a = json::array();
  for (const Edge &e : m) a.push_back({e.u + 1, e.v + 1});
  return a;
}

inline json big(const BigInt &x) { return x.str(); }

inline json decomposition(const TreeDecomposition &td) {
  json bags = json::array();
  for (const auto &b : td.bags) bags.push_back(vertices(b));
  json tree = json::array();
  for (auto [a, b] : td.normalized_edges()) tree.push_back({a + 1, b + 1});
  return {{"bags", bags}, {"tree_edges", tree}};
}

inline json violation(const Violation &v) {
  json j{{"kind", to_string(v.kind)}, {"detail", v.detail}};
  if (v.edge) j["edge"] = {v.edge->u + 1, v.edge->v + 1};
  if (v.vertex >= 0) j["vertex"] = v.vertex + 1;
  if (!v.nodes.empty()) {
    json nodes = json::array();
    for (Node x : v.nodes) nodes.push_back(x + 1);
    j["nodes"] = nodes;
  }
  return j;
}

inline json validation(const ValidationReport &r) {
  json vs = json::array();
  for (const auto &v : r.violations) vs.push_back(violation(v));
  return {{"valid", r.ok()}, {"violations", vs}};
}

inline json measure(const MeasureReport &r, bool mu) {
  json j{{"value", r.value}, {"witness_node", r.witness_node + 1}};
  if (mu)
    j["witness_matching"] = edges(r.witness_matching);
  else
    j["witness_set"] = vertices(r.witness_set);
  return j;
}

inline json biclique(const Biclique &b) { return {{"left", vertices(b.left)}, {"right", vertices(b.right)}}; }

inline json thresholds(const Thresholds &th) {
  return {{"mu", th.mu}, {"t", th.t}, {"n_t", th.n_t}, {"M", big(th.M)}, {"C", big(th.C)}, {"K", big(th.K)}};
}

inline json claim(const ClaimReport &c) {
  json j{{"check", c.claim}, {"bound", big(c.bound)}, {"values", c.values}, {"passed", c.passed}};
  if (c.first_violation >= 0) j["first_violation"] = c.first_violation + 1;
  return j;
}

inline json pipeline(const PipelineReport &r) {
  json j{{"thresholds", thresholds(r.thresholds)},
         {"input", validation(r.input_validation)},
         {"input_mu", r.input_mu},
         {"preconditions_hold", r.preconditions_hold()},
         {"certified", r.certified()}};
  if (r.biclique) j["biclique"] = biclique(*r.biclique);
  if (r.mu_excess) j["mu_excess"] = measure(*r.mu_excess, true);
  if (!r.preconditions_hold()) return j;
  json attach = json::array();
  for (auto [s, x] : r.state.attach) attach.push_back({s + 1, x + 1});
  json leaves = json::array();
  for (auto [s, y] : r.transformed.leaves) leaves.push_back({s + 1, y + 1});
  j["independent_set"] = vertices(r.state.independent);
  j["light_threshold"] = big(r.state.light_threshold);
  j["light"] = vertices(r.state.light);
  j["heavy"] = vertices(r.state.heavy);
  j["attach"] = attach;
  j["leaves"] = leaves;
  j["checks"] = {claim(r.remainder_alpha), claim(r.light_neighborhood_alpha), claim(r.heavy_count)};
  j["transformed_valid"] = validation(r.transformed_valid);
  j["transformed_alpha"] = measure(r.transformed_alpha, false);
  j["alpha_below_K"] = r.alpha_below_K;
  return j;
}

inline json matching_extraction(const MatchingExtractionRecord &r) {
  json j{{"outcome", to_string(r.outcome)},
         {"matching_size", r.matching_size},
         {"s", r.s},
         {"t", r.t},
         {"threshold_M", big(r.threshold)},
         {"above_threshold", r.above_threshold},
         {"reached_target", r.reached_target}};
  if (r.subgraph_biclique) j["subgraph_biclique"] = biclique(*r.subgraph_biclique);
  if (r.induced_biclique) j["induced_biclique"] = biclique(*r.induced_biclique);
  if (r.outcome == MatchingOutcome::induced_matching) {
    j["induced_matching"] = edges(r.induced_matching);
    j["size"] = r.induced_matching.size();
    j["contracted_vertices"] = r.contracted.vertex_count();
    j["contracted_edges"] = r.contracted.edge_count();
    j["sigma"] = r.sigma;
    j["turan_bound"] = r.turan_bound;
    j["kst_guarantee_applies"] = r.kst_guarantee_applies;
    j["kst_guarantee"] = r.kst_guarantee;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline json set_extraction(const IndependentExtractionRecord &r) {
  json j{{"success", r.success},
         {"iterations", r.iterations},
         {"edge_counts", r.edge_counts},
         {"threshold_N", big(r.threshold)},
         {"sets_meet_threshold", r.sets_meet_threshold}};
  json samples = json::array();
  for (const auto &x : r.samples) samples.push_back(vertices(x));
  j["samples"] = samples;
  if (r.success) {
    json sv = json::array();
    for (const auto &x : r.survivors) sv.push_back(vertices(x));
    j["survivors"] = sv;
    j["removed"] = vertices(r.removed);
    j["union"] = vertices(r.united());
  } else {
    j["min_edge_count"] = r.min_edge_count;
    if (r.densest_pair) {
      j["densest_pair"] = {r.densest_pair->first + 1, r.densest_pair->second + 1};
      j["densest_pair_edges"] = r.densest_pair_edges;
    }
  }
  return j;
}

inline json properties(const PropertyReport &r) {
  json j{{"t", r.t},
         {"biclique_free", r.biclique_free},
         {"co_biclique_free", r.co_biclique_free},
         {"no_t_matching", r.no_t_matching},
         {"all", r.all()}};
  if (r.biclique) j["biclique"] = biclique(*r.biclique);
  if (r.co_biclique) j["co_biclique"] = biclique(*r.co_biclique);
  if (r.matching) j["matching"] = edges(*r.matching);
  return j;
}

inline json separator(const SeparatorBound &b) {
  json j{{"gap", b.gap}, {"vacuous", b.vacuous}, {"bound", b.bound}, {"removed_sets_checked", b.removed_sets_checked}};
  if (b.counterexample)
    j["counterexample"] = {{"removed", vertices(b.counterexample->removed)},
                           {"part_w", vertices(b.counterexample->part_w)},
                           {"part_z", vertices(b.counterexample->part_z)}};
  return j;
}

inline json kst(const KstReport &r) {
  json rows = json::array();
  for (const auto &row : r.rows)
    rows.push_back({{"n", row.n},
                    {"graphs", row.graphs},
                    {"free_checked", row.free_checked},
                    {"max_free_edges", row.max_free_edges},
                    {"bound", row.bound},
                    {"violations", row.violations}});
  return {{"t", r.t}, {"rows", rows}, {"violations", r.violations}};
}

} // namespace imtw::json
