#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "imtw/biclique.hpp"
#include "imtw/graph.hpp"
#include "imtw/independent_set.hpp"
#include "imtw/matching.hpp"
#include "imtw/random.hpp"
#include "imtw/thresholds.hpp"

namespace imtw {

// ---------------------------------------------------------------------------
// Induced matchings from large matchings in bipartite graphs.
// ---------------------------------------------------------------------------

enum class MatchingOutcome {
  induced_biclique,   ///< an induced K_{t,t} among the matched vertices
  subgraph_biclique,  ///< a K_{t,t} subgraph that is not induced (impossible in bipartite input)
  induced_matching,   ///< lifted independent set of the contracted graph
};

inline const char *to_string(MatchingOutcome o) {
  switch (o) {
  case MatchingOutcome::induced_biclique: return "induced_biclique";
  case MatchingOutcome::subgraph_biclique: return "subgraph_biclique";
  case MatchingOutcome::induced_matching: return "induced_matching";
  }
  return "unknown";
}

struct MatchingExtractionRecord {
  MatchingOutcome outcome = MatchingOutcome::induced_matching;
  std::size_t matching_size = 0;  ///< n = |M|
  unsigned s = 0, t = 1;

  /// Biclique searches over G[V(M)], in host indices. In a bipartite graph a
  /// K_{t,t} subgraph is always induced (an edge inside a part closes a
  /// triangle), so the two agree; both are kept to make that observable.
  std::optional<Biclique> subgraph_biclique;
  std::optional<Biclique> induced_biclique;

  Graph contracted;  ///< Q; vertex i stands for matching edge i
  double sigma = 1;  ///< max(1, |E(Q)| / |V(Q)|)
  Matching induced_matching;

  BigInt threshold;                 ///< M(s,t)
  bool above_threshold = false;     ///< n >= M(s,t)
  bool reached_target = false;      ///< |induced_matching| >= s+1
  std::size_t turan_bound = 0;      ///< ceil(|V(Q)| / (2 sigma + 1))
  bool kst_guarantee_applies = false;
  std::uint64_t kst_guarantee = 0;  ///< ceil(n^(1/t) / 12)
  std::string note;
};

/// ceil(n^(1/t) / 12): least k with (12k)^t >= n.
inline std::uint64_t root_over_twelve_ceil(std::uint64_t n, unsigned t) {
  if (n == 0) return 0;
  BigInt k = iroot_floor(BigInt(n), t) / 12;
  while (ipow(12 * k, t) < n) ++k;
  while (k > 0 && ipow(12 * (k - 1), t) >= n) --k;
  return static_cast<std::uint64_t>(k);
}

/// Given a matching in a bipartite graph, returns either a K_{t,t} among the
/// matched vertices or an induced matching obtained by contracting the
/// matching and taking a greedy independent set of the contracted graph.
///
/// Throws InvalidArgument when g is not bipartite or `matching` is not a
/// matching of g. Throws std::logic_error if a size guarantee that must hold
/// under the recorded hypotheses fails.
inline MatchingExtractionRecord extract_induced_matching(const Graph &g, const Matching &matching, unsigned s,
                                                         unsigned t) {
  if (t == 0) throw InvalidArgument("extract_induced_matching: t must be at least 1");
  if (!std::holds_alternative<Bipartition>(is_bipartite(g)))
    throw InvalidArgument("extract_induced_matching: graph is not bipartite");
  if (!is_matching(g, matching))
    throw InvalidArgument("extract_induced_matching: edge list is not a matching of the graph");

  MatchingExtractionRecord rec;
  rec.s = s;
  rec.t = t;
  rec.matching_size = matching.size();
  rec.threshold = threshold_M(s, t);
  rec.above_threshold = BigInt(matching.size()) >= rec.threshold;

  InducedSubgraph h = induced_subgraph(g, matched_vertices(g, matching));
  auto lift_set = [&](const VertexSet &local) {
    VertexSet out(g.vertex_count());
    local.for_each([&](Vertex v) { out.insert(h.to_original[v]); });
    return out;
  };
  auto lift = [&](const std::optional<Biclique> &b) -> std::optional<Biclique> {
    if (!b) return std::nullopt;
    return Biclique{lift_set(b->left), lift_set(b->right)};
  };
  rec.subgraph_biclique = lift(contains_biclique(h.graph, t, BicliqueMode::subgraph));
  rec.induced_biclique = lift(contains_biclique(h.graph, t, BicliqueMode::induced));
  if (rec.induced_biclique) {
    rec.outcome = MatchingOutcome::induced_biclique;
    return rec;
  }
  if (rec.subgraph_biclique) {
    rec.outcome = MatchingOutcome::subgraph_biclique;
    rec.note = "K_{t,t} subgraph present but not induced";
    return rec;
  }

  Matching local;
  for (const Edge &e : matching) local.emplace_back(h.to_local[e.u], h.to_local[e.v]);
  rec.contracted = contract_matching(h.graph, local);
  const std::size_t qn = rec.contracted.vertex_count(), qm = rec.contracted.edge_count();
  rec.sigma = qn == 0 ? 1.0 : std::max(1.0, static_cast<double>(qm) / static_cast<double>(qn));
  VertexSet picked = greedy_turan_independent_set(rec.contracted);
  picked.for_each([&](Vertex i) { rec.induced_matching.push_back(matching[i]); });
  std::sort(rec.induced_matching.begin(), rec.induced_matching.end());
  rec.outcome = MatchingOutcome::induced_matching;

  const std::size_t got = rec.induced_matching.size();
  rec.turan_bound = turan_guarantee(qn, qm);
  if (got < rec.turan_bound) throw std::logic_error("greedy independent set below the Turán bound");

  const std::uint64_t n = matching.size();
  rec.kst_guarantee = root_over_twelve_ceil(n, t);
  rec.kst_guarantee_applies = 2 * n >= kst_threshold(t);
  if (rec.kst_guarantee_applies && got < rec.kst_guarantee)
    throw std::logic_error("lifted induced matching below ceil(n^(1/t)/12) on K_{t,t}-free input");

  rec.reached_target = got >= static_cast<std::size_t>(s) + 1;
  if (rec.above_threshold && !rec.reached_target)
    throw std::logic_error("matching above M(s,t) did not yield an induced matching of size s+1");
  if (!rec.above_threshold)
    rec.note = "insufficient input: matching size " + std::to_string(n) + " is below M(s,t) = " +
               rec.threshold.str() + "; achieved " + std::to_string(got);
  return rec;
}

// ---------------------------------------------------------------------------
// Independent set meeting each of m given independent sets in s vertices.
// ---------------------------------------------------------------------------

struct IndependentExtractionRecord {
  bool success = false;
  std::size_t iterations = 0;
  std::vector<std::size_t> edge_counts;  ///< edges inside the union of samples, per iteration
  std::vector<VertexSet> samples;        ///< X_i of the last iteration
  std::vector<VertexSet> survivors;      ///< U_i (on success)
  VertexSet removed;                     ///< lower endpoint of every sampled edge (on success)

  // Failure diagnostics.
  std::size_t min_edge_count = 0;
  std::optional<std::pair<std::size_t, std::size_t>> densest_pair;  ///< 0-based (i, j), i < j
  std::size_t densest_pair_edges = 0;

  BigInt threshold;             ///< N(s, t, m)
  bool sets_meet_threshold = false;  ///< every |I_i| >= N(s, t, m)

  VertexSet united() const {
    VertexSet u(removed.universe());
    for (const auto &x : survivors) u |= x;
    return u;
  }
};

inline std::size_t edges_within(const Graph &g, const VertexSet &x) {
  std::size_t c = 0;
  x.for_each([&](Vertex v) { c += (g.neighbors(v) & x).size(); });
  return c / 2;
}

/// Las Vegas rendering of the sampling argument: draw a uniform 2s-subset of
/// every set, and stop once the samples span at most s edges; deleting the
/// lower endpoint of each such edge leaves at least s vertices per set with
/// an independent union. Gives up after `max_iterations` draws and reports
/// the pair of sets spanning the most edges. Each draw succeeds with
/// probability at least 1/(s+1) when g is K_{t,t}-free and every set has at
/// least N(s,t,m) vertices; `sets_meet_threshold` records whether that holds.
inline IndependentExtractionRecord extract_independent_sets(const Graph &g, const std::vector<VertexSet> &sets,
                                                            unsigned s, unsigned t, std::uint64_t seed,
                                                            std::size_t max_iterations) {
  if (sets.empty()) throw InvalidArgument("extract_independent_sets: need at least one set");
  if (max_iterations == 0) throw InvalidArgument("extract_independent_sets: max_iterations must be positive");
  std::vector<std::vector<Vertex>> pools;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    check_in_range(g, sets[i]);
    if (!is_independent_set(g, sets[i]))
      throw InvalidArgument("extract_independent_sets: set " + std::to_string(i + 1) + " is not independent");
    if (sets[i].size() < 2 * static_cast<std::size_t>(s))
      throw InvalidArgument("extract_independent_sets: set " + std::to_string(i + 1) + " has " +
                            std::to_string(sets[i].size()) + " vertices, fewer than 2s = " +
                            std::to_string(2 * s));
    pools.push_back(sets[i].members());
  }

  const std::size_t n = g.vertex_count();
  IndependentExtractionRecord rec;
  rec.removed = VertexSet(n);
  rec.threshold = threshold_N(s, t, sets.size());
  rec.sets_meet_threshold = std::all_of(sets.begin(), sets.end(),
                                        [&](const VertexSet &x) { return BigInt(x.size()) >= rec.threshold; });
  rec.min_edge_count = std::numeric_limits<std::size_t>::max();
  Rng rng(seed);
  for (std::size_t it = 0; it < max_iterations; ++it) {
    ++rec.iterations;
    rec.samples.clear();
    VertexSet all(n);
    for (const auto &pool : pools) {
      VertexSet x(n, rng.sample(pool, 2 * static_cast<std::size_t>(s)));
      all |= x;
      rec.samples.push_back(std::move(x));
    }
    std::size_t edges = edges_within(g, all);
    rec.edge_counts.push_back(edges);
    rec.min_edge_count = std::min(rec.min_edge_count, edges);
    if (edges > s) continue;

    for (const Edge &e : g.edges())
      if (all.contains(e.u) && all.contains(e.v)) rec.removed.insert(e.u);
    for (const auto &x : rec.samples) rec.survivors.push_back(x - rec.removed);
    rec.success = true;
    return rec;
  }

  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      std::size_t e = edges_within(g, sets[i] | sets[j]);
      if (!rec.densest_pair || e > rec.densest_pair_edges) {
        rec.densest_pair = std::make_pair(i, j);
        rec.densest_pair_edges = e;
      }
    }
  return rec;
}

} // namespace imtw
