#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "imtw/biclique.hpp"
#include "imtw/bigint.hpp"
#include "imtw/graph.hpp"
#include "imtw/kst.hpp"
#include "imtw/measures.hpp"
#include "imtw/random.hpp"

namespace imtw {

struct BipartiteInstance {
  Graph graph;
  Bipartition sides;
};

/// Sides A = 0..n-1 and B = n..2n-1; each pair (a, b), scanned with a
/// outer and b inner, is an edge with probability p.
inline BipartiteInstance random_bipartite(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("random_bipartite: p must lie in [0, 1]");
  Rng rng(seed);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (rng.bernoulli(p)) pairs.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(n + b));
  BipartiteInstance out{Graph(2 * n, pairs), {VertexSet(2 * n), VertexSet(2 * n)}};
  for (std::size_t v = 0; v < n; ++v) {
    out.sides.side_a.insert(static_cast<Vertex>(v));
    out.sides.side_b.insert(static_cast<Vertex>(n + v));
  }
  return out;
}

/// floor(2^(t/3)).
inline std::size_t lower_bound_side(unsigned t) {
  return static_cast<std::size_t>(iroot_floor(BigInt(1) << t, 3));
}

inline BipartiteInstance lower_bound_instance(unsigned t, std::uint64_t seed) {
  return random_bipartite(lower_bound_side(t), 0.5, seed);
}

struct PropertyReport {
  std::size_t t = 0;
  bool biclique_free = true;     ///< (i) no K_{t,t} across the sides
  bool co_biclique_free = true;  ///< (ii) every t-set of A has an edge to every t-set of B
  bool no_t_matching = true;     ///< (iii) no induced matching with t edges
  std::optional<Biclique> biclique;
  std::optional<Biclique> co_biclique;
  std::optional<Matching> matching;

  bool all() const { return biclique_free && co_biclique_free && no_t_matching; }
};

/// Some induced matching with k edges, if one exists.
inline std::optional<Matching> find_induced_matching(const Graph &g, std::size_t k) {
  if (k == 0) return Matching{};
  if (2 * k > g.vertex_count()) return std::nullopt;
  auto adj = detail::adjacency_masks(g);
  std::uint64_t all = g.vertex_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.vertex_count()) - 1;
  detail::MuSearch search{adj, all};
  search.stop_at = k;
  search.run(0);
  if (search.best.size() < k) return std::nullopt;
  Matching out;
  for (std::size_t i = 0; i < k; ++i) out.emplace_back(search.best[i].first, search.best[i].second);
  std::sort(out.begin(), out.end());
  return out;
}

/// Checks the three properties of the random lower-bound construction.
/// `strict_induced` looks for induced K_{t,t} anywhere instead of only
/// across the bipartition.
inline PropertyReport check_three_properties(const Graph &g, const Bipartition &bip, std::size_t t,
                                             bool strict_induced = false) {
  if (t == 0) throw InvalidArgument("check_three_properties: t must be at least 1");
  if (g.vertex_count() > 64)
    throw LimitExceeded("check_three_properties: enumeration supports at most 64 vertices, got " +
                        std::to_string(g.vertex_count()));
  PropertyReport rep;
  rep.t = t;
  rep.biclique = strict_induced ? contains_biclique(g, t, BicliqueMode::induced)
                                : find_cross_biclique(g, bip.side_a, bip.side_b, t);
  rep.biclique_free = !rep.biclique;
  rep.co_biclique = find_cross_biclique(g, bip.side_a, bip.side_b, t, true);
  rep.co_biclique_free = !rep.co_biclique;
  rep.matching = find_induced_matching(g, t);
  rep.no_t_matching = !rep.matching;
  return rep;
}

/// Removed set S and a split of G - S into W, Z with no edge between them.
struct PartitionWitness {
  VertexSet removed;
  VertexSet part_w;
  VertexSet part_z;
};

struct SeparatorBound {
  long long gap = 0;            ///< n - 2t
  bool vacuous = false;         ///< gap <= 0
  std::uint64_t bound = 0;      ///< ceil(gap / 2) when the check passes
  std::uint64_t removed_sets_checked = 0;
  std::optional<PartitionWitness> counterexample;
};

inline constexpr std::uint64_t kDefaultSeparatorBudget = std::uint64_t{1} << 22;

namespace detail {

// Splits the components into two groups each holding at least `need`
// vertices, if possible (subset sum over component sizes).
inline std::optional<VertexSet> split_components(const std::vector<VertexSet> &comps, std::size_t need) {
  std::size_t total = 0;
  for (const auto &c : comps) total += c.size();
  if (total < 2 * need) return std::nullopt;
  // reach[i][s]: some subset of the first i components has s vertices.
  std::vector<std::vector<char>> reach(comps.size() + 1, std::vector<char>(total + 1, 0));
  reach[0][0] = 1;
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t s = 0; s <= total; ++s)
      if (reach[i][s]) {
        reach[i + 1][s] = 1;
        reach[i + 1][s + comps[i].size()] = 1;
      }
  for (std::size_t s = need; s + need <= total; ++s) {
    if (!reach[comps.size()][s]) continue;
    VertexSet w(comps.empty() ? 0 : comps.front().universe());
    for (std::size_t i = comps.size(), left = s; i > 0; --i)
      if (!reach[i - 1][left]) {
        w |= comps[i - 1];
        left -= comps[i - 1].size();
      }
    return w;
  }
  return std::nullopt;
}

inline std::uint64_t binomial_sum_below(std::uint64_t n, long long k, std::uint64_t cap) {
  std::uint64_t total = 0, term = 1;
  for (long long i = 0; i < k; ++i) {
    total += term;
    if (total > cap) return cap + 1;
    term = term * (n - static_cast<std::uint64_t>(i)) / static_cast<std::uint64_t>(i + 1);
  }
  return total;
}

} // namespace detail

/// Lower bound ceil((n - 2t) / 2) on the tree-independence number of a
/// bipartite graph with sides of size n in which every t-set of A has an
/// edge to every t-set of B. Confirms by enumeration that removing fewer than
/// n - 2t vertices never leaves two edge-free parts of at least 2t vertices
/// each; any such split is returned as a counterexample (and the bound is 0).
inline SeparatorBound separator_lower_bound(const Graph &g, const Bipartition &bip, std::size_t t,
                                            std::uint64_t budget = kDefaultSeparatorBudget) {
  if (t == 0) throw InvalidArgument("separator_lower_bound: t must be at least 1");
  const std::size_t n = bip.side_a.size();
  if (bip.side_b.size() != n || 2 * n != g.vertex_count())
    throw InvalidArgument("separator_lower_bound: sides must both have n vertices and cover the graph");
  if (find_cross_biclique(g, bip.side_a, bip.side_b, t, true))
    throw InvalidArgument("separator_lower_bound: some t-subsets of the two sides have no edge between them");

  SeparatorBound out;
  out.gap = static_cast<long long>(n) - 2 * static_cast<long long>(t);
  if (out.gap <= 0) {
    out.vacuous = true;
    return out;
  }
  const std::size_t total = 2 * n;
  std::uint64_t needed = detail::binomial_sum_below(total, out.gap, budget);
  if (needed > budget)
    throw LimitExceeded("separator_lower_bound: " + std::to_string(needed) + "+ removed sets on " +
                        std::to_string(total) + " vertices exceed the budget of " + std::to_string(budget));

  // Enumerate every removed set of size < gap by its sorted members.
  std::vector<Vertex> pick;
  std::optional<PartitionWitness> bad;
  auto visit = [&](auto &&self, Vertex from) -> void {
    if (bad) return;
    ++out.removed_sets_checked;
    VertexSet removed(total, pick);
    auto comps = components(g, removed);
    if (auto w = detail::split_components(comps, 2 * t)) {
      bad = PartitionWitness{removed, *w, g.all_vertices() - removed - *w};
      return;
    }
    if (static_cast<long long>(pick.size()) + 1 >= out.gap) return;
    for (Vertex v = from; v < static_cast<Vertex>(total); ++v) {
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  visit(visit, 0);
  out.counterexample = bad;
  out.bound = bad ? 0 : static_cast<std::uint64_t>((out.gap + 1) / 2);
  return out;
}

struct KstRow {
  std::size_t n = 0;
  std::uint64_t graphs = 0;
  std::uint64_t free_checked = 0;   ///< graphs whose biclique test was run
  std::size_t max_free_edges = 0;   ///< densest K_{t,t}-subgraph-free graph seen
  double bound = 0;
  std::uint64_t violations = 0;
};

struct KstReport {
  unsigned t = 0;
  std::vector<KstRow> rows;
  std::uint64_t violations = 0;
  std::optional<Graph> violation_witness;
};

inline constexpr std::size_t kKstMaxN = 7;

/// Labeled graph on n vertices whose edge set is the bit pattern `code`
/// over pairs (0,1), (0,2), ..., (1,2), ... in lexicographic order.
inline Graph labeled_graph(std::size_t n, std::uint64_t code) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v, ++bit)
      if ((code >> bit) & 1U) pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  return Graph(n, pairs);
}

/// Runs over every labeled graph on 0..max_n vertices and confirms that the
/// K_{t,t}-subgraph-free ones respect the KST edge bound. Only graphs denser
/// than the densest free graph found so far need the biclique test.
inline KstReport kst_exhaustive_check(std::size_t max_n, unsigned t) {
  if (t == 0) throw InvalidArgument("kst_exhaustive_check: t must be at least 1");
  if (max_n > kKstMaxN)
    throw LimitExceeded("kst_exhaustive_check: max_n = " + std::to_string(max_n) + " exceeds " +
                        std::to_string(kKstMaxN) + " (2^21 labeled graphs at n = 7)");
  KstReport rep;
  rep.t = t;
  for (std::size_t n = 0; n <= max_n; ++n) {
    KstRow row;
    row.n = n;
    row.bound = kst_edge_bound(n, t);
    const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::vector<std::pair<int, int>> pair_of;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v) pair_of.emplace_back(static_cast<int>(u), static_cast<int>(v));
    std::vector<std::uint64_t> adj(n);
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    bool any_free = false;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
      ++row.graphs;
      std::size_t m = static_cast<std::size_t>(std::popcount(code));
      if (any_free && m <= row.max_free_edges) continue;
      std::fill(adj.begin(), adj.end(), 0);
      for (std::uint64_t r = code; r != 0; r &= r - 1) {
        auto [u, v] = pair_of[std::countr_zero(r)];
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
      }
      ++row.free_checked;
      bool has = false;
      if (2 * t <= n) {
        detail::BicliqueSearch search{adj, t, BicliqueMode::subgraph, false};
        has = search.run(all, all, 0);
      }
      if (has) continue;
      any_free = true;
      row.max_free_edges = std::max(row.max_free_edges, m);
      if (!kst_admits(n, t, m)) {
        ++row.violations;
        if (!rep.violation_witness) rep.violation_witness = labeled_graph(n, code);
      }
    }
    rep.violations += row.violations;
    rep.rows.push_back(row);
  }
  return rep;
}

} // namespace imtw
