#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "imtw/graph.hpp"

namespace imtw {

/// Subgraph: every left-right pair adjacent. Induced: additionally both
/// parts independent, so the 2t vertices induce exactly K_{t,t}.
enum class BicliqueMode { subgraph, induced };

struct Biclique {
  VertexSet left;
  VertexSet right;
};

inline bool is_biclique(const Graph &g, const Biclique &w, std::size_t t, BicliqueMode mode) {
  if (w.left.size() != t || w.right.size() != t || w.left.intersects(w.right)) return false;
  bool ok = true;
  w.left.for_each([&](Vertex u) {
    if (!w.right.is_subset_of(g.neighbors(u))) ok = false;
  });
  if (mode == BicliqueMode::induced)
    ok = ok && is_independent_set(g, w.left) && is_independent_set(g, w.right);
  return ok;
}

namespace detail {

inline bool pick_independent(const std::vector<std::uint64_t> &adj, std::uint64_t cand, std::size_t need,
                             std::uint64_t &chosen) {
  if (need == 0) return true;
  if (static_cast<std::size_t>(std::popcount(cand)) < need) return false;
  for (std::uint64_t r = cand; r != 0; r &= r - 1) {
    int v = std::countr_zero(r);
    std::uint64_t above = cand & ~((std::uint64_t{2} << v) - 1);
    chosen |= std::uint64_t{1} << v;
    if (pick_independent(adj, above & ~adj[v], need - 1, chosen)) return true;
    chosen &= ~(std::uint64_t{1} << v);
  }
  return false;
}

inline std::uint64_t lowest_bits(std::uint64_t m, std::size_t k) {
  std::uint64_t out = 0;
  for (; k > 0 && m != 0; --k) {
    out |= m & (~m + 1);
    m &= m - 1;
  }
  return out;
}

struct BicliqueSearch {
  const std::vector<std::uint64_t> &adj;
  std::size_t t;
  BicliqueMode mode;
  bool complement;           // use non-neighbourhoods instead of neighbourhoods
  std::uint64_t left = 0, right = 0;

  std::uint64_t reach(int v) const { return complement ? ~adj[v] & ~(std::uint64_t{1} << v) : adj[v]; }

  bool run(std::uint64_t cand, std::uint64_t common, std::size_t chosen) {
    if (chosen == t) {
      std::uint64_t pool = common & ~left;
      if (mode == BicliqueMode::subgraph) {
        if (static_cast<std::size_t>(std::popcount(pool)) < t) return false;
        right = lowest_bits(pool, t);
        return true;
      }
      right = 0;
      return pick_independent(adj, pool, t, right);
    }
    for (std::uint64_t r = cand; r != 0; r &= r - 1) {
      int v = std::countr_zero(r);
      std::uint64_t next_common = common & reach(v);
      if (static_cast<std::size_t>(std::popcount(next_common & ~left)) < t) continue;
      std::uint64_t above = cand & ~((std::uint64_t{2} << v) - 1);
      if (mode == BicliqueMode::induced && !complement) above &= ~adj[v];
      if (static_cast<std::size_t>(std::popcount(above)) + chosen + 1 < t) continue;
      left |= std::uint64_t{1} << v;
      if (run(above, next_common, chosen + 1)) return true;
      left &= ~(std::uint64_t{1} << v);
    }
    return false;
  }
};

inline Biclique to_biclique(std::size_t n, std::uint64_t l, std::uint64_t r) {
  return Biclique{VertexSet::from_mask(n, l), VertexSet::from_mask(n, r)};
}

} // namespace detail

/// First K_{t,t} (left part lexicographically smallest) in g, if any.
/// Exhaustive over t-subsets with common-neighbourhood pruning; graphs up to 64 vertices.
inline std::optional<Biclique> contains_biclique(const Graph &g, std::size_t t, BicliqueMode mode) {
  if (t == 0) throw InvalidArgument("contains_biclique: t must be at least 1");
  const std::size_t n = g.vertex_count();
  if (2 * t > n) return std::nullopt;
  auto adj = detail::adjacency_masks(g);
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  detail::BicliqueSearch search{adj, t, mode, false};
  if (!search.run(all, all, 0)) return std::nullopt;
  return detail::to_biclique(n, search.left, search.right);
}

/// K_{t,t} with its left part inside `left_side` and right part inside
/// `right_side`. With `complement`, searches for t-sets with no edge between
/// them instead (a biclique of the bipartite complement).
inline std::optional<Biclique> find_cross_biclique(const Graph &g, const VertexSet &left_side,
                                                   const VertexSet &right_side, std::size_t t,
                                                   bool complement = false) {
  if (t == 0) throw InvalidArgument("find_cross_biclique: t must be at least 1");
  if (left_side.size() < t || right_side.size() < t) return std::nullopt;
  auto adj = detail::adjacency_masks(g);
  std::uint64_t rs = right_side.low_word();
  detail::BicliqueSearch search{adj, t, BicliqueMode::subgraph, complement};
  if (!search.run(left_side.low_word(), rs, 0)) return std::nullopt;
  return detail::to_biclique(g.vertex_count(), search.left, search.right);
}

} // namespace imtw
