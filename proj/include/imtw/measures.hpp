#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "imtw/graph.hpp"
#include "imtw/independent_set.hpp"
#include "imtw/tree_decomposition.hpp"

namespace imtw {

/// Largest |X ∪ N(X)| accepted by mu_of_bag.
inline constexpr std::size_t kMuVertexLimit = 64;

struct BagMatching {
  int value = 0;
  Matching witness;  ///< induced matching, every edge meeting the bag
};

/// Value of a decomposition measure with the node and set that attain it.
struct MeasureReport {
  int value = 0;
  Node witness_node = -1;
  VertexSet witness_set;    ///< independent set inside the bag (alpha)
  Matching witness_matching;  ///< induced matching hitting the bag (mu)
};

namespace detail {

struct MuSearch {
  const std::vector<std::uint64_t> &adj;
  std::uint64_t bag;
  std::vector<std::pair<int, int>> cur, best;
  std::size_t stop_at = static_cast<std::size_t>(-1);  // good enough once best reaches this

  MuSearch(const std::vector<std::uint64_t> &a, std::uint64_t b) : adj(a), bag(b) {}

  std::uint64_t closed(int v) const { return adj[v] | (std::uint64_t{1} << v); }

  void run(std::uint64_t unusable) {
    if (best.size() >= stop_at) return;
    // X-vertices that can still be an endpoint of some available edge.
    std::uint64_t active = 0;
    for (std::uint64_t r = bag & ~unusable; r != 0; r &= r - 1) {
      int x = std::countr_zero(r);
      if (adj[x] & ~unusable) active |= std::uint64_t{1} << x;
    }
    if (cur.size() > best.size()) best = cur;
    if (active == 0) return;
    if (cur.size() + static_cast<std::size_t>(std::popcount(active)) <= best.size()) return;
    int x = std::countr_zero(active);
    for (std::uint64_t r = adj[x] & ~unusable; r != 0; r &= r - 1) {
      int y = std::countr_zero(r);
      cur.emplace_back(x, y);
      run(unusable | closed(x) | closed(y));
      cur.pop_back();
    }
    run(unusable | (std::uint64_t{1} << x));  // x is not an endpoint
  }
};

} // namespace detail

/// mu(G, X): maximum induced matching of g whose every edge meets X.
/// Depth-first over the lowest still-usable vertex of X (match it to each
/// available neighbour, or exclude it), pruned by the count of usable X-vertices.
inline BagMatching mu_of_bag(const Graph &g, const VertexSet &x) {
  check_in_range(g, x);
  VertexSet local_set = x | neighborhood(g, x);
  if (local_set.size() > kMuVertexLimit)
    throw LimitExceeded("mu_of_bag: bag plus neighbourhood has " + std::to_string(local_set.size()) +
                        " vertices; limit is " + std::to_string(kMuVertexLimit));
  auto local = detail::local_masks(g, local_set);
  std::uint64_t bag = 0;
  for (std::size_t i = 0; i < local.vertices.size(); ++i)
    if (x.contains(local.vertices[i])) bag |= std::uint64_t{1} << i;
  detail::MuSearch search{local.adj, bag};
  search.run(0);
  BagMatching out;
  out.value = static_cast<int>(search.best.size());
  for (auto [a, b] : search.best) out.witness.emplace_back(local.vertices[a], local.vertices[b]);
  std::sort(out.witness.begin(), out.witness.end());
  return out;
}

/// alpha(T): max over bags of alpha(G[bag]); ties go to the lowest node.
inline MeasureReport alpha_of_decomposition(const Graph &g, const TreeDecomposition &td,
                                            std::size_t limit = kDefaultAlphaLimit) {
  MeasureReport rep;
  rep.witness_set = g.empty_set();
  for (std::size_t x = 0; x < td.node_count(); ++x) {
    VertexSet s = max_independent_subset(g, td.bags[x], limit);
    if (rep.witness_node < 0 || static_cast<int>(s.size()) > rep.value) {
      rep.value = static_cast<int>(s.size());
      rep.witness_node = static_cast<Node>(x);
      rep.witness_set = std::move(s);
    }
  }
  return rep;
}

/// mu(T): max over bags of mu(G, bag); ties go to the lowest node.
inline MeasureReport mu_of_decomposition(const Graph &g, const TreeDecomposition &td) {
  MeasureReport rep;
  rep.witness_set = g.empty_set();
  for (std::size_t x = 0; x < td.node_count(); ++x) {
    BagMatching bm = mu_of_bag(g, td.bags[x]);
    if (rep.witness_node < 0 || bm.value > rep.value) {
      rep.value = bm.value;
      rep.witness_node = static_cast<Node>(x);
      rep.witness_matching = std::move(bm.witness);
    }
  }
  return rep;
}

/// Re-checks a report against the graph: the witness lies in (alpha) or
/// meets (mu) the witness bag, and has the claimed size.
inline bool certifies_alpha(const Graph &g, const TreeDecomposition &td, const MeasureReport &r) {
  if (td.node_count() == 0) return r.value == 0;
  if (r.witness_node < 0 || static_cast<std::size_t>(r.witness_node) >= td.node_count()) return false;
  return static_cast<int>(r.witness_set.size()) == r.value && is_independent_set(g, r.witness_set) &&
         r.witness_set.is_subset_of(td.bags[r.witness_node]);
}

inline bool certifies_mu(const Graph &g, const TreeDecomposition &td, const MeasureReport &r) {
  if (td.node_count() == 0) return r.value == 0;
  if (r.witness_node < 0 || static_cast<std::size_t>(r.witness_node) >= td.node_count()) return false;
  if (static_cast<int>(r.witness_matching.size()) != r.value || !is_induced_matching(g, r.witness_matching))
    return false;
  const VertexSet &bag = td.bags[r.witness_node];
  return std::all_of(r.witness_matching.begin(), r.witness_matching.end(),
                     [&](const Edge &e) { return bag.contains(e.u) || bag.contains(e.v); });
}

} // namespace imtw
