#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "imtw/graph.hpp"
#include "imtw/independent_set.hpp"
#include "imtw/measures.hpp"
#include "imtw/tree_decomposition.hpp"

namespace imtw {

// Restricting the search to elimination orderings loses nothing: both bag
// measures are monotone under inclusion, and every tree decomposition can be
// refined to a minimal triangulation whose maximal cliques each sit inside an
// original bag. Every minimal triangulation is the fill-in of some ordering.

using EliminationOrdering = std::vector<Vertex>;

enum class WidthMeasure { independence, induced_matching };

enum class SearchMethod {
  subset_dp,    ///< memoised over eliminated vertex sets
  permutations  ///< every ordering in lexicographic order, prefix-pruned
};

inline constexpr std::size_t kDefaultDpLimit = 11;
inline constexpr std::size_t kDefaultPermutationLimit = 9;
inline constexpr std::size_t kMaxDpLimit = 24;

struct SolverOptions {
  SearchMethod method = SearchMethod::subset_dp;
  std::size_t limit = 0;  ///< 0 selects the method's default
};

struct SolverResult {
  int value = 0;
  TreeDecomposition witness;
  EliminationOrdering ordering;  ///< lexicographically smallest optimal ordering
  std::uint64_t explored = 0;    ///< DP states or orderings examined
};

inline bool is_permutation_of_vertices(const Graph &g, const EliminationOrdering &ord) {
  if (ord.size() != g.vertex_count()) return false;
  std::vector<char> seen(ord.size(), 0);
  for (Vertex v : ord) {
    if (v < 0 || static_cast<std::size_t>(v) >= ord.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

/// Clique tree of the fill-in graph of `ord`: one bag per maximal clique.
/// Bags come out in elimination order of the vertex that created them.
inline TreeDecomposition elimination_to_decomposition(const Graph &g, const EliminationOrdering &ord) {
  if (!is_permutation_of_vertices(g, ord))
    throw InvalidArgument("elimination ordering is not a permutation of the vertices");
  const std::size_t n = g.vertex_count();
  if (n == 0) return TreeDecomposition{{VertexSet(0)}, {}};

  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[ord[i]] = i;
  std::vector<VertexSet> fill;
  fill.reserve(n);
  for (std::size_t v = 0; v < n; ++v) fill.push_back(g.neighbors(static_cast<Vertex>(v)));

  VertexSet remaining = g.all_vertices();
  std::vector<VertexSet> bag(n);
  std::vector<long> parent(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    Vertex v = ord[i];
    remaining.erase(v);
    VertexSet later = fill[v] & remaining;
    later.for_each([&](Vertex u) { fill[u] |= later - VertexSet(n, {u}); });
    bag[i] = later;
    bag[i].insert(v);
    std::size_t best = n;
    later.for_each([&](Vertex u) { best = std::min(best, pos[u]); });
    if (best < n) parent[i] = static_cast<long>(best);
  }

  // Elimination forest, roots chained into a single tree.
  std::vector<std::vector<std::size_t>> adj(n);
  auto link = [&](std::size_t a, std::size_t b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  long prev_root = -1;
  for (std::size_t i = 0; i < n; ++i) {
    if (parent[i] >= 0) {
      link(i, static_cast<std::size_t>(parent[i]));
    } else {
      if (prev_root >= 0) link(static_cast<std::size_t>(prev_root), i);
      prev_root = static_cast<long>(i);
    }
  }

  // Contract tree edges whose one bag contains the other.
  std::vector<char> alive(n, 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < n && !changed; ++a) {
      if (!alive[a]) continue;
      for (std::size_t b : adj[a]) {
        if (!bag[a].is_subset_of(bag[b])) continue;
        for (std::size_t c : adj[a])
          if (c != b) {
            std::replace(adj[c].begin(), adj[c].end(), a, b);
            adj[b].push_back(c);
          }
        adj[b].erase(std::remove(adj[b].begin(), adj[b].end(), a), adj[b].end());
        adj[a].clear();
        alive[a] = 0;
        changed = true;
        break;
      }
    }
  }

  std::vector<Node> id(n, -1);
  TreeDecomposition td;
  for (std::size_t i = 0; i < n; ++i)
    if (alive[i]) {
      id[i] = static_cast<Node>(td.bags.size());
      td.bags.push_back(bag[i]);
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : adj[i])
      if (alive[i] && i < j) td.tree_edges.emplace_back(id[i], id[j]);
  td.tree_edges = td.normalized_edges();
  return td;
}

namespace detail {

class BagMeasure {
public:
  BagMeasure(std::vector<std::uint64_t> adj, WidthMeasure m) : adj_(std::move(adj)), m_(m) {}

  int operator()(std::uint64_t bag) {
    auto it = cache_.find(bag);
    if (it != cache_.end()) return it->second;
    int v;
    if (m_ == WidthMeasure::independence) {
      v = alpha_of_mask(adj_, bag);
    } else {
      MuSearch search{adj_, bag};
      search.run(0);
      v = static_cast<int>(search.best.size());
    }
    cache_.emplace(bag, v);
    return v;
  }

  const std::vector<std::uint64_t> &adj() const { return adj_; }

private:
  std::vector<std::uint64_t> adj_;
  WidthMeasure m_;
  std::unordered_map<std::uint64_t, int> cache_;
};

/// Bag created by eliminating v after the set `done`: v plus every vertex
/// outside `done` reachable from v through `done`.
inline std::uint64_t elimination_bag(const std::vector<std::uint64_t> &adj, std::uint64_t done, int v) {
  std::uint64_t comp = std::uint64_t{1} << v, frontier = comp, nb = 0;
  while (frontier != 0) {
    std::uint64_t grow = 0;
    for (std::uint64_t r = frontier; r != 0; r &= r - 1) grow |= adj[std::countr_zero(r)];
    nb |= grow;
    frontier = grow & done & ~comp;
    comp |= frontier;
  }
  return (nb & ~done) | (std::uint64_t{1} << v);
}

class SubsetDp {
public:
  SubsetDp(BagMeasure &measure, std::size_t n)
      : measure_(measure), n_(n), all_((std::uint64_t{1} << n) - 1), memo_(std::size_t{1} << n, -1) {}

  int cost_to_go(std::uint64_t done) {
    if (done == all_) return 0;
    int &slot = memo_[done];
    if (slot >= 0) return slot;
    ++explored;
    int best = std::numeric_limits<int>::max();
    for (std::uint64_t r = all_ & ~done; r != 0; r &= r - 1) {
      int v = std::countr_zero(r);
      int here = measure_(elimination_bag(measure_.adj(), done, v));
      if (here >= best) continue;
      best = std::min(best, std::max(here, cost_to_go(done | (std::uint64_t{1} << v))));
    }
    memo_[done] = best;
    return best;
  }

  EliminationOrdering lex_first_optimal(int opt) {
    EliminationOrdering ord;
    std::uint64_t done = 0;
    while (done != all_) {
      for (std::uint64_t r = all_ & ~done; r != 0; r &= r - 1) {
        int v = std::countr_zero(r);
        std::uint64_t next = done | (std::uint64_t{1} << v);
        if (std::max(measure_(elimination_bag(measure_.adj(), done, v)), cost_to_go(next)) <= opt) {
          ord.push_back(v);
          done = next;
          break;
        }
      }
    }
    return ord;
  }

  std::uint64_t explored = 0;

private:
  BagMeasure &measure_;
  std::size_t n_;
  std::uint64_t all_;
  std::vector<int> memo_;
};

inline SolverResult permutation_search(BagMeasure &measure, std::size_t n) {
  SolverResult res;
  EliminationOrdering perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
  int best = std::numeric_limits<int>::max();
  do {
    ++res.explored;
    std::uint64_t done = 0;
    int worst = 0;
    std::size_t cut = n;
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(worst, measure(elimination_bag(measure.adj(), done, perm[i])));
      done |= std::uint64_t{1} << perm[i];
      if (worst >= best) {
        cut = i;
        break;
      }
    }
    if (cut == n) {
      best = worst;
      res.ordering = perm;
    } else {
      // Every ordering sharing perm[0..cut] is no better: jump past them.
      std::sort(perm.begin() + static_cast<long>(cut) + 1, perm.end(), std::greater<>());
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  res.value = n == 0 ? 0 : best;
  return res;
}

inline SolverResult solve_width(const Graph &g, WidthMeasure m, const SolverOptions &opt) {
  const std::size_t n = g.vertex_count();
  std::size_t limit = opt.limit;
  if (limit == 0) limit = opt.method == SearchMethod::subset_dp ? kDefaultDpLimit : kDefaultPermutationLimit;
  if (opt.method == SearchMethod::subset_dp) limit = std::min(limit, kMaxDpLimit);
  if (n > limit)
    throw LimitExceeded("exact width solver: graph has " + std::to_string(n) + " vertices; limit is " +
                        std::to_string(limit));
  BagMeasure measure(adjacency_masks(g), m);
  SolverResult res;
  if (opt.method == SearchMethod::subset_dp) {
    SubsetDp dp(measure, n);
    res.value = dp.cost_to_go(0);
    res.ordering = dp.lex_first_optimal(res.value);
    res.explored = dp.explored;
  } else {
    res = permutation_search(measure, n);
  }
  res.witness = elimination_to_decomposition(g, res.ordering);
  return res;
}

} // namespace detail

/// treealpha(G) with a witness decomposition attaining it.
inline SolverResult tree_independence_number(const Graph &g, const SolverOptions &opt = {}) {
  return detail::solve_width(g, WidthMeasure::independence, opt);
}

/// mu-tw(G) with a witness decomposition attaining it.
inline SolverResult induced_matching_treewidth(const Graph &g, const SolverOptions &opt = {}) {
  return detail::solve_width(g, WidthMeasure::induced_matching, opt);
}

} // namespace imtw
