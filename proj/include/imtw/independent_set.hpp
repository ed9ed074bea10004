#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "imtw/graph.hpp"

namespace imtw {

/// Largest vertex count handed to the exact independence-number solver.
inline constexpr std::size_t kDefaultAlphaLimit = 24;

namespace detail {

// Branch and bound on bitmasks: vertices of degree <= 1 are taken greedily,
// otherwise branch on a maximum-degree vertex (take it / drop it).
inline void alpha_search(const std::vector<std::uint64_t> &adj, std::uint64_t p, int cur, int &best) {
  while (true) {
    if (p == 0) {
      best = std::max(best, cur);
      return;
    }
    if (cur + std::popcount(p) <= best) return;
    int low = -1, high = -1, high_deg = -1;
    for (std::uint64_t r = p; r != 0; r &= r - 1) {
      int v = std::countr_zero(r);
      int d = std::popcount(adj[v] & p);
      if (d <= 1) {
        low = v;
        break;
      }
      if (d > high_deg) {
        high_deg = d;
        high = v;
      }
    }
    if (low >= 0) {
      p &= ~(adj[low] | (std::uint64_t{1} << low));
      ++cur;
      continue;
    }
    alpha_search(adj, p & ~(adj[high] | (std::uint64_t{1} << high)), cur + 1, best);
    p &= ~(std::uint64_t{1} << high);
  }
}

inline int alpha_of_mask(const std::vector<std::uint64_t> &adj, std::uint64_t p) {
  int best = 0;
  alpha_search(adj, p, 0, best);
  return best;
}

/// Lexicographically smallest maximum independent subset of p.
inline std::uint64_t lex_first_mis(const std::vector<std::uint64_t> &adj, std::uint64_t p) {
  int need = alpha_of_mask(adj, p);
  std::uint64_t chosen = 0;
  std::uint64_t pool = p;
  while (need > 0) {
    int v = std::countr_zero(pool);
    std::uint64_t above = pool & ~((std::uint64_t{2} << v) - 1);
    std::uint64_t rest = above & ~adj[v];
    if (1 + alpha_of_mask(adj, rest) == need) {
      chosen |= std::uint64_t{1} << v;
      --need;
      pool = rest;
    } else {
      pool = above;
    }
  }
  return chosen;
}

inline void check_alpha_limit(std::size_t size, std::size_t limit) {
  if (size > limit || size > 64)
    throw LimitExceeded("exact independence number requested on " + std::to_string(size) +
                        " vertices; limit is " + std::to_string(std::min<std::size_t>(limit, 64)));
}

} // namespace detail

/// alpha(G[X]).
inline int independence_number(const Graph &g, const VertexSet &x,
                               std::size_t limit = kDefaultAlphaLimit) {
  check_in_range(g, x);
  detail::check_alpha_limit(x.size(), limit);
  auto local = detail::local_masks(g, x);
  std::uint64_t all = local.vertices.size() == 64 ? ~std::uint64_t{0}
                                                  : (std::uint64_t{1} << local.vertices.size()) - 1;
  return detail::alpha_of_mask(local.adj, all);
}

inline int independence_number(const Graph &g, std::size_t limit = kDefaultAlphaLimit) {
  return independence_number(g, g.all_vertices(), limit);
}

/// Maximum independent subset of X; ties go to the lexicographically
/// smallest sorted member list.
inline VertexSet max_independent_subset(const Graph &g, const VertexSet &x,
                                        std::size_t limit = kDefaultAlphaLimit) {
  check_in_range(g, x);
  detail::check_alpha_limit(x.size(), limit);
  auto local = detail::local_masks(g, x);
  std::uint64_t all = local.vertices.size() == 64 ? ~std::uint64_t{0}
                                                  : (std::uint64_t{1} << local.vertices.size()) - 1;
  std::uint64_t pick = detail::lex_first_mis(local.adj, all);
  VertexSet out(g.vertex_count());
  for (std::uint64_t r = pick; r != 0; r &= r - 1) out.insert(local.vertices[std::countr_zero(r)]);
  return out;
}

/// A maximum independent set of g. Throws LimitExceeded above `limit`
/// vertices rather than falling back to a heuristic.
inline VertexSet max_independent_set(const Graph &g, std::size_t limit = kDefaultAlphaLimit) {
  return max_independent_subset(g, g.all_vertices(), limit);
}

/// Min-degree greedy: take a minimum-degree vertex (lowest index on ties),
/// delete its closed neighbourhood, repeat.
inline VertexSet greedy_turan_independent_set(const Graph &g) {
  const std::size_t n = g.vertex_count();
  VertexSet alive = g.all_vertices();
  VertexSet out(n);
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(static_cast<Vertex>(v));
  while (!alive.empty()) {
    Vertex pick = -1;
    alive.for_each([&](Vertex v) {
      if (pick < 0 || deg[v] < deg[pick]) pick = v;
    });
    out.insert(pick);
    VertexSet gone = closed_neighborhood(g, pick) & alive;
    alive -= gone;
    gone.for_each([&](Vertex u) {
      (g.neighbors(u) & alive).for_each([&](Vertex w) { --deg[w]; });
    });
  }
  return out;
}

/// ceil(n / (2*sigma + 1)) with sigma = max(1, m/n), evaluated exactly.
inline std::size_t turan_guarantee(std::size_t n, std::size_t m) {
  if (n == 0) return 0;
  if (m <= n) return (n + 2) / 3;
  // n / (2m/n + 1) = n^2 / (2m + n)
  std::size_t num = n * n, den = 2 * m + n;
  return (num + den - 1) / den;
}

} // namespace imtw
