#pragma once

#include <string>
#include <variant>
#include <vector>

#include "imtw/graph.hpp"
#include "imtw/independent_set.hpp"

namespace imtw {

namespace detail {

inline bool kuhn_augment(const Graph &g, Vertex u, std::vector<Vertex> &mate, std::vector<char> &seen) {
  bool found = false;
  g.neighbors(u).for_each([&](Vertex v) {
    if (found || seen[v]) return;
    seen[v] = 1;
    if (mate[v] < 0 || kuhn_augment(g, mate[v], mate, seen)) {
      mate[v] = u;
      mate[u] = v;
      found = true;
    }
  });
  return found;
}

inline void brute_matching(const Graph &g, std::uint64_t free, std::vector<Edge> &cur,
                           std::vector<Edge> &best) {
  if (cur.size() + static_cast<std::size_t>(std::popcount(free)) / 2 <= best.size()) return;
  if (free == 0) {
    best = cur;
    return;
  }
  Vertex v = std::countr_zero(free);
  std::uint64_t rest = free & ~(std::uint64_t{1} << v);
  std::uint64_t cand = g.neighbors(v).low_word() & rest;
  for (std::uint64_t r = cand; r != 0; r &= r - 1) {
    Vertex w = std::countr_zero(r);
    cur.emplace_back(v, w);
    brute_matching(g, rest & ~(std::uint64_t{1} << w), cur, best);
    cur.pop_back();
  }
  if (cur.size() > best.size()) best = cur;
  brute_matching(g, rest, cur, best);
}

} // namespace detail

/// Maximum-cardinality matching. Bipartite graphs of any size use augmenting
/// paths; other graphs use exhaustive search up to `general_limit` vertices.
inline Matching max_matching(const Graph &g, std::size_t general_limit = kDefaultAlphaLimit) {
  const std::size_t n = g.vertex_count();
  auto coloured = is_bipartite(g);
  if (auto *bip = std::get_if<Bipartition>(&coloured)) {
    std::vector<Vertex> mate(n, -1);
    bip->side_a.for_each([&](Vertex u) {
      std::vector<char> seen(n, 0);
      detail::kuhn_augment(g, u, mate, seen);
    });
    Matching out;
    bip->side_a.for_each([&](Vertex u) {
      if (mate[u] >= 0) out.emplace_back(u, mate[u]);
    });
    std::sort(out.begin(), out.end());
    return out;
  }
  if (n > general_limit || n > 64)
    throw LimitExceeded("maximum matching of a non-bipartite graph on " + std::to_string(n) +
                        " vertices exceeds the exhaustive limit " + std::to_string(general_limit));
  std::vector<Edge> cur, best;
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  detail::brute_matching(g, all, cur, best);
  std::sort(best.begin(), best.end());
  return best;
}

/// Contracts every edge of a perfect matching `m` of `g` into one vertex,
/// without loops or parallel edges. Vertex i of the result is m[i].
inline Graph contract_matching(const Graph &g, const Matching &m) {
  if (!is_matching(g, m)) throw InvalidArgument("contract_matching: not a matching of the graph");
  if (2 * m.size() != g.vertex_count())
    throw InvalidArgument("contract_matching: matching of size " + std::to_string(m.size()) +
                          " is not perfect on " + std::to_string(g.vertex_count()) + " vertices");
  std::vector<Vertex> owner(g.vertex_count(), -1);
  for (std::size_t i = 0; i < m.size(); ++i) owner[m[i].u] = owner[m[i].v] = static_cast<Vertex>(i);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge &e : g.edges())
    if (owner[e.u] != owner[e.v]) pairs.emplace_back(owner[e.u], owner[e.v]);
  return Graph(m.size(), pairs);
}

} // namespace imtw
