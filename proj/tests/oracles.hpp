#pragma once

// Brute-force references and graph generators for the test suite. Nothing
// here calls into the library's search code; only the Graph container and
// VertexSet are shared.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "imtw/graph.hpp"

namespace oracle {

using imtw::Edge;
using imtw::Graph;
using imtw::Matching;
using imtw::Vertex;
using imtw::VertexSet;
using Pairs = std::vector<std::pair<Vertex, Vertex>>;

// --- named graphs -------------------------------------------------------

inline Graph path(int n) {
  Pairs p;
  for (int i = 0; i + 1 < n; ++i) p.emplace_back(i, i + 1);
  return Graph(n, p);
}

inline Graph cycle(int n) {
  Pairs p;
  for (int i = 0; i < n; ++i) p.emplace_back(i, (i + 1) % n);
  return Graph(n, p);
}

inline Graph complete(int n) {
  Pairs p;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) p.emplace_back(i, j);
  return Graph(n, p);
}

/// Sides 0..a-1 and a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
  Pairs p;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) p.emplace_back(i, a + j);
  return Graph(a + b, p);
}

inline Graph edgeless(int n) { return Graph(n, {}); }

inline Graph star(int leaves) { return complete_bipartite(1, leaves); }

inline Graph petersen() {
  Pairs p;
  for (int i = 0; i < 5; ++i) {
    p.emplace_back(i, (i + 1) % 5);
    p.emplace_back(i, i + 5);
    p.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, p);
}

// --- random generators --------------------------------------------------

class Gen {
public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}
  int below(int k) { return static_cast<int>(eng_() % static_cast<std::uint64_t>(k)); }
  bool coin(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(eng_) < p; }
  std::mt19937_64 &engine() { return eng_; }

  Graph gnp(int n, double p) {
    Pairs e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(p)) e.emplace_back(i, j);
    return Graph(n, e);
  }

  std::vector<Vertex> permutation(int n) {
    std::vector<Vertex> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::shuffle(p.begin(), p.end(), eng_);
    return p;
  }

  /// Random k-tree on n >= k+1 vertices: start from K_{k+1}, then attach
  /// every new vertex to a random existing k-clique. Vertices are shuffled.
  Graph ktree(int k, int n) {
    std::vector<std::vector<int>> cliques;
    Pairs e;
    std::vector<int> base;
    for (int i = 0; i <= k; ++i) base.push_back(i);
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) e.emplace_back(i, j);
    for (int drop = 0; drop <= k; ++drop) {
      std::vector<int> c;
      for (int i = 0; i <= k; ++i)
        if (i != drop) c.push_back(i);
      cliques.push_back(c);
    }
    for (int v = k + 1; v < n; ++v) {
      std::vector<int> c = cliques[below(static_cast<int>(cliques.size()))];
      for (int u : c) e.emplace_back(u, v);
      for (int drop = 0; drop < k; ++drop) {
        std::vector<int> nc = c;
        nc[drop] = v;
        cliques.push_back(nc);
      }
    }
    auto perm = permutation(n);
    for (auto &[a, b] : e) a = perm[a], b = perm[b];
    return Graph(n, e);
  }

  /// Random bipartite graph, sides 0..a-1 and a..a+b-1.
  Graph bipartite(int a, int b, double p) {
    Pairs e;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j)
        if (coin(p)) e.emplace_back(i, a + j);
    return Graph(a + b, e);
  }

private:
  std::mt19937_64 eng_;
};

/// Graph on n vertices whose edges are the set bits of `code` over the pairs
/// (0,1), (0,2), ..., (n-2,n-1).
inline Graph from_code(int n, std::uint64_t code) {
  Pairs e;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((code >> bit) & 1U) e.emplace_back(i, j);
  return Graph(n, e);
}

// --- subset helpers -----------------------------------------------------

inline std::uint64_t mask_of(const VertexSet &s) {
  std::uint64_t m = 0;
  s.for_each([&](Vertex v) { m |= std::uint64_t{1} << v; });
  return m;
}

inline VertexSet set_of(std::size_t n, std::uint64_t m) {
  VertexSet s(n);
  for (std::size_t v = 0; v < n; ++v)
    if ((m >> v) & 1U) s.insert(static_cast<Vertex>(v));
  return s;
}

inline bool independent_mask(const Graph &g, std::uint64_t m) {
  for (const Edge &e : g.edges())
    if (((m >> e.u) & 1U) && ((m >> e.v) & 1U)) return false;
  return true;
}

inline bool clique_mask(const Graph &g, std::uint64_t m) {
  for (std::size_t u = 0; u < g.vertex_count(); ++u)
    for (std::size_t v = u + 1; v < g.vertex_count(); ++v)
      if (((m >> u) & 1U) && ((m >> v) & 1U) && !g.adjacent(static_cast<Vertex>(u), static_cast<Vertex>(v)))
        return false;
  return true;
}

// --- independence -------------------------------------------------------

/// alpha(G[X]) over all subsets of X.
inline int alpha(const Graph &g, std::uint64_t within) {
  int best = 0;
  for (std::uint64_t s = within;; s = (s - 1) & within) {
    if (std::popcount(s) > best && independent_mask(g, s)) best = std::popcount(s);
    if (s == 0) break;
  }
  return best;
}

inline int alpha(const Graph &g) { return alpha(g, (std::uint64_t{1} << g.vertex_count()) - 1); }

/// Maximum independent set whose sorted member list is lexicographically smallest.
inline std::vector<Vertex> lex_first_mis(const Graph &g) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> best;
  bool any = false;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (!independent_mask(g, s)) continue;
    std::vector<Vertex> m = set_of(n, s).members();
    if (!any || m.size() > best.size() || (m.size() == best.size() && m < best)) best = m, any = true;
  }
  return best;
}

// --- matchings ----------------------------------------------------------

inline std::size_t max_matching_size(const Graph &g) {
  const auto &edges = g.edges();
  std::size_t best = 0;
  auto rec = [&](auto &&self, std::size_t i, std::uint64_t used, std::size_t cur) -> void {
    best = std::max(best, cur);
    if (cur + (edges.size() - i) <= best) return;
    for (std::size_t j = i; j < edges.size(); ++j) {
      std::uint64_t m = (std::uint64_t{1} << edges[j].u) | (std::uint64_t{1} << edges[j].v);
      if (used & m) continue;
      self(self, j + 1, used | m, cur + 1);
    }
  };
  rec(rec, 0, 0, 0);
  return best;
}

inline bool induced_matching_brute(const Graph &g, const std::vector<Edge> &m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      for (Vertex a : {m[i].u, m[i].v})
        for (Vertex b : {m[j].u, m[j].v})
          if (a == b || g.adjacent(a, b)) return false;
  return true;
}

/// mu(G, X) by enumerating edge subsets of size up to `cap` among the edges
/// meeting X, returning the largest induced one found.
inline int mu(const Graph &g, std::uint64_t x, int cap = 4) {
  std::vector<Edge> meet;
  for (const Edge &e : g.edges())
    if (((x >> e.u) & 1U) || ((x >> e.v) & 1U)) meet.push_back(e);
  int best = 0;
  std::vector<Edge> cur;
  auto rec = [&](auto &&self, std::size_t from) -> void {
    if (static_cast<int>(cur.size()) > best && induced_matching_brute(g, cur)) best = static_cast<int>(cur.size());
    if (static_cast<int>(cur.size()) == cap) return;
    for (std::size_t j = from; j < meet.size(); ++j) {
      cur.push_back(meet[j]);
      if (induced_matching_brute(g, cur)) self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return best;
}

// --- bicliques ----------------------------------------------------------

/// Any pair of disjoint t-sets P, Q with all P-Q pairs adjacent (and both
/// independent when `induced`).
inline bool has_biclique(const Graph &g, int t, bool induced) {
  const int n = static_cast<int>(g.vertex_count());
  if (2 * t > n) return false;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t p = 0; p <= all; ++p) {
    if (std::popcount(p) != t) continue;
    if (induced && !independent_mask(g, p)) continue;
    for (std::uint64_t q = p + 1; q <= all; ++q) {
      if (std::popcount(q) != t || (p & q)) continue;
      if (induced && !independent_mask(g, q)) continue;
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        if ((p >> a) & 1U)
          for (int b = 0; b < n && ok; ++b)
            if (((q >> b) & 1U) && !g.adjacent(a, b)) ok = false;
      if (ok) return true;
    }
  }
  return false;
}

// --- width oracle over chordal supergraphs ------------------------------

/// True if G has an induced cycle on at least four vertices.
inline bool has_long_induced_cycle(const Graph &g) {
  const int n = static_cast<int>(g.vertex_count());
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (std::popcount(s) < 4) continue;
    bool two_regular = true;
    int first = -1;
    for (int v = 0; v < n && two_regular; ++v)
      if ((s >> v) & 1U) {
        if (first < 0) first = v;
        two_regular = std::popcount(mask_of(g.neighbors(v)) & s) == 2;
      }
    if (!two_regular) continue;
    // Connected 2-regular means a single cycle.
    std::uint64_t seen = std::uint64_t{1} << first, frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (int v = 0; v < n; ++v)
        if ((frontier >> v) & 1U) next |= mask_of(g.neighbors(v)) & s;
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen == s) return true;
  }
  return false;
}

enum class Width { alpha, mu };

/// Minimum over every chordal supergraph H of G of the worst maximal clique
/// of H, measured in G. The maximal cliques of a chordal graph are the bags
/// of its clique trees, and every tree decomposition completes into such an
/// H with each maximal clique inside a bag, so this is the exact width.
/// Feasible for n <= 5.
inline int width_by_chordal_supergraphs(const Graph &g, Width w) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<std::pair<int, int>> missing;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j)) missing.emplace_back(i, j);
  int best = n + 1;
  for (std::uint64_t add = 0; add < (std::uint64_t{1} << missing.size()); ++add) {
    Pairs e;
    for (const Edge &x : g.edges()) e.emplace_back(x.u, x.v);
    for (std::size_t i = 0; i < missing.size(); ++i)
      if ((add >> i) & 1U) e.push_back(missing[i]);
    Graph h(n, e);
    if (has_long_induced_cycle(h)) continue;
    int worst = 0;
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t c = 1; c <= all; ++c) {
      if (!clique_mask(h, c)) continue;
      bool maximal = true;
      for (int v = 0; v < n && maximal; ++v)
        if (!((c >> v) & 1U) && clique_mask(h, c | (std::uint64_t{1} << v))) maximal = false;
      if (!maximal) continue;
      worst = std::max(worst, w == Width::alpha ? alpha(g, c) : mu(g, c, n / 2));
    }
    best = std::min(best, worst);
  }
  return n == 0 ? 0 : best;
}

// --- KST ----------------------------------------------------------------

inline double kst_bound(int n, int t) {
  return std::pow(t - 1.0, 1.0 / t) / 2.0 * std::pow(n, 2.0 - 1.0 / t) + t * n / 2.0;
}

} // namespace oracle
