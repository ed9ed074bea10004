#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "imtw/error.hpp"
#include "imtw/vertex_set.hpp"

namespace imtw {

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool has(Vertex x) const { return x == u || x == v; }
  Vertex other(Vertex x) const { return x == u ? v : u; }
  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// A set of edges; validity against a host graph is checked by is_matching().
using Matching = std::vector<Edge>;

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
  Graph() = default;

  /// Throws InvalidArgument naming the offending pair on an out-of-range
  /// endpoint or a self-loop. Duplicate pairs are merged.
  Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> &pairs)
      : n_(n), adj_(n, VertexSet(n)) {
    for (auto [a, b] : pairs) {
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n ||
          static_cast<std::size_t>(b) >= n)
        throw InvalidArgument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                              ") has an endpoint outside 0.." +
                              std::to_string(static_cast<long long>(n) - 1));
      if (a == b)
        throw InvalidArgument("self-loop (" + std::to_string(a) + "," + std::to_string(b) + ")");
      adj_[a].insert(b);
      adj_[b].insert(a);
    }
    for (std::size_t u = 0; u < n; ++u)
      adj_[u].for_each([&](Vertex v) {
        if (static_cast<std::size_t>(v) > u) edges_.emplace_back(static_cast<Vertex>(u), v);
      });
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge> &edges() const { return edges_; }

  const VertexSet &neighbors(Vertex v) const {
    check(v);
    return adj_[v];
  }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }

  VertexSet empty_set() const { return VertexSet(n_); }
  VertexSet all_vertices() const { return VertexSet::full(n_); }

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

private:
  void check(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= n_)
      throw InvalidArgument("vertex " + std::to_string(v) + " not in graph of order " +
                            std::to_string(n_));
  }

  std::size_t n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<Edge> edges_;
};

inline Graph build_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> &edges) {
  return Graph(n, edges);
}

inline void check_in_range(const Graph &g, const VertexSet &x) {
  if (x.universe() != g.vertex_count())
    throw InvalidArgument("vertex set universe " + std::to_string(x.universe()) +
                          " does not match graph order " + std::to_string(g.vertex_count()));
}

/// N(X): vertices outside X adjacent to some member of X.
inline VertexSet neighborhood(const Graph &g, const VertexSet &x) {
  check_in_range(g, x);
  VertexSet out(g.vertex_count());
  x.for_each([&](Vertex v) { out |= g.neighbors(v); });
  return out - x;
}

inline VertexSet neighborhood(const Graph &g, Vertex v) { return g.neighbors(v); }

/// N[v] = N(v) + v.
inline VertexSet closed_neighborhood(const Graph &g, Vertex v) {
  VertexSet out = g.neighbors(v);
  out.insert(v);
  return out;
}

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;  ///< new index -> old index
  std::vector<Vertex> to_local;     ///< old index -> new index, -1 if dropped
};

/// G[X], relabelled 0..|X|-1 preserving the order of the original indices.
inline InducedSubgraph induced_subgraph(const Graph &g, const VertexSet &x) {
  check_in_range(g, x);
  InducedSubgraph out;
  out.to_original = x.members();
  out.to_local.assign(g.vertex_count(), -1);
  for (std::size_t i = 0; i < out.to_original.size(); ++i)
    out.to_local[out.to_original[i]] = static_cast<Vertex>(i);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const Edge &e : g.edges())
    if (x.contains(e.u) && x.contains(e.v)) pairs.emplace_back(out.to_local[e.u], out.to_local[e.v]);
  out.graph = Graph(out.to_original.size(), pairs);
  return out;
}

inline bool is_independent_set(const Graph &g, const VertexSet &x) {
  check_in_range(g, x);
  bool ok = true;
  x.for_each([&](Vertex v) {
    if (g.neighbors(v).intersects(x)) ok = false;
  });
  return ok;
}

/// Every pair an edge of g, pairs pairwise vertex-disjoint.
inline bool is_matching(const Graph &g, const Matching &m) {
  VertexSet used(g.vertex_count());
  for (const Edge &e : m) {
    if (e.u < 0 || static_cast<std::size_t>(e.v) >= g.vertex_count()) return false;
    if (!g.adjacent(e.u, e.v)) return false;
    if (used.contains(e.u) || used.contains(e.v)) return false;
    used.insert(e.u);
    used.insert(e.v);
  }
  return true;
}

inline VertexSet matched_vertices(const Graph &g, const Matching &m) {
  VertexSet out(g.vertex_count());
  for (const Edge &e : m) {
    out.insert(e.u);
    out.insert(e.v);
  }
  return out;
}

/// A matching with no edge of g between endpoints of two distinct members.
inline bool is_induced_matching(const Graph &g, const Matching &m) {
  if (!is_matching(g, m)) return false;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      for (Vertex a : {m[i].u, m[i].v})
        for (Vertex b : {m[j].u, m[j].v})
          if (g.adjacent(a, b)) return false;
  return true;
}

struct Bipartition {
  VertexSet side_a;
  VertexSet side_b;
};

/// Closed walk of odd length, listed as its vertex sequence (first != last).
struct OddCycle {
  std::vector<Vertex> cycle;
};

/// Two-colouring by breadth-first layering; the lowest vertex of every
/// component goes to side_a. Returns an odd cycle when none exists.
inline std::variant<Bipartition, OddCycle> is_bipartite(const Graph &g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> colour(n, -1), parent(n, -1), depth(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    std::queue<Vertex> q;
    q.push(static_cast<Vertex>(root));
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      std::optional<Vertex> conflict;
      g.neighbors(u).for_each([&](Vertex v) {
        if (conflict) return;
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          q.push(v);
        } else if (colour[v] == colour[u]) {
          conflict = v;
        }
      });
      if (conflict) {
        // Walk both BFS-tree paths up to their meeting point.
        Vertex a = u, b = *conflict;
        std::vector<Vertex> left, right;
        while (depth[a] > depth[b]) { left.push_back(a); a = parent[a]; }
        while (depth[b] > depth[a]) { right.push_back(b); b = parent[b]; }
        while (a != b) {
          left.push_back(a);
          right.push_back(b);
          a = parent[a];
          b = parent[b];
        }
        left.push_back(a);
        left.insert(left.end(), right.rbegin(), right.rend());
        return OddCycle{left};
      }
    }
  }
  Bipartition bip{VertexSet(n), VertexSet(n)};
  for (std::size_t v = 0; v < n; ++v)
    (colour[v] == 0 ? bip.side_a : bip.side_b).insert(static_cast<Vertex>(v));
  return bip;
}

/// Connected components of G - removed, each as a vertex set, ordered by lowest member.
inline std::vector<VertexSet> components(const Graph &g, const VertexSet &removed) {
  check_in_range(g, removed);
  std::vector<VertexSet> out;
  VertexSet seen = removed;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (seen.contains(static_cast<Vertex>(s))) continue;
    VertexSet comp(g.vertex_count());
    std::vector<Vertex> stack{static_cast<Vertex>(s)};
    seen.insert(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.insert(u);
      (g.neighbors(u) - seen).for_each([&](Vertex v) {
        seen.insert(v);
        stack.push_back(v);
      });
    }
    out.push_back(std::move(comp));
  }
  return out;
}

/// No component of G - S has more than |V(G)|/2 vertices.
inline bool is_balanced_separator(const Graph &g, const VertexSet &s) {
  for (const VertexSet &c : components(g, s))
    if (2 * c.size() > g.vertex_count()) return false;
  return true;
}

namespace detail {

/// Adjacency bitmasks of G[X] for |X| <= 64, indexed by position in X.
struct LocalMasks {
  std::vector<Vertex> vertices;
  std::vector<std::uint64_t> adj;
};

inline LocalMasks local_masks(const Graph &g, const VertexSet &x) {
  LocalMasks out;
  out.vertices = x.members();
  if (out.vertices.size() > 64) throw LimitExceeded("bitmask kernels support at most 64 vertices");
  std::vector<int> pos(g.vertex_count(), -1);
  for (std::size_t i = 0; i < out.vertices.size(); ++i) pos[out.vertices[i]] = static_cast<int>(i);
  out.adj.assign(out.vertices.size(), 0);
  for (std::size_t i = 0; i < out.vertices.size(); ++i)
    g.neighbors(out.vertices[i]).for_each([&](Vertex w) {
      if (pos[w] >= 0) out.adj[i] |= std::uint64_t{1} << pos[w];
    });
  return out;
}

inline std::vector<std::uint64_t> adjacency_masks(const Graph &g) {
  if (g.vertex_count() > 64) throw LimitExceeded("bitmask kernels support at most 64 vertices");
  std::vector<std::uint64_t> adj(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) adj[v] = g.neighbors(static_cast<Vertex>(v)).low_word();
  return adj;
}

} // namespace detail
} // namespace imtw
