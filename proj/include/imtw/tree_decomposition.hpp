#pragma once

#include <algorithm>
#include <cassert>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "imtw/graph.hpp"

namespace imtw {

using Node = int;

/// A tree over nodes 0..node_count()-1 together with one bag per node.
///
/// Nothing about the host graph is enforced on construction; validate()
/// reports every way the pair fails to be a tree decomposition.
struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<Node, Node>> tree_edges;

  std::size_t node_count() const { return bags.size(); }

  /// Tree edges as (min,max) pairs in ascending order.
  std::vector<std::pair<Node, Node>> normalized_edges() const {
    auto out = tree_edges;
    for (auto &[a, b] : out)
      if (a > b) std::swap(a, b);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::vector<Node>> adjacency() const {
    std::vector<std::vector<Node>> adj(node_count());
    for (auto [a, b] : tree_edges) {
      if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= node_count() ||
          static_cast<std::size_t>(b) >= node_count())
        continue;
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    return adj;
  }

  std::size_t max_bag_size() const {
    std::size_t w = 0;
    for (const auto &b : bags) w = std::max(w, b.size());
    return w;
  }

  /// Same bags per node and the same tree edge set.
  friend bool operator==(const TreeDecomposition &a, const TreeDecomposition &b) {
    return a.bags == b.bags && a.normalized_edges() == b.normalized_edges();
  }
};

enum class ViolationKind {
  not_a_tree,
  bag_out_of_range,
  uncovered_edge,
  missing_vertex,
  disconnected_subtree,
};

inline const char *to_string(ViolationKind k) {
  switch (k) {
  case ViolationKind::not_a_tree: return "not_a_tree";
  case ViolationKind::bag_out_of_range: return "bag_out_of_range";
  case ViolationKind::uncovered_edge: return "uncovered_edge";
  case ViolationKind::missing_vertex: return "missing_vertex";
  case ViolationKind::disconnected_subtree: return "disconnected_subtree";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind;
  std::string detail;
  std::optional<Edge> edge;         ///< uncovered_edge
  Vertex vertex = -1;               ///< missing_vertex, disconnected_subtree
  std::vector<Node> nodes;          ///< offending nodes / tree edge endpoints
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(ViolationKind k) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation &v) { return v.kind == k; });
  }
};

/// Nodes whose bag contains v (the subtree T_v when td is valid).
inline std::vector<Node> subtree_of_vertex(const TreeDecomposition &td, Vertex v) {
  std::vector<Node> out;
  for (std::size_t x = 0; x < td.node_count(); ++x)
    if (td.bags[x].contains(v)) out.push_back(static_cast<Node>(x));
  return out;
}

namespace detail {

inline void check_tree(const TreeDecomposition &td, ValidationReport &rep) {
  const std::size_t k = td.node_count();
  if (k == 0) {
    rep.violations.push_back({ViolationKind::not_a_tree, "decomposition has no nodes", {}, -1, {}});
    return;
  }
  std::vector<Node> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Node x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= k || static_cast<std::size_t>(b) >= k) {
      rep.violations.push_back({ViolationKind::not_a_tree,
                                "tree edge (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") references an unknown node",
                                {}, -1, {a, b}});
      continue;
    }
    Node ra = find(a), rb = find(b);
    if (ra == rb) {
      rep.violations.push_back({ViolationKind::not_a_tree,
                                "tree edge (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") closes a cycle",
                                {}, -1, {a, b}});
      continue;
    }
    parent[ra] = rb;
  }
  std::vector<Node> stray;
  for (std::size_t x = 0; x < k; ++x)
    if (find(static_cast<Node>(x)) != find(0)) stray.push_back(static_cast<Node>(x));
  if (!stray.empty())
    rep.violations.push_back({ViolationKind::not_a_tree,
                              "tree is disconnected; node " + std::to_string(stray.front()) +
                                  " unreachable from node 0",
                              {}, -1, stray});
}

} // namespace detail

/// Checks that td is a tree decomposition of g: the nodes form a tree, every
/// edge of g lies in some bag, and the bags holding any vertex form a
/// nonempty connected subtree. Every failure is listed with a witness.
inline ValidationReport validate(const Graph &g, const TreeDecomposition &td) {
  ValidationReport rep;
  detail::check_tree(td, rep);
  const std::size_t n = g.vertex_count();
  for (std::size_t x = 0; x < td.node_count(); ++x)
    if (td.bags[x].universe() != n)
      rep.violations.push_back({ViolationKind::bag_out_of_range,
                                "bag of node " + std::to_string(x) + " is over " +
                                    std::to_string(td.bags[x].universe()) + " vertices, graph has " +
                                    std::to_string(n),
                                {}, -1, {static_cast<Node>(x)}});
  if (rep.has(ViolationKind::bag_out_of_range)) return rep;

  for (const Edge &e : g.edges()) {
    bool covered = std::any_of(td.bags.begin(), td.bags.end(),
                               [&](const VertexSet &b) { return b.contains(e.u) && b.contains(e.v); });
    if (!covered)
      rep.violations.push_back({ViolationKind::uncovered_edge,
                                "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                    ") lies in no bag",
                                e, -1, {}});
  }

  auto adj = td.adjacency();
  for (std::size_t v = 0; v < n; ++v) {
    auto nodes = subtree_of_vertex(td, static_cast<Vertex>(v));
    if (nodes.empty()) {
      rep.violations.push_back({ViolationKind::missing_vertex,
                                "vertex " + std::to_string(v) + " appears in no bag", {},
                                static_cast<Vertex>(v), {}});
      continue;
    }
    std::vector<char> seen(td.node_count(), 0);
    std::vector<Node> stack{nodes.front()};
    seen[nodes.front()] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
      Node x = stack.back();
      stack.pop_back();
      ++reached;
      for (Node y : adj[x])
        if (!seen[y] && td.bags[y].contains(static_cast<Vertex>(v))) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    if (reached != nodes.size())
      rep.violations.push_back({ViolationKind::disconnected_subtree,
                                "bags containing vertex " + std::to_string(v) +
                                    " do not form a connected subtree",
                                {}, static_cast<Vertex>(v), nodes});
  }
  return rep;
}

/// One node holding every vertex.
inline TreeDecomposition trivial_decomposition(const Graph &g) {
  return TreeDecomposition{{g.all_vertices()}, {}};
}

/// Lowest node whose bag is a balanced separator of g. Empty bags are only
/// considered after every nonempty bag (and are the answer only for n = 0).
inline Node find_balanced_separator_bag(const Graph &g, const TreeDecomposition &td) {
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t x = 0; x < td.node_count(); ++x) {
      bool empty = td.bags[x].empty();
      if ((pass == 0) == empty) continue;
      if (pass == 1 && g.vertex_count() > 0) continue;
      if (is_balanced_separator(g, td.bags[x])) return static_cast<Node>(x);
    }
  assert(false && "a valid tree decomposition always has a balanced-separator bag");
  throw Error("no bag is a balanced separator; the decomposition is not valid");
}

} // namespace imtw
