#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "imtw/biclique.hpp"
#include "imtw/graph.hpp"
#include "imtw/independent_set.hpp"
#include "imtw/measures.hpp"
#include "imtw/thresholds.hpp"
#include "imtw/tree_decomposition.hpp"

namespace imtw {

/// An independent set S split by alpha(N(v)) < c into light and heavy
/// vertices, with the node each light vertex's new leaf hangs from.
struct TransformState {
  VertexSet independent;
  BigInt light_threshold;
  VertexSet light;
  VertexSet heavy;
  std::vector<std::pair<Vertex, Node>> attach;  ///< light s -> x_s, ascending s
};

struct LightHeavySplit {
  VertexSet light;
  VertexSet heavy;
};

inline LightHeavySplit classify_light_heavy(const Graph &g, const VertexSet &s, const BigInt &c,
                                            std::size_t limit = kDefaultAlphaLimit) {
  check_in_range(g, s);
  if (!is_independent_set(g, s)) throw InvalidArgument("classify_light_heavy: S is not independent");
  LightHeavySplit out{g.empty_set(), g.empty_set()};
  s.for_each([&](Vertex v) {
    int a = independence_number(g, g.neighbors(v), limit);
    (BigInt(a) < c ? out.light : out.heavy).insert(v);
  });
  return out;
}

/// Classifies S and picks, for every light s, the lowest node whose bag holds s.
inline TransformState make_transform_state(const Graph &g, const TreeDecomposition &td, const VertexSet &s,
                                           const BigInt &c, std::size_t limit = kDefaultAlphaLimit) {
  TransformState st;
  st.independent = s;
  st.light_threshold = c;
  auto split = classify_light_heavy(g, s, c, limit);
  st.light = std::move(split.light);
  st.heavy = std::move(split.heavy);
  st.light.for_each([&](Vertex v) {
    auto nodes = subtree_of_vertex(td, v);
    if (nodes.empty())
      throw InvalidArgument("light vertex " + std::to_string(v) + " lies in no bag of the decomposition");
    st.attach.emplace_back(v, nodes.front());
  });
  return st;
}

struct TransformedDecomposition {
  TreeDecomposition td;
  std::vector<std::pair<Vertex, Node>> leaves;  ///< light s -> y_s
};

/// Old nodes keep their ids with bags (beta(x) - S_light) + N(beta(x) ∩ S_light);
/// each light s gets a new leaf y_s with bag N[s], adjacent to x_s.
inline TransformedDecomposition build_transformed_decomposition(const Graph &g, const TreeDecomposition &td,
                                                                const TransformState &st) {
  if (!st.light.is_subset_of(st.independent) || st.light.intersects(st.heavy))
    throw InvalidArgument("transform state: light set is not part of S or overlaps the heavy set");
  if (st.attach.size() != st.light.size())
    throw InvalidArgument("transform state: every light vertex needs exactly one attachment node");
  for (auto [v, x] : st.attach) {
    if (!st.light.contains(v))
      throw InvalidArgument("transform state: attachment for non-light vertex " + std::to_string(v));
    if (x < 0 || static_cast<std::size_t>(x) >= td.node_count() || !td.bags[x].contains(v))
      throw InvalidArgument("transform state: node " + std::to_string(x) + " is not in the subtree of " +
                            std::to_string(v));
  }

  TransformedDecomposition out;
  out.td.tree_edges = td.tree_edges;
  for (const VertexSet &bag : td.bags) {
    VertexSet lit = bag & st.light;
    out.td.bags.push_back((bag - st.light) | neighborhood(g, lit));
  }
  for (auto [v, x] : st.attach) {
    Node leaf = static_cast<Node>(out.td.bags.size());
    out.td.bags.push_back(closed_neighborhood(g, v));
    out.td.tree_edges.emplace_back(x, leaf);
    out.leaves.emplace_back(v, leaf);
  }
  return out;
}

/// Per-node values of one claim against a strict upper bound.
struct ClaimReport {
  std::string claim;
  BigInt bound;
  std::vector<int> values;  ///< indexed by node
  bool passed = true;
  Node first_violation = -1;
};

namespace detail {

template <typename F> ClaimReport check_per_node(std::string name, const TreeDecomposition &td, const BigInt &bound, F &&f) {
  ClaimReport rep;
  rep.claim = std::move(name);
  rep.bound = bound;
  for (std::size_t x = 0; x < td.node_count(); ++x) {
    int v = f(td.bags[x]);
    rep.values.push_back(v);
    if (!(BigInt(v) < bound) && rep.passed) {
      rep.passed = false;
      rep.first_violation = static_cast<Node>(x);
    }
  }
  return rep;
}

} // namespace detail

/// alpha(beta(x) - S) < bound at every node.
inline ClaimReport check_remainder_alpha(const Graph &g, const TreeDecomposition &td, const VertexSet &s, const BigInt &bound,
                                  std::size_t limit = kDefaultAlphaLimit) {
  return detail::check_per_node("remainder_alpha", td, bound,
                                [&](const VertexSet &bag) { return independence_number(g, bag - s, limit); });
}

/// alpha(N(beta(x) ∩ S_light)) < bound at every node.
inline ClaimReport check_light_neighborhood_alpha(const Graph &g, const TreeDecomposition &td, const VertexSet &light,
                                  const BigInt &bound, std::size_t limit = kDefaultAlphaLimit) {
  return detail::check_per_node("light_neighborhood_alpha", td, bound, [&](const VertexSet &bag) {
    return independence_number(g, neighborhood(g, bag & light), limit);
  });
}

/// |beta(x) ∩ S_heavy| < bound at every node.
inline ClaimReport check_heavy_count(const Graph &, const TreeDecomposition &td, const VertexSet &heavy,
                                  const BigInt &bound) {
  return detail::check_per_node("heavy_count", td, bound,
                                [&](const VertexSet &bag) { return static_cast<int>((bag & heavy).size()); });
}

struct PipelineReport {
  Thresholds thresholds;

  // Preconditions; any failure stops the pipeline before the construction.
  ValidationReport input_validation;
  std::optional<Biclique> biclique;      ///< induced K_{t,t} found in g
  std::optional<MeasureReport> mu_excess;  ///< mu(T) > mu, with the witness bag matching
  int input_mu = 0;

  TransformState state;
  TransformedDecomposition transformed;
  ClaimReport remainder_alpha, light_neighborhood_alpha, heavy_count;
  ValidationReport transformed_valid;  ///< T' is a tree decomposition of g
  MeasureReport transformed_alpha;
  bool alpha_below_K = false;     ///< alpha(T') < K(mu, t)

  bool preconditions_hold() const { return input_validation.ok() && !biclique && !mu_excess; }
  bool certified() const {
    return preconditions_hold() && remainder_alpha.passed && light_neighborhood_alpha.passed && heavy_count.passed &&
           transformed_valid.ok() && alpha_below_K;
  }
};

/// Runs the whole construction on a K_{t,t}-free graph with a decomposition
/// of induced matching number at most mu, checking every intermediate claim.
/// `light_threshold` overrides C(mu, t) for small-scale experiments; the
/// claim bounds stay at their certified values either way.
inline PipelineReport theorem_pipeline(const Graph &g, const TreeDecomposition &td, unsigned mu, unsigned t,
                                       std::optional<BigInt> light_threshold = std::nullopt,
                                       std::size_t limit = kDefaultAlphaLimit) {
  PipelineReport rep;
  rep.thresholds = threshold_K(mu, t);
  rep.input_validation = validate(g, td);
  if (!rep.input_validation.ok()) return rep;
  rep.biclique = contains_biclique(g, t, BicliqueMode::induced);
  MeasureReport mu_rep = mu_of_decomposition(g, td);
  rep.input_mu = mu_rep.value;
  if (mu_rep.value > static_cast<int>(mu)) rep.mu_excess = mu_rep;
  if (!rep.preconditions_hold()) return rep;

  const Thresholds &th = rep.thresholds;
  VertexSet s = max_independent_set(g, limit);
  rep.state = make_transform_state(g, td, s, light_threshold.value_or(th.C), limit);
  rep.transformed = build_transformed_decomposition(g, td, rep.state);

  rep.remainder_alpha = check_remainder_alpha(g, td, s, th.M, limit);
  rep.light_neighborhood_alpha = check_light_neighborhood_alpha(g, td, rep.state.light, BigInt(mu) * th.C, limit);
  rep.heavy_count = check_heavy_count(g, td, rep.state.heavy, th.M);
  rep.transformed_valid = validate(g, rep.transformed.td);
  rep.transformed_alpha = alpha_of_decomposition(g, rep.transformed.td, limit);
  rep.alpha_below_K = BigInt(rep.transformed_alpha.value) < th.K;
  return rep;
}

} // namespace imtw
