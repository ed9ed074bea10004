#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "imtw/experiments.hpp"
#include "imtw/extraction.hpp"
#include "imtw/io.hpp"
#include "imtw/json.hpp"
#include "imtw/matching.hpp"
#include "imtw/measures.hpp"
#include "imtw/solvers.hpp"
#include "imtw/thresholds.hpp"
#include "imtw/transform.hpp"

// Command-line front end. Exit codes: 0 success, 1 verified negative result
// (invalid decomposition, failed check, extraction gave up), 2 usage, parse
// or limit error.

namespace imtw::cli {

inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;

namespace detail {

struct Common {
  bool json = false;
  std::uint64_t seed = 1;
};

inline void add_common(CLI::App *cmd, Common &c) {
  cmd->add_flag("--json", c.json, "Emit JSON lines instead of key=value text");
  cmd->add_option("--seed", c.seed, "Seed for randomized verbs");
}

inline std::string join(const std::vector<int> &xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

inline std::string text(const VertexSet &s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Vertex v) {
    out += (first ? "" : ",") + std::to_string(v + 1);
    first = false;
  });
  return out + "}";
}

inline std::string text(const Matching &m) {
  std::string out;
  for (const Edge &e : m) out += (out.empty() ? "" : " ") + std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1);
  return out;
}

inline void print_violations(std::ostream &out, const ValidationReport &r) {
  for (const auto &v : r.violations) out << "violation " << to_string(v.kind) << ": " << v.detail << '\n';
}

inline void write_td_to(const std::string &path, const TreeDecomposition &td, std::size_t n) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write '" + path + "'", 0);
  write_td(f, td, n);
}

} // namespace detail

/// Runs one command line; all output goes to `out`, diagnostics to `err`.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"imtw: tree decompositions, tree-independence number and induced matching treewidth"};
  app.require_subcommand(1);
  detail::Common common;
  std::function<int()> action;

  std::string graph_path, td_path, out_path, param = "treealpha", method = "dp", matching_path, sets_path;
  std::size_t limit = 0, max_iterations = 1000, max_n = 0, seeds = 20;
  unsigned s = 1, t = 1, mu = 1;
  std::optional<std::string> s_big, m_big, mu_big, threshold;
  bool strict_induced = false, exact = false;

  auto graph_opt = [&](CLI::App *cmd) { cmd->add_option("--graph", graph_path, "Graph in .gr format")->required(); };

  // validate ---------------------------------------------------------------
  auto *validate_cmd = app.add_subcommand("validate", "Check a .td file against a graph");
  graph_opt(validate_cmd);
  validate_cmd->add_option("--td", td_path, "Decomposition in .td format")->required();
  detail::add_common(validate_cmd, common);
  validate_cmd->callback([&] {
    action = [&] {
      Graph g = read_graph_file(graph_path);
      TreeDecomposition td = read_td_file(td_path, g);
      ValidationReport rep = validate(g, td);
      if (common.json)
        out << json::validation(rep).dump() << '\n';
      else {
        out << (rep.ok() ? "valid" : "invalid") << '\n';
        detail::print_violations(out, rep);
      }
      return rep.ok() ? kOk : kNegative;
    };
  });

  // measure ----------------------------------------------------------------
  auto *measure_cmd = app.add_subcommand("measure", "Evaluate alpha(T) and mu(T) of a valid decomposition");
  graph_opt(measure_cmd);
  measure_cmd->add_option("--td", td_path, "Decomposition in .td format")->required();
  detail::add_common(measure_cmd, common);
  measure_cmd->callback([&] {
    action = [&] {
      Graph g = read_graph_file(graph_path);
      TreeDecomposition td = read_td_file(td_path, g);
      ValidationReport rep = validate(g, td);
      if (!rep.ok()) {
        if (common.json)
          out << json::validation(rep).dump() << '\n';
        else {
          out << "invalid\n";
          detail::print_violations(out, rep);
        }
        return kNegative;
      }
      MeasureReport a = alpha_of_decomposition(g, td), m = mu_of_decomposition(g, td);
      if (common.json) {
        out << nlohmann::json{{"alpha", json::measure(a, false)}, {"mu", json::measure(m, true)}}.dump() << '\n';
      } else {
        out << "alpha=" << a.value << " node=" << a.witness_node + 1 << " set=" << detail::text(a.witness_set) << '\n';
        out << "mu=" << m.value << " node=" << m.witness_node + 1 << " matching=" << detail::text(m.witness_matching)
            << '\n';
      }
      return kOk;
    };
  });

  // solve ------------------------------------------------------------------
  auto *solve_cmd = app.add_subcommand("solve", "Exact tree-independence number or induced matching treewidth");
  graph_opt(solve_cmd);
  solve_cmd->add_option("--param", param, "treealpha or mutw")->check(CLI::IsMember({"treealpha", "mutw"}));
  solve_cmd->add_option("--method", method, "dp (subset DP) or perm (ordering enumeration)")
      ->check(CLI::IsMember({"dp", "perm"}));
  solve_cmd->add_option("--limit", limit, "Refuse graphs with more vertices (0: method default)");
  solve_cmd->add_option("--out", out_path, "Write the witness .td here instead of stdout");
  detail::add_common(solve_cmd, common);
  solve_cmd->callback([&] {
    action = [&] {
      Graph g = read_graph_file(graph_path);
      SolverOptions opt{method == "dp" ? SearchMethod::subset_dp : SearchMethod::permutations, limit};
      SolverResult r = param == "treealpha" ? tree_independence_number(g, opt) : induced_matching_treewidth(g, opt);
      if (!out_path.empty()) detail::write_td_to(out_path, r.witness, g.vertex_count());
      if (common.json) {
        std::vector<int> ord;
        for (Vertex v : r.ordering) ord.push_back(v + 1);
        out << nlohmann::json{{"param", param},
                              {"value", r.value},
                              {"ordering", ord},
                              {"explored", r.explored},
                              {"td", td_to_string(r.witness, g.vertex_count())}}
                   .dump()
            << '\n';
      } else {
        out << "value=" << r.value << '\n';
        if (out_path.empty()) write_td(out, r.witness, g.vertex_count());
      }
      return kOk;
    };
  });

  // extract-matching -------------------------------------------------------
  auto *em_cmd = app.add_subcommand("extract-matching", "Induced matching or biclique from a bipartite matching");
  graph_opt(em_cmd);
  em_cmd->add_option("--matching", matching_path, "Matching sidecar (default: a maximum matching)");
  em_cmd->add_option("--s", s, "Target s (aim for s+1 edges)");
  em_cmd->add_option("--t", t, "Biclique size t")->check(CLI::PositiveNumber);
  detail::add_common(em_cmd, common);
  em_cmd->callback([&] {
    action = [&] {
      Graph g = read_graph_file(graph_path);
      Matching m = matching_path.empty() ? max_matching(g) : read_matching_file(matching_path, g);
      MatchingExtractionRecord r = extract_induced_matching(g, m, s, t);
      if (common.json) {
        out << json::matching_extraction(r).dump() << '\n';
        return kOk;
      }
      out << "outcome=" << to_string(r.outcome) << " matching_size=" << r.matching_size << " M=" << r.threshold
          << '\n';
      if (r.outcome == MatchingOutcome::induced_matching) {
        out << "size=" << r.induced_matching.size() << " turan_bound=" << r.turan_bound
            << " kst_guarantee=" << r.kst_guarantee << (r.kst_guarantee_applies ? "" : " (not applicable)") << '\n';
        out << "matching " << detail::text(r.induced_matching) << '\n';
      } else {
        const Biclique &b = r.induced_biclique ? *r.induced_biclique : *r.subgraph_biclique;
        out << "biclique left=" << detail::text(b.left) << " right=" << detail::text(b.right) << '\n';
      }
      if (!r.note.empty()) out << "note: " << r.note << '\n';
      return kOk;
    };
  });

  // extract-sets -----------------------------------------------------------
  auto *es_cmd = app.add_subcommand("extract-sets", "Independent set meeting every given independent set");
  graph_opt(es_cmd);
  es_cmd->add_option("--sets", sets_path, "Sets sidecar, one independent set per line")->required();
  es_cmd->add_option("--s", s, "Vertices to keep from every set")->check(CLI::PositiveNumber);
  es_cmd->add_option("--t", t, "Biclique size t")->check(CLI::PositiveNumber);
  es_cmd->add_option("--max-iterations", max_iterations, "Give up after this many draws")->check(CLI::PositiveNumber);
  detail::add_common(es_cmd, common);
  es_cmd->callback([&] {
    action = [&] {
      Graph g = read_graph_file(graph_path);
      auto sets = read_sets_file(sets_path, g);
      IndependentExtractionRecord r = extract_independent_sets(g, sets, s, t, common.seed, max_iterations);
      if (common.json) {
        out << json::set_extraction(r).dump() << '\n';
      } else if (r.success) {
        out << "success iterations=" << r.iterations << '\n';
        for (std::size_t i = 0; i < r.survivors.size(); ++i)
          out << "U" << i + 1 << "=" << detail::text(r.survivors[i]) << '\n';
        out << "union=" << detail::text(r.united()) << '\n';
      } else {
        out << "failure iterations=" << r.iterations << " min_edge_count=" << r.min_edge_count << '\n';
        if (r.densest_pair)
          out << "densest_pair=" << r.densest_pair->first + 1 << "," << r.densest_pair->second + 1
              << " edges=" << r.densest_pair_edges << '\n';
      }
      return r.success ? kOk : kNegative;
    };
  });

  // thresholds -------------------------------------------------------------
  auto *th_cmd = app.add_subcommand("thresholds", "Evaluate n_t, M(s,t), N(s,t,m) and M, C, K for mu");
  th_cmd->add_option("--t", t, "t")->required()->check(CLI::PositiveNumber);
  th_cmd->add_option("--s", s_big, "s for M(s,t) and N(s,t,m)");
  th_cmd->add_option("--m", m_big, "m for N(s,t,m)");
  th_cmd->add_option("--mu", mu_big, "mu for M, C, K");
  detail::add_common(th_cmd, common);
  th_cmd->callback([&] {
    action = [&] {
      auto big = [](const std::string &x) {
        BigInt v;
        try {
          v = BigInt(x);
        } catch (const std::exception &) {
          throw InvalidArgument("not an integer: '" + x + "'");
        }
        if (v < 0) throw InvalidArgument("negative value: '" + x + "'");
        return v;
      };
      if (m_big && !s_big) throw InvalidArgument("--m needs --s");
      nlohmann::json j{{"t", t}, {"n_t", kst_threshold(t)}};
      std::vector<std::string> lines{"n_t=" + std::to_string(kst_threshold(t))};
      if (s_big) {
        BigInt sv = big(*s_big);
        BigInt mv = threshold_M(sv, t);
        j["M(s,t)"] = mv.str();
        lines.push_back("M(" + sv.str() + "," + std::to_string(t) + ")=" + mv.str());
        if (m_big) {
          BigInt nv = threshold_N(sv, t, big(*m_big));
          j["N(s,t,m)"] = nv.str();
          lines.push_back("N(" + sv.str() + "," + std::to_string(t) + "," + *m_big + ")=" + nv.str());
        }
      }
      if (mu_big) {
        BigInt mv = big(*mu_big);
        if (mv > std::numeric_limits<unsigned>::max()) throw InvalidArgument("--mu is too large");
        Thresholds th = threshold_K(static_cast<unsigned>(mv), t);
        j["M"] = th.M.str();
        j["C"] = th.C.str();
        j["K"] = th.K.str();
        lines.push_back("M=" + th.M.str());
        lines.push_back("C=" + th.C.str());
        lines.push_back("K=" + th.K.str());
      }
      if (common.json)
        out << j.dump() << '\n';
      else
        for (const auto &l : lines) out << l << '\n';
      return kOk;
    };
  });

  // transform --------------------------------------------------------------
  auto *tr_cmd = app.add_subcommand("transform", "Build and certify the transformed decomposition");
  graph_opt(tr_cmd);
  tr_cmd->add_option("--td", td_path, "Input decomposition in .td format")->required();
  tr_cmd->add_option("--mu", mu, "Bound on mu(T)")->required();
  tr_cmd->add_option("--t", t, "Excluded biclique K_{t,t}")->required()->check(CLI::PositiveNumber);
  tr_cmd->add_option("--threshold", threshold, "Light/heavy cut-off c (default C(mu,t))");
  tr_cmd->add_option("--out", out_path, "Write the transformed .td here");
  detail::add_common(tr_cmd, common);
  tr_cmd->callback([&] {
    action = [&] {
      Graph g = read_graph_file(graph_path);
      TreeDecomposition td = read_td_file(td_path, g);
      std::optional<BigInt> c;
      if (threshold) {
        try {
          c = BigInt(*threshold);
        } catch (const std::exception &) {
          throw InvalidArgument("--threshold is not an integer: '" + *threshold + "'");
        }
      }
      PipelineReport r = theorem_pipeline(g, td, mu, t, c);
      if (r.preconditions_hold() && !out_path.empty())
        detail::write_td_to(out_path, r.transformed.td, g.vertex_count());
      if (common.json) {
        out << json::pipeline(r).dump() << '\n';
        return r.certified() ? kOk : kNegative;
      }
      out << "M=" << r.thresholds.M << " C=" << r.thresholds.C << " K=" << r.thresholds.K << '\n';
      if (!r.input_validation.ok()) {
        out << "input decomposition invalid\n";
        detail::print_violations(out, r.input_validation);
      }
      if (r.biclique)
        out << "precondition failed: induced K_{t,t} left=" << detail::text(r.biclique->left)
            << " right=" << detail::text(r.biclique->right) << '\n';
      if (r.mu_excess)
        out << "precondition failed: mu(T)=" << r.mu_excess->value << " > " << mu << " at node "
            << r.mu_excess->witness_node + 1 << " matching " << detail::text(r.mu_excess->witness_matching) << '\n';
      if (!r.preconditions_hold()) return kNegative;
      out << "S=" << detail::text(r.state.independent) << " light=" << detail::text(r.state.light)
          << " heavy=" << detail::text(r.state.heavy) << " c=" << r.state.light_threshold << '\n';
      for (const ClaimReport *cr : {&r.remainder_alpha, &r.light_neighborhood_alpha, &r.heavy_count}) {
        out << cr->claim << ": " << (cr->passed ? "pass" : "FAIL") << " bound=" << cr->bound
            << " values=" << detail::join(cr->values) << '\n';
      }
      out << "transformed_valid: " << (r.transformed_valid.ok() ? "pass" : "FAIL") << '\n';
      detail::print_violations(out, r.transformed_valid);
      out << "alpha(T')=" << r.transformed_alpha.value << " < K: " << (r.alpha_below_K ? "pass" : "FAIL") << '\n';
      if (out_path.empty()) write_td(out, r.transformed.td, g.vertex_count());
      return r.certified() ? kOk : kNegative;
    };
  });

  // lowerbound -------------------------------------------------------------
  auto *lb_cmd = app.add_subcommand("lowerbound", "Random bipartite lower-bound instances: properties and bound");
  lb_cmd->add_option("--t", t, "t")->required()->check(CLI::PositiveNumber);
  lb_cmd->add_option("--seeds", seeds, "Number of instances");
  lb_cmd->add_flag("--strict-induced", strict_induced, "Look for induced K_{t,t} anywhere, not only across sides");
  lb_cmd->add_flag("--exact", exact, "Also compute the exact tree-independence number when feasible");
  detail::add_common(lb_cmd, common);
  lb_cmd->callback([&] {
    action = [&] {
      std::size_t passing = 0;
      for (std::size_t i = 0; i < seeds; ++i) {
        std::uint64_t seed = derive_seed(common.seed, i);
        BipartiteInstance inst = lower_bound_instance(t, seed);
        PropertyReport pr = check_three_properties(inst.graph, inst.sides, t, strict_induced);
        nlohmann::json j{{"index", i},
                         {"seed", seed},
                         {"n", inst.sides.side_a.size()},
                         {"edges", inst.graph.edge_count()},
                         {"properties", json::properties(pr)}};
        std::string bound_text = "-";
        if (pr.co_biclique_free) {
          try {
            SeparatorBound sb = separator_lower_bound(inst.graph, inst.sides, t);
            j["separator"] = json::separator(sb);
            bound_text = sb.vacuous ? "0 (vacuous)" : std::to_string(sb.bound);
          } catch (const LimitExceeded &e) {
            j["separator_error"] = e.what();
            bound_text = "infeasible";
          }
        }
        if (exact && inst.graph.vertex_count() <= kDefaultDpLimit)
          j["treealpha"] = tree_independence_number(inst.graph).value;
        passing += pr.all();
        if (common.json) {
          out << j.dump() << '\n';
        } else {
          out << "seed=" << seed << " n=" << inst.sides.side_a.size() << " m=" << inst.graph.edge_count()
              << " (i)=" << pr.biclique_free << " (ii)=" << pr.co_biclique_free << " (iii)=" << pr.no_t_matching
              << " bound=" << bound_text;
          if (j.contains("treealpha")) out << " treealpha=" << j["treealpha"].get<int>();
          out << '\n';
        }
      }
      if (common.json)
        out << nlohmann::json{{"summary", {{"t", t}, {"instances", seeds}, {"all_properties", passing}}}}.dump()
            << '\n';
      else
        out << "all_properties=" << passing << "/" << seeds << '\n';
      return kOk;
    };
  });

  // kst-check --------------------------------------------------------------
  auto *kst_cmd = app.add_subcommand("kst-check", "Exhaustive check of the KST edge bound on small graphs");
  kst_cmd->add_option("--max-n", max_n, "Largest vertex count (at most 7)")->required();
  kst_cmd->add_option("--t", t, "t")->required()->check(CLI::PositiveNumber);
  detail::add_common(kst_cmd, common);
  kst_cmd->callback([&] {
    action = [&] {
      KstReport r = kst_exhaustive_check(max_n, t);
      if (common.json) {
        out << json::kst(r).dump() << '\n';
      } else {
        for (const auto &row : r.rows)
          out << "n=" << row.n << " graphs=" << row.graphs << " max_free_edges=" << row.max_free_edges
              << " bound=" << row.bound << " violations=" << row.violations << '\n';
        out << "violations=" << r.violations << '\n';
      }
      return r.violations == 0 ? kOk : kNegative;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

} // namespace imtw::cli
