#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "imtw/error.hpp"
#include "imtw/graph.hpp"
#include "imtw/tree_decomposition.hpp"

// File formats (all vertex and bag indices 1-based on disk, 0-based in memory):
//
//   .gr   p <n> <m>            (also accepts "p tw <n> <m>")
//         <u> <v>              m lines
//   .td   s td <bags> <max-bag-size> <n>
//         b <id> <v1> <v2> ...  one line per bag
//         <id1> <id2>           tree edges
//   sidecar (matchings / sets): one whitespace-separated line per edge or set
//
// Lines starting with 'c' are comments everywhere; blank lines are ignored.

namespace imtw {
namespace detail {

struct Line {
  int number = 0;
  std::vector<std::string_view> tokens;
};

class LineReader {
public:
  explicit LineReader(std::istream &in) : in_(in) {}

  /// Next non-blank, non-comment line.
  std::optional<Line> next() {
    while (std::getline(in_, buf_)) {
      ++number_;
      Line line{number_, split(buf_)};
      if (line.tokens.empty() || line.tokens.front().front() == 'c') continue;
      return line;
    }
    return std::nullopt;
  }
  int number() const { return number_; }

private:
  static std::vector<std::string_view> split(const std::string &s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
      std::size_t j = i;
      while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
      if (j > i) out.emplace_back(s.data() + i, j - i);
      i = j;
    }
    return out;
  }

  std::istream &in_;
  std::string buf_;
  int number_ = 0;
};

inline long long to_int(std::string_view tok, int line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("expected an integer, got '" + std::string(tok) + "'", line);
  return v;
}

inline Vertex to_vertex(std::string_view tok, std::size_t n, int line) {
  long long v = to_int(tok, line);
  if (v < 1 || static_cast<unsigned long long>(v) > n)
    throw ParseError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n), line);
  return static_cast<Vertex>(v - 1);
}

inline std::ifstream open_input(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return in;
}

} // namespace detail

inline Graph parse_graph(std::istream &in) {
  detail::LineReader reader(in);
  auto header = reader.next();
  if (!header) throw ParseError("missing 'p' header", reader.number());
  auto &h = header->tokens;
  std::size_t off = (h.size() == 4 && h[1] == "tw") ? 2 : 1;
  if (h.front() != "p" || h.size() != off + 2)
    throw ParseError("header must be 'p <n> <m>'", header->number);
  long long n = detail::to_int(h[off], header->number), m = detail::to_int(h[off + 1], header->number);
  if (n < 0 || m < 0) throw ParseError("negative vertex or edge count", header->number);

  std::vector<std::pair<Vertex, Vertex>> edges;
  while (auto line = reader.next()) {
    if (line->tokens.size() != 2) throw ParseError("edge line must hold exactly two vertices", line->number);
    if (static_cast<long long>(edges.size()) == m)
      throw ParseError("more edge lines than the " + std::to_string(m) + " declared", line->number);
    Vertex u = detail::to_vertex(line->tokens[0], static_cast<std::size_t>(n), line->number);
    Vertex v = detail::to_vertex(line->tokens[1], static_cast<std::size_t>(n), line->number);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u + 1), line->number);
    edges.emplace_back(u, v);
  }
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()),
                     reader.number());
  return Graph(static_cast<std::size_t>(n), edges);
}

inline Graph read_graph_file(const std::string &path) {
  auto in = detail::open_input(path);
  return parse_graph(in);
}

inline void write_graph(std::ostream &out, const Graph &g) {
  out << "p " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge &e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

/// Reads a decomposition of `host`. Only the format is checked; tree shape
/// and the decomposition conditions are left to validate().
inline TreeDecomposition parse_td(std::istream &in, const Graph &host) {
  detail::LineReader reader(in);
  auto header = reader.next();
  if (!header) throw ParseError("missing 's td' header", reader.number());
  auto &h = header->tokens;
  if (h.size() != 5 || h[0] != "s" || h[1] != "td")
    throw ParseError("header must be 's td <bags> <max-bag-size> <n>'", header->number);
  long long k = detail::to_int(h[2], header->number);
  long long width = detail::to_int(h[3], header->number);
  long long n = detail::to_int(h[4], header->number);
  if (k < 0 || width < 0) throw ParseError("negative bag count or bag size", header->number);
  if (n != static_cast<long long>(host.vertex_count()))
    throw ParseError("decomposition is for " + std::to_string(n) + " vertices, graph has " +
                         std::to_string(host.vertex_count()),
                     header->number);

  const std::size_t nv = host.vertex_count();
  TreeDecomposition td;
  td.bags.assign(static_cast<std::size_t>(k), VertexSet(nv));
  std::vector<char> seen(static_cast<std::size_t>(k), 0);
  auto bag_id = [&](std::string_view tok, int line) {
    long long id = detail::to_int(tok, line);
    if (id < 1 || id > k) throw ParseError("unknown bag id " + std::to_string(id), line);
    return static_cast<Node>(id - 1);
  };
  while (auto line = reader.next()) {
    auto &t = line->tokens;
    if (t[0] == "b") {
      if (t.size() < 2) throw ParseError("bag line needs an id", line->number);
      Node id = bag_id(t[1], line->number);
      if (seen[id]) throw ParseError("bag " + std::to_string(id + 1) + " defined twice", line->number);
      seen[id] = 1;
      for (std::size_t i = 2; i < t.size(); ++i) td.bags[id].insert(detail::to_vertex(t[i], nv, line->number));
    } else {
      if (t.size() != 2) throw ParseError("tree edge line must hold exactly two bag ids", line->number);
      td.tree_edges.emplace_back(bag_id(t[0], line->number), bag_id(t[1], line->number));
    }
  }
  for (long long i = 0; i < k; ++i)
    if (!seen[i]) throw ParseError("bag " + std::to_string(i + 1) + " is never defined", reader.number());
  if (static_cast<long long>(td.max_bag_size()) != width)
    throw ParseError("header declares maximum bag size " + std::to_string(width) + ", bags have " +
                         std::to_string(td.max_bag_size()),
                     header->number);
  return td;
}

inline TreeDecomposition read_td_file(const std::string &path, const Graph &host) {
  auto in = detail::open_input(path);
  return parse_td(in, host);
}

/// Canonical form: bags in id order with ascending members, then the
/// normalized tree edges.
inline void write_td(std::ostream &out, const TreeDecomposition &td, std::size_t n) {
  out << "s td " << td.node_count() << ' ' << td.max_bag_size() << ' ' << n << '\n';
  for (std::size_t x = 0; x < td.node_count(); ++x) {
    out << "b " << x + 1;
    td.bags[x].for_each([&](Vertex v) { out << ' ' << v + 1; });
    out << '\n';
  }
  for (auto [a, b] : td.normalized_edges()) out << a + 1 << ' ' << b + 1 << '\n';
}

inline std::string td_to_string(const TreeDecomposition &td, std::size_t n) {
  std::ostringstream os;
  write_td(os, td, n);
  return os.str();
}

/// One "u v" line per edge. Pairs are range-checked but not checked
/// against the graph; is_matching() does that.
inline Matching parse_matching(std::istream &in, const Graph &host) {
  detail::LineReader reader(in);
  Matching out;
  while (auto line = reader.next()) {
    if (line->tokens.size() != 2) throw ParseError("matching line must hold exactly two vertices", line->number);
    Vertex u = detail::to_vertex(line->tokens[0], host.vertex_count(), line->number);
    Vertex v = detail::to_vertex(line->tokens[1], host.vertex_count(), line->number);
    if (u == v) throw ParseError("matching edge with equal endpoints", line->number);
    out.emplace_back(u, v);
  }
  return out;
}

/// One set per line.
inline std::vector<VertexSet> parse_sets(std::istream &in, const Graph &host) {
  detail::LineReader reader(in);
  std::vector<VertexSet> out;
  while (auto line = reader.next()) {
    VertexSet s(host.vertex_count());
    for (auto tok : line->tokens) s.insert(detail::to_vertex(tok, host.vertex_count(), line->number));
    out.push_back(std::move(s));
  }
  return out;
}

inline Matching read_matching_file(const std::string &path, const Graph &host) {
  auto in = detail::open_input(path);
  return parse_matching(in, host);
}

inline std::vector<VertexSet> read_sets_file(const std::string &path, const Graph &host) {
  auto in = detail::open_input(path);
  return parse_sets(in, host);
}

} // namespace imtw
