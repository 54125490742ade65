#pragma once

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "graphpoly/bigint.hpp"
#include "graphpoly/edge_set.hpp"

namespace graphpoly {

// Simple undirected graph. Vertices are labeled 1..n. Edges are stored with
// u < v, sorted lexicographically and deduplicated; that ordering is the
// canonical linear order of the edge variables everywhere in this library.
// Immutable after construction.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph() = default;

  Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
      if (u == v) throw std::invalid_argument("loop edge " + std::to_string(u));
      if (u > v) std::swap(u, v);
      if (u < 1) throw std::invalid_argument("vertex labels are 1-based");
      if (v > n_) throw std::invalid_argument("edge endpoint " + std::to_string(v) +
                                              " exceeds vertex count " + std::to_string(n_));
      edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    incident_.assign(n_ + 1, {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      incident_[edges_[e].first].push_back(e);
      incident_[edges_[e].second].push_back(e);
    }
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
  }

  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(incident_[v].size());
  }

  // Indices (into edges()) of the edges touching v.
  const std::vector<std::size_t>& edges_at(int v) const {
    check_vertex(v);
    return incident_[v];
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(int v) const {
    if (v < 1 || v > n_) {
      throw std::out_of_range("vertex " + std::to_string(v) + " not in 1.." + std::to_string(n_));
    }
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

// Edge-to-vertex incidence matrices. C is 0/1 with exactly two ones per row;
// D equals C except the smaller endpoint of each edge carries -1. Rows follow
// the canonical edge order, columns the vertex order.
struct IncidencePair {
  std::vector<std::vector<int>> c;
  std::vector<std::vector<int>> d;
};

namespace detail {

inline int parse_positive_int(const std::string& tok, int line_no) {
  std::size_t pos = 0;
  long value = 0;
  try {
    value = std::stol(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" + tok + "'");
  }
  if (pos != tok.size() || value <= 0) {
    throw ParseError("line " + std::to_string(line_no) + ": expected positive integer, got '" +
                     tok + "'");
  }
  return static_cast<int>(value);
}

inline std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace detail

// Plain edge-list format: one "u v" pair per line, '#' starts a comment, and
// an optional leading header "n <N>" declares the vertex count (needed for
// isolated vertices). Without a header, n is the largest endpoint seen.
inline Graph parse_edge_list(std::istream& in) {
  std::vector<Graph::Edge> edges;
  int declared_n = -1;
  int max_vertex = 0;
  std::string raw;
  int line_no = 0;
  bool saw_content = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = detail::strip_cr(raw);
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue;
    if (a == "n" && !saw_content) {
      if (!(ls >> b) || (ls >> extra)) {
        throw ParseError("line " + std::to_string(line_no) + ": header must be 'n <N>'");
      }
      declared_n = detail::parse_positive_int(b, line_no);
      saw_content = true;
      continue;
    }
    saw_content = true;
    if (!(ls >> b) || (ls >> extra)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
    }
    int u = detail::parse_positive_int(a, line_no);
    int v = detail::parse_positive_int(b, line_no);
    if (u == v) {
      throw ParseError("line " + std::to_string(line_no) + ": loop edge " + std::to_string(u) +
                       " " + std::to_string(v));
    }
    edges.emplace_back(u, v);
    max_vertex = std::max({max_vertex, u, v});
  }
  if (declared_n >= 0 && max_vertex > declared_n) {
    throw ParseError("edge endpoint " + std::to_string(max_vertex) +
                     " exceeds declared vertex count " + std::to_string(declared_n));
  }
  return Graph(declared_n >= 0 ? declared_n : max_vertex, std::move(edges));
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

// DIMACS: "p edge <n> <m>" followed by m lines "e u v"; 'c' lines are
// comments. The declared m must match the number of edge lines.
inline Graph parse_dimacs(std::istream& in) {
  std::vector<Graph::Edge> edges;
  int n = -1;
  long declared_m = -1;
  long edge_lines = 0;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = detail::strip_cr(raw);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (kind == "c") continue;
    if (kind == "p") {
      if (n >= 0) throw ParseError("line " + std::to_string(line_no) + ": duplicate problem line");
      std::string fmt, ns, ms, extra;
      if (!(ls >> fmt >> ns >> ms) || (ls >> extra) || (fmt != "edge" && fmt != "col")) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'p edge <n> <m>'");
      }
      n = detail::parse_positive_int(ns, line_no);
      declared_m = ms == "0" ? 0 : detail::parse_positive_int(ms, line_no);
      continue;
    }
    if (kind == "e") {
      if (n < 0) throw ParseError("line " + std::to_string(line_no) + ": edge before problem line");
      std::string us, vs, extra;
      if (!(ls >> us >> vs) || (ls >> extra)) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'e <u> <v>'");
      }
      int u = detail::parse_positive_int(us, line_no);
      int v = detail::parse_positive_int(vs, line_no);
      if (u == v) {
        throw ParseError("line " + std::to_string(line_no) + ": loop edge " + std::to_string(u));
      }
      if (u > n || v > n) {
        throw ParseError("line " + std::to_string(line_no) + ": endpoint exceeds declared n");
      }
      edges.emplace_back(u, v);
      ++edge_lines;
      continue;
    }
    throw ParseError("line " + std::to_string(line_no) + ": unknown line type '" + kind + "'");
  }
  if (n < 0) throw ParseError("missing problem line 'p edge <n> <m>'");
  if (edge_lines != declared_m) {
    throw ParseError("declared m=" + std::to_string(declared_m) + " but found " +
                     std::to_string(edge_lines) + " edge lines");
  }
  return Graph(n, std::move(edges));
}

inline Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

// Round-trippable edge-list serialization (header kept so isolated vertices
// survive).
inline std::string to_edge_list_text(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
  return os.str();
}

// Same vertex set, complementary adjacency.
inline Graph complement(const Graph& g) {
  std::vector<Graph::Edge> edges;
  const int n = g.vertex_count();
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2 - g.edges().size());
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, std::move(edges));
}

inline IncidencePair incidence_matrices(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  IncidencePair p;
  p.c.assign(m, std::vector<int>(n, 0));
  p.d.assign(m, std::vector<int>(n, 0));
  for (int e = 0; e < m; ++e) {
    auto [u, v] = g.edges()[e];  // u < v
    p.c[e][u - 1] = 1;
    p.c[e][v - 1] = 1;
    p.d[e][u - 1] = -1;
    p.d[e][v - 1] = 1;
  }
  return p;
}

// The set E(v) of edges incident to v, as indices in the canonical order.
inline EdgeSet incident_edges(const Graph& g, int v) {
  EdgeSet s(g.edge_count());
  for (std::size_t e : g.edges_at(v)) s.set(e);
  return s;
}

}  // namespace graphpoly
