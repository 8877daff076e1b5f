#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tetra/error.hpp"
#include "tetra/perm.hpp"

namespace tetra {

using EdgeId = std::uint32_t;

struct Edge {
  Point u = 0;
  Point v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// An edge with a chosen end.
struct Dart {
  EdgeId edge = 0;
  Point end = 0;
  friend bool operator==(const Dart&, const Dart&) = default;
};

/// Finite loopless multigraph. Edge ids are list positions and are never
/// renumbered by any operation on an existing graph.
///
/// Symmetries act on the combined domain vertices ⊎ edges: vertex v is
/// point v, edge e is point vertex_count() + e.
class Multigraph {
 public:
  Multigraph() = default;

  Multigraph(std::size_t vertex_count, std::vector<Edge> edges) : n_(vertex_count), edges_(std::move(edges)) {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto& ed = edges_[e];
      if (ed.u >= n_ || ed.v >= n_)
        throw IndexOutOfRange("edge " + std::to_string(e) + " has an endpoint >= " + std::to_string(n_));
      if (ed.u == ed.v) throw LoopRejected("edge " + std::to_string(e) + " is a loop at " + std::to_string(ed.u));
    }
    incident_.assign(n_, {});
    for (EdgeId e = 0; e < edges_.size(); ++e) {
      incident_[edges_[e].u].push_back(e);
      incident_[edges_[e].v].push_back(e);
    }
  }

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t domain_size() const { return n_ + edges_.size(); }
  Point edge_point(EdgeId e) const { return static_cast<Point>(n_ + e); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  /// Incident edge ids in ascending order.
  const std::vector<EdgeId>& incident(Point v) const { return incident_[v]; }
  std::size_t degree(Point v) const { return incident_[v].size(); }

  Point other_end(EdgeId e, Point v) const { return edges_[e].u == v ? edges_[e].v : edges_[e].u; }

  bool adjacent_edges(EdgeId a, EdgeId b) const {
    const auto& x = edges_[a];
    const auto& y = edges_[b];
    return x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
  }

  bool is_simple() const {
    std::vector<std::pair<Point, Point>> keys;
    keys.reserve(edges_.size());
    for (const auto& e : edges_) keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
  }

  bool is_regular(std::size_t k) const {
    for (Point v = 0; v < n_; ++v)
      if (degree(v) != k) return false;
    return true;
  }

  /// Edge id joining u and v in a simple graph, if any.
  std::optional<EdgeId> find_edge(Point u, Point v) const {
    for (EdgeId e : incident_[u])
      if (other_end(e, u) == v) return e;
    return std::nullopt;
  }

  /// Darts indexed 2e (initial vertex edge(e).u) and 2e+1 (initial vertex edge(e).v).
  std::size_t dart_count() const { return 2 * edges_.size(); }
  Dart dart(std::size_t index) const {
    EdgeId e = static_cast<EdgeId>(index / 2);
    return {e, index % 2 == 0 ? edges_[e].u : edges_[e].v};
  }

  /// Connected components (vertex sets, ascending), ordered by smallest vertex.
  std::vector<std::vector<Point>> components() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(n_, false);
    for (Point s = 0; s < n_; ++s) {
      if (seen[s]) continue;
      std::vector<Point> comp{s};
      seen[s] = true;
      for (std::size_t i = 0; i < comp.size(); ++i)
        for (EdgeId e : incident_[comp[i]]) {
          Point w = other_end(e, comp[i]);
          if (!seen[w]) {
            seen[w] = true;
            comp.push_back(w);
          }
        }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  bool is_connected() const { return n_ <= 1 || components().size() == 1; }

  /// Induced subgraph on `vertices` (relabelled by sorted order) keeping edge order.
  Multigraph induced_subgraph(const std::vector<Point>& vertices, std::vector<EdgeId>* edge_map = nullptr) const {
    std::vector<std::int64_t> idx(n_, -1);
    std::vector<Point> vs = vertices;
    std::sort(vs.begin(), vs.end());
    for (std::size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = static_cast<std::int64_t>(i);
    std::vector<Edge> es;
    if (edge_map) edge_map->clear();
    for (EdgeId e = 0; e < edges_.size(); ++e) {
      auto a = idx[edges_[e].u];
      auto b = idx[edges_[e].v];
      if (a >= 0 && b >= 0) {
        es.push_back({static_cast<Point>(a), static_cast<Point>(b)});
        if (edge_map) edge_map->push_back(e);
      }
    }
    return Multigraph(vs.size(), std::move(es));
  }

  /// Extends a vertex permutation of a simple graph to vertices ⊎ edges.
  Perm lift_vertex_perm(const Perm& vperm) const {
    if (vperm.size() != n_) throw DomainMismatch("vertex permutation has wrong degree");
    std::map<std::pair<Point, Point>, EdgeId> lookup;
    for (EdgeId e = 0; e < edges_.size(); ++e)
      lookup[{std::min(edges_[e].u, edges_[e].v), std::max(edges_[e].u, edges_[e].v)}] = e;
    std::vector<Point> img(domain_size());
    for (Point v = 0; v < n_; ++v) img[v] = vperm[v];
    for (EdgeId e = 0; e < edges_.size(); ++e) {
      Point a = vperm[edges_[e].u];
      Point b = vperm[edges_[e].v];
      auto it = lookup.find({std::min(a, b), std::max(a, b)});
      if (it == lookup.end()) throw InvalidParameter("vertex permutation is not an automorphism");
      img[n_ + e] = edge_point(it->second);
    }
    return Perm(std::move(img));
  }

  /// True iff p (on vertices ⊎ edges) satisfies ∂(eᵖ) = ∂(e)ᵖ for every edge.
  bool is_automorphism(const Perm& p) const {
    if (p.size() != domain_size()) return false;
    for (Point v = 0; v < n_; ++v)
      if (p[v] >= n_) return false;
    for (EdgeId e = 0; e < edges_.size(); ++e) {
      Point img = p[n_ + e];
      if (img < n_) return false;
      const Edge& target = edges_[img - n_];
      Point a = p[edges_[e].u];
      Point b = p[edges_[e].v];
      if (!((target.u == a && target.v == b) || (target.u == b && target.v == a))) return false;
    }
    return true;
  }

  /// Image of a dart index under a symmetry p.
  std::size_t dart_image(const Perm& p, std::size_t dart_index) const {
    Dart d = dart(dart_index);
    EdgeId e2 = static_cast<EdgeId>(p[n_ + d.edge] - n_);
    Point end2 = p[d.end];
    return 2 * static_cast<std::size_t>(e2) + (edges_[e2].u == end2 ? 0 : 1);
  }

  friend bool operator==(const Multigraph& a, const Multigraph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

inline Multigraph make_multigraph(std::size_t vertex_count, const std::vector<std::pair<Point, Point>>& pairs) {
  std::vector<Edge> es;
  es.reserve(pairs.size());
  for (auto [u, v] : pairs) es.push_back({u, v});
  return Multigraph(vertex_count, std::move(es));
}

enum class Color : std::uint8_t { black = 0, white = 1 };

/// Multigraph with a proper black/white vertex colouring.
struct ColoredGraph {
  Multigraph graph;
  std::vector<Color> color;

  ColoredGraph() = default;
  ColoredGraph(Multigraph g, std::vector<Color> c) : graph(std::move(g)), color(std::move(c)) {
    if (color.size() != graph.vertex_count()) throw InvalidParameter("colour list length differs from vertex count");
    for (EdgeId e = 0; e < graph.edge_count(); ++e)
      if (color[graph.edge(e).u] == color[graph.edge(e).v])
        throw InvalidParameter("edge " + std::to_string(e) + " is monochromatic");
  }

  std::vector<Point> vertices_of(Color c) const {
    std::vector<Point> out;
    for (Point v = 0; v < color.size(); ++v)
      if (color[v] == c) out.push_back(v);
    return out;
  }
  std::vector<Point> blacks() const { return vertices_of(Color::black); }
  std::vector<Point> whites() const { return vertices_of(Color::white); }

  /// The white endvertex of an edge.
  Point white_end(EdgeId e) const {
    const auto& ed = graph.edge(e);
    return color[ed.u] == Color::white ? ed.u : ed.v;
  }
  Point black_end(EdgeId e) const {
    const auto& ed = graph.edge(e);
    return color[ed.u] == Color::black ? ed.u : ed.v;
  }
};

/// Proper 2-colouring with the smallest vertex of each component black, if bipartite.
inline std::optional<std::vector<Color>> bipartition(const Multigraph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (Point s = 0; s < g.vertex_count(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Point> stack{s};
    while (!stack.empty()) {
      Point u = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(u)) {
        Point w = g.other_end(e, u);
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          stack.push_back(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Color> c(g.vertex_count());
  for (std::size_t v = 0; v < c.size(); ++v) c[v] = side[v] == 0 ? Color::black : Color::white;
  return c;
}

inline ColoredGraph two_colored(const Multigraph& g) {
  auto c = bipartition(g);
  if (!c) throw InvalidParameter("graph is not bipartite");
  return ColoredGraph(g, std::move(*c));
}

/// X*: black vertices keep their indices, the white vertex of edge e is
/// vertex_count + e, and edge e becomes edges 2e = {u, w_e}, 2e+1 = {v, w_e}.
inline ColoredGraph subdivision(const Multigraph& x) {
  std::size_t n = x.vertex_count();
  std::vector<Edge> es;
  es.reserve(2 * x.edge_count());
  for (EdgeId e = 0; e < x.edge_count(); ++e) {
    Point w = static_cast<Point>(n + e);
    es.push_back({x.edge(e).u, w});
    es.push_back({x.edge(e).v, w});
  }
  std::vector<Color> c(n + x.edge_count(), Color::white);
  std::fill(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n), Color::black);
  return ColoredGraph(Multigraph(n + x.edge_count(), std::move(es)), std::move(c));
}

/// Subdivided double. Black (v,i) is i·|V|+v, the white vertex of edge e is
/// 2|V|+e, with edges 4e..4e+3 joining it to (u,0), (u,1), (v,0), (v,1).
inline ColoredGraph sdd(const Multigraph& x) {
  std::size_t n = x.vertex_count();
  std::vector<Edge> es;
  es.reserve(4 * x.edge_count());
  for (EdgeId e = 0; e < x.edge_count(); ++e) {
    Point w = static_cast<Point>(2 * n + e);
    Point u = x.edge(e).u;
    Point v = x.edge(e).v;
    es.push_back({u, w});
    es.push_back({static_cast<Point>(n + u), w});
    es.push_back({v, w});
    es.push_back({static_cast<Point>(n + v), w});
  }
  std::vector<Color> c(2 * n + x.edge_count(), Color::white);
  std::fill(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(2 * n), Color::black);
  return ColoredGraph(Multigraph(2 * n + x.edge_count(), std::move(es)), std::move(c));
}

/// k disjoint copies of b: vertex (v,i) is i·|V|+v, edge (e,i) is i·|E|+e.
struct Copies {
  Multigraph graph;
  std::size_t copies = 0;
  std::size_t base_vertices = 0;
  std::size_t base_edges = 0;

  std::pair<Point, std::size_t> vertex_label(Point v) const { return {static_cast<Point>(v % base_vertices), v / base_vertices}; }
  std::pair<EdgeId, std::size_t> edge_label(EdgeId e) const { return {static_cast<EdgeId>(e % base_edges), e / base_edges}; }
};

inline Copies disjoint_copies(const Multigraph& b, std::size_t k) {
  if (k == 0) throw InvalidParameter("disjoint_copies needs k >= 1");
  std::vector<Edge> es;
  es.reserve(k * b.edge_count());
  auto n = static_cast<Point>(b.vertex_count());
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& e : b.edges()) es.push_back({static_cast<Point>(e.u + i * n), static_cast<Point>(e.v + i * n)});
  return {Multigraph(k * b.vertex_count(), std::move(es)), k, b.vertex_count(), b.edge_count()};
}

/// Merges white vertices class by class. Output numbering: black vertices in
/// their original relative order, then one white vertex per class in the
/// given class order. Edge ids are preserved.
inline ColoredGraph quotient_white(const ColoredGraph& xstar, const std::vector<std::vector<Point>>& classes) {
  const Multigraph& g = xstar.graph;
  std::vector<std::int64_t> new_index(g.vertex_count(), -1);
  std::size_t next = 0;
  for (Point v = 0; v < g.vertex_count(); ++v)
    if (xstar.color[v] == Color::black) new_index[v] = static_cast<std::int64_t>(next++);
  std::size_t black_count = next;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) throw InvalidParameter("empty white class");
    for (Point w : classes[c]) {
      if (w >= g.vertex_count() || xstar.color[w] != Color::white)
        throw InvalidParameter("class member " + std::to_string(w) + " is not a white vertex");
      if (new_index[w] >= 0) throw InvalidParameter("white vertex " + std::to_string(w) + " in two classes");
      new_index[w] = static_cast<std::int64_t>(black_count + c);
    }
  }
  for (Point v = 0; v < g.vertex_count(); ++v)
    if (new_index[v] < 0) throw InvalidParameter("white vertex " + std::to_string(v) + " is in no class");
  std::vector<Edge> es;
  es.reserve(g.edge_count());
  for (const auto& e : g.edges())
    es.push_back({static_cast<Point>(new_index[e.u]), static_cast<Point>(new_index[e.v])});
  Multigraph q(black_count + classes.size(), std::move(es));
  if (!q.is_simple()) throw NotSeparating("merging creates parallel edges: a class relates two adjacent edges");
  std::vector<Color> col(q.vertex_count(), Color::white);
  std::fill(col.begin(), col.begin() + static_cast<std::ptrdiff_t>(black_count), Color::black);
  return ColoredGraph(std::move(q), std::move(col));
}

struct StructureReport {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::map<std::size_t, std::size_t> valences;  // valence -> number of vertices
  bool is_simple = false;
  bool is_bipartite = false;
  bool is_connected = false;
  std::vector<std::vector<Point>> components;
  std::optional<std::size_t> girth;  // absent for forests
};

inline std::optional<std::size_t> girth(const Multigraph& g) {
  std::optional<std::size_t> best;
  std::size_t n = g.vertex_count();
  std::vector<std::int64_t> dist(n);
  std::vector<std::int64_t> parent_edge(n);
  for (Point s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent_edge[s] = -1;
    std::vector<Point> queue{s};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Point u = queue[i];
      for (EdgeId e : g.incident(u)) {
        if (static_cast<std::int64_t>(e) == parent_edge[u]) continue;
        Point w = g.other_end(e, u);
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent_edge[w] = e;
          queue.push_back(w);
        } else {
          auto len = static_cast<std::size_t>(dist[u] + dist[w] + 1);
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

inline StructureReport analyze(const Multigraph& g) {
  StructureReport r;
  r.vertex_count = g.vertex_count();
  r.edge_count = g.edge_count();
  for (Point v = 0; v < g.vertex_count(); ++v) ++r.valences[g.degree(v)];
  r.is_simple = g.is_simple();
  r.is_bipartite = bipartition(g).has_value();
  r.components = g.components();
  r.is_connected = r.components.size() <= 1;
  r.girth = girth(g);
  return r;
}

// ---------------------------------------------------------------------------
// Text format:
//   vertices N
//   edge u v            (one per edge, in edge-id order)
//   color v black|white (optional)

inline std::string to_text(const Multigraph& g, const std::vector<Color>* color = nullptr) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << "\n";
  for (const auto& e : g.edges()) out << "edge " << e.u << " " << e.v << "\n";
  if (color)
    for (std::size_t v = 0; v < color->size(); ++v)
      out << "color " << v << " " << ((*color)[v] == Color::black ? "black" : "white") << "\n";
  return out.str();
}

inline std::string to_text(const ColoredGraph& cg) { return to_text(cg.graph, &cg.color); }

struct ParsedGraph {
  Multigraph graph;
  std::optional<std::vector<Color>> color;
};

inline ParsedGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<std::size_t> n;
  std::vector<Edge> es;
  std::vector<std::pair<Point, Color>> colors;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    auto fail = [&](const std::string& why) { throw ParseError("line " + std::to_string(lineno) + ": " + why); };
    if (kw == "vertices") {
      std::size_t v = 0;
      if (!(ls >> v)) fail("expected vertex count");
      n = v;
    } else if (kw == "edge") {
      long long u = -1, v = -1;
      if (!(ls >> u >> v) || u < 0 || v < 0) fail("expected two vertex indices");
      es.push_back({static_cast<Point>(u), static_cast<Point>(v)});
    } else if (kw == "color") {
      long long v = -1;
      std::string c;
      if (!(ls >> v >> c) || v < 0 || (c != "black" && c != "white")) fail("expected 'color v black|white'");
      colors.emplace_back(static_cast<Point>(v), c == "black" ? Color::black : Color::white);
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }
  if (!n) throw ParseError("missing 'vertices N' line");
  ParsedGraph pg{Multigraph(*n, std::move(es)), std::nullopt};
  if (!colors.empty()) {
    if (colors.size() != *n) throw ParseError("colour lines must cover every vertex");
    std::vector<Color> c(*n);
    std::vector<bool> set(*n, false);
    for (auto [v, col] : colors) {
      if (v >= *n) throw IndexOutOfRange("colour line for vertex " + std::to_string(v));
      c[v] = col;
      set[v] = true;
    }
    if (std::find(set.begin(), set.end(), false) != set.end()) throw ParseError("colour lines must cover every vertex");
    pg.color = std::move(c);
  }
  return pg;
}

/// FNV-1a of the exact graph text, as 16 lowercase hex digits. Identifies a
/// labelled graph (not its isomorphism class) in partition and push files.
inline std::string graph_hash(const Multigraph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : to_text(g)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[h & 0xF];
    h >>= 4;
  }
  return s;
}

}  // namespace tetra
