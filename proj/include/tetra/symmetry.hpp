#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tetra/canon.hpp"
#include "tetra/multigraph.hpp"
#include "tetra/partition.hpp"
#include "tetra/permgroup.hpp"

namespace tetra {

/// Symmetry group of a multigraph acting on vertices ⊎ edges.
struct AutomorphismGroup {
  PermGroup group;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  bool color_preserving = false;

  Order order() const { return group.order(); }
  PermGroup vertex_action() const { return group.induced_action(0, vertex_count); }
  PermGroup edge_action() const { return group.induced_action(vertex_count, edge_count); }
};

namespace detail {

constexpr std::uint32_t kEdgeColor = 1u << 20;
constexpr std::uint32_t kClassColor = kEdgeColor + 1;

/// Simple incidence graph: node v for vertex v, node |V|+e for edge e, and
/// optionally one node per edge class adjacent to its member edges.
inline ColoredSimpleGraph incidence_graph(const Multigraph& g, const std::vector<std::uint32_t>* vertex_colors,
                                          const std::vector<std::vector<EdgeId>>* classes) {
  std::size_t n = g.vertex_count();
  std::size_t m = g.edge_count();
  std::size_t k = classes ? classes->size() : 0;
  ColoredSimpleGraph h;
  h.adj.assign(n + m + k, {});
  h.color.assign(n + m + k, 0);
  for (Point v = 0; v < n; ++v) h.color[v] = vertex_colors ? (*vertex_colors)[v] : 0;
  for (EdgeId e = 0; e < m; ++e) {
    Point node = static_cast<Point>(n + e);
    h.color[node] = kEdgeColor;
    h.adj[node] = {g.edge(e).u, g.edge(e).v};
    h.adj[g.edge(e).u].push_back(node);
    h.adj[g.edge(e).v].push_back(node);
  }
  for (std::size_t c = 0; c < k; ++c) {
    Point node = static_cast<Point>(n + m + c);
    h.color[node] = kClassColor;
    for (EdgeId e : (*classes)[c]) {
      h.adj[node].push_back(static_cast<Point>(n + e));
      h.adj[n + e].push_back(node);
    }
  }
  return h;
}

inline std::vector<std::uint32_t> color_codes(const std::vector<Color>& c) {
  std::vector<std::uint32_t> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[i] == Color::black ? 0 : 1;
  return out;
}

inline AutomorphismGroup group_from_search(const Multigraph& g, const SearchResult& r, bool colored) {
  std::size_t d = g.domain_size();
  std::vector<Perm> gens;
  for (const auto& p : r.generators) {
    if (p.size() == d) {
      gens.push_back(p);
      continue;
    }
    std::vector<Point> img(p.images().begin(), p.images().begin() + static_cast<std::ptrdiff_t>(d));
    gens.emplace_back(std::move(img));
  }
  for (const auto& p : gens)
    if (!g.is_automorphism(p)) throw Error("internal: search produced a non-automorphism");
  AutomorphismGroup a{PermGroup(d, std::move(gens), {}, r.order), g.vertex_count(), g.edge_count(), colored};
  if (a.group.order() != r.order) throw Error("internal: Schreier-Sims order disagrees with search order");
  return a;
}

}  // namespace detail

inline AutomorphismGroup automorphism_group(const Multigraph& g) {
  auto h = detail::incidence_graph(g, nullptr, nullptr);
  return detail::group_from_search(g, search_automorphisms(h), false);
}

/// Colour-preserving symmetries of a 2-coloured graph.
inline AutomorphismGroup color_automorphism_group(const ColoredGraph& cg) {
  auto codes = detail::color_codes(cg.color);
  auto h = detail::incidence_graph(cg.graph, &codes, nullptr);
  return detail::group_from_search(cg.graph, search_automorphisms(h), true);
}

/// Symmetries mapping every class of `p` onto a class of `p`; colour-preserving
/// when a colouring is given.
inline AutomorphismGroup partition_stabilizer(const Multigraph& g, const EdgePartition& p,
                                              const std::vector<Color>* coloring = nullptr) {
  if (!covers_edges_exactly(g, p.classes)) throw InvalidParameter("partition does not cover the edge set");
  std::vector<std::uint32_t> codes;
  if (coloring) codes = detail::color_codes(*coloring);
  auto h = detail::incidence_graph(g, coloring ? &codes : nullptr, &p.classes);
  return detail::group_from_search(g, search_automorphisms(h), coloring != nullptr);
}

inline AutomorphismGroup partition_stabilizer(const AutomorphismGroup& a, const Multigraph& g, const EdgePartition& p,
                                              const std::vector<Color>* coloring = nullptr) {
  if (a.vertex_count != g.vertex_count() || a.edge_count != g.edge_count())
    throw DomainMismatch("group and graph sizes differ");
  return partition_stabilizer(g, p, a.color_preserving ? coloring : nullptr);
}

/// Orbit of dart 0 under the group, as dart indices (2e, 2e+1 = ends u, v of e).
inline std::vector<std::size_t> dart_orbit(const Multigraph& g, const PermGroup& group, std::size_t start = 0) {
  std::vector<std::size_t> orbit{start};
  std::vector<bool> seen(g.dart_count(), false);
  seen[start] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto& s : group.generators()) {
      std::size_t d = g.dart_image(s, orbit[i]);
      if (!seen[d]) {
        seen[d] = true;
        orbit.push_back(d);
      }
    }
  return orbit;
}

inline bool is_dart_transitive(const Multigraph& g, const PermGroup& group) {
  if (g.edge_count() == 0) return true;
  return dart_orbit(g, group).size() == g.dart_count();
}

inline bool is_edge_transitive(const Multigraph& g, const PermGroup& group) {
  if (g.edge_count() == 0) return true;
  return group.orbit(g.edge_point(0)).size() == g.edge_count();
}

inline bool is_vertex_transitive(const Multigraph& g, const PermGroup& group) {
  if (g.vertex_count() == 0) return true;
  return group.orbit(0).size() == g.vertex_count();
}

struct TransitivityReport {
  bool vertex_transitive = false;
  bool edge_transitive = false;
  bool dart_transitive = false;
  bool bi_transitive = false;
  bool semisymmetric = false;
  Order aut_order = 0;
  Order color_aut_order = 0;  // 0 when no colouring applies
};

/// Uses the given colouring, else the bipartition when the graph is bipartite.
inline TransitivityReport transitivity_report(const Multigraph& g, const std::vector<Color>* coloring = nullptr) {
  TransitivityReport r;
  auto a = automorphism_group(g);
  r.aut_order = a.order();
  r.vertex_transitive = is_vertex_transitive(g, a.group);
  r.edge_transitive = is_edge_transitive(g, a.group);
  r.dart_transitive = is_dart_transitive(g, a.group);
  std::optional<std::vector<Color>> col;
  if (coloring)
    col = *coloring;
  else
    col = bipartition(g);
  if (col) {
    auto c = color_automorphism_group(ColoredGraph(g, *col));
    r.color_aut_order = c.order();
    r.bi_transitive = is_edge_transitive(g, c.group);
  }
  bool regular = g.vertex_count() == 0 || g.is_regular(g.degree(0));
  r.semisymmetric = regular && r.bi_transitive && !r.vertex_transitive;
  return r;
}

struct LocalAction {
  Point vertex = 0;
  std::vector<EdgeId> incident;  // domain point i is incident[i]
  PermGroup group;
  std::vector<BlockSystem> size2_blocks;  // only for transitive actions
};

/// Group induced on the edges at v by the stabilizer of v.
inline LocalAction local_action(const PermGroup& group, const Multigraph& g, Point v) {
  if (v >= g.vertex_count()) throw IndexOutOfRange("local_action vertex outside graph");
  LocalAction la;
  la.vertex = v;
  la.incident = g.incident(v);
  PermGroup stab = group.stabilizer(v);
  std::vector<Point> pts;
  for (EdgeId e : la.incident) pts.push_back(g.edge_point(e));
  la.group = stab.induced_action_on(pts);
  if (la.group.degree() > 0 && la.group.is_transitive()) la.size2_blocks = size2_block_systems(la.group);
  return la;
}

inline LocalAction local_action(const AutomorphismGroup& a, const Multigraph& g, Point v) {
  return local_action(a.group, g, v);
}

// ---------------------------------------------------------------------------
// Certificates and isomorphism

struct Certificate {
  std::vector<std::uint32_t> words;

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(words.size() * 8);
    for (std::uint32_t w : words)
      for (int sh = 28; sh >= 0; sh -= 4) s.push_back(digits[(w >> sh) & 0xF]);
    return s;
  }

  /// 64-bit FNV-1a of the words, as 16 hex digits.
  std::string digest() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint32_t w : words)
      for (int sh = 0; sh < 32; sh += 8) {
        h ^= (w >> sh) & 0xFF;
        h *= 1099511628211ULL;
      }
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i, h >>= 4) s[static_cast<std::size_t>(i)] = digits[h & 0xF];
    return s;
  }

  friend bool operator==(const Certificate&, const Certificate&) = default;
  friend auto operator<=>(const Certificate& a, const Certificate& b) { return a.words <=> b.words; }
};

struct CanonicalForm {
  Certificate certificate;
  std::vector<Point> labeling;  // canonical position -> domain point (vertices ⊎ edges)
};

inline CanonicalForm canonical_form(const Multigraph& g, const std::vector<Color>* coloring = nullptr) {
  std::vector<std::uint32_t> codes;
  if (coloring) codes = detail::color_codes(*coloring);
  auto h = detail::incidence_graph(g, coloring ? &codes : nullptr, nullptr);
  CanonicalForm f;
  f.certificate.words = {static_cast<std::uint32_t>(g.vertex_count()), static_cast<std::uint32_t>(g.edge_count())};
  if (h.size() == 0) return f;
  auto r = search_automorphisms(h);
  f.certificate.words.insert(f.certificate.words.end(), r.certificate.begin(), r.certificate.end());
  f.labeling = r.labeling;
  return f;
}

inline Certificate canonical_certificate(const Multigraph& g) { return canonical_form(g).certificate; }
inline Certificate canonical_certificate(const ColoredGraph& cg) { return canonical_form(cg.graph, &cg.color).certificate; }

/// Checks that p maps vertices to vertices, edges to edges, and ∂(e)^p = ∂(e^p).
inline bool is_isomorphism(const Multigraph& x, const Multigraph& y, const Perm& p) {
  if (x.vertex_count() != y.vertex_count() || x.edge_count() != y.edge_count()) return false;
  if (p.size() != x.domain_size()) return false;
  std::size_t n = x.vertex_count();
  for (Point v = 0; v < n; ++v)
    if (p[v] >= n) return false;
  for (EdgeId e = 0; e < x.edge_count(); ++e) {
    Point img = p[n + e];
    if (img < n) return false;
    const Edge& t = y.edge(img - static_cast<Point>(n));
    Point a = p[x.edge(e).u];
    Point b = p[x.edge(e).v];
    if (!((t.u == a && t.v == b) || (t.u == b && t.v == a))) return false;
  }
  return true;
}

/// An isomorphism x → y on vertices ⊎ edges, verified, if one exists.
inline std::optional<Perm> are_isomorphic(const Multigraph& x, const Multigraph& y, const std::vector<Color>* cx = nullptr,
                                          const std::vector<Color>* cy = nullptr) {
  if (x.vertex_count() != y.vertex_count() || x.edge_count() != y.edge_count()) return std::nullopt;
  if ((cx == nullptr) != (cy == nullptr)) throw InvalidParameter("colourings must be given for both graphs or neither");
  auto fx = canonical_form(x, cx);
  auto fy = canonical_form(y, cy);
  if (fx.certificate != fy.certificate) return std::nullopt;
  std::vector<Point> img(x.domain_size());
  for (std::size_t i = 0; i < fx.labeling.size(); ++i) img[fx.labeling[i]] = fy.labeling[i];
  Perm p(std::move(img));
  if (!is_isomorphism(x, y, p)) throw Error("internal: certificate match without a valid isomorphism");
  return p;
}

inline std::optional<Perm> are_isomorphic(const ColoredGraph& x, const ColoredGraph& y) {
  return are_isomorphic(x.graph, y.graph, &x.color, &y.color);
}

}  // namespace tetra
