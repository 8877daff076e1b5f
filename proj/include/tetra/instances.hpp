#pragma once

// Worked instances: splits, relations, pairings and pushes with fixed labels.

#include <optional>
#include <string>
#include <vector>

#include "tetra/bgcg.hpp"
#include "tetra/families.hpp"

namespace tetra {

struct SplitInstance {
  ColoredGraph gamma;
  EdgePartition split;
};

/// Lifts an edge permutation of a simple graph without isolated vertices to
/// vertices ⊎ edges, if it preserves incidence.
inline std::optional<Perm> lift_edge_perm(const Multigraph& g, const Perm& on_edges) {
  if (on_edges.size() != g.edge_count()) throw DomainMismatch("edge permutation has the wrong degree");
  std::size_t n = g.vertex_count();
  std::map<std::vector<EdgeId>, Point> by_star;
  for (Point v = 0; v < n; ++v) by_star[g.incident(v)] = v;
  std::vector<Point> img(g.domain_size());
  for (Point v = 0; v < n; ++v) {
    std::vector<EdgeId> star;
    for (EdgeId e : g.incident(v)) star.push_back(on_edges[e]);
    std::sort(star.begin(), star.end());
    auto it = by_star.find(star);
    if (it == by_star.end()) return std::nullopt;
    img[v] = it->second;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) img[n + e] = static_cast<Point>(n + on_edges[e]);
  bool bijective = true;
  std::vector<bool> seen(img.size(), false);
  for (Point p : img) {
    if (seen[p]) bijective = false;
    seen[p] = true;
  }
  if (!bijective) return std::nullopt;
  Perm p(std::move(img));
  if (!g.is_automorphism(p)) return std::nullopt;
  return p;
}

/// K5 with edge {i,j} in class (i+j) mod 5.
inline EdgePartition k5_sum_pairing() {
  Multigraph k5 = make_family(family(CompleteGraph{5}));
  std::vector<std::vector<EdgeId>> classes(5);
  for (EdgeId e = 0; e < k5.edge_count(); ++e) classes[(k5.edge(e).u + k5.edge(e).v) % 5].push_back(e);
  return make_partition(k5, std::move(classes), PartitionKind::pairing);
}

/// C10(1,3) coloured by parity (even = black); each white vertex pairs its two
/// ±1 edges and its two ±3 edges.
inline SplitInstance c10_fig1_split() {
  Multigraph g = make_family(family(Circulant{10, {1, 3}}));
  std::vector<Color> col(10);
  for (Point v = 0; v < 10; ++v) col[v] = v % 2 == 0 ? Color::black : Color::white;
  ColoredGraph cg(g, col);
  auto id = [](long long x, int k) { return static_cast<EdgeId>(2 * detail::mod(x, 10) + k); };
  std::vector<std::vector<EdgeId>> classes;
  for (long long w = 1; w < 10; w += 2) {
    classes.push_back({id(w - 1, 0), id(w, 0)});
    classes.push_back({id(w - 3, 1), id(w, 1)});
  }
  return {cg, make_split(cg, std::move(classes))};
}

/// The split of K5 ⊔ K5 under the K2 construction with κ from the sum pairing,
/// moved onto R10(4,1) with its bipartition colouring.
inline SplitInstance r10_fig2_split() {
  Multigraph k5 = make_family(family(CompleteGraph{5}));
  Perm kappa = push_from_pairing(k5, k5_sum_pairing());
  auto two = disjoint_copies(k5, 2);
  auto q = bgcg_quotient(two.graph, push_relation(k5, kappa));
  Multigraph r = make_family(family(RoseWindow{10, 4, 1}));
  auto col = bipartition(r);
  if (!col) throw Error("internal: R10(4,1) is not bipartite");
  ColoredGraph target(r, *col);
  auto iso = are_isomorphic(q.gamma, target);
  if (!iso) {
    for (auto& c : col.value()) c = c == Color::black ? Color::white : Color::black;
    target = ColoredGraph(r, *col);
    iso = are_isomorphic(q.gamma, target);
  }
  if (!iso) throw Error("internal: K2 construction on K5 does not give R10(4,1)");
  auto moved = transport(q.gamma.graph, q.split, *iso);
  return {target, make_split(target, moved.classes)};
}

namespace detail {

inline ColoredGraph wreath_colored(std::size_t n) {
  if (n % 2 != 0 || n < 4) throw InvalidParameter("wreath splits need n even and n >= 4");
  Multigraph g = make_family(family(Wreath{n}));
  std::vector<Color> col(2 * n);
  for (Point v = 0; v < 2 * n; ++v) col[v] = (v / 2) % 2 == 0 ? Color::black : Color::white;
  return ColoredGraph(g, col);
}

/// Split of W(n,2) at white (i,j): pair edges whose black ends agree under key.
template <class Key>
SplitInstance wreath_split(std::size_t n, Key key) {
  ColoredGraph cg = wreath_colored(n);
  std::vector<std::vector<EdgeId>> classes;
  for (Point w : cg.whites()) {
    auto inc = cg.graph.incident(w);
    std::map<int, std::vector<EdgeId>> groups;
    for (EdgeId e : inc) {
      Point b = cg.graph.other_end(e, w);
      groups[key(static_cast<long long>(w / 2), static_cast<long long>(b / 2), static_cast<int>(b % 2))].push_back(e);
    }
    for (auto& [k, c] : groups) classes.push_back(c);
  }
  return {cg, make_split(cg, std::move(classes))};
}

}  // namespace detail

/// Δ₁: partners at a white vertex share the first coordinate.
inline SplitInstance wreath_delta1(std::size_t n) {
  return detail::wreath_split(n, [](long long, long long bi, int) { return static_cast<int>(bi); });
}

/// Δ₂: partners at a white vertex share the second coordinate.
inline SplitInstance wreath_delta2(std::size_t n) {
  return detail::wreath_split(n, [](long long, long long, int bj) { return bj; });
}

/// Heawood edges grouped by label sum mod 14, labels 1..14.
inline EdgePartition heawood_parallel_classes() {
  Multigraph h = make_family(family(Heawood{}));
  std::map<int, std::vector<EdgeId>> by_sum;
  for (EdgeId e = 0; e < h.edge_count(); ++e)
    by_sum[static_cast<int>((h.edge(e).u + 1 + h.edge(e).v + 1) % 14)].push_back(e);
  std::vector<std::vector<EdgeId>> classes;
  for (auto& [s, c] : by_sum) classes.push_back(c);
  return make_partition(h, std::move(classes), PartitionKind::separating);
}

/// C3□C3 with the edge labels of the {4,4}_{3,0} drawing: edge id = label - 1,
/// vertex 3r+c.
struct C3C3Example {
  Multigraph graph;
  Perm r;      // on edges
  Perm s;      // on edges
  EdgePartition pairing;
  Perm kappa;  // on edges

  C3C3Example() {
    const std::vector<Edge> es = {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {6, 7}, {6, 8}, {7, 8},
                                  {1, 4}, {4, 7}, {1, 7}, {0, 3}, {3, 6}, {0, 6}, {2, 5}, {5, 8}, {2, 8}};
    graph = Multigraph(9, es);
    r = labels("(1 12 3 10)(4 15 9 16)(5 14 8 17)(6 13 7 18)(2 11)");
    s = labels("(1 13 4 10)(2 14 6 12)(3 15 5 11)(7 16)(8 17 9 18)");
    kappa = labels("(1 4 3 9)(5 7 8 6)(10 15 12 16)(13 17 18 14)");
    const int pairs[9][2] = {{1, 17}, {2, 11}, {3, 14}, {4, 18}, {5, 12}, {6, 15}, {7, 16}, {8, 10}, {9, 13}};
    std::vector<std::vector<EdgeId>> classes;
    for (const auto& p : pairs) classes.push_back({static_cast<EdgeId>(p[0] - 1), static_cast<EdgeId>(p[1] - 1)});
    pairing = make_partition(graph, std::move(classes), PartitionKind::pairing);
  }

  /// ⟨R, S⟩ on vertices ⊎ edges.
  PermGroup rotation_group() const {
    auto lr = lift_edge_perm(graph, r);
    auto ls = lift_edge_perm(graph, s);
    if (!lr || !ls) throw Error("internal: R or S is not a symmetry");
    return PermGroup(graph.domain_size(), {*lr, *ls});
  }

  /// Cycle notation on 1-based edge labels.
  static Perm labels(const std::string& cycles) {
    Perm p = Perm::from_cycles(19, cycles);
    std::vector<Point> img(18);
    for (Point i = 0; i < 18; ++i) img[i] = p[i + 1] - 1;
    return Perm(std::move(img));
  }
};

struct WreathPushExample {
  std::size_t n = 0;
  Multigraph base;
  Perm kappa;   // on edges
  PermGroup h;  // on vertices ⊎ edges
};

namespace detail {

inline Perm edge_transpositions(std::size_t edge_count, const std::vector<std::pair<EdgeId, EdgeId>>& ts) {
  Perm p = Perm::identity(edge_count);
  std::vector<Point> img(p.images().begin(), p.images().end());
  for (auto [x, y] : ts) std::swap(img[x], img[y]);
  return Perm(std::move(img));
}

inline std::vector<long long> even_indices(std::size_t n) {
  std::vector<long long> out;
  for (std::size_t i = 0; i + 2 <= n; i += 2) out.push_back(static_cast<long long>(i));
  return out;
}

}  // namespace detail

/// n even: κ = Π (b_i d_i), H = ⟨ρ, μ, τ₀τ₂···τ_{n-2}⟩.
inline WreathPushExample wreath_push_even(std::size_t n) {
  if (n % 2 != 0 || n < 4) throw InvalidParameter("this push needs n even, n >= 4");
  WreathLabels w(n);
  std::vector<std::pair<EdgeId, EdgeId>> ts;
  for (std::size_t i = 0; i < n; ++i) ts.push_back({w.b(static_cast<long long>(i)), w.d(static_cast<long long>(i))});
  Perm alpha = w.tau_product(detail::even_indices(n));
  return {n, w.graph, detail::edge_transpositions(w.graph.edge_count(), ts),
          PermGroup(w.graph.domain_size(), {w.rho(), w.mu(), alpha})};
}

/// n ≡ 0 mod 4: κ = Π_{i<m} (b_i b_{i+m})(d_i d_{i+m}), same H.
inline WreathPushExample wreath_push_mod4(std::size_t n) {
  if (n % 4 != 0) throw InvalidParameter("this push needs n divisible by 4");
  WreathLabels w(n);
  auto m = static_cast<long long>(n / 2);
  std::vector<std::pair<EdgeId, EdgeId>> ts;
  for (long long i = 0; i < m; ++i) {
    ts.push_back({w.b(i), w.b(i + m)});
    ts.push_back({w.d(i), w.d(i + m)});
  }
  Perm alpha = w.tau_product(detail::even_indices(n));
  return {n, w.graph, detail::edge_transpositions(w.graph.edge_count(), ts),
          PermGroup(w.graph.domain_size(), {w.rho(), w.mu(), alpha})};
}

/// n = 2m+1: κ = (a₀ b₀)(c₀ d₀) Π_{i=1..m} (a_{2i} c_{2i})(b_{2i} d_{2i}), H = ⟨ρ, μ, τ₁⟩.
inline WreathPushExample wreath_push_odd(std::size_t n) {
  if (n % 2 == 0 || n < 3) throw InvalidParameter("this push needs n odd, n >= 3");
  WreathLabels w(n);
  auto m = static_cast<long long>(n / 2);
  std::vector<std::pair<EdgeId, EdgeId>> ts{{w.a(0), w.b(0)}, {w.c(0), w.d(0)}};
  for (long long i = 1; i <= m; ++i) {
    ts.push_back({w.a(2 * i), w.c(2 * i)});
    ts.push_back({w.b(2 * i), w.d(2 * i)});
  }
  return {n, w.graph, detail::edge_transpositions(w.graph.edge_count(), ts),
          PermGroup(w.graph.domain_size(), {w.rho(), w.mu(), w.tau(1)})};
}

}  // namespace tetra
