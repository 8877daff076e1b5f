#pragma once

// Dissection, BGCG, transported splits, base/connection graphs, dart-transitive
// pairings, the wreath catalogue, the K2 construction and push verification.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tetra/error.hpp"
#include "tetra/families.hpp"
#include "tetra/multigraph.hpp"
#include "tetra/partition.hpp"
#include "tetra/permgroup.hpp"
#include "tetra/subgroups.hpp"
#include "tetra/symmetry.hpp"

namespace tetra {

// ---------------------------------------------------------------------------
// Dissection and BGCG

struct DissectionResult {
  Multigraph x;
  EdgePartition m;                              // separating; classes by white vertex
  std::vector<Point> black_vertex;              // vertex of x -> black vertex of Γ
  std::vector<Point> arises_from;               // edge of x -> white vertex of Γ
  std::vector<std::array<EdgeId, 2>> replaced;  // edge of x -> the split pair in Γ
};

/// Dis(Γ, Δ) and Mate(Γ, Δ). Vertices of x are the black vertices of Γ in
/// ascending order; edge i of x comes from the i-th class of Δ.
inline DissectionResult dissect(const ColoredGraph& gamma, const EdgePartition& delta) {
  const Multigraph& g = gamma.graph;
  if (!g.is_simple()) throw NotSimple("dissection needs a simple graph");
  for (Point w : gamma.whites())
    if (g.degree(w) == 0) throw BadSplit("white vertex " + std::to_string(w) + " is isolated");
  EdgePartition d = make_split(gamma, delta.classes);

  DissectionResult r;
  std::vector<std::int64_t> xindex(g.vertex_count(), -1);
  for (Point b : gamma.blacks()) {
    xindex[b] = static_cast<std::int64_t>(r.black_vertex.size());
    r.black_vertex.push_back(b);
  }
  std::vector<Edge> es;
  std::map<Point, std::vector<EdgeId>> by_white;
  for (const auto& c : d.classes) {
    Point u = gamma.black_end(c[0]);
    Point v = gamma.black_end(c[1]);
    auto e = static_cast<EdgeId>(es.size());
    es.push_back({static_cast<Point>(xindex[u]), static_cast<Point>(xindex[v])});
    Point w = gamma.white_end(c[0]);
    r.arises_from.push_back(w);
    r.replaced.push_back({c[0], c[1]});
    by_white[w].push_back(e);
  }
  r.x = Multigraph(r.black_vertex.size(), std::move(es));
  std::vector<std::vector<EdgeId>> classes;
  for (auto& [w, c] : by_white) classes.push_back(c);
  r.m = make_partition(r.x, std::move(classes), PartitionKind::separating);
  return r;
}

struct BgcgResult {
  ColoredGraph gamma;
  EdgePartition split;
};

/// X*/M with its split. Black vertices keep their indices, white vertex
/// |V|+i belongs to the i-th class of m (normalized order), and edges 2e,
/// 2e+1 are the two halves of edge e.
inline BgcgResult bgcg_quotient(const Multigraph& x, const EdgePartition& m) {
  if (!covers_edges_exactly(x, m.classes)) throw InvalidParameter("relation does not partition the edge set");
  if (!is_separating(x, m.classes)) throw NotSeparating("a class contains two adjacent edges");
  EdgePartition mm = m;
  mm.normalize();
  ColoredGraph xs = subdivision(x);
  std::vector<std::vector<Point>> wclasses;
  for (const auto& c : mm.classes) {
    std::vector<Point> w;
    for (EdgeId e : c) w.push_back(static_cast<Point>(x.vertex_count() + e));
    wclasses.push_back(std::move(w));
  }
  BgcgResult r{quotient_white(xs, wclasses), {}};
  std::vector<std::vector<EdgeId>> pairs;
  for (EdgeId e = 0; e < x.edge_count(); ++e) pairs.push_back({2 * e, 2 * e + 1});
  r.split = make_split(r.gamma, std::move(pairs));
  return r;
}

inline ColoredGraph bgcg(const Multigraph& x, const EdgePartition& m) { return bgcg_quotient(x, m).gamma; }

// ---------------------------------------------------------------------------
// Splits from local block systems

/// Transports a size-2 block system at white vertex v to every white vertex
/// through a breadth-first transversal of `group`, checking that the result
/// does not depend on the transversal.
inline EdgePartition pairs_split(const ColoredGraph& gamma, const PermGroup& group, Point v, const BlockSystem& blocks) {
  const Multigraph& g = gamma.graph;
  if (group.degree() != g.domain_size()) throw DomainMismatch("group does not act on vertices and edges of the graph");
  if (v >= g.vertex_count() || gamma.color[v] != Color::white) throw InvalidParameter("v must be a white vertex");
  for (const auto& s : group.generators())
    for (Point u = 0; u < g.vertex_count(); ++u)
      if (gamma.color[s[u]] != gamma.color[u]) throw NotBiTransitive("group does not preserve colours");
  if (!is_edge_transitive(g, group)) throw NotBiTransitive("group is not transitive on edges");

  auto la = local_action(group, g, v);
  if (blocks.block_size != 2 || !is_block_system(la.group, blocks))
    throw NotABlockSystem("blocks are not a size-2 system of imprimitivity of the local action");

  std::vector<std::vector<std::array<EdgeId, 2>>> at(g.vertex_count());
  std::vector<char> done(g.vertex_count(), 0);
  for (const auto& b : blocks.blocks) at[v].push_back({la.incident[b[0]], la.incident[b[1]]});
  done[v] = 1;
  std::vector<Point> queue{v};
  auto image = [&](const Perm& s, const std::vector<std::array<EdgeId, 2>>& split) {
    std::vector<std::array<EdgeId, 2>> out;
    std::size_t n = g.vertex_count();
    for (auto [a, b] : split) {
      EdgeId x = s[n + a] - static_cast<EdgeId>(n);
      EdgeId y = s[n + b] - static_cast<EdgeId>(n);
      out.push_back({std::min(x, y), std::max(x, y)});
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  std::sort(at[v].begin(), at[v].end());
  for (auto& p : at[v])
    if (p[0] > p[1]) std::swap(p[0], p[1]);
  std::sort(at[v].begin(), at[v].end());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Point w = queue[i];
    for (const auto& s : group.generators()) {
      Point w2 = s[w];
      auto img = image(s, at[w]);
      if (!done[w2]) {
        done[w2] = 1;
        at[w2] = std::move(img);
        queue.push_back(w2);
      } else if (at[w2] != img) {
        throw TransportInconsistent("transported split at white vertex " + std::to_string(w2) + " depends on the path");
      }
    }
  }
  std::vector<std::vector<EdgeId>> classes;
  for (Point w : gamma.whites()) {
    if (!done[w]) throw NotBiTransitive("group is not transitive on white vertices");
    for (auto [a, b] : at[w]) classes.push_back({a, b});
  }
  return make_split(gamma, std::move(classes));
}

// ---------------------------------------------------------------------------
// Base graph and connection graph

struct BaseAndConnection {
  Multigraph base;
  std::size_t copies = 0;
  Multigraph connection;
  std::vector<std::vector<Point>> components;  // vertex sets of Dis(Γ,Δ)
  DissectionResult dissection;
};

inline BaseAndConnection base_and_connection(const ColoredGraph& gamma, const EdgePartition& delta) {
  BaseAndConnection r;
  r.dissection = dissect(gamma, delta);
  const Multigraph& x = r.dissection.x;
  r.components = x.components();
  r.copies = r.components.size();
  r.base = x.induced_subgraph(r.components.front());
  for (std::size_t i = 1; i < r.components.size(); ++i)
    if (!are_isomorphic(r.base, x.induced_subgraph(r.components[i])))
      throw ComponentsNotIsomorphic("component " + std::to_string(i) + " differs from component 0");
  std::vector<std::size_t> comp_of(x.vertex_count());
  for (std::size_t i = 0; i < r.components.size(); ++i)
    for (Point v : r.components[i]) comp_of[v] = i;
  std::set<std::pair<Point, Point>> adj;
  for (const auto& c : r.dissection.m.classes)
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        auto a = static_cast<Point>(comp_of[x.edge(c[i]).u]);
        auto b = static_cast<Point>(comp_of[x.edge(c[j]).u]);
        if (a != b) adj.insert({std::min(a, b), std::max(a, b)});
      }
  std::vector<Edge> es;
  for (auto [a, b] : adj) es.push_back({a, b});
  r.connection = Multigraph(r.copies, std::move(es));
  return r;
}

// ---------------------------------------------------------------------------
// Pairings

/// True iff p is a separating pairing whose stabilizer in Aut(b) is dart-transitive.
inline bool is_pairing(const Multigraph& b, const EdgePartition& p) {
  if (!covers_edges_exactly(b, p.classes)) return false;
  for (const auto& c : p.classes)
    if (c.size() != 2) return false;
  if (!is_separating(b, p.classes)) return false;
  return is_dart_transitive(b, partition_stabilizer(b, p).group);
}

/// Image of an edge partition under a symmetry on vertices ⊎ edges.
inline EdgePartition image_of(const Multigraph& g, const EdgePartition& p, const Perm& s) {
  EdgePartition out{p.kind, {}};
  auto n = static_cast<Point>(g.vertex_count());
  for (const auto& c : p.classes) {
    std::vector<EdgeId> d;
    for (EdgeId e : c) d.push_back(s[n + e] - n);
    out.classes.push_back(std::move(d));
  }
  out.normalize();
  return out;
}

/// Transfers an edge partition along an isomorphism x -> y.
inline EdgePartition transport(const Multigraph& x, const EdgePartition& p, const Perm& iso) {
  return image_of(x, p, iso);
}

/// Certificate of (b, p): equal for two pairings of b iff they are Aut(b)-conjugate.
inline Certificate partition_certificate(const Multigraph& b, const EdgePartition& p) {
  auto h = detail::incidence_graph(b, nullptr, &p.classes);
  auto r = search_automorphisms(h);
  Certificate c;
  c.words = {static_cast<std::uint32_t>(b.vertex_count()), static_cast<std::uint32_t>(b.edge_count()),
             static_cast<std::uint32_t>(p.classes.size())};
  c.words.insert(c.words.end(), r.certificate.begin(), r.certificate.end());
  return c;
}

struct PairingInfo {
  EdgePartition pairing;
  Order stabilizer_order = 0;
  std::optional<int> wreath_index;  // set when taken from the wreath catalogue
};

inline EdgePartition wreath_pairing(std::size_t n, int index, bool check_m = true);

namespace detail {

inline Order stabilizer_order_of(const Multigraph& b, const EdgePartition& p) {
  return partition_stabilizer(b, p).order();
}

/// Lexicographically least image of p under the listed elements.
inline EdgePartition least_image(const Multigraph& b, const EdgePartition& p, const std::vector<Perm>& elements) {
  EdgePartition best = p;
  best.normalize();
  for (const auto& x : elements) {
    auto q = image_of(b, p, x);
    if (q.classes < best.classes) best = std::move(q);
  }
  return best;
}

inline void require_tetravalent_dart_transitive(const Multigraph& b, const AutomorphismGroup& a) {
  if (!b.is_connected()) throw InvalidParameter("base graph must be connected");
  if (!b.is_regular(4)) throw InvalidParameter("base graph must be tetravalent");
  if (!is_dart_transitive(b, a.group)) throw NotDartTransitive("base graph is not dart-transitive");
}

}  // namespace detail

/// Dart-transitive pairings up to Aut(b)-conjugacy, each given by its
/// lexicographically least conjugate, ordered by decreasing stabilizer order
/// and then lexicographically.
inline std::vector<PairingInfo> enumerate_pairings_generic(const Multigraph& b, const AutomorphismGroup& a, Order bound) {
  FiniteGroup fa(a.group, bound);
  MinimalDartTransitiveSearch search(fa, b);
  auto minimal = search.run();
  std::vector<Perm> elements;
  for (std::uint32_t i = 0; i < fa.size(); ++i) elements.push_back(fa.element(i));
  std::set<std::vector<std::vector<EdgeId>>> seen;
  std::vector<PairingInfo> out;
  for (const auto& m : minimal) {
    PermGroup h = fa.to_perm_group(m.generators);
    PermGroup on_edges = h.induced_action(b.vertex_count(), b.edge_count());
    for (const auto& bs : size2_block_systems(on_edges)) {
      std::vector<std::vector<EdgeId>> classes;
      for (const auto& blk : bs.blocks) classes.push_back({blk[0], blk[1]});
      if (!is_separating(b, classes)) continue;
      EdgePartition p{PartitionKind::pairing, std::move(classes)};
      p.normalize();
      auto rep = detail::least_image(b, p, elements);
      if (!seen.insert(rep.classes).second) continue;
      out.push_back({rep, detail::stabilizer_order_of(b, rep), std::nullopt});
    }
  }
  std::sort(out.begin(), out.end(), [](const PairingInfo& x, const PairingInfo& y) {
    if (x.stabilizer_order != y.stabilizer_order) return x.stabilizer_order > y.stabilizer_order;
    return x.pairing.classes < y.pairing.classes;
  });
  return out;
}

/// Valid wreath catalogue indices for W(n,2), duplicates (6, 7, 8) excluded.
inline std::vector<int> wreath_pairing_indices(std::size_t n, bool include_duplicates = false) {
  std::vector<int> out{0};
  if (n % 2 == 0) {
    std::size_t m = n / 2;
    for (int i = 1; i <= 8; ++i) {
      bool needs_odd = i == 2 || i == 4 || i == 5 || i == 7;
      if (needs_odd && m % 2 == 0) continue;
      if (!include_duplicates && i >= 6) continue;
      out.push_back(i);
    }
  }
  return out;
}

/// Pairings of a wreath graph b (any labelling) from the catalogue, moved onto b
/// by an isomorphism from the standard W(n,2), deduplicated up to Aut(b).
inline std::vector<PairingInfo> enumerate_pairings_wreath(const Multigraph& b, std::size_t n) {
  WreathLabels w(n);
  auto iso = are_isomorphic(w.graph, b);
  if (!iso) throw InvalidParameter("graph is not W(" + std::to_string(n) + ",2)");
  std::vector<PairingInfo> out;
  std::set<Certificate> seen;
  for (int idx : wreath_pairing_indices(n, true)) {
    auto p = transport(w.graph, wreath_pairing(n, idx), *iso);
    if (!seen.insert(partition_certificate(b, p)).second) continue;
    out.push_back({p, detail::stabilizer_order_of(b, p), idx});
  }
  return out;
}

inline std::optional<std::size_t> wreath_parameter(const Multigraph& b) {
  if (b.vertex_count() % 2 != 0 || b.vertex_count() < 6 || b.edge_count() != 2 * b.vertex_count()) return std::nullopt;
  std::size_t n = b.vertex_count() / 2;
  if (are_isomorphic(b, make_family(family(Wreath{n})))) return n;
  return std::nullopt;
}

/// All dart-transitive pairings of a connected tetravalent dart-transitive
/// graph up to Aut(b)-conjugacy. Falls back to the wreath catalogue when
/// |Aut(b)| exceeds the bound and b is a wreath graph.
inline std::vector<PairingInfo> enumerate_pairings(const Multigraph& b, std::optional<Order> order_bound = std::nullopt) {
  auto a = automorphism_group(b);
  detail::require_tetravalent_dart_transitive(b, a);
  Order bound = order_bound.value_or(default_order_bound(b));
  if (a.order() > bound) {
    if (auto n = wreath_parameter(b)) return enumerate_pairings_wreath(b, *n);
    throw BoundExceeded("|Aut| = " + to_string(a.order()) + " exceeds bound " + to_string(bound));
  }
  return enumerate_pairings_generic(b, a, bound);
}

// ---------------------------------------------------------------------------
// Wreath catalogue

struct WreathPairingRow {
  int index = 0;
  std::string sigma;  // cycle notation on {1,2,3,4}, empty for row 0
  bool rho_twisted = false;  // ρ* = ρτ₀ instead of ρ
  bool needs_even_n = false;
  bool needs_odd_m = false;
};

inline const std::vector<WreathPairingRow>& wreath_pairing_rows() {
  static const std::vector<WreathPairingRow> rows = {
      {0, "", false, false, false},        {1, "", false, true, false},
      {2, "(2 4)", false, true, true},     {3, "(1 2)(3 4)", false, true, false},
      {4, "(1 2 3 4)", true, true, true},  {5, "(4 3 2 1)", true, true, true},
      {6, "(1 3)(2 4)", false, true, false}, {7, "(1 3)", false, true, true},
      {8, "(1 4)(2 3)", false, true, false},
  };
  return rows;
}

/// Wreath pairing P_index of W(n,2) in the standard labelling. For index >= 1
/// the pairs are {x_c ρ*^i, x_{cσ} ρ*^{i-m}} with x_1..x_4 = a_0, b_0, c_0, d_0
/// and 0 <= i < m. With check_m false, rows needing m odd are built for any
/// even n (they are then pairings, though not dart-transitive ones).
inline EdgePartition wreath_pairing(std::size_t n, int index, bool check_m) {
  if (index < 0 || index > 8) throw InvalidParameter("wreath pairing index must be in 0..8");
  if (n < 3) throw InvalidParameter("wreath graphs need n >= 3");
  const auto& row = wreath_pairing_rows()[static_cast<std::size_t>(index)];
  WreathLabels w(n);
  std::vector<std::vector<EdgeId>> classes;
  if (index == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      auto ii = static_cast<long long>(i);
      classes.push_back({w.a(ii), w.c(ii)});
      classes.push_back({w.b(ii), w.d(ii)});
    }
    return make_partition(w.graph, std::move(classes), PartitionKind::pairing);
  }
  if (n % 2 != 0) throw InvalidParameter("pairing P" + std::to_string(index) + " needs n even");
  std::size_t m = n / 2;
  if (check_m && row.needs_odd_m && m % 2 == 0) throw InvalidParameter("pairing P" + std::to_string(index) + " needs m odd");
  Perm sigma = Perm::from_cycles(5, row.sigma);  // points 1..4 used
  Perm rho_star = row.rho_twisted ? w.rho() * w.tau(0) : w.rho();
  auto nv = static_cast<Point>(w.graph.vertex_count());
  std::array<EdgeId, 5> x{0, w.a(0), w.b(0), w.c(0), w.d(0)};
  Perm back = rho_star.pow(-static_cast<long long>(m));
  for (std::size_t i = 0; i < m; ++i) {
    Perm fwd = rho_star.pow(static_cast<long long>(i));
    for (Point c = 1; c <= 4; ++c) {
      EdgeId first = fwd[nv + x[c]] - nv;
      EdgeId second = (back * fwd)[nv + x[sigma[c]]] - nv;
      classes.push_back({first, second});
    }
  }
  return make_partition(w.graph, std::move(classes), PartitionKind::pairing);
}

/// The witnesses ρ*, μ*, τ* of a catalogue row, on vertices ⊎ edges.
inline std::vector<Perm> wreath_pairing_witnesses(std::size_t n, int index) {
  WreathLabels w(n);
  std::size_t m = n / 2;
  auto range = [](std::size_t from, std::size_t to, std::size_t step) {
    std::vector<long long> v;
    for (std::size_t i = from; i <= to; i += step) v.push_back(static_cast<long long>(i));
    return v;
  };
  Perm rho = w.rho();
  Perm mu = w.mu();
  switch (index) {
    case 0: return {rho, mu, w.tau(1)};
    case 1:
    case 6: return {rho, mu, w.tau(1) * w.tau(static_cast<long long>(m + 1))};
    case 2:
    case 7: return {rho, mu, w.tau_product(range(1, n - 1, 2))};
    case 3:
    case 8: return {rho, mu * w.tau_product(range(1, m, 1)), w.tau(1) * w.tau(static_cast<long long>(m + 1))};
    case 4:
    case 5: return {rho * w.tau(0), mu * w.tau_product(range(2, n - 2, 2)), w.tau_product(range(1, n - 1, 2))};
    default: throw InvalidParameter("wreath pairing index must be in 0..8");
  }
}

// ---------------------------------------------------------------------------
// K2 connection graph and pushes

/// A permutation of E(B) with optional Corollary witnesses.
struct Push {
  Perm kappa;
  std::optional<PermGroup> h;    // on vertices ⊎ edges of B
  std::optional<Perm> tau;       // on vertices ⊎ edges of B, κ² = τ on edges
};

/// M on 2B: classes {(e,0), (e^κ,1)} with copy-i edge ids i·|E|+e.
inline EdgePartition push_relation(const Multigraph& b, const Perm& kappa) {
  if (kappa.size() != b.edge_count()) throw DomainMismatch("κ must permute the edges of B");
  auto m = static_cast<EdgeId>(b.edge_count());
  std::vector<std::vector<EdgeId>> classes;
  for (EdgeId e = 0; e < m; ++e) classes.push_back({e, m + kappa[e]});
  return EdgePartition{PartitionKind::pairing, std::move(classes)};
}

/// BGCG(B, K2, κ) = BGCG(2B, M): black (v,i) is i·|V|+v, white e is 2|V|+e.
inline ColoredGraph bgcg_k2(const Multigraph& b, const Perm& kappa) {
  auto two = disjoint_copies(b, 2);
  return bgcg_quotient(two.graph, push_relation(b, kappa)).gamma;
}

inline bool is_push(const Multigraph& b, const Perm& kappa) {
  auto two = disjoint_copies(b, 2);
  return is_pairing(two.graph, push_relation(b, kappa));
}

/// κ_P: each edge goes to the other edge of its pair.
inline Perm push_from_pairing(const Multigraph& b, const EdgePartition& p) {
  if (!covers_edges_exactly(b, p.classes)) throw NotAPairing("classes do not partition the edge set");
  std::vector<Point> img(b.edge_count());
  for (const auto& c : p.classes) {
    if (c.size() != 2) throw NotAPairing("a class does not have two edges");
    img[c[0]] = c[1];
    img[c[1]] = c[0];
  }
  if (!is_separating(b, p.classes)) throw NotAPairing("pairing is not separating");
  if (!is_pairing(b, p)) throw NotAPairing("pairing is not dart-transitive");
  return Perm(std::move(img));
}

struct CorollaryReport {
  bool dart_transitive = false;
  bool normalized = false;
  bool square_is_automorphism = false;
  std::optional<Perm> tau;  // an automorphism with κ² as edge action
  bool ok() const { return dart_transitive && normalized && square_is_automorphism; }
};

/// Conditions: h dart-transitive, κ normalizes h on edges, κ² ∈ Aut(b) on edges.
/// When all hold, is_push(b, κ) is asserted.
inline CorollaryReport corollary_check(const Multigraph& b, const Perm& kappa, const PermGroup& h) {
  if (h.degree() != b.domain_size()) throw DomainMismatch("h must act on vertices and edges of B");
  CorollaryReport r;
  r.dart_transitive = is_dart_transitive(b, h);
  PermGroup he = h.induced_action(b.vertex_count(), b.edge_count());
  r.normalized = normalizes(kappa, he);
  auto a = automorphism_group(b);
  PermGroup ae = a.edge_action();
  Perm k2 = kappa * kappa;
  r.square_is_automorphism = ae.contains(k2);
  if (r.square_is_automorphism) {
    // lift κ² to vertices ⊎ edges: on a connected simple graph the edge action is faithful
    for (const auto& x : a.group.elements()) {
      if (x.restricted(b.vertex_count(), b.edge_count()) == k2) {
        r.tau = x;
        break;
      }
    }
  }
  if (r.ok() && !is_push(b, kappa)) throw Error("internal: corollary conditions hold but κ is not a push");
  return r;
}

struct DoubleCosetWitness {
  Perm gamma;
  Perm gamma_prime;
};

/// γ, γ' in the edge action of Aut(b) with κ' = γ⁻¹κγ', if they exist. When
/// found, BGCG(B,K2,κ) ≅ BGCG(B,K2,κ') is checked.
inline std::optional<DoubleCosetWitness> double_coset_equivalent(const Multigraph& b, const Perm& kappa, const Perm& kappa2) {
  PermGroup ae = automorphism_group(b).edge_action();
  Perm kinv = kappa.inverse();
  for (const auto& g : ae.elements()) {
    Perm gp = kinv * g * kappa2;
    if (!ae.contains(gp)) continue;
    if (!are_isomorphic(bgcg_k2(b, kappa), bgcg_k2(b, kappa2)))
      throw Error("internal: double-coset equivalent pushes give non-isomorphic graphs");
    return DoubleCosetWitness{g, gp};
  }
  return std::nullopt;
}

/// Every distinct element of AκA (A = edge action of Aut(b)).
inline std::vector<Perm> double_coset(const Multigraph& b, const Perm& kappa) {
  PermGroup ae = automorphism_group(b).edge_action();
  auto els = ae.elements();
  std::set<Perm> out;
  for (const auto& g : els) {
    Perm gk = g * kappa;
    for (const auto& h : els) out.insert(gk * h);
  }
  return {out.begin(), out.end()};
}

// Push file format: permutation line plus `base <graph-hash>`.
inline std::string push_to_text(const Multigraph& b, const Perm& kappa) {
  return kappa.to_string() + "\nbase " + graph_hash(b) + "\n";
}

struct ParsedPush {
  Perm kappa;
  std::string base_hash;
};

inline ParsedPush parse_push_text(const std::string& text, std::size_t edge_count_hint = 0) {
  std::istringstream in(text);
  std::string line;
  ParsedPush out;
  bool have_perm = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "base") {
      if (!(ls >> out.base_hash)) throw ParseError("malformed base line");
    } else {
      out.kappa = Perm::parse(line, edge_count_hint);
      have_perm = true;
    }
  }
  if (!have_perm) throw ParseError("push file has no permutation");
  return out;
}

}  // namespace tetra
