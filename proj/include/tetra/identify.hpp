#pragma once

// Names a graph by sweeping catalogue families with the same order and
// valence. Precedence: Circulant, Wreath, RoseWindow, PX, Torus44, SDD of a
// catalogue graph, then the remaining families.

#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tetra/families.hpp"
#include "tetra/multigraph.hpp"
#include "tetra/symmetry.hpp"

namespace tetra {

namespace detail {

/// Cheap isomorphism invariant: sorted per-vertex (degree, triangle count,
/// distance-layer sizes).
inline std::vector<std::vector<std::size_t>> graph_invariant(const Multigraph& g) {
  std::size_t n = g.vertex_count();
  std::vector<std::vector<Point>> nb(n);
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Point u = g.edge(e).u, v = g.edge(e).v;
    nb[u].push_back(v);
    nb[v].push_back(u);
    adj[u][v] = adj[v][u] = 1;
  }
  std::vector<std::vector<std::size_t>> rows;
  std::vector<std::size_t> dist(n);
  for (Point s = 0; s < n; ++s) {
    std::vector<std::size_t> row{nb[s].size()};
    std::size_t tri = 0;
    for (std::size_t i = 0; i < nb[s].size(); ++i)
      for (std::size_t j = i + 1; j < nb[s].size(); ++j)
        if (adj[nb[s][i]][nb[s][j]]) ++tri;
    row.push_back(tri);
    std::fill(dist.begin(), dist.end(), static_cast<std::size_t>(-1));
    dist[s] = 0;
    std::vector<Point> q{s};
    std::vector<std::size_t> layers;
    for (std::size_t i = 0; i < q.size(); ++i) {
      Point u = q[i];
      if (layers.size() <= dist[u]) layers.push_back(0);
      ++layers[dist[u]];
      for (Point w : nb[u])
        if (dist[w] == static_cast<std::size_t>(-1)) {
          dist[w] = dist[u] + 1;
          q.push_back(w);
        }
    }
    row.insert(row.end(), layers.begin(), layers.end());
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end());
  return rows;
}

inline void try_add(std::vector<FamilySpec>& out, FamilySpec spec, std::size_t n, std::size_t m) {
  try {
    Multigraph g = make_family(spec);
    if (g.vertex_count() == n && g.edge_count() == m) out.push_back(std::move(spec));
  } catch (const Error&) {
  }
}

inline void circulant_sets(long long n, std::size_t k, long long from, std::vector<long long>& cur,
                           std::vector<std::vector<long long>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (long long a = from; 2 * a < n; ++a) {
    cur.push_back(a);
    circulant_sets(n, k, a + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<FamilySpec> catalog(std::size_t n, std::size_t m, bool with_sdd);

inline std::vector<FamilySpec> other_families(std::size_t n, std::size_t m) {
  std::vector<FamilySpec> out;
  try_add(out, family(CompleteGraph{n}), n, m);
  if (n == 10) try_add(out, family(Petersen{}), n, m);
  if (n == 14) try_add(out, family(Heawood{}), n, m);
  if (n >= 2) try_add(out, family(DoubledCycle{n}), n, m);
  if (n == 2) try_add(out, family(Dipole{m}), n, m);
  for (std::size_t a = 3; a * a <= n; ++a)
    if (n % a == 0) try_add(out, family(CycleProduct{a, n / a}), n, m);
  if (n == 15) try_add(out, family(LineGraphOf{family_ptr(family(Petersen{}))}), n, m);
  if (n == 6) try_add(out, family(LineGraphOf{family_ptr(family(CompleteGraph{4}))}), n, m);
  if (n % 3 == 0 && n >= 9) try_add(out, family(DW{n / 3}), n, m);
  return out;
}

/// Catalogue specs with n vertices and m edges, in precedence order.
inline std::vector<FamilySpec> catalog(std::size_t n, std::size_t m, bool with_sdd) {
  std::vector<FamilySpec> out;
  if (n == 0) return out;
  bool tetravalent = m == 2 * n;
  if ((2 * m) % n == 0) {
    std::size_t d = 2 * m / n;
    if (d % 2 == 0 && d >= 2 && d <= 8 && n >= 3) {
      std::vector<std::vector<long long>> sets;
      std::vector<long long> cur;
      circulant_sets(static_cast<long long>(n), d / 2, 1, cur, sets);
      for (auto& s : sets) try_add(out, family(Circulant{n, s}), n, m);
    }
  }
  if (tetravalent && n % 2 == 0 && n >= 6) try_add(out, family(Wreath{n / 2}), n, m);
  if (tetravalent && n % 2 == 0 && n >= 6) {
    auto h = static_cast<long long>(n / 2);
    for (long long a = 1; a < h; ++a)
      for (long long r = 1; 2 * r < h; ++r)
        try_add(out, family(RoseWindow{n / 2, a, r}), n, m);
  }
  if (tetravalent)
    for (std::size_t k = 1; (std::size_t{3} << k) <= n && k <= 16; ++k)
      if (n % (std::size_t{1} << k) == 0) try_add(out, family(PX{n >> k, k}), n, m);
  if (tetravalent) {
    auto nn = static_cast<long long>(n);
    for (long long b = 0; b * b <= nn; ++b)
      for (long long c = 0; c <= b; ++c)
        if (b * b + c * c == nn) try_add(out, family(Torus44{TorusVariant::standard, b, c}), n, m);
    for (long long b = 1; 2 * b <= nn; ++b)
      for (long long c = 1; c <= b; ++c)
        if (2 * b * c == nn) try_add(out, family(Torus44{TorusVariant::bracket, b, c}), n, m);
    for (long long b = 1; b <= nn; ++b)
      for (long long c = 0; c < b; ++c)
        if (b * b - c * c == nn) try_add(out, family(Torus44{TorusVariant::angle, b, c}), n, m);
  }
  if (with_sdd && tetravalent && n % 4 == 0 && n >= 20)
    for (auto& inner : catalog(n / 4, n / 2, false)) try_add(out, family(SddOf{family_ptr(inner)}), n, m);
  for (auto& s : other_families(n, m)) out.push_back(std::move(s));
  return out;
}

struct CatalogEntry {
  FamilySpec spec;
  std::string name;
  Multigraph graph;
  std::vector<std::vector<std::size_t>> invariant;
  mutable std::optional<Certificate> certificate;
};

inline const std::vector<CatalogEntry>& catalog_entries(std::size_t n, std::size_t m) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, std::size_t>, std::vector<CatalogEntry>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({n, m});
  if (it != cache.end()) return it->second;
  std::vector<CatalogEntry> entries;
  for (auto& s : catalog(n, m, true)) {
    Multigraph g = make_family(s);
    auto inv = graph_invariant(g);
    entries.push_back({s, family_name(s), std::move(g), std::move(inv), std::nullopt});
  }
  return cache.emplace(std::make_pair(n, m), std::move(entries)).first->second;
}

}  // namespace detail

/// Every catalogue name of g, in precedence order.
inline std::vector<std::string> identify_all(const Multigraph& g) {
  std::vector<std::string> out;
  const auto& entries = detail::catalog_entries(g.vertex_count(), g.edge_count());
  if (entries.empty()) return out;
  auto inv = detail::graph_invariant(g);
  std::optional<Certificate> cert;
  for (const auto& e : entries) {
    if (e.invariant != inv) continue;
    if (!cert) cert = canonical_certificate(g);
    if (!e.certificate) e.certificate = canonical_certificate(e.graph);
    if (*e.certificate == *cert) out.push_back(e.name);
  }
  return out;
}

/// First catalogue name of g under the precedence order.
inline std::optional<std::string> identify(const Multigraph& g) {
  const auto& entries = detail::catalog_entries(g.vertex_count(), g.edge_count());
  if (entries.empty()) return std::nullopt;
  auto inv = detail::graph_invariant(g);
  std::optional<Certificate> cert;
  for (const auto& e : entries) {
    if (e.invariant != inv) continue;
    if (!cert) cert = canonical_certificate(g);
    if (!e.certificate) e.certificate = canonical_certificate(e.graph);
    if (*e.certificate == *cert) return e.name;
  }
  return std::nullopt;
}

}  // namespace tetra
