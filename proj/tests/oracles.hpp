#pragma once

// Brute-force references. Nothing here calls the search engine, the
// stabilizer chain or the subgroup search; only Multigraph, Perm and
// EdgePartition are shared with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "tetra/multigraph.hpp"
#include "tetra/partition.hpp"
#include "tetra/perm.hpp"

namespace oracle {

using tetra::EdgeId;
using tetra::EdgePartition;
using tetra::Multigraph;
using tetra::Perm;
using tetra::Point;

using Count = unsigned __int128;

inline std::vector<std::vector<std::size_t>> multiplicity(const Multigraph& g) {
  std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> m(n, std::vector<std::size_t>(n, 0));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    ++m[g.edge(e).u][g.edge(e).v];
    ++m[g.edge(e).v][g.edge(e).u];
  }
  return m;
}

inline Count factorial(std::size_t k) {
  Count f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

/// Ways to permute edges inside parallel classes.
inline Count parallel_factor(const Multigraph& g) {
  auto m = multiplicity(g);
  Count f = 1;
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = u + 1; v < m.size(); ++v) f *= factorial(m[u][v]);
  return f;
}

/// |Aut| on vertices ⊎ edges by trying every vertex bijection.
inline Count aut_order_exhaustive(const Multigraph& g) {
  std::size_t n = g.vertex_count();
  auto m = multiplicity(g);
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Count vertex_maps = 0;
  do {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      for (std::size_t v = u; v < n && ok; ++v) ok = m[u][v] == m[p[u]][p[v]];
    if (ok) ++vertex_maps;
  } while (std::next_permutation(p.begin(), p.end()));
  return vertex_maps * parallel_factor(g);
}

/// Every vertex bijection preserving multiplicities (and colours if given),
/// found by plain backtracking in breadth-first vertex order.
inline std::vector<std::vector<Point>> vertex_automorphisms(const Multigraph& g,
                                                            const std::vector<int>* colors = nullptr) {
  std::size_t n = g.vertex_count();
  auto m = multiplicity(g);
  std::vector<Point> order;
  std::vector<char> seen(n, 0);
  for (Point s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    std::size_t at = order.size();
    order.push_back(s);
    for (; at < order.size(); ++at)
      for (Point w = 0; w < n; ++w)
        if (!seen[w] && m[order[at]][w] > 0) seen[w] = 1, order.push_back(w);
  }
  std::vector<std::vector<Point>> out;
  std::vector<Point> img(n);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      out.push_back(img);
      return;
    }
    Point u = order[k];
    for (Point c = 0; c < n; ++c) {
      if (used[c]) continue;
      if (colors && (*colors)[u] != (*colors)[c]) continue;
      if (m[u][u] != m[c][c] || g.degree(u) != g.degree(c)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) ok = m[u][order[j]] == m[c][img[order[j]]];
      if (!ok) continue;
      img[u] = c;
      used[c] = 1;
      self(self, k + 1);
      used[c] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

inline Count aut_order_backtrack(const Multigraph& g, const std::vector<int>* colors = nullptr) {
  return oracle::vertex_automorphisms(g, colors).size() * oracle::parallel_factor(g);
}

/// Edge map of a vertex automorphism of a simple graph.
inline std::vector<EdgeId> edge_map(const Multigraph& g, const std::vector<Point>& vmap) {
  std::map<std::pair<Point, Point>, EdgeId> id;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Point u = g.edge(e).u, v = g.edge(e).v;
    id[{std::min(u, v), std::max(u, v)}] = e;
  }
  std::vector<EdgeId> out(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    Point u = vmap[g.edge(e).u], v = vmap[g.edge(e).v];
    out[e] = id.at({std::min(u, v), std::max(u, v)});
  }
  return out;
}

/// Vertex ⊎ edge permutation of a vertex automorphism of a simple graph.
inline Perm lift(const Multigraph& g, const std::vector<Point>& vmap) {
  std::vector<Point> img(vmap);
  for (EdgeId e : edge_map(g, vmap)) img.push_back(static_cast<Point>(g.vertex_count() + e));
  return Perm(std::move(img));
}

/// Automorphisms of a simple graph on vertices ⊎ edges.
inline std::vector<Perm> automorphisms(const Multigraph& g) {
  std::vector<Perm> out;
  for (const auto& v : vertex_automorphisms(g)) out.push_back(lift(g, v));
  return out;
}

inline bool preserves(const Multigraph& g, const EdgePartition& p, const Perm& x) {
  std::set<std::set<EdgeId>> classes;
  for (const auto& c : p.classes) classes.insert(std::set<EdgeId>(c.begin(), c.end()));
  for (const auto& c : p.classes) {
    std::set<EdgeId> im;
    for (EdgeId e : c) im.insert(x[g.vertex_count() + e] - g.vertex_count());
    if (!classes.count(im)) return false;
  }
  return true;
}

inline std::vector<Perm> partition_stabilizer(const Multigraph& g, const EdgePartition& p) {
  std::vector<Perm> out;
  for (auto& x : oracle::automorphisms(g))
    if (preserves(g, p, x)) out.push_back(x);
  return out;
}

/// Darts are (edge, end) with end 0 = u, 1 = v.
inline std::size_t dart_image(const Multigraph& g, const Perm& x, std::size_t d) {
  EdgeId e = d / 2;
  Point end = d % 2 == 0 ? g.edge(e).u : g.edge(e).v;
  EdgeId f = x[g.vertex_count() + e] - g.vertex_count();
  return 2 * f + (g.edge(f).u == x[end] ? 0 : 1);
}

/// Orbit of dart 0 under a full element list.
inline bool dart_transitive(const Multigraph& g, const std::vector<Perm>& elements) {
  std::set<std::size_t> orbit;
  for (const auto& x : elements) orbit.insert(dart_image(g, x, 0));
  return orbit.size() == 2 * g.edge_count();
}

inline bool edge_transitive(const Multigraph& g, const std::vector<Perm>& elements) {
  std::set<Point> orbit;
  for (const auto& x : elements) orbit.insert(x[g.vertex_count()]);
  return orbit.size() == g.edge_count();
}

/// Dart-transitive pairing test from the full automorphism list.
inline bool is_pairing(const Multigraph& g, const EdgePartition& p) {
  for (const auto& c : p.classes)
    if (c.size() != 2) return false;
  return oracle::dart_transitive(g, oracle::partition_stabilizer(g, p));
}

/// All products of the generators, by breadth-first multiplication.
inline std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t degree) {
  std::set<Perm> seen{Perm::identity(degree)};
  std::vector<Perm> queue{Perm::identity(degree)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      Perm y = queue[i] * g;
      if (seen.insert(y).second) queue.push_back(y);
    }
  return seen;
}

/// Smallest block containing x and y, by trying subsets in increasing size.
inline std::set<Point> minimal_block(const std::vector<Perm>& elements, std::size_t degree, Point x, Point y) {
  for (std::uint64_t size = 2; size <= degree; ++size)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << degree); ++mask) {
      if (static_cast<std::uint64_t>(__builtin_popcountll(mask)) != size) continue;
      if (!((mask >> x) & 1) || !((mask >> y) & 1)) continue;
      bool block = true;
      for (const auto& g : elements) {
        std::uint64_t im = 0;
        for (Point i = 0; i < degree; ++i)
          if ((mask >> i) & 1) im |= std::uint64_t{1} << g[i];
        if (im != mask && (im & mask)) {
          block = false;
          break;
        }
      }
      if (!block) continue;
      std::set<Point> out;
      for (Point i = 0; i < degree; ++i)
        if ((mask >> i) & 1) out.insert(i);
      return out;
    }
  return {};
}

/// Full subgroup lattice of an explicitly listed group.
class Lattice {
 public:
  using Set = std::vector<bool>;

  explicit Lattice(std::vector<Perm> elements) : el_(std::move(elements)) {
    std::sort(el_.begin(), el_.end());
    for (std::size_t i = 0; i < el_.size(); ++i) index_[el_[i]] = i;
    std::size_t n = el_.size();
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) table_[a * n + b] = index_.at(el_[a] * el_[b]);
    identity_ = index_.at(Perm::identity(el_[0].size()));
    inverse_.resize(n);
    for (std::size_t a = 0; a < n; ++a) inverse_[a] = index_.at(el_[a].inverse());
    enumerate();
  }

  std::size_t order() const { return el_.size(); }
  const std::vector<Set>& subgroups() const { return subgroups_; }
  const Perm& element(std::size_t i) const { return el_[i]; }
  std::size_t index_of(const Perm& p) const { return index_.at(p); }

  std::vector<Perm> members(const Set& s) const {
    std::vector<Perm> out;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i]) out.push_back(el_[i]);
    return out;
  }

  Set generated(const std::vector<std::size_t>& gens) const {
    Set s(el_.size(), false);
    s[identity_] = true;
    std::vector<std::size_t> q{identity_};
    for (std::size_t i = 0; i < q.size(); ++i)
      for (auto g : gens) {
        auto y = table_[q[i] * el_.size() + g];
        if (!s[y]) {
          s[y] = true;
          q.push_back(y);
        }
      }
    return s;
  }

  /// Least conjugate of s, as a key for its conjugacy class.
  Set class_key(const Set& s) const {
    std::size_t n = el_.size();
    const auto& inv = inverse_;
    Set best;
    for (std::size_t x = 0; x < n; ++x) {
      Set c(n, false);
      for (std::size_t i = 0; i < n; ++i)
        if (s[i]) c[table_[table_[inv[x] * n + i] * n + x]] = true;
      if (best.empty() || c < best) best = c;
    }
    return best;
  }

 private:
  void enumerate() {
    std::size_t n = el_.size();
    std::set<Set> cyclic;
    for (std::size_t g = 0; g < n; ++g) cyclic.insert(generated({g}));
    std::vector<std::size_t> cyclic_gens;
    for (const auto& c : cyclic)
      for (std::size_t g = 0; g < n; ++g)
        if (c[g] && generated({g}) == c) {
          cyclic_gens.push_back(g);
          break;
        }
    std::set<Set> seen;
    std::vector<std::pair<Set, std::vector<std::size_t>>> queue;
    Set trivial = generated({});
    seen.insert(trivial);
    queue.push_back({trivial, {}});
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto c : cyclic_gens) {
        if (queue[i].first[c]) continue;
        auto gens = queue[i].second;
        gens.push_back(c);
        Set s = generated(gens);
        if (seen.insert(s).second) queue.push_back({s, gens});
      }
    }
    for (auto& [s, g] : queue) subgroups_.push_back(s);
  }

  std::vector<Perm> el_;
  std::map<Perm, std::size_t> index_;
  std::vector<std::size_t> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
  std::vector<Set> subgroups_;
};

inline bool subset_of(const Lattice::Set& a, const Lattice::Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

/// Conjugacy-class keys of minimal dart-transitive subgroups of the lattice.
inline std::set<Lattice::Set> minimal_dart_transitive_classes(const Lattice& lat, const Multigraph& g) {
  std::vector<Lattice::Set> dt;
  for (const auto& s : lat.subgroups())
    if (oracle::dart_transitive(g, lat.members(s))) dt.push_back(s);
  std::set<Lattice::Set> keys;
  for (const auto& s : dt) {
    bool minimal = true;
    for (const auto& t : dt)
      if (t != s && subset_of(t, s)) {
        minimal = false;
        break;
      }
    if (minimal) keys.insert(lat.class_key(s));
  }
  return keys;
}

}  // namespace oracle
