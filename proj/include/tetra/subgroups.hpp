#pragma once

// Explicit finite groups (multiplication table over an enumerated element
// list) and the search for minimal dart-transitive subgroups.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "tetra/error.hpp"
#include "tetra/multigraph.hpp"
#include "tetra/permgroup.hpp"

namespace tetra {

/// Dense subset of a FiniteGroup's element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : words_((n + 63) / 64, 0) {}

  bool test(std::uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::uint32_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool subset_of(const ElementSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) { return a.words_ <=> b.words_; }

 private:
  std::vector<std::uint64_t> words_;
};

/// A permutation group with all elements listed and a full multiplication
/// table. Index 0 is the identity.
class FiniteGroup {
 public:
  FiniteGroup(const PermGroup& g, Order limit) : degree_(g.degree()), base_(g.base()) {
    if (g.order() > limit)
      throw BoundExceeded("group of order " + to_string(g.order()) + " exceeds bound " + to_string(limit));
    if (g.order() > 20000) throw BoundExceeded("explicit group tables are limited to order 20000");
    elements_ = g.elements(limit);
    // put the identity first, keep the rest in chain order
    auto id = std::find_if(elements_.begin(), elements_.end(), [](const Perm& p) { return p.is_identity(); });
    std::rotate(elements_.begin(), id, id + 1);
    n_ = static_cast<std::uint32_t>(elements_.size());
    if (base_.empty()) base_.push_back(0);
    for (std::uint32_t i = 0; i < n_; ++i) index_.emplace(key_of(elements_[i]), i);
    table_.resize(static_cast<std::size_t>(n_) * n_);
    std::vector<Point> key(base_.size());
    for (std::uint32_t a = 0; a < n_; ++a)
      for (std::uint32_t b = 0; b < n_; ++b) {
        for (std::size_t k = 0; k < base_.size(); ++k) key[k] = elements_[b][elements_[a][base_[k]]];
        table_[static_cast<std::size_t>(a) * n_ + b] = index_.at(key);
      }
    inverse_.resize(n_);
    for (std::uint32_t a = 0; a < n_; ++a)
      for (std::uint32_t b = 0; b < n_; ++b)
        if (mul(a, b) == 0) {
          inverse_[a] = b;
          break;
        }
    for (const auto& s : g.generators()) gens_.push_back(index_of(s));
  }

  std::uint32_t size() const { return n_; }
  std::size_t degree() const { return degree_; }
  const Perm& element(std::uint32_t i) const { return elements_[i]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  std::uint32_t inv(std::uint32_t a) const { return inverse_[a]; }
  /// x⁻¹ g x
  std::uint32_t conj(std::uint32_t g, std::uint32_t x) const { return mul(mul(inverse_[x], g), x); }
  const std::vector<std::uint32_t>& generators() const { return gens_; }

  std::uint32_t index_of(const Perm& p) const {
    auto it = index_.find(key_of(p));
    if (it == index_.end() || elements_[it->second] != p) throw NotSubgroup("permutation is not in the group");
    return it->second;
  }

  std::uint32_t element_order(std::uint32_t a) const {
    std::uint32_t k = 1;
    for (std::uint32_t x = a; x != 0; x = mul(x, a)) ++k;
    return a == 0 ? 1 : k - 1;
  }

  /// Closure of a generating set.
  ElementSet closure(const std::vector<std::uint32_t>& gens) const {
    ElementSet s(n_);
    std::vector<std::uint32_t> list{0};
    s.set(0);
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::uint32_t g : gens) {
        std::uint32_t y = mul(list[i], g);
        if (!s.test(y)) {
          s.set(y);
          list.push_back(y);
        }
      }
    return s;
  }

  std::vector<std::uint32_t> members(const ElementSet& s) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < n_; ++i)
      if (s.test(i)) out.push_back(i);
    return out;
  }

  PermGroup to_perm_group(const std::vector<std::uint32_t>& gens) const {
    std::vector<Perm> ps;
    for (auto g : gens) ps.push_back(elements_[g]);
    return PermGroup(degree_, std::move(ps));
  }

 private:
  std::vector<Point> key_of(const Perm& p) const {
    std::vector<Point> k(base_.size());
    for (std::size_t i = 0; i < base_.size(); ++i) k[i] = p[base_[i]];
    return k;
  }

  struct KeyHash {
    std::size_t operator()(const std::vector<Point>& v) const noexcept {
      std::uint64_t h = 1469598103934665603ULL;
      for (Point x : v) {
        h ^= x;
        h *= 1099511628211ULL;
      }
      return static_cast<std::size_t>(h);
    }
  };

  std::size_t degree_ = 0;
  std::vector<Point> base_;
  std::vector<Perm> elements_;
  std::uint32_t n_ = 0;
  std::unordered_map<std::vector<Point>, std::uint32_t, KeyHash> index_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> gens_;
};

/// Subgroup of a FiniteGroup: element set plus a generating list.
struct Subgroup {
  ElementSet elements;
  std::vector<std::uint32_t> generators;
  std::size_t order = 1;
};

namespace detail {

/// Action of every group element on the darts of a graph.
inline std::vector<std::vector<std::uint32_t>> dart_tables(const FiniteGroup& a, const Multigraph& g) {
  std::vector<std::vector<std::uint32_t>> t(a.size());
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    t[i].resize(g.dart_count());
    for (std::size_t d = 0; d < g.dart_count(); ++d) t[i][d] = static_cast<std::uint32_t>(g.dart_image(a.element(i), d));
  }
  return t;
}

inline bool darts_transitive(const std::vector<std::vector<std::uint32_t>>& tables, const std::vector<std::uint32_t>& gens,
                             std::size_t dart_count) {
  if (dart_count == 0) return true;
  std::vector<char> seen(dart_count, 0);
  std::vector<std::uint32_t> orb{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (auto s : gens) {
      auto y = tables[s][orb[i]];
      if (!seen[y]) {
        seen[y] = 1;
        orb.push_back(y);
      }
    }
  return orb.size() == dart_count;
}

/// Greedy generating set of a subgroup given as an element set.
inline std::vector<std::uint32_t> generating_set(const FiniteGroup& a, const ElementSet& s) {
  std::vector<std::uint32_t> gens;
  ElementSet cur(a.size());
  cur.set(0);
  for (std::uint32_t i = 0; i < a.size(); ++i)
    if (s.test(i) && !cur.test(i)) {
      gens.push_back(i);
      cur = a.closure(gens);
    }
  return gens;
}

}  // namespace detail

/// Minimal dart-transitive subgroups of A up to A-conjugacy.
///
/// Every subgroup is generated by elements of prime-power order, so each
/// minimal dart-transitive H is reached by a chain <g1> < <g1,g2> < ... < H
/// whose proper members are not dart-transitive. The search walks such
/// chains on conjugacy-class representatives, joining each non-dart-transitive
/// representative K with one cyclic subgroup per N_A(K)-orbit, then keeps the
/// dart-transitive groups that contain no conjugate of a smaller one.
class MinimalDartTransitiveSearch {
 public:
  MinimalDartTransitiveSearch(const FiniteGroup& a, const Multigraph& g)
      : a_(a), darts_(g.dart_count()), tables_(detail::dart_tables(a, g)) {
    compute_element_classes();
    compute_cyclic_subgroups();
  }

  std::vector<Subgroup> run() {
    std::vector<Subgroup> reps;
    std::map<std::pair<std::size_t, std::uint64_t>, std::vector<std::size_t>> buckets;
    auto add = [&](Subgroup s) -> bool {
      auto key = std::make_pair(s.order, class_signature(s.elements));
      auto& bucket = buckets[key];
      for (std::size_t idx : bucket)
        if (conjugate_into(reps[idx], s.elements)) return false;
      bucket.push_back(reps.size());
      reps.push_back(std::move(s));
      return true;
    };
    Subgroup trivial{ElementSet(a_.size()), {}, 1};
    trivial.elements.set(0);
    add(trivial);
    std::vector<char> transitive;
    for (std::size_t qi = 0; qi < reps.size(); ++qi) {
      if (qi % 4096 == 0 && progress_) progress_(qi, reps.size());
      bool dt = detail::darts_transitive(tables_, reps[qi].generators, darts_);
      transitive.push_back(dt);
      if (dt) continue;
      Subgroup k = reps[qi];
      for (std::uint32_t c : cyclic_reps_modulo_normalizer(k)) {
        std::vector<std::uint32_t> gens = k.generators;
        gens.push_back(cyclic_gen_[c]);
        Subgroup h;
        h.elements = a_.closure(gens);
        h.order = h.elements.count();
        h.generators = std::move(gens);
        add(std::move(h));
      }
    }
    explored_ = reps.size();

    std::vector<std::size_t> dt_idx;
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (transitive[i]) dt_idx.push_back(i);
    std::stable_sort(dt_idx.begin(), dt_idx.end(), [&](auto x, auto y) { return reps[x].order < reps[y].order; });
    std::vector<Subgroup> minimal;
    for (std::size_t i : dt_idx) {
      bool contains_smaller = false;
      for (const auto& m : minimal)
        if (m.order < reps[i].order && reps[i].order % m.order == 0 && conjugate_into(m, reps[i].elements)) {
          contains_smaller = true;
          break;
        }
      if (!contains_smaller) minimal.push_back(reps[i]);
    }
    for (auto& m : minimal) m.generators = detail::generating_set(a_, m.elements);
    std::sort(minimal.begin(), minimal.end(), [](const Subgroup& x, const Subgroup& y) {
      if (x.order != y.order) return x.order < y.order;
      return x.elements > y.elements;  // earlier element indices first
    });
    return minimal;
  }

  std::size_t explored() const { return explored_; }
  void set_progress(std::function<void(std::size_t, std::size_t)> f) { progress_ = std::move(f); }

  /// True iff some conjugate of `small` lies inside `big`.
  bool conjugate_into(const Subgroup& small, const ElementSet& big) const {
    for (std::uint32_t x = 0; x < a_.size(); ++x) {
      bool ok = true;
      for (auto g : small.generators)
        if (!big.test(a_.conj(g, x))) {
          ok = false;
          break;
        }
      if (ok) return true;
    }
    return false;
  }

 private:
  void compute_element_classes() {
    detail::UnionFind uf(a_.size());
    for (std::uint32_t x = 0; x < a_.size(); ++x)
      for (auto s : a_.generators()) uf.unite(x, a_.conj(x, s));
    class_of_.resize(a_.size());
    for (std::uint32_t x = 0; x < a_.size(); ++x) class_of_[x] = uf.find(x);
  }

  void compute_cyclic_subgroups() {
    cyclic_of_.assign(a_.size(), static_cast<std::uint32_t>(-1));
    for (std::uint32_t g = 1; g < a_.size(); ++g) {
      if (cyclic_of_[g] != static_cast<std::uint32_t>(-1)) continue;
      std::vector<std::uint32_t> powers;
      for (std::uint32_t x = g; x != 0; x = a_.mul(x, g)) powers.push_back(x);
      std::size_t ord = powers.size() + 1;
      auto id = static_cast<std::uint32_t>(cyclic_gen_.size());
      // generators of <g> are the powers g^k with gcd(k, ord) = 1
      for (std::size_t k = 1; k < ord; ++k)
        if (std::gcd(k, ord) == 1) cyclic_of_[powers[k - 1]] = id;
      std::size_t q = ord;
      std::size_t p = 2;
      while (q % p != 0) ++p;
      while (q % p == 0) q /= p;
      cyclic_gen_.push_back(g);
      cyclic_prime_power_.push_back(q == 1);
    }
  }

  std::uint64_t class_signature(const ElementSet& s) const {
    std::vector<std::uint32_t> cls;
    for (std::uint32_t i = 0; i < a_.size(); ++i)
      if (s.test(i)) cls.push_back(class_of_[i]);
    std::sort(cls.begin(), cls.end());
    std::uint64_t h = 1469598103934665603ULL;
    for (auto c : cls) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    return h;
  }

  std::vector<std::uint32_t> cyclic_reps_modulo_normalizer(const Subgroup& k) const {
    ElementSet norm(a_.size());
    for (std::uint32_t x = 0; x < a_.size(); ++x) {
      bool ok = true;
      for (auto g : k.generators)
        if (!k.elements.test(a_.conj(g, x))) {
          ok = false;
          break;
        }
      if (ok) norm.set(x);
    }
    auto ngens = detail::generating_set(a_, norm);
    detail::UnionFind uf(cyclic_gen_.size());
    for (std::uint32_t c = 0; c < cyclic_gen_.size(); ++c)
      for (auto x : ngens) uf.unite(c, cyclic_of_[a_.conj(cyclic_gen_[c], x)]);
    std::vector<std::uint32_t> out;
    std::vector<char> done(cyclic_gen_.size(), 0);
    for (std::uint32_t c = 0; c < cyclic_gen_.size(); ++c) {
      if (!cyclic_prime_power_[c] || k.elements.test(cyclic_gen_[c])) continue;
      auto r = uf.find(c);
      if (done[r]) continue;
      done[r] = 1;
      out.push_back(c);
    }
    return out;
  }

  const FiniteGroup& a_;
  std::size_t darts_;
  std::vector<std::vector<std::uint32_t>> tables_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::uint32_t> cyclic_of_;
  std::vector<std::uint32_t> cyclic_gen_;
  std::vector<char> cyclic_prime_power_;
  std::size_t explored_ = 0;
  std::function<void(std::size_t, std::size_t)> progress_;
};

/// Default subgroup-search bound: 50 times the number of darts.
inline Order default_order_bound(const Multigraph& g) { return static_cast<Order>(50) * g.dart_count(); }

/// Minimal dart-transitive subgroups of `a` (acting on vertices ⊎ edges of g),
/// one per a-conjugacy class, ordered by group order.
inline std::vector<PermGroup> minimal_dart_transitive_subgroups(const PermGroup& a, const Multigraph& g,
                                                                std::optional<Order> order_bound = std::nullopt) {
  if (a.degree() != g.domain_size()) throw DomainMismatch("group does not act on vertices and edges of the graph");
  Order bound = order_bound.value_or(default_order_bound(g));
  FiniteGroup fa(a, bound);
  MinimalDartTransitiveSearch search(fa, g);
  std::vector<PermGroup> out;
  for (const auto& s : search.run()) out.push_back(fa.to_perm_group(s.generators));
  return out;
}

}  // namespace tetra
