#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

#include "tetra/error.hpp"
#include "tetra/order.hpp"
#include "tetra/perm.hpp"

namespace tetra {

/// A permutation group given by generators, with a stabilizer chain built
/// eagerly by deterministic Schreier-Sims. Immutable after construction, so
/// concurrent readers need no synchronisation.
///
/// The base starts with `base_prefix` (in order); further base points are
/// the smallest point moved by the residue that required them. When
/// `known_order` is supplied the construction stops as soon as the chain
/// accounts for that many elements, which is exact because the product of
/// partial basic orbit lengths never exceeds the true order.
class PermGroup {
 public:
  PermGroup() = default;

  explicit PermGroup(std::size_t degree, std::vector<Perm> generators = {},
                     std::vector<Point> base_prefix = {},
                     std::optional<Order> known_order = std::nullopt)
      : degree_(degree) {
    for (auto& g : generators) {
      if (g.size() != degree) throw DomainMismatch("generator degree " + std::to_string(g.size()) +
                                                   " differs from group degree " + std::to_string(degree));
      if (!g.is_identity()) gens_.push_back(std::move(g));
    }
    for (Point b : base_prefix)
      if (b >= degree) throw IndexOutOfRange("base point outside domain");
    build(base_prefix, known_order);
  }

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree); }

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  Order order() const {
    Order r = 1;
    for (const auto& l : levels_) r = checked_mul(r, l.orbit.size());
    return r;
  }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto& l : levels_) b.push_back(l.point);
    return b;
  }

  bool contains(const Perm& p) const {
    if (p.size() != degree_) throw DomainMismatch("membership test on a different domain");
    auto [res, lvl] = strip(p, 0);
    return lvl == levels_.size() && res.is_identity();
  }

  std::vector<Point> orbit(Point x) const {
    std::vector<Point> out{x};
    std::vector<bool> seen(degree_, false);
    seen[x] = true;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (const auto& g : gens_) {
        Point y = g[out[i]];
        if (!seen[y]) {
          seen[y] = true;
          out.push_back(y);
        }
      }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Orbits, each sorted, listed by minimum element.
  std::vector<std::vector<Point>> orbits() const {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(degree_, false);
    for (Point x = 0; x < degree_; ++x) {
      if (seen[x]) continue;
      auto o = orbit(x);
      for (Point y : o) seen[y] = true;
      out.push_back(std::move(o));
    }
    return out;
  }

  bool is_transitive() const { return degree_ <= 1 || orbit(0).size() == degree_; }

  /// True when `subset` is a single orbit.
  bool is_transitive_on(const std::vector<Point>& subset) const {
    if (subset.empty()) return true;
    auto o = orbit(subset.front());
    std::vector<Point> s = subset;
    std::sort(s.begin(), s.end());
    return o == s;
  }

  PermGroup stabilizer(Point point) const {
    if (point >= degree_) throw IndexOutOfRange("stabilizer point outside domain");
    Order full = order();
    PermGroup rebased(degree_, gens_, {point}, full);
    Order orbit_len = rebased.levels_.empty() ? 1 : rebased.levels_[0].orbit.size();
    std::vector<Perm> sgens = rebased.levels_.size() > 1 ? rebased.levels_[1].gens : std::vector<Perm>{};
    return PermGroup(degree_, std::move(sgens), {}, full / orbit_len);
  }

  /// All elements in chain order. Throws BoundExceeded above `limit`.
  std::vector<Perm> elements(Order limit = 1'000'000) const {
    Order n = order();
    if (n > limit) throw BoundExceeded("group of order " + to_string(n) + " exceeds enumeration limit " + to_string(limit));
    std::vector<Perm> out;
    out.reserve(static_cast<std::size_t>(n));
    // Build deepest-first so the product reads u_{k-1} ... u_0.
    std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t lvl, const Perm& left) {
      if (lvl == 0) {
        for (const auto& rep : levels_.empty() ? std::vector<Perm>{} : levels_[0].reps) out.push_back(left * rep);
        return;
      }
      for (const auto& rep : levels_[lvl].reps) rec(lvl - 1, left * rep);
    };
    if (levels_.empty())
      out.push_back(Perm::identity(degree_));
    else
      rec(levels_.size() - 1, Perm::identity(degree_));
    return out;
  }

  /// Action on the invariant range [first, first+count), as a group of degree count.
  PermGroup induced_action(std::size_t first, std::size_t count) const {
    std::vector<Perm> g;
    for (const auto& p : gens_) g.push_back(p.restricted(first, count));
    return PermGroup(count, std::move(g));
  }

  /// Induced action on an arbitrary invariant subset, relabelled by its sorted order.
  PermGroup induced_action_on(const std::vector<Point>& subset) const {
    std::vector<Point> s = subset;
    std::sort(s.begin(), s.end());
    std::vector<std::int64_t> index(degree_, -1);
    for (std::size_t i = 0; i < s.size(); ++i) index[s[i]] = static_cast<std::int64_t>(i);
    std::vector<Perm> g;
    for (const auto& p : gens_) {
      std::vector<Point> img(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto j = index[p[s[i]]];
        if (j < 0) throw DomainMismatch("subset is not invariant");
        img[i] = static_cast<Point>(j);
      }
      g.emplace_back(std::move(img));
    }
    return PermGroup(s.size(), std::move(g));
  }

 private:
  struct Level {
    Point point = 0;
    std::vector<Perm> gens;
    std::vector<std::int32_t> slot;  // point -> index in orbit/reps, -1 if absent
    std::vector<Point> orbit;
    std::vector<Perm> reps;          // reps[i] maps point to orbit[i]
  };

  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const {
    for (std::size_t j = from; j < levels_.size(); ++j) {
      const auto& l = levels_[j];
      Point beta = g[l.point];
      if (l.slot[beta] < 0) return {std::move(g), j};
      g = g * l.reps[static_cast<std::size_t>(l.slot[beta])].inverse();
    }
    return {std::move(g), levels_.size()};
  }

  void compute_orbit(Level& l) const {
    l.slot.assign(degree_, -1);
    l.orbit.assign(1, l.point);
    l.reps.assign(1, Perm::identity(degree_));
    l.slot[l.point] = 0;
    for (std::size_t i = 0; i < l.orbit.size(); ++i)
      for (const auto& s : l.gens) {
        Point y = s[l.orbit[i]];
        if (l.slot[y] < 0) {
          l.slot[y] = static_cast<std::int32_t>(l.orbit.size());
          l.orbit.push_back(y);
          l.reps.push_back(l.reps[i] * s);
        }
      }
  }

  static Point first_moved(const Perm& p) {
    for (Point i = 0; i < p.size(); ++i)
      if (p[i] != i) return i;
    return 0;
  }

  bool fixes_base(const Perm& p, std::size_t upto) const {
    for (std::size_t j = 0; j < upto; ++j)
      if (p[levels_[j].point] != levels_[j].point) return false;
    return true;
  }

  bool reached(const std::optional<Order>& known) const { return known && order() == *known; }

  void build(const std::vector<Point>& prefix, const std::optional<Order>& known) {
    for (Point b : prefix) {
      Level l;
      l.point = b;
      levels_.push_back(std::move(l));
    }
    for (const auto& g : gens_) {
      if (fixes_base(g, levels_.size())) {
        Level l;
        l.point = first_moved(g);
        levels_.push_back(std::move(l));
      }
    }
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      for (const auto& g : gens_)
        if (fixes_base(g, i)) levels_[i].gens.push_back(g);
      compute_orbit(levels_[i]);
    }
    if (levels_.empty() || reached(known)) return;

    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      bool restart = false;
      for (std::size_t idx = 0; !restart && idx < levels_[static_cast<std::size_t>(i)].orbit.size(); ++idx) {
        for (std::size_t si = 0; si < levels_[static_cast<std::size_t>(i)].gens.size(); ++si) {
          const Perm& s = levels_[static_cast<std::size_t>(i)].gens[si];
          const auto& cur = levels_[static_cast<std::size_t>(i)];
          Point img = s[cur.orbit[idx]];
          Perm h = cur.reps[idx] * s * cur.reps[static_cast<std::size_t>(cur.slot[img])].inverse();
          if (h.is_identity()) continue;
          auto [y, j] = strip(std::move(h), static_cast<std::size_t>(i) + 1);
          if (j == levels_.size() && y.is_identity()) continue;
          if (j == levels_.size()) {
            Level nl;
            nl.point = first_moved(y);
            levels_.push_back(std::move(nl));
            levels_.back().slot.assign(degree_, -1);
          }
          for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
            levels_[l].gens.push_back(y);
            compute_orbit(levels_[l]);
          }
          if (reached(known)) return;
          i = static_cast<std::ptrdiff_t>(j);
          restart = true;
          break;
        }
      }
      if (!restart) --i;
    }
  }

  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Level> levels_;
};

inline PermGroup group_from_generators(std::vector<Perm> perms) {
  if (perms.empty()) return PermGroup();
  std::size_t n = perms.front().size();
  return PermGroup(n, std::move(perms));
}

/// A partition of a permutation domain into blocks of imprimitivity.
struct BlockSystem {
  std::vector<std::vector<Point>> blocks;  // each sorted; list sorted by first element
  std::size_t block_size = 0;

  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
  friend auto operator<=>(const BlockSystem& a, const BlockSystem& b) { return a.blocks <=> b.blocks; }
};

namespace detail {

struct UnionFind {
  std::vector<Point> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Point{0}); }
  Point find(Point x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(Point a, Point b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

inline BlockSystem minimal_block_system(const PermGroup& g, Point x, Point y) {
  UnionFind uf(g.degree());
  std::vector<std::pair<Point, Point>> queue;
  if (uf.unite(x, y)) queue.emplace_back(x, y);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto [a, b] = queue[q];
    for (const auto& s : g.generators()) {
      Point c = uf.find(s[a]);
      Point d = uf.find(s[b]);
      if (uf.unite(c, d)) queue.emplace_back(c, d);
    }
  }
  std::vector<std::vector<Point>> by_root(g.degree());
  for (Point v = 0; v < g.degree(); ++v) by_root[uf.find(v)].push_back(v);
  BlockSystem bs;
  for (auto& b : by_root)
    if (!b.empty()) bs.blocks.push_back(std::move(b));
  std::sort(bs.blocks.begin(), bs.blocks.end());
  bs.block_size = bs.blocks.front().size();
  return bs;
}

}  // namespace detail

/// Smallest block of imprimitivity containing x and y.
inline std::vector<Point> minimal_block(const PermGroup& g, Point x, Point y) {
  if (x >= g.degree() || y >= g.degree()) throw IndexOutOfRange("block pair outside domain");
  if (!g.is_transitive()) throw NotTransitive("minimal_block needs a transitive group");
  auto bs = detail::minimal_block_system(g, x, y);
  for (auto& b : bs.blocks)
    if (std::binary_search(b.begin(), b.end(), x)) return b;
  return {};
}

inline bool is_block_system(const PermGroup& g, const BlockSystem& bs) {
  std::vector<std::int64_t> block_of(g.degree(), -1);
  std::size_t covered = 0;
  for (std::size_t i = 0; i < bs.blocks.size(); ++i)
    for (Point p : bs.blocks[i]) {
      if (p >= g.degree() || block_of[p] >= 0) return false;
      block_of[p] = static_cast<std::int64_t>(i);
      ++covered;
    }
  if (covered != g.degree()) return false;
  for (const auto& s : g.generators())
    for (const auto& b : bs.blocks) {
      auto target = block_of[s[b.front()]];
      for (Point p : b)
        if (block_of[s[p]] != target) return false;
    }
  return true;
}

/// All systems of imprimitivity with blocks of size 2, in canonical order.
inline std::vector<BlockSystem> size2_block_systems(const PermGroup& g) {
  if (!g.is_transitive()) throw NotTransitive("size2_block_systems needs a transitive group");
  std::vector<BlockSystem> out;
  if (g.degree() < 2 || g.degree() % 2 != 0) return out;
  for (Point y = 1; y < g.degree(); ++y) {
    auto bs = detail::minimal_block_system(g, 0, y);
    if (bs.block_size == 2) out.push_back(std::move(bs));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// True iff p⁻¹·h·p ∈ H for every generator h.
inline bool normalizes(const Perm& p, const PermGroup& h) {
  if (p.size() != h.degree()) throw DomainMismatch("normalizes: degree mismatch");
  for (const auto& g : h.generators())
    if (!h.contains(g ^ p)) return false;
  return true;
}

/// The first x ∈ a (in chain enumeration order) with gˣ = h, if any.
inline std::optional<Perm> conjugating_element(const PermGroup& a, const PermGroup& g, const PermGroup& h,
                                               Order enumeration_limit = 10'000'000) {
  if (g.degree() != a.degree() || h.degree() != a.degree()) throw DomainMismatch("conjugating_element: degree mismatch");
  for (const auto& s : g.generators())
    if (!a.contains(s)) throw NotSubgroup("first group is not contained in the ambient group");
  for (const auto& s : h.generators())
    if (!a.contains(s)) throw NotSubgroup("second group is not contained in the ambient group");
  if (g.order() != h.order()) return std::nullopt;
  for (const auto& x : a.elements(enumeration_limit)) {
    bool ok = true;
    for (const auto& s : g.generators())
      if (!h.contains(s ^ x)) {
        ok = false;
        break;
      }
    if (ok) return x;
  }
  return std::nullopt;
}

}  // namespace tetra
