#pragma once

// Individualization-refinement search on vertex-coloured simple graphs.
// Produces automorphism generators, the group order, and a canonical
// labelling together with its complete certificate.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "tetra/error.hpp"
#include "tetra/order.hpp"
#include "tetra/perm.hpp"
#include "tetra/permgroup.hpp"

namespace tetra {

struct ColoredSimpleGraph {
  std::vector<std::vector<Point>> adj;  // symmetric, no loops, no repeats
  std::vector<std::uint32_t> color;

  std::size_t size() const { return adj.size(); }
};

inline std::atomic<std::uint64_t>& default_search_budget() {
  static std::atomic<std::uint64_t> budget{20'000'000};
  return budget;
}

struct SearchResult {
  std::vector<Perm> generators;
  Order order = 1;
  std::vector<Point> base;        // individualized points along the first path
  std::vector<Point> labeling;    // canonical position -> node
  std::vector<std::uint32_t> certificate;
  std::uint64_t nodes = 0;
};

namespace detail {

constexpr std::uint64_t kMix = 0x9E3779B97F4A7C15ULL;
inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + kMix + (h << 6) + (h >> 2);
  return h * 0xBF58476D1CE4E5B9ULL;
}

/// Ordered partition: cells are contiguous ranges of `lab`.
struct Partition {
  std::vector<Point> lab;
  std::vector<std::uint32_t> cell_of;   // node -> start of its cell
  std::vector<std::uint32_t> cell_end;  // indexed by cell start

  bool discrete() const {
    for (std::size_t s = 0; s < lab.size(); s = cell_end[s])
      if (cell_end[s] - s > 1) return false;
    return true;
  }

  std::optional<std::uint32_t> target_cell() const {
    std::optional<std::uint32_t> best;
    std::uint32_t best_size = 0;
    for (std::uint32_t s = 0; s < lab.size(); s = cell_end[s]) {
      std::uint32_t sz = cell_end[s] - s;
      if (sz > 1 && (!best || sz < best_size)) {
        best = s;
        best_size = sz;
      }
    }
    return best;
  }
};

class Searcher {
 public:
  Searcher(const ColoredSimpleGraph& g, std::uint64_t budget) : g_(g), n_(g.size()), budget_(budget) {
    count_.assign(n_, 0);
  }

  SearchResult run() {
    Partition p = initial_partition();
    std::vector<std::uint64_t> trace;
    std::vector<std::uint32_t> queue;
    for (std::uint32_t s = 0; s < n_; s = p.cell_end[s]) queue.push_back(s);
    trace.push_back(refine(p, queue));
    std::vector<Point> prefix;
    explore(p, trace, prefix, 0);

    SearchResult r;
    r.generators = gens_;
    r.base = first_prefix_;
    r.labeling = best_lab_;
    r.certificate = best_cert_;
    r.nodes = nodes_;
    r.order = first_path_order();
    return r;
  }

 private:
  Partition initial_partition() const {
    Partition p;
    p.lab.resize(n_);
    for (Point v = 0; v < n_; ++v) p.lab[v] = v;
    std::stable_sort(p.lab.begin(), p.lab.end(), [&](Point a, Point b) { return g_.color[a] < g_.color[b]; });
    p.cell_of.assign(n_, 0);
    p.cell_end.assign(n_ + 1, 0);
    std::uint32_t start = 0;
    for (std::uint32_t i = 0; i <= n_; ++i) {
      if (i == n_ || (i > start && g_.color[p.lab[i]] != g_.color[p.lab[start]])) {
        for (std::uint32_t k = start; k < i; ++k) p.cell_of[p.lab[k]] = start;
        p.cell_end[start] = i;
        start = i;
      }
    }
    return p;
  }

  /// Refines to the coarsest equitable partition finer than p. The returned
  /// hash depends only on the isomorphism type of (graph, partition).
  std::uint64_t refine(Partition& p, std::vector<std::uint32_t> queue) {
    std::uint64_t h = 0x1234567;
    std::vector<char> queued(n_ + 1, 0);
    for (auto s : queue) queued[s] = 1;
    std::vector<std::uint32_t> touched;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::uint32_t s = queue[qi];
      queued[s] = 0;
      touched.clear();
      std::uint32_t s_end = p.cell_end[s];
      for (std::uint32_t k = s; k < s_end; ++k)
        for (Point y : g_.adj[p.lab[k]]) {
          if (count_[y]++ == 0) touched.push_back(p.cell_of[y]);
        }
      std::sort(touched.begin(), touched.end());
      touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
      h = mix(h, s);
      for (std::uint32_t c : touched) {
        std::uint32_t c_end = p.cell_end[c];
        if (c_end - c == 1) {
          h = mix(h, count_[p.lab[c]]);
          continue;
        }
        auto first = p.lab.begin() + c;
        auto last = p.lab.begin() + c_end;
        std::stable_sort(first, last, [&](Point a, Point b) { return count_[a] < count_[b]; });
        h = mix(h, c);
        std::uint32_t start = c;
        bool split = false;
        for (std::uint32_t i = c + 1; i <= c_end; ++i) {
          if (i == c_end || count_[p.lab[i]] != count_[p.lab[start]]) {
            h = mix(mix(h, count_[p.lab[start]]), i - start);
            if (i != c_end || start != c) split = true;
            p.cell_end[start] = i;
            for (std::uint32_t k = start; k < i; ++k) p.cell_of[p.lab[k]] = start;
            start = i;
          }
        }
        if (split) {
          for (std::uint32_t f = c; f < c_end; f = p.cell_end[f])
            if (!queued[f]) {
              queued[f] = 1;
              queue.push_back(f);
            }
        }
      }
      for (std::uint32_t k = s; k < s_end; ++k)
        for (Point y : g_.adj[p.lab[k]]) count_[y] = 0;
    }
    return h;
  }

  void individualize(Partition& p, std::uint32_t cell, Point v) {
    std::uint32_t end = p.cell_end[cell];
    auto it = std::find(p.lab.begin() + cell, p.lab.begin() + end, v);
    std::rotate(p.lab.begin() + cell, it, it + 1);
    // keep the remainder in ascending node order for determinism
    std::sort(p.lab.begin() + cell + 1, p.lab.begin() + end);
    p.cell_end[cell] = cell + 1;
    p.cell_end[cell + 1] = end;
    p.cell_of[v] = cell;
    for (std::uint32_t k = cell + 1; k < end; ++k) p.cell_of[p.lab[k]] = cell + 1;
  }

  std::vector<std::uint32_t> certificate_of(const Partition& p) const {
    std::vector<std::uint32_t> pos(n_);
    for (std::uint32_t i = 0; i < n_; ++i) pos[p.lab[i]] = i;
    std::vector<std::uint32_t> cert;
    cert.reserve(2 * n_);
    for (std::uint32_t i = 0; i < n_; ++i) cert.push_back(g_.color[p.lab[i]]);
    std::vector<std::uint32_t> row;
    for (std::uint32_t i = 0; i < n_; ++i) {
      row.clear();
      for (Point y : g_.adj[p.lab[i]])
        if (pos[y] > i) row.push_back(pos[y]);
      std::sort(row.begin(), row.end());
      cert.push_back(static_cast<std::uint32_t>(row.size()));
      cert.insert(cert.end(), row.begin(), row.end());
    }
    return cert;
  }

  bool is_automorphism(const std::vector<Point>& img) const {
    for (Point v = 0; v < n_; ++v) {
      if (g_.color[img[v]] != g_.color[v]) return false;
      if (g_.adj[img[v]].size() != g_.adj[v].size()) return false;
    }
    std::vector<Point> a, b;
    for (Point v = 0; v < n_; ++v) {
      a.clear();
      for (Point y : g_.adj[v]) a.push_back(img[y]);
      b = g_.adj[img[v]];
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return false;
    }
    return true;
  }

  /// Records γ with γ(from[i]) = to[i]; returns false if it is the identity.
  bool record(const std::vector<Point>& from, const std::vector<Point>& to) {
    std::vector<Point> img(n_);
    for (std::uint32_t i = 0; i < n_; ++i) img[from[i]] = to[i];
    bool identity = true;
    for (Point v = 0; v < n_; ++v)
      if (img[v] != v) identity = false;
    if (identity) return false;
    if (!is_automorphism(img)) throw Error("internal: leaf match is not an automorphism");
    gens_.emplace_back(std::move(img));
    return true;
  }

  enum class Cmp { less, equal, greater };
  static Cmp compare_prefix(const std::vector<std::uint64_t>& t, const std::vector<std::uint64_t>& ref) {
    std::size_t l = std::min(t.size(), ref.size());
    for (std::size_t i = 0; i < l; ++i) {
      if (t[i] < ref[i]) return Cmp::less;
      if (t[i] > ref[i]) return Cmp::greater;
    }
    if (ref.size() < t.size()) return Cmp::greater;
    return Cmp::equal;
  }

  /// Returns the depth to unwind to (the search resumes at the node whose
  /// prefix has that length), or SIZE_MAX to continue normally.
  std::size_t explore(const Partition& p, std::vector<std::uint64_t>& trace, std::vector<Point>& prefix,
                      std::size_t depth) {
    if (++nodes_ > budget_)
      throw SearchBudgetExceeded("node budget " + std::to_string(budget_) + " exhausted");
    bool on_first = have_first_ && first_equiv_prefix(trace);
    if (have_first_ && !on_first && have_best_ && compare_prefix(trace, best_trace_) == Cmp::greater)
      return kContinue;

    if (p.discrete()) return leaf(p, trace, prefix);

    std::uint32_t cell = *p.target_cell();
    std::uint32_t end = p.cell_end[cell];
    std::vector<Point> members(p.lab.begin() + cell, p.lab.begin() + end);
    std::sort(members.begin(), members.end());
    std::vector<Point> explored;
    for (Point v : members) {
      if (pruned_by_orbit(prefix, explored, v)) continue;
      explored.push_back(v);
      Partition child = p;
      individualize(child, cell, v);
      prefix.push_back(v);
      trace.push_back(refine(child, {cell}));
      std::size_t r = explore(child, trace, prefix, depth + 1);
      trace.pop_back();
      prefix.pop_back();
      if (r != kContinue && r < depth) return r;
      // r == depth: an automorphism was found below; keep going at this node
    }
    return kContinue;
  }

  bool first_equiv_prefix(const std::vector<std::uint64_t>& trace) const {
    if (trace.size() > first_trace_.size()) return false;
    for (std::size_t i = 0; i < trace.size(); ++i)
      if (trace[i] != first_trace_[i]) return false;
    return true;
  }

  bool pruned_by_orbit(const std::vector<Point>& prefix, const std::vector<Point>& explored, Point v) const {
    if (explored.empty() || gens_.empty()) return false;
    UnionFind uf(n_);
    for (const auto& g : gens_) {
      bool fixes = true;
      for (Point x : prefix)
        if (g[x] != x) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (Point x = 0; x < n_; ++x) uf.unite(x, g[x]);
    }
    Point rv = uf.find(v);
    for (Point e : explored)
      if (uf.find(e) == rv) return true;
    return false;
  }

  std::size_t leaf(const Partition& p, const std::vector<std::uint64_t>& trace, const std::vector<Point>& prefix) {
    auto cert = certificate_of(p);
    if (!have_first_) {
      have_first_ = true;
      first_trace_ = trace;
      first_lab_ = p.lab;
      first_cert_ = cert;
      first_prefix_ = prefix;
      have_best_ = true;
      best_trace_ = trace;
      best_lab_ = p.lab;
      best_cert_ = std::move(cert);
      return kContinue;
    }
    if (trace == first_trace_ && cert == first_cert_) {
      record(first_lab_, p.lab);
      // unwind to the deepest first-path node that is an ancestor of this leaf
      std::size_t k = 0;
      while (k < prefix.size() && k < first_prefix_.size() && prefix[k] == first_prefix_[k]) ++k;
      return k;
    }
    Cmp c = compare_prefix(trace, best_trace_);
    if (c == Cmp::equal && trace.size() == best_trace_.size()) {
      if (cert == best_cert_) {
        record(best_lab_, p.lab);
        return kContinue;
      }
      if (cert < best_cert_) c = Cmp::less;
    }
    if (c == Cmp::less) {
      best_trace_ = trace;
      best_lab_ = p.lab;
      best_cert_ = std::move(cert);
    }
    return kContinue;
  }

  Order first_path_order() const {
    // orbit of each first-path point under the generators fixing the earlier ones
    Order order = 1;
    for (std::size_t k = 0; k < first_prefix_.size(); ++k) {
      std::vector<const Perm*> fix;
      for (const auto& g : gens_) {
        bool ok = true;
        for (std::size_t j = 0; j < k; ++j)
          if (g[first_prefix_[j]] != first_prefix_[j]) {
            ok = false;
            break;
          }
        if (ok) fix.push_back(&g);
      }
      std::vector<char> seen(n_, 0);
      std::vector<Point> orb{first_prefix_[k]};
      seen[first_prefix_[k]] = 1;
      for (std::size_t i = 0; i < orb.size(); ++i)
        for (const Perm* g : fix) {
          Point y = (*g)[orb[i]];
          if (!seen[y]) {
            seen[y] = 1;
            orb.push_back(y);
          }
        }
      order = checked_mul(order, orb.size());
    }
    return order;
  }

  static constexpr std::size_t kContinue = static_cast<std::size_t>(-1);
  using UnionFind = detail::UnionFind;

  const ColoredSimpleGraph& g_;
  std::uint32_t n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::uint32_t> count_;
  std::vector<Perm> gens_;

  bool have_first_ = false;
  std::vector<std::uint64_t> first_trace_;
  std::vector<Point> first_lab_;
  std::vector<std::uint32_t> first_cert_;
  std::vector<Point> first_prefix_;

  bool have_best_ = false;
  std::vector<std::uint64_t> best_trace_;
  std::vector<Point> best_lab_;
  std::vector<std::uint32_t> best_cert_;
};

}  // namespace detail

inline SearchResult search_automorphisms(const ColoredSimpleGraph& g, std::optional<std::uint64_t> budget = std::nullopt) {
  if (g.size() == 0) return SearchResult{};
  detail::Searcher s(g, budget.value_or(default_search_budget().load()));
  return s.run();
}

}  // namespace tetra
