#pragma once

// Random instances and small helpers shared by the tests.

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "tetra.hpp"

namespace support {

using namespace tetra;

/// Random separating relation: each edge joins a random compatible class or
/// opens a new one.
inline EdgePartition random_separating(const Multigraph& x, std::mt19937& rng, double join = 0.7) {
  std::vector<EdgeId> order(x.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::vector<EdgeId>> classes;
  std::bernoulli_distribution coin(join);
  for (EdgeId e : order) {
    std::vector<std::size_t> ok;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      bool fits = true;
      for (EdgeId f : classes[i])
        if (x.adjacent_edges(e, f)) fits = false;
      if (fits) ok.push_back(i);
    }
    if (!ok.empty() && coin(rng)) {
      classes[ok[std::uniform_int_distribution<std::size_t>(0, ok.size() - 1)(rng)]].push_back(e);
    } else {
      classes.push_back({e});
    }
  }
  return make_partition(x, std::move(classes), PartitionKind::separating);
}

/// Random separating pairing, by randomized backtracking.
inline std::optional<EdgePartition> random_pairing(const Multigraph& x, std::mt19937& rng) {
  std::size_t m = x.edge_count();
  if (m % 2 != 0) return std::nullopt;
  std::vector<char> used(m, 0);
  std::vector<std::vector<EdgeId>> cur;
  std::vector<EdgeId> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::size_t steps = 0;
  auto rec = [&](auto&& self) -> bool {
    if (++steps > 200000) return false;
    std::size_t k = 0;
    while (k < m && used[order[k]]) ++k;
    if (k == m) return true;
    EdgeId e = order[k];
    used[e] = 1;
    std::vector<EdgeId> cand;
    for (EdgeId f = 0; f < m; ++f)
      if (!used[f] && !x.adjacent_edges(e, f)) cand.push_back(f);
    std::shuffle(cand.begin(), cand.end(), rng);
    for (EdgeId f : cand) {
      used[f] = 1;
      cur.push_back({e, f});
      if (self(self)) return true;
      cur.pop_back();
      used[f] = 0;
    }
    used[e] = 0;
    return false;
  };
  if (!rec(rec)) return std::nullopt;
  return make_partition(x, cur, PartitionKind::pairing);
}

/// Random split: the edges at every white vertex are matched in random pairs.
inline EdgePartition random_split(const ColoredGraph& g, std::mt19937& rng) {
  std::vector<std::vector<EdgeId>> classes;
  for (Point w : g.whites()) {
    auto inc = g.graph.incident(w);
    std::shuffle(inc.begin(), inc.end(), rng);
    for (std::size_t i = 0; i + 1 < inc.size(); i += 2) classes.push_back({inc[i], inc[i + 1]});
  }
  return make_split(g, std::move(classes));
}

/// The pairs of a split at white vertex v, as a block system on local indices.
inline BlockSystem blocks_at(const ColoredGraph& g, const EdgePartition& split, Point v) {
  const auto& inc = g.graph.incident(v);
  auto local = [&](EdgeId e) {
    return static_cast<Point>(std::find(inc.begin(), inc.end(), e) - inc.begin());
  };
  BlockSystem bs;
  for (const auto& c : split.classes)
    if (g.white_end(c[0]) == v) {
      std::vector<Point> b{local(c[0]), local(c[1])};
      std::sort(b.begin(), b.end());
      bs.blocks.push_back(b);
    }
  std::sort(bs.blocks.begin(), bs.blocks.end());
  bs.block_size = 2;
  return bs;
}

/// Colour-preserving symmetries that also preserve the split.
inline PermGroup split_stabilizer(const ColoredGraph& g, const EdgePartition& split) {
  return partition_stabilizer(g.graph, split, &g.color).group;
}

}  // namespace support
