#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "tetra/error.hpp"
#include "tetra/multigraph.hpp"

namespace tetra {

enum class PartitionKind { plain, split_at_white, separating, pairing };

inline std::string to_string(PartitionKind k) {
  switch (k) {
    case PartitionKind::plain: return "plain";
    case PartitionKind::split_at_white: return "split_at_white";
    case PartitionKind::separating: return "separating";
    case PartitionKind::pairing: return "pairing";
  }
  return "plain";
}

inline PartitionKind parse_partition_kind(const std::string& s) {
  if (s == "plain") return PartitionKind::plain;
  if (s == "split_at_white" || s == "split") return PartitionKind::split_at_white;
  if (s == "separating") return PartitionKind::separating;
  if (s == "pairing") return PartitionKind::pairing;
  throw ParseError("unknown partition kind '" + s + "'");
}

/// Partition of the edge set of a host graph. Classes are kept sorted and
/// listed in lexicographic order so equal partitions compare equal.
struct EdgePartition {
  PartitionKind kind = PartitionKind::plain;
  std::vector<std::vector<EdgeId>> classes;

  void normalize() {
    for (auto& c : classes) std::sort(c.begin(), c.end());
    std::sort(classes.begin(), classes.end());
  }

  /// class index of every edge
  std::vector<std::size_t> class_of(std::size_t edge_count) const {
    std::vector<std::size_t> out(edge_count, static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (EdgeId e : classes[i]) out[e] = i;
    return out;
  }

  friend bool operator==(const EdgePartition&, const EdgePartition&) = default;
};

inline bool covers_edges_exactly(const Multigraph& g, const std::vector<std::vector<EdgeId>>& classes) {
  std::vector<bool> seen(g.edge_count(), false);
  std::size_t total = 0;
  for (const auto& c : classes) {
    if (c.empty()) return false;
    for (EdgeId e : c) {
      if (e >= g.edge_count() || seen[e]) return false;
      seen[e] = true;
      ++total;
    }
  }
  return total == g.edge_count();
}

/// No class contains two edges with a common endvertex.
inline bool is_separating(const Multigraph& g, const std::vector<std::vector<EdgeId>>& classes) {
  for (const auto& c : classes)
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        if (g.adjacent_edges(c[i], c[j])) return false;
  return true;
}

/// Every class is two edges sharing a white endvertex.
inline bool is_split_at_white(const ColoredGraph& cg, const std::vector<std::vector<EdgeId>>& classes) {
  for (const auto& c : classes) {
    if (c.size() != 2) return false;
    if (cg.white_end(c[0]) != cg.white_end(c[1])) return false;
  }
  return true;
}

/// Validated constructor for the separating and pairing kinds.
inline EdgePartition make_partition(const Multigraph& g, std::vector<std::vector<EdgeId>> classes, PartitionKind kind) {
  if (!covers_edges_exactly(g, classes)) throw InvalidParameter("classes do not partition the edge set");
  if (kind == PartitionKind::separating || kind == PartitionKind::pairing) {
    if (!is_separating(g, classes)) throw NotSeparating("a class contains two adjacent edges");
  }
  if (kind == PartitionKind::pairing)
    for (const auto& c : classes)
      if (c.size() != 2) throw NotAPairing("a class does not have exactly two edges");
  if (kind == PartitionKind::split_at_white) throw InvalidParameter("use make_split for splits");
  EdgePartition p{kind, std::move(classes)};
  p.normalize();
  return p;
}

inline EdgePartition make_split(const ColoredGraph& cg, std::vector<std::vector<EdgeId>> classes) {
  if (!covers_edges_exactly(cg.graph, classes)) throw BadSplit("classes do not partition the edge set");
  if (!is_split_at_white(cg, classes)) throw BadSplit("a class is not two edges at one white vertex");
  EdgePartition p{PartitionKind::split_at_white, std::move(classes)};
  p.normalize();
  return p;
}

/// Partition into singletons.
inline EdgePartition singleton_partition(const Multigraph& g) {
  EdgePartition p{PartitionKind::separating, {}};
  for (EdgeId e = 0; e < g.edge_count(); ++e) p.classes.push_back({e});
  return p;
}

// Text format:
//   partition <kind> <graph-hash>
//   class e1 e2 [e3 ...]

inline std::string to_text(const EdgePartition& p, const Multigraph& host) {
  std::ostringstream out;
  out << "partition " << to_string(p.kind) << " " << graph_hash(host) << "\n";
  for (const auto& c : p.classes) {
    out << "class";
    for (EdgeId e : c) out << " " << e;
    out << "\n";
  }
  return out.str();
}

struct ParsedPartition {
  EdgePartition partition;
  std::string graph_hash;
};

inline ParsedPartition parse_partition_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  ParsedPartition out;
  bool header = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "partition") {
      std::string kind;
      if (!(ls >> kind >> out.graph_hash)) throw ParseError("malformed partition header");
      out.partition.kind = parse_partition_kind(kind);
      header = true;
    } else if (kw == "class") {
      if (!header) throw ParseError("class line before partition header");
      std::vector<EdgeId> c;
      long long e = 0;
      while (ls >> e) {
        if (e < 0) throw ParseError("negative edge id");
        c.push_back(static_cast<EdgeId>(e));
      }
      if (c.empty()) throw ParseError("empty class line");
      out.partition.classes.push_back(std::move(c));
    } else {
      throw ParseError("unknown keyword '" + kw + "'");
    }
  }
  if (!header) throw ParseError("missing partition header");
  out.partition.normalize();
  return out;
}

}  // namespace tetra
