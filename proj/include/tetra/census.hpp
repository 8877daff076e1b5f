#pragma once

// Wreath pairing table and small-graph pairing census, with each cell checked
// against the expected graph by certificate or, for census names without a
// construction here, by structure.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tetra/bgcg.hpp"
#include "tetra/identify.hpp"

namespace tetra {

/// One computed graph compared with an expected name.
struct Cell {
  std::string expected;           // expected name, in family shorthand when constructible
  bool constructible = false;
  Multigraph graph;
  Certificate certificate;
  std::optional<std::string> identified;
  bool matches = false;           // certificate equality, or structure for census names
  bool tetravalent = false;
  bool bipartite = false;
  bool edge_transitive = false;
};

namespace detail {

inline bool parses_as_family(const std::string& name) {
  try {
    parse_family(name);
    return true;
  } catch (const Error&) {
    return false;
  }
}

inline Cell make_cell(Multigraph g, const std::string& expected, std::size_t expected_order) {
  Cell c;
  c.expected = expected;
  c.constructible = parses_as_family(expected);
  c.certificate = canonical_certificate(g);
  c.identified = identify(g);
  c.tetravalent = g.is_regular(4);
  c.bipartite = bipartition(g).has_value();
  c.edge_transitive = is_edge_transitive(g, automorphism_group(g).group);
  bool structure = g.vertex_count() == expected_order && c.tetravalent && c.bipartite && c.edge_transitive;
  if (c.constructible)
    c.matches = canonical_certificate(make_family(expected)) == c.certificate;
  else
    c.matches = structure;
  c.graph = std::move(g);
  return c;
}

inline std::string cell_text(const Cell& c) {
  std::string s = c.expected + (c.matches ? " ok" : " MISMATCH");
  if (!c.constructible) s += " (structural)";
  s += " as " + c.identified.value_or("-");
  return s;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Wreath table

struct Table2Row {
  int index = 0;
  bool is_pairing = false;
  Order stabilizer_order = 0;
  Order witness_order = 0;
  Order expected_order = 0;
  bool witnesses_preserve = false;
  Cell k1;
  Cell k2;
  std::optional<bool> conjugate_to_partner;  // rows 6..8: image of row i-5 under τ₁···τ_m
  Certificate pairing_certificate;

  bool ok() const {
    return is_pairing && stabilizer_order == expected_order && witness_order == expected_order && witnesses_preserve &&
           k1.matches && k2.matches && conjugate_to_partner.value_or(true);
  }
};

struct Table2 {
  std::size_t n = 0;
  std::vector<Table2Row> rows;
  std::size_t conjugacy_classes = 0;
  bool ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const Table2Row& r) { return r.ok(); });
  }
};

/// Expected K1 and K2 graphs and |G| of catalogue row idx for W(n,2).
inline std::array<std::string, 2> table2_expected_names(std::size_t n, int idx) {
  std::size_t m = n / 2;
  auto s = [](std::size_t x) { return std::to_string(x); };
  std::string sdd_n = "SDD(W(" + s(n) + ",2))";
  std::string torus_n = "T44[" + s(n) + ",4]";
  switch (idx) {
    case 0: return {"W(" + s(2 * n) + ",2)", sdd_n};
    case 1:
    case 6: return {"SDD(W(" + s(m) + ",2))", sdd_n};
    case 2:
    case 7: return {"T44[" + s(m) + ",4]", torus_n};
    case 3:
    case 8: return {"PX(" + s(n) + ",2)", "PX(" + s(2 * n) + ",2)"};
    case 4: return {"C" + s(8 * m) + "(1," + s(2 * m + 1) + ")", torus_n};
    case 5: return {"C" + s(8 * m) + "(1," + s(2 * m - 1) + ")", torus_n};
    default: throw InvalidParameter("wreath pairing index must be in 0..8");
  }
}

inline Order table2_expected_order(std::size_t n, int idx) {
  std::size_t m = n / 2;
  switch (idx) {
    case 0: return checked_mul(Order{2} * n, Order{1} << n);
    case 1:
    case 3:
    case 6:
    case 8: return checked_mul(Order{4} * m, Order{1} << m);
    default: return Order{16} * m;
  }
}

inline Table2 table2(std::size_t n) {
  if (n < 3) throw InvalidParameter("table2 needs n >= 3");
  Table2 t;
  t.n = n;
  WreathLabels w(n);
  const Multigraph& b = w.graph;
  std::size_t m = n / 2;
  std::vector<long long> first_half;
  for (std::size_t i = 1; i <= m; ++i) first_half.push_back(static_cast<long long>(i));
  Perm swap = w.tau_product(first_half);
  std::map<int, EdgePartition> built;
  std::set<Certificate> classes;
  for (int idx : wreath_pairing_indices(n, true)) {
    Table2Row r;
    r.index = idx;
    auto p = wreath_pairing(n, idx);
    built[idx] = p;
    r.is_pairing = is_pairing(b, p);
    r.stabilizer_order = partition_stabilizer(b, p).order();
    auto wit = wreath_pairing_witnesses(n, idx);
    r.witness_order = PermGroup(b.domain_size(), wit).order();
    r.witnesses_preserve = std::all_of(wit.begin(), wit.end(), [&](const Perm& x) { return image_of(b, p, x) == p; });
    r.expected_order = table2_expected_order(n, idx);
    auto names = table2_expected_names(n, idx);
    r.k1 = detail::make_cell(bgcg(b, p).graph, names[0], 2 * b.vertex_count());
    r.k2 = detail::make_cell(bgcg_k2(b, push_from_pairing(b, p)).graph, names[1], 4 * b.vertex_count());
    if (idx >= 6) r.conjugate_to_partner = image_of(b, built.at(idx - 5), swap) == p;
    r.pairing_certificate = partition_certificate(b, p);
    classes.insert(r.pairing_certificate);
    t.rows.push_back(std::move(r));
  }
  t.conjugacy_classes = classes.size();
  return t;
}

inline std::string to_text(const Table2& t) {
  std::ostringstream out;
  out << "table2 W(" << t.n << ",2)  conjugacy classes among rows: " << t.conjugacy_classes << "\n";
  for (const auto& r : t.rows) {
    out << "P" << r.index << "  pairing=" << (r.is_pairing ? "yes" : "no") << "  |G|=" << to_string(r.stabilizer_order)
        << " witnesses=" << to_string(r.witness_order) << " expected=" << to_string(r.expected_order)
        << (r.witnesses_preserve ? "" : " (witnesses move the pairing)") << "\n";
    out << "    K1: " << detail::cell_text(r.k1) << "\n";
    out << "    K2: " << detail::cell_text(r.k2) << "\n";
    if (r.conjugate_to_partner)
      out << "    image of P" << r.index - 5 << " under tau_1..tau_m: " << (*r.conjugate_to_partner ? "yes" : "NO") << "\n";
    out << "    " << (r.ok() ? "ok" : "MISMATCH") << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Small-graph census

struct CensusRow {
  std::string base;
  int pairing_index = 0;  // 1-based, canonical order of enumerate_pairings
  Order stabilizer_order = 0;
  EdgePartition pairing;
  Cell k1;
  Cell k2;
};

struct CensusBase {
  std::string base;
  std::vector<std::array<std::string, 2>> expected;  // expected rows
  std::vector<CensusRow> rows;
  std::vector<std::size_t> assignment;  // computed row i -> expected row assignment[i]
  bool counts_match = false;
  bool cells_match = false;
  bool names_consistent = false;        // equal census names ⇔ isomorphic results
  bool ok() const { return counts_match && cells_match && names_consistent; }
};

struct Table3 {
  std::vector<CensusBase> bases;
  bool ok() const {
    return std::all_of(bases.begin(), bases.end(), [](const CensusBase& b) { return b.ok(); });
  }
};

/// The expected rows in family shorthand. Octahedron is C6(1,2) and K4,4 is
/// W(4,2); other census notations are kept as given.
inline std::vector<std::pair<std::string, std::vector<std::array<std::string, 2>>>> table3_expected() {
  return {
      {"K5", {{"C10(1,3)", "R10(4,1)"}}},
      {"DW(3,3)", {{"DW(6,3)", "T44{6,0}"}}},
      {"C10(1,3)", {{"SDD(K5)", "SDD(C10(1,3))"}}},
      {"R6(1,2)", {{"SDD(C6(1,2))", "HC(F8)"}, {"R12(8,7)", "HC(F8)"}, {"SDD(C6(1,2))", "SDD(R6(5,4))"}}},
      {"C13(1,5)", {{"C26(1,5)", "R26(10,1)"}}},
      {"L(Petersen)", {{"PS(6,5;2)", "HC(F10)"}}},
      {"C15(1,4)", {{"C30(1,11)", "R30(22,1)"}}},
      {"R8(6,5)",
       {{"R16(10,9)", "PL(SoP(4,4))"},
        {"SDD(W(4,2))", "PL(SoP(4,4))"},
        {"SDD(W(4,2))", "SDD(R8(6,5))"},
        {"MSY[4,8,3,4]", "AMC[8,8,(3 6):(4 5)]"},
        {"T44{4,4}", "AMC[8,8,(3 6):(4 5)]"}}},
  };
}

namespace detail {

inline bool row_cells_match(const CensusRow& r, const std::array<std::string, 2>& e, std::size_t base_order) {
  auto one = [](const Cell& c, const std::string& name, std::size_t order) {
    if (parses_as_family(name)) return canonical_certificate(make_family(name)) == c.certificate;
    return c.graph.vertex_count() == order && c.tetravalent && c.bipartite && c.edge_transitive;
  };
  return one(r.k1, e[0], 2 * base_order) && one(r.k2, e[1], 4 * base_order);
}

}  // namespace detail

inline CensusBase census_base(const std::string& base, const std::vector<std::array<std::string, 2>>& expected,
                              std::optional<Order> bound = std::nullopt) {
  CensusBase cb;
  cb.base = base;
  cb.expected = expected;
  Multigraph b = make_family(base);
  auto pairings = enumerate_pairings(b, bound);
  int index = 0;
  for (auto& p : pairings) {
    CensusRow r;
    r.base = base;
    r.pairing_index = ++index;
    r.stabilizer_order = p.stabilizer_order;
    r.pairing = p.pairing;
    r.k1 = detail::make_cell(bgcg(b, p.pairing).graph, "", 2 * b.vertex_count());
    r.k2 = detail::make_cell(bgcg_k2(b, push_from_pairing(b, p.pairing)).graph, "", 4 * b.vertex_count());
    cb.rows.push_back(std::move(r));
  }
  cb.counts_match = cb.rows.size() == expected.size();
  if (!cb.counts_match) return cb;

  // match computed rows to expected rows by result, not by index
  std::vector<std::size_t> perm(expected.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool good = true;
    for (std::size_t i = 0; i < perm.size() && good; ++i) good = detail::row_cells_match(cb.rows[i], expected[perm[i]], b.vertex_count());
    if (!good) continue;
    // equal census names must name isomorphic graphs, distinct names non-isomorphic ones
    bool consistent = true;
    for (int col = 0; col < 2 && consistent; ++col)
      for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
          const Cell& x = col == 0 ? cb.rows[i].k1 : cb.rows[i].k2;
          const Cell& y = col == 0 ? cb.rows[j].k1 : cb.rows[j].k2;
          bool same_name = expected[perm[i]][static_cast<std::size_t>(col)] == expected[perm[j]][static_cast<std::size_t>(col)];
          if (same_name != (x.certificate == y.certificate)) consistent = false;
        }
    if (!consistent) continue;
    cb.assignment = perm;
    cb.cells_match = true;
    cb.names_consistent = true;
    break;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (std::size_t i = 0; i < cb.rows.size(); ++i) {
    std::size_t e = cb.assignment.empty() ? i : cb.assignment[i];
    cb.rows[i].k1.expected = expected[e][0];
    cb.rows[i].k2.expected = expected[e][1];
    cb.rows[i].k1.constructible = detail::parses_as_family(expected[e][0]);
    cb.rows[i].k2.constructible = detail::parses_as_family(expected[e][1]);
    cb.rows[i].k1.matches = cb.cells_match;
    cb.rows[i].k2.matches = cb.cells_match;
  }
  return cb;
}

inline Table3 table3(std::optional<Order> bound = std::nullopt) {
  Table3 t;
  for (auto& [base, rows] : table3_expected()) t.bases.push_back(census_base(base, rows, bound));
  return t;
}

inline std::string to_text(const Table3& t) {
  std::ostringstream out;
  out << "table3\n";
  for (const auto& b : t.bases) {
    out << b.base << "  pairings=" << b.rows.size() << " expected=" << b.expected.size()
        << (b.ok() ? "  ok" : "  MISMATCH") << "\n";
    for (const auto& r : b.rows) {
      out << "  #" << r.pairing_index << "  |G|=" << to_string(r.stabilizer_order) << "\n";
      out << "    K1: " << detail::cell_text(r.k1) << "  cert " << r.k1.certificate.digest() << "\n";
      out << "    K2: " << detail::cell_text(r.k2) << "  cert " << r.k2.certificate.digest() << "\n";
    }
  }
  return out.str();
}

}  // namespace tetra
