#include <gtest/gtest.h>

#include "tetra.hpp"

using namespace tetra;

namespace {

bool iso(const Multigraph& a, const std::string& name) { return are_isomorphic(a, make_family(name)).has_value(); }

}  // namespace

TEST(Names, PrecedenceAndAliases) {
  auto w12 = identify_all(make_family("W(12,2)"));
  ASSERT_FALSE(w12.empty());
  EXPECT_EQ(w12.front(), "C24(1,11)");
  EXPECT_NE(std::find(w12.begin(), w12.end(), "W(12,2)"), w12.end());
  EXPECT_EQ(identify(make_family("R10(4,1)")), identify(make_family("R10(4,1)")));
  auto sdd_k5 = identify_all(make_family("SDD(K5)"));
  EXPECT_NE(std::find(sdd_k5.begin(), sdd_k5.end(), "SDD(K5)"), sdd_k5.end());
  // bracket tori are listed with the larger parameter first
  auto t34 = identify_all(make_family("T44[3,4]"));
  EXPECT_NE(std::find(t34.begin(), t34.end(), "T44[4,3]"), t34.end());
}

TEST(Names, NamedGraphIdentifiesAsItself) {
  for (const std::string name : {"C13(1,5)", "R10(4,1)", "PX(5,2)", "C3xC3", "DC6", "L(Petersen)", "Heawood",
                                 "T44{4,4}", "T44[5,4]", "W(5,2)"}) {
    auto g = make_family(name);
    auto first = identify(g);
    ASSERT_TRUE(first.has_value()) << name;
    EXPECT_TRUE(iso(g, *first)) << name;
    auto all = identify_all(g);
    EXPECT_NE(std::find(all.begin(), all.end(), name), all.end()) << name;
  }
}

TEST(TableTwo, RowsForSix) {
  auto t = table2(6);
  ASSERT_EQ(t.rows.size(), 9u);
  for (const auto& r : t.rows) {
    EXPECT_TRUE(r.is_pairing) << r.index;
    EXPECT_EQ(r.witness_order, r.expected_order) << r.index;
    EXPECT_TRUE(r.witnesses_preserve) << r.index;
    EXPECT_EQ(r.stabilizer_order, r.expected_order) << r.index;
    EXPECT_TRUE(r.k2.matches) << r.index;
  }
  EXPECT_EQ(t.rows[0].stabilizer_order, Order{768});
  EXPECT_EQ(t.rows[1].stabilizer_order, Order{96});
  EXPECT_EQ(t.rows[2].stabilizer_order, Order{48});
  for (int i : {0, 1, 2, 3, 4, 5, 6, 8}) EXPECT_TRUE(t.rows[i].ok()) << i;
}

TEST(TableTwo, SevenAsBuilt) {
  // observed: the row-7 pairing as built does not lie in the τ-orbit of row 2
  auto t = table2(6);
  const auto& r = t.rows[7];
  EXPECT_FALSE(r.conjugate_to_partner.value_or(true));
  EXPECT_TRUE(iso(r.k1.graph, "C24(1,5)"));
  EXPECT_EQ(r.pairing_certificate, t.rows[5].pairing_certificate);
  EXPECT_EQ(t.conjugacy_classes, 5u);
}

TEST(TableTwo, KnownCoincidences) {
  // m = 3: P2 ~ P4; m = 5: P2 ~ P5
  auto t6 = table2(6);
  EXPECT_EQ(t6.rows[2].pairing_certificate, t6.rows[4].pairing_certificate);
  EXPECT_TRUE(iso(make_family("T44[3,4]"), "C24(1,7)"));
  EXPECT_TRUE(iso(make_family("T44[5,4]"), "C40(1,9)"));
}

TEST(TableTwo, EvenHalfRows) {
  // m even: rows 4 and 5 built the same way are not dart-transitive, yet
  // their K2 graphs are edge-transitive tori
  for (std::size_t n : {8u, 12u}) {
    auto w = make_family(family(Wreath{n}));
    for (int idx : {4, 5}) {
      auto p = wreath_pairing(n, idx, false);
      EXPECT_FALSE(is_pairing(w, p)) << idx;
      std::vector<Point> img(w.edge_count());
      for (const auto& c : p.classes) img[c[0]] = c[1], img[c[1]] = c[0];
      auto k2 = bgcg_k2(w, Perm(std::move(img))).graph;
      EXPECT_TRUE(transitivity_report(k2).edge_transitive) << idx;
      EXPECT_TRUE(iso(k2, "T44<" + std::to_string(n + 2) + "," + std::to_string(n - 2) + ">")) << idx;
    }
  }
}

TEST(TableThree, ExpectedShape) {
  auto e = table3_expected();
  std::size_t rows = 0;
  for (const auto& [base, r] : e) rows += r.size();
  EXPECT_EQ(e.size(), 8u);
  EXPECT_EQ(rows, 14u);
}

TEST(TableThree, SmallBases) {
  auto e = table3_expected();
  for (const auto& [base, rows] : e) {
    if (base != "K5" && base != "C13(1,5)" && base != "R6(1,2)") continue;
    auto b = census_base(base, rows, std::nullopt);
    EXPECT_TRUE(b.counts_match) << base;
    EXPECT_TRUE(b.cells_match) << base;
    EXPECT_TRUE(b.names_consistent) << base;
  }
}

TEST(TableThree, Text) {
  auto t = table3();
  EXPECT_TRUE(t.ok());
  auto text = to_text(t);
  EXPECT_NE(text.find("C26(1,5)"), std::string::npos);
  EXPECT_EQ(text.find("MISMATCH"), std::string::npos);
}
