#include <gtest/gtest.h>

#include "circwl/tables.hpp"

using namespace circwl;

TEST(Tables, ProductRow) {
  const auto row = compute_table_row({FamilyLabel::G5, 2, 2});
  ASSERT_TRUE(row.params);
  EXPECT_EQ(to_string(*row.params), "(8,5,4,2)");
  EXPECT_TRUE(row.strict);
  EXPECT_TRUE(row.ddg);
  EXPECT_EQ(row.wl_rank, 4);
  EXPECT_EQ(row.dim.interval(), "{2}");
  ASSERT_TRUE(row.aut_bruteforce);
  EXPECT_EQ(BigInt(*row.aut_bruteforce), row.aut_formula);
  EXPECT_TRUE(row_mismatches(row).empty());
}

TEST(Tables, CubicRow) {
  const auto row = compute_table_row({FamilyLabel::G8, 0, 0, 13});
  ASSERT_TRUE(row.params);
  EXPECT_TRUE(tuple_matches({13, 8, 5, 4}, *row.params));
  EXPECT_FALSE(row.ddg);
  EXPECT_EQ(row.dim.interval(), "{2,3}");
  EXPECT_EQ(to_string(row.expected.tuple), "(13,8,b,a)");
}

TEST(Tables, SporadicAndProductRows) {
  const auto f1 = compute_table_row({FamilyLabel::F1, 0, 0, 3, 7});
  EXPECT_EQ(to_string(*f1.params), "(21,12,7,6)");
  EXPECT_EQ(f1.wl_rank, 5);
  const auto f2 = compute_table_row({FamilyLabel::F2, 0, 0, 0, 0, 3});
  EXPECT_TRUE(tuple_matches(f2.expected.tuple, *f2.params));
  EXPECT_EQ(f2.wl_rank, 6);
}

TEST(Tables, TupleMatching) {
  const DezaParams d{10, 5, 4, 2};
  EXPECT_TRUE(tuple_matches({10, 5, 4, 2}, d));
  EXPECT_TRUE(tuple_matches({10, 5, 2, 4}, d));
  EXPECT_TRUE(tuple_matches({10, 5, std::nullopt, std::nullopt}, d));
  EXPECT_FALSE(tuple_matches({10, 5, 4, 1}, d));
  EXPECT_FALSE(tuple_matches({10, 6, std::nullopt, std::nullopt}, d));
}

TEST(Tables, RegeneratedTablesHaveOneKnownMismatch) {
  const auto report = regenerate_tables();
  EXPECT_EQ(report.rows.size(), 10U * kTablesInstancesPerRow + 2U);
  ASSERT_EQ(report.mismatches.size(), 1U);
  EXPECT_EQ(report.mismatches.front(), "g7(p=7): SDG=no, expected yes");
  const auto text = report.render();
  EXPECT_NE(text.find("g7(p=7)"), std::string::npos);
}
