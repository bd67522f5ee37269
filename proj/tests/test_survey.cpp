#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "circwl/survey.hpp"
#include "oracles.hpp"

using namespace circwl;

namespace {

SurveyResult survey(int lo, int hi, unsigned jobs = 1) {
  SurveyOptions opt;
  opt.n_min = lo;
  opt.n_max = hi;
  opt.jobs = jobs;
  return run_survey(opt);
}

// Common-neighbour counts of a circulant by direct matrix count.
bool deza_by_matrix(const GroupSubset& s) {
  return oracle::common_neighbour_counts(oracle::circulant_matrix(s.order(), s.members())).size() <= 2;
}

}  // namespace

TEST(Survey, EnumerationCounts) {
  EXPECT_EQ(enumerate_symmetric_sets(4).size(), 4U);
  EXPECT_EQ(enumerate_symmetric_sets(5).size(), 4U);
  EXPECT_EQ(enumerate_symmetric_sets(12).size(), 64U);
  std::set<std::string> n4;
  for (const auto& s : enumerate_symmetric_sets(4)) n4.insert(to_literal(s));
  EXPECT_EQ(n4, (std::set<std::string>{"4:", "4: 2", "4: 1,3", "4: 1,2,3"}));
  for (int n = 4; n <= 20; ++n) {
    for (const auto& s : enumerate_symmetric_sets(n)) {
      EXPECT_TRUE(s.is_symmetric());
      EXPECT_FALSE(s.contains(0));
    }
  }
}

TEST(Survey, MultiplierReductionKeepsEveryClass) {
  for (int n = 4; n <= 16; ++n) {
    std::set<CanonicalForm> raw, reduced;
    for (const auto& s : enumerate_symmetric_sets(n)) raw.insert(canonical_form(s));
    const auto kept = enumerate_symmetric_sets(n, true);
    for (const auto& s : kept) reduced.insert(canonical_form(s));
    EXPECT_EQ(raw, reduced) << n;
    EXPECT_LE(kept.size(), enumerate_symmetric_sets(n).size());
  }
}

TEST(Survey, PrefilterAgreesWithMatrixCount) {
  for (int n = 4; n <= 18; ++n) {
    for (const auto& s : enumerate_symmetric_sets(n)) {
      EXPECT_EQ(detail::deza_prefilter(s.mask(), n), deza_by_matrix(s)) << to_literal(s);
      EXPECT_EQ(detail::deza_prefilter(s.mask(), n), deza_report(n, s).is_deza) << to_literal(s);
    }
  }
}

TEST(Survey, RecordsAreDezaAndPairwiseNonIsomorphic) {
  const auto r = survey(4, 16);
  EXPECT_EQ(r.stats.identity_failures(), 0U);
  for (int n = 4; n <= 16; ++n) {
    std::vector<const SearchRecord*> at_n;
    for (const auto& rec : r.records)
      if (rec.n == n) at_n.push_back(&rec);
    for (std::size_t i = 0; i < at_n.size(); ++i) {
      EXPECT_TRUE(deza_by_matrix(at_n[i]->connection));
      for (std::size_t j = i + 1; j < at_n.size(); ++j) {
        EXPECT_FALSE(find_isomorphism(Digraph::circulant(at_n[i]->connection),
                                      Digraph::circulant(at_n[j]->connection)));
      }
    }
  }
  // Every Deza symmetric set is isomorphic to some record.
  for (int n = 4; n <= 12; ++n) {
    for (const auto& s : enumerate_symmetric_sets(n)) {
      if (!deza_by_matrix(s)) continue;
      const auto form = canonical_form(s);
      EXPECT_TRUE(std::any_of(r.records.begin(), r.records.end(),
                              [&](const SearchRecord& rec) { return rec.n == n && rec.form == form; }))
          << to_literal(s);
    }
  }
}

TEST(Survey, ThreadCountDoesNotChangeOutput) {
  const auto one = survey(4, 24, 1);
  const auto three = survey(4, 24, 3);
  ASSERT_EQ(one.records.size(), three.records.size());
  for (std::size_t i = 0; i < one.records.size(); ++i) {
    EXPECT_EQ(one.records[i].connection, three.records[i].connection);
    EXPECT_EQ(one.records[i].wl_rank, three.records[i].wl_rank);
    EXPECT_EQ(one.records[i].dim.interval(), three.records[i].dim.interval());
  }
  EXPECT_EQ(one.stats.sets_enumerated, three.stats.sets_enumerated);
  EXPECT_EQ(one.stats.closures, three.stats.closures);
}

TEST(Survey, StrictOrderEight) {
  SurveyOptions opt;
  opt.n_min = opt.n_max = 8;
  opt.filters.strict_only = true;
  opt.jobs = 1;
  const auto r = run_survey(opt);
  const auto sp8 = std::find_if(r.records.begin(), r.records.end(), [](const SearchRecord& rec) {
    return rec.family && rec.family->label == FamilyLabel::SP8;
  });
  ASSERT_NE(sp8, r.records.end());
  EXPECT_EQ(to_string(sp8->params), "(8,4,2,1)");
  EXPECT_EQ(sp8->wl_rank, 5);
  for (const auto& rec : r.records) {
    EXPECT_TRUE(rec.is_strict);
    if (rec.wl_rank == 5) {
      EXPECT_EQ(&rec, &*sp8);
    }
  }
}

TEST(Survey, RankFourMatchesFamiliesUpToTwelve) {
  SurveyOptions opt;
  opt.n_min = 4;
  opt.n_max = 12;
  opt.filters.rank = 4;
  const auto r = run_survey(opt);
  EXPECT_TRUE(unexplained_rank4(r.records).empty());
  std::set<CanonicalForm> family_forms;
  for (auto label : kRank4Families)
    for (const auto& spec : family_instances(label, 12))
      if (family_order(spec) >= 4) family_forms.insert(canonical_form(family_graph(spec).connection));
  std::set<CanonicalForm> found;
  for (const auto& rec : r.records) {
    EXPECT_EQ(rec.wl_rank, 4);
    EXPECT_TRUE(rec.rank4.has_value());
    found.insert(rec.form);
  }
  EXPECT_EQ(found, family_forms);
}

TEST(Survey, UnexplainedRankFourIsReported) {
  SearchRecord fake;
  fake.n = 9;
  fake.connection = GroupSubset(9, {3, 6});
  fake.wl_rank = 4;
  EXPECT_EQ(unexplained_rank4({fake}).size(), 1U);
  fake.family = FamilySpec{FamilyLabel::SP9};
  EXPECT_EQ(unexplained_rank4({fake}).size(), 1U);
  fake.family = FamilySpec{FamilyLabel::G2, 3};
  EXPECT_TRUE(unexplained_rank4({fake}).empty());
}

TEST(Survey, Guards) {
  SurveyOptions opt;
  opt.n_min = 41;
  opt.n_max = 42;
  EXPECT_THROW(run_survey(opt), SizeError);
  opt.force = true;
  opt.n_max = 65;
  EXPECT_THROW(run_survey(opt), UnsupportedError);
  opt.n_min = 10;
  opt.n_max = 5;
  EXPECT_THROW(run_survey(opt), PreconditionError);
}

TEST(Survey, SubgroupChainIdentity) {
  SurveyStats stats;
  for (int n = 2; n <= 60; ++n) check_subgroup_chains(n, stats);
  EXPECT_GT(stats.subgroup_chain_checks, 0U);
  EXPECT_EQ(stats.subgroup_chain_failures, 0U);
}
