#include <gtest/gtest.h>

#include <map>

#include "flatland/census.hpp"
#include "flatland/symmetry.hpp"
#include "oracles.hpp"
#include "support.hpp"

namespace flatland {
namespace {

int count_kind(const std::vector<Triangulation>& items, SurfaceType::Kind kind) {
  int c = 0;
  for (const auto& t : items) c += surface_type(t).kind == kind;
  return c;
}

TEST(Enumerate, TooFewVertices) {
  EXPECT_TRUE(enumerate_degree_regular(6).empty());
  EXPECT_TRUE(enumerate_degree_regular(1).empty());
  EXPECT_THROW(enumerate_degree_regular(0), std::invalid_argument);
  EXPECT_THROW(enumerate_degree_regular(33), std::invalid_argument);
}

TEST(Enumerate, SmallCounts) {
  EXPECT_EQ(enumerate_degree_regular(7).size(), 1u);
  EXPECT_EQ(enumerate_degree_regular(12).size(), 7u);
  EXPECT_EQ(enumerate_degree_regular(13).size(), 2u);
}

TEST(Enumerate, OutputIsCanonicalAndSorted) {
  const auto items = enumerate_degree_regular(12);
  std::vector<std::vector<int>> codes;
  for (const auto& t : items) {
    EXPECT_EQ(canonical_triangulation(t), t);
    codes.push_back(canonical_form(t).code);
  }
  EXPECT_TRUE(std::is_sorted(codes.begin(), codes.end()));
  EXPECT_EQ(std::adjacent_find(codes.begin(), codes.end()), codes.end());
}

TEST(Enumerate, AgreesWithEdgeClosingOracle) {
  for (int n = 7; n <= 10; ++n) {
    const auto fast = enumerate_degree_regular(n);
    const auto slow = oracle::degree_six_census(n);
    ASSERT_EQ(fast.size(), slow.size()) << n;
    // Every oracle class has exactly one partner, checked by brute force.
    for (const auto& s : slow) {
      int partners = 0;
      for (const auto& f : fast) partners += oracle::isomorphism_by_filter(s, f).has_value();
      EXPECT_EQ(partners, 1) << n;
    }
  }
}

TEST(Enumerate, AgreesWithOracleCountsUpToTwelve) {
  for (int n : {11, 12}) {
    const auto fast = enumerate_degree_regular(n);
    const auto slow = oracle::degree_six_census(n);
    EXPECT_EQ(fast.size(), slow.size()) << n;
    int slow_orientable = 0;
    for (const auto& s : slow) {
      slow_orientable += oracle::orientable_by_double_cover(n, {s.faces().begin(), s.faces().end()});
    }
    EXPECT_EQ(count_kind(fast, SurfaceType::Kind::kTorus), slow_orientable) << n;
  }
}

TEST(Enumerate, ParallelMatchesSerial) {
  for (int n : {9, 12, 15}) {
    CensusOptions parallel;
    parallel.jobs = 4;
    EXPECT_EQ(enumerate_degree_regular(n, parallel), enumerate_degree_regular(n)) << n;
  }
}

TEST(Enumerate, NodeBudgetIsAnError) {
  CensusOptions tiny;
  tiny.node_budget = 10;
  EXPECT_THROW(enumerate_degree_regular(12, tiny), ResourceLimit);
  tiny.jobs = 3;
  EXPECT_THROW(enumerate_degree_regular(12, tiny), ResourceLimit);
}

TEST(Enumerate, StatsAreReported) {
  CensusStats stats;
  enumerate_degree_regular(12, {}, &stats);
  EXPECT_GT(stats.nodes, 0u);
  EXPECT_GE(stats.completions, 7u);
}

TEST(DefaultBudget, UnlimitedUpToTwelve) {
  EXPECT_FALSE(default_time_budget(12).has_value());
  EXPECT_TRUE(default_time_budget(13).has_value());
}

TEST(Classify, FifteenVertices) {
  const CensusReport r = classify_census(15);
  EXPECT_EQ(r.total, 7);
  EXPECT_EQ(r.torus, 4);
  EXPECT_EQ(r.klein_bottle, 3);
  std::map<std::string, const CensusItem*> by_family;
  for (const auto& item : r.items) {
    ASSERT_FALSE(item.matched_family_names.empty());
    for (const auto& name : item.matched_family_names) by_family[name] = &item;
  }
  for (const char* name : {"Q_{5,3}", "B_{3,5}", "B_{5,3}"}) {
    ASSERT_TRUE(by_family.count(name)) << name;
    EXPECT_FALSE(by_family[name]->weakly_regular) << name;
    EXPECT_EQ(by_family[name]->surface.kind, SurfaceType::Kind::kKleinBottle);
  }
}

TEST(Classify, EmptyCensus) {
  const CensusReport r = classify_census(6);
  EXPECT_EQ(r.total, 0);
  EXPECT_TRUE(r.items.empty());
}

}  // namespace
}  // namespace flatland
