#include "sbfl/locality.h"

#include <random>

#include <gtest/gtest.h>

#include "oracle.h"

namespace sbfl {
namespace {

BugPositionSet Truth() { return {"B", {{"F.java", {{"m", 5, 10}}, {9}}}}; }

TEST(MatchesTest, ContainmentByGranularity) {
  SuspiciousLine line{"F.java", 7, 0.5, 1};
  EXPECT_TRUE(Matches(line, Truth(), Granularity::kFile));
  EXPECT_TRUE(Matches(line, Truth(), Granularity::kMethod));
  EXPECT_FALSE(Matches(line, Truth(), Granularity::kLine));
}

TEST(MatchesTest, OtherFileNeverMatches) {
  SuspiciousLine line{"G.java", 9, 0.5, 1};
  for (Granularity g : kAllGranularities) {
    EXPECT_FALSE(Matches(line, Truth(), g));
  }
}

TEST(MatchesTest, DeclarationBugNeverMatchesAtMethod) {
  // Faulty field declaration: the position has no enclosing method.
  BugPositionSet truth{"Math-12", {{"F.java", {}, {3}}}};
  SuspiciousLine line{"F.java", 3, 1.0, 1};
  EXPECT_TRUE(Matches(line, truth, Granularity::kFile));
  EXPECT_FALSE(Matches(line, truth, Granularity::kMethod));
  EXPECT_TRUE(Matches(line, truth, Granularity::kLine));
}

TEST(MatchesTest, AnyPositionOfMultiFileBug) {
  BugPositionSet truth{
      "M", {{"A.java", {{"a", 1, 4}}, {2}}, {"B.java", {{"b", 20, 30}}, {25}}}};
  EXPECT_TRUE(Matches({"B.java", 25, 0, 1}, truth, Granularity::kLine));
  EXPECT_TRUE(Matches({"B.java", 21, 0, 1}, truth, Granularity::kMethod));
  // Line 2 is buggy in A.java only.
  EXPECT_FALSE(Matches({"B.java", 2, 0, 1}, truth, Granularity::kLine));
}

TEST(LocalizeTest, HeadAndMiss) {
  RankedSuspiciousList list = {{"F.java", 9, 1.0, 1}, {"G.java", 1, 0.5, 2}};
  auto r = Localize(list, Truth(), Granularity::kLine, RankingMetric::kOchiai);
  EXPECT_EQ(r.position, 1);
  EXPECT_EQ(r.bug_id, "B");
  RankedSuspiciousList miss = {{"G.java", 1, 0.5, 1}};
  EXPECT_EQ(FirstMatchPosition(miss, Truth(), Granularity::kFile), 0);
}

TEST(LocalizeTest, MatchesLinearScanOracle) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    auto truth = oracle::RandomTruth(rng, false);
    auto list = oracle::RandomList(rng, 1 + static_cast<int>(rng() % 80));
    for (Granularity g : kAllGranularities) {
      EXPECT_EQ(FirstMatchPosition(list, truth, g),
                oracle::NaiveFirstMatch(list, truth, g));
    }
  }
}

TEST(LocalizeTest, AppendingAfterFirstMatchChangesNothing) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    auto truth = oracle::RandomTruth(rng, false);
    auto list = oracle::RandomList(rng, 30);
    for (Granularity g : kAllGranularities) {
      const int before = FirstMatchPosition(list, truth, g);
      if (before == 0) continue;
      auto longer = list;
      longer.push_back({"Z.java", 1, 0.0, static_cast<int>(longer.size()) + 1});
      longer.push_back({"F0.java", 99, 0.0, static_cast<int>(longer.size()) + 1});
      EXPECT_EQ(FirstMatchPosition(longer, truth, g), before);
    }
  }
}

TEST(GranularityNameTest, RoundTrips) {
  for (Granularity g : kAllGranularities) {
    EXPECT_EQ(ParseGranularity(GranularityName(g)), g);
  }
  EXPECT_FALSE(ParseGranularity("statement").has_value());
}

}  // namespace
}  // namespace sbfl
