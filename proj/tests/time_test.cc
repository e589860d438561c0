// Copyright 2026 The mstream Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mstream/time.h"

#include <gtest/gtest.h>

#include <random>
#include <vector>

namespace mstream {
namespace {

TEST(IntervalMembersTest, LeftOpenIsShiftedClosed) {
  EXPECT_EQ(IntervalMembers(TimeInterval::LeftOpen(3, 6), FiniteDomain(0, 10)),
            (std::vector<TimePoint>{4, 5, 6}));
}

TEST(IntervalMembersTest, Singleton) {
  EXPECT_EQ(IntervalMembers(TimeInterval::Closed(1, 1), FiniteDomain(0, 10)),
            (std::vector<TimePoint>{1}));
}

TEST(IntervalMembersTest, EmptyInterval) {
  EXPECT_TRUE(IntervalMembers(TimeInterval::RightOpen(5, 3), FiniteDomain(0, 10)).empty());
}

TEST(IntervalMembersTest, ClipsToDomain) {
  EXPECT_EQ(IntervalMembers(TimeInterval::Closed(-3, 2), FiniteDomain(0, 10)),
            (std::vector<TimePoint>{0, 1, 2}));
  EXPECT_TRUE(IntervalMembers(TimeInterval::Closed(20, 30), FiniteDomain(0, 10)).empty());
}

TEST(TimeIntervalTest, AllEmptyIntervalsAreEqual) {
  EXPECT_EQ(TimeInterval::RightOpen(5, 3), TimeInterval::Empty());
  EXPECT_EQ(TimeInterval::Open(4, 5), TimeInterval::Empty());
  EXPECT_EQ(TimeInterval::LeftOpen(2, 2), TimeInterval::Closed(9, 1));
}

TEST(TimeIntervalTest, NormalizationTable) {
  EXPECT_EQ(TimeInterval::LeftOpen(3, 6), TimeInterval::Closed(4, 6));
  EXPECT_EQ(TimeInterval::RightOpen(3, 6), TimeInterval::Closed(3, 5));
  EXPECT_EQ(TimeInterval::Open(3, 6), TimeInterval::Closed(4, 5));
}

// Brute-force membership per tick against the normalization table.
TEST(TimeIntervalTest, MembersAgreeWithBruteForce) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> bound(-4, 14);
  std::bernoulli_distribution coin(0.5);
  const FiniteDomain dom(0, 10);
  for (int i = 0; i < 500; ++i) {
    const TimePoint lo = bound(rng), hi = bound(rng);
    const bool lc = coin(rng), hc = coin(rng);
    const TimeInterval iv(lo, hi, lc, hc);
    std::vector<TimePoint> expected;
    for (TimePoint t = dom.first(); t <= dom.last(); ++t) {
      const bool above = lc ? t >= lo : t > lo;
      const bool below = hc ? t <= hi : t < hi;
      if (above && below) expected.push_back(t);
      EXPECT_EQ(iv.contains(t), above && below);
    }
    EXPECT_EQ(IntervalMembers(iv, dom), expected);
  }
}

TEST(PeriodicPredicateTest, Examples) {
  auto p = PeriodicPredicate(3, 1);
  EXPECT_TRUE(p(4));
  EXPECT_FALSE(p(5));
  EXPECT_TRUE(p(1));
  EXPECT_TRUE(p(-2));
  auto every = PeriodicPredicate(1, 0);
  for (TimePoint t = -5; t < 20; ++t) EXPECT_TRUE(every(t));
}

TEST(PeriodicPredicateTest, RejectsNonPositivePeriod) {
  EXPECT_THROW(PeriodicPredicate(0, 0), std::invalid_argument);
  EXPECT_THROW(PeriodicPredicate(-2, 0), std::invalid_argument);
}

TEST(FiniteDomainTest, IteratesEveryTickOnce) {
  const FiniteDomain dom(-2, 3);
  EXPECT_EQ(dom.ticks(), (std::vector<TimePoint>{-2, -1, 0, 1, 2, 3}));
  EXPECT_EQ(dom.size(), 6u);
  EXPECT_THROW(FiniteDomain(3, 2), std::invalid_argument);
}

TEST(BiTimeTest, LexicographicTotalOrder) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(0, 3);
  for (int i = 0; i < 2000; ++i) {
    BiTime a{d(rng), d(rng)}, b{d(rng), d(rng)}, c{d(rng), d(rng)};
    // Totality and antisymmetry.
    EXPECT_TRUE(a < b || b < a || a == b);
    if (a <= b && b <= a) {
      EXPECT_EQ(a, b);
    }
    // Transitivity.
    if (a <= b && b <= c) {
      EXPECT_LE(a, c);
    }
    // Lexicographic on (event, arrival).
    EXPECT_EQ(a < b, a.event < b.event || (a.event == b.event && a.arrival < b.arrival));
  }
}

TEST(BiTimeTest, ArrivalMayPrecedeEvent) {
  BiTime skewed{10, 8};
  EXPECT_LT(BiTime(9, 20), skewed);
}

TEST(BiDomainTest, IndexRoundTrip) {
  const BiDomain dom(FiniteDomain(0, 3), FiniteDomain(5, 7));
  ASSERT_EQ(dom.size(), 12u);
  auto ticks = dom.ticks();
  for (std::size_t i = 0; i < ticks.size(); ++i) {
    EXPECT_EQ(dom.index(ticks[i]), i);
    if (i) {
      EXPECT_LT(ticks[i - 1], ticks[i]);
    }
  }
}

}  // namespace
}  // namespace mstream
