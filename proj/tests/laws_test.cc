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

#include "mstream/laws.h"

#include <gtest/gtest.h>

#include <set>

#include "mstream/law_suites.h"
#include "mstream/windows.h"
#include "test_util.h"

namespace mstream {
namespace {

using testing::RandomStream;
using testing::Rng;

void ExpectAllPass(const LawReport& report) {
  for (const auto& r : report) {
    EXPECT_TRUE(r.passed) << r.suite << '/' << r.instance << '/' << r.law << ": " << r.counterexample;
    EXPECT_GT(r.cases, 0u) << r.instance << '/' << r.law;
  }
}

TEST(AllFunctionsTest, EnumeratesEveryTable) {
  const auto fns = AllFunctions(3);
  ASSERT_EQ(fns.size(), 27u);
  std::set<std::vector<int>> distinct;
  for (const auto& f : fns) distinct.insert(f.image);
  EXPECT_EQ(distinct.size(), 27u);
  EXPECT_EQ(AllFunctions(1).size(), 1u);
}

TEST(EnumerateContainersTest, Counts) {
  const std::vector<int> e = {0, 1, 2};
  EXPECT_EQ(EnumerateContainers<Bag<int>>(e, 2).size(), 1u + 3u + 6u);
  EXPECT_EQ(EnumerateContainers<SetC<int>>(e, 3).size(), 8u);
  EXPECT_EQ(EnumerateContainers<Seq<int>>(e, 2).size(), 1u + 3u + 9u);
  EXPECT_EQ(EnumerateContainers<Maybe<int>>(e, 3).size(), 4u);
  EXPECT_EQ(EnumerateContainers<Identity<int>>(e, 3).size(), 3u);
}

TEST(MonadLawsTest, EveryBasePassesExhaustively) {
  ExpectAllPass(CheckMonadLaws(BaseInstance<Bag>{}, "bag", ExhaustiveBaseSamples<Bag>(3)));
  ExpectAllPass(CheckMonadLaws(BaseInstance<SetC>{}, "set", ExhaustiveBaseSamples<SetC>(3)));
  ExpectAllPass(CheckMonadLaws(BaseInstance<Maybe>{}, "maybe", ExhaustiveBaseSamples<Maybe>(3)));
  ExpectAllPass(CheckMonadLaws(BaseInstance<Seq>{}, "seq", ExhaustiveBaseSamples<Seq>(3)));
  ExpectAllPass(CheckMonadLaws(BaseInstance<Identity>{}, "identity", ExhaustiveBaseSamples<Identity>(3)));
}

TEST(MonadLawsTest, ReportsSevenLaws) {
  const auto report = CheckMonadLaws(BaseInstance<Bag>{}, "bag", ExhaustiveBaseSamples<Bag>(2));
  ASSERT_EQ(report.size(), 7u);
  EXPECT_EQ(report.front().law, "1_map_id");
  EXPECT_EQ(report.back().law, "7_flatten_flatten");
}

TEST(MonadLawsTest, BagStreamsPass) {
  Rng rng(1);
  const FiniteDomain dom(0, 4);
  ExpectAllPass(CheckMonadLaws(StreamInstance<Bag>{dom}, "stream<bag>", RandomStreamSamples<Bag>(rng, dom, 20, 10, 5)));
}

struct DropOneFlatten : BaseInstance<Bag> {
  template <class X>
  Bag<X> Flatten(const Bag<Bag<X>>& cc) const {
    const Bag<X> full = mstream::Flatten(cc);
    Bag<X> out;
    bool dropped = false;
    for (const auto& [v, m] : full.entries()) {
      if (!dropped) {
        dropped = true;
        if (m > 1) out.Add(v, m - 1);
      } else {
        out.Add(v, m);
      }
    }
    return out;
  }
};

TEST(MonadLawsTest, BrokenFlattenFailsLawSix) {
  const auto report = CheckMonadLaws(DropOneFlatten{}, "broken", ExhaustiveBaseSamples<Bag>(3));
  ASSERT_EQ(report.size(), 7u);
  EXPECT_FALSE(report[5].passed);
  EXPECT_FALSE(report[5].counterexample.empty());
  EXPECT_TRUE(report[0].passed);
}

TEST(MutationSuiteTest, EveryBrokenInstanceIsCaught) {
  SuiteOptions o;
  o.stream_level1 = 10;
  o.stream_level2 = 5;
  o.stream_level3 = 3;
  o.instances = 20;
  ExpectAllPass(RunMutationSuite(o));
}

TEST(MonoidLawsTest, PassOnEnumeratedTriples) {
  const std::vector<int> e = {0, 1};
  const auto bags = EnumerateContainers<Bag<int>>(e, 2);
  std::vector<Bag<int>> as, bs, cs;
  for (const auto& a : bags) {
    for (const auto& b : bags) {
      for (const auto& c : bags) {
        as.push_back(a);
        bs.push_back(b);
        cs.push_back(c);
      }
    }
  }
  const auto report = CheckMonoidLaws("bag", as, bs, cs);
  ASSERT_EQ(report.size(), 3u);
  ExpectAllPass(report);
}

TEST(SnapshotReducibleTest, SelElemPassesWindowFails) {
  const FiniteDomain dom(0, 6);
  Rng rng(2);
  auto s = RandomStream<Bag<int>>(rng, dom, 3, 3, 0.9);
  auto even = [](int x) { return x % 2 == 0; };
  const auto sel = CheckSnapshotReducible([&](const Stream<Bag<int>>& x) { return SelElem(even, x); },
                                          [&](const Bag<int>& b) { return Filter(even, b); }, dom, s);
  EXPECT_TRUE(sel.passed);
  EXPECT_FALSE(sel.first_failure.has_value());

  auto id = [](const Bag<int>& b) { return b; };
  auto two = Stream<Bag<int>>::FromTable(dom, {{1, Bag<int>{1}}});
  const auto win = CheckSnapshotReducible([](const Stream<Bag<int>>& x) { return WindowTime(2, x); }, id, dom, two);
  EXPECT_FALSE(win.passed);
  EXPECT_EQ(win.first_failure, 2);

  const auto now = CheckSnapshotReducible([](const Stream<Bag<int>>& x) { return NowWindow(x); }, id, dom, s);
  EXPECT_TRUE(now.passed);
}

TEST(LawResultTest, JsonShape) {
  LawResult ok{"monad", "bag", "1_map_id", true, 12, {}};
  const auto j = ToJson(ok);
  EXPECT_EQ(j["suite"], "monad");
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["cases"], 12);
  EXPECT_FALSE(j.contains("counterexample"));
  LawResult bad{"monad", "bag", "1_map_id", false, 1, "m={0}"};
  EXPECT_EQ(ToJson(bad)["counterexample"], "m={0}");
  EXPECT_FALSE(AllPassed({ok, bad}));
  EXPECT_TRUE(AllPassed({ok}));
}

TEST(LawSuiteTest, UnknownNameRejected) {
  EXPECT_THROW(RunLawSuite("nope"), std::invalid_argument);
}

TEST(LawSuiteTest, SmallRunsPass) {
  SuiteOptions o;
  o.stream_level1 = 8;
  o.stream_level2 = 4;
  o.stream_level3 = 2;
  o.monoid_triples = 50;
  o.instances = 10;
  for (const auto& name : LawSuiteNames()) ExpectAllPass(RunLawSuite(name, o));
}

}  // namespace
}  // namespace mstream
