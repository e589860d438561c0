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

#include "mstream/stream.h"

#include <gtest/gtest.h>

#include <atomic>
#include <string>
#include <thread>
#include <vector>

#include "test_util.h"

namespace mstream {
namespace {

using testing::RandomStream;
using testing::Rng;

const FiniteDomain kDom(0, 5);

Stream<Bag<int>> Example() {
  Bag<int> five;
  five.Add(5, 2);
  return Stream<Bag<int>>::FromTable(kDom, {{1, Bag<int>{2}}, {3, five}});
}

TEST(MapStreamTest, PointwiseOracle) {
  auto times10 = [](int x) { return x * 10; };
  auto s = Example();
  auto got = MapStream(times10, s);
  // Oracle: apply f to every copy, tick by tick.
  for (TimePoint t : kDom.ticks()) {
    Bag<int> expected;
    const Bag<int> in = s.at(t);
    for (const auto& [v, m] : in.entries()) expected.Add(times10(v), m);
    EXPECT_EQ(got.at(t), expected) << "t=" << t;
  }
  EXPECT_EQ(got.at(1), Bag<int>{20});
  EXPECT_EQ(got.at(3), (Bag<int>{50, 50}));
  EXPECT_TRUE(got.at(0).empty());
}

TEST(MapStreamTest, IdentityAndEmpty) {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    auto s = RandomStream<Bag<int>>(rng, kDom);
    EXPECT_EQ(MapStream([](int x) { return x; }, s), s);
  }
  auto empty = Stream<Bag<int>>::Empty(kDom);
  EXPECT_EQ(MapStream([](int x) { return x + 1; }, empty), empty);
}

TEST(UnitStreamTest, ConstantAtEveryTick) {
  const FiniteDomain dom(0, 99);
  auto s = UnitStream<Bag<char>>('a', dom);
  EXPECT_EQ(s.at(0), Bag<char>{'a'});
  EXPECT_EQ(s.at(99), Bag<char>{'a'});
  for (TimePoint t : dom.ticks()) ASSERT_EQ(s.snapshot()(t), Bag<char>::Unit('a'));
}

TEST(FlattenStreamTest, EvaluatesInnerStreamsAtSameTick) {
  const FiniteDomain dom(0, 3);
  auto s1 = Stream<Bag<char>>::FromTable(dom, {{1, Bag<char>{'a'}}, {2, Bag<char>{'q'}}});
  auto s2 = Stream<Bag<char>>::FromTable(dom, {{1, Bag<char>{'b'}}});
  using Inner = Stream<Bag<char>>;
  auto outer = Stream<Bag<Inner>>::FromTable(dom, {{1, Bag<Inner>{s1, s2}}});
  auto got = FlattenStream(outer);
  EXPECT_EQ(got.at(1), (Bag<char>{'a', 'b'}));
  // s1 has content at 2 but the outer stream does not.
  EXPECT_TRUE(got.at(2).empty());
  EXPECT_TRUE(got.at(0).empty());
}

TEST(FlattenStreamTest, FlattenOfUnitIsIdentity) {
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    auto s = RandomStream<Bag<int>>(rng, kDom);
    EXPECT_EQ(FlattenStream(UnitStream<Bag<Stream<Bag<int>>>>(s, kDom)), s);
    EXPECT_EQ(FlattenStream(MapStream([](int x) { return UnitStream<Bag<int>>(x, kDom); }, s)), s);
  }
}

TEST(FlattenStreamTest, StreamOfEmptyStreams) {
  auto empty = Stream<Bag<int>>::Empty(kDom);
  auto outer = UnitStream<Bag<Stream<Bag<int>>>>(empty, kDom);
  EXPECT_EQ(FlattenStream(outer), empty);
}

TEST(MapSnapshotTest, ChangesBase) {
  auto s = Stream<Bag<char>>::FromTable(kDom, {{1, Bag<char>{'a', 'b'}}});
  auto counts = MapSnapshot([](const Bag<char>& b) { return Identity<std::size_t>(b.size()); }, s);
  for (TimePoint t : kDom.ticks()) {
    EXPECT_EQ(counts.at(t).value(), t == 1 ? 2u : 0u);
  }
  EXPECT_EQ(MapSnapshot([](const Bag<char>& b) { return b; }, s), s);
}

TEST(LayeringTest, MapStreamIsMapSnapshotOfBaseMap) {
  Rng rng(9);
  auto f = [](int x) { return (x * 2 + 1) % 3; };
  for (int i = 0; i < 30; ++i) {
    auto s = RandomStream<Bag<int>>(rng, kDom);
    EXPECT_EQ(MapStream(f, s), MapSnapshot([&](const Bag<int>& b) { return Map(f, b); }, s));
    auto seq = RandomStream<Seq<int>>(rng, kDom);
    EXPECT_EQ(MapStream(f, seq), MapSnapshot([&](const Seq<int>& b) { return Map(f, b); }, seq));
  }
  // unit_stream == unit_snapshot . base unit
  EXPECT_EQ(UnitStream<Maybe<int>>(4, kDom), UnitSnapshot(Maybe<int>::Unit(4), kDom));
}

TEST(SnapshotMonadTest, UnitAndFlatten) {
  auto c = Bag<char>{'a', 'b'};
  auto u = UnitSnapshot(c, kDom);
  for (TimePoint t : kDom.ticks()) EXPECT_EQ(u.at(t), c);

  Rng rng(1);
  auto s = RandomStream<Bag<int>>(rng, kDom);
  std::function<Stream<Bag<int>>(const TimePoint&)> constant = [s](const TimePoint&) { return s; };
  EXPECT_EQ(FlattenSnapshot(constant, kDom), s);

  // The diagonal: the family indexed by t is read at the same t.
  std::function<Stream<Bag<int>>(const TimePoint&)> family = [](const TimePoint& k) {
    return UnitStream<Bag<int>>(static_cast<int>(k) * 100, kDom);
  };
  auto diag = FlattenSnapshot(family, kDom);
  for (TimePoint t : kDom.ticks()) EXPECT_EQ(diag.at(t), Bag<int>{static_cast<int>(t) * 100});
}

TEST(SelElemTest, FiltersPayloads) {
  auto s = Stream<Bag<int>>::FromTable(kDom, {{1, Bag<int>{1, 3, 3}}});
  auto got = SelElem([](int x) { return x > 2; }, s);
  EXPECT_EQ(got.at(1), (Bag<int>{3, 3}));
  EXPECT_EQ(SelElem([](int) { return true; }, s), s);
  EXPECT_EQ(SelElem([](int) { return false; }, s), Stream<Bag<int>>::Empty(kDom));
}

TEST(SelElemTest, IdentityBaseRejected) {
  auto s = UnitStream<Identity<int>>(1, kDom);
  EXPECT_THROW(SelElem([](int) { return true; }, s), NoMonoidError);
  EXPECT_THROW(SelTime([](const Identity<int>&) { return true; }, s), NoMonoidError);
  EXPECT_THROW(UnionStreams(s, s), NoMonoidError);
  EXPECT_THROW(DisjointUnion(s, s), NoMonoidError);
  EXPECT_THROW(Stream<Identity<int>>::Empty(kDom), NoMonoidError);
}

TEST(SelTimeTest, KeepsWholeInstants) {
  auto s = Stream<Bag<char>>::FromTable(kDom, {{1, Bag<char>{'a'}}, {2, Bag<char>{'a', 'b'}}});
  auto got = SelTime([](const Bag<char>& b) { return b.size() >= 2; }, s);
  EXPECT_TRUE(got.at(1).empty());
  EXPECT_EQ(got.at(2), (Bag<char>{'a', 'b'}));
  EXPECT_EQ(SelTime([](const Bag<char>&) { return true; }, s), s);
  // A predicate false on empty() only affects unoccupied ticks, which stay empty.
  EXPECT_EQ(SelTime([](const Bag<char>& b) { return !b.empty(); }, s), s);
}

TEST(CrossTest, PairsPerInstant) {
  auto a = Stream<Bag<char>>::FromTable(kDom, {{1, Bag<char>{'a'}}});
  auto b = Stream<Bag<char>>::FromTable(kDom, {{1, Bag<char>{'x', 'y'}}, {2, Bag<char>{'z'}}});
  auto got = CrossStreams(a, b);
  using P = std::pair<char, char>;
  EXPECT_EQ(got.at(1), (Bag<P>{{'a', 'x'}, {'a', 'y'}}));
  EXPECT_TRUE(got.at(2).empty());
  EXPECT_EQ(CrossStreams(a, Stream<Bag<char>>::Empty(kDom)), Stream<Bag<P>>::Empty(kDom));
}

TEST(CrossTest, AudioMixOnIdentityStreams) {
  auto left = UnitStream<Identity<double>>(0.2, kDom);
  auto right = UnitStream<Identity<double>>(0.6, kDom);
  auto mixed = MapStream([](const std::pair<double, double>& p) { return (p.first + p.second) / 2; },
                         CrossStreams(left, right));
  for (TimePoint t : kDom.ticks()) EXPECT_DOUBLE_EQ(mixed.at(t).value(), 0.4);
}

TEST(CrossTest, RejectsMismatchedDomains) {
  auto a = UnitStream<Bag<int>>(1, FiniteDomain(0, 3));
  auto b = UnitStream<Bag<int>>(1, FiniteDomain(0, 4));
  EXPECT_THROW(CrossStreams(a, b), ContractViolation);
}

TEST(UnionTest, BagUnionIsAdditive) {
  auto a = Stream<Bag<char>>::FromTable(kDom, {{1, Bag<char>{'a'}}});
  EXPECT_EQ(UnionStreams(a, a).at(1), (Bag<char>{'a', 'a'}));
  EXPECT_EQ(UnionStreams(a, Stream<Bag<char>>::Empty(kDom)), a);
}

TEST(UnionTest, DisjointUnionTagsThenUnions) {
  auto a = Stream<Bag<char>>::FromTable(kDom, {{1, Bag<char>{'a'}}});
  auto x = Stream<Bag<std::string>>::FromTable(kDom, {{1, Bag<std::string>{"x"}}});
  auto got = DisjointUnion(a, x);
  using E = Either<char, std::string>;
  EXPECT_EQ(got.at(1), (Bag<E>{E::Left('a'), E::Right("x")}));
  // Same payload type on both sides stays distinguishable.
  auto same = DisjointUnion(a, a);
  using EE = Either<char, char>;
  EXPECT_EQ(same.at(1), (Bag<EE>{EE::Left('a'), EE::Right('a')}));
}

TEST(StreamTest, IdentityTableMustBeTotal) {
  EXPECT_THROW(Stream<Identity<int>>::FromTable(FiniteDomain(0, 2), {{0, Identity<int>(1)}}),
               ContractViolation);
  EXPECT_THROW(Stream<Bag<int>>::FromTable(FiniteDomain(0, 2), {{5, Bag<int>{1}}}), std::out_of_range);
}

TEST(StreamTest, TableRowsAtSameTickCombine) {
  auto s = Stream<Seq<int>>::FromTable(kDom, {{2, Seq<int>{1}}, {2, Seq<int>{2}}});
  EXPECT_EQ(s.at(2), (Seq<int>{1, 2}));
}

TEST(StreamTest, MemoizesPerTick) {
  std::atomic<int> calls{0};
  Stream<Bag<int>> s(kDom, [&calls](const TimePoint& t) {
    ++calls;
    return Bag<int>{static_cast<int>(t)};
  });
  for (int round = 0; round < 3; ++round) {
    for (TimePoint t : kDom.ticks()) s.at(t);
  }
  EXPECT_EQ(calls.load(), static_cast<int>(kDom.size()));
  EXPECT_THROW(s.at(99), std::out_of_range);
}

TEST(StreamTest, ConcurrentEvaluation) {
  const FiniteDomain dom(0, 200);
  Rng rng(2);
  auto base = RandomStream<Bag<int>>(rng, dom);
  auto composed = UnionStreams(MapStream([](int x) { return x + 1; }, base), base);
  std::vector<std::thread> workers;
  std::atomic<int> mismatches{0};
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&] {
      for (TimePoint t : dom.ticks()) {
        Bag<int> expected = Combine(Map([](int x) { return x + 1; }, base.at(t)), base.at(t));
        if (!(composed.at(t) == expected)) ++mismatches;
      }
    });
  }
  for (auto& th : workers) th.join();
  EXPECT_EQ(mismatches.load(), 0);
}

}  // namespace
}  // namespace mstream
