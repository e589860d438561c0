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

#include "mstream/patterns.h"

#include <gtest/gtest.h>

#include <functional>
#include <string>
#include <vector>

#include "mstream/sum.h"
#include "mstream/windows.h"
#include "test_util.h"

namespace mstream {
namespace {

using testing::RandomInt;
using testing::Rng;

using El = Tagged<int>;
using MV = MatchValue<int>;
using TaggedStream = Stream<Maybe<El>>;

TaggedStream Events(const FiniteDomain& dom, const std::vector<std::tuple<TimePoint, std::string, int>>& rows) {
  std::vector<std::pair<TimePoint, Maybe<El>>> table;
  for (const auto& [t, tag, v] : rows) table.emplace_back(t, Maybe<El>(El{tag, v}));
  return TaggedStream::FromTable(dom, table);
}

// Independent oracle: all parses of every contiguous segment, by recursion on
// the pattern.
struct Item {
  TimePoint t;
  El el;
};

std::vector<MV> Parses(const Pattern& p, const std::vector<Item>& seq, std::size_t lo, std::size_t hi) {
  std::vector<MV> out;
  switch (p.kind()) {
    case Pattern::Kind::kAtom:
      if (hi == lo + 1 && seq[lo].el.tag == p.tag()) out.push_back(MV::Atom(p.tag(), seq[lo].el.payload, seq[lo].t));
      break;
    case Pattern::Kind::kSequence:
      for (std::size_t k = lo; k <= hi; ++k) {
        for (const auto& a : Parses(p.first(), seq, lo, k)) {
          for (const auto& b : Parses(p.second(), seq, k, hi)) out.push_back(MV::Pair(a, b));
        }
      }
      break;
    case Pattern::Kind::kAlternation:
      for (const auto& a : Parses(p.first(), seq, lo, hi)) out.push_back(MV::Left(a));
      for (const auto& b : Parses(p.second(), seq, lo, hi)) out.push_back(MV::Right(b));
      break;
    case Pattern::Kind::kOptional:
      if (lo == hi) out.push_back(MV::Absent());
      for (const auto& a : Parses(p.first(), seq, lo, hi)) out.push_back(MV::Present(a));
      break;
    case Pattern::Kind::kStar:
      if (lo == hi) {
        out.push_back(MV::List());
        break;
      }
      for (std::size_t k = lo + 1; k <= hi; ++k) {
        for (const auto& head : Parses(p.first(), seq, lo, k)) {
          for (const auto& rest : Parses(p, seq, k, hi)) {
            std::vector<MV> items = {head};
            items.insert(items.end(), rest.children().begin(), rest.children().end());
            out.push_back(MV::List(items));
          }
        }
      }
      break;
  }
  return out;
}

Stream<Bag<MV>> Oracle(const Pattern& p, MatchPolicy policy, const TaggedStream& s) {
  const auto alphabet = p.Alphabet();
  std::vector<Item> seq;
  for (TimePoint t : s.domain().ticks()) {
    const auto m = s.at(t);
    if (!m.has_value()) continue;
    if (policy == MatchPolicy::kSkipIrrelevant && !alphabet.count(m.value().tag)) continue;
    seq.push_back({t, m.value()});
  }
  std::vector<std::pair<TimePoint, Bag<MV>>> rows;
  for (std::size_t j = 1; j <= seq.size(); ++j) {
    Bag<MV> here;
    for (std::size_t i = 0; i < j; ++i) {
      for (const auto& v : Parses(p, seq, i, j)) here.Add(v);
    }
    if (!here.empty()) rows.emplace_back(seq[j - 1].t, here);
  }
  return Stream<Bag<MV>>::FromTable(s.domain(), rows);
}

Pattern RandomPattern(Rng& rng, int depth) {
  static const char* kTags[] = {"a", "b", "c"};
  const int pick = depth == 0 ? 0 : RandomInt(rng, 0, 4);
  switch (pick) {
    case 1:
      return Pattern::Sequence(RandomPattern(rng, depth - 1), RandomPattern(rng, depth - 1));
    case 2:
      return Pattern::Alternation(RandomPattern(rng, depth - 1), RandomPattern(rng, depth - 1));
    case 3:
      return Pattern::Star(RandomPattern(rng, depth - 1));
    case 4:
      return Pattern::Optional(RandomPattern(rng, depth - 1));
    default:
      return Pattern::Atom(kTags[RandomInt(rng, 0, 2)]);
  }
}

TaggedStream RandomTagged(Rng& rng, const FiniteDomain& dom, std::vector<std::string> tags = {"a", "b", "c", "x"}) {
  std::vector<std::pair<TimePoint, Maybe<El>>> rows;
  for (TimePoint t : dom.ticks()) {
    if (RandomInt(rng, 0, 9) < 7) {
      rows.emplace_back(t, Maybe<El>(El{tags[RandomInt(rng, 0, static_cast<int>(tags.size()) - 1)], RandomInt(rng, 0, 9)}));
    }
  }
  return TaggedStream::FromTable(dom, rows);
}

TEST(PatternParseTest, Precedence) {
  const auto p = Pattern::Parse("a.b|c*");
  EXPECT_EQ(p, Pattern::Alternation(Pattern::Sequence(Pattern::Atom("a"), Pattern::Atom("b")),
                                    Pattern::Star(Pattern::Atom("c"))));
  EXPECT_EQ(Pattern::Parse(" ( a | b ) . c? "),
            Pattern::Sequence(Pattern::Alternation(Pattern::Atom("a"), Pattern::Atom("b")),
                              Pattern::Optional(Pattern::Atom("c"))));
  EXPECT_EQ(Pattern::Parse("a.b.c"), Pattern::Sequence(Pattern::Sequence(Pattern::Atom("a"), Pattern::Atom("b")),
                                                        Pattern::Atom("c")));
  EXPECT_EQ(Pattern::Parse("speed_up2"), Pattern::Atom("speed_up2"));
  EXPECT_EQ(Pattern::Parse("(a.b)*").ToString(), "(a.b)*");
}

TEST(PatternParseTest, RoundTripsThroughToString) {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const auto p = RandomPattern(rng, 3);
    EXPECT_EQ(Pattern::Parse(p.ToString()), p) << p;
  }
}

TEST(PatternParseTest, RejectsMalformed) {
  for (const char* bad : {"", "a..b", "(a", "a|", "*", "a b", "a)", "()"}) {
    EXPECT_THROW(Pattern::Parse(bad), PatternSyntaxError) << bad;
  }
}

TEST(PatternParseTest, Alphabet) {
  EXPECT_EQ(Pattern::Parse("a.(b|a)*").Alphabet(), (std::set<std::string>{"a", "b"}));
}

TEST(MatchPatternTest, SkipIrrelevantVersusStrict) {
  const FiniteDomain dom(0, 5);
  auto s = Events(dom, {{1, "a", 10}, {2, "x", 99}, {3, "b", 20}});
  const auto p = Pattern::Parse("a.b");
  auto skip = MatchPattern(p, MatchPolicy::kSkipIrrelevant, s);
  const MV expected = MV::Pair(MV::Atom("a", 10, 1), MV::Atom("b", 20, 3));
  EXPECT_EQ(skip, Stream<Bag<MV>>::FromTable(dom, {{3, Bag<MV>{expected}}}));
  auto strict = MatchPattern(p, MatchPolicy::kStrict, s);
  EXPECT_EQ(strict, Stream<Bag<MV>>::Empty(dom));
}

TEST(MatchPatternTest, AlternationTagsTheBranch) {
  const FiniteDomain dom(0, 3);
  auto got = MatchPattern(Pattern::Parse("a|b"), MatchPolicy::kSkipIrrelevant, Events(dom, {{1, "b", 7}}));
  EXPECT_EQ(got.at(1), Bag<MV>{MV::Right(MV::Atom("b", 7, 1))});
}

TEST(MatchPatternTest, LoneOptionalNeverMatchesNothing) {
  const FiniteDomain dom(0, 3);
  auto s = Events(dom, {{1, "x", 7}});
  for (auto policy : {MatchPolicy::kStrict, MatchPolicy::kSkipIrrelevant}) {
    EXPECT_EQ(MatchPattern(Pattern::Parse("a?"), policy, s), Stream<Bag<MV>>::Empty(dom));
    EXPECT_EQ(MatchPattern(Pattern::Parse("a*"), policy, s), Stream<Bag<MV>>::Empty(dom));
  }
}

TEST(MatchPatternTest, StarEnumeratesEveryLength) {
  const FiniteDomain dom(0, 4);
  auto s = Events(dom, {{1, "a", 1}, {2, "b", 2}, {3, "b", 3}});
  auto got = MatchPattern(Pattern::Parse("a.b*"), MatchPolicy::kSkipIrrelevant, s);
  const MV a = MV::Atom("a", 1, 1);
  const MV b2 = MV::Atom("b", 2, 2);
  const MV b3 = MV::Atom("b", 3, 3);
  EXPECT_EQ(got.at(1), Bag<MV>{MV::Pair(a, MV::List())});
  EXPECT_EQ(got.at(2), Bag<MV>{MV::Pair(a, MV::List({b2}))});
  EXPECT_EQ(got.at(3), Bag<MV>{MV::Pair(a, MV::List({b2, b3}))});

  // b* alone: every non-empty run ending at each b.
  auto runs = MatchPattern(Pattern::Parse("b*"), MatchPolicy::kSkipIrrelevant, s);
  EXPECT_EQ(runs.at(3), (Bag<MV>{MV::List({b3}), MV::List({b2, b3})}));
}

TEST(MatchPatternTest, AllParsesAreEmitted) {
  const FiniteDomain dom(0, 3);
  auto s = Events(dom, {{1, "a", 1}, {2, "a", 2}});
  // Run "a2": two splits. Run "a1 a2": three splits.
  auto got = MatchPattern(Pattern::Parse("a*.a*"), MatchPolicy::kSkipIrrelevant, s);
  EXPECT_EQ(got.at(2).size(), 5u);
  EXPECT_EQ(got, Oracle(Pattern::Parse("a*.a*"), MatchPolicy::kSkipIrrelevant, s));
}

TEST(MatchPatternTest, AgreesWithOracleOnRandomInputs) {
  const FiniteDomain dom(0, 7);
  Rng rng(15);
  for (int i = 0; i < 300; ++i) {
    const auto p = RandomPattern(rng, 3);
    const auto s = RandomTagged(rng, dom);
    for (auto policy : {MatchPolicy::kStrict, MatchPolicy::kSkipIrrelevant}) {
      ASSERT_EQ(MatchPattern(p, policy, s), Oracle(p, policy, s)) << "pattern " << p << " on " << s;
    }
  }
}

TEST(MatchPatternTest, ShapeAndTimingInvariants) {
  const FiniteDomain dom(0, 9);
  Rng rng(16);
  for (int i = 0; i < 200; ++i) {
    const auto p = RandomPattern(rng, 3);
    const auto got = MatchPattern(p, MatchPolicy::kSkipIrrelevant, RandomTagged(rng, dom));
    for (TimePoint t : dom.ticks()) {
      const auto here = got.at(t);
      for (const auto& [m, n] : here.entries()) {
        ASSERT_TRUE(m.ConformsTo(p)) << p << " vs " << m;
        const auto atoms = m.Atoms();
        ASSERT_FALSE(atoms.empty());
        EXPECT_EQ(atoms.back().time(), t);
        for (std::size_t k = 1; k < atoms.size(); ++k) ASSERT_LT(atoms[k - 1].time(), atoms[k].time());
      }
    }
  }
}

MV StripLeft(const MV& v) { return v.children().at(0); }

TEST(MatchPatternTest, UnusedAlternativeTagChangesNothing) {
  const FiniteDomain dom(0, 9);
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const auto p = RandomPattern(rng, 3);
    const auto widened = Pattern::Alternation(p, Pattern::Atom("zz"));
    const auto s = RandomTagged(rng, dom);
    const auto base = MatchPattern(p, MatchPolicy::kSkipIrrelevant, s);
    const auto wide = MatchPattern(widened, MatchPolicy::kSkipIrrelevant, s);
    EXPECT_EQ(MapStream(StripLeft, wide), base) << p;
  }
}

TEST(MatchPatternTest, DisjointUnionEqualsHandMergedStream) {
  const FiniteDomain dom(0, 9);
  Rng rng(18);
  const auto p = Pattern::Parse("a.b*.a?");
  for (int i = 0; i < 50; ++i) {
    // Non-overlapping single-tag streams.
    std::vector<std::pair<TimePoint, Maybe<int>>> left, right;
    std::vector<std::tuple<TimePoint, std::string, int>> merged;
    for (TimePoint t : dom.ticks()) {
      const int v = RandomInt(rng, 0, 9);
      switch (RandomInt(rng, 0, 2)) {
        case 0:
          left.emplace_back(t, Maybe<int>(v));
          merged.emplace_back(t, "a", v);
          break;
        case 1:
          right.emplace_back(t, Maybe<int>(v));
          merged.emplace_back(t, "b", v);
          break;
        default:
          break;
      }
    }
    auto sum = DisjointUnion(Stream<Maybe<int>>::FromTable(dom, left), Stream<Maybe<int>>::FromTable(dom, right));
    auto tagged = MapStream(
        [](const Either<int, int>& e) { return e.is_left() ? El{"a", e.left()} : El{"b", e.right()}; }, sum);
    EXPECT_EQ(MatchPattern(p, MatchPolicy::kSkipIrrelevant, tagged),
              MatchPattern(p, MatchPolicy::kSkipIrrelevant, Events(dom, merged)));
  }
}

TEST(RowWindowViaPatternTest, SlidingTriples) {
  const FiniteDomain dom(0, 5);
  auto s = Stream<Maybe<int>>::FromTable(
      dom, {{1, Maybe<int>(1)}, {2, Maybe<int>(2)}, {3, Maybe<int>(3)}, {4, Maybe<int>(4)}});
  auto got = RowWindowViaPattern(3, s);
  EXPECT_EQ(got, Stream<Bag<Seq<int>>>::FromTable(
                     dom, {{3, Bag<Seq<int>>{Seq<int>{1, 2, 3}}}, {4, Bag<Seq<int>>{Seq<int>{2, 3, 4}}}}));
  auto short_stream = Stream<Maybe<int>>::FromTable(dom, {{1, Maybe<int>(1)}, {2, Maybe<int>(2)}});
  EXPECT_EQ(RowWindowViaPattern(3, short_stream), Stream<Bag<Seq<int>>>::Empty(dom));
  EXPECT_THROW(RowWindowViaPattern(0, s), std::invalid_argument);
}

TEST(RowWindowViaPatternTest, MatchesRowWindowContents) {
  const FiniteDomain dom(0, 11);
  Rng rng(19);
  for (int i = 0; i < 50; ++i) {
    auto s = testing::RandomStream<Maybe<int>>(rng, dom, 4, 1, 0.6);
    auto via = RowWindowViaPattern(3, s);
    auto row = WindowRow(3, s);
    for (TimePoint t : dom.ticks()) {
      const auto matches = via.at(t);
      if (matches.empty()) continue;
      ASSERT_EQ(matches.size(), 1u);
      Bag<int> contents;
      for (int x : matches.entries().front().first.items()) contents.Add(x);
      EXPECT_EQ(contents, row.at(t)) << "t=" << t;
    }
  }
}

}  // namespace
}  // namespace mstream
