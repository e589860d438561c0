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

// Regular patterns over tagged event streams.
//
// The input is a stream without simultaneous elements (Maybe base), read as
// the time-ordered sequence of its present elements. A match is a contiguous
// run of that sequence accepted by the pattern (after dropping elements whose
// tag does not occur in the pattern, under the skip-irrelevant policy). Every
// parse of every run is emitted, at the instant of the run's last element.
// Star iterations consume at least one element, and matches that consume
// nothing are never emitted.
//
// Match values mirror the pattern:
//   Atom -> payload, Sequence -> pair, Alternation -> left/right,
//   Star -> ordered list, Optional -> present/absent.

#ifndef MSTREAM_PATTERNS_H_
#define MSTREAM_PATTERNS_H_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mstream/base.h"
#include "mstream/print.h"
#include "mstream/stream.h"
#include "mstream/time.h"

namespace mstream {

/// Payload labelled with a symbol from a finite alphabet.
template <class X>
struct Tagged {
  std::string tag;
  X payload;

  friend bool operator==(const Tagged&, const Tagged&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Tagged& t) {
    os << t.tag << ':';
    Print(os, t.payload);
    return os;
  }
};

class PatternSyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Pattern {
 public:
  enum class Kind { kAtom, kSequence, kAlternation, kStar, kOptional };

  static Pattern Atom(std::string tag);
  static Pattern Sequence(Pattern first, Pattern second);
  static Pattern Alternation(Pattern left, Pattern right);
  static Pattern Star(Pattern body);
  static Pattern Optional(Pattern body);

  /// Textual syntax: identifiers are tags, `.` sequence, `|` alternation,
  /// postfix `*` and `?`, parentheses for grouping. Precedence from tightest:
  /// postfix, sequence, alternation.
  static Pattern Parse(std::string_view text);

  Kind kind() const { return kind_; }
  const std::string& tag() const { return tag_; }
  /// First operand of Sequence/Alternation, body of Star/Optional.
  const Pattern& first() const { return *first_; }
  const Pattern& second() const { return *second_; }

  std::set<std::string> Alphabet() const;
  std::string ToString() const;

  friend bool operator==(const Pattern& a, const Pattern& b);
  friend std::ostream& operator<<(std::ostream& os, const Pattern& p) { return os << p.ToString(); }

 private:
  Pattern(Kind kind, std::string tag, std::shared_ptr<const Pattern> first,
          std::shared_ptr<const Pattern> second)
      : kind_(kind), tag_(std::move(tag)), first_(std::move(first)), second_(std::move(second)) {}

  Kind kind_;
  std::string tag_;
  std::shared_ptr<const Pattern> first_;
  std::shared_ptr<const Pattern> second_;
};

enum class MatchPolicy { kStrict, kSkipIrrelevant };

template <class X>
class MatchValue {
 public:
  enum class Kind { kAtom, kPair, kLeft, kRight, kList, kPresent, kAbsent };

  static MatchValue Atom(std::string tag, X payload, TimePoint t) {
    MatchValue v(Kind::kAtom);
    v.tag_ = std::move(tag);
    v.payload_ = std::move(payload);
    v.time_ = t;
    return v;
  }
  static MatchValue Pair(MatchValue a, MatchValue b) {
    MatchValue v(Kind::kPair);
    v.children_.push_back(std::move(a));
    v.children_.push_back(std::move(b));
    return v;
  }
  static MatchValue Left(MatchValue a) { return Wrap(Kind::kLeft, std::move(a)); }
  static MatchValue Right(MatchValue a) { return Wrap(Kind::kRight, std::move(a)); }
  static MatchValue Present(MatchValue a) { return Wrap(Kind::kPresent, std::move(a)); }
  static MatchValue Absent() { return MatchValue(Kind::kAbsent); }
  static MatchValue List(std::vector<MatchValue> items = {}) {
    MatchValue v(Kind::kList);
    v.children_ = std::move(items);
    return v;
  }

  Kind kind() const { return kind_; }
  const std::string& tag() const { return tag_; }
  const X& payload() const { return *payload_; }
  TimePoint time() const { return time_; }
  const std::vector<MatchValue>& children() const { return children_; }

  void Append(MatchValue item) { children_.push_back(std::move(item)); }

  /// Constituent atoms, left to right.
  std::vector<MatchValue> Atoms() const {
    std::vector<MatchValue> out;
    CollectAtoms(out);
    return out;
  }

  /// True iff the value's shape is the one the pattern dictates.
  bool ConformsTo(const Pattern& p) const {
    switch (p.kind()) {
      case Pattern::Kind::kAtom:
        return kind_ == Kind::kAtom && tag_ == p.tag();
      case Pattern::Kind::kSequence:
        return kind_ == Kind::kPair && children_[0].ConformsTo(p.first()) &&
               children_[1].ConformsTo(p.second());
      case Pattern::Kind::kAlternation:
        return (kind_ == Kind::kLeft && children_[0].ConformsTo(p.first())) ||
               (kind_ == Kind::kRight && children_[0].ConformsTo(p.second()));
      case Pattern::Kind::kStar:
        if (kind_ != Kind::kList) return false;
        for (const auto& c : children_) {
          if (!c.ConformsTo(p.first())) return false;
        }
        return true;
      case Pattern::Kind::kOptional:
        return kind_ == Kind::kAbsent || (kind_ == Kind::kPresent && children_[0].ConformsTo(p.first()));
    }
    return false;
  }

  friend bool operator==(const MatchValue&, const MatchValue&) = default;

  friend std::ostream& operator<<(std::ostream& os, const MatchValue& v) {
    switch (v.kind_) {
      case Kind::kAtom:
        os << v.tag_ << '@' << v.time_ << ':';
        Print(os, *v.payload_);
        return os;
      case Kind::kPair:
        return os << '(' << v.children_[0] << ", " << v.children_[1] << ')';
      case Kind::kLeft:
        return os << "left " << v.children_[0];
      case Kind::kRight:
        return os << "right " << v.children_[0];
      case Kind::kPresent:
        return os << "some " << v.children_[0];
      case Kind::kAbsent:
        return os << "none";
      case Kind::kList:
        os << '[';
        for (std::size_t i = 0; i < v.children_.size(); ++i) os << (i ? ", " : "") << v.children_[i];
        return os << ']';
    }
    return os;
  }

 private:
  explicit MatchValue(Kind k) : kind_(k) {}
  static MatchValue Wrap(Kind k, MatchValue a) {
    MatchValue v(k);
    v.children_.push_back(std::move(a));
    return v;
  }
  void CollectAtoms(std::vector<MatchValue>& out) const {
    if (kind_ == Kind::kAtom) {
      out.push_back(*this);
      return;
    }
    for (const auto& c : children_) c.CollectAtoms(out);
  }

  Kind kind_;
  std::string tag_;
  std::optional<X> payload_;
  TimePoint time_ = 0;
  std::vector<MatchValue> children_;
};

namespace detail {

/// One partial parse: a stack of pending work and a stack of built values.
template <class X>
struct ParseThread {
  enum class Op { kMatch, kBuildPair, kBuildLeft, kBuildRight, kBuildPresent, kStarLoop, kStarAppend };
  struct Frame {
    Op op;
    const Pattern* pattern;
    std::size_t mark;  // consumed count at the start of a star iteration
  };
  std::vector<Frame> frames;
  std::vector<MatchValue<X>> values;
  std::size_t consumed = 0;

  bool accepted() const { return frames.empty(); }
};

/// Expands a thread until every branch either waits on an atom or has
/// accepted. Branches that loop without consuming input are dropped.
template <class X>
void Expand(ParseThread<X> th, std::vector<ParseThread<X>>& out) {
  using Op = typename ParseThread<X>::Op;
  using MV = MatchValue<X>;
  while (!th.frames.empty()) {
    auto fr = th.frames.back();
    switch (fr.op) {
      case Op::kMatch: {
        const Pattern& p = *fr.pattern;
        switch (p.kind()) {
          case Pattern::Kind::kAtom:
            out.push_back(std::move(th));
            return;
          case Pattern::Kind::kSequence:
            th.frames.pop_back();
            th.frames.push_back({Op::kBuildPair, &p, 0});
            th.frames.push_back({Op::kMatch, &p.second(), 0});
            th.frames.push_back({Op::kMatch, &p.first(), 0});
            break;
          case Pattern::Kind::kAlternation: {
            th.frames.pop_back();
            ParseThread<X> right = th;
            right.frames.push_back({Op::kBuildRight, &p, 0});
            right.frames.push_back({Op::kMatch, &p.second(), 0});
            th.frames.push_back({Op::kBuildLeft, &p, 0});
            th.frames.push_back({Op::kMatch, &p.first(), 0});
            Expand(std::move(right), out);
            break;
          }
          case Pattern::Kind::kOptional: {
            th.frames.pop_back();
            ParseThread<X> absent = th;
            absent.values.push_back(MV::Absent());
            th.frames.push_back({Op::kBuildPresent, &p, 0});
            th.frames.push_back({Op::kMatch, &p.first(), 0});
            Expand(std::move(absent), out);
            break;
          }
          case Pattern::Kind::kStar:
            th.frames.pop_back();
            th.values.push_back(MV::List());
            th.frames.push_back({Op::kStarLoop, &p, 0});
            break;
        }
        break;
      }
      case Op::kStarLoop: {
        ParseThread<X> stop = th;
        stop.frames.pop_back();
        th.frames.push_back({Op::kStarAppend, fr.pattern, th.consumed});
        th.frames.push_back({Op::kMatch, &fr.pattern->first(), 0});
        Expand(std::move(stop), out);
        break;
      }
      case Op::kStarAppend: {
        if (th.consumed == fr.mark) return;  // empty iteration
        th.frames.pop_back();
        MV item = std::move(th.values.back());
        th.values.pop_back();
        th.values.back().Append(std::move(item));
        break;
      }
      case Op::kBuildPair: {
        th.frames.pop_back();
        MV b = std::move(th.values.back());
        th.values.pop_back();
        MV a = std::move(th.values.back());
        th.values.pop_back();
        th.values.push_back(MV::Pair(std::move(a), std::move(b)));
        break;
      }
      case Op::kBuildLeft:
      case Op::kBuildRight:
      case Op::kBuildPresent: {
        th.frames.pop_back();
        MV a = std::move(th.values.back());
        th.values.pop_back();
        th.values.push_back(fr.op == Op::kBuildLeft    ? MV::Left(std::move(a))
                            : fr.op == Op::kBuildRight ? MV::Right(std::move(a))
                                                       : MV::Present(std::move(a)));
        break;
      }
    }
  }
  out.push_back(std::move(th));
}

}  // namespace detail

/// Runs the pattern over the present elements of s in time order, in a single
/// scan, and returns the matches keyed by emission instant.
template <class X>
Stream<Bag<MatchValue<X>>> MatchPattern(const Pattern& p, MatchPolicy policy,
                                        const Stream<Maybe<Tagged<X>>>& s) {
  using Thread = detail::ParseThread<X>;
  const std::set<std::string> alphabet = p.Alphabet();
  if (alphabet.empty()) throw std::invalid_argument("pattern has an empty alphabet");
  // Keep the pattern alive for the frames' raw pointers.
  auto root = std::make_shared<const Pattern>(p);

  std::vector<Thread> fresh;
  {
    Thread start;
    start.frames.push_back({Thread::Op::kMatch, root.get(), 0});
    std::vector<Thread> expanded;
    detail::Expand(std::move(start), expanded);
    for (auto& th : expanded) {
      if (!th.accepted()) fresh.push_back(std::move(th));
    }
  }

  std::vector<std::pair<TimePoint, Bag<MatchValue<X>>>> rows;
  std::vector<Thread> active;
  for (TimePoint t : s.domain().ticks()) {
    const Maybe<Tagged<X>> here = s.at(t);
    if (!here.has_value()) continue;
    const Tagged<X>& el = here.value();
    if (policy == MatchPolicy::kSkipIrrelevant && !alphabet.count(el.tag)) continue;

    active.insert(active.end(), fresh.begin(), fresh.end());
    std::vector<Thread> next;
    Bag<MatchValue<X>> emitted;
    for (Thread& th : active) {
      if (th.frames.back().pattern->tag() != el.tag) continue;
      th.frames.pop_back();
      th.values.push_back(MatchValue<X>::Atom(el.tag, el.payload, t));
      ++th.consumed;
      std::vector<Thread> expanded;
      detail::Expand(std::move(th), expanded);
      for (Thread& e : expanded) {
        if (e.accepted()) {
          emitted.Add(e.values.back());
        } else {
          next.push_back(std::move(e));
        }
      }
    }
    active = std::move(next);
    if (!emitted.empty()) rows.emplace_back(t, std::move(emitted));
  }
  return Stream<Bag<MatchValue<X>>>::FromTable(s.domain(), rows);
}

/// n-fold sequence of a single tag, left-nested.
Pattern RepeatedAtom(const std::string& tag, std::size_t n);

/// Row window expressed as the pattern a.a...a (n times) under the
/// skip-irrelevant policy; each match is the ordered list of the last n
/// elements.
template <class X>
Stream<Bag<Seq<X>>> RowWindowViaPattern(std::int64_t n, const Stream<Maybe<X>>& s) {
  if (n < 1) throw std::invalid_argument("row count must be >= 1");
  const Pattern p = RepeatedAtom("a", static_cast<std::size_t>(n));
  auto tagged = MapStream([](const X& x) { return Tagged<X>{"a", x}; }, s);
  auto matches = MatchPattern(p, MatchPolicy::kSkipIrrelevant, tagged);
  return MapStream(
      [](const MatchValue<X>& m) {
        Seq<X> out;
        for (const auto& atom : m.Atoms()) out.Append(atom.payload());
        return out;
      },
      matches);
}

}  // namespace mstream

#endif  // MSTREAM_PATTERNS_H_
