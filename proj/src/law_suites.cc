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

#include "mstream/law_suites.h"

#include <stdexcept>

#include "mstream/physical.h"
#include "mstream/sum.h"
#include "mstream/windows.h"

namespace mstream {
namespace {

using gen::RandomContainer;
using gen::RandomStream;
using gen::Rng;

void Append(LawReport& out, LawReport more) {
  for (auto& r : more) out.push_back(std::move(r));
}

FiniteDomain DomainOfOptions(const SuiteOptions& o) { return FiniteDomain(o.first, o.last); }

// ---------------------------------------------------------------------------
// Monad.

template <template <class> class B>
LawReport MonadFor(const std::string& name, const SuiteOptions& o, Rng& rng) {
  LawReport out = CheckMonadLaws(BaseInstance<B>{}, name, ExhaustiveBaseSamples<B>(3));
  const FiniteDomain dom = DomainOfOptions(o);
  Append(out, CheckMonadLaws(StreamInstance<B>{dom}, "stream<" + name + ">",
                             RandomStreamSamples<B>(rng, dom, o.stream_level1, o.stream_level2,
                                                    o.stream_level3)));
  return out;
}

// ---------------------------------------------------------------------------
// Monoid.

template <class C>
LawReport MonoidFor(const std::string& name, const SuiteOptions& o, Rng& rng) {
  std::vector<C> as, bs, cs;
  for (int i = 0; i < o.monoid_triples; ++i) {
    as.push_back(RandomContainer<C>(rng, 3, 3));
    bs.push_back(RandomContainer<C>(rng, 3, 3));
    cs.push_back(RandomContainer<C>(rng, 3, 3));
  }
  return CheckMonoidLaws(name, as, bs, cs);
}

// ---------------------------------------------------------------------------
// Snapshot-reducibility.

template <class Input>
void Record(detail::LawTally& tally, const ReducibilityResult& r, const Input& input) {
  tally.Check(r.passed, [&] { return "t=" + std::to_string(*r.first_failure) + " s=" + Describe(input); });
}

template <template <class> class B>
LawReport SnapshotFor(const std::string& name, const SuiteOptions& o, Rng& rng) {
  using C = B<int>;
  const FiniteDomain dom = DomainOfOptions(o);
  const auto fns = AllFunctions(3);
  const std::string suite = "snapshot";
  detail::LawTally map_t(suite, name, "map_stream");
  detail::LawTally cross_t(suite, name, "cross");
  detail::LawTally sel_elem_t(suite, name, "sel_elem");
  detail::LawTally sel_time_t(suite, name, "sel_time");
  detail::LawTally union_t(suite, name, "union_stream");
  detail::LawTally disjoint_t(suite, name, "disjoint_union");
  for (int i = 0; i < o.instances; ++i) {
    const auto a = RandomStream<C>(rng, dom);
    const auto b = RandomStream<C>(rng, dom);
    const FnTable& f = fns[static_cast<std::size_t>(i) % fns.size()];
    Record(map_t,
           CheckSnapshotReducible([&](const Stream<C>& s) { return MapStream(f, s); },
                                  [&](const C& c) { return Map(f, c); }, dom, a),
           a);
    Record(cross_t,
           CheckSnapshotReducible([](const Stream<C>& x, const Stream<C>& y) { return CrossStreams(x, y); },
                                  [](const C& x, const C& y) { return Cross(x, y); }, dom, a, b),
           a);
    if constexpr (C::kHasMonoid) {
      const int rejected = i % 3;
      auto p = [rejected](int x) { return x != rejected; };
      Record(sel_elem_t,
             CheckSnapshotReducible([&](const Stream<C>& s) { return SelElem(p, s); },
                                    [&](const C& c) { return Filter(p, c); }, dom, a),
             a);
      auto q = [](const C& c) { return Size(c) >= 2; };
      Record(sel_time_t,
             CheckSnapshotReducible([&](const Stream<C>& s) { return SelTime(q, s); },
                                    [&](const C& c) { return q(c) ? c : C::Empty(); }, dom, a),
             a);
      Record(union_t,
             CheckSnapshotReducible([](const Stream<C>& x, const Stream<C>& y) { return UnionStreams(x, y); },
                                    [](const C& x, const C& y) { return Combine(x, y); }, dom, a, b),
             a);
      using E = Either<int, int>;
      Record(disjoint_t,
             CheckSnapshotReducible(
                 [](const Stream<C>& x, const Stream<C>& y) { return DisjointUnion(x, y); },
                 [](const C& x, const C& y) {
                   return Combine(Map([](int v) { return E::Left(v); }, x),
                                  Map([](int v) { return E::Right(v); }, y));
                 },
                 dom, a, b),
             a);
    }
  }
  LawReport out = {map_t.Finish(), cross_t.Finish()};
  if constexpr (C::kHasMonoid) {
    for (auto* t : {&sel_elem_t, &sel_time_t, &union_t, &disjoint_t}) out.push_back(t->Finish());
  }
  return out;
}

/// The Now window reduces to the identity; wider windows must not.
LawReport WindowControls(const SuiteOptions& o, Rng& rng) {
  const FiniteDomain dom = DomainOfOptions(o);
  using C = Bag<int>;
  auto id = [](const C& c) { return c; };
  detail::LawTally now("snapshot", "bag", "now_window_reduces_to_identity");
  LawReport out;
  for (int i = 0; i < o.instances; ++i) {
    const auto s = RandomStream<C>(rng, dom);
    Record(now, CheckSnapshotReducible([](const Stream<C>& x) { return NowWindow(x); }, id, dom, s), s);
  }
  out.push_back(now.Finish());
  for (int size : {2, 3}) {
    LawResult r{"snapshot", "bag", "window_time_" + std::to_string(size) + "_not_reducible", false, 0, {}};
    for (int i = 0; i < o.instances; ++i) {
      const auto s = RandomStream<C>(rng, dom);
      ++r.cases;
      auto w = [size](const Stream<C>& x) { return WindowTime(size, x); };
      if (!CheckSnapshotReducible(w, id, dom, s).passed) r.passed = true;
    }
    if (!r.passed) r.counterexample = "window agreed with the per-instant identity on every instance";
    out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Representations.

template <class R>
LawReport RepresentationFor(const SuiteOptions& o, Rng& rng) {
  const std::string name(R::kName);
  const std::string suite = "inverse";
  const FiniteDomain dom = DomainOfOptions(o);
  DerivedMonad<R> m(dom);
  using Table = typename R::template table<int>;

  std::vector<SnapshotFn<int>> fns;
  for (int i = 0; i < o.instances; ++i) {
    const auto s = RandomStream<Bag<int>>(rng, dom);
    fns.push_back([s](TimePoint t) { return s.at(t); });
  }
  const auto inverse = CheckRightInverse(
      [](const Table& rep, TimePoint t) { return R::Snapshot(rep, t); },
      [](const SnapshotFn<int>& f, const FiniteDomain& d) { return R::template Reconstruct<int>(f, d); }, fns,
      dom);
  LawResult right{suite, name, "right_inverse", inverse.passed, fns.size(), {}};
  if (!inverse.passed) {
    right.counterexample = "function #" + std::to_string(*inverse.failing_function) +
                           " t=" + std::to_string(*inverse.failing_tick);
  }

  const auto all_fns = AllFunctions(3);
  detail::LawTally map_t(suite, name, "derived_map");
  detail::LawTally unit_t(suite, name, "derived_unit");
  detail::LawTally flatten_t(suite, name, "derived_flatten");
  for (int i = 0; i < o.instances; ++i) {
    const auto s = RandomStream<Bag<int>>(rng, dom);
    const FnTable& f = all_fns[static_cast<std::size_t>(i) % all_fns.size()];
    map_t.Check(m.ToStream(m.Map(f, m.FromStream(s))) == MapStream(f, s),
                [&] { return "f=" + Describe(f) + " s=" + Describe(s); });

    const int x = i % 3;
    unit_t.Check(m.ToStream(m.Unit(x)) == UnitStream<Bag<int>>(x, dom), [&] { return "x=" + std::to_string(x); });

    std::vector<Stream<Bag<int>>> inner;
    std::vector<Table> tables;
    for (int k = 0; k < 3; ++k) {
      inner.push_back(RandomStream<Bag<int>>(rng, dom));
      tables.push_back(m.FromStream(inner.back()));
    }
    const auto picks = RandomStream<Bag<int>>(rng, dom);
    const auto nested = MapStream([inner](int k) { return inner[static_cast<std::size_t>(k)]; }, picks);
    const auto nested_t = m.Map([&](int k) { return tables[static_cast<std::size_t>(k)]; }, m.FromStream(picks));
    flatten_t.Check(m.ToStream(m.Flatten(nested_t)) == FlattenStream(nested),
                    [&] { return "outer=" + Describe(picks); });
  }
  return {right, map_t.Finish(), unit_t.Finish(), flatten_t.Finish()};
}

LawResult SplitIntervalExample() {
  IntervalTable<char> whole{{'e', TimeInterval::RightOpen(1, 5)}};
  IntervalTable<char> split{{'e', TimeInterval::RightOpen(1, 3)}, {'e', TimeInterval::RightOpen(3, 5)}};
  detail::LawTally tally("inverse", "interval_table", "split_interval_same_snapshots");
  for (TimePoint t = -1; t <= 7; ++t) {
    tally.Check(SnapshotIntervals(whole, t) == SnapshotIntervals(split, t), [&] { return "t=" + std::to_string(t); });
  }
  return tally.Finish();
}

// ---------------------------------------------------------------------------
// Mutations.

struct DuplicatingUnit : BaseInstance<Bag> {
  template <class X>
  Bag<X> Unit(const X& x) const {
    return Bag<X>{x, x};
  }
};

struct DedupMap : BaseInstance<Bag> {
  template <class F, class X>
  auto Map(const F& f, const Bag<X>& c) const {
    Bag<MapResult<F, X>> out;
    for (const auto& [v, m] : c.entries()) {
      if (out.Count(f(v)) == 0) out.Add(f(v));
    }
    return out;
  }
};

struct DropOneFlatten : BaseInstance<Bag> {
  template <class X>
  Bag<X> Flatten(const Bag<Bag<X>>& cc) const {
    const Bag<X> full = mstream::Flatten(cc);
    Bag<X> out;
    bool dropped = false;
    for (const auto& [v, m] : full.entries()) {
      const std::size_t keep = dropped ? m : m - 1;
      dropped = true;
      if (keep > 0) out.Add(v, keep);
    }
    return out;
  }
};

/// Evaluates inner streams at the first tick instead of the current one.
struct StaleFlatten : StreamInstance<Bag> {
  template <class CC>
  auto Flatten(const Stream<CC>& ss) const {
    using Inner = typename CC::value_type;
    using C = typename Inner::container_type;
    const TimePoint first = dom.first();
    return Stream<C>(ss.domain(), [ss, first](const TimePoint& t) {
      return mstream::Flatten(mstream::Map([first](const Inner& s) { return s.at(first); }, ss.at(t)));
    });
  }
};

LawResult Caught(const std::string& instance, const LawReport& report) {
  LawResult r{"mutation", instance, "caught_by_monad_laws", false, report.size(), {}};
  std::string failed;
  for (const auto& l : report) {
    if (!l.passed) failed += (failed.empty() ? "" : ",") + l.law;
  }
  r.passed = !failed.empty();
  if (!r.passed) r.counterexample = "every law passed";
  return r;
}

}  // namespace

LawReport RunMonadSuite(const SuiteOptions& o) {
  Rng rng(o.seed);
  LawReport out;
  Append(out, MonadFor<Bag>("bag", o, rng));
  Append(out, MonadFor<SetC>("set", o, rng));
  Append(out, MonadFor<Maybe>("maybe", o, rng));
  Append(out, MonadFor<Seq>("seq", o, rng));
  Append(out, MonadFor<Identity>("identity", o, rng));
  return out;
}

LawReport RunMonoidSuite(const SuiteOptions& o) {
  Rng rng(o.seed + 1);
  LawReport out;
  Append(out, MonoidFor<Bag<int>>("bag", o, rng));
  Append(out, MonoidFor<SetC<int>>("set", o, rng));
  Append(out, MonoidFor<Maybe<int>>("maybe", o, rng));
  Append(out, MonoidFor<Seq<int>>("seq", o, rng));
  return out;
}

LawReport RunSnapshotSuite(const SuiteOptions& o) {
  Rng rng(o.seed + 2);
  LawReport out;
  Append(out, SnapshotFor<Bag>("bag", o, rng));
  Append(out, SnapshotFor<SetC>("set", o, rng));
  Append(out, SnapshotFor<Maybe>("maybe", o, rng));
  Append(out, SnapshotFor<Seq>("seq", o, rng));
  Append(out, SnapshotFor<Identity>("identity", o, rng));
  Append(out, WindowControls(o, rng));
  return out;
}

LawReport RunInverseSuite(const SuiteOptions& o) {
  Rng rng(o.seed + 3);
  LawReport out = RepresentationFor<EventRepresentation>(o, rng);
  Append(out, RepresentationFor<IntervalRepresentation>(o, rng));
  out.push_back(SplitIntervalExample());
  return out;
}

LawReport RunMutationSuite(const SuiteOptions& o) {
  Rng rng(o.seed + 4);
  const auto bag_samples = ExhaustiveBaseSamples<Bag>(3);
  LawReport out;
  out.push_back(Caught("bag_duplicating_unit", CheckMonadLaws(DuplicatingUnit{}, "bag_duplicating_unit", bag_samples)));
  out.push_back(Caught("bag_dedup_map", CheckMonadLaws(DedupMap{}, "bag_dedup_map", bag_samples)));
  out.push_back(Caught("bag_drop_one_flatten", CheckMonadLaws(DropOneFlatten{}, "bag_drop_one_flatten", bag_samples)));
  const FiniteDomain dom = DomainOfOptions(o);
  out.push_back(Caught("stream_stale_flatten",
                       CheckMonadLaws(StaleFlatten{{dom}}, "stream_stale_flatten",
                                      RandomStreamSamples<Bag>(rng, dom, o.stream_level1, o.stream_level2,
                                                               o.stream_level3))));

  // Reconstruct that forgets the last tick.
  std::vector<SnapshotFn<int>> fns;
  for (int i = 0; i < o.instances; ++i) {
    const auto s = RandomStream<Bag<int>>(rng, dom, 3, 3, 0.9);
    fns.push_back([s](TimePoint t) { return s.at(t); });
  }
  const auto r = CheckRightInverse(
      [](const EventTable<int>& et, TimePoint t) { return SnapshotEvents(et, t); },
      [](const SnapshotFn<int>& f, const FiniteDomain& d) {
        return d.size() == 1 ? EventTable<int>() : ReconstructEvents(f, FiniteDomain(d.first(), d.last() - 1));
      },
      fns, dom);
  LawResult inv{"mutation", "event_table_drop_last_tick", "caught_by_right_inverse", !r.passed, fns.size(), {}};
  if (r.passed) inv.counterexample = "right inverse held";
  out.push_back(inv);
  return out;
}

const std::vector<std::string>& LawSuiteNames() {
  static const std::vector<std::string> kNames = {"monad", "monoid", "snapshot", "inverse", "mutation"};
  return kNames;
}

LawReport RunLawSuite(std::string_view name, const SuiteOptions& o) {
  if (name == "monad") return RunMonadSuite(o);
  if (name == "monoid") return RunMonoidSuite(o);
  if (name == "snapshot") return RunSnapshotSuite(o);
  if (name == "inverse") return RunInverseSuite(o);
  if (name == "mutation") return RunMutationSuite(o);
  if (name == "all") {
    LawReport out;
    for (const auto& n : LawSuiteNames()) Append(out, RunLawSuite(n, o));
    return out;
  }
  throw std::invalid_argument("unknown law suite: " + std::string(name));
}

}  // namespace mstream
