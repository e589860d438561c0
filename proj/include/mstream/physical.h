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

// Physical stream representations and the operators derived for them from a
// snapshot/reconstruct pair.
//
// A representation R is a policy type with
//   template <class X> using table = ...;
//   static Bag<X> Snapshot(const table<X>&, TimePoint);
//   static table<X> Reconstruct(const std::function<Bag<X>(TimePoint)>&, const FiniteDomain&);
// Reconstruct must be a right inverse of Snapshot on the domain. It need not
// be a left inverse: several tables may share one meaning.

#ifndef MSTREAM_PHYSICAL_H_
#define MSTREAM_PHYSICAL_H_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mstream/base.h"
#include "mstream/errors.h"
#include "mstream/laws.h"
#include "mstream/print.h"
#include "mstream/stream.h"
#include "mstream/time.h"

namespace mstream {

template <class X>
using SnapshotFn = std::function<Bag<X>(TimePoint)>;

// ---------------------------------------------------------------------------
// EventTable: triples (payload, multiplicity, t).

template <class X>
struct EventTriple {
  X payload;
  std::size_t multiplicity = 1;
  TimePoint t = 0;
};

template <class X>
class EventTable {
 public:
  EventTable() = default;

  /// Normalizes: drops zero multiplicities, merges triples sharing
  /// (payload, t), and orders by t keeping first-insertion order within a tick.
  explicit EventTable(const std::vector<EventTriple<X>>& triples) {
    for (const auto& tr : triples) Add(tr.payload, tr.multiplicity, tr.t);
  }

  void Add(const X& payload, std::size_t n, TimePoint t) {
    if (n == 0) return;
    auto first_after = std::upper_bound(triples_.begin(), triples_.end(), t,
                                        [](TimePoint v, const EventTriple<X>& e) { return v < e.t; });
    for (auto it = std::lower_bound(triples_.begin(), first_after, t,
                                    [](const EventTriple<X>& e, TimePoint v) { return e.t < v; });
         it != first_after; ++it) {
      if (it->payload == payload) {
        it->multiplicity += n;
        return;
      }
    }
    triples_.insert(first_after, EventTriple<X>{payload, n, t});
  }

  const std::vector<EventTriple<X>>& triples() const { return triples_; }
  bool empty() const { return triples_.empty(); }

  /// Bag of the triples stamped t.
  Bag<X> SnapshotAt(TimePoint t) const {
    Bag<X> out;
    for (const auto& tr : triples_) {
      if (tr.t == t) out.Add(tr.payload, tr.multiplicity);
    }
    return out;
  }

  /// Equal iff every instant has the same bag.
  friend bool operator==(const EventTable& a, const EventTable& b) {
    if (a.triples_.size() != b.triples_.size()) return false;
    for (const auto& tr : a.triples_) {
      if (!(a.SnapshotAt(tr.t) == b.SnapshotAt(tr.t))) return false;
    }
    for (const auto& tr : b.triples_) {
      if (!(a.SnapshotAt(tr.t) == b.SnapshotAt(tr.t))) return false;
    }
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const EventTable& et) {
    os << "events[";
    for (std::size_t i = 0; i < et.triples_.size(); ++i) {
      const auto& tr = et.triples_[i];
      if (i) os << ", ";
      os << '(';
      Print(os, tr.payload);
      os << ',' << tr.multiplicity << ',' << tr.t << ')';
    }
    return os << ']';
  }

 private:
  std::vector<EventTriple<X>> triples_;
};

template <class X>
Bag<X> SnapshotEvents(const EventTable<X>& et, TimePoint t) {
  return et.SnapshotAt(t);
}

/// Enumerates dom and records every non-empty instant as triples.
template <class X>
EventTable<X> ReconstructEvents(const SnapshotFn<X>& f, const FiniteDomain& dom) {
  EventTable<X> out;
  for (TimePoint t : dom.ticks()) {
    const Bag<X> b = f(t);
    for (const auto& [v, m] : b.entries()) out.Add(v, m, t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// IntervalTable: bag of (payload, validity interval).
//
// A tick's multiplicity for a payload is the number of pairs covering it. The
// normal form layers each payload's coverage count: level k holds the maximal
// runs where the count is at least k. Without overlaps this is plain
// coalescing of adjacent intervals.

template <class X>
class IntervalTable {
 public:
  IntervalTable() = default;
  IntervalTable(std::initializer_list<std::pair<X, TimeInterval>> pairs) {
    for (const auto& [x, iv] : pairs) Add(x, iv);
  }
  explicit IntervalTable(const std::vector<std::pair<X, TimeInterval>>& pairs) {
    for (const auto& [x, iv] : pairs) Add(x, iv);
  }

  void Add(const X& payload, const TimeInterval& iv) {
    if (!iv.empty()) pairs_.emplace_back(payload, iv);
  }

  const std::vector<std::pair<X, TimeInterval>>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }

  Bag<X> SnapshotAt(TimePoint t) const {
    Bag<X> out;
    for (const auto& [x, iv] : pairs_) {
      if (iv.contains(t)) out.Add(x);
    }
    return out;
  }

  IntervalTable Normalized() const {
    std::vector<X> payloads;
    for (const auto& [x, iv] : pairs_) {
      if (std::find(payloads.begin(), payloads.end(), x) == payloads.end()) payloads.push_back(x);
    }
    IntervalTable out;
    for (const X& x : payloads) {
      // Sweep over +1 at lo and -1 after hi.
      std::vector<std::pair<TimePoint, int>> edges;
      for (const auto& [y, iv] : pairs_) {
        if (!(y == x)) continue;
        edges.emplace_back(iv.lo(), +1);
        edges.emplace_back(iv.hi() + 1, -1);
      }
      std::sort(edges.begin(), edges.end());
      std::vector<TimePoint> open;  // open[k] = start of the run at level k+1
      int count = 0;
      std::size_t i = 0;
      while (i < edges.size()) {
        const TimePoint at = edges[i].first;
        int next = count;
        for (; i < edges.size() && edges[i].first == at; ++i) next += edges[i].second;
        while (static_cast<int>(open.size()) < next) open.push_back(at);
        while (static_cast<int>(open.size()) > next) {
          out.pairs_.emplace_back(x, TimeInterval::Closed(open.back(), at - 1));
          open.pop_back();
        }
        count = next;
      }
    }
    return out;
  }

  /// Equal iff the normal forms hold the same pairs (as multisets), i.e. iff
  /// the snapshots agree at every tick.
  friend bool operator==(const IntervalTable& a, const IntervalTable& b) {
    Bag<std::pair<X, TimeInterval>> na, nb;
    for (const auto& p : a.Normalized().pairs_) na.Add(p);
    for (const auto& p : b.Normalized().pairs_) nb.Add(p);
    return na == nb;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntervalTable& it) {
    os << "intervals{";
    for (std::size_t i = 0; i < it.pairs_.size(); ++i) {
      if (i) os << ", ";
      os << '(';
      Print(os, it.pairs_[i].first);
      os << ',' << it.pairs_[i].second << ')';
    }
    return os << '}';
  }

 private:
  std::vector<std::pair<X, TimeInterval>> pairs_;
};

template <class X>
Bag<X> SnapshotIntervals(const IntervalTable<X>& it, TimePoint t) {
  return it.SnapshotAt(t);
}

/// One maximal interval per contiguous run of presence per payload (layered
/// by multiplicity).
template <class X>
IntervalTable<X> ReconstructIntervals(const SnapshotFn<X>& f, const FiniteDomain& dom) {
  IntervalTable<X> raw;
  for (TimePoint t : dom.ticks()) {
    const Bag<X> b = f(t);
    for (const auto& [v, m] : b.entries()) {
      for (std::size_t k = 0; k < m; ++k) raw.Add(v, TimeInterval::Closed(t, t));
    }
  }
  return raw.Normalized();
}

// ---------------------------------------------------------------------------
// Representation policies.

struct EventRepresentation {
  static constexpr std::string_view kName = "event_table";
  template <class X>
  using table = EventTable<X>;

  template <class X>
  static Bag<X> Snapshot(const EventTable<X>& et, TimePoint t) {
    return SnapshotEvents(et, t);
  }
  template <class X>
  static EventTable<X> Reconstruct(const SnapshotFn<X>& f, const FiniteDomain& dom) {
    return ReconstructEvents(f, dom);
  }
};

struct IntervalRepresentation {
  static constexpr std::string_view kName = "interval_table";
  template <class X>
  using table = IntervalTable<X>;

  template <class X>
  static Bag<X> Snapshot(const IntervalTable<X>& it, TimePoint t) {
    return SnapshotIntervals(it, t);
  }
  template <class X>
  static IntervalTable<X> Reconstruct(const SnapshotFn<X>& f, const FiniteDomain& dom) {
    return ReconstructIntervals(f, dom);
  }
};

/// Monadic operators on a representation obtained by replacing function
/// application with Snapshot and wrapping results in Reconstruct:
///   map f      = s  -> reconstruct(t -> map_bag f (snapshot s t))
///   unit x     = reconstruct(t -> unit_bag x)
///   flatten ss = reconstruct(t -> flatten_bag (map_bag (s -> snapshot s t) (snapshot ss t)))
template <class R>
class DerivedMonad {
 public:
  template <class X>
  using table = typename R::template table<X>;

  explicit DerivedMonad(FiniteDomain dom) : dom_(dom) {}

  const FiniteDomain& domain() const { return dom_; }

  template <class F, class X>
  auto Map(const F& f, const table<X>& s) const {
    using Y = MapResult<F, X>;
    return R::template Reconstruct<Y>(
        [&](TimePoint t) { return mstream::Map(f, R::Snapshot(s, t)); }, dom_);
  }

  template <class X>
  table<X> Unit(const X& x) const {
    return R::template Reconstruct<X>([&](TimePoint) { return Bag<X>::Unit(x); }, dom_);
  }

  template <class X>
  table<X> Flatten(const table<table<X>>& ss) const {
    return R::template Reconstruct<X>(
        [&](TimePoint t) {
          return mstream::Flatten(
              mstream::Map([t](const table<X>& s) { return R::Snapshot(s, t); }, R::Snapshot(ss, t)));
        },
        dom_);
  }

  /// Reference-model view of a table.
  template <class X>
  Stream<Bag<X>> ToStream(const table<X>& s) const {
    return Stream<Bag<X>>(dom_, [s](const TimePoint& t) { return R::Snapshot(s, t); });
  }

  template <class X>
  table<X> FromStream(const Stream<Bag<X>>& s) const {
    return R::template Reconstruct<X>([&](TimePoint t) { return s.at(t); }, dom_);
  }

 private:
  FiniteDomain dom_;
};

/// Verifies Snapshot . Reconstruct = id on the probes over dom, then returns
/// the derived operators. Throws BrokenRepresentation with the failing tick.
template <class R, class X>
DerivedMonad<R> DeriveMonadic(const FiniteDomain& dom, const std::vector<SnapshotFn<X>>& probes) {
  const auto check = CheckRightInverse(
      [](const auto& rep, TimePoint t) { return R::Snapshot(rep, t); },
      [](const SnapshotFn<X>& f, const FiniteDomain& d) { return R::template Reconstruct<X>(f, d); },
      probes, dom);
  if (!check.passed) {
    throw BrokenRepresentation(std::string(R::kName) +
                               ": snapshot . reconstruct != id at t=" +
                               std::to_string(*check.failing_tick));
  }
  return DerivedMonad<R>(dom);
}

}  // namespace mstream

#endif  // MSTREAM_PHYSICAL_H_
