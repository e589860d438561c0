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

// Operators that are not snapshot-reducible: they read more than one instant
// of their input to produce one instant of output.

#ifndef MSTREAM_WINDOWS_H_
#define MSTREAM_WINDOWS_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mstream/base.h"
#include "mstream/errors.h"
#include "mstream/stream.h"
#include "mstream/time.h"

namespace mstream {

namespace detail {

inline void RequirePositive(std::int64_t n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}

/// Combine of s over [lo, hi] clipped to the domain, ascending.
template <class C>
C CombineRange(const Stream<C>& s, TimePoint lo, TimePoint hi) {
  C acc = C::Empty();
  lo = std::max(lo, s.domain().first());
  hi = std::min(hi, s.domain().last());
  for (TimePoint t = lo; t <= hi; ++t) acc = Combine(acc, s.at(t));
  return acc;
}

}  // namespace detail

/// Time window with the smallest slide: at(t) combines s over (t - size; t].
template <class C>
Stream<C> WindowTime(std::int64_t size, const Stream<C>& s) {
  detail::RequirePositive(size, "window size");
  if constexpr (!C::kHasMonoid) {
    throw NoMonoidError("window_time");
  } else {
    return Stream<C>(s.domain(), [size, s](const TimePoint& t) {
      return detail::CombineRange(s, t - size + 1, t);
    });
  }
}

/// The Now window: per-instant identity.
template <class C>
Stream<C> NowWindow(const Stream<C>& s) {
  return WindowTime(1, s);
}

/// Sampling filter on time: s at ticks where p holds, empty elsewhere.
template <class C>
Stream<C> Slide(std::function<bool(TimePoint)> p, const Stream<C>& s) {
  if constexpr (!C::kHasMonoid) {
    throw NoMonoidError("slide");
  } else {
    return Stream<C>(s.domain(), [p = std::move(p), s](const TimePoint& t) {
      return p(t) ? s.at(t) : C::Empty();
    });
  }
}

template <class C>
Stream<C> SlidePeriodic(std::int64_t period, TimePoint anchor, const Stream<C>& s) {
  return Slide(PeriodicPredicate(period, anchor), s);
}

/// Time window that keeps each element's instant: at(t) combines
/// Map(x -> (t', x), s.at(t')) over t' in (t - size; t].
template <class C>
auto WindowTaa(std::int64_t size, const Stream<C>& s) {
  using X = typename C::value_type;
  using Out = Rebind<C, std::pair<TimePoint, X>>;
  detail::RequirePositive(size, "window size");
  if constexpr (!C::kHasMonoid) {
    throw NoMonoidError("window_taa");
    return Stream<Out>(s.domain(), nullptr);
  } else {
    return Stream<Out>(s.domain(), [size, s](const TimePoint& t) {
      Out acc = Out::Empty();
      const TimePoint lo = std::max(t - size + 1, s.domain().first());
      for (TimePoint u = lo; u <= t; ++u) {
        acc = Combine(acc, Map([u](const X& x) { return std::make_pair(u, x); }, s.at(u)));
      }
      return acc;
    });
  }
}

/// Row window over a stream without simultaneous elements: the payloads of
/// the latest min(n, available) present instants at or before t.
template <class X>
Stream<Bag<X>> WindowRow(std::int64_t n, const Stream<Maybe<X>>& s) {
  detail::RequirePositive(n, "row count");
  return Stream<Bag<X>>(s.domain(), [n, s](const TimePoint& t) {
    Bag<X> out;
    std::int64_t taken = 0;
    for (TimePoint u = t; u >= s.domain().first() && taken < n; --u) {
      const Maybe<X> m = s.at(u);
      if (m.has_value()) {
        out.Add(m.value());
        ++taken;
      }
    }
    return out;
  });
}

/// Generalized row window: the latest min(n, available) non-neutral
/// containers at or before t.
template <class C>
Stream<Bag<C>> WindowRowGen(std::int64_t n, const Stream<C>& s) {
  detail::RequirePositive(n, "row count");
  if constexpr (!C::kHasMonoid) {
    throw NoMonoidError("window_rowgen (no neutral element)");
  } else {
    return Stream<Bag<C>>(s.domain(), [n, s](const TimePoint& t) {
      Bag<C> out;
      std::int64_t taken = 0;
      for (TimePoint u = t; u >= s.domain().first() && taken < n; --u) {
        C c = s.at(u);
        if (!IsNeutral(c)) {
          out.Add(c);
          ++taken;
        }
      }
      return out;
    });
  }
}

/// Row slide: keeps every n-th non-empty instant, counting from the first
/// non-empty instant of the domain; empty elsewhere.
template <class C>
Stream<C> RowSlide(std::int64_t n, const Stream<C>& s) {
  detail::RequirePositive(n, "row slide");
  if constexpr (!C::kHasMonoid) {
    throw NoMonoidError("row_slide");
  } else {
    return Stream<C>(s.domain(), [n, s](const TimePoint& t) {
      C here = s.at(t);
      if (IsNeutral(here)) return here;
      std::int64_t rank = 0;
      for (TimePoint u = s.domain().first(); u <= t; ++u) {
        if (!IsNeutral(s.at(u))) ++rank;
      }
      return rank % n == 0 ? here : C::Empty();
    });
  }
}

/// Window towards the future: at(t) combines s over [t; t + size), clipped
/// to the domain.
template <class C>
Stream<C> WindowFuture(std::int64_t size, const Stream<C>& s) {
  detail::RequirePositive(size, "window size");
  if constexpr (!C::kHasMonoid) {
    throw NoMonoidError("window_future");
  } else {
    return Stream<C>(s.domain(), [size, s](const TimePoint& t) {
      return detail::CombineRange(s, t, t + size - 1);
    });
  }
}

// ---------------------------------------------------------------------------
// Resample.

using Samples = Bag<std::pair<TimePoint, double>>;
using Interpolator = std::function<std::optional<double>(const Samples&, TimePoint)>;

/// Linear interpolation between the nearest samples before and after the
/// target. Samples sharing an instant are averaged. A sample at the target is
/// returned unchanged; with samples on one side only the nearest one is used.
std::optional<double> LinearInterpolate(const Samples& samples, TimePoint target);

/// Interpolates s at every instant where ref is non-empty, using the samples
/// of s within (t - size; t + size).
template <class C>
Stream<Bag<double>> Resample(const Stream<C>& ref, std::int64_t size, Interpolator interp,
                             const Stream<Bag<double>>& s) {
  detail::RequirePositive(size, "resample scope");
  detail::RequireSameDomain(ref, s, "resample");
  if constexpr (!C::kHasMonoid) {
    throw NoMonoidError("resample reference");
  } else {
    return Stream<Bag<double>>(s.domain(), [ref, size, interp = std::move(interp), s](const TimePoint& t) {
      Bag<double> out;
      if (IsNeutral(ref.at(t))) return out;
      Samples window;
      const TimePoint lo = std::max(t - size + 1, s.domain().first());
      const TimePoint hi = std::min(t + size - 1, s.domain().last());
      for (TimePoint u = lo; u <= hi; ++u) {
        const Bag<double> here = s.at(u);
        for (const auto& [v, m] : here.entries()) window.Add({u, v}, m);
      }
      if (auto v = interp(window, t)) out.Add(*v);
      return out;
    });
  }
}

template <class C>
Stream<Bag<double>> Resample(const Stream<C>& ref, std::int64_t size, const Stream<Bag<double>>& s) {
  return Resample(ref, size, Interpolator(&LinearInterpolate), s);
}

// ---------------------------------------------------------------------------
// BSort over the arrival-ordered physical sequence.

template <class X>
struct Arrival {
  BiTime time;
  X payload;
  friend bool operator==(const Arrival&, const Arrival&) = default;
};

/// Reorders an arrival-ordered sequence through a buffer of slack + 1
/// elements that always emits its smallest event time (earliest arrival on
/// ties). Every element is emitted exactly once.
template <class X>
std::vector<Arrival<X>> BSort(std::size_t slack, const std::vector<Arrival<X>>& in) {
  std::vector<Arrival<X>> out;
  out.reserve(in.size());
  std::vector<Arrival<X>> buffer;
  auto emit_min = [&] {
    auto it = std::min_element(buffer.begin(), buffer.end(), [](const Arrival<X>& a, const Arrival<X>& b) {
      return a.time.event < b.time.event;
    });
    out.push_back(*it);
    buffer.erase(it);
  };
  for (const auto& e : in) {
    buffer.push_back(e);
    if (buffer.size() > slack) emit_min();
  }
  while (!buffer.empty()) emit_min();
  return out;
}

// ---------------------------------------------------------------------------
// Bitemporal late-element filter.

/// Keeps the content at (e, a) iff a - e <= limit.
template <class C>
Stream<C, BiTime> FilterLate(std::int64_t limit, const Stream<C, BiTime>& s) {
  if constexpr (!C::kHasMonoid) {
    throw NoMonoidError("filter_late");
  } else {
    return Stream<C, BiTime>(s.domain(), [limit, s](const BiTime& t) {
      return t.arrival - t.event <= limit ? s.at(t) : C::Empty();
    });
  }
}

/// Result visible up to an arrival horizon: at event time e, combines the
/// content of every (e, a) with a <= horizon, in arrival order.
template <class C>
Stream<C> ViewAtArrival(TimePoint horizon, const Stream<C, BiTime>& s) {
  if constexpr (!C::kHasMonoid) {
    throw NoMonoidError("arrival view");
  } else {
    const BiDomain& dom = s.domain();
    return Stream<C>(dom.events(), [horizon, s, dom](const TimePoint& e) {
      C acc = C::Empty();
      for (TimePoint a = dom.arrivals().first(); a <= std::min(horizon, dom.arrivals().last()); ++a) {
        acc = Combine(acc, s.at(BiTime{e, a}));
      }
      return acc;
    });
  }
}

}  // namespace mstream

#endif  // MSTREAM_WINDOWS_H_
