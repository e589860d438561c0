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

#ifndef MSTREAM_TIME_H_
#define MSTREAM_TIME_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace mstream {

/// Discrete instant measured in abstract ticks. The smallest time
/// difference between two instants is one tick.
using TimePoint = std::int64_t;

inline constexpr TimePoint kEpsilon = 1;

/// Interval over ticks. Open bounds are accepted at construction and
/// normalized to closed integer bounds; every empty interval compares equal.
class TimeInterval {
 public:
  static TimeInterval Closed(TimePoint lo, TimePoint hi) {
    return TimeInterval(lo, hi, true, true);
  }
  /// (lo; hi]
  static TimeInterval LeftOpen(TimePoint lo, TimePoint hi) {
    return TimeInterval(lo, hi, false, true);
  }
  /// [lo; hi)
  static TimeInterval RightOpen(TimePoint lo, TimePoint hi) {
    return TimeInterval(lo, hi, true, false);
  }
  static TimeInterval Open(TimePoint lo, TimePoint hi) {
    return TimeInterval(lo, hi, false, false);
  }
  static TimeInterval Empty() { return TimeInterval(); }

  TimeInterval(TimePoint lo, TimePoint hi, bool lo_closed, bool hi_closed) {
    const TimePoint a = lo_closed ? lo : lo + 1;
    const TimePoint b = hi_closed ? hi : hi - 1;
    if (a <= b) bounds_ = Bounds{a, b};
  }

  bool empty() const { return !bounds_.has_value(); }
  /// First member; only meaningful when !empty().
  TimePoint lo() const { return bounds_ ? bounds_->lo : 0; }
  /// Last member; only meaningful when !empty().
  TimePoint hi() const { return bounds_ ? bounds_->hi : -1; }
  std::int64_t length() const { return bounds_ ? bounds_->hi - bounds_->lo + 1 : 0; }

  bool contains(TimePoint t) const {
    return bounds_ && bounds_->lo <= t && t <= bounds_->hi;
  }

  friend bool operator==(const TimeInterval&, const TimeInterval&) = default;

  friend std::ostream& operator<<(std::ostream& os, const TimeInterval& iv) {
    if (iv.empty()) return os << "[]";
    return os << '[' << iv.lo() << ';' << iv.hi() << ']';
  }

 private:
  struct Bounds {
    TimePoint lo;
    TimePoint hi;
    friend bool operator==(const Bounds&, const Bounds&) = default;
  };

  TimeInterval() = default;

  std::optional<Bounds> bounds_;
};

/// Event time paired with arrival time. Ordered lexicographically; arrival
/// may precede event (clock skew is not rejected).
struct BiTime {
  TimePoint event = 0;
  TimePoint arrival = 0;

  friend auto operator<=>(const BiTime&, const BiTime&) = default;

  friend std::ostream& operator<<(std::ostream& os, const BiTime& t) {
    return os << '(' << t.event << ',' << t.arrival << ')';
  }
};

/// Finite, inclusive range of ticks that streams are evaluated over.
class FiniteDomain {
 public:
  using time_type = TimePoint;

  FiniteDomain(TimePoint first, TimePoint last) : first_(first), last_(last) {
    if (first > last) {
      throw std::invalid_argument("FiniteDomain requires first <= last");
    }
  }

  TimePoint first() const { return first_; }
  TimePoint last() const { return last_; }
  std::size_t size() const { return static_cast<std::size_t>(last_ - first_ + 1); }

  bool contains(TimePoint t) const { return first_ <= t && t <= last_; }
  std::size_t index(TimePoint t) const { return static_cast<std::size_t>(t - first_); }
  TimePoint at(std::size_t i) const { return first_ + static_cast<TimePoint>(i); }

  std::vector<TimePoint> ticks() const {
    std::vector<TimePoint> out;
    out.reserve(size());
    for (TimePoint t = first_; t <= last_; ++t) out.push_back(t);
    return out;
  }

  friend bool operator==(const FiniteDomain&, const FiniteDomain&) = default;

  friend std::ostream& operator<<(std::ostream& os, const FiniteDomain& d) {
    return os << '[' << d.first_ << ',' << d.last_ << ']';
  }

 private:
  TimePoint first_;
  TimePoint last_;
};

/// Product domain for bitemporal streams: every (event, arrival) pair with
/// both components inside their ranges.
class BiDomain {
 public:
  using time_type = BiTime;

  BiDomain(FiniteDomain events, FiniteDomain arrivals)
      : events_(events), arrivals_(arrivals) {}

  const FiniteDomain& events() const { return events_; }
  const FiniteDomain& arrivals() const { return arrivals_; }
  std::size_t size() const { return events_.size() * arrivals_.size(); }

  bool contains(const BiTime& t) const {
    return events_.contains(t.event) && arrivals_.contains(t.arrival);
  }
  std::size_t index(const BiTime& t) const {
    return events_.index(t.event) * arrivals_.size() + arrivals_.index(t.arrival);
  }
  BiTime at(std::size_t i) const {
    return BiTime{events_.at(i / arrivals_.size()), arrivals_.at(i % arrivals_.size())};
  }

  /// Lexicographic order, matching BiTime's ordering.
  std::vector<BiTime> ticks() const {
    std::vector<BiTime> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i));
    return out;
  }

  friend bool operator==(const BiDomain&, const BiDomain&) = default;

  friend std::ostream& operator<<(std::ostream& os, const BiDomain& d) {
    return os << d.events_ << 'x' << d.arrivals_;
  }

 private:
  FiniteDomain events_;
  FiniteDomain arrivals_;
};

template <class T>
struct DomainFor;
template <>
struct DomainFor<TimePoint> {
  using type = FiniteDomain;
};
template <>
struct DomainFor<BiTime> {
  using type = BiDomain;
};
template <class T>
using DomainOf = typename DomainFor<T>::type;

/// All ticks of `dom` that lie in `iv`, ascending.
std::vector<TimePoint> IntervalMembers(const TimeInterval& iv, const FiniteDomain& dom);

/// Predicate holding exactly on ticks t with (t - anchor) mod period == 0.
/// Throws std::invalid_argument for period < 1.
std::function<bool(TimePoint)> PeriodicPredicate(std::int64_t period, TimePoint anchor);

}  // namespace mstream

#endif  // MSTREAM_TIME_H_
