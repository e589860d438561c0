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

// Base containers: the per-instant collection a stream evaluates to.
//
// Every container C provides
//   C::value_type, C::rebind<Y>, C::kName, C::kHasMonoid,
//   C::Unit(x), Map(f, c), Flatten(cc), ForEach(c, fn(x, multiplicity)),
//   Cross(a, b), Size(c), operator==.
// Containers with kHasMonoid additionally provide
//   C::Empty(), Combine(a, b), IsNeutral(c), Filter(p, c).
//
// Only payload equality is required of X. Containers are small and searched
// linearly; no ordering or hashing of payloads is assumed.

#ifndef MSTREAM_BASE_H_
#define MSTREAM_BASE_H_

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "mstream/errors.h"
#include "mstream/print.h"

namespace mstream {

template <class C>
concept BaseContainer = requires(const C& c) {
  typename C::value_type;
  { C::kName } -> std::convertible_to<std::string_view>;
  { C::kHasMonoid } -> std::convertible_to<bool>;
  { c == c } -> std::convertible_to<bool>;
};

template <class C>
concept MonoidContainer = BaseContainer<C> && C::kHasMonoid;

template <class C, class Y>
using Rebind = typename C::template rebind<Y>;

template <class F, class X>
using MapResult = std::decay_t<std::invoke_result_t<const F&, const X&>>;

// ---------------------------------------------------------------------------
// Bag: multiset stored as (payload, multiplicity) entries.

template <class X>
class Bag {
 public:
  using value_type = X;
  template <class Y>
  using rebind = Bag<Y>;
  static constexpr std::string_view kName = "bag";
  static constexpr bool kHasMonoid = true;

  Bag() = default;
  Bag(std::initializer_list<X> xs) {
    for (const X& x : xs) Add(x);
  }

  static Bag Unit(X x) {
    Bag b;
    b.entries_.emplace_back(std::move(x), 1);
    return b;
  }
  static Bag Empty() { return Bag(); }

  /// Adds n copies of x (n == 0 is a no-op).
  void Add(const X& x, std::size_t n = 1) {
    if (n == 0) return;
    for (auto& [v, m] : entries_) {
      if (v == x) {
        m += n;
        return;
      }
    }
    entries_.emplace_back(x, n);
  }

  std::size_t Count(const X& x) const {
    for (const auto& [v, m] : entries_) {
      if (v == x) return m;
    }
    return 0;
  }

  /// Distinct payloads with their multiplicities, in first-insertion order.
  const std::vector<std::pair<X, std::size_t>>& entries() const { return entries_; }
  std::size_t distinct() const { return entries_.size(); }
  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& e : entries_) n += e.second;
    return n;
  }
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const Bag& a, const Bag& b) {
    if (a.entries_.size() != b.entries_.size()) return false;
    for (const auto& [v, m] : a.entries_) {
      if (b.Count(v) != m) return false;
    }
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const Bag& b) {
    os << "bag{";
    bool first = true;
    for (const auto& [v, m] : b.entries_) {
      if (!first) os << ", ";
      first = false;
      Print(os, v);
      if (m != 1) os << ':' << m;
    }
    return os << '}';
  }

 private:
  std::vector<std::pair<X, std::size_t>> entries_;
};

template <class X, class Fn>
void ForEach(const Bag<X>& b, Fn&& fn) {
  for (const auto& [v, m] : b.entries()) fn(v, m);
}

template <class F, class X>
Bag<MapResult<F, X>> Map(const F& f, const Bag<X>& b) {
  Bag<MapResult<F, X>> out;
  for (const auto& [v, m] : b.entries()) out.Add(f(v), m);
  return out;
}

template <class X>
Bag<X> Flatten(const Bag<Bag<X>>& bb) {
  Bag<X> out;
  for (const auto& [inner, n] : bb.entries()) {
    for (const auto& [v, m] : inner.entries()) out.Add(v, n * m);
  }
  return out;
}

template <class X>
Bag<X> Combine(const Bag<X>& a, const Bag<X>& b) {
  Bag<X> out = a;
  for (const auto& [v, m] : b.entries()) out.Add(v, m);
  return out;
}

template <class X>
bool IsNeutral(const Bag<X>& b) {
  return b.empty();
}

template <class P, class X>
Bag<X> Filter(const P& p, const Bag<X>& b) {
  Bag<X> out;
  for (const auto& [v, m] : b.entries()) {
    if (p(v)) out.Add(v, m);
  }
  return out;
}

template <class X, class Y>
Bag<std::pair<X, Y>> Cross(const Bag<X>& a, const Bag<Y>& b) {
  Bag<std::pair<X, Y>> out;
  for (const auto& [x, m] : a.entries()) {
    for (const auto& [y, n] : b.entries()) out.Add({x, y}, m * n);
  }
  return out;
}

template <class X>
std::size_t Size(const Bag<X>& b) {
  return b.size();
}

// ---------------------------------------------------------------------------
// SetC: duplicate-free collection.

template <class X>
class SetC {
 public:
  using value_type = X;
  template <class Y>
  using rebind = SetC<Y>;
  static constexpr std::string_view kName = "set";
  static constexpr bool kHasMonoid = true;

  SetC() = default;
  SetC(std::initializer_list<X> xs) {
    for (const X& x : xs) Insert(x);
  }

  static SetC Unit(X x) {
    SetC s;
    s.items_.push_back(std::move(x));
    return s;
  }
  static SetC Empty() { return SetC(); }

  void Insert(const X& x) {
    if (!Contains(x)) items_.push_back(x);
  }
  bool Contains(const X& x) const {
    return std::find(items_.begin(), items_.end(), x) != items_.end();
  }

  const std::vector<X>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  friend bool operator==(const SetC& a, const SetC& b) {
    if (a.items_.size() != b.items_.size()) return false;
    for (const X& x : a.items_) {
      if (!b.Contains(x)) return false;
    }
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const SetC& s) {
    os << "set{";
    for (std::size_t i = 0; i < s.items_.size(); ++i) {
      if (i) os << ", ";
      Print(os, s.items_[i]);
    }
    return os << '}';
  }

 private:
  std::vector<X> items_;
};

template <class X, class Fn>
void ForEach(const SetC<X>& s, Fn&& fn) {
  for (const X& v : s.items()) fn(v, std::size_t{1});
}

template <class F, class X>
SetC<MapResult<F, X>> Map(const F& f, const SetC<X>& s) {
  SetC<MapResult<F, X>> out;
  for (const X& v : s.items()) out.Insert(f(v));
  return out;
}

template <class X>
SetC<X> Flatten(const SetC<SetC<X>>& ss) {
  SetC<X> out;
  for (const auto& inner : ss.items()) {
    for (const X& v : inner.items()) out.Insert(v);
  }
  return out;
}

template <class X>
SetC<X> Combine(const SetC<X>& a, const SetC<X>& b) {
  SetC<X> out = a;
  for (const X& v : b.items()) out.Insert(v);
  return out;
}

template <class X>
bool IsNeutral(const SetC<X>& s) {
  return s.empty();
}

template <class P, class X>
SetC<X> Filter(const P& p, const SetC<X>& s) {
  SetC<X> out;
  for (const X& v : s.items()) {
    if (p(v)) out.Insert(v);
  }
  return out;
}

template <class X, class Y>
SetC<std::pair<X, Y>> Cross(const SetC<X>& a, const SetC<Y>& b) {
  SetC<std::pair<X, Y>> out;
  for (const X& x : a.items()) {
    for (const Y& y : b.items()) out.Insert({x, y});
  }
  return out;
}

template <class X>
std::size_t Size(const SetC<X>& s) {
  return s.size();
}

// ---------------------------------------------------------------------------
// Maybe: zero or one payload. Combine keeps the left operand when both are
// present.

template <class X>
class Maybe {
 public:
  using value_type = X;
  template <class Y>
  using rebind = Maybe<Y>;
  static constexpr std::string_view kName = "maybe";
  static constexpr bool kHasMonoid = true;

  Maybe() = default;
  explicit Maybe(X x) : value_(std::move(x)) {}

  static Maybe Unit(X x) { return Maybe(std::move(x)); }
  static Maybe Empty() { return Maybe(); }

  bool has_value() const { return value_.has_value(); }
  const X& value() const { return *value_; }
  const std::optional<X>& get() const { return value_; }

  friend bool operator==(const Maybe&, const Maybe&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Maybe& m) {
    if (!m.value_) return os << "none";
    os << "some(";
    Print(os, *m.value_);
    return os << ')';
  }

 private:
  std::optional<X> value_;
};

template <class X, class Fn>
void ForEach(const Maybe<X>& m, Fn&& fn) {
  if (m.has_value()) fn(m.value(), std::size_t{1});
}

template <class F, class X>
Maybe<MapResult<F, X>> Map(const F& f, const Maybe<X>& m) {
  if (!m.has_value()) return {};
  return Maybe<MapResult<F, X>>(f(m.value()));
}

template <class X>
Maybe<X> Flatten(const Maybe<Maybe<X>>& mm) {
  if (!mm.has_value()) return {};
  return mm.value();
}

template <class X>
Maybe<X> Combine(const Maybe<X>& a, const Maybe<X>& b) {
  return a.has_value() ? a : b;
}

template <class X>
bool IsNeutral(const Maybe<X>& m) {
  return !m.has_value();
}

template <class P, class X>
Maybe<X> Filter(const P& p, const Maybe<X>& m) {
  if (m.has_value() && p(m.value())) return m;
  return {};
}

template <class X, class Y>
Maybe<std::pair<X, Y>> Cross(const Maybe<X>& a, const Maybe<Y>& b) {
  if (!a.has_value() || !b.has_value()) return {};
  return Maybe<std::pair<X, Y>>({a.value(), b.value()});
}

template <class X>
std::size_t Size(const Maybe<X>& m) {
  return m.has_value() ? 1 : 0;
}

// ---------------------------------------------------------------------------
// Identity: exactly one payload. No monoid.

template <class X>
class Identity {
 public:
  using value_type = X;
  template <class Y>
  using rebind = Identity<Y>;
  static constexpr std::string_view kName = "identity";
  static constexpr bool kHasMonoid = false;

  explicit Identity(X x) : value_(std::move(x)) {}

  static Identity Unit(X x) { return Identity(std::move(x)); }

  const X& value() const { return value_; }

  friend bool operator==(const Identity&, const Identity&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Identity& i) {
    os << "id(";
    Print(os, i.value_);
    return os << ')';
  }

 private:
  X value_;
};

template <class X, class Fn>
void ForEach(const Identity<X>& i, Fn&& fn) {
  fn(i.value(), std::size_t{1});
}

template <class F, class X>
Identity<MapResult<F, X>> Map(const F& f, const Identity<X>& i) {
  return Identity<MapResult<F, X>>(f(i.value()));
}

template <class X>
Identity<X> Flatten(const Identity<Identity<X>>& ii) {
  return ii.value();
}

template <class X, class Y>
Identity<std::pair<X, Y>> Cross(const Identity<X>& a, const Identity<Y>& b) {
  return Identity<std::pair<X, Y>>({a.value(), b.value()});
}

template <class X>
std::size_t Size(const Identity<X>&) {
  return 1;
}

// ---------------------------------------------------------------------------
// Seq: ordered sequence; combine is concatenation.

template <class X>
class Seq {
 public:
  using value_type = X;
  template <class Y>
  using rebind = Seq<Y>;
  static constexpr std::string_view kName = "seq";
  static constexpr bool kHasMonoid = true;

  Seq() = default;
  Seq(std::initializer_list<X> xs) : items_(xs) {}
  explicit Seq(std::vector<X> xs) : items_(std::move(xs)) {}

  static Seq Unit(X x) { return Seq(std::vector<X>{std::move(x)}); }
  static Seq Empty() { return Seq(); }

  void Append(const X& x) { items_.push_back(x); }

  const std::vector<X>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  friend bool operator==(const Seq&, const Seq&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Seq& s) {
    os << '[';
    for (std::size_t i = 0; i < s.items_.size(); ++i) {
      if (i) os << ", ";
      Print(os, s.items_[i]);
    }
    return os << ']';
  }

 private:
  std::vector<X> items_;
};

template <class X, class Fn>
void ForEach(const Seq<X>& s, Fn&& fn) {
  for (const X& v : s.items()) fn(v, std::size_t{1});
}

template <class F, class X>
Seq<MapResult<F, X>> Map(const F& f, const Seq<X>& s) {
  Seq<MapResult<F, X>> out;
  for (const X& v : s.items()) out.Append(f(v));
  return out;
}

template <class X>
Seq<X> Flatten(const Seq<Seq<X>>& ss) {
  Seq<X> out;
  for (const auto& inner : ss.items()) {
    for (const X& v : inner.items()) out.Append(v);
  }
  return out;
}

template <class X>
Seq<X> Combine(const Seq<X>& a, const Seq<X>& b) {
  Seq<X> out = a;
  for (const X& v : b.items()) out.Append(v);
  return out;
}

template <class X>
bool IsNeutral(const Seq<X>& s) {
  return s.empty();
}

template <class P, class X>
Seq<X> Filter(const P& p, const Seq<X>& s) {
  Seq<X> out;
  for (const X& v : s.items()) {
    if (p(v)) out.Append(v);
  }
  return out;
}

template <class X, class Y>
Seq<std::pair<X, Y>> Cross(const Seq<X>& a, const Seq<Y>& b) {
  Seq<std::pair<X, Y>> out;
  for (const X& x : a.items()) {
    for (const Y& y : b.items()) out.Append({x, y});
  }
  return out;
}

template <class X>
std::size_t Size(const Seq<X>& s) {
  return s.size();
}

// ---------------------------------------------------------------------------
// Monoid access that reports a contract violation on Identity instead of
// failing to compile, so runtime-selected pipelines can reject it.

template <BaseContainer C>
C EmptyOf(const char* op) {
  if constexpr (C::kHasMonoid) {
    return C::Empty();
  } else {
    throw NoMonoidError(op);
  }
}

template <BaseContainer C>
void RequireMonoid(const char* op) {
  if constexpr (!C::kHasMonoid) throw NoMonoidError(op);
}

template <BaseContainer C>
C CombineOf(const C& a, const C& b, const char* op) {
  if constexpr (C::kHasMonoid) {
    return Combine(a, b);
  } else {
    throw NoMonoidError(op);
  }
}

template <BaseContainer C>
bool IsNeutralOf(const C& c, const char* op) {
  if constexpr (C::kHasMonoid) {
    return IsNeutral(c);
  } else {
    throw NoMonoidError(op);
  }
}

}  // namespace mstream

#endif  // MSTREAM_BASE_H_
