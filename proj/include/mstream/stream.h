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

// The reference stream model: a stream is a total function from the ticks
// of a finite domain to a base container. Operators build new functions on
// top of their inputs; nothing is materialized until evaluated.

#ifndef MSTREAM_STREAM_H_
#define MSTREAM_STREAM_H_

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mstream/base.h"
#include "mstream/errors.h"
#include "mstream/sum.h"
#include "mstream/time.h"

namespace mstream {

template <BaseContainer C, class T = TimePoint>
class Stream {
 public:
  using container_type = C;
  using value_type = typename C::value_type;
  using time_type = T;
  using domain_type = DomainOf<T>;
  using EvalFn = std::function<C(const T&)>;

  /// Stream backed by an evaluation function. Results are memoized per tick;
  /// evaluation from several threads is safe.
  Stream(domain_type dom, EvalFn eval)
      : node_(std::make_shared<Node>(std::move(dom), std::move(eval))) {}

  /// Stream backed by a table. Ticks missing from the table evaluate to
  /// empty(); for bases without a monoid the table must cover the domain.
  /// Entries sharing a tick are combined in table order.
  static Stream FromTable(domain_type dom, const std::vector<std::pair<T, C>>& rows) {
    auto table = std::make_shared<std::map<T, C>>();
    for (const auto& [t, c] : rows) {
      if (!dom.contains(t)) {
        throw std::out_of_range("stream table entry outside of domain");
      }
      auto it = table->find(t);
      if (it == table->end()) {
        table->emplace(t, c);
      } else if constexpr (C::kHasMonoid) {
        it->second = Combine(it->second, c);
      } else {
        throw ContractViolation("identity stream table has two entries for one tick");
      }
    }
    if constexpr (!C::kHasMonoid) {
      if (table->size() != dom.size()) {
        throw ContractViolation("identity stream table must cover every tick of the domain");
      }
      return Stream(std::move(dom), [table](const T& t) { return table->at(t); });
    } else {
      return Stream(std::move(dom), [table](const T& t) {
        auto it = table->find(t);
        return it == table->end() ? C::Empty() : it->second;
      });
    }
  }

  /// Stream that is empty() everywhere.
  static Stream Empty(domain_type dom) {
    if constexpr (!C::kHasMonoid) {
      throw NoMonoidError("empty stream");
    } else {
      return Stream(std::move(dom), [](const T&) { return C::Empty(); });
    }
  }

  /// Evaluates the stream at t. Throws std::out_of_range outside the domain.
  C at(const T& t) const {
    const Node& n = *node_;
    if (!n.dom.contains(t)) {
      throw std::out_of_range("stream evaluated outside of its domain");
    }
    const std::size_t i = n.dom.index(t);
    {
      std::lock_guard<std::mutex> lock(n.mu);
      if (n.memo[i]) return *n.memo[i];
    }
    C value = n.eval(t);
    std::lock_guard<std::mutex> lock(n.mu);
    if (!n.memo[i]) n.memo[i].emplace(value);
    return value;
  }

  C operator()(const T& t) const { return at(t); }

  const domain_type& domain() const { return node_->dom; }

  /// The partially applied snapshot: t -> at(t).
  std::function<C(const T&)> snapshot() const {
    return [self = *this](const T& t) { return self.at(t); };
  }

  /// Extensional equality over the domain.
  friend bool operator==(const Stream& a, const Stream& b) {
    if (a.node_ == b.node_) return true;
    if (!(a.domain() == b.domain())) return false;
    for (const T& t : a.domain().ticks()) {
      if (!(a.at(t) == b.at(t))) return false;
    }
    return true;
  }

  friend std::ostream& operator<<(std::ostream& os, const Stream& s) {
    os << "stream" << s.domain() << '{';
    bool first = true;
    for (const T& t : s.domain().ticks()) {
      C c = s.at(t);
      if constexpr (C::kHasMonoid) {
        if (IsNeutral(c)) continue;
      }
      if (!first) os << ", ";
      first = false;
      os << t << "->";
      Print(os, c);
    }
    return os << '}';
  }

 private:
  struct Node {
    Node(domain_type d, EvalFn e) : dom(std::move(d)), eval(std::move(e)), memo(dom.size()) {}
    domain_type dom;
    EvalFn eval;
    mutable std::mutex mu;
    mutable std::vector<std::optional<C>> memo;
  };

  std::shared_ptr<const Node> node_;
};

namespace detail {

template <class S1, class S2>
void RequireSameDomain(const S1& a, const S2& b, const char* op) {
  if (!(a.domain() == b.domain())) {
    throw ContractViolation(std::string(op) + ": operands have different domains");
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Stream monad.

/// Constant stream holding unit(x) at every tick.
template <BaseContainer C, class T = TimePoint>
Stream<C, T> UnitStream(const typename C::value_type& x, DomainOf<T> dom) {
  return Stream<C, T>(std::move(dom), [x](const T&) { return C::Unit(x); });
}

/// Per-element map: at(t) = Map(f, s.at(t)).
template <class F, class C, class T>
auto MapStream(F f, const Stream<C, T>& s) {
  using Y = MapResult<F, typename C::value_type>;
  using Out = Stream<Rebind<C, Y>, T>;
  return Out(s.domain(), [f = std::move(f), s](const T& t) { return Map(f, s.at(t)); });
}

/// Evaluates the outer container at t, then every inner stream at the same t,
/// and flattens in the base.
template <class CC, class T>
auto FlattenStream(const Stream<CC, T>& ss) {
  using Inner = typename CC::value_type;
  using C = typename Inner::container_type;
  return Stream<C, T>(ss.domain(), [ss](const T& t) {
    return Flatten(Map([&t](const Inner& inner) { return inner.at(t); }, ss.at(t)));
  });
}

// ---------------------------------------------------------------------------
// Snapshot monad: per-instant functions over whole containers.

/// at(t) = g(s.at(t)); g may change the base.
template <class G, class C, class T>
auto MapSnapshot(G g, const Stream<C, T>& s) {
  using Out = std::decay_t<std::invoke_result_t<const G&, const C&>>;
  return Stream<Out, T>(s.domain(), [g = std::move(g), s](const T& t) { return g(s.at(t)); });
}

/// Constant stream of a whole container (static relations lifted to streams).
template <BaseContainer C, class T = TimePoint>
Stream<C, T> UnitSnapshot(C c, DomainOf<T> dom) {
  return Stream<C, T>(std::move(dom), [c = std::move(c)](const T&) { return c; });
}

/// Applies the same t to both layers of a time-indexed family of streams.
template <BaseContainer C, class T = TimePoint>
Stream<C, T> FlattenSnapshot(std::function<Stream<C, T>(const T&)> nested, DomainOf<T> dom) {
  return Stream<C, T>(std::move(dom), [nested = std::move(nested)](const T& t) {
    return nested(t).at(t);
  });
}

// ---------------------------------------------------------------------------
// Snapshot-reducible operators.

/// Keeps the payloads satisfying p at every tick.
template <class P, class C, class T>
Stream<C, T> SelElem(P p, const Stream<C, T>& s) {
  if constexpr (!C::kHasMonoid) {
    throw NoMonoidError("sel_elem");
  } else {
    return Stream<C, T>(s.domain(), [p = std::move(p), s](const T& t) { return Filter(p, s.at(t)); });
  }
}

/// Keeps whole instants whose container satisfies q.
template <class Q, class C, class T>
Stream<C, T> SelTime(Q q, const Stream<C, T>& s) {
  if constexpr (!C::kHasMonoid) {
    throw NoMonoidError("sel_time");
  } else {
    return Stream<C, T>(s.domain(), [q = std::move(q), s](const T& t) {
      C c = s.at(t);
      return q(c) ? c : C::Empty();
    });
  }
}

/// Per-instant cross product.
template <class C1, class C2, class T>
auto CrossStreams(const Stream<C1, T>& a, const Stream<C2, T>& b) {
  detail::RequireSameDomain(a, b, "cross");
  using Out = decltype(Cross(std::declval<C1>(), std::declval<C2>()));
  return Stream<Out, T>(a.domain(), [a, b](const T& t) { return Cross(a.at(t), b.at(t)); });
}

/// Per-instant combine.
template <class C, class T>
Stream<C, T> UnionStreams(const Stream<C, T>& a, const Stream<C, T>& b) {
  if constexpr (!C::kHasMonoid) {
    throw NoMonoidError("union");
  } else {
    detail::RequireSameDomain(a, b, "union");
    return Stream<C, T>(a.domain(), [a, b](const T& t) { return Combine(a.at(t), b.at(t)); });
  }
}

/// Tags left payloads Left and right payloads Right, then unions.
template <class C1, class C2, class T>
auto DisjointUnion(const Stream<C1, T>& a, const Stream<C2, T>& b) {
  using L = typename C1::value_type;
  using R = typename C2::value_type;
  using E = Either<L, R>;
  RequireMonoid<C1>("disjoint_union");
  detail::RequireSameDomain(a, b, "disjoint_union");
  return UnionStreams(MapStream([](const L& l) { return E::Left(l); }, a),
                      MapStream([](const R& r) { return E::Right(r); }, b));
}

}  // namespace mstream

#endif  // MSTREAM_STREAM_H_
