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

// Law-checking harness. Every check instantiates a law with all supplied
// sample values and functions and reports the first counterexample it finds.
// Failures are data, not exceptions.

#ifndef MSTREAM_LAWS_H_
#define MSTREAM_LAWS_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mstream/base.h"
#include "mstream/print.h"
#include "mstream/stream.h"
#include "mstream/time.h"

namespace mstream {

struct LawResult {
  std::string suite;
  std::string instance;
  std::string law;
  bool passed = true;
  std::size_t cases = 0;
  std::string counterexample;
};

using LawReport = std::vector<LawResult>;

nlohmann::json ToJson(const LawResult& r);
bool AllPassed(const LawReport& report);

/// Total function over the carrier {0, ..., n-1} given as a lookup table.
struct FnTable {
  std::vector<int> image;
  int operator()(int x) const { return image.at(static_cast<std::size_t>(x)); }
  friend std::ostream& operator<<(std::ostream& os, const FnTable& f) {
    os << "fn[";
    for (std::size_t i = 0; i < f.image.size(); ++i) os << (i ? " " : "") << i << "->" << f.image[i];
    return os << ']';
  }
};

/// All n^n functions from {0..n-1} to itself.
std::vector<FnTable> AllFunctions(int n);

/// Sample values for the three nesting levels used by the monad laws.
template <class M1, class M2, class M3>
struct MonadSamples {
  std::vector<int> xs;
  std::vector<M1> level1;
  std::vector<M2> level2;
  std::vector<M3> level3;
  std::vector<FnTable> fns;
};

namespace detail {

class LawTally {
 public:
  LawTally(std::string suite, std::string instance, std::string law)
      : result_{std::move(suite), std::move(instance), std::move(law), true, 0, {}} {}

  /// Records one case; the first failure's description is kept.
  template <class Describer>
  void Check(bool ok, Describer&& describe) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }
  LawResult Finish() { return std::move(result_); }

 private:
  LawResult result_;
};

}  // namespace detail

/// Checks the seven monad laws
///   (1) map id = id                  (2) map (g . f) = map g . map f
///   (3) map f . unit = unit . f      (4) map f . flatten = flatten . map (map f)
///   (5) flatten . unit = id          (6) flatten . map unit = id
///   (7) flatten . flatten = flatten . map flatten
/// for an instance providing templated Unit, Map and Flatten.
template <class Instance, class M1, class M2, class M3>
LawReport CheckMonadLaws(const Instance& m, std::string_view instance_name,
                         const MonadSamples<M1, M2, M3>& s) {
  const std::string suite = "monad";
  const std::string name(instance_name);
  LawReport report;
  auto id = [](int x) { return x; };

  {
    detail::LawTally tally(suite, name, "1_map_id");
    for (const M1& a : s.level1) {
      tally.Check(m.Map(id, a) == a, [&] { return "m=" + Describe(a); });
    }
    report.push_back(tally.Finish());
  }
  {
    detail::LawTally tally(suite, name, "2_map_compose");
    for (const FnTable& f : s.fns) {
      for (const FnTable& g : s.fns) {
        auto gf = [&](int x) { return g(f(x)); };
        for (const M1& a : s.level1) {
          tally.Check(m.Map(gf, a) == m.Map(g, m.Map(f, a)), [&] {
            return "f=" + Describe(f) + " g=" + Describe(g) + " m=" + Describe(a);
          });
        }
      }
    }
    report.push_back(tally.Finish());
  }
  {
    detail::LawTally tally(suite, name, "3_map_unit");
    for (const FnTable& f : s.fns) {
      for (int x : s.xs) {
        tally.Check(m.Map(f, m.Unit(x)) == m.Unit(f(x)),
                    [&] { return "f=" + Describe(f) + " x=" + std::to_string(x); });
      }
    }
    report.push_back(tally.Finish());
  }
  {
    detail::LawTally tally(suite, name, "4_map_flatten");
    for (const FnTable& f : s.fns) {
      auto map_f = [&](const M1& inner) { return m.Map(f, inner); };
      for (const M2& aa : s.level2) {
        tally.Check(m.Map(f, m.Flatten(aa)) == m.Flatten(m.Map(map_f, aa)),
                    [&] { return "f=" + Describe(f) + " mm=" + Describe(aa); });
      }
    }
    report.push_back(tally.Finish());
  }
  {
    detail::LawTally tally(suite, name, "5_flatten_unit");
    for (const M1& a : s.level1) {
      tally.Check(m.Flatten(m.Unit(a)) == a, [&] { return "m=" + Describe(a); });
    }
    report.push_back(tally.Finish());
  }
  {
    detail::LawTally tally(suite, name, "6_flatten_map_unit");
    auto unit = [&](int x) { return m.Unit(x); };
    for (const M1& a : s.level1) {
      tally.Check(m.Flatten(m.Map(unit, a)) == a, [&] { return "m=" + Describe(a); });
    }
    report.push_back(tally.Finish());
  }
  {
    detail::LawTally tally(suite, name, "7_flatten_flatten");
    auto flatten = [&](const M2& inner) { return m.Flatten(inner); };
    for (const M3& aaa : s.level3) {
      tally.Check(m.Flatten(m.Flatten(aaa)) == m.Flatten(m.Map(flatten, aaa)),
                  [&] { return "mmm=" + Describe(aaa); });
    }
    report.push_back(tally.Finish());
  }
  return report;
}

/// Identity, associativity of Combine/Empty over all supplied triples.
template <MonoidContainer C>
LawReport CheckMonoidLaws(std::string_view instance_name, const std::vector<C>& as,
                          const std::vector<C>& bs, const std::vector<C>& cs) {
  const std::string suite = "monoid";
  const std::string name(instance_name);
  detail::LawTally left(suite, name, "left_identity");
  detail::LawTally right(suite, name, "right_identity");
  detail::LawTally assoc(suite, name, "associativity");
  const C e = C::Empty();
  for (std::size_t i = 0; i < as.size(); ++i) {
    const C& a = as[i];
    const C& b = bs[i];
    const C& c = cs[i];
    left.Check(Combine(e, a) == a, [&] { return "a=" + Describe(a); });
    right.Check(Combine(a, e) == a, [&] { return "a=" + Describe(a); });
    assoc.Check(Combine(Combine(a, b), c) == Combine(a, Combine(b, c)),
                [&] { return "a=" + Describe(a) + " b=" + Describe(b) + " c=" + Describe(c); });
  }
  return {left.Finish(), right.Finish(), assoc.Finish()};
}

struct ReducibilityResult {
  bool passed = true;
  std::optional<TimePoint> first_failure;
};

/// Checks snapshot(op_s(inputs...))(t) == op_base(snapshot(inputs)(t)...)
/// for every t of dom.
template <class OpS, class OpB, class... Inputs>
ReducibilityResult CheckSnapshotReducible(const OpS& op_s, const OpB& op_base,
                                          const FiniteDomain& dom, const Inputs&... inputs) {
  const auto out = op_s(inputs...);
  for (TimePoint t : dom.ticks()) {
    if (!(out.at(t) == op_base(inputs.at(t)...))) return {false, t};
  }
  return {true, std::nullopt};
}

struct RightInverseResult {
  bool passed = true;
  std::optional<std::size_t> failing_function;
  std::optional<TimePoint> failing_tick;
};

/// Checks snapshot(reconstruct(f, dom), t) == f(t) for every supplied f and
/// every t of dom.
template <class Snapshot, class Reconstruct, class F>
RightInverseResult CheckRightInverse(const Snapshot& snapshot, const Reconstruct& reconstruct,
                                     const std::vector<F>& fns, const FiniteDomain& dom) {
  for (std::size_t i = 0; i < fns.size(); ++i) {
    const auto rep = reconstruct(fns[i], dom);
    for (TimePoint t : dom.ticks()) {
      if (!(snapshot(rep, t) == fns[i](t))) return {false, i, t};
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Instances.

/// Monad instance for a base container template.
template <template <class> class B>
struct BaseInstance {
  template <class X>
  B<X> Unit(const X& x) const {
    return B<X>::Unit(x);
  }
  template <class F, class X>
  auto Map(const F& f, const B<X>& c) const {
    return mstream::Map(f, c);
  }
  template <class X>
  B<X> Flatten(const B<B<X>>& cc) const {
    return mstream::Flatten(cc);
  }
};

/// Monad instance for streams over a base container template.
template <template <class> class B>
struct StreamInstance {
  FiniteDomain dom;

  template <class X>
  Stream<B<X>> Unit(const X& x) const {
    return UnitStream<B<X>>(x, dom);
  }
  template <class F, class C>
  auto Map(const F& f, const Stream<C>& s) const {
    return MapStream(f, s);
  }
  template <class CC>
  auto Flatten(const Stream<CC>& ss) const {
    return FlattenStream(ss);
  }
};

/// Every container of at most max_size elements drawn from elems: multisets
/// for Bag, subsets for Set, sequences for Seq, none/some for Maybe and the
/// singletons for Identity.
template <class C>
std::vector<C> EnumerateContainers(const std::vector<typename C::value_type>& elems, int max_size) {
  std::vector<C> out;
  if constexpr (!C::kHasMonoid) {
    for (const auto& x : elems) out.push_back(C::Unit(x));
  } else {
    const std::string_view kind = C::kName;
    const std::size_t limit = kind == "maybe" ? 1 : static_cast<std::size_t>(max_size);
    // Index sequences; non-decreasing (bag), strictly increasing (set, maybe)
    // or arbitrary (seq).
    std::vector<std::size_t> idx;
    std::function<void()> rec = [&] {
      C c = C::Empty();
      for (std::size_t i : idx) c = Combine(c, C::Unit(elems[i]));
      out.push_back(c);
      if (idx.size() == limit) return;
      std::size_t start = 0;
      if (!idx.empty() && kind != "seq") start = idx.back() + (kind == "bag" ? 0 : 1);
      for (std::size_t i = start; i < elems.size(); ++i) {
        idx.push_back(i);
        rec();
        idx.pop_back();
      }
    };
    rec();
  }
  return out;
}

/// Exhaustive samples for a base: carrier {0..carrier-1}, level-1 containers
/// of up to three elements, deeper levels of up to two.
template <template <class> class B>
MonadSamples<B<int>, B<B<int>>, B<B<B<int>>>> ExhaustiveBaseSamples(int carrier) {
  MonadSamples<B<int>, B<B<int>>, B<B<B<int>>>> s;
  for (int i = 0; i < carrier; ++i) s.xs.push_back(i);
  s.level1 = EnumerateContainers<B<int>>(s.xs, 3);
  const auto small = EnumerateContainers<B<int>>(s.xs, 2);
  s.level2 = EnumerateContainers<B<B<int>>>(small, 2);
  s.level3 = EnumerateContainers<B<B<B<int>>>>(s.level2, 2);
  s.fns = AllFunctions(carrier);
  return s;
}

}  // namespace mstream

#endif  // MSTREAM_LAWS_H_
