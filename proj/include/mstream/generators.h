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

// Seeded random generators for containers and table-backed streams.

#ifndef MSTREAM_GENERATORS_H_
#define MSTREAM_GENERATORS_H_

#include <random>
#include <utility>
#include <vector>

#include "mstream/base.h"
#include "mstream/stream.h"
#include "mstream/time.h"

namespace mstream::gen {

using Rng = std::mt19937;

inline int RandomInt(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Random container with up to max_size elements drawn from [0, carrier).
template <class C>
C RandomContainer(Rng& rng, int carrier, int max_size) {
  using X = typename C::value_type;
  const int n = RandomInt(rng, 0, max_size);
  if constexpr (!C::kHasMonoid) {
    return C::Unit(static_cast<X>(RandomInt(rng, 0, carrier - 1)));
  } else {
    C c = C::Empty();
    for (int i = 0; i < n; ++i) {
      c = Combine(c, C::Unit(static_cast<X>(RandomInt(rng, 0, carrier - 1))));
    }
    return c;
  }
}

/// Table-backed stream over dom; each tick is occupied with probability
/// `density` (always occupied for bases without a monoid).
template <class C>
Stream<C> RandomStream(Rng& rng, const FiniteDomain& dom, int carrier = 3, int max_size = 3,
                       double density = 0.6) {
  std::bernoulli_distribution occupied(density);
  std::vector<std::pair<TimePoint, C>> rows;
  for (TimePoint t : dom.ticks()) {
    if (!C::kHasMonoid || occupied(rng)) {
      rows.emplace_back(t, RandomContainer<C>(rng, carrier, max_size));
    }
  }
  return Stream<C>::FromTable(dom, rows);
}

/// Materialized copy of a stream as a per-tick vector.
template <class C, class T>
std::vector<C> Materialize(const Stream<C, T>& s) {
  std::vector<C> out;
  for (const T& t : s.domain().ticks()) out.push_back(s.at(t));
  return out;
}

}  // namespace mstream::gen

#endif  // MSTREAM_GENERATORS_H_
