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

// Keyed partitioned evaluation.
//
// PartitionWith splits every payload into (key, value), runs an operator on
// each key's substream of values and recombines the results with their key.
// The key universe is every key observed over the domain; keys must be
// ordered (operator<) so that evaluation order is deterministic.

#ifndef MSTREAM_PARTITION_H_
#define MSTREAM_PARTITION_H_

#include <map>
#include <set>
#include <type_traits>
#include <utility>
#include <vector>

#include "mstream/base.h"
#include "mstream/errors.h"
#include "mstream/print.h"
#include "mstream/stream.h"

namespace mstream {

/// Every key produced by split over the domain, ascending.
template <class Split, class C>
auto ObservedKeys(const Split& split, const Stream<C>& s) {
  using X = typename C::value_type;
  using K = std::decay_t<decltype(split(std::declval<const X&>()).first)>;
  std::set<K> keys;
  for (TimePoint t : s.domain().ticks()) {
    ForEach(s.at(t), [&](const X& x, std::size_t) { keys.insert(split(x).first); });
  }
  return std::vector<K>(keys.begin(), keys.end());
}

/// PartitionWith over an explicit key list, unioned in list order. Keys
/// that split never produces contribute nothing; observed keys missing from
/// the list are dropped.
template <class K, class Split, class Op, class Recombine, class C>
auto PartitionWithKeys(const std::vector<K>& keys, Split split, Op op, Recombine recombine,
                       const Stream<C>& s) {
  using X = typename C::value_type;
  using V = std::decay_t<decltype(split(std::declval<const X&>()).second)>;
  using SubIn = Stream<Rebind<C, V>>;
  using SubOut = std::decay_t<std::invoke_result_t<Op&, const SubIn&>>;
  using V2 = typename SubOut::value_type;
  using X2 = std::decay_t<std::invoke_result_t<Recombine&, const K&, const V2&>>;
  using Out = Stream<Rebind<C, X2>>;
  if constexpr (!C::kHasMonoid) {
    throw NoMonoidError("partition_with");
    return Out::Empty(s.domain());
  } else {
    Out acc = Out::Empty(s.domain());
    for (const K& k : keys) {
      SubIn sub = MapSnapshot(
          [split, k](const C& c) {
            return Map([split](const X& x) { return split(x).second; },
                       Filter([split, k](const X& x) { return split(x).first == k; }, c));
          },
          s);
      SubOut result = op(sub);
      if (!(result.domain() == s.domain())) {
        throw ContractViolation("partition_with: operator must preserve the domain");
      }
      acc = UnionStreams(acc, MapStream([recombine, k](const V2& v) { return recombine(k, v); }, result));
    }
    return acc;
  }
}

/// partitionWith split op recombine s, keys in ascending order.
template <class Split, class Op, class Recombine, class C>
auto PartitionWith(Split split, Op op, Recombine recombine, const Stream<C>& s) {
  if constexpr (!C::kHasMonoid) throw NoMonoidError("partition_with");
  return PartitionWithKeys(ObservedKeys(split, s), std::move(split), std::move(op), std::move(recombine), s);
}

/// Runs op per key on (key, value) payloads and re-attaches the partition
/// key. op must leave keys unchanged; a changed key raises KeyChangeError
/// when the offending instant is evaluated.
template <class Op, class C>
auto Distribute(Op op, const Stream<C>& s) {
  using KV = typename C::value_type;
  using K = typename KV::first_type;
  return PartitionWith([](const KV& kv) { return std::make_pair(kv.first, kv); }, std::move(op),
                       [](const K& k, const auto& kz) {
                         if (!(kz.first == k)) {
                           throw KeyChangeError("distribute: operator changed key " + Describe(k) + " to " +
                                                Describe(kz.first));
                         }
                         return std::make_pair(k, kz.second);
                       },
                       s);
}

}  // namespace mstream

#endif  // MSTREAM_PARTITION_H_
