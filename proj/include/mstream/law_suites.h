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

// Ready-made law suites over every base and both physical representations.
// Each suite returns one result per (instance, law); the CLI prints them as
// JSON lines.

#ifndef MSTREAM_LAW_SUITES_H_
#define MSTREAM_LAW_SUITES_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mstream/generators.h"
#include "mstream/laws.h"
#include "mstream/stream.h"
#include "mstream/time.h"

namespace mstream {

struct SuiteOptions {
  std::uint32_t seed = 20260101;
  /// Stream-instance sample counts per nesting level.
  int stream_level1 = 60;
  int stream_level2 = 30;
  int stream_level3 = 15;
  /// Random triples per base for the monoid laws.
  int monoid_triples = 1000;
  /// Random stream instances per operator for reducibility and
  /// representation checks.
  int instances = 100;
  /// Domain for stream checks.
  TimePoint first = 0;
  TimePoint last = 5;
};

LawReport RunMonadSuite(const SuiteOptions& opts = {});
LawReport RunMonoidSuite(const SuiteOptions& opts = {});
LawReport RunSnapshotSuite(const SuiteOptions& opts = {});
LawReport RunInverseSuite(const SuiteOptions& opts = {});
/// Seeded broken instances; a result passes when the harness catches the
/// breakage, i.e. at least one law fails.
LawReport RunMutationSuite(const SuiteOptions& opts = {});

/// "monad", "monoid", "snapshot", "inverse", "mutation" or "all".
/// Throws std::invalid_argument for other names.
LawReport RunLawSuite(std::string_view name, const SuiteOptions& opts = {});
const std::vector<std::string>& LawSuiteNames();

/// Random samples for the stream monad over base B: level-n values are
/// streams nesting n stream layers, built over small pools of inner streams.
template <template <class> class B>
MonadSamples<Stream<B<int>>, Stream<B<Stream<B<int>>>>, Stream<B<Stream<B<Stream<B<int>>>>>>>
RandomStreamSamples(gen::Rng& rng, const FiniteDomain& dom, int n1, int n2, int n3, int carrier = 3) {
  using S1 = Stream<B<int>>;
  using S2 = Stream<B<S1>>;
  using S3 = Stream<B<S2>>;
  MonadSamples<S1, S2, S3> s;
  for (int i = 0; i < carrier; ++i) s.xs.push_back(i);
  s.fns = AllFunctions(carrier);
  for (int i = 0; i < n1; ++i) s.level1.push_back(gen::RandomStream<B<int>>(rng, dom, carrier, 3));

  constexpr int kPool = 4;
  std::vector<S1> pool1;
  for (int i = 0; i < kPool; ++i) pool1.push_back(gen::RandomStream<B<int>>(rng, dom, carrier, 2));
  for (int i = 0; i < n2; ++i) {
    auto idx = gen::RandomStream<B<int>>(rng, dom, kPool, 2);
    s.level2.push_back(MapStream([pool1](int k) { return pool1[static_cast<std::size_t>(k)]; }, idx));
  }
  std::vector<S2> pool2;
  for (int i = 0; i < kPool; ++i) {
    auto idx = gen::RandomStream<B<int>>(rng, dom, kPool, 2);
    pool2.push_back(MapStream([pool1](int k) { return pool1[static_cast<std::size_t>(k)]; }, idx));
  }
  for (int i = 0; i < n3; ++i) {
    auto idx = gen::RandomStream<B<int>>(rng, dom, kPool, 2);
    s.level3.push_back(MapStream([pool2](int k) { return pool2[static_cast<std::size_t>(k)]; }, idx));
  }
  return s;
}

}  // namespace mstream

#endif  // MSTREAM_LAW_SUITES_H_
