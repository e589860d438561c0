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

#include "mstream/time.h"

#include <algorithm>

namespace mstream {

std::vector<TimePoint> IntervalMembers(const TimeInterval& iv, const FiniteDomain& dom) {
  std::vector<TimePoint> out;
  if (iv.empty()) return out;
  const TimePoint lo = std::max(iv.lo(), dom.first());
  const TimePoint hi = std::min(iv.hi(), dom.last());
  for (TimePoint t = lo; t <= hi; ++t) out.push_back(t);
  return out;
}

std::function<bool(TimePoint)> PeriodicPredicate(std::int64_t period, TimePoint anchor) {
  if (period < 1) {
    throw std::invalid_argument("periodic predicate requires period >= 1");
  }
  return [period, anchor](TimePoint t) {
    std::int64_t r = (t - anchor) % period;
    return r == 0;
  };
}

}  // namespace mstream
