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

#include "mstream/windows.h"

#include <map>

namespace mstream {

std::optional<double> LinearInterpolate(const Samples& samples, TimePoint target) {
  // Per-instant mean.
  std::map<TimePoint, std::pair<double, std::size_t>> by_time;
  for (const auto& [p, m] : samples.entries()) {
    auto& [sum, n] = by_time[p.first];
    sum += p.second * static_cast<double>(m);
    n += m;
  }
  if (by_time.empty()) return std::nullopt;
  auto mean = [](const std::pair<double, std::size_t>& acc) {
    return acc.first / static_cast<double>(acc.second);
  };

  auto after = by_time.lower_bound(target);
  if (after != by_time.end() && after->first == target) return mean(after->second);
  if (after == by_time.begin()) return mean(after->second);
  auto before = std::prev(after);
  if (after == by_time.end()) return mean(before->second);

  const double t0 = static_cast<double>(before->first);
  const double t1 = static_cast<double>(after->first);
  const double v0 = mean(before->second);
  const double v1 = mean(after->second);
  return v0 + (v1 - v0) * (static_cast<double>(target) - t0) / (t1 - t0);
}

}  // namespace mstream
