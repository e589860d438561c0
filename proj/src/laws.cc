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

#include "mstream/laws.h"

namespace mstream {

nlohmann::json ToJson(const LawResult& r) {
  nlohmann::json j = {{"suite", r.suite},   {"instance", r.instance}, {"law", r.law},
                      {"passed", r.passed}, {"cases", r.cases}};
  if (!r.passed) j["counterexample"] = r.counterexample;
  return j;
}

bool AllPassed(const LawReport& report) {
  for (const auto& r : report) {
    if (!r.passed) return false;
  }
  return true;
}

std::vector<FnTable> AllFunctions(int n) {
  std::vector<FnTable> out;
  if (n <= 0) return out;
  std::vector<int> image(static_cast<std::size_t>(n), 0);
  for (;;) {
    out.push_back(FnTable{image});
    std::size_t i = 0;
    while (i < image.size() && ++image[i] == n) image[i++] = 0;
    if (i == image.size()) break;
  }
  return out;
}

}  // namespace mstream
