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

// Command-line front end: JSONL ingestion, JSON pipeline configs and the law
// harness. Kept in a library so tests can drive it without a subprocess.

#ifndef MSTREAM_CLI_H_
#define MSTREAM_CLI_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "mstream/kinds.h"
#include "mstream/patterns.h"
#include "mstream/time.h"

namespace mstream::cli {

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitContract = 3;
inline constexpr int kExitLawFailure = 4;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One input line. The payload is `value`, or an object
/// {"key"?, "tag"?, "value"} when the record carries a key or a tag.
struct Record {
  TimePoint t = 0;
  std::optional<TimePoint> arrival;
  nlohmann::json payload;
  std::size_t line = 0;
};

/// Parses JSONL records; blank lines are skipped. Throws InputError naming
/// the line on malformed records or unknown fields.
std::vector<Record> ParseRecords(std::istream& in);

/// Evaluates the pipeline over [from, to] and writes one line
/// {"t": <tick>, "out": <container>} per non-empty instant.
/// Throws ConfigError, InputError or ContractViolation.
void RunPipeline(const nlohmann::json& pipeline, const std::vector<Record>& records, TimePoint from,
                 TimePoint to, MatchPolicy default_policy, std::ostream& out);

/// Kind of the pipeline's sink, from the config's source annotation.
StreamKind InferPipelineKind(const nlohmann::json& pipeline);

/// Reorders arrival-ordered records (stable by arrival) through a bsort
/// buffer and writes {"t", "arrival", "value"} lines.
void RunBSort(std::size_t slack, const std::vector<Record>& records, std::ostream& out);

/// Entry point; returns the process exit code.
int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mstream::cli

#endif  // MSTREAM_CLI_H_
