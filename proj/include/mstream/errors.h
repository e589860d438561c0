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

#ifndef MSTREAM_ERRORS_H_
#define MSTREAM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace mstream {

/// An operator was applied outside of its contract (wrong base, changed
/// keys, broken representation, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when an operation needs empty()/combine() on a base without a
/// monoid (Identity).
class NoMonoidError : public ContractViolation {
 public:
  explicit NoMonoidError(const std::string& op)
      : ContractViolation(op + ": no monoid for this base") {}
};

/// A partitioned operator rewrote the partition key.
class KeyChangeError : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

/// snapshot . reconstruct != id for a physical representation.
class BrokenRepresentation : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

}  // namespace mstream

#endif  // MSTREAM_ERRORS_H_
