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

#ifndef MSTREAM_SUM_H_
#define MSTREAM_SUM_H_

#include <ostream>
#include <utility>
#include <variant>

#include "mstream/print.h"

namespace mstream {

/// Binary sum L + R. Works for L == R since the side is tracked by index.
template <class L, class R>
class Either {
 public:
  static Either Left(L l) { return Either(std::in_place_index<0>, std::move(l)); }
  static Either Right(R r) { return Either(std::in_place_index<1>, std::move(r)); }

  bool is_left() const { return v_.index() == 0; }
  const L& left() const { return std::get<0>(v_); }
  const R& right() const { return std::get<1>(v_); }

  friend bool operator==(const Either&, const Either&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Either& e) {
    if (e.is_left()) {
      os << "inl ";
      Print(os, e.left());
    } else {
      os << "inr ";
      Print(os, e.right());
    }
    return os;
  }

 private:
  template <std::size_t I, class V>
  Either(std::in_place_index_t<I> tag, V&& v) : v_(tag, std::forward<V>(v)) {}

  std::variant<L, R> v_;
};

}  // namespace mstream

#endif  // MSTREAM_SUM_H_
