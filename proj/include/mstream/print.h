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

// Human-readable rendering used by operator<< of containers and by law
// counterexamples.

#ifndef MSTREAM_PRINT_H_
#define MSTREAM_PRINT_H_

#include <ostream>
#include <sstream>
#include <string>
#include <utility>

namespace mstream {

template <class T>
void Print(std::ostream& os, const T& v);
template <class A, class B>
void Print(std::ostream& os, const std::pair<A, B>& p);
inline void Print(std::ostream& os, const std::string& s) { os << '"' << s << '"'; }
inline void Print(std::ostream& os, bool b) { os << (b ? "true" : "false"); }

template <class T>
void Print(std::ostream& os, const T& v) {
  os << v;
}

template <class A, class B>
void Print(std::ostream& os, const std::pair<A, B>& p) {
  os << '(';
  Print(os, p.first);
  os << ", ";
  Print(os, p.second);
  os << ')';
}

template <class T>
std::string Describe(const T& v) {
  std::ostringstream os;
  Print(os, v);
  return os.str();
}

}  // namespace mstream

#endif  // MSTREAM_PRINT_H_
