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

// Stream kinds: event (ev), state (st) and eternal (et) streams form a join
// semi-lattice with et neutral and ev absorbing.

#ifndef MSTREAM_KINDS_H_
#define MSTREAM_KINDS_H_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mstream/errors.h"

namespace mstream {

/// Declaration order is the induced order et <= st <= ev.
enum class StreamKind { kEt, kSt, kEv };

StreamKind JoinKind(StreamKind a, StreamKind b);
std::string_view KindName(StreamKind k);
/// "ev", "st" or "et"; nullopt otherwise.
std::optional<StreamKind> ParseKind(std::string_view name);
std::ostream& operator<<(std::ostream& os, StreamKind k);

class UnannotatedSourceError : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

/// Operator DAG for kind inference. Nodes may only read earlier nodes, so
/// every graph built through this interface is acyclic.
class KindGraph {
 public:
  using NodeId = std::size_t;

  enum class NodeType {
    kSource,        // annotated input stream
    kStatic,        // relation lifted with unit_snapshot
    kReducible,     // snapshot-reducible operator: join of the inputs
    kNonReducible,  // window, pattern, resample: always st
  };

  /// A source without annotation is accepted here and rejected by Infer.
  NodeId Source(std::optional<StreamKind> kind, std::string name = "source");
  NodeId Static(std::string name = "unit_snapshot");
  NodeId Reducible(std::vector<NodeId> inputs, std::string name = "reducible");
  NodeId NonReducible(std::vector<NodeId> inputs, std::string name = "window");

  /// Kind of every node, indexed by NodeId.
  std::vector<StreamKind> Infer() const;

  std::size_t size() const { return nodes_.size(); }
  /// Replaces a source's annotation.
  void Annotate(NodeId source, std::optional<StreamKind> kind);

 private:
  struct Node {
    NodeType type;
    std::string name;
    std::optional<StreamKind> kind;
    std::vector<NodeId> inputs;
  };
  NodeId Add(Node n);

  std::vector<Node> nodes_;
};

}  // namespace mstream

#endif  // MSTREAM_KINDS_H_
