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

#include "mstream/kinds.h"

#include <algorithm>
#include <stdexcept>

namespace mstream {

StreamKind JoinKind(StreamKind a, StreamKind b) { return std::max(a, b); }

std::string_view KindName(StreamKind k) {
  switch (k) {
    case StreamKind::kEt:
      return "et";
    case StreamKind::kSt:
      return "st";
    case StreamKind::kEv:
      return "ev";
  }
  return "?";
}

std::optional<StreamKind> ParseKind(std::string_view name) {
  if (name == "et") return StreamKind::kEt;
  if (name == "st") return StreamKind::kSt;
  if (name == "ev") return StreamKind::kEv;
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, StreamKind k) { return os << KindName(k); }

KindGraph::NodeId KindGraph::Add(Node n) {
  for (NodeId in : n.inputs) {
    if (in >= nodes_.size()) throw std::out_of_range("kind graph: unknown input node " + std::to_string(in));
  }
  if ((n.type == NodeType::kReducible || n.type == NodeType::kNonReducible) && n.inputs.empty()) {
    throw std::invalid_argument("kind graph: operator '" + n.name + "' has no inputs");
  }
  nodes_.push_back(std::move(n));
  return nodes_.size() - 1;
}

KindGraph::NodeId KindGraph::Source(std::optional<StreamKind> kind, std::string name) {
  return Add({NodeType::kSource, std::move(name), kind, {}});
}

KindGraph::NodeId KindGraph::Static(std::string name) {
  return Add({NodeType::kStatic, std::move(name), StreamKind::kEt, {}});
}

KindGraph::NodeId KindGraph::Reducible(std::vector<NodeId> inputs, std::string name) {
  return Add({NodeType::kReducible, std::move(name), std::nullopt, std::move(inputs)});
}

KindGraph::NodeId KindGraph::NonReducible(std::vector<NodeId> inputs, std::string name) {
  return Add({NodeType::kNonReducible, std::move(name), std::nullopt, std::move(inputs)});
}

void KindGraph::Annotate(NodeId source, std::optional<StreamKind> kind) {
  if (source >= nodes_.size() || nodes_[source].type != NodeType::kSource) {
    throw std::invalid_argument("kind graph: node " + std::to_string(source) + " is not a source");
  }
  nodes_[source].kind = kind;
}

std::vector<StreamKind> KindGraph::Infer() const {
  std::vector<StreamKind> out;
  out.reserve(nodes_.size());
  for (const Node& n : nodes_) {
    switch (n.type) {
      case NodeType::kSource:
        if (!n.kind) throw UnannotatedSourceError("kind graph: source '" + n.name + "' has no kind");
        out.push_back(*n.kind);
        break;
      case NodeType::kStatic:
        out.push_back(StreamKind::kEt);
        break;
      case NodeType::kReducible: {
        StreamKind k = StreamKind::kEt;
        for (NodeId in : n.inputs) k = JoinKind(k, out[in]);
        out.push_back(k);
        break;
      }
      case NodeType::kNonReducible:
        out.push_back(StreamKind::kSt);
        break;
    }
  }
  return out;
}

}  // namespace mstream
