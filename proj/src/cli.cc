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

#include "mstream/cli.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>

#include "CLI11.hpp"
#include "mstream/base.h"
#include "mstream/errors.h"
#include "mstream/law_suites.h"
#include "mstream/partition.h"
#include "mstream/stream.h"
#include "mstream/windows.h"

namespace mstream::cli {

using json = nlohmann::json;

namespace {

using AnyStream = std::variant<Stream<Bag<json>>, Stream<SetC<json>>, Stream<Maybe<json>>,
                               Stream<Identity<json>>, Stream<Seq<json>>>;

template <class C>
inline constexpr bool kIsMaybe = std::is_same_v<C, Maybe<json>>;

// ---------------------------------------------------------------------------
// Input.

TimePoint RequireTick(const json& v, std::string_view field, std::size_t line) {
  if (!v.is_number_integer()) {
    throw InputError("line " + std::to_string(line) + ": '" + std::string(field) + "' must be an integer");
  }
  return v.get<TimePoint>();
}

std::string RequireString(const json& v, std::string_view field, std::size_t line) {
  if (!v.is_string()) {
    throw InputError("line " + std::to_string(line) + ": '" + std::string(field) + "' must be a string");
  }
  return v.get<std::string>();
}

// ---------------------------------------------------------------------------
// Rendering.

json SortedByDump(std::vector<json> items) {
  std::sort(items.begin(), items.end(), [](const json& a, const json& b) { return a.dump() < b.dump(); });
  return json(items);
}

json Render(const Bag<json>& b) {
  std::vector<json> items;
  for (const auto& [v, m] : b.entries()) items.push_back(json::array({v, m}));
  return SortedByDump(std::move(items));
}

json Render(const SetC<json>& s) {
  std::vector<json> items;
  ForEach(s, [&](const json& v, std::size_t) { items.push_back(v); });
  return SortedByDump(std::move(items));
}

json Render(const Maybe<json>& m) { return m.has_value() ? m.value() : json(nullptr); }

json Render(const Identity<json>& i) {
  json out;
  ForEach(i, [&](const json& v, std::size_t) { out = v; });
  return out;
}

json Render(const Seq<json>& s) { return json(s.items()); }

json RenderMatch(const MatchValue<json>& m) {
  using K = MatchValue<json>::Kind;
  switch (m.kind()) {
    case K::kAtom:
      return m.payload();
    case K::kPair:
      return json::array({RenderMatch(m.children()[0]), RenderMatch(m.children()[1])});
    case K::kLeft:
      return json{{"left", RenderMatch(m.children()[0])}};
    case K::kRight:
      return json{{"right", RenderMatch(m.children()[0])}};
    case K::kPresent:
      return json{{"some", RenderMatch(m.children()[0])}};
    case K::kAbsent:
      return json{{"none", nullptr}};
    case K::kList: {
      json items = json::array();
      for (const auto& c : m.children()) items.push_back(RenderMatch(c));
      return json{{"list", items}};
    }
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Config helpers.

class StageView {
 public:
  StageView(const json& stage, std::string path) : stage_(stage), path_(std::move(path)) {
    if (!stage_.is_object()) throw ConfigError(path_ + ": stage must be an object");
    if (!stage_.contains("op") || !stage_["op"].is_string()) throw ConfigError(path_ + ": missing string 'op'");
    op_ = stage_["op"].get<std::string>();
  }

  const std::string& op() const { return op_; }
  const std::string& path() const { return path_; }

  /// Rejects keys outside `allowed` (plus "op").
  void Allow(std::initializer_list<std::string_view> allowed) const {
    for (const auto& [k, v] : stage_.items()) {
      if (k == "op") continue;
      if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
        throw ConfigError(path_ + " (" + op_ + "): unknown parameter '" + k + "'");
      }
    }
  }

  bool Has(std::string_view key) const { return stage_.contains(std::string(key)); }

  const json& Get(std::string_view key) const {
    if (!Has(key)) throw ConfigError(path_ + " (" + op_ + "): missing parameter '" + std::string(key) + "'");
    return stage_[std::string(key)];
  }

  std::int64_t Int(std::string_view key) const {
    const json& v = Get(key);
    if (!v.is_number_integer()) throw ConfigError(path_ + " (" + op_ + "): '" + std::string(key) + "' must be an integer");
    return v.get<std::int64_t>();
  }

  std::int64_t Int(std::string_view key, std::int64_t fallback) const { return Has(key) ? Int(key) : fallback; }

  std::string String(std::string_view key) const {
    const json& v = Get(key);
    if (!v.is_string()) throw ConfigError(path_ + " (" + op_ + "): '" + std::string(key) + "' must be a string");
    return v.get<std::string>();
  }

  double Number(std::string_view key) const {
    const json& v = Get(key);
    if (!v.is_number()) throw ConfigError(path_ + " (" + op_ + "): '" + std::string(key) + "' must be a number");
    return v.get<double>();
  }

  const json& Stages() const {
    const json& v = Get("stages");
    if (!v.is_array()) throw ConfigError(path_ + " (" + op_ + "): 'stages' must be an array");
    return v;
  }

 private:
  const json& stage_;
  std::string path_;
  std::string op_;
};

MatchPolicy ParsePolicy(const std::string& name, const std::string& where) {
  if (name == "strict") return MatchPolicy::kStrict;
  if (name == "skip") return MatchPolicy::kSkipIrrelevant;
  throw ConfigError(where + ": policy must be 'strict' or 'skip'");
}

const std::set<std::string_view>& ReducibleOps() {
  static const std::set<std::string_view> kOps = {"map_stream", "sel_elem", "sel_time", "now_window",
                                                  "slide", "filter_late"};
  return kOps;
}

const std::set<std::string_view>& NonReducibleOps() {
  static const std::set<std::string_view> kOps = {"window_time", "window_taa", "window_future",
                                                  "window_row", "window_rowgen", "row_slide",
                                                  "match_pattern", "row_window_via_pattern"};
  return kOps;
}

std::function<json(const json&)> FieldGetter(std::string field, std::string where) {
  return [field = std::move(field), where = std::move(where)](const json& x) -> json {
    if (!x.is_object() || !x.contains(field)) {
      throw ContractViolation(where + ": payload " + x.dump() + " has no field '" + field + "'");
    }
    return x[field];
  };
}

std::function<double(const json&)> NumberOf(std::string where) {
  return [where = std::move(where)](const json& x) {
    if (!x.is_number()) throw ContractViolation(where + ": payload " + x.dump() + " is not a number");
    return x.get<double>();
  };
}

json FromDouble(double v) {
  if (v == static_cast<double>(static_cast<std::int64_t>(v))) return json(static_cast<std::int64_t>(v));
  return json(v);
}

// ---------------------------------------------------------------------------
// Pipeline evaluation.

struct Context {
  FiniteDomain dom;
  MatchPolicy default_policy;
};

AnyStream ApplyStages(const json& stages, const std::string& path, AnyStream s, const Context& ctx);

template <class C>
AnyStream ApplyStage(const StageView& st, const Stream<C>& s, const Context& ctx) {
  const std::string& op = st.op();
  const std::string where = st.path() + " (" + op + ")";

  if (op == "map_stream") {
    st.Allow({"field", "add", "mul", "set"});
    const int given = st.Has("field") + st.Has("add") + st.Has("mul") + st.Has("set");
    if (given != 1) throw ConfigError(where + ": exactly one of field/add/mul/set is required");
    std::function<json(const json&)> f;
    if (st.Has("field")) {
      f = FieldGetter(st.String("field"), where);
    } else if (st.Has("add") || st.Has("mul")) {
      const bool add = st.Has("add");
      const double k = st.Number(add ? "add" : "mul");
      auto num = NumberOf(where);
      f = [num, add, k](const json& x) { return FromDouble(add ? num(x) + k : num(x) * k); };
    } else {
      const json& set = st.Get("set");
      if (!set.is_object() || !set.contains("field") || !set["field"].is_string() || !set.contains("value")) {
        throw ConfigError(where + ": 'set' needs {\"field\": string, \"value\": json}");
      }
      f = [field = set["field"].get<std::string>(), value = set["value"], where](const json& x) {
        if (!x.is_object()) throw ContractViolation(where + ": payload " + x.dump() + " is not an object");
        json y = x;
        y[field] = value;
        return y;
      };
    }
    return MapStream(f, s);
  }
  if (op == "sel_elem") {
    st.Allow({"field", "cmp", "value"});
    const std::string cmp = st.String("cmp");
    const json rhs = st.Get("value");
    std::function<json(const json&)> get = [](const json& x) { return x; };
    if (st.Has("field")) get = FieldGetter(st.String("field"), where);
    std::function<bool(const json&, const json&)> rel;
    if (cmp == "==") rel = [](const json& a, const json& b) { return a == b; };
    else if (cmp == "!=") rel = [](const json& a, const json& b) { return a != b; };
    else if (cmp == "<") rel = [](const json& a, const json& b) { return a < b; };
    else if (cmp == "<=") rel = [](const json& a, const json& b) { return a <= b; };
    else if (cmp == ">") rel = [](const json& a, const json& b) { return a > b; };
    else if (cmp == ">=") rel = [](const json& a, const json& b) { return a >= b; };
    else throw ConfigError(where + ": unknown comparison '" + cmp + "'");
    return SelElem([get, rel, rhs](const json& x) { return rel(get(x), rhs); }, s);
  }
  if (op == "sel_time") {
    st.Allow({"min_size"});
    const auto n = static_cast<std::size_t>(std::max<std::int64_t>(0, st.Int("min_size")));
    return SelTime([n](const C& c) { return Size(c) >= n; }, s);
  }
  if (op == "now_window") {
    st.Allow({});
    return NowWindow(s);
  }
  if (op == "window_time") {
    st.Allow({"size"});
    return WindowTime(st.Int("size"), s);
  }
  if (op == "window_future") {
    st.Allow({"size"});
    return WindowFuture(st.Int("size"), s);
  }
  if (op == "window_taa") {
    st.Allow({"size"});
    return MapStream([](const std::pair<TimePoint, json>& p) { return json::array({p.first, p.second}); },
                     WindowTaa(st.Int("size"), s));
  }
  if (op == "slide") {
    st.Allow({"period", "anchor"});
    return SlidePeriodic(st.Int("period"), st.Int("anchor", 0), s);
  }
  if (op == "row_slide") {
    st.Allow({"n"});
    return RowSlide(st.Int("n"), s);
  }
  if (op == "window_rowgen") {
    st.Allow({"n"});
    return MapStream([](const C& c) { return Render(c); }, WindowRowGen(st.Int("n"), s));
  }
  if (op == "window_row" || op == "match_pattern" || op == "row_window_via_pattern") {
    if constexpr (!kIsMaybe<C>) {
      throw ContractViolation(where + ": needs a stream without simultaneous elements (maybe base)");
    } else {
      if (op == "window_row") {
        st.Allow({"n"});
        return WindowRow(st.Int("n"), s);
      }
      if (op == "row_window_via_pattern") {
        st.Allow({"n"});
        return MapStream([](const Seq<json>& q) { return json(q.items()); }, RowWindowViaPattern(st.Int("n"), s));
      }
      st.Allow({"pattern", "policy"});
      const Pattern p = Pattern::Parse(st.String("pattern"));
      const MatchPolicy policy = st.Has("policy") ? ParsePolicy(st.String("policy"), where) : ctx.default_policy;
      auto tagged = MapStream(
          [where](const json& x) {
            if (!x.is_object() || !x.contains("tag") || !x["tag"].is_string()) {
              throw ContractViolation(where + ": payload " + x.dump() + " has no tag");
            }
            json payload = x.contains("key") ? json{{"key", x["key"]}, {"value", x["value"]}} : x["value"];
            return Tagged<json>{x["tag"].get<std::string>(), payload};
          },
          s);
      return MapStream(RenderMatch, MatchPattern(p, policy, tagged));
    }
  }
  if (op == "partition_with" || op == "distribute") {
    st.Allow({"stages"});
    if constexpr (!C::kHasMonoid) {
      throw NoMonoidError(op);
    } else {
      const json nested = st.Stages();
      const std::string nested_path = st.path() + ".stages";
      auto run_nested = [nested, nested_path, ctx, where](const Stream<C>& sub) -> Stream<C> {
        AnyStream r = ApplyStages(nested, nested_path, sub, ctx);
        if (!std::holds_alternative<Stream<C>>(r)) {
          throw ContractViolation(where + ": nested stages must keep the base container");
        }
        return std::get<Stream<C>>(r);
      };
      auto key_of = [where](const json& x) {
        if (!x.is_object() || !x.contains("key") || !x["key"].is_string()) {
          throw ContractViolation(where + ": payload " + x.dump() + " has no key");
        }
        return x["key"].get<std::string>();
      };
      if (op == "partition_with") {
        return PartitionWith([key_of](const json& x) { return std::make_pair(key_of(x), x.value("value", json())); },
                             run_nested,
                             [](const std::string& k, const json& v) { return json{{"key", k}, {"value", v}}; }, s);
      }
      using KV = std::pair<std::string, json>;
      auto pairs = MapStream([key_of](const json& x) { return KV{key_of(x), x}; }, s);
      auto op_on_pairs = [run_nested, key_of](const Stream<Rebind<C, KV>>& x) {
        auto records = MapStream([](const KV& kv) { return kv.second; }, x);
        return MapStream([key_of](const json& r) { return KV{key_of(r), r}; }, run_nested(records));
      };
      return MapStream([](const KV& kv) { return kv.second; }, Distribute(op_on_pairs, pairs));
    }
  }
  if (op == "filter_late") throw ConfigError(where + ": filter_late must be the first stage");
  throw ConfigError(where + ": unknown op");
}

AnyStream ApplyStages(const json& stages, const std::string& path, AnyStream s, const Context& ctx) {
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const StageView st(stages[i], path + "[" + std::to_string(i) + "]");
    s = std::visit([&](const auto& x) { return ApplyStage(st, x, ctx); }, s);
  }
  return s;
}

template <class C>
Stream<C> BuildSource(const std::vector<Record>& records, const FiniteDomain& dom) {
  std::vector<std::pair<TimePoint, C>> rows;
  for (const Record& r : records) {
    if (dom.contains(r.t)) rows.emplace_back(r.t, C::Unit(r.payload));
  }
  return Stream<C>::FromTable(dom, rows);
}

/// Source with the late-element filter applied on the event x arrival grid,
/// viewed after the last arrival.
template <class C>
Stream<C> BuildFilteredSource(const std::vector<Record>& records, const FiniteDomain& dom, std::int64_t limit) {
  if constexpr (!C::kHasMonoid) {
    throw NoMonoidError("filter_late");
  } else {
    TimePoint lo = dom.first();
    TimePoint hi = dom.last();
    for (const Record& r : records) {
      if (!dom.contains(r.t)) continue;
      const TimePoint a = r.arrival.value_or(r.t);
      lo = std::min(lo, a);
      hi = std::max(hi, a);
    }
    const BiDomain bi(dom, FiniteDomain(lo, hi));
    std::vector<std::pair<BiTime, C>> rows;
    for (const Record& r : records) {
      if (dom.contains(r.t)) rows.emplace_back(BiTime{r.t, r.arrival.value_or(r.t)}, C::Unit(r.payload));
    }
    return ViewAtArrival(hi, FilterLate(limit, Stream<C, BiTime>::FromTable(bi, rows)));
  }
}

AnyStream BuildAnySource(const std::string& base, const std::vector<Record>& records, const FiniteDomain& dom,
                         std::optional<std::int64_t> late_limit) {
  auto build = [&]<class C>() -> AnyStream {
    if constexpr (kIsMaybe<C> || std::is_same_v<C, Identity<json>>) {
      std::set<TimePoint> seen;
      for (const Record& r : records) {
        if (dom.contains(r.t) && !seen.insert(r.t).second) {
          throw InputError("line " + std::to_string(r.line) + ": second element at t=" + std::to_string(r.t) +
                           " for a " + base + "-base stream");
        }
      }
    }
    if (late_limit) return BuildFilteredSource<C>(records, dom, *late_limit);
    return BuildSource<C>(records, dom);
  };
  if (base == "bag") return build.operator()<Bag<json>>();
  if (base == "set") return build.operator()<SetC<json>>();
  if (base == "maybe") return build.operator()<Maybe<json>>();
  if (base == "identity") return build.operator()<Identity<json>>();
  if (base == "seq") return build.operator()<Seq<json>>();
  throw ConfigError("pipeline: base must be one of bag|set|maybe|identity|seq");
}

void CheckTopLevel(const json& pipeline) {
  if (!pipeline.is_object()) throw ConfigError("pipeline: must be a JSON object");
  for (const auto& [k, v] : pipeline.items()) {
    if (k != "base" && k != "kind" && k != "stages") throw ConfigError("pipeline: unknown field '" + k + "'");
  }
  if (!pipeline.contains("base") || !pipeline["base"].is_string()) throw ConfigError("pipeline: missing string 'base'");
  if (!pipeline.contains("stages") || !pipeline["stages"].is_array()) {
    throw ConfigError("pipeline: missing array 'stages'");
  }
  if (pipeline.contains("kind") && (!pipeline["kind"].is_string() || !ParseKind(pipeline["kind"].get<std::string>()))) {
    throw ConfigError("pipeline: kind must be one of ev|st|et");
  }
}

bool AllReducible(const json& stages, const std::string& path) {
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const StageView st(stages[i], path + "[" + std::to_string(i) + "]");
    if (st.op() == "partition_with" || st.op() == "distribute") {
      if (!AllReducible(st.Stages(), st.path() + ".stages")) return false;
    } else if (NonReducibleOps().count(st.op())) {
      return false;
    } else if (!ReducibleOps().count(st.op())) {
      throw ConfigError(st.path() + " (" + st.op() + "): unknown op");
    }
  }
  return true;
}

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open pipeline file " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError("pipeline " + path + ": " + e.what());
  }
}

std::vector<Record> ReadRecordsFile(const std::string& path) {
  if (path == "-") return ParseRecords(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file " + path);
  return ParseRecords(in);
}

}  // namespace

std::vector<Record> ParseRecords(std::istream& in) {
  std::vector<Record> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw InputError("line " + std::to_string(line) + ": " + e.what());
    }
    if (!j.is_object()) throw InputError("line " + std::to_string(line) + ": record must be an object");
    Record r;
    r.line = line;
    bool has_t = false;
    bool has_value = false;
    json value;
    std::optional<std::string> key;
    std::optional<std::string> tag;
    for (const auto& [k, v] : j.items()) {
      if (k == "t") {
        r.t = RequireTick(v, k, line);
        has_t = true;
      } else if (k == "arrival") {
        r.arrival = RequireTick(v, k, line);
      } else if (k == "value") {
        value = v;
        has_value = true;
      } else if (k == "key") {
        key = RequireString(v, k, line);
      } else if (k == "tag") {
        tag = RequireString(v, k, line);
      } else {
        throw InputError("line " + std::to_string(line) + ": unknown field '" + k + "'");
      }
    }
    if (!has_t) throw InputError("line " + std::to_string(line) + ": missing 't'");
    if (!has_value) throw InputError("line " + std::to_string(line) + ": missing 'value'");
    if (key || tag) {
      r.payload = json{{"value", value}};
      if (key) r.payload["key"] = *key;
      if (tag) r.payload["tag"] = *tag;
    } else {
      r.payload = value;
    }
    out.push_back(std::move(r));
  }
  return out;
}

void RunPipeline(const json& pipeline, const std::vector<Record>& records, TimePoint from, TimePoint to,
                 MatchPolicy default_policy, std::ostream& out) {
  CheckTopLevel(pipeline);
  if (from > to) throw ConfigError("--from must not exceed --to");
  const FiniteDomain dom(from, to);
  const json& stages = pipeline["stages"];

  std::optional<std::int64_t> late_limit;
  std::size_t skip = 0;
  if (!stages.empty()) {
    const StageView first(stages[0], "stages[0]");
    if (first.op() == "filter_late") {
      first.Allow({"limit"});
      late_limit = first.Int("limit");
      skip = 1;
    }
  }
  AnyStream s = BuildAnySource(pipeline["base"].get<std::string>(), records, dom, late_limit);
  json rest = json::array();
  for (std::size_t i = skip; i < stages.size(); ++i) rest.push_back(stages[i]);
  s = ApplyStages(rest, "stages", std::move(s), Context{dom, default_policy});

  std::visit(
      [&](const auto& sink) {
        using C = typename std::decay_t<decltype(sink)>::container_type;
        for (TimePoint t : dom.ticks()) {
          const C c = sink.at(t);
          if constexpr (C::kHasMonoid) {
            if (IsNeutral(c)) continue;
          }
          out << "{\"t\":" << t << ",\"out\":" << Render(c).dump() << "}\n";
        }
      },
      s);
}

StreamKind InferPipelineKind(const json& pipeline) {
  CheckTopLevel(pipeline);
  KindGraph g;
  std::optional<StreamKind> source;
  if (pipeline.contains("kind")) source = ParseKind(pipeline["kind"].get<std::string>());
  KindGraph::NodeId node = g.Source(source, "input");
  const json& stages = pipeline["stages"];
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const StageView st(stages[i], "stages[" + std::to_string(i) + "]");
    bool reducible;
    if (st.op() == "partition_with" || st.op() == "distribute") {
      reducible = AllReducible(st.Stages(), st.path() + ".stages");
    } else {
      reducible = AllReducible(json::array({stages[i]}), st.path());
    }
    node = reducible ? g.Reducible({node}, st.op()) : g.NonReducible({node}, st.op());
  }
  return g.Infer()[node];
}

void RunBSort(std::size_t slack, const std::vector<Record>& records, std::ostream& out) {
  std::vector<Arrival<json>> in;
  for (const Record& r : records) {
    if (!r.arrival) throw InputError("line " + std::to_string(r.line) + ": bsort needs 'arrival'");
    in.push_back({BiTime{r.t, *r.arrival}, r.payload});
  }
  std::stable_sort(in.begin(), in.end(),
                   [](const Arrival<json>& a, const Arrival<json>& b) { return a.time.arrival < b.time.arrival; });
  for (const auto& a : BSort(slack, in)) {
    out << "{\"t\":" << a.time.event << ",\"arrival\":" << a.time.arrival << ",\"value\":" << a.payload.dump()
        << "}\n";
  }
}

int Main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"mstream: evaluate stream pipelines and check the model's laws"};
  app.require_subcommand(1);

  std::string pipeline_path;
  std::string input_path;
  std::optional<TimePoint> from;
  std::optional<TimePoint> to;
  std::string output_path;
  std::string policy_name = "skip";
  std::string law_suite;
  bool print_kind = false;
  std::uint32_t seed = SuiteOptions{}.seed;

  CLI::App* run = app.add_subcommand("run", "Run a pipeline or a law suite");
  run->add_option("--pipeline", pipeline_path, "Pipeline config (JSON)");
  run->add_option("--input", input_path, "Input records (JSONL, '-' for stdin)");
  run->add_option("--from", from, "First tick of the evaluation domain");
  run->add_option("--to", to, "Last tick of the evaluation domain");
  run->add_option("--output", output_path, "Output file (default stdout)");
  run->add_option("--policy", policy_name, "Default pattern selection policy")->check(CLI::IsMember({"strict", "skip"}));
  run->add_option("--check-laws", law_suite, "Law suite: monad|monoid|snapshot|inverse|mutation|all")
      ->check(CLI::IsMember({"monad", "monoid", "snapshot", "inverse", "mutation", "all"}));
  run->add_flag("--print-kind", print_kind, "Print the inferred kind of the pipeline's result");
  run->add_option("--seed", seed, "Seed for randomized law samples");

  std::size_t slack = 0;
  CLI::App* bsort = app.add_subcommand("bsort", "Reorder arrival-ordered records with a bounded buffer");
  bsort->add_option("--slack", slack, "Buffer slack in rows")->required();
  bsort->add_option("--input", input_path, "Input records (JSONL, '-' for stdin)")->required();
  bsort->add_option("--output", output_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    std::ostringstream help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kExitOk : kExitConfig;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  auto open_output = [&] {
    if (output_path.empty()) return;
    file.open(output_path, std::ios::binary);
    if (!file) throw ConfigError("cannot open output file " + output_path);
    sink = &file;
  };

  try {
    if (*bsort) {
      const auto records = ReadRecordsFile(input_path);
      open_output();
      RunBSort(slack, records, *sink);
      return kExitOk;
    }
    if (!law_suite.empty()) {
      SuiteOptions opts;
      opts.seed = seed;
      const LawReport report = RunLawSuite(law_suite, opts);
      open_output();
      for (const auto& r : report) *sink << ToJson(r).dump() << '\n';
      if (!AllPassed(report)) {
        err << "law check failed\n";
        return kExitLawFailure;
      }
      return kExitOk;
    }
    if (pipeline_path.empty()) throw ConfigError("run: --pipeline or --check-laws is required");
    const json pipeline = ReadJsonFile(pipeline_path);
    if (print_kind) {
      open_output();
      *sink << KindName(InferPipelineKind(pipeline)) << '\n';
      return kExitOk;
    }
    if (input_path.empty() || !from || !to) throw ConfigError("run: --input, --from and --to are required");
    const auto records = ReadRecordsFile(input_path);
    open_output();
    RunPipeline(pipeline, records, *from, *to, ParsePolicy(policy_name, "--policy"), *sink);
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const UnannotatedSourceError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << '\n';
    return kExitContract;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace mstream::cli
