#include "netout/query.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace netout {

using nlohmann::ordered_json;

std::optional<std::size_t> MotifPattern::slot_index(std::string_view slot_id) const {
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].id == slot_id) return i;
  }
  return std::nullopt;
}

std::optional<Metric> metric_from_name(std::string_view name) {
  if (name == "mos" || name == "raw" || name == "raw_count") return Metric::RawCount;
  if (name == "pathsim") return Metric::PathSim;
  if (name == "cossim") return Metric::CosSim;
  if (name == "normcon") return Metric::NormCon;
  return std::nullopt;
}

const char* metric_name(Metric metric) {
  switch (metric) {
    case Metric::RawCount: return "mos";
    case Metric::PathSim: return "pathsim";
    case Metric::CosSim: return "cossim";
    case Metric::NormCon: return "normcon";
  }
  return "?";
}

bool is_symmetric(const MetaPath& path) {
  auto types = path.types;
  std::reverse(types.begin(), types.end());
  if (types != path.types) return false;
  auto etypes = path.edge_types;
  std::reverse(etypes.begin(), etypes.end());
  return etypes == path.edge_types;
}

MetaPath symmetrize(const MetaPath& path) {
  MetaPath out;
  out.weight = path.weight;
  out.types = path.types;
  for (std::size_t i = path.types.size() - 1; i-- > 0;) out.types.push_back(path.types[i]);
  if (!path.edge_types.empty()) {
    out.edge_types = path.edge_types;
    for (std::size_t i = path.edge_types.size(); i-- > 0;) out.edge_types.push_back(path.edge_types[i]);
  }
  return out;
}

MetaPath half_of(const MetaPath& symmetric_path) {
  std::size_t len = symmetric_path.types.size();
  std::size_t half_len = len % 2 == 1 ? (len + 1) / 2 : len / 2;
  MetaPath out;
  out.weight = symmetric_path.weight;
  out.types.assign(symmetric_path.types.begin(), symmetric_path.types.begin() + half_len);
  if (!symmetric_path.edge_types.empty() && half_len > 1) {
    out.edge_types.assign(symmetric_path.edge_types.begin(),
                          symmetric_path.edge_types.begin() + (half_len - 1));
  }
  return out;
}

std::optional<ResolvedPath> resolve_path(const HeteroGraph& graph, const MetaPath& path) {
  ResolvedPath out;
  out.weight = path.weight;
  out.types.reserve(path.types.size());
  for (const auto& name : path.types) {
    auto t = graph.find_type(name);
    if (!t) return std::nullopt;
    out.types.push_back(*t);
  }
  for (const auto& name : path.edge_types) {
    auto t = graph.find_edge_type(name);
    if (!t) return std::nullopt;
    out.edge_types.push_back(*t);
  }
  return out;
}

namespace {

[[noreturn]] void bad_query(const std::string& where, const std::string& what) {
  raise(ErrorKind::QueryParseError, where + ": " + what);
}

void require_connected(const MotifPattern& pattern) {
  if (pattern.slots.size() <= 1) return;
  std::vector<bool> seen(pattern.slots.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t s = stack.back();
    stack.pop_back();
    for (const auto& e : pattern.edges) {
      std::size_t other;
      if (e.a == s) other = e.b;
      else if (e.b == s) other = e.a;
      else continue;
      if (!seen[other]) {
        seen[other] = true;
        stack.push_back(other);
      }
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    bad_query("pattern", "pattern is not connected");
}

SlotBinding parse_binding(const ordered_json& obj, const MotifPattern& pattern,
                          const std::string& where) {
  if (!obj.is_object()) bad_query(where, "expected an object mapping slot id to node id");
  SlotBinding binding;
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!pattern.slot_index(it.key())) bad_query(where, "unknown slot '" + it.key() + "'");
    if (!it.value().is_string()) bad_query(where + "." + it.key(), "node id must be a string");
    binding[it.key()] = it.value().get<std::string>();
  }
  for (const auto& slot : pattern.slots) {
    if (!binding.count(slot.id)) bad_query(where, "missing binding for slot '" + slot.id + "'");
  }
  return binding;
}

MetaPath parse_meta_path_types(const ordered_json& arr, const std::string& where) {
  if (!arr.is_array() || arr.size() < 2) bad_query(where, "expected an array of at least 2 node types");
  MetaPath path;
  for (const auto& t : arr) {
    if (!t.is_string() || t.get<std::string>().empty()) bad_query(where, "node type must be a nonempty string");
    path.types.push_back(t.get<std::string>());
  }
  return path;
}

}  // namespace

QuerySpec parse_query(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    bad_query("document", e.what());
  }
  if (!doc.is_object()) bad_query("document", "top level must be an object");

  QuerySpec spec;

  // pattern
  if (!doc.contains("pattern")) bad_query("pattern", "missing");
  const auto& jp = doc["pattern"];
  if (!jp.contains("slots") || !jp["slots"].is_array() || jp["slots"].empty())
    bad_query("pattern.slots", "expected a nonempty array");
  for (std::size_t i = 0; i < jp["slots"].size(); ++i) {
    const auto& js = jp["slots"][i];
    std::string where = "pattern.slots[" + std::to_string(i) + "]";
    if (!js.is_object() || !js.contains("id") || !js.contains("type")) bad_query(where, "expected {id, type}");
    PatternSlot slot{js["id"].get<std::string>(), js["type"].get<std::string>()};
    if (slot.id.empty() || slot.type.empty()) bad_query(where, "id and type must be nonempty");
    if (spec.pattern.slot_index(slot.id)) bad_query(where, "duplicate slot id '" + slot.id + "'");
    spec.pattern.slots.push_back(std::move(slot));
  }
  if (jp.contains("edges")) {
    if (!jp["edges"].is_array()) bad_query("pattern.edges", "expected an array");
    for (std::size_t i = 0; i < jp["edges"].size(); ++i) {
      const auto& je = jp["edges"][i];
      std::string where = "pattern.edges[" + std::to_string(i) + "]";
      if (!je.is_array() || (je.size() != 2 && je.size() != 3)) bad_query(where, "expected [slot, slot] or [slot, slot, edge_type]");
      auto a = spec.pattern.slot_index(je[0].get<std::string>());
      auto b = spec.pattern.slot_index(je[1].get<std::string>());
      if (!a || !b) bad_query(where, "unknown slot id");
      if (*a == *b) bad_query(where, "self edge on slot '" + je[0].get<std::string>() + "'");
      PatternEdge edge{*a, *b, je.size() == 3 ? je[2].get<std::string>() : std::string()};
      spec.pattern.edges.push_back(std::move(edge));
    }
  }
  require_connected(spec.pattern);

  // start instances
  if (!doc.contains("start") || !doc["start"].is_array() || doc["start"].empty())
    bad_query("start", "expected a nonempty array of slot bindings");
  for (std::size_t i = 0; i < doc["start"].size(); ++i) {
    spec.start_bindings.push_back(
        parse_binding(doc["start"][i], spec.pattern, "start[" + std::to_string(i) + "]"));
  }

  // search paths
  if (doc.contains("search_paths")) {
    if (!doc["search_paths"].is_array()) bad_query("search_paths", "expected an array");
    for (std::size_t i = 0; i < doc["search_paths"].size(); ++i) {
      spec.search_paths.push_back(
          parse_meta_path_types(doc["search_paths"][i], "search_paths[" + std::to_string(i) + "]"));
    }
  }

  // score paths
  if (!doc.contains("score_paths") || !doc["score_paths"].is_array() || doc["score_paths"].empty())
    bad_query("score_paths", "expected a nonempty array");
  std::vector<std::string> pattern_types;
  for (const auto& slot : spec.pattern.slots) pattern_types.push_back(slot.type);
  for (std::size_t i = 0; i < doc["score_paths"].size(); ++i) {
    const auto& jsp = doc["score_paths"][i];
    std::string where = "score_paths[" + std::to_string(i) + "]";
    MetaPath path;
    if (jsp.is_array()) {
      path = parse_meta_path_types(jsp, where);
    } else if (jsp.is_object() && jsp.contains("types")) {
      path = parse_meta_path_types(jsp["types"], where + ".types");
      if (jsp.contains("weight")) {
        if (!jsp["weight"].is_number()) bad_query(where + ".weight", "expected a number");
        path.weight = jsp["weight"].get<double>();
        if (!(path.weight > 0)) bad_query(where + ".weight", "weight must be positive");
      }
      if (jsp.contains("edge_types")) {
        if (!jsp["edge_types"].is_array() || jsp["edge_types"].size() != path.types.size() - 1)
          bad_query(where + ".edge_types", "expected types.size()-1 edge types");
        for (const auto& et : jsp["edge_types"]) path.edge_types.push_back(et.get<std::string>());
      }
    } else {
      bad_query(where, "expected an array of types or {types, weight}");
    }
    if (!is_symmetric(path)) bad_query(where, "score path not symmetric");
    if (std::find(pattern_types.begin(), pattern_types.end(), path.types.front()) == pattern_types.end())
      bad_query(where, "score path endpoint type '" + path.types.front() + "' not in pattern");
    spec.score_paths.push_back(std::move(path));
  }

  // reference
  if (doc.contains("reference")) {
    const auto& jr = doc["reference"];
    if (jr.is_string()) {
      if (jr.get<std::string>() != "candidates") bad_query("reference", "expected \"candidates\" or an array");
      spec.reference_source = ReferenceSource::Candidates;
    } else if (jr.is_array()) {
      spec.reference_source = ReferenceSource::UserProvided;
      for (std::size_t i = 0; i < jr.size(); ++i) {
        spec.reference_bindings.push_back(
            parse_binding(jr[i], spec.pattern, "reference[" + std::to_string(i) + "]"));
      }
      if (spec.reference_bindings.empty()) bad_query("reference", "reference instance list is empty");
    } else {
      bad_query("reference", "expected \"candidates\" or an array");
    }
  }

  // metric / top_k / thresholds
  if (doc.contains("metric")) {
    if (!doc["metric"].is_string()) bad_query("metric", "expected a string");
    auto m = metric_from_name(doc["metric"].get<std::string>());
    if (!m) bad_query("metric", "unknown metric '" + doc["metric"].get<std::string>() + "'");
    spec.metric = *m;
  }
  if (doc.contains("top_k")) {
    if (!doc["top_k"].is_number_integer() || doc["top_k"].get<int>() <= 0)
      bad_query("top_k", "expected a positive integer");
    spec.top_k = doc["top_k"].get<int>();
  }
  if (doc.contains("degree_thresholds")) {
    if (!doc["degree_thresholds"].is_object()) bad_query("degree_thresholds", "expected an object");
    for (auto it = doc["degree_thresholds"].begin(); it != doc["degree_thresholds"].end(); ++it) {
      if (!it.value().is_number_integer() || it.value().get<std::int64_t>() < 0)
        bad_query("degree_thresholds." + it.key(), "expected a nonnegative integer");
      spec.degree_thresholds[it.key()] = it.value().get<std::uint64_t>();
    }
  }

  return spec;
}

QuerySpec parse_query_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorKind::QueryParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_query(buf.str());
}

std::string serialize_query(const QuerySpec& spec) {
  ordered_json doc;
  doc["pattern"]["slots"] = ordered_json::array();
  for (const auto& slot : spec.pattern.slots)
    doc["pattern"]["slots"].push_back({{"id", slot.id}, {"type", slot.type}});
  doc["pattern"]["edges"] = ordered_json::array();
  for (const auto& e : spec.pattern.edges) {
    ordered_json je = ordered_json::array({spec.pattern.slots[e.a].id, spec.pattern.slots[e.b].id});
    if (!e.edge_type.empty()) je.push_back(e.edge_type);
    doc["pattern"]["edges"].push_back(je);
  }
  doc["start"] = spec.start_bindings;
  doc["search_paths"] = ordered_json::array();
  for (const auto& p : spec.search_paths) doc["search_paths"].push_back(p.types);
  doc["score_paths"] = ordered_json::array();
  for (const auto& p : spec.score_paths) {
    ordered_json jp{{"types", p.types}, {"weight", p.weight}};
    if (!p.edge_types.empty()) jp["edge_types"] = p.edge_types;
    doc["score_paths"].push_back(jp);
  }
  if (spec.reference_source == ReferenceSource::Candidates) {
    doc["reference"] = "candidates";
  } else {
    doc["reference"] = spec.reference_bindings;
  }
  doc["metric"] = metric_name(spec.metric);
  doc["top_k"] = spec.top_k;
  doc["degree_thresholds"] = spec.degree_thresholds;
  return doc.dump(2);
}

namespace {

void validate_path(const MetaPath& path, const HeteroGraph& graph, const std::string& label,
                   std::vector<std::string>& violations) {
  std::vector<TypeId> resolved;
  for (const auto& name : path.types) {
    auto t = graph.find_type(name);
    if (!t) {
      violations.push_back(label + ": unknown node type '" + name + "'");
      return;
    }
    resolved.push_back(*t);
  }
  for (const auto& name : path.edge_types) {
    if (!graph.find_edge_type(name)) {
      violations.push_back(label + ": unknown edge type '" + name + "'");
      return;
    }
  }
  for (std::size_t i = 0; i + 1 < resolved.size(); ++i) {
    if (!graph.types_cooccur(resolved[i], resolved[i + 1])) {
      violations.push_back(label + ": no edge joins types '" + path.types[i] + "' and '" +
                           path.types[i + 1] + "'");
    }
  }
}

}  // namespace

std::vector<std::string> validate(const QuerySpec& spec, const HeteroGraph& graph) {
  std::vector<std::string> violations;

  for (const auto& slot : spec.pattern.slots) {
    if (!graph.find_type(slot.type))
      violations.push_back("pattern slot '" + slot.id + "': unknown node type '" + slot.type + "'");
  }

  for (std::size_t s = 0; s < spec.start_bindings.size(); ++s) {
    const auto& binding = spec.start_bindings[s];
    std::string label = "start[" + std::to_string(s) + "]";
    std::vector<NodeId> bound(spec.pattern.slots.size(), kNoNode);
    bool ok = true;
    for (std::size_t i = 0; i < spec.pattern.slots.size(); ++i) {
      const auto& slot = spec.pattern.slots[i];
      const std::string& node_label = binding.at(slot.id);
      auto n = graph.find_node(node_label);
      if (!n) {
        violations.push_back(label + ": node '" + node_label + "' not in graph");
        ok = false;
        continue;
      }
      if (graph.type_name(graph.node_type(*n)) != slot.type) {
        violations.push_back(label + ": node '" + node_label + "' is not of type '" + slot.type + "'");
        ok = false;
        continue;
      }
      bound[i] = *n;
    }
    if (!ok) continue;
    for (std::size_t i = 0; i < bound.size(); ++i) {
      for (std::size_t j = i + 1; j < bound.size(); ++j) {
        if (bound[i] == bound[j]) {
          violations.push_back(label + ": slots '" + spec.pattern.slots[i].id + "' and '" +
                               spec.pattern.slots[j].id + "' bound to the same node");
        }
      }
    }
    for (const auto& e : spec.pattern.edges) {
      bool present = e.edge_type.empty()
                         ? graph.has_edge_between(bound[e.a], bound[e.b])
                         : (graph.find_edge_type(e.edge_type) &&
                            graph.has_edge_between(bound[e.a], bound[e.b], *graph.find_edge_type(e.edge_type)));
      if (!present) {
        violations.push_back(label + ": pattern edge " + graph.node_label(bound[e.a]) + "-" +
                             graph.node_label(bound[e.b]) + " missing in graph");
      }
    }
  }

  for (std::size_t i = 0; i < spec.search_paths.size(); ++i)
    validate_path(spec.search_paths[i], graph, "search_paths[" + std::to_string(i) + "]", violations);
  for (std::size_t i = 0; i < spec.score_paths.size(); ++i) {
    std::string label = "score_paths[" + std::to_string(i) + "]";
    if (!is_symmetric(spec.score_paths[i])) violations.push_back(label + ": score path not symmetric");
    validate_path(spec.score_paths[i], graph, label, violations);
  }

  return violations;
}

}  // namespace netout
