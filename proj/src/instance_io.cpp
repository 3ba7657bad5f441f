#include "leafy/instance_io.hpp"

#include <fstream>
#include <sstream>

#include "leafy/errors.hpp"

namespace leafy {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw ParseError("field '" + field + "': " + what);
}

std::int64_t get_int(const json& j, const std::string& field) {
  if (!j.is_number_integer()) field_error(field, "expected an integer");
  return j.get<std::int64_t>();
}

std::uint64_t get_nonnegative(const json& j, const std::string& field) {
  auto value = get_int(j, field);
  if (value < 0) field_error(field, "expected a nonnegative integer");
  return static_cast<std::uint64_t>(value);
}

VertexId get_vertex(const json& j, const std::string& field) {
  auto value = get_nonnegative(j, field);
  if (value > std::numeric_limits<VertexId>::max()) field_error(field, "vertex id too large");
  return static_cast<VertexId>(value);
}

json arcs_to_json(std::span<const Arc> arcs) {
  json out = json::array();
  for (const Arc& a : arcs) out.push_back({a.tail, a.head});
  return out;
}

}  // namespace

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": " + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

json instance_to_json(const Digraph& d, const std::optional<std::string>& provenance) {
  json j;
  j["version"] = kInstanceFormatVersion;
  j["n"] = d.vertex_count();
  j["root"] = d.root();
  j["arcs"] = arcs_to_json(d.arcs());
  if (d.has_weights()) j["weights"] = *d.weights();
  if (provenance) j["provenance"] = *provenance;
  return j;
}

InstanceFile instance_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  for (const char* key : {"version", "n", "root", "arcs"})
    if (!j.contains(key)) field_error(key, "missing");
  auto version = get_int(j["version"], "version");
  if (version != kInstanceFormatVersion)
    field_error("version", "unsupported format version " + std::to_string(version));
  auto n = get_nonnegative(j["n"], "n");
  auto root = get_vertex(j["root"], "root");

  const json& arcs_json = j["arcs"];
  if (!arcs_json.is_array()) field_error("arcs", "expected an array");
  std::vector<Arc> arcs;
  arcs.reserve(arcs_json.size());
  for (std::size_t i = 0; i < arcs_json.size(); ++i) {
    const std::string name = "arcs[" + std::to_string(i) + "]";
    const json& pair = arcs_json[i];
    if (!pair.is_array() || pair.size() != 2) field_error(name, "expected [tail, head]");
    arcs.push_back({get_vertex(pair[0], name), get_vertex(pair[1], name)});
  }

  std::optional<std::vector<Weight>> weights;
  if (j.contains("weights") && !j["weights"].is_null()) {
    const json& w = j["weights"];
    if (!w.is_array()) field_error("weights", "expected an array");
    if (w.size() != n)
      field_error("weights", "has " + std::to_string(w.size()) + " entries, expected " +
                                 std::to_string(n));
    weights.emplace();
    for (std::size_t i = 0; i < w.size(); ++i)
      weights->push_back(static_cast<Weight>(
          get_nonnegative(w[i], "weights[" + std::to_string(i) + "]")));
  }

  std::optional<std::string> provenance;
  if (j.contains("provenance") && !j["provenance"].is_null()) {
    if (!j["provenance"].is_string()) field_error("provenance", "expected a string");
    provenance = j["provenance"].get<std::string>();
  }

  try {
    return {static_cast<int>(version), Digraph(n, root, std::move(arcs), std::move(weights)),
            std::move(provenance)};
  } catch (const CycleDetected& e) {
    throw ParseError(std::string("invalid digraph (cycle): ") + e.what());
  } catch (const NotRooted& e) {
    throw ParseError(std::string("invalid digraph (not rooted): ") + e.what());
  } catch (const MalformedInput& e) {
    throw ParseError(std::string("invalid digraph: ") + e.what());
  }
}

std::string serialize_instance(const Digraph& d, const std::optional<std::string>& provenance) {
  return instance_to_json(d, provenance).dump() + "\n";
}

InstanceFile parse_instance(const std::string& text) {
  return instance_from_json(parse_json_text(text));
}

void write_instance(const Digraph& d, const std::filesystem::path& path,
                    const std::optional<std::string>& provenance) {
  write_text_file(path, serialize_instance(d, provenance));
}

InstanceFile read_instance_file(const std::filesystem::path& path) {
  try {
    return parse_instance(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

Digraph read_instance(const std::filesystem::path& path) {
  return std::move(read_instance_file(path).digraph);
}

namespace {

void dot_vertices(std::ostringstream& out, const Digraph& d) {
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    out << "  " << v << " [label=\"" << v;
    if (d.has_weights()) out << " (w=" << d.weight(v) << ")";
    out << "\"";
    if (v == d.root()) out << ", shape=doublecircle";
    out << "];\n";
  }
}

}  // namespace

std::string to_dot(const Digraph& d) {
  std::ostringstream out;
  out << "digraph instance {\n  node [shape=circle];\n";
  dot_vertices(out, d);
  for (const Arc& a : d.arcs()) out << "  " << a.tail << " -> " << a.head << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const Branching& b) {
  const Digraph& d = b.host();
  std::ostringstream out;
  out << "digraph branching {\n  node [shape=circle];\n";
  dot_vertices(out, d);
  for (const Arc& a : d.arcs()) {
    out << "  " << a.tail << " -> " << a.head;
    if (b.parent(a.head) == a.tail)
      out << " [style=bold, penwidth=2.5];\n";
    else
      out << " [color=gray60, penwidth=0.6];\n";
  }
  out << "}\n";
  return out.str();
}

void write_dot(const Branching& b, const std::filesystem::path& path) {
  write_text_file(path, to_dot(b));
}

json solution_to_json(const SolveResult& result) {
  const Branching& tree = result.tree;
  const SolveReport& r = result.report;
  json j;
  json parent = json::array();
  for (VertexId v = 0; v < tree.host().vertex_count(); ++v) {
    if (auto p = tree.parent(v))
      parent.push_back(*p);
    else
      parent.push_back(nullptr);
  }
  j["parent"] = std::move(parent);
  j["leaf_count"] = r.leaf_count;
  if (r.leaf_weight) j["leaf_weight"] = *r.leaf_weight;

  json report;
  report["algorithm"] = r.algorithm;
  report["leaf_count"] = r.leaf_count;
  report["matching_size"] = r.matching_size;
  json phases = json::array();
  for (const auto& p : r.phases) {
    if (p.name.size() == 2 && p.name[0] == 'F') {
      report["N" + p.name.substr(1)] = p.stats.nontrivial_vertices;
      report["k" + p.name.substr(1)] = p.stats.nontrivial_components;
    }
    phases.push_back({{"name", p.name},
                      {"N", p.stats.nontrivial_vertices},
                      {"k", p.stats.nontrivial_components},
                      {"leaves", p.stats.leaves},
                      {"arcs", arcs_to_json(p.arcs)}});
  }
  auto put = [&](const char* key, const std::optional<Rational>& value) {
    if (value) report[key] = to_string(*value);
  };
  put("lb_lemma1", r.leaf_lower_bound);
  put("ub_lemma2", r.expansion_upper_bound);
  put("ub_lemma3", r.matching_upper_bound);
  put("lb_lemma4", r.packing_lower_bound);
  put("ub_lemma5", r.packing_upper_bound);
  put("claimed_alpha", r.claimed_alpha);
  if (r.packing_lower_bound) {
    report["three_set_expansions"] = r.three_set_expansions;
    report["two_set_expansions"] = r.two_set_expansions;
  }
  if (r.objective) report["objective"] = *r.objective;
  report["certificate_ok"] = r.certificate_ok;
  report["phases"] = std::move(phases);
  j["report"] = std::move(report);
  return j;
}

SolutionFile solution_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("solution must be a JSON object");
  for (const char* key : {"parent", "leaf_count", "report"})
    if (!j.contains(key)) field_error(key, "missing");
  SolutionFile s;
  const json& parent = j["parent"];
  if (!parent.is_array()) field_error("parent", "expected an array");
  for (std::size_t i = 0; i < parent.size(); ++i) {
    if (parent[i].is_null())
      s.parent.emplace_back(std::nullopt);
    else
      s.parent.emplace_back(get_vertex(parent[i], "parent[" + std::to_string(i) + "]"));
  }
  s.leaf_count = get_nonnegative(j["leaf_count"], "leaf_count");
  if (j.contains("leaf_weight") && !j["leaf_weight"].is_null())
    s.leaf_weight = get_int(j["leaf_weight"], "leaf_weight");
  if (!j["report"].is_object()) field_error("report", "expected an object");
  s.report = j["report"];
  return s;
}

}  // namespace leafy
