#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "leafy/branching.hpp"
#include "leafy/solvers.hpp"

namespace leafy {

inline constexpr int kInstanceFormatVersion = 1;

struct InstanceFile {
  int format_version = kInstanceFormatVersion;
  Digraph digraph;
  std::optional<std::string> provenance;
};

/// {"version":1,"n":..,"root":..,"arcs":[[u,v],...],"weights":[..]?,"provenance":".."?}
/// Arcs are written in lexicographic order.
nlohmann::json instance_to_json(const Digraph& d,
                                const std::optional<std::string>& provenance = std::nullopt);
/// Throws ParseError naming the offending field; digraph validation errors are
/// rethrown as ParseError with the original message.
InstanceFile instance_from_json(const nlohmann::json& j);

std::string serialize_instance(const Digraph& d,
                               const std::optional<std::string>& provenance = std::nullopt);
InstanceFile parse_instance(const std::string& text);

void write_instance(const Digraph& d, const std::filesystem::path& path,
                    const std::optional<std::string>& provenance = std::nullopt);
Digraph read_instance(const std::filesystem::path& path);
InstanceFile read_instance_file(const std::filesystem::path& path);

/// Host arcs thin and grey, branching arcs bold.
std::string to_dot(const Branching& b);
std::string to_dot(const Digraph& d);
void write_dot(const Branching& b, const std::filesystem::path& path);

/// {"parent":[int|null,...],"leaf_count":int,"leaf_weight":int?,"report":{...}}
nlohmann::json solution_to_json(const SolveResult& result);

/// Parsed form of a solution file. The report stays as JSON: it is a claim to
/// be checked, not trusted.
struct SolutionFile {
  std::vector<std::optional<VertexId>> parent;
  std::size_t leaf_count = 0;
  std::optional<Weight> leaf_weight;
  nlohmann::json report;
};

SolutionFile solution_from_json(const nlohmann::json& j);

/// Parses JSON text, turning syntax errors into ParseError with line and column.
nlohmann::json parse_json_text(const std::string& text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace leafy
