#ifndef ISODEC_SCENARIO_HPP
#define ISODEC_SCENARIO_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "isodec/covering.hpp"
#include "isodec/decomposition.hpp"
#include "isodec/group.hpp"

namespace isodec {

using Json = nlohmann::ordered_json;

struct GroupSpec {
  struct Generator {
    std::string name;
    std::vector<unsigned> images;
  };
  std::string preset;  // empty when generators are listed
  std::map<std::string, long long> params;
  std::vector<Generator> generators;
};

struct ActionSpec {
  unsigned orbit_genus = 0;
  std::vector<unsigned> periods;
  std::vector<std::pair<std::string, std::string>> handles;
  std::vector<std::string> vector;
};

struct SubgroupSpec {
  std::string label;
  std::vector<std::string> generators;
};

/// Values a collection is claimed to have; each one is compared with the
/// computed value and a mismatch becomes a discrepancy note.
struct Claims {
  std::optional<std::vector<std::vector<long long>>> fixed_dims;  // rows over V2..Vr
  std::optional<std::vector<long long>> genera;
  std::optional<bool> admissible;
  std::optional<bool> admissible_join;
  std::optional<long long> dim_p;
  std::optional<bool> full;
  std::optional<bool> theorem_b;
  std::optional<bool> theorem_c;

  bool empty() const {
    return !fixed_dims && !genera && !admissible && !admissible_join && !dim_p && !full && !theorem_b && !theorem_c;
  }
};

struct CollectionSpec {
  std::string name;
  std::vector<SubgroupSpec> subgroups;
  Claims claims;
};

struct ScenarioOptions {
  ClassSchurOverrides schur;
  std::size_t max_order = kDefaultMaxOrder;
};

struct ScenarioFile {
  std::string name;
  std::string description;
  GroupSpec group;
  ActionSpec action;
  std::vector<CollectionSpec> collections;
  ScenarioOptions options;
};

Json to_json(const ScenarioFile& scenario);
/// Throws ParseError naming the offending JSON pointer.
ScenarioFile scenario_from_json(const Json& document);
/// Throws ParseError with line and column for malformed text.
ScenarioFile parse_scenario(std::string_view text);
ScenarioFile load_scenario_file(const std::filesystem::path& path);

/// "d2q?q=3" or "fiber?genera=1,1"; nullopt for unknown names.
std::optional<ScenarioFile> preset_scenario(std::string_view spec);
/// "dihedral?q=3", "quaternion", "elementary2?t=3", "cyclic?n=5",
/// "symmetric?n=4", "alternating4". Throws InvalidArgument.
GroupPtr preset_group(std::string_view spec, std::size_t max_order = kDefaultMaxOrder);
GroupPtr build_group(const GroupSpec& spec, std::size_t max_order = kDefaultMaxOrder);

/// A scenario with every word resolved and the action validated.
struct Scenario {
  ScenarioFile file;
  GroupPtr group;
  CoveringAction action;
  std::vector<std::vector<Subgroup>> collections;  // parallel to file.collections
};

/// Throws UnknownGenerator, ParseError, or ValidationError wrapping a covering error.
Scenario resolve_scenario(const ScenarioFile& file, std::optional<std::size_t> max_order = std::nullopt);

/// Preset name or path to a JSON file.
ScenarioFile load_scenario(std::string_view target);

}  // namespace isodec

#endif  // ISODEC_SCENARIO_HPP
