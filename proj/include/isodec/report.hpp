#ifndef ISODEC_REPORT_HPP
#define ISODEC_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isodec/decomposition.hpp"
#include "isodec/scenario.hpp"

namespace isodec {

inline constexpr std::string_view kEngineVersion = "1.0.0";

/// Exit codes of run_command and the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitCheckFailed = 2;

struct CommandOptions {
  std::string command;  // analyze, search, fiber, chartable, theorem-b
  std::string target;   // preset or scenario path; group preset for chartable
  std::vector<std::string> collections;
  Ambient ambient = Ambient::Acting;
  ClassSchurOverrides schur;
  std::optional<std::size_t> max_order;
  std::size_t max_t = 3;
  bool require_full = false;
  bool dedupe_conjugates = false;
  std::vector<unsigned> genera;  // fiber
  std::optional<unsigned> cor3;  // fiber, elliptic mode
};

struct CommandResult {
  Json document;
  int exit_code = kExitOk;
};

/// Throws Error for usage, parse and validation problems; claim mismatches
/// are reported in the document with exit code 2.
CommandResult run_command(const CommandOptions& options);

/// Deterministic text form of a document produced by run_command.
std::string render_text(const Json& document);

namespace report {
Json engine_json();
Json group_json(const FiniteGroup& group);
Json character_table_json(const CharacterTable& table);
/// With an analysis the factor data (dim B, multiplicities) is included.
Json rational_classes_json(const std::vector<RationalClass>& classes, const Analysis* analysis);
Json subgroup_json(const SubgroupProfile& profile, const std::string& label,
                   const std::vector<std::string>& generators);
Json admissibility_json(const AdmissibilityReport& report);
Json theorem1_json(const DecompositionReport& report);
Json corollary1_json(const Corollary1Report& report);
Json prop1_json(const Prop1Report& report);
Json prop2_json(const Prop2Report& report);
Json theorem_b_json(const TheoremBReport& report);
Json theorem_c_json(const TheoremCReport& report);
Json fiber_json(const FiberPlan& plan);
/// Words for a generating set of the subgroup.
std::vector<std::string> generator_words(const Subgroup& h);
}  // namespace report

}  // namespace isodec

#endif  // ISODEC_REPORT_HPP
