#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "isodec/error.hpp"
#include "isodec/report.hpp"

namespace {

isodec::ClassSchurOverrides parse_schur(const std::vector<std::string>& items) {
  isodec::ClassSchurOverrides out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw isodec::Error(isodec::Errc::InvalidArgument, "--schur expects l=s, got " + item);
    try {
      std::string label = item.substr(0, eq);
      if (!label.empty() && label[0] == 'V') label.erase(0, 1);
      out[std::stoul(label)] = unsigned(std::stoul(item.substr(eq + 1)));
    } catch (const std::logic_error&) {
      throw isodec::Error(isodec::Errc::InvalidArgument, "--schur expects l=s, got " + item);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group algebra decompositions of Jacobians from finite group actions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(isodec::kEngineVersion));

  isodec::CommandOptions options;
  std::string format = "text";
  std::string ambient = "acting";
  std::vector<std::string> schur;
  std::size_t max_order = 0;

  auto common = [&](CLI::App* cmd, bool scenario) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--max-order", max_order, "Group order cap");
    if (scenario) {
      cmd->add_option("--schur", schur, "Schur index override l=s for rational class V_l")->delimiter(',');
    }
  };

  auto* analyze = app.add_subcommand("analyze", "Decomposition reports for a scenario");
  analyze->add_option("scenario", options.target, "Preset (d2q?q=3, fiber?genera=1,1) or JSON file")->required();
  analyze->add_option("--collections", options.collections, "Collections to report")->delimiter(',');
  analyze->add_option("--ambient", ambient, "Ambient group for admissibility")
      ->check(CLI::IsMember({"acting", "join"}));
  common(analyze, true);

  auto* search = app.add_subcommand("search", "Admissible collections of distinct subgroups");
  search->add_option("scenario", options.target, "Preset or JSON file")->required();
  search->add_option("--max-t", options.max_t, "Largest collection size");
  search->add_flag("--require-full", options.require_full, "Keep only full decompositions");
  search->add_flag("--dedupe-conjugates", options.dedupe_conjugates, "One collection per conjugation orbit");
  common(search, true);

  auto* fiber = app.add_subcommand("fiber", "Fiber products of hyperelliptic covers");
  fiber->add_option("--genera", options.genera, "Genera of the factors")->delimiter(',');
  unsigned cor3 = 0;
  auto* cor3_option = fiber->add_option("--cor3", cor3, "Plan for this many elliptic factors");
  common(fiber, false);

  auto* chartable = app.add_subcommand("chartable", "Character table and rational classes");
  chartable->add_option("group", options.target,
                        "Group preset (dihedral?q=3, quaternion, elementary2?t=2, cyclic?n=5, symmetric?n=4, "
                        "alternating4), scenario preset or file")
      ->required();
  common(chartable, true);

  auto* theorem_b = app.add_subcommand("theorem-b", "Partition identities");
  theorem_b->add_option("scenario", options.target, "Preset or JSON file")->required();
  theorem_b->add_option("--collections", options.collections, "Collections to check")->delimiter(',');
  common(theorem_b, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : isodec::kExitUsage;
  }

  try {
    options.command = app.get_subcommands().front()->get_name();
    options.ambient = ambient == "join" ? isodec::Ambient::Join : isodec::Ambient::Acting;
    options.schur = parse_schur(schur);
    if (max_order > 0) options.max_order = max_order;
    if (cor3_option->count() > 0) options.cor3 = cor3;
    const auto result = isodec::run_command(options);
    if (format == "json")
      std::cout << result.document.dump(2) << "\n";
    else
      std::cout << isodec::render_text(result.document);
    return result.exit_code;
  } catch (const isodec::Error& e) {
    std::cerr << "isodec: " << e.what() << "\n";
    return e.code() == isodec::Errc::EngineAssertion ? isodec::kExitCheckFailed : isodec::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "isodec: internal error: " << e.what() << "\n";
    return isodec::kExitCheckFailed;
  }
}
