#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "isodec/error.hpp"
#include "isodec/report.hpp"
#include "isodec/scenario.hpp"

using namespace isodec;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::EngineAssertion;
}

CommandOptions command(std::string name, std::string target) {
  CommandOptions o;
  o.command = std::move(name);
  o.target = std::move(target);
  return o;
}

// Compares against tests/golden/<name>; ISODEC_UPDATE_GOLDEN=1 rewrites the file.
void check_golden(const std::string& name, const std::string& actual) {
  const fs::path path = fs::path(ISODEC_GOLDEN_DIR) / name;
  if (std::getenv("ISODEC_UPDATE_GOLDEN")) {
    std::ofstream(path) << actual;
    return;
  }
  REQUIRE_MESSAGE(fs::exists(path), "missing golden file " << path);
  CHECK_MESSAGE(slurp(path) == actual, "golden mismatch for " << name);
}

std::set<std::string> numbers_in(const std::string& text) {
  static const std::regex number(R"(-?\d+(/\d+)?)");
  std::set<std::string> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), number); it != std::sregex_iterator(); ++it)
    out.insert(it->str());
  return out;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(ISODEC_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

struct GoldenCase {
  std::string file;
  CommandOptions options;
  int exit_code;
};

std::vector<GoldenCase> golden_cases() {
  auto fiber = [](std::vector<unsigned> genera) {
    auto o = command("fiber", "");
    o.genera = std::move(genera);
    return o;
  };
  return {{"d2q_q3", command("analyze", "d2q?q=3"), 2},
          {"d2q_q5", command("analyze", "d2q?q=5"), 2},
          {"d2q_q7", command("analyze", "d2q?q=7"), 2},
          {"fiber_1_1", fiber({1, 1}), 0},
          {"fiber_1_1_1", fiber({1, 1, 1}), 0},
          {"theorem_b_d2q_q3", command("theorem-b", "d2q?q=3"), 0}};
}

}  // namespace

TEST_CASE("presets") {
  const auto file = load_scenario("d2q?q=3");
  const auto sc = resolve_scenario(file);
  CHECK(sc.group->order() == 12);
  CHECK(total_genus(sc.action) == 11);
  CHECK(sc.collections.size() == file.collections.size());
  CHECK_FALSE(preset_scenario("nothing").has_value());
  CHECK(code_of([] { load_scenario("d2q?q=4"); }) == Errc::InvalidArgument);
  CHECK(code_of([] { load_scenario("fiber?genera=1"); }) == Errc::TooFewFactors);

  CHECK(preset_group("quaternion")->order() == 8);
  CHECK(preset_group("elementary2?t=3")->order() == 8);
  CHECK(preset_group("symmetric?n=4")->order() == 24);
  CHECK(code_of([] { preset_group("dihedral?p=3"); }) == Errc::InvalidArgument);
}

TEST_CASE("scenario JSON round trip") {
  for (const auto& name : {"d2q?q=3", "d2q?q=7", "fiber?genera=1,1", "fiber?genera=2,1,1"}) {
    const auto file = *preset_scenario(name);
    const auto json = to_json(file);
    const auto back = scenario_from_json(json);
    CHECK(to_json(back) == json);
    CHECK(to_json(parse_scenario(json.dump(2))) == json);
  }
  for (const auto& entry : fs::directory_iterator(fs::path(ISODEC_DATA_DIR) / "scenarios")) {
    const auto file = load_scenario_file(entry.path());
    CHECK(to_json(scenario_from_json(to_json(file))) == to_json(file));
    CHECK_NOTHROW(resolve_scenario(file));
    if (auto preset = preset_scenario(file.name)) CHECK(to_json(*preset) == to_json(file));
  }
}

TEST_CASE("scenario errors") {
  CHECK(code_of([] { parse_scenario("{\"name\": 1,"); }) == Errc::ParseError);
  try {
    parse_scenario("{\n  \"name\": \"x\",\n  oops\n}");
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  auto json = to_json(*preset_scenario("d2q?q=3"));
  json["action"]["periods"] = "many";
  try {
    scenario_from_json(json);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find("/action/periods") != std::string::npos);
  }

  auto file = *preset_scenario("d2q?q=3");
  file.action.vector.back() = "r";
  CHECK(code_of([&] { resolve_scenario(file); }) == Errc::ValidationError);
  try {
    resolve_scenario(file);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("RelationFails") != std::string::npos);
  }

  file = *preset_scenario("d2q?q=3");
  file.collections[0].subgroups[0].generators = {"t"};
  CHECK(code_of([&] { resolve_scenario(file); }) == Errc::UnknownGenerator);
}

TEST_CASE("run_command examples") {
  auto main = command("analyze", "d2q?q=3");
  main.collections = {"main"};
  const auto r = run_command(main);
  CHECK(r.exit_code == 0);
  CHECK(r.document["collections"][0]["theorem1"]["dim_P"] == 0);
  CHECK(r.document["collections"][0]["theorem1"]["statement"] == "JC ~ JC_H1 x JC_H2 x JC_H3");
  CHECK(r.document["collections"][0]["subgroups"][0]["jacobian"] == "JC_H1 ~ B3 x B5 x B6");
  CHECK(r.document["collections"][0]["subgroups"][2]["jacobian"] == "JC_H3 ~ B2");
  CHECK(r.document["decomposition"] == "JC ~ B1 x B2 x B3 x B4 x B5^2 x B6^2");
  CHECK(r.document["discrepancies"].empty());

  auto h1h4 = command("analyze", "d2q?q=3");
  h1h4.collections = {"h1h4"};
  h1h4.ambient = Ambient::Join;
  const auto d = run_command(h1h4);
  CHECK(d.exit_code == 2);
  REQUIRE_FALSE(d.document["discrepancies"].empty());
  CHECK(d.document["discrepancies"][0]["claim"] == "fixed_dims H4 V6");
  CHECK(d.document["discrepancies"][0]["computed"] == 2);

  auto fiber = command("fiber", "");
  fiber.genera = {1, 1};
  const auto f = run_command(fiber);
  CHECK(f.exit_code == 0);
  CHECK(f.document["plan"]["genus"] == 5);
  CHECK(f.document["plan"]["dim_P"] == 3);

  auto schur = command("analyze", "d2q?q=3");
  schur.collections = {"main"};
  schur.schur = {{5, 2}};
  CHECK(code_of([&] { run_command(schur); }) == Errc::NonIntegralN);
  auto table = command("chartable", "d2q?q=3");
  table.schur = {{5, 2}};
  const auto s = run_command(table);
  CHECK(s.document["rational_classes"][4]["schur_index"] == 2);
  CHECK(s.document["rational_classes"][4]["schur_source"] == "override");

  auto unknown = command("analyze", "d2q?q=3");
  unknown.collections = {"nope"};
  CHECK(code_of([&] { run_command(unknown); }) == Errc::InvalidArgument);
  CHECK(code_of([] { run_command(command("frobnicate", "d2q?q=3")); }) == Errc::InvalidArgument);
}

TEST_CASE("golden reports") {
  for (const auto& c : golden_cases()) {
    CAPTURE(c.file);
    const auto result = run_command(c.options);
    CHECK(result.exit_code == c.exit_code);
    check_golden(c.file + ".txt", render_text(result.document));
    check_golden(c.file + ".json", result.document.dump(2) + "\n");
  }
}

TEST_CASE("text rendering is deterministic and backed by the document") {
  for (const auto& c : golden_cases()) {
    CAPTURE(c.file);
    const auto a = run_command(c.options);
    const auto b = run_command(c.options);
    const auto text = render_text(a.document);
    CHECK(text == render_text(b.document));
    CHECK(a.document == b.document);
    const auto in_doc = numbers_in(a.document.dump());
    for (const auto& n : numbers_in(text)) CHECK_MESSAGE(in_doc.count(n), "number " << n << " not in document");
  }
}

TEST_CASE("document JSON round trip") {
  const auto doc = run_command(command("analyze", "d2q?q=5")).document;
  CHECK(Json::parse(doc.dump()) == doc);
  CHECK(render_text(Json::parse(doc.dump())) == render_text(doc));
}

TEST_CASE("exit codes") {
  CHECK(run_cli("analyze 'd2q?q=3' --collections main") == 0);
  CHECK(run_cli("analyze 'd2q?q=3' --collections h1h4 --ambient join") == 2);
  CHECK(run_cli("analyze 'd2q?q=3' --collections h1h4 --ambient join --format json") == 2);
  CHECK(run_cli("fiber --genera 1,1") == 0);
  CHECK(run_cli("fiber --cor3 5") == 0);
  CHECK(run_cli("chartable quaternion") == 0);
  CHECK(run_cli("theorem-b 'd2q?q=3'") == 0);
  CHECK(run_cli("search 'd2q?q=3' --max-t 3 --require-full --dedupe-conjugates") == 0);
  CHECK(run_cli(std::string("analyze ") + ISODEC_DATA_DIR + "/scenarios/s3_genus1.json") == 0);
  CHECK(run_cli("analyze nosuch") == 1);
  CHECK(run_cli("analyze 'd2q?q=4'") == 1);
  CHECK(run_cli("analyze 'd2q?q=3' --ambient sideways") == 1);
  CHECK(run_cli("analyze 'd2q?q=3' --schur 5") == 1);
  CHECK(run_cli("fiber --genera 1") == 1);
  CHECK(run_cli("") == 1);
  CHECK(run_cli("--version") == 0);
}
