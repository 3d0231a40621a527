#include <algorithm>

#include "isodec/error.hpp"
#include "isodec/report.hpp"

namespace isodec {

namespace {

struct Discrepancies {
  Json list = Json::array();

  // Records one claim against its computed value; returns the check entry.
  Json check(const std::string& collection, const std::string& claim, const Json& expected, const Json& computed) {
    const bool ok = expected == computed;
    if (!ok)
      list.push_back({{"collection", collection},
                      {"claim", claim},
                      {"expected", expected},
                      {"computed", computed},
                      {"note", "claimed " + expected.dump() + ", computed " + computed.dump()}});
    return {{"claim", claim}, {"expected", expected}, {"computed", computed}, {"ok", ok}};
  }
};

std::vector<std::size_t> selected_collections(const ScenarioFile& file, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  if (names.empty()) {
    for (std::size_t c = 0; c < file.collections.size(); ++c) out.push_back(c);
    return out;
  }
  for (const auto& name : names) {
    auto it = std::find_if(file.collections.begin(), file.collections.end(),
                           [&](const CollectionSpec& c) { return c.name == name; });
    if (it == file.collections.end())
      throw Error(Errc::InvalidArgument, "scenario " + file.name + " has no collection '" + name + "'");
    out.push_back(std::size_t(it - file.collections.begin()));
  }
  return out;
}

// "B1 x B5^2"; factors with exponent 0 or dim B = 0 are left out unless keep_zero.
std::string factor_product(const Analysis& analysis, const std::vector<unsigned>& exponents, bool keep_zero) {
  std::string out;
  for (std::size_t l = 0; l < exponents.size(); ++l) {
    if (!keep_zero && (exponents[l] == 0 || analysis.factors()[l].dim_b == 0)) continue;
    out += (out.empty() ? "" : " x ") + ("B" + std::to_string(l + 1));
    if (exponents[l] > 1) out += "^" + std::to_string(exponents[l]);
  }
  return out.empty() ? "0" : out;
}

std::string jacobian_product(const CollectionSpec& spec) {
  std::string out;
  for (const auto& h : spec.subgroups) out += (out.empty() ? "JC_" : " x JC_") + h.label;
  return out;
}

Json action_json(const Scenario& scenario, const Analysis& analysis) {
  const auto cert = validate_action(scenario.action);
  Json handles = Json::array();
  for (const auto& [a, b] : scenario.file.action.handles) handles.push_back({a, b});
  return {{"orbit_genus", scenario.action.orbit_genus},
          {"periods", scenario.action.periods},
          {"handles", handles},
          {"vector", scenario.file.action.vector},
          {"genus", analysis.genus()},
          {"branch_number", to_string(cert.branch_number)}};
}

Json analysis_header(const Scenario& scenario, const Analysis& analysis, const std::string& command) {
  Json doc;
  doc["engine"] = report::engine_json();
  doc["command"] = command;
  doc["scenario"] = to_json(scenario.file);
  doc["group"] = report::group_json(*scenario.group);
  doc["action"] = action_json(scenario, analysis);
  return doc;
}

std::optional<TheoremBReport> try_theorem_b(const Analysis& analysis, const std::vector<Subgroup>& members,
                                            std::string& reason) {
  try {
    return theoremB_report(analysis, members);
  } catch (const Error& e) {
    if (e.code() != Errc::NotAPartition) throw;
    reason = std::string(e.what()).substr(errc_name(e.code()).size() + 2);
    return std::nullopt;
  }
}

Json collection_json(const Analysis& analysis, const CollectionSpec& spec, const std::vector<Subgroup>& members,
                     Ambient ambient, Discrepancies& notes) {
  Json out;
  out["name"] = spec.name;
  out["ambient"] = to_string(ambient);

  Json subgroups = Json::array();
  std::int64_t genus_sum = 0;
  std::vector<std::int64_t> genera;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto profile = subgroup_profile(analysis, members[i]);
    auto entry = report::subgroup_json(profile, spec.subgroups[i].label, spec.subgroups[i].generators);
    entry["prym_dim"] = prym_dim(analysis, members[i]);
    entry["jacobian"] = "JC_" + spec.subgroups[i].label + " ~ " + factor_product(analysis, profile.exponents, false);
    subgroups.push_back(entry);
    genera.push_back(profile.genus);
    genus_sum += profile.genus;
  }
  out["subgroups"] = subgroups;
  out["genus_sum"] = genus_sum;
  out["complement_dim"] = analysis.genus() - genus_sum;

  const auto acting = check_admissible(analysis, members);
  out["admissibility"] = report::admissibility_json(acting);
  std::optional<AdmissibilityReport> joined;
  if (ambient == Ambient::Join || spec.claims.admissible_join) {
    joined = check_admissible(analysis, members, Ambient::Join);
    out["admissibility_join"] = report::admissibility_json(*joined);
  }
  const auto& primary = ambient == Ambient::Join ? *joined : acting;
  if (primary.admissible) {
    const auto t1 = theorem1_report(analysis, members, ambient);
    auto entry = report::theorem1_json(t1);
    entry["statement"] =
        "JC ~ " + jacobian_product(spec) + (t1.full ? "" : " x P, dim P = " + std::to_string(t1.dim_p));
    out["theorem1"] = entry;
  } else {
    out["theorem1"] = nullptr;
  }

  Json corollary1 = Json::array();
  if (acting.admissible)
    for (std::size_t k = 0; k < members.size(); ++k)
      corollary1.push_back(report::corollary1_json(corollary1_check(analysis, members, k)));
  out["corollary1"] = corollary1;
  out["prop1"] = report::prop1_json(prop1_equivalence(analysis, members));
  if (members.size() == 2) {
    const auto p2 = prop2_report(analysis, members[0], members[1]);
    auto entry = report::prop2_json(p2);
    const auto& a = spec.subgroups[0].label;
    const auto& b = spec.subgroups[1].label;
    entry["statement"] = p2.full ? "JC ~ JC_" + a + " x JC_" + b
                                 : "JC x JC_<" + a + "," + b + "> ~ JC_" + a + " x JC_" + b + " x P, dim P = " +
                                       std::to_string(p2.dim_p);
    out["prop2"] = entry;
  }

  std::string reason;
  const auto theorem_b = try_theorem_b(analysis, members, reason);
  out["theorem_b"] = theorem_b ? report::theorem_b_json(*theorem_b) : Json{{"partition", false}, {"reason", reason}};
  const auto theorem_c = theoremC_check(analysis, members);
  out["theorem_c"] = report::theorem_c_json(theorem_c);

  const auto& c = spec.claims;
  Json checks = Json::array();
  if (c.fixed_dims) {
    const auto& rows = *c.fixed_dims;
    if (rows.size() != members.size())
      checks.push_back(notes.check(spec.name, "fixed_dims rows", Json(members.size()), Json(rows.size())));
    for (std::size_t i = 0; i < std::min(rows.size(), members.size()); ++i) {
      const auto& computed = acting.fixed_dims[i];
      if (rows[i].size() + 1 != computed.size()) {
        checks.push_back(notes.check(spec.name, "fixed_dims " + spec.subgroups[i].label + " columns",
                                     Json(computed.size() - 1), Json(rows[i].size())));
        continue;
      }
      for (std::size_t l = 0; l < rows[i].size(); ++l)
        checks.push_back(notes.check(spec.name, "fixed_dims " + spec.subgroups[i].label + " V" + std::to_string(l + 2),
                                     Json(rows[i][l]), Json(computed[l + 1])));
    }
  }
  if (c.genera) checks.push_back(notes.check(spec.name, "genera", Json(*c.genera), Json(genera)));
  if (c.admissible)
    checks.push_back(notes.check(spec.name, "admissible", Json(*c.admissible), Json(acting.admissible)));
  if (c.admissible_join)
    checks.push_back(notes.check(spec.name, "admissible_join", Json(*c.admissible_join), Json(joined->admissible)));
  if (c.dim_p)
    checks.push_back(notes.check(spec.name, "dim_P", Json(*c.dim_p), Json(analysis.genus() - genus_sum)));
  if (c.full)
    checks.push_back(notes.check(spec.name, "full", Json(*c.full),
                                 Json(acting.admissible && analysis.genus() == genus_sum)));
  if (c.theorem_b)
    checks.push_back(notes.check(spec.name, "theorem_b", Json(*c.theorem_b),
                                 Json(theorem_b.has_value() && theorem_b->holds())));
  if (c.theorem_c)
    checks.push_back(notes.check(spec.name, "theorem_c", Json(*c.theorem_c), Json(theorem_c.applies())));
  out["checks"] = checks;
  return out;
}

ClassSchurOverrides merged_schur(const ScenarioFile& file, const CommandOptions& options) {
  auto out = file.options.schur;
  for (const auto& [l, s] : options.schur) out[l] = s;
  return out;
}

CommandResult finish(Json doc, const Discrepancies& notes, bool failed = false) {
  doc["discrepancies"] = notes.list;
  const bool ok = notes.list.empty() && !failed;
  doc["status"] = ok ? "ok" : "discrepancy";
  doc["exit_code"] = ok ? kExitOk : kExitCheckFailed;
  const int code = doc["exit_code"].get<int>();
  return {std::move(doc), code};
}

CommandResult run_analyze(const CommandOptions& options) {
  const auto file = load_scenario(options.target);
  const auto scenario = resolve_scenario(file, options.max_order);
  const Analysis analysis(scenario.action, merged_schur(file, options));
  Json doc = analysis_header(scenario, analysis, "analyze");
  doc["character_table"] = report::character_table_json(analysis.table());
  doc["rational_classes"] = report::rational_classes_json(analysis.classes(), &analysis);
  std::int64_t total = 0;
  for (std::size_t l = 0; l < analysis.classes().size(); ++l)
    total += std::int64_t(analysis.classes()[l].n) * analysis.factors()[l].dim_b;
  doc["conservation"] = {{"sum_n_dim_B", total}, {"genus", analysis.genus()}};
  std::vector<unsigned> exponents;
  for (const auto& w : analysis.classes()) exponents.push_back(w.n);
  doc["decomposition"] = "JC ~ " + factor_product(analysis, exponents, true);

  Discrepancies notes;
  Json collections = Json::array();
  for (auto c : selected_collections(file, options.collections))
    collections.push_back(
        collection_json(analysis, file.collections[c], scenario.collections[c], options.ambient, notes));
  doc["collections"] = collections;
  return finish(std::move(doc), notes);
}

CommandResult run_search(const CommandOptions& options) {
  const auto file = load_scenario(options.target);
  const auto scenario = resolve_scenario(file, options.max_order);
  const Analysis analysis(scenario.action, merged_schur(file, options));
  Json doc = analysis_header(scenario, analysis, "search");
  SearchOptions search{options.max_t, options.require_full, options.dedupe_conjugates,
                       options.max_order.value_or(512)};
  doc["options"] = {{"max_t", search.max_t},
                    {"require_full", search.require_full},
                    {"dedupe_conjugates", search.dedupe_conjugates}};
  const auto results = search_admissible(analysis, search);
  Json list = Json::array();
  for (const auto& r : results) {
    Json subgroups = Json::array();
    std::int64_t genus_sum = 0;
    for (const auto& h : r.collection) {
      const auto g = analysis.quotient_genus(h);
      genus_sum += g;
      subgroups.push_back({{"generators", report::generator_words(h)}, {"order", h.order()}, {"genus", g}});
    }
    list.push_back({{"subgroups", subgroups},
                    {"sums", r.sums},
                    {"genus_sum", genus_sum},
                    {"full", genus_sum == analysis.genus()}});
  }
  doc["result_count"] = results.size();
  doc["results"] = list;
  return finish(std::move(doc), {});
}

CommandResult run_fiber(const CommandOptions& options) {
  if (options.cor3 && !options.genera.empty())
    throw Error(Errc::InvalidArgument, "--genera and --cor3 are exclusive");
  if (!options.cor3 && options.genera.empty()) throw Error(Errc::InvalidArgument, "fiber needs --genera or --cor3");
  const auto plan = options.cor3 ? cor3_plan(*options.cor3) : fiber_product_action(options.genera);
  Json doc;
  doc["engine"] = report::engine_json();
  doc["command"] = "fiber";
  doc["plan"] = report::fiber_json(plan);
  Discrepancies notes;
  Json checks = Json::array();
  checks.push_back(notes.check("plan", "genus", Json(plan.predicted_genus), Json(plan.genus)));
  checks.push_back(notes.check("plan", "dim_P", Json(plan.predicted_dim_p), Json(plan.dim_p)));
  checks.push_back(notes.check("plan", "admissible", Json(true), Json(plan.admissible)));
  doc["checks"] = checks;
  return finish(std::move(doc), notes);
}

CommandResult run_chartable(const CommandOptions& options) {
  GroupPtr group;
  std::string source = options.target;
  ClassSchurOverrides schur = options.schur;
  if (auto preset = preset_scenario(options.target)) {
    group = build_group(preset->group, options.max_order.value_or(kDefaultMaxOrder));
  } else if (std::filesystem::exists(options.target)) {
    const auto file = load_scenario_file(options.target);
    group = build_group(file.group, options.max_order.value_or(file.options.max_order));
    schur = merged_schur(file, options);
  } else {
    group = preset_group(options.target, options.max_order.value_or(kDefaultMaxOrder));
  }
  const auto table = character_table(group);
  auto classes = rational_classes(table);
  if (!schur.empty()) {
    SchurOverrides by_irreducible;
    for (const auto& [l, s] : schur) {
      if (l < 1 || l > classes.size()) throw Error(Errc::InvalidArgument, "no rational class V" + std::to_string(l));
      by_irreducible[classes[l - 1].representative()] = s;
    }
    classes = rational_classes(table, by_irreducible);
  }
  Json doc;
  doc["engine"] = report::engine_json();
  doc["command"] = "chartable";
  doc["source"] = source;
  doc["group"] = report::group_json(*group);
  doc["character_table"] = report::character_table_json(table);
  doc["rational_classes"] = report::rational_classes_json(classes, nullptr);
  return finish(std::move(doc), {});
}

CommandResult run_theorem_b(const CommandOptions& options) {
  const auto file = load_scenario(options.target);
  const auto scenario = resolve_scenario(file, options.max_order);
  const Analysis analysis(scenario.action, merged_schur(file, options));
  Json doc = analysis_header(scenario, analysis, "theorem-b");
  Discrepancies notes;
  bool failed = false;
  Json reports = Json::array();
  for (auto c : selected_collections(file, options.collections)) {
    const auto& spec = file.collections[c];
    const auto& members = scenario.collections[c];
    std::string reason;
    auto tb = try_theorem_b(analysis, members, reason);
    if (!tb) {
      if (!options.collections.empty()) throw Error(Errc::NotAPartition, spec.name + ": " + reason);
      continue;
    }
    Json subgroups = Json::array();
    for (std::size_t i = 0; i < members.size(); ++i)
      subgroups.push_back({{"label", spec.subgroups[i].label},
                           {"generators", spec.subgroups[i].generators},
                           {"order", members[i].order()},
                           {"genus", tb->genera[i]}});
    Json entry{{"collection", spec.name}, {"subgroups", subgroups}, {"report", report::theorem_b_json(*tb)}};
    if (spec.claims.theorem_b)
      entry["check"] = notes.check(spec.name, "theorem_b", Json(*spec.claims.theorem_b), Json(tb->holds()));
    failed = failed || !tb->holds();
    reports.push_back(entry);
  }
  if (reports.empty()) throw Error(Errc::NotAPartition, "no collection of " + file.name + " partitions the group");
  doc["reports"] = reports;
  return finish(std::move(doc), notes, failed);
}

}  // namespace

CommandResult run_command(const CommandOptions& options) {
  if (options.command == "analyze") return run_analyze(options);
  if (options.command == "search") return run_search(options);
  if (options.command == "fiber") return run_fiber(options);
  if (options.command == "chartable") return run_chartable(options);
  if (options.command == "theorem-b") return run_theorem_b(options);
  throw Error(Errc::InvalidArgument, "unknown command '" + options.command + "'");
}

}  // namespace isodec
