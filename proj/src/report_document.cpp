#include "isodec/report.hpp"

namespace isodec::report {

namespace {

std::string label(char prefix, std::size_t index) { return std::string(1, prefix) + std::to_string(index + 1); }

Json optional_list(const std::vector<std::optional<std::int64_t>>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v ? Json(*v) : Json(nullptr));
  return out;
}

}  // namespace

Json engine_json() { return {{"name", "isodec"}, {"version", std::string(kEngineVersion)}}; }

std::vector<std::string> generator_words(const Subgroup& h) {
  std::vector<std::string> out;
  for (auto g : generating_set(h)) out.push_back(h.parent()->word(g));
  if (out.empty()) out.push_back("id");
  return out;
}

Json group_json(const FiniteGroup& group) {
  Json gens = Json::array();
  for (const auto& [name, g] : group.generators())
    gens.push_back({{"name", name}, {"cycles", group.element(g).cycle_string()}});
  return {{"order", group.order()}, {"degree", group.degree()}, {"exponent", group.exponent()},
          {"generators", gens}};
}

Json character_table_json(const CharacterTable& table) {
  const auto& cd = *table.classes;
  const auto& group = *cd.group;
  Json classes = Json::array();
  for (std::size_t c = 0; c < cd.size(); ++c) {
    const Element rep = cd.classes.representatives[c];
    classes.push_back({{"representative", group.word(rep)},
                       {"size", cd.classes.class_size(c)},
                       {"element_order", group.element_order(rep)}});
  }
  Json irreducibles = Json::array();
  for (std::size_t i = 0; i < table.size(); ++i) {
    Json values = Json::array();
    for (const auto& v : table.irreducibles[i].values()) values.push_back(v.to_string());
    irreducibles.push_back({{"label", "chi" + std::to_string(i + 1)},
                            {"degree", table.degrees[i]},
                            {"indicator", frobenius_schur(table.irreducibles[i])},
                            {"values", values}});
  }
  return {{"conductor", cd.conductor()},
          {"root", "z = zeta_" + std::to_string(cd.conductor())},
          {"prime", table.prime},
          {"classes", classes},
          {"irreducibles", irreducibles}};
}

Json rational_classes_json(const std::vector<RationalClass>& classes, const Analysis* analysis) {
  std::optional<RationalRepProfile> rac;
  if (analysis) rac = rational_rep_profile(*analysis);
  Json out = Json::array();
  for (std::size_t l = 0; l < classes.size(); ++l) {
    const auto& w = classes[l];
    Json members = Json::array();
    for (auto m : w.members) members.push_back("chi" + std::to_string(m + 1));
    Json entry{{"label", label('V', l)},
               {"members", members},
               {"degree", w.degree},
               {"field_degree", w.field_degree},
               {"schur_index", w.schur_index},
               {"schur_source", w.provenance == SchurProvenance::Override ? "override" : "indicator"},
               {"n", w.n},
               {"dim_W", w.dim_w()}};
    if (analysis) {
      entry["dim_B"] = analysis->factors()[l].dim_b;
      entry["rational_multiplicity"] = rac->multiplicities[l];
    }
    out.push_back(entry);
  }
  return out;
}

Json subgroup_json(const SubgroupProfile& profile, const std::string& name,
                   const std::vector<std::string>& generators) {
  return {{"label", name},
          {"generators", generators},
          {"order", profile.subgroup.order()},
          {"genus", profile.genus},
          {"fixed_dims", profile.fixed_dims},
          {"exponents", profile.exponents}};
}

Json admissibility_json(const AdmissibilityReport& r) {
  return {{"ambient", to_string(r.ambient)},
          {"ambient_order", r.ambient_order},
          {"ambient_orbit_genus", r.ambient_orbit_genus},
          {"degrees", r.degrees},
          {"dim_B", r.dim_b},
          {"fixed_dims", r.fixed_dims},
          {"sums", r.sums},
          {"slacks", optional_list(r.slacks)},
          {"admissible", r.admissible}};
}

Json theorem1_json(const DecompositionReport& r) {
  return {{"ambient", to_string(r.admissibility.ambient)},
          {"genus", r.total_genus},
          {"genera", r.genera},
          {"delta_tilde", optional_list(r.delta_tilde)},
          {"dim_P", r.dim_p},
          {"full", r.full},
          {"statement", r.statement}};
}

Json corollary1_json(const Corollary1Report& r) {
  return {{"k", r.k + 1},
          {"prym_dim", r.prym_dim},
          {"others_genus", r.others_genus},
          {"contained", r.contained},
          {"equality", r.equality}};
}

Json prop1_json(const Prop1Report& r) {
  Json out{{"statement1", r.statement1},
           {"statement2", r.statement2},
           {"statement3", r.statement3},
           {"support", r.support},
           {"multiplicities", r.multiplicities},
           {"special_case", r.special_case}};
  if (r.regular_form) out["regular_form"] = *r.regular_form;
  if (r.a1_by_degree) out["a1_by_degree"] = *r.a1_by_degree;
  if (r.a1_by_trivial) out["a1_by_trivial"] = *r.a1_by_trivial;
  return out;
}

Json prop2_json(const Prop2Report& r) {
  return {{"join_order", r.join.order()},
          {"join_generators", generator_words(r.join)},
          {"genus", r.total_genus},
          {"genus_h1", r.genus_h1},
          {"genus_h2", r.genus_h2},
          {"genus_join", r.genus_join},
          {"slacks", r.slacks},
          {"dim_P", r.dim_p},
          {"join_genus_zero", r.join_genus_zero},
          {"full", r.full},
          {"statement", r.statement}};
}

Json theorem_b_json(const TheoremBReport& r) {
  return {{"t", r.t},
          {"characters_agree", r.characters_agree},
          {"class_lhs", r.class_lhs},
          {"class_rhs", r.class_rhs},
          {"classes_agree", r.classes_agree},
          {"genera", r.genera},
          {"dimension_lhs", r.dimension_lhs},
          {"dimension_rhs", r.dimension_rhs},
          {"holds", r.holds()}};
}

Json theorem_c_json(const TheoremCReport& r) {
  auto pairs = [](const std::vector<std::pair<std::size_t, std::size_t>>& v) {
    Json out = Json::array();
    for (const auto& [i, j] : v) out.push_back({i + 1, j + 1});
    return out;
  };
  return {{"permute", r.permute},
          {"joins_genus_zero", r.joins_genus_zero ? Json(*r.joins_genus_zero) : Json(nullptr)},
          {"genus_sum", r.genus_sum},
          {"non_permuting", pairs(r.non_permuting)},
          {"positive_join_genus", pairs(r.positive_join_genus)},
          {"applies", r.applies()}};
}

Json fiber_json(const FiberPlan& plan) {
  const auto& group = *plan.action.group;
  Json vector = Json::array();
  for (auto c : plan.action.branch_elements) vector.push_back(group.word(c));
  Json kernels = Json::array();
  for (std::size_t i = 0; i < plan.kernels.size(); ++i)
    kernels.push_back({{"label", label('K', i)},
                       {"generators", generator_words(plan.kernels[i])},
                       {"order", plan.kernels[i].order()},
                       {"genus", plan.kernel_genera[i]}});
  Json out{{"mode", plan.elliptic_count ? "elliptic" : "genera"},
           {"genera", plan.genera},
           {"group_order", group.order()},
           {"periods", plan.action.periods},
           {"vector", vector},
           {"kernels", kernels},
           {"genus", plan.genus},
           {"predicted_genus", plan.predicted_genus},
           {"admissible", plan.admissible},
           {"dim_P", plan.dim_p},
           {"predicted_dim_P", plan.predicted_dim_p}};
  if (plan.elliptic_count) {
    out["elliptic_count"] = *plan.elliptic_count;
    Json pairing = Json::array();
    for (const auto& [a, b] : plan.pairing) pairing.push_back({a, b});
    out["pairing"] = pairing;
  }
  return out;
}

}  // namespace isodec::report
