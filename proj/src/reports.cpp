#include <numeric>

#include "isodec/decomposition.hpp"
#include "isodec/error.hpp"

namespace isodec {

namespace {

void check_members(const Analysis& analysis, std::span<const Subgroup> collection) {
  if (collection.empty()) throw Error(Errc::InvalidArgument, "empty collection");
  for (const auto& h : collection)
    if (h.parent() != analysis.group()) throw Error(Errc::NotASubgroup, "subgroup of a different group");
}

AdmissibilityReport evaluate(const Analysis& ambient, std::span<const Subgroup> inside) {
  AdmissibilityReport out;
  out.ambient_order = ambient.group()->order();
  out.ambient_orbit_genus = ambient.orbit_genus();
  const std::size_t r = ambient.classes().size();
  for (std::size_t l = 0; l < r; ++l) {
    out.degrees.push_back(ambient.classes()[l].degree);
    out.schur_indices.push_back(ambient.classes()[l].schur_index);
    out.dim_b.push_back(ambient.factors()[l].dim_b);
  }
  out.sums.assign(r, 0);
  for (const auto& h : inside) {
    out.fixed_dims.push_back(ambient.fixed_dims(h));
    for (std::size_t l = 0; l < r; ++l) out.sums[l] += out.fixed_dims.back()[l];
  }
  out.admissible = true;
  for (std::size_t l = 0; l < r; ++l) {
    if (out.dim_b[l] == 0) {
      out.slacks.emplace_back();
      continue;
    }
    out.slacks.emplace_back(std::int64_t(out.degrees[l]) - std::int64_t(out.sums[l]));
    if (*out.slacks.back() < 0) out.admissible = false;
  }
  return out;
}

std::string jacobian_product(std::size_t t) {
  std::string s;
  for (std::size_t i = 1; i <= t; ++i) s += (i > 1 ? " x JC_H" : "JC_H") + std::to_string(i);
  return s;
}

}  // namespace

std::string to_string(Ambient ambient) { return ambient == Ambient::Acting ? "acting" : "join"; }

AdmissibilityReport check_admissible(const Analysis& analysis, std::span<const Subgroup> collection,
                                     Ambient ambient) {
  check_members(analysis, collection);
  AdmissibilityReport out;
  if (ambient == Ambient::Acting) {
    out = evaluate(analysis, collection);
  } else {
    Subgroup j = collection.front();
    for (const auto& h : collection.subspan(1)) j = join(j, h);
    const auto restriction = restrict_action(analysis.branching(), j);
    const Analysis inner(restriction.branching,
                         std::make_shared<const CharacterTable>(character_table(restriction.group)));
    std::vector<Subgroup> moved;
    for (const auto& h : collection) moved.push_back(transport(restriction, h));
    out = evaluate(inner, moved);
  }
  out.ambient = ambient;
  out.collection.assign(collection.begin(), collection.end());
  return out;
}

DecompositionReport theorem1_report(const Analysis& analysis, std::span<const Subgroup> collection,
                                    Ambient ambient) {
  DecompositionReport out;
  out.admissibility = check_admissible(analysis, collection, ambient);
  if (!out.admissibility.admissible)
    throw Error(Errc::NotAdmissible, "the collection is not " + to_string(ambient) + "-admissible");
  out.total_genus = analysis.genus();
  std::int64_t genus_sum = 0;
  for (const auto& h : collection) {
    out.genera.push_back(analysis.quotient_genus(h));
    genus_sum += out.genera.back();
  }
  const auto& adm = out.admissibility;
  for (std::size_t l = 0; l < adm.slacks.size(); ++l) {
    if (!adm.slacks[l]) {
      out.delta_tilde.emplace_back();
      continue;
    }
    ensure(*adm.slacks[l] % adm.schur_indices[l] == 0, "slack not divisible by the Schur index");
    out.delta_tilde.emplace_back(*adm.slacks[l] / adm.schur_indices[l]);
    out.dim_p += *out.delta_tilde.back() * adm.dim_b[l];
  }
  ensure(out.dim_p == out.total_genus - genus_sum,
         "dim P from slacks (" + std::to_string(out.dim_p) + ") differs from g_C - sum g_H (" +
             std::to_string(out.total_genus - genus_sum) + ")");
  out.full = out.dim_p == 0;
  out.statement = "JC ~ " + jacobian_product(collection.size());
  if (!out.full) out.statement += " x P, dim P = " + std::to_string(out.dim_p);
  return out;
}

Prop2Report prop2_report(const Analysis& analysis, const Subgroup& h1, const Subgroup& h2) {
  const Subgroup pair[] = {h1, h2};
  check_members(analysis, pair);
  Prop2Report out{h1, h2, join(h1, h2), 0, 0, 0, 0, {}, 0, false, false, {}};
  const auto p1 = subgroup_profile(analysis, h1);
  const auto p2 = subgroup_profile(analysis, h2);
  const auto pj = subgroup_profile(analysis, out.join);
  out.total_genus = analysis.genus();
  out.genus_h1 = p1.genus;
  out.genus_h2 = p2.genus;
  out.genus_join = pj.genus;
  std::int64_t weighted = 0;
  for (std::size_t l = 0; l < analysis.classes().size(); ++l) {
    const std::int64_t slack = std::int64_t(analysis.classes()[l].n) + pj.exponents[l] - p1.exponents[l] -
                               p2.exponents[l];
    ensure(slack >= 0, "negative slack on V" + std::to_string(l + 1));
    out.slacks.push_back(slack);
    weighted += slack * analysis.factors()[l].dim_b;
  }
  out.dim_p = out.total_genus + out.genus_join - out.genus_h1 - out.genus_h2;
  ensure(weighted == out.dim_p, "dim P from slacks differs from the genus count");
  out.join_genus_zero = out.genus_join == 0;
  out.full = out.join_genus_zero && out.total_genus == out.genus_h1 + out.genus_h2;
  if (out.full) ensure(out.dim_p == 0, "degenerate join leaves a nonzero complement");
  out.statement = out.full ? "JC ~ JC_H1 x JC_H2"
                           : "JC x JC_<H1,H2> ~ JC_H1 x JC_H2 x P, dim P = " + std::to_string(out.dim_p);
  return out;
}

std::int64_t prym_dim(const Analysis& analysis, const Subgroup& h) {
  return analysis.genus() - analysis.quotient_genus(h);
}

Corollary1Report corollary1_check(const Analysis& analysis, std::span<const Subgroup> collection, std::size_t k) {
  if (k >= collection.size()) throw Error(Errc::InvalidArgument, "k is outside the collection");
  if (!check_admissible(analysis, collection).admissible)
    throw Error(Errc::NotAdmissible, "the collection is not admissible");
  Corollary1Report out;
  out.k = k;
  out.prym_dim = prym_dim(analysis, collection[k]);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < collection.size(); ++i) {
    const auto g = analysis.quotient_genus(collection[i]);
    total += g;
    if (i != k) out.others_genus += g;
  }
  out.contained = out.others_genus <= out.prym_dim;
  out.equality = out.others_genus == out.prym_dim;
  out.full = total == analysis.genus();
  ensure(out.contained, "complementary Jacobians exceed the Prym dimension");
  ensure(out.equality == out.full, "Prym equality and full decomposition disagree");
  return out;
}

Prop1Report prop1_equivalence(const Analysis& analysis, std::span<const Subgroup> collection) {
  check_members(analysis, collection);
  const auto& cd = analysis.table().classes;
  const std::size_t r = analysis.classes().size();
  const std::int64_t order = std::int64_t(analysis.group()->order());
  Prop1Report out;

  std::int64_t genus_sum = 0;
  for (const auto& h : collection) genus_sum += analysis.quotient_genus(h);
  out.statement1 = check_admissible(analysis, collection).admissible && genus_sum == analysis.genus();

  out.statement2 = true;
  for (std::size_t l = 0; l < r; ++l) {
    if (analysis.factors()[l].dim_b == 0) continue;
    Rational sum;
    for (const auto& h : collection) sum += fixed_space_average(analysis.representative(l), h);
    if (sum != long(analysis.classes()[l].degree)) out.statement2 = false;
  }

  auto total = ClassFunction::zero(cd);
  for (const auto& h : collection) total += permutation_character(cd, h);
  const auto chi_rac = rational_rep_character(analysis);
  out.statement3 = true;
  for (std::size_t l = 0; l < r; ++l) {
    const auto& w = analysis.classes()[l];
    out.support.push_back(inner_product(chi_rac, analysis.representative(l)) != 0);
    const Rational mult = inner_product(total, analysis.representative(l)) / long(w.schur_index);
    ensure(is_integer(mult) && mult >= 0, "permutation characters give a non-integral multiplicity");
    out.multiplicities.push_back(to_int64(mult));
    if (out.support.back() && out.multiplicities.back() != std::int64_t(w.n)) out.statement3 = false;
  }
  ensure(out.statement1 == out.statement2 && out.statement2 == out.statement3,
         "the three equivalent statements disagree");

  out.special_case = !out.support[0];
  for (std::size_t l = 1; l < r; ++l) out.special_case = out.special_case && out.support[l];
  if (out.special_case) {
    const long t = long(collection.size());
    out.regular_form = total == regular_character(cd) + trivial_character(cd) * Rational(t - 1);
    Rational a1(1);
    Rational inverse_orders;
    for (const auto& h : collection) inverse_orders += Rational(1, long(h.order()));
    a1 += Rational(order) * (inverse_orders - 1);
    if (is_integer(a1)) out.a1_by_degree = to_int64(a1);
    out.a1_by_trivial = out.multiplicities[0];
    if (out.statement3) {
      ensure(*out.regular_form, "sum of permutation representations is not rho_reg + (t-1) W_1");
      ensure(out.a1_by_degree == t && out.a1_by_trivial == t, "a_1 differs from t");
    }
  }
  return out;
}

TheoremBReport theoremB_report(const Analysis& analysis, std::span<const Subgroup> collection) {
  check_members(analysis, collection);
  const auto& group = *analysis.group();
  const auto check = is_partition(analysis.group(), collection);
  if (!check.is_partition) {
    if (check.uncovered)
      throw Error(Errc::NotAPartition, "element " + group.word(*check.uncovered) + " lies in no member");
    const auto& o = *check.overlap;
    throw Error(Errc::NotAPartition, "members " + std::to_string(o.first + 1) + " and " +
                                         std::to_string(o.second + 1) + " share " + group.word(o.element));
  }
  const auto& cd = analysis.table().classes;
  const long t = long(collection.size());
  const long order = long(group.order());
  TheoremBReport out;
  out.t = collection.size();

  auto lhs = ClassFunction::zero(cd);
  for (const auto& h : collection) lhs += permutation_character(cd, h) * Rational(long(h.order()));
  out.characters_agree = lhs == regular_character(cd) * Rational(t - 1) + trivial_character(cd) * Rational(order);

  const std::size_t r = analysis.classes().size();
  out.class_lhs.assign(r, 0);
  out.class_rhs.assign(r, 0);
  for (const auto& h : collection) {
    const auto dims = analysis.fixed_dims(h);
    for (std::size_t l = 0; l < r; ++l) out.class_lhs[l] += std::int64_t(dims[l]) * std::int64_t(h.order());
  }
  out.classes_agree = true;
  for (std::size_t l = 0; l < r; ++l) {
    out.class_rhs[l] = (t - 1) * std::int64_t(analysis.classes()[l].degree);
    if (l > 0 && out.class_lhs[l] != out.class_rhs[l]) out.classes_agree = false;
  }

  out.dimension_lhs = (t - 1) * analysis.genus() + order * analysis.orbit_genus();
  for (const auto& h : collection) {
    out.genera.push_back(analysis.quotient_genus(h));
    out.dimension_rhs += std::int64_t(h.order()) * out.genera.back();
  }
  return out;
}

TheoremCReport theoremC_check(const Analysis& analysis, std::span<const Subgroup> collection) {
  check_members(analysis, collection);
  TheoremCReport out;
  out.permute = true;
  std::vector<Subgroup> joins;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < collection.size(); ++i) {
    for (std::size_t j = i + 1; j < collection.size(); ++j) {
      const auto& a = collection[i];
      const auto& b = collection[j];
      std::size_t meet = 0;
      for (auto g : a.members()) meet += b.contains(g) ? 1 : 0;
      // H_i H_j is a subgroup exactly when it fills the join.
      const auto joined = join(a, b);
      if (a.order() * b.order() / meet != joined.order()) {
        out.permute = false;
        out.non_permuting.emplace_back(i, j);
      }
      joins.push_back(joined);
      pairs.emplace_back(i, j);
    }
  }
  if (out.permute) {
    out.joins_genus_zero = true;
    for (std::size_t p = 0; p < joins.size(); ++p) {
      if (analysis.quotient_genus(joins[p]) != 0) {
        out.joins_genus_zero = false;
        out.positive_join_genus.push_back(pairs[p]);
      }
    }
  }
  std::int64_t total = 0;
  for (const auto& h : collection) total += analysis.quotient_genus(h);
  out.genus_sum = total == analysis.genus();
  return out;
}

}  // namespace isodec
