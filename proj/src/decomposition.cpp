#include "isodec/decomposition.hpp"

#include "isodec/error.hpp"

namespace isodec {

Analysis::Analysis(const CoveringAction& action, const ClassSchurOverrides& overrides)
    : branching_(branch_data(action)),
      table_(std::make_shared<const CharacterTable>(character_table(action.group))) {
  build(overrides);
}

Analysis::Analysis(BranchData branching, std::shared_ptr<const CharacterTable> table,
                   const ClassSchurOverrides& overrides)
    : branching_(std::move(branching)), table_(std::move(table)) {
  if (!table_ || table_->group() != branching_.group)
    throw Error(Errc::GroupMismatch, "character table belongs to a different group");
  build(overrides);
}

void Analysis::build(const ClassSchurOverrides& overrides) {
  classes_ = rational_classes(*table_);
  if (!overrides.empty()) {
    SchurOverrides by_irreducible;
    for (const auto& [label, s] : overrides) {
      if (label < 1 || label > classes_.size())
        throw Error(Errc::InvalidArgument, "no rational class V" + std::to_string(label));
      if (s < 1) throw Error(Errc::InvalidArgument, "Schur index must be positive");
      by_irreducible[classes_[label - 1].representative()] = s;
    }
    classes_ = rational_classes(*table_, by_irreducible);
  }
  ensure(classes_.front().members == std::vector<std::size_t>{0}, "trivial class is not first");

  std::vector<Subgroup> stabilizers;
  for (auto c : branching_.stabilizers) {
    const Element seed[] = {c};
    stabilizers.push_back(subgroup_generate(branching_.group, seed));
  }

  factors_.clear();
  const Rational gamma(long(branching_.orbit_genus));
  for (std::size_t l = 0; l < classes_.size(); ++l) {
    if (l == 0) {
      factors_.push_back({0, branching_.orbit_genus});
      continue;
    }
    const auto& w = classes_[l];
    const Rational d(long(w.degree));
    Rational bracket = d * (gamma - 1);
    for (const auto& h : stabilizers) bracket += (d - long(fixed_dim(representative(l), h))) / 2;
    const Rational dim = bracket * long(w.schur_index) * long(w.field_degree);
    if (!is_integer(dim) || dim < 0)
      throw Error(Errc::NonIntegralDimension,
                  "dim B_" + std::to_string(l + 1) + " = " + to_string(dim) + " is not a non-negative integer");
    factors_.push_back({l, to_int64(dim)});
  }

  genus_ = riemann_hurwitz_genus(branching_);
  std::int64_t total = 0;
  for (std::size_t l = 0; l < classes_.size(); ++l) total += std::int64_t(classes_[l].n) * factors_[l].dim_b;
  ensure(total == genus_, "sum n_l dim B_l = " + std::to_string(total) + " differs from g_C = " +
                              std::to_string(genus_));
}

const ClassFunction& Analysis::representative(std::size_t l) const {
  return table_->irreducibles.at(classes_.at(l).representative());
}

std::vector<unsigned> Analysis::fixed_dims(const Subgroup& h) const {
  if (h.parent() != group()) throw Error(Errc::NotASubgroup, "subgroup of a different group");
  std::vector<unsigned> out;
  for (std::size_t l = 0; l < classes_.size(); ++l) out.push_back(fixed_dim(representative(l), h));
  return out;
}

std::int64_t Analysis::quotient_genus(const Subgroup& h) const { return isodec::quotient_genus(branching_, h); }

std::vector<IsotypicalFactor> factor_dimensions(const CoveringAction& action, const ClassSchurOverrides& overrides) {
  return Analysis(action, overrides).factors();
}

SubgroupProfile subgroup_profile(const Analysis& analysis, const Subgroup& h) {
  SubgroupProfile out{h, analysis.quotient_genus(h), {}, analysis.fixed_dims(h)};
  std::int64_t total = 0;
  for (std::size_t l = 0; l < analysis.classes().size(); ++l) {
    const unsigned s = analysis.classes()[l].schur_index;
    if (out.fixed_dims[l] % s != 0)
      throw Error(Errc::NonIntegralN, "d^H = " + std::to_string(out.fixed_dims[l]) + " of V" +
                                          std::to_string(l + 1) + " is not divisible by s = " + std::to_string(s));
    out.exponents.push_back(out.fixed_dims[l] / s);
    total += std::int64_t(out.exponents.back()) * analysis.factors()[l].dim_b;
  }
  ensure(total == out.genus, "sum n^H dim B = " + std::to_string(total) + " differs from g_H = " +
                                 std::to_string(out.genus));
  return out;
}

ClassFunction rational_rep_character(const Analysis& analysis) {
  const auto& cd = analysis.table().classes;
  const auto& group = analysis.group();
  std::vector<CosetAction> fibers;
  for (auto c : analysis.branching().stabilizers) {
    const Element seed[] = {c};
    fibers.push_back(coset_action(subgroup_generate(group, seed)));
  }
  const unsigned e = cd->conductor();
  std::vector<Cyclotomic> values;
  for (std::size_t c = 0; c < cd->size(); ++c) {
    if (c == 0) {
      values.emplace_back(e, Rational(2 * analysis.genus()));
      continue;
    }
    const Element g = cd->classes.representatives[c];
    long fixed = 0;
    for (const auto& fiber : fibers) fixed += long(fiber.fixed_points(g));
    values.emplace_back(e, Rational(2 - fixed));
  }
  return ClassFunction(cd, std::move(values));
}

RationalRepProfile rational_rep_profile(const Analysis& analysis) {
  const auto chi_rac = rational_rep_character(analysis);
  RationalRepProfile out;
  for (std::size_t l = 0; l < analysis.classes().size(); ++l) {
    const auto& w = analysis.classes()[l];
    const Rational by_formula =
        Rational(2 * long(w.n) * analysis.factors()[l].dim_b) / long(w.dim_w());
    const Rational by_trace = inner_product(chi_rac, analysis.representative(l)) / long(w.schur_index);
    if (!is_integer(by_formula) || by_formula < 0)
      throw Error(Errc::NonIntegralMultiplicity,
                  "multiplicity of W_" + std::to_string(l + 1) + " is " + to_string(by_formula));
    ensure(by_formula == by_trace, "multiplicity of W_" + std::to_string(l + 1) + " from dim B (" +
                                       to_string(by_formula) + ") and from traces (" + to_string(by_trace) +
                                       ") differ");
    out.multiplicities.push_back(to_int64(by_formula));
    out.degree += out.multiplicities.back() * std::int64_t(w.dim_w());
  }
  ensure(out.degree == 2 * analysis.genus(), "rational representation degree differs from 2g");
  return out;
}

}  // namespace isodec
