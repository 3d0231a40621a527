#include "isodec/characters.hpp"

#include <algorithm>
#include <numeric>

#include "isodec/error.hpp"

namespace isodec {

ClassDataPtr make_class_data(GroupPtr group) {
  auto cd = std::make_shared<ClassData>();
  cd->group = group;
  cd->classes = conjugacy_classes(*group);
  const std::size_t k = cd->classes.size();
  const unsigned e = group->exponent();
  cd->inverse_class.resize(k);
  cd->power_class.assign(k, std::vector<std::size_t>(e));
  for (std::size_t c = 0; c < k; ++c) {
    const Element g = cd->classes.representatives[c];
    cd->inverse_class[c] = cd->classes.class_of[group->inv(g)];
    Element x = 0;
    for (unsigned j = 0; j < e; ++j) {
      cd->power_class[c][j] = cd->classes.class_of[x];
      x = group->mul(x, g);
    }
  }
  return cd;
}

// ---------------------------------------------------------------------------
// ClassFunction

ClassFunction::ClassFunction(ClassDataPtr classes, std::vector<Cyclotomic> values)
    : classes_(std::move(classes)), values_(std::move(values)) {
  if (values_.size() != classes_->size())
    throw Error(Errc::InvalidArgument, "class function needs one value per conjugacy class");
  for (const auto& v : values_)
    if (v.conductor() != classes_->conductor())
      throw Error(Errc::ConductorMismatch, "class function values must live in Q(zeta_e)");
}

ClassFunction ClassFunction::zero(ClassDataPtr classes) {
  return constant(std::move(classes), Rational(0));
}

ClassFunction ClassFunction::constant(ClassDataPtr classes, const Rational& value) {
  const unsigned e = classes->conductor();
  std::vector<Cyclotomic> values(classes->size(), Cyclotomic(e, value));
  return ClassFunction(std::move(classes), std::move(values));
}

bool ClassFunction::is_rational_valued() const {
  return std::all_of(values_.begin(), values_.end(), [](const Cyclotomic& v) { return v.is_rational(); });
}

void ClassFunction::check_compatible(const ClassFunction& rhs) const {
  if (classes_ != rhs.classes_ && classes_->group != rhs.classes_->group)
    throw Error(Errc::GroupMismatch, "class functions of different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& rhs) {
  check_compatible(rhs);
  for (std::size_t c = 0; c < values_.size(); ++c) values_[c] += rhs.values_[c];
  return *this;
}

ClassFunction ClassFunction::operator+(const ClassFunction& rhs) const {
  ClassFunction out(*this);
  out += rhs;
  return out;
}

ClassFunction ClassFunction::operator-(const ClassFunction& rhs) const {
  check_compatible(rhs);
  ClassFunction out(*this);
  for (std::size_t c = 0; c < values_.size(); ++c) out.values_[c] -= rhs.values_[c];
  return out;
}

ClassFunction ClassFunction::operator*(const Rational& scale) const {
  ClassFunction out(*this);
  for (auto& v : out.values_) v = v * scale;
  return out;
}

ClassFunction ClassFunction::galois(long long k) const {
  ClassFunction out(*this);
  for (auto& v : out.values_) v = v.galois(k);
  return out;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.classes_->group == b.classes_->group && a.values_ == b.values_;
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.classes()->group != b.classes()->group)
    throw Error(Errc::GroupMismatch, "inner product of class functions on different groups");
  const auto& cd = *a.classes();
  Cyclotomic sum(cd.conductor());
  for (std::size_t c = 0; c < cd.size(); ++c) {
    const auto& x = a.on_class(c);
    if (x.is_zero()) continue;
    sum += x * b.on_class(c).conj() * Rational(long(cd.classes.class_size(c)));
  }
  const Rational total = sum.rational_value();
  return total / Rational(long(cd.group->order()));
}

ClassFunction trivial_character(const ClassDataPtr& classes) {
  return ClassFunction::constant(classes, Rational(1));
}

ClassFunction regular_character(const ClassDataPtr& classes) {
  auto out = ClassFunction::zero(classes);
  std::vector<Cyclotomic> values = out.values();
  values[0] = Cyclotomic(classes->conductor(), Rational(long(classes->group->order())));
  return ClassFunction(classes, std::move(values));
}

ClassFunction permutation_character(const ClassDataPtr& classes, const Subgroup& h) {
  if (h.parent() != classes->group)
    throw Error(Errc::NotASubgroup, "subgroup belongs to a different group");
  const auto action = coset_action(h);
  std::vector<Cyclotomic> values;
  values.reserve(classes->size());
  for (std::size_t c = 0; c < classes->size(); ++c)
    values.emplace_back(classes->conductor(),
                        Rational(long(action.fixed_points(classes->classes.representatives[c]))));
  return ClassFunction(classes, std::move(values));
}

Rational fixed_space_average(const ClassFunction& chi, const Subgroup& h) {
  if (h.parent() != chi.classes()->group)
    throw Error(Errc::NotASubgroup, "subgroup belongs to a different group");
  Cyclotomic sum(chi.classes()->conductor());
  for (auto g : h.members()) sum += chi.at(g);
  if (!sum.is_rational())
    throw Error(Errc::NonIntegralAverage, "average over H is irrational; not a character");
  return sum.rational_value() / Rational(long(h.order()));
}

unsigned fixed_dim(const ClassFunction& chi, const Subgroup& h) {
  const Rational average = fixed_space_average(chi, h);
  if (!is_integer(average) || average < 0)
    throw Error(Errc::NonIntegralAverage,
                "average over H is " + average.get_str() + "; not a character");
  const Rational reciprocity = inner_product(permutation_character(chi.classes(), h), chi);
  ensure(reciprocity == average, "fixed-space average " + average.get_str() +
                                     " disagrees with Frobenius reciprocity " + reciprocity.get_str());
  return unsigned(to_int64(average));
}

int frobenius_schur(const ClassFunction& chi) {
  if (inner_product(chi, chi) != 1) throw Error(Errc::NotIrreducible, "<chi, chi> != 1");
  const auto& cd = *chi.classes();
  Cyclotomic sum(cd.conductor());
  for (std::size_t c = 0; c < cd.size(); ++c) {
    const std::size_t square = cd.conductor() > 2 ? cd.power_class[c][2] : cd.power_class[c][0];
    sum += chi.on_class(square) * Rational(long(cd.classes.class_size(c)));
  }
  const Rational value = sum.rational_value() / Rational(long(cd.group->order()));
  ensure(value == 1 || value == 0 || value == -1, "Frobenius-Schur indicator outside {-1, 0, 1}");
  return int(value.get_num().get_si());
}

// ---------------------------------------------------------------------------
// CharacterTable

CharacterTable character_table(const GroupPtr& group, const DixonOptions& options) {
  auto cd = make_class_data(group);
  CharacterTable table;
  table.classes = cd;
  auto rows = detail::dixon_rows(*cd, options, table.prime);

  const std::size_t k = cd->size();
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  auto is_trivial = [&](std::size_t r) {
    return std::all_of(rows[r].begin(), rows[r].end(),
                       [](const Cyclotomic& v) { return v.is_rational() && v.rational_value() == 1; });
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    const auto& da = rows[a][0].rational_value();
    const auto& db = rows[b][0].rational_value();
    if (da != db) return da < db;
    for (std::size_t c = 0; c < k; ++c) {
      if (lex_less(rows[b][c], rows[a][c])) return true;
      if (lex_less(rows[a][c], rows[b][c])) return false;
    }
    return false;
  });

  ensure(!order.empty() && is_trivial(order.front()), "trivial character missing from the lifted table");
  unsigned long sum_squares = 0;
  for (auto r : order) {
    const unsigned d = unsigned(to_int64(rows[r][0].rational_value()));
    table.degrees.push_back(d);
    sum_squares += (unsigned long)d * d;
    table.irreducibles.emplace_back(cd, std::move(rows[r]));
  }
  ensure(table.irreducibles.size() == k, "number of irreducibles differs from number of classes");
  ensure(sum_squares == group->order(), "sum of squared degrees differs from |G|");
  if (options.verify) {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) {
        const Rational ip = inner_product(table.irreducibles[i], table.irreducibles[j]);
        ensure(ip == (i == j ? 1 : 0), "row orthonormality fails for the lifted table");
      }
  }
  return table;
}

// ---------------------------------------------------------------------------
// Rational classes

std::vector<RationalClass> rational_classes(const CharacterTable& table, const SchurOverrides& overrides) {
  const auto& cd = table.classes;
  const long long e = cd->conductor();
  const std::size_t k = table.size();
  std::vector<bool> assigned(k, false);
  std::vector<RationalClass> out;

  for (const auto& [index, s] : overrides) {
    if (index >= k) throw Error(Errc::InvalidArgument, "Schur override for unknown irreducible");
    if (s == 0) throw Error(Errc::NonIntegralN, "Schur index must be positive");
  }

  for (std::size_t i = 0; i < k; ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> members;
    for (long long t = 1; t <= std::max(1LL, e); ++t) {
      if (std::gcd(t, e) != 1) continue;
      const auto image = table.irreducibles[i].galois(t);
      auto it = std::find(table.irreducibles.begin(), table.irreducibles.end(), image);
      ensure(it != table.irreducibles.end(), "Galois image of an irreducible is not in the table");
      members.push_back(std::size_t(it - table.irreducibles.begin()));
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (auto m : members) {
      ensure(!assigned[m], "Galois orbits overlap");
      assigned[m] = true;
    }

    RationalClass rc{members, table.degrees[i], unsigned(members.size()), 1, SchurProvenance::Heuristic,
                     ClassFunction::zero(cd), 1};
    for (auto m : members) {
      if (m != i && overrides.contains(m))
        throw Error(Errc::InvalidArgument, "Schur override must name the orbit representative");
    }
    if (auto it = overrides.find(i); it != overrides.end()) {
      rc.schur_index = it->second;
      rc.provenance = SchurProvenance::Override;
    } else {
      rc.schur_index = frobenius_schur(table.irreducibles[i]) == -1 ? 2 : 1;
    }
    if (rc.degree % rc.schur_index != 0)
      throw Error(Errc::NonIntegralN, "Schur index " + std::to_string(rc.schur_index) +
                                          " does not divide degree " + std::to_string(rc.degree));
    rc.n = rc.degree / rc.schur_index;
    ClassFunction sum = ClassFunction::zero(cd);
    for (auto m : members) sum += table.irreducibles[m];
    rc.rational_character = sum * Rational(long(rc.schur_index));
    ensure(rc.rational_character.is_rational_valued(), "orbit sum is not rational valued");
    ensure(rc.rational_character.degree().rational_value() == rc.dim_w(), "dim W mismatch");
    out.push_back(std::move(rc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Group algebra

GroupAlgebraElement::GroupAlgebraElement(GroupPtr group)
    : group_(std::move(group)), coeffs_(group_->order(), Rational(0)) {}

GroupAlgebraElement::GroupAlgebraElement(GroupPtr group, std::vector<Rational> coefficients)
    : group_(std::move(group)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != group_->order())
    throw Error(Errc::InvalidArgument, "group algebra element needs |G| coefficients");
}

GroupAlgebraElement GroupAlgebraElement::identity(GroupPtr group) {
  GroupAlgebraElement out(std::move(group));
  out.coeffs_[0] = 1;
  return out;
}

bool GroupAlgebraElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& rhs) const {
  if (group_ != rhs.group_) throw Error(Errc::GroupMismatch, "group algebra elements of different groups");
  GroupAlgebraElement out(*this);
  for (std::size_t g = 0; g < coeffs_.size(); ++g) out.coeffs_[g] += rhs.coeffs_[g];
  return out;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& rhs) const {
  if (group_ != rhs.group_) throw Error(Errc::GroupMismatch, "group algebra elements of different groups");
  GroupAlgebraElement out(group_);
  const std::size_t n = coeffs_.size();
  for (Element a = 0; a < n; ++a) {
    if (coeffs_[a] == 0) continue;
    for (Element b = 0; b < n; ++b) {
      if (rhs.coeffs_[b] == 0) continue;
      out.coeffs_[group_->mul(a, b)] += coeffs_[a] * rhs.coeffs_[b];
    }
  }
  return out;
}

bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
}

GroupAlgebraElement central_idempotent(const CharacterTable& table, const RationalClass& w) {
  const auto& group = table.group();
  const auto& cd = *table.classes;
  ClassFunction trace = ClassFunction::zero(table.classes);
  for (auto m : w.members) trace += table.irreducibles[m];
  const Rational scale = Rational(long(w.degree)) / Rational(long(group->order()));
  std::vector<Rational> coeffs(group->order());
  for (Element g = 0; g < group->order(); ++g) {
    const auto& value = trace.on_class(cd.classes.class_of[group->inv(g)]);
    coeffs[g] = value.rational_value() * scale;
  }
  return GroupAlgebraElement(group, std::move(coeffs));
}

}  // namespace isodec
