#include "isodec/covering.hpp"

#include <algorithm>

#include "isodec/error.hpp"

namespace isodec {

namespace {

std::int64_t genus_from_twice_euler(std::int64_t two_g_minus_two, const std::string& what) {
  if (two_g_minus_two % 2 != 0)
    throw Error(Errc::NonIntegralGenus, what + ": 2g - 2 = " + std::to_string(two_g_minus_two) + " is odd");
  const std::int64_t g = two_g_minus_two / 2 + 1;
  if (g < 0) throw Error(Errc::NonIntegralGenus, what + ": negative genus " + std::to_string(g));
  return g;
}

}  // namespace

GenusCertificate validate_action(const CoveringAction& action) {
  if (!action.group) throw Error(Errc::InvalidArgument, "action without a group");
  const auto& group = *action.group;
  if (action.handles.size() != action.orbit_genus)
    throw Error(Errc::InvalidArgument, "expected " + std::to_string(action.orbit_genus) +
                                           " handle pairs, got " + std::to_string(action.handles.size()));
  if (action.periods.size() != action.branch_elements.size())
    throw Error(Errc::InvalidArgument, "periods and branch elements differ in count");

  for (const auto& [a, b] : action.handles) {
    group.check_element(a);
    group.check_element(b);
  }
  for (std::size_t k = 0; k < action.branch_elements.size(); ++k) {
    const Element c = action.branch_elements[k];
    group.check_element(c);
    if (action.periods[k] < 2)
      throw Error(Errc::InvalidArgument, "period " + std::to_string(k + 1) + " is below 2");
    if (group.element_order(c) != action.periods[k])
      throw Error(Errc::PeriodMismatch,
                  "branch element " + std::to_string(k + 1) + " (" + group.word(c) + ") has order " +
                      std::to_string(group.element_order(c)) + ", period is " +
                      std::to_string(action.periods[k]));
  }

  Element product = 0;
  std::vector<Element> seed;
  for (const auto& [a, b] : action.handles) {
    product = group.mul(product, group.commutator(a, b));
    seed.push_back(a);
    seed.push_back(b);
  }
  for (auto c : action.branch_elements) {
    product = group.mul(product, c);
    seed.push_back(c);
  }
  if (product != 0)
    throw Error(Errc::RelationFails, "long relation evaluates to " + group.word(product) + ", not the identity");
  if (subgroup_generate(action.group, seed).order() != group.order())
    throw Error(Errc::NotGenerating, "the generating vector spans a proper subgroup");

  GenusCertificate cert;
  for (auto m : action.periods) {
    cert.contributions.push_back(Rational(1) - Rational(1, long(m)));
    cert.branch_number += cert.contributions.back();
  }
  const Rational order(long(group.order()));
  const Rational twice = order * (2 * Rational(long(action.orbit_genus)) - 2) + order * cert.branch_number;
  if (!is_integer(twice)) throw Error(Errc::NonIntegralGenus, "2g - 2 is not an integer");
  cert.genus = genus_from_twice_euler(to_int64(twice), "Riemann-Hurwitz");
  return cert;
}

std::int64_t total_genus(const CoveringAction& action) { return validate_action(action).genus; }

BranchData branch_data(const CoveringAction& action) {
  validate_action(action);
  return BranchData{action.group, std::int64_t(action.orbit_genus), action.branch_elements};
}

std::int64_t riemann_hurwitz_genus(const BranchData& branching) {
  const std::int64_t n = std::int64_t(branching.group->order());
  std::int64_t twice = n * (2 * branching.orbit_genus - 2);
  for (auto c : branching.stabilizers) twice += n - n / branching.group->element_order(c);
  return genus_from_twice_euler(twice, "Riemann-Hurwitz");
}

std::int64_t quotient_genus(const BranchData& branching, const Subgroup& h) {
  if (h.parent() != branching.group) throw Error(Errc::NotASubgroup, "subgroup of a different group");
  const auto action = coset_action(h);
  const std::int64_t index = std::int64_t(action.degree());
  std::int64_t twice = index * (2 * branching.orbit_genus - 2);
  for (auto c : branching.stabilizers) twice += index - std::int64_t(action.cyclic_orbits(c));
  return genus_from_twice_euler(twice, "quotient genus");
}

std::int64_t quotient_genus(const CoveringAction& action, const Subgroup& h) {
  return quotient_genus(branch_data(action), h);
}

Restriction restrict_action(const BranchData& branching, const Subgroup& k) {
  const auto& group = *branching.group;
  if (k.parent() != branching.group) throw Error(Errc::NotASubgroup, "subgroup of a different group");

  const auto gens = generating_set(k);
  std::vector<Permutation> perms;
  std::vector<std::string> names;
  for (auto g : gens) {
    perms.push_back(group.element(g));
    names.push_back(group.word(g));
  }
  if (perms.empty()) {
    perms.push_back(Permutation::identity(group.degree()));
    names.push_back("id");
  }
  Restriction out;
  out.group = FiniteGroup::generate(perms, names, group.order());
  out.embedding.resize(out.group->order());
  for (Element x = 0; x < out.group->order(); ++x)
    out.embedding[x] = *group.index_of(out.group->element(x));
  auto to_k = [&](Element g) { return *out.group->index_of(group.element(g)); };

  out.branching.group = out.group;
  out.branching.orbit_genus = quotient_genus(branching, k);
  for (auto c : branching.stabilizers) {
    const Element cseed[] = {c};
    const auto cyclic = subgroup_generate(branching.group, cseed);
    const auto fiber = coset_action(cyclic);
    const unsigned m = group.element_order(c);
    std::vector<bool> seen(fiber.degree(), false);
    for (std::size_t point = 0; point < fiber.degree(); ++point) {
      if (seen[point]) continue;
      for (auto y : k.members()) seen[fiber.coset_of[group.mul(y, fiber.transversal[point])]] = true;
      const Element x = fiber.transversal[point];
      // K-stabilizer of x<c> is K meet x<c>x^-1, generated by x c^j x^-1 for the least such j.
      for (unsigned j = 1; j < m; ++j) {
        const Element candidate = group.conjugate(group.power(c, j), group.inv(x));
        if (k.contains(candidate)) {
          out.branching.stabilizers.push_back(to_k(candidate));
          break;
        }
      }
    }
  }
  ensure(riemann_hurwitz_genus(out.branching) == riemann_hurwitz_genus(branching),
         "restricted branching does not reproduce the genus of C");
  return out;
}

Subgroup transport(const Restriction& restriction, const Subgroup& h) {
  std::vector<Element> members;
  const auto& parent = *h.parent();
  for (auto g : h.members()) {
    auto image = restriction.group->index_of(parent.element(g));
    if (!image) throw Error(Errc::NotASubgroup, "subgroup is not contained in the restricted group");
    members.push_back(*image);
  }
  return Subgroup(restriction.group, std::move(members));
}

}  // namespace isodec
