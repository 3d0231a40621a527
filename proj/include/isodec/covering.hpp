#ifndef ISODEC_COVERING_HPP
#define ISODEC_COVERING_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isodec/cyclotomic.hpp"
#include "isodec/group.hpp"

namespace isodec {

/// Monodromy of a G-action on a compact Riemann surface C: the orbit genus of
/// C/G, the branch periods and a generating vector (a_1, b_1, ..., c_1, ...).
struct CoveringAction {
  GroupPtr group;
  unsigned orbit_genus = 0;
  std::vector<unsigned> periods;
  std::vector<std::pair<Element, Element>> handles;
  std::vector<Element> branch_elements;
};

/// 2g - 2 = |G|(2 gamma - 2) + |G| R with R = sum_k (1 - 1/m_k).
struct GenusCertificate {
  std::int64_t genus = 0;
  Rational branch_number;
  std::vector<Rational> contributions;  // 1 - 1/m_k per branch value
};

/// The part of an action the genus and dimension formulas depend on: orbit
/// genus plus a generator of the (cyclic) stabilizer over each branch value.
/// Stabilizers are only defined up to conjugacy.
struct BranchData {
  GroupPtr group;
  std::int64_t orbit_genus = 0;
  std::vector<Element> stabilizers;
};

/// Checks periods, the long relation prod [a_i, b_i] prod c_k = 1 and
/// generation, then returns the Riemann-Hurwitz certificate.
/// Throws PeriodMismatch, RelationFails, NotGenerating, NonIntegralGenus.
GenusCertificate validate_action(const CoveringAction& action);

std::int64_t total_genus(const CoveringAction& action);

/// Validates and strips the handles.
BranchData branch_data(const CoveringAction& action);

/// Genus of C from branch data alone.
std::int64_t riemann_hurwitz_genus(const BranchData& branching);

/// Genus of C/H from the coset action:
/// 2 g_H - 2 = [G:H](2 gamma - 2) + sum_k ([G:H] - #orbits of <c_k> on G/H).
std::int64_t quotient_genus(const BranchData& branching, const Subgroup& h);
std::int64_t quotient_genus(const CoveringAction& action, const Subgroup& h);

/// The same surface viewed with a subgroup K as acting group.
struct Restriction {
  GroupPtr group;                   // K as a standalone group
  std::vector<Element> embedding;   // K-element -> G-element
  BranchData branching;             // over C/K
};

/// Orbit genus of C/K from quotient_genus; branch stabilizers from the K-orbits
/// on each fiber G/<c_k>. Cross-checked against Riemann-Hurwitz for K.
Restriction restrict_action(const BranchData& branching, const Subgroup& k);

/// Image of a subgroup H <= K of G inside the standalone K. Throws NotASubgroup.
Subgroup transport(const Restriction& restriction, const Subgroup& h);

/// Evaluates a word such as "s*r^2", "r^-1", "(s*r)^2", "id" or an element
/// index literal "#5". Throws UnknownGenerator or ParseError.
Element parse_word(const FiniteGroup& group, std::string_view word);

}  // namespace isodec

#endif  // ISODEC_COVERING_HPP
