#ifndef ISODEC_TESTS_SUPPORT_HPP
#define ISODEC_TESTS_SUPPORT_HPP

// Test oracles that avoid the engine's own tables.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "isodec/characters.hpp"
#include "isodec/covering.hpp"
#include "isodec/decomposition.hpp"
#include "isodec/group.hpp"

namespace oracle {

using Images = std::vector<std::uint32_t>;

inline Images compose(const Images& a, const Images& b) {
  Images out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
  return out;
}

/// Closure of raw image vectors under composition.
inline std::set<Images> closure(const std::vector<Images>& gens) {
  const std::size_t n = gens.empty() ? 0 : gens.front().size();
  Images id(n);
  for (std::uint32_t i = 0; i < n; ++i) id[i] = i;
  std::set<Images> seen{id};
  std::vector<Images> frontier{id};
  while (!frontier.empty()) {
    std::vector<Images> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        auto y = compose(g, x);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return seen;
}

inline Images images_of(const isodec::Permutation& p) { return {p.images().begin(), p.images().end()}; }

inline std::vector<Images> generator_images(const isodec::FiniteGroup& g) {
  std::vector<Images> out;
  for (const auto& [name, e] : g.generators()) out.push_back(images_of(g.element(e)));
  return out;
}

inline bool closed(const isodec::FiniteGroup& g, std::uint64_t mask) {
  if (!(mask & 1)) return false;
  for (std::size_t a = 0; a < g.order(); ++a)
    if (mask >> a & 1)
      for (std::size_t b = 0; b < g.order(); ++b)
        if ((mask >> b & 1) && !(mask >> g.mul(isodec::Element(a), isodec::Element(b)) & 1)) return false;
  return true;
}

/// Number of subsets closed under the product (finite, so subgroups). |G| <= 16.
inline std::size_t subgroup_count_by_subsets(const isodec::FiniteGroup& g) {
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << g.order()); ++mask)
    if (closed(g, mask)) ++count;
  return count;
}

/// Class sizes from conjugation orbits computed on raw permutations.
inline std::multiset<std::size_t> class_sizes(const isodec::FiniteGroup& g) {
  std::set<Images> done;
  std::multiset<std::size_t> sizes;
  for (const auto& p : g.elements()) {
    auto x = images_of(p);
    if (done.count(x)) continue;
    std::set<Images> orbit;
    for (const auto& h : g.elements()) {
      auto hi = images_of(h.inverse());
      orbit.insert(compose(compose(hi, x), images_of(h)));
    }
    done.insert(orbit.begin(), orbit.end());
    sizes.insert(orbit.size());
  }
  return sizes;
}

/// Orbits of <c> on G/H counted by walking cosets as element sets.
inline std::size_t cyclic_orbits_on_cosets(const isodec::Subgroup& h, isodec::Element c) {
  const auto& g = *h.parent();
  std::vector<std::set<isodec::Element>> cosets;
  std::vector<bool> used(g.order(), false);
  for (isodec::Element x = 0; x < g.order(); ++x) {
    if (used[x]) continue;
    std::set<isodec::Element> coset;
    for (auto m : h.members()) coset.insert(g.mul(x, m));
    for (auto y : coset) used[y] = true;
    cosets.push_back(coset);
  }
  auto index_of = [&](isodec::Element y) {
    for (std::size_t i = 0; i < cosets.size(); ++i)
      if (cosets[i].count(y)) return i;
    return cosets.size();
  };
  std::vector<bool> seen(cosets.size(), false);
  std::size_t orbits = 0;
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    if (seen[i]) continue;
    ++orbits;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = index_of(g.mul(c, *cosets[j].begin()));
    }
  }
  return orbits;
}

/// Riemann-Hurwitz for C/H from the coset orbits above; integer arithmetic only.
inline std::int64_t quotient_genus(const isodec::CoveringAction& a, const isodec::Subgroup& h) {
  const std::int64_t index = std::int64_t(h.index());
  std::int64_t twice = index * (2 * std::int64_t(a.orbit_genus) - 2);
  for (auto c : a.branch_elements) twice += index - std::int64_t(cyclic_orbits_on_cosets(h, c));
  return twice / 2 + 1;
}

/// 2g - 2 = |G|(2 gamma - 2) + sum_k |G|(1 - 1/m_k), kept in integers.
inline std::int64_t riemann_hurwitz(std::int64_t order, std::int64_t gamma, const std::vector<unsigned>& periods) {
  std::int64_t twice = order * (2 * gamma - 2);
  for (auto m : periods) twice += order - order / m;
  return twice / 2 + 1;
}

/// Fixed points of g on G/<c>: cosets x<c> with x^-1 g x in <c>.
inline std::int64_t fixed_points_on_cyclic_cosets(const isodec::FiniteGroup& g, isodec::Element x,
                                                   isodec::Element c) {
  std::set<isodec::Element> cyclic;
  isodec::Element p = 0;
  do {
    cyclic.insert(p);
    p = g.mul(p, c);
  } while (p != 0);
  std::int64_t count = 0;
  for (isodec::Element y = 0; y < g.order(); ++y)
    if (cyclic.count(g.mul(g.mul(g.inv(y), x), y))) ++count;
  return count / std::int64_t(cyclic.size());
}

/// Lefschetz character of H_1(C, Q): 2g at 1, else 2 - #Fix(g), where the
/// fixed points of g on C are counted fiber by fiber over the branch values.
inline std::vector<isodec::Rational> lefschetz(const isodec::CoveringAction& a) {
  const auto& g = *a.group;
  std::vector<isodec::Rational> out(g.order());
  const std::int64_t genus = riemann_hurwitz(std::int64_t(g.order()), a.orbit_genus, a.periods);
  out[0] = 2 * genus;
  for (isodec::Element x = 1; x < g.order(); ++x) {
    std::int64_t fixed = 0;
    for (auto c : a.branch_elements) fixed += fixed_points_on_cyclic_cosets(g, x, c);
    out[x] = 2 - fixed;
  }
  return out;
}

/// dim B_l = s f <chi_rac, chi_l> / 2 for the representative chi_l of each class.
inline std::vector<isodec::Rational> factor_dims_by_lefschetz(const isodec::CoveringAction& a,
                                                              const isodec::CharacterTable& t,
                                                              const std::vector<isodec::RationalClass>& classes) {
  const auto rac = lefschetz(a);
  const auto& g = *a.group;
  std::vector<isodec::Rational> out;
  for (const auto& w : classes) {
    const auto& chi = t.irreducibles[w.representative()];
    isodec::Cyclotomic sum(t.classes->conductor());
    for (isodec::Element x = 0; x < g.order(); ++x) sum += chi.at(x).conj() * rac[x];
    const isodec::Rational inner = sum.rational_value() / isodec::Rational(g.order());
    out.push_back(inner * w.schur_index * w.field_degree / 2);
  }
  return out;
}

/// The action (s, s, sr, sr, r, r^-1) of signature (0; 2,2,2,2,2q,2q).
inline isodec::CoveringAction dihedral_action(unsigned q) {
  auto g = isodec::presets::dihedral(q);
  const auto r = isodec::parse_word(*g, "r");
  const auto s = isodec::parse_word(*g, "s");
  const auto sr = isodec::parse_word(*g, "s*r");
  return {g, 0, {2, 2, 2, 2, 2 * q, 2 * q}, {}, {s, s, sr, sr, r, g->inv(r)}};
}

inline isodec::Subgroup generated(const isodec::GroupPtr& g, std::initializer_list<const char*> words) {
  std::vector<isodec::Element> seed;
  for (auto w : words) seed.push_back(isodec::parse_word(*g, w));
  return isodec::subgroup_generate(g, seed);
}

}  // namespace oracle

#endif  // ISODEC_TESTS_SUPPORT_HPP
