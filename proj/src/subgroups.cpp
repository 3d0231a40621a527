#include <algorithm>
#include <map>
#include <set>

#include "isodec/error.hpp"
#include "isodec/group.hpp"

namespace isodec {

// Layered join with cyclic subgroups: every subgroup is reached from one of
// its cyclic subgroups by repeatedly joining further cyclic subgroups.
std::vector<Subgroup> enumerate_subgroups(const GroupPtr& group, std::size_t max_order) {
  if (group->order() > max_order)
    throw Error(Errc::OrderCapExceeded, "subgroup enumeration is capped at order " +
                                            std::to_string(max_order));
  const std::size_t n = group->order();

  // One generator per cyclic subgroup.
  std::vector<Element> cyclic_generators;
  std::set<std::vector<Element>> seen_cyclic;
  for (Element g = 0; g < n; ++g) {
    Element seed[] = {g};
    auto c = subgroup_generate(group, seed);
    if (seen_cyclic.insert(c.members()).second) cyclic_generators.push_back(g);
  }

  struct Found {
    std::vector<Element> generators;
  };
  std::map<std::vector<Element>, Found> found;
  std::vector<std::vector<Element>> frontier;
  for (auto g : cyclic_generators) {
    Element seed[] = {g};
    auto c = subgroup_generate(group, seed);
    if (found.emplace(c.members(), Found{{g}}).second) frontier.push_back(c.members());
  }

  while (!frontier.empty()) {
    std::vector<std::vector<Element>> next;
    for (const auto& members : frontier) {
      const auto gens = found.at(members).generators;
      std::vector<bool> mask(n, false);
      for (auto m : members) mask[m] = true;
      for (auto g : cyclic_generators) {
        if (mask[g]) continue;
        auto seed = gens;
        seed.push_back(g);
        auto joined = subgroup_generate(group, seed);
        if (found.emplace(joined.members(), Found{seed}).second) next.push_back(joined.members());
      }
    }
    frontier = std::move(next);
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& [members, info] : found) out.emplace_back(group, members);
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return out;
}

std::vector<Element> generating_set(const Subgroup& h) {
  std::vector<Element> gens;
  std::size_t reached = 1;
  for (auto g : h.members()) {
    if (reached == h.order()) break;
    gens.push_back(g);
    const auto span = subgroup_generate(h.parent(), gens);
    if (span.order() > reached)
      reached = span.order();
    else
      gens.pop_back();
  }
  return gens;
}

}  // namespace isodec
