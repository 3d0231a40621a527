#include "isodec/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "isodec/error.hpp"

namespace isodec {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidPermutation: return "InvalidPermutation";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::OrderCapExceeded: return "OrderCapExceeded";
    case Errc::EmptyGeneratorList: return "EmptyGeneratorList";
    case Errc::InvalidElementIndex: return "InvalidElementIndex";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ZeroConductor: return "ZeroConductor";
    case Errc::ConductorMismatch: return "ConductorMismatch";
    case Errc::NotCoprime: return "NotCoprime";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::NotRational: return "NotRational";
    case Errc::NoSuitablePrime: return "NoSuitablePrime";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::NonIntegralAverage: return "NonIntegralAverage";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::NonIntegralN: return "NonIntegralN";
    case Errc::PeriodMismatch: return "PeriodMismatch";
    case Errc::RelationFails: return "RelationFails";
    case Errc::NotGenerating: return "NotGenerating";
    case Errc::NonIntegralGenus: return "NonIntegralGenus";
    case Errc::UnknownGenerator: return "UnknownGenerator";
    case Errc::NonIntegralDimension: return "NonIntegralDimension";
    case Errc::NotAdmissible: return "NotAdmissible";
    case Errc::NotAPartition: return "NotAPartition";
    case Errc::NonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case Errc::TooFewFactors: return "TooFewFactors";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::EngineAssertion: return "EngineAssertion";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw Error(Errc::InvalidPermutation, "images are not a bijection of {0.." +
                                                std::to_string(images_.size()) + "-1}");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cycle[i] >= degree) throw Error(Errc::InvalidPermutation, "cycle point out of range");
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) throw Error(Errc::DegreeMismatch, "product of permutations");
  Permutation out;
  out.images_.resize(degree());
  for (std::size_t x = 0; x < degree(); ++x) out.images_[x] = images_[rhs.images_[x]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(degree());
  for (std::size_t x = 0; x < degree(); ++x) out.images_[images_[x]] = std::uint32_t(x);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < degree(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> done(degree(), false);
  for (std::size_t start = 0; start < degree(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out << '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      if (!first) out << ' ';
      out << x;
      done[x] = true;
      first = false;
      x = images_[x];
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) h = (h ^ x) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------------------
// FiniteGroup

GroupPtr FiniteGroup::generate(std::span<const Permutation> generators,
                               std::span<const std::string> names, std::size_t max_order) {
  if (generators.empty()) throw Error(Errc::EmptyGeneratorList, "no generators supplied");
  if (names.size() != generators.size())
    throw Error(Errc::InvalidArgument, "generator names and permutations differ in count");
  const std::size_t degree = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw Error(Errc::DegreeMismatch, "generators act on different numbers of points");

  std::shared_ptr<FiniteGroup> group(new FiniteGroup());
  group->degree_ = degree;
  auto& elements = group->elements_;
  auto& index = group->index_;
  elements.push_back(Permutation::identity(degree));
  index.emplace(elements.back(), 0);

  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : generators) {
      Permutation next = elements[head] * gen;
      if (index.contains(next)) continue;
      if (elements.size() >= max_order)
        throw Error(Errc::OrderCapExceeded,
                    "closure exceeds the order cap of " + std::to_string(max_order));
      index.emplace(next, Element(elements.size()));
      elements.push_back(std::move(next));
    }
  }

  const std::size_t n = elements.size();
  group->table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      group->table_[a * n + b] = index.at(elements[a] * elements[b]);

  group->inverse_.resize(n);
  group->orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) group->inverse_[a] = index.at(elements[a].inverse());
  unsigned exponent = 1;
  for (std::size_t a = 0; a < n; ++a) {
    unsigned k = 1;
    Element x = Element(a);
    while (x != 0) {
      x = group->mul(x, Element(a));
      ++k;
    }
    group->orders_[a] = k;
    exponent = std::lcm(exponent, k);
  }
  group->exponent_ = exponent;

  for (std::size_t i = 0; i < generators.size(); ++i)
    group->generators_.emplace_back(names[i], index.at(generators[i]));
  group->compute_words();
  return group;
}

void FiniteGroup::compute_words() {
  // Breadth-first search over generators and their inverses; each step
  // appends one letter on the right.
  struct Letter {
    std::size_t gen;
    int sign;
    Element element;
  };
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    Element g = generators_[i].second;
    if (g == 0) continue;
    letters.push_back({i, +1, g});
    if (inv(g) != g) letters.push_back({i, -1, inv(g)});
  }
  const std::size_t n = order();
  std::vector<std::vector<std::pair<std::size_t, int>>> path(n);
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (const auto& letter : letters) {
      Element y = mul(x, letter.element);
      if (seen[y]) continue;
      seen[y] = true;
      path[y] = path[x];
      path[y].emplace_back(letter.gen, letter.sign);
      queue.push_back(y);
    }
  }
  words_.assign(n, "");
  for (std::size_t g = 0; g < n; ++g) {
    if (g == 0) {
      words_[g] = "id";
      continue;
    }
    std::string word;
    const auto& p = path[g];
    for (std::size_t i = 0; i < p.size();) {
      std::size_t j = i;
      long long power = 0;
      while (j < p.size() && p[j].first == p[i].first) power += p[j++].second;
      if (power != 0) {
        if (!word.empty()) word += '*';
        word += generators_[p[i].first].first;
        if (power != 1) word += '^' + std::to_string(power);
      }
      i = j;
    }
    words_[g] = word;
  }
}

Element FiniteGroup::power(Element g, long long k) const {
  const long long ord = orders_[g];
  long long e = ((k % ord) + ord) % ord;
  Element result = 0;
  Element base = g;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Element FiniteGroup::commutator(Element a, Element b) const {
  return mul(mul(a, b), mul(inv(a), inv(b)));
}

bool FiniteGroup::is_abelian() const {
  for (const auto& [name_a, a] : generators_)
    for (const auto& [name_b, b] : generators_)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<Element> FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void FiniteGroup::check_element(Element g) const {
  if (g >= order())
    throw Error(Errc::InvalidElementIndex,
                std::to_string(g) + " is not an element index of a group of order " +
                    std::to_string(order()));
}

std::optional<Element> FiniteGroup::generator(std::string_view name) const {
  for (const auto& [n, g] : generators_)
    if (n == name) return g;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Subgroup

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> sorted_members, Trusted)
    : parent_(std::move(parent)), members_(std::move(sorted_members)) {
  mask_.assign(parent_->order(), false);
  for (auto g : members_) mask_[g] = true;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<Element> members) : parent_(std::move(parent)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (auto g : members) parent_->check_element(g);
  members_ = std::move(members);
  mask_.assign(parent_->order(), false);
  for (auto g : members_) mask_[g] = true;
  if (members_.empty() || members_.front() != 0)
    throw Error(Errc::NotASubgroup, "member set lacks the identity");
  for (auto a : members_) {
    if (!mask_[parent_->inv(a)]) throw Error(Errc::NotASubgroup, "not closed under inverses");
    for (auto b : members_)
      if (!mask_[parent_->mul(a, b)]) throw Error(Errc::NotASubgroup, "not closed under products");
  }
}

Subgroup Subgroup::trivial(GroupPtr parent) { return Subgroup(std::move(parent), {0}, Trusted{}); }

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<Element> all(parent->order());
  std::iota(all.begin(), all.end(), Element(0));
  return Subgroup(std::move(parent), std::move(all), Trusted{});
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  if (parent_ != other.parent_) return false;
  return std::all_of(members_.begin(), members_.end(),
                     [&](Element g) { return other.contains(g); });
}

Subgroup Subgroup::conjugate(Element x) const {
  parent_->check_element(x);
  std::vector<Element> out;
  out.reserve(members_.size());
  for (auto h : members_) out.push_back(parent_->conjugate(h, x));
  std::sort(out.begin(), out.end());
  return Subgroup(parent_, std::move(out), Trusted{});
}

Subgroup subgroup_generate(const GroupPtr& group, std::span<const Element> seed) {
  std::vector<Element> gens;
  for (auto g : seed) {
    group->check_element(g);
    if (g != 0) gens.push_back(g);
  }
  std::vector<bool> mask(group->order(), false);
  std::vector<Element> members{0};
  mask[0] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (auto g : gens) {
      Element y = group->mul(members[head], g);
      if (!mask[y]) {
        mask[y] = true;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup(group, std::move(members), Subgroup::Trusted{});
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  if (a.parent() != b.parent()) throw Error(Errc::GroupMismatch, "join of subgroups of different groups");
  std::vector<Element> seed(a.members());
  seed.insert(seed.end(), b.members().begin(), b.members().end());
  return subgroup_generate(a.parent(), seed);
}

// ---------------------------------------------------------------------------
// Conjugacy classes and coset actions

ConjugacyClasses conjugacy_classes(const FiniteGroup& group) {
  const std::size_t n = group.order();
  ConjugacyClasses out;
  constexpr std::size_t kUnassigned = std::size_t(-1);
  out.class_of.assign(n, kUnassigned);
  for (Element g = 0; g < n; ++g) {
    if (out.class_of[g] != kUnassigned) continue;
    const std::size_t c = out.classes.size();
    std::vector<Element> members;
    for (Element x = 0; x < n; ++x) {
      Element y = group.conjugate(g, x);
      if (out.class_of[y] == kUnassigned) {
        out.class_of[y] = c;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    out.classes.push_back(std::move(members));
    out.representatives.push_back(g);
  }
  return out;
}

std::size_t CosetAction::fixed_points(Element g) const {
  const auto& p = images.at(g);
  std::size_t count = 0;
  for (std::size_t x = 0; x < p.degree(); ++x)
    if (p(std::uint32_t(x)) == x) ++count;
  return count;
}

std::size_t CosetAction::cyclic_orbits(Element g) const {
  const auto& p = images.at(g);
  std::vector<bool> seen(p.degree(), false);
  std::size_t orbits = 0;
  for (std::size_t x = 0; x < p.degree(); ++x) {
    if (seen[x]) continue;
    ++orbits;
    for (std::uint32_t y = std::uint32_t(x); !seen[y]; y = p(y)) seen[y] = true;
  }
  return orbits;
}

CosetAction coset_action(const Subgroup& h) {
  const auto& group = *h.parent();
  const std::size_t n = group.order();
  CosetAction out;
  constexpr std::size_t kUnassigned = std::size_t(-1);
  out.coset_of.assign(n, kUnassigned);
  for (Element x = 0; x < n; ++x) {
    if (out.coset_of[x] != kUnassigned) continue;
    const std::size_t c = out.transversal.size();
    out.transversal.push_back(x);
    for (auto m : h.members()) out.coset_of[group.mul(x, m)] = c;
  }
  const std::size_t degree = out.transversal.size();
  out.images.reserve(n);
  for (Element g = 0; g < n; ++g) {
    std::vector<std::uint32_t> images(degree);
    for (std::size_t c = 0; c < degree; ++c)
      images[c] = std::uint32_t(out.coset_of[group.mul(g, out.transversal[c])]);
    out.images.emplace_back(std::move(images));
  }
  return out;
}

PartitionCheck is_partition(const GroupPtr& group, std::span<const Subgroup> collection) {
  PartitionCheck out;
  const std::size_t n = group->order();
  std::vector<std::size_t> owner(n, std::size_t(-1));
  for (std::size_t i = 0; i < collection.size(); ++i) {
    if (collection[i].parent() != group)
      throw Error(Errc::GroupMismatch, "partition member belongs to another group");
    for (auto g : collection[i].members()) {
      if (g == 0) continue;
      if (owner[g] != std::size_t(-1)) {
        if (!out.overlap) out.overlap = PartitionCheck::Overlap{owner[g], i, g};
        continue;
      }
      owner[g] = i;
    }
  }
  for (Element g = 1; g < n; ++g) {
    if (owner[g] == std::size_t(-1)) {
      out.uncovered = g;
      break;
    }
  }
  out.is_partition = !collection.empty() && !out.overlap && !out.uncovered;
  return out;
}

}  // namespace isodec
