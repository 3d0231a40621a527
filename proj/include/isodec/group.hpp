#ifndef ISODEC_GROUP_HPP
#define ISODEC_GROUP_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace isodec {

/// Index of an element inside its FiniteGroup. Index 0 is always the identity.
using Element = std::uint32_t;

class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidPermutation unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t degree);
  /// Builds a permutation from disjoint cycles on `degree` points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  std::span<const std::uint32_t> images() const { return images_; }

  /// Composition: (a * b)(x) = a(b(x)).
  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

inline constexpr std::size_t kDefaultMaxOrder = 2048;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite permutation group with all elements enumerated and a full
/// product table. Immutable once built.
class FiniteGroup {
 public:
  /// Closes the generators under multiplication. Element 0 is the identity,
  /// elements 1..k are the distinct non-identity generators in input order,
  /// and the rest follow in breadth-first order.
  static GroupPtr generate(std::span<const Permutation> generators,
                           std::span<const std::string> names,
                           std::size_t max_order = kDefaultMaxOrder);

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  unsigned exponent() const { return exponent_; }

  const Permutation& element(Element g) const { return elements_.at(g); }
  const std::vector<Permutation>& elements() const { return elements_; }

  Element mul(Element a, Element b) const { return table_[std::size_t(a) * order() + b]; }
  Element inv(Element g) const { return inverse_[g]; }
  static constexpr Element identity() { return 0; }
  unsigned element_order(Element g) const { return orders_[g]; }
  Element power(Element g, long long k) const;
  /// x^-1 g x
  Element conjugate(Element g, Element x) const { return mul(mul(inv(x), g), x); }
  Element commutator(Element a, Element b) const;
  bool is_abelian() const;

  std::optional<Element> index_of(const Permutation& p) const;
  void check_element(Element g) const;

  const std::vector<std::pair<std::string, Element>>& generators() const { return generators_; }
  std::optional<Element> generator(std::string_view name) const;

  /// Shortest word in the named generators and their inverses, e.g. "s*r^2".
  /// The identity renders as "id".
  const std::string& word(Element g) const { return words_.at(g); }

 private:
  FiniteGroup() = default;
  void compute_words();

  std::size_t degree_ = 0;
  unsigned exponent_ = 1;
  std::vector<Permutation> elements_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<unsigned> orders_;
  std::vector<std::pair<std::string, Element>> generators_;
  std::unordered_map<Permutation, Element, PermutationHash> index_;
  std::vector<std::string> words_;
};

class Subgroup {
 public:
  /// Throws NotASubgroup unless `members` is closed under products and
  /// inverses. Members are sorted and deduplicated.
  Subgroup(GroupPtr parent, std::vector<Element> members);

  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Element>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  std::size_t index() const { return parent_->order() / members_.size(); }
  bool contains(Element g) const { return g < mask_.size() && mask_[g]; }
  bool is_subgroup_of(const Subgroup& other) const;
  bool is_trivial() const { return members_.size() == 1; }

  /// x^-1 H x
  Subgroup conjugate(Element x) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  struct Trusted {};
  Subgroup(GroupPtr parent, std::vector<Element> sorted_members, Trusted);
  friend Subgroup subgroup_generate(const GroupPtr&, std::span<const Element>);

  GroupPtr parent_;
  std::vector<Element> members_;
  std::vector<bool> mask_;
};

/// Smallest subgroup containing `seed`. Throws InvalidElementIndex.
Subgroup subgroup_generate(const GroupPtr& group, std::span<const Element> seed);

/// Join of two subgroups of the same group.
Subgroup join(const Subgroup& a, const Subgroup& b);

/// Generators picked greedily in element order; each one enlarges the span.
std::vector<Element> generating_set(const Subgroup& h);

inline constexpr std::size_t kDefaultSubgroupSearchOrder = 512;

/// Every subgroup of `group`, sorted by order and then by member set.
/// Throws OrderCapExceeded above `max_order`.
std::vector<Subgroup> enumerate_subgroups(const GroupPtr& group,
                                          std::size_t max_order = kDefaultSubgroupSearchOrder);

struct ConjugacyClasses {
  std::vector<std::vector<Element>> classes;  // each sorted, ordered by smallest member
  std::vector<Element> representatives;       // smallest member of each class
  std::vector<std::size_t> class_of;          // element -> class index

  std::size_t size() const { return classes.size(); }
  std::size_t class_size(std::size_t c) const { return classes[c].size(); }
};

ConjugacyClasses conjugacy_classes(const FiniteGroup& group);

/// Left-multiplication action of G on the left cosets G/H.
struct CosetAction {
  std::vector<Element> transversal;  // transversal[0] = identity, so coset 0 is H
  std::vector<std::size_t> coset_of;  // element -> coset index
  std::vector<Permutation> images;    // element -> permutation of cosets

  std::size_t degree() const { return transversal.size(); }
  std::size_t fixed_points(Element g) const;
  /// Number of orbits of the cyclic group <g> on the cosets.
  std::size_t cyclic_orbits(Element g) const;
};

CosetAction coset_action(const Subgroup& h);

struct PartitionCheck {
  bool is_partition = false;
  std::optional<Element> uncovered;  // element outside the union
  struct Overlap {
    std::size_t first, second;
    Element element;
  };
  std::optional<Overlap> overlap;  // nontrivial element shared by two members
};

/// True iff the subgroups cover G and meet pairwise trivially.
PartitionCheck is_partition(const GroupPtr& group, std::span<const Subgroup> collection);

namespace presets {

/// <r, s | r^(2q) = s^2 = (sr)^2 = 1>, order 4q, acting on 2q points
/// (4 points for q = 1). Requires odd q >= 1.
GroupPtr dihedral(unsigned q, std::size_t max_order = kDefaultMaxOrder);
/// Z_2^t generated by e1..et, acting on 2t points.
GroupPtr elementary_abelian_2(unsigned t, std::size_t max_order = kDefaultMaxOrder);
/// Quaternion group of order 8 in its regular representation, generators i, j.
GroupPtr quaternion();
/// Cyclic group of order n, generator "c".
GroupPtr cyclic(unsigned n, std::size_t max_order = kDefaultMaxOrder);
/// Symmetric group on n points, generators "a" (transposition) and "b" (n-cycle).
GroupPtr symmetric(unsigned n, std::size_t max_order = kDefaultMaxOrder);
/// Alternating group A4, generators "a" = (0 1 2), "b" = (0 1)(2 3).
GroupPtr alternating4();

}  // namespace presets

}  // namespace isodec

#endif  // ISODEC_GROUP_HPP
