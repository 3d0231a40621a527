#ifndef ISODEC_CHARACTERS_HPP
#define ISODEC_CHARACTERS_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "isodec/cyclotomic.hpp"
#include "isodec/group.hpp"

namespace isodec {

/// Conjugacy classes of a group together with the maps class functions need:
/// inverse classes and power maps up to the exponent.
struct ClassData {
  GroupPtr group;
  ConjugacyClasses classes;
  std::vector<std::size_t> inverse_class;
  std::vector<std::vector<std::size_t>> power_class;  // [c][k] = class of rep(c)^k, k < exponent

  std::size_t size() const { return classes.size(); }
  unsigned conductor() const { return group->exponent(); }
};
using ClassDataPtr = std::shared_ptr<const ClassData>;

ClassDataPtr make_class_data(GroupPtr group);

/// A function on the group constant on conjugacy classes, valued in Q(zeta_e)
/// with e the group exponent.
class ClassFunction {
 public:
  ClassFunction(ClassDataPtr classes, std::vector<Cyclotomic> values);
  static ClassFunction zero(ClassDataPtr classes);
  static ClassFunction constant(ClassDataPtr classes, const Rational& value);

  const ClassDataPtr& classes() const { return classes_; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& on_class(std::size_t c) const { return values_.at(c); }
  const Cyclotomic& at(Element g) const { return values_.at(classes_->classes.class_of.at(g)); }
  /// Value at the identity.
  const Cyclotomic& degree() const { return values_.front(); }
  bool is_rational_valued() const;

  ClassFunction operator+(const ClassFunction& rhs) const;
  ClassFunction operator-(const ClassFunction& rhs) const;
  ClassFunction operator*(const Rational& scale) const;
  ClassFunction& operator+=(const ClassFunction& rhs);
  /// Applies sigma_k to every value.
  ClassFunction galois(long long k) const;

  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

 private:
  void check_compatible(const ClassFunction& rhs) const;

  ClassDataPtr classes_;
  std::vector<Cyclotomic> values_;
};

/// (1/|G|) sum_g a(g) conj(b(g)). Throws GroupMismatch.
Rational inner_product(const ClassFunction& a, const ClassFunction& b);

ClassFunction trivial_character(const ClassDataPtr& classes);
ClassFunction regular_character(const ClassDataPtr& classes);
/// Character of the permutation representation on G/H: value at g is the
/// number of cosets fixed by g. Throws NotASubgroup if H is from another group.
ClassFunction permutation_character(const ClassDataPtr& classes, const Subgroup& h);

/// dim V^H = (1/|H|) sum_{h in H} chi(h). The Frobenius reciprocity value
/// <rho_H, chi> is computed as well and the two must agree.
/// Throws NonIntegralAverage when chi is not a character.
unsigned fixed_dim(const ClassFunction& chi, const Subgroup& h);
/// The averaging route alone, as an exact rational.
Rational fixed_space_average(const ClassFunction& chi, const Subgroup& h);

/// (1/|G|) sum_g chi(g^2). Throws NotIrreducible unless <chi, chi> = 1.
int frobenius_schur(const ClassFunction& chi);

struct CharacterTable {
  ClassDataPtr classes;
  /// Trivial character first, then by degree, then by value tuple
  /// (lexicographically descending on power-basis coefficients).
  std::vector<ClassFunction> irreducibles;
  std::vector<unsigned> degrees;
  std::uint64_t prime = 0;  // modulus used by the modular construction

  std::size_t size() const { return irreducibles.size(); }
  const GroupPtr& group() const { return classes->group; }
};

struct DixonOptions {
  std::uint64_t prime_search_bound = 1u << 30;
  /// Exact row orthonormality check after lifting.
  bool verify = true;
};

/// Complex irreducible characters via Dixon's modular method.
/// Throws NoSuitablePrime when no prime p = 1 (mod e), p > 2|G| lies below the bound.
CharacterTable character_table(const GroupPtr& group, const DixonOptions& options = {});

enum class SchurProvenance { Heuristic, Override };

/// One Galois orbit of complex irreducibles, i.e. one rational irreducible W.
struct RationalClass {
  std::vector<std::size_t> members;  // irreducible indices, ascending
  unsigned degree = 1;               // d of each member
  unsigned field_degree = 1;         // [K_V : Q] = orbit size
  unsigned schur_index = 1;
  SchurProvenance provenance = SchurProvenance::Heuristic;
  ClassFunction rational_character;  // s * sum over the orbit
  unsigned n = 1;                    // d / s

  std::size_t representative() const { return members.front(); }
  unsigned dim_w() const { return schur_index * degree * field_degree; }
};

/// irreducible index of an orbit representative -> Schur index
using SchurOverrides = std::map<std::size_t, unsigned>;

/// Galois orbits of the table, trivial class first, ordered by smallest member.
/// Schur index is 2 when the Frobenius-Schur indicator is -1, else 1, unless
/// overridden. Throws NonIntegralN.
std::vector<RationalClass> rational_classes(const CharacterTable& table,
                                            const SchurOverrides& overrides = {});

/// Element of Q[G] as a dense coefficient vector indexed by element.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(GroupPtr group);
  GroupAlgebraElement(GroupPtr group, std::vector<Rational> coefficients);
  static GroupAlgebraElement identity(GroupPtr group);

  const GroupPtr& group() const { return group_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](Element g) const { return coeffs_.at(g); }
  bool is_zero() const;

  GroupAlgebraElement operator+(const GroupAlgebraElement& rhs) const;
  /// Convolution product.
  GroupAlgebraElement operator*(const GroupAlgebraElement& rhs) const;

  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

 private:
  GroupPtr group_;
  std::vector<Rational> coeffs_;
};

/// e_W = (d/|G|) sum_{sigma} sum_g chi^sigma(g^-1) g
GroupAlgebraElement central_idempotent(const CharacterTable& table, const RationalClass& w);

namespace detail {
/// Raw modular construction; rows in discovery order.
std::vector<std::vector<Cyclotomic>> dixon_rows(const ClassData& classes, const DixonOptions& options,
                                                std::uint64_t& prime_used);
}  // namespace detail

}  // namespace isodec

#endif  // ISODEC_CHARACTERS_HPP
