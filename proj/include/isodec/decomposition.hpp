#ifndef ISODEC_DECOMPOSITION_HPP
#define ISODEC_DECOMPOSITION_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "isodec/characters.hpp"
#include "isodec/covering.hpp"
#include "isodec/group.hpp"

namespace isodec {

/// B_l of the group algebra decomposition JC ~ prod B_l^{n_l}.
struct IsotypicalFactor {
  std::size_t class_index = 0;  // into Analysis::classes()
  std::int64_t dim_b = 0;
};

/// 1-based rational class label -> Schur index.
using ClassSchurOverrides = std::map<std::size_t, unsigned>;

/// Everything derived from one action: character table, rational classes and
/// factor dimensions. Immutable once built; reports take it by const reference.
class Analysis {
 public:
  explicit Analysis(const CoveringAction& action, const ClassSchurOverrides& overrides = {});
  Analysis(BranchData branching, std::shared_ptr<const CharacterTable> table,
           const ClassSchurOverrides& overrides = {});

  const BranchData& branching() const { return branching_; }
  const GroupPtr& group() const { return branching_.group; }
  const CharacterTable& table() const { return *table_; }
  const std::shared_ptr<const CharacterTable>& table_ptr() const { return table_; }
  const std::vector<RationalClass>& classes() const { return classes_; }
  const std::vector<IsotypicalFactor>& factors() const { return factors_; }
  std::int64_t genus() const { return genus_; }
  std::int64_t orbit_genus() const { return branching_.orbit_genus; }

  /// Character of the representative V_l of class l.
  const ClassFunction& representative(std::size_t l) const;
  /// d_{V_l}^H for every class, by averaging (cross-checked by reciprocity).
  std::vector<unsigned> fixed_dims(const Subgroup& h) const;
  std::int64_t quotient_genus(const Subgroup& h) const;

 private:
  void build(const ClassSchurOverrides& overrides);

  BranchData branching_;
  std::shared_ptr<const CharacterTable> table_;
  std::vector<RationalClass> classes_;
  std::vector<IsotypicalFactor> factors_;
  std::int64_t genus_ = 0;
};

/// trivial class: gamma; otherwise
/// s * f * [ d (gamma - 1) + (1/2) sum_k (d - dim V^<c_k>) ], f = field degree.
/// Throws NonIntegralDimension.
std::vector<IsotypicalFactor> factor_dimensions(const CoveringAction& action,
                                                const ClassSchurOverrides& overrides = {});

struct SubgroupProfile {
  Subgroup subgroup;
  std::int64_t genus = 0;
  std::vector<unsigned> exponents;   // n_l^H
  std::vector<unsigned> fixed_dims;  // d_l^H
};

/// Asserts quotient_genus(H) = sum_l n_l^H dim B_l.
SubgroupProfile subgroup_profile(const Analysis& analysis, const Subgroup& h);

enum class Ambient { Acting, Join };
std::string to_string(Ambient ambient);

struct AdmissibilityReport {
  std::vector<Subgroup> collection;  // subgroups of the acting group
  Ambient ambient = Ambient::Acting;
  std::size_t ambient_order = 0;
  std::int64_t ambient_orbit_genus = 0;
  std::vector<unsigned> degrees;                 // d_l of the ambient classes
  std::vector<unsigned> schur_indices;
  std::vector<std::int64_t> dim_b;               // of the ambient classes
  std::vector<std::vector<unsigned>> fixed_dims;  // [i][l] = d_l^{H_i} in the ambient
  std::vector<unsigned> sums;
  std::vector<std::optional<std::int64_t>> slacks;  // only where dim B_l != 0
  bool admissible = false;
};

/// Definition of admissibility restricted to classes with B_l != 0. With
/// Ambient::Join the collection is re-read inside the group it generates,
/// acting on the same surface through the restricted branch data.
AdmissibilityReport check_admissible(const Analysis& analysis, std::span<const Subgroup> collection,
                                     Ambient ambient = Ambient::Acting);

struct DecompositionReport {
  AdmissibilityReport admissibility;
  std::int64_t total_genus = 0;
  std::vector<std::int64_t> genera;  // g_{H_i}
  std::vector<std::optional<std::int64_t>> delta_tilde;
  std::int64_t dim_p = 0;
  bool full = false;
  std::string statement;
};

/// Throws NotAdmissible.
DecompositionReport theorem1_report(const Analysis& analysis, std::span<const Subgroup> collection,
                                    Ambient ambient = Ambient::Acting);

struct Prop2Report {
  Subgroup h1, h2, join;
  std::int64_t total_genus = 0, genus_h1 = 0, genus_h2 = 0, genus_join = 0;
  std::vector<std::int64_t> slacks;  // n_l + n_l^J - n_l^{H1} - n_l^{H2}
  std::int64_t dim_p = 0;
  bool join_genus_zero = false;
  bool full = false;  // join genus zero and g_C = g_{H1} + g_{H2}
  std::string statement;
};

Prop2Report prop2_report(const Analysis& analysis, const Subgroup& h1, const Subgroup& h2);

/// g_C - g_{C_H}
std::int64_t prym_dim(const Analysis& analysis, const Subgroup& h);

struct Corollary1Report {
  std::size_t k = 0;  // 0-based position in the collection
  std::int64_t prym_dim = 0;
  std::int64_t others_genus = 0;
  bool contained = false;  // others_genus <= prym_dim
  bool equality = false;
  bool full = false;
};

/// Throws NotAdmissible.
Corollary1Report corollary1_check(const Analysis& analysis, std::span<const Subgroup> collection,
                                  std::size_t k);

struct Prop1Report {
  bool statement1 = false;  // admissible and g_C = sum g_{H_i}
  bool statement2 = false;  // sum_i d_l^{H_i} = d_l wherever B_l != 0
  bool statement3 = false;  // sum rho_{H_i} = sum_{supp} n_l W_l + free part
  std::vector<bool> support;                // <rho_rac, W_l> != 0
  std::vector<std::int64_t> multiplicities;  // W_l in sum rho_{H_i}
  bool special_case = false;                // support is exactly l >= 2
  std::optional<bool> regular_form;         // sum rho = rho_reg + (t-1) W_1
  std::optional<std::int64_t> a1_by_degree;
  std::optional<std::int64_t> a1_by_trivial;
};

/// Evaluates the three statements by separate routes and asserts agreement.
Prop1Report prop1_equivalence(const Analysis& analysis, std::span<const Subgroup> collection);

struct TheoremBReport {
  std::size_t t = 0;
  bool characters_agree = false;  // sum |H_i| rho_{H_i} = (t-1) rho_reg + |G| W_1
  std::vector<std::int64_t> class_lhs, class_rhs;  // per class; the trivial entry is not compared
  bool classes_agree = false;
  std::int64_t dimension_lhs = 0;  // (t-1) g_C + |G| gamma
  std::int64_t dimension_rhs = 0;  // sum |H_i| g_{H_i}
  std::vector<std::int64_t> genera;
  bool holds() const { return characters_agree && classes_agree && dimension_lhs == dimension_rhs; }
};

/// Throws NotAPartition naming an uncovered element or an overlap.
TheoremBReport theoremB_report(const Analysis& analysis, std::span<const Subgroup> collection);

struct TheoremCReport {
  bool permute = false;              // H_i H_j = H_j H_i for i != j
  std::optional<bool> joins_genus_zero;  // only when all pairs permute
  bool genus_sum = false;            // g_C = sum g_{H_i}
  std::vector<std::pair<std::size_t, std::size_t>> non_permuting;
  std::vector<std::pair<std::size_t, std::size_t>> positive_join_genus;
  bool applies() const { return permute && joins_genus_zero.value_or(false) && genus_sum; }
};

TheoremCReport theoremC_check(const Analysis& analysis, std::span<const Subgroup> collection);

struct RationalRepProfile {
  std::vector<std::int64_t> multiplicities;  // W_l in rho_rac
  std::int64_t degree = 0;                   // 2 g_C
};

/// mult_l = 2 n_l dim B_l / dim W_l, checked against the Lefschetz character
/// of H_1(C, Q). Throws NonIntegralMultiplicity.
RationalRepProfile rational_rep_profile(const Analysis& analysis);

/// Character of rho_rac: 2g at the identity, 2 - #Fix(g) elsewhere.
ClassFunction rational_rep_character(const Analysis& analysis);

struct SearchOptions {
  std::size_t max_t = 3;
  bool require_full = false;
  bool dedupe_conjugates = false;
  std::size_t max_order = 512;
};

/// Admissible collections of distinct subgroups, ordered by size and then by
/// subgroup indices in enumerate_subgroups order. Dedupe keeps one collection
/// per orbit under simultaneous conjugation. Throws OrderCapExceeded.
std::vector<AdmissibilityReport> search_admissible(const Analysis& analysis, const SearchOptions& options);

struct FiberPlan {
  std::vector<unsigned> genera;  // inputs g_1..g_t
  CoveringAction action;          // over Z_2^t
  std::vector<Subgroup> kernels;  // K_i = <e_j : j != i>
  std::int64_t genus = 0;         // Riemann-Hurwitz on the constructed action
  std::int64_t dim_p = 0;         // theorem1 on {K_i}
  std::int64_t predicted_genus = 0;
  std::int64_t predicted_dim_p = 0;
  std::vector<std::int64_t> kernel_genera;
  bool admissible = false;
  // Elliptic-curve mode only.
  std::optional<unsigned> elliptic_count;
  std::vector<std::pair<unsigned, unsigned>> pairing;  // genus-2 input j carries E_a x E_b
};

/// Throws TooFewFactors, InvalidArgument, OrderCapExceeded.
FiberPlan fiber_product_action(std::span<const unsigned> genera);
FiberPlan cor3_plan(unsigned t);

namespace detail {
/// No lower bound on the number of factors; t = 1 is a single Z_2 cover.
FiberPlan build_fiber_plan(std::span<const unsigned> genera);
}  // namespace detail

}  // namespace isodec

#endif  // ISODEC_DECOMPOSITION_HPP
