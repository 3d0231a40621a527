#include <cstdlib>

#include "isodec/decomposition.hpp"
#include "isodec/error.hpp"

namespace isodec {

namespace {

Rational power_of_two(long exponent) {
  Rational out(1);
  for (long i = 0; i < std::abs(exponent); ++i) out *= 2;
  return exponent >= 0 ? out : Rational(1) / out;
}

std::int64_t exact(const Rational& value) {
  ensure(is_integer(value), "closed formula is not an integer");
  return to_int64(value);
}

}  // namespace

namespace detail {

FiberPlan build_fiber_plan(std::span<const unsigned> genera) {
  const long t = long(genera.size());
  if (t < 1) throw Error(Errc::TooFewFactors, "at least one factor is needed");
  long genus_sum = 0;
  for (auto g : genera) {
    if (g < 1) throw Error(Errc::InvalidArgument, "factor genera must be at least 1");
    genus_sum += long(g);
  }
  if (t > 11) throw Error(Errc::OrderCapExceeded, "Z_2^" + std::to_string(t) + " exceeds the order cap");

  FiberPlan plan;
  plan.genera.assign(genera.begin(), genera.end());
  const auto group = presets::elementary_abelian_2(unsigned(t));
  plan.action.group = group;
  for (long i = 0; i < t; ++i) {
    const Element e = *group->generator("e" + std::to_string(i + 1));
    for (unsigned k = 0; k < 2 * genera[i] + 2; ++k) {
      plan.action.branch_elements.push_back(e);
      plan.action.periods.push_back(2);
    }
  }
  const Analysis analysis(plan.action);
  plan.genus = analysis.genus();

  for (long i = 0; i < t; ++i) {
    std::vector<Element> seed;
    for (long j = 0; j < t; ++j)
      if (j != i) seed.push_back(*group->generator("e" + std::to_string(j + 1)));
    plan.kernels.push_back(subgroup_generate(group, seed));
    plan.kernel_genera.push_back(subgroup_profile(analysis, plan.kernels.back()).genus);
  }
  plan.admissible = check_admissible(analysis, plan.kernels).admissible;
  if (plan.admissible) plan.dim_p = theorem1_report(analysis, plan.kernels).dim_p;

  const Rational half = power_of_two(t - 1);
  plan.predicted_genus = exact(1 - power_of_two(t) + half * (t + genus_sum));
  plan.predicted_dim_p = exact(1 + half * t - power_of_two(t) + (half - 1) * genus_sum);
  return plan;
}

}  // namespace detail

FiberPlan fiber_product_action(std::span<const unsigned> genera) {
  if (genera.size() < 2) throw Error(Errc::TooFewFactors, "a fiber product needs at least two factors");
  auto plan = detail::build_fiber_plan(genera);
  ensure(plan.genus == plan.predicted_genus, "constructed genus " + std::to_string(plan.genus) +
                                                 " differs from the closed formula " +
                                                 std::to_string(plan.predicted_genus));
  for (std::size_t i = 0; i < genera.size(); ++i)
    ensure(plan.kernel_genera[i] == std::int64_t(genera[i]), "C/K_" + std::to_string(i + 1) + " has the wrong genus");
  ensure(plan.admissible, "the kernels are not admissible");
  ensure(plan.dim_p == plan.predicted_dim_p, "complementary dimension " + std::to_string(plan.dim_p) +
                                                 " differs from the closed formula " +
                                                 std::to_string(plan.predicted_dim_p));
  return plan;
}

FiberPlan cor3_plan(unsigned t) {
  if (t < 2) throw Error(Errc::InvalidArgument, "at least two elliptic curves are needed");
  const unsigned s = t / 2;
  std::vector<unsigned> genera(s, 2);
  if (t % 2 == 1) genera.push_back(1);
  auto plan = detail::build_fiber_plan(genera);

  const long tl = long(t);
  const Rational predicted =
      t % 2 == 0 ? Rational(1 - power_of_two(tl / 2) + Rational(3 * tl) * power_of_two(tl / 2 - 2))
                 : Rational(1 - power_of_two((tl + 1) / 2) + Rational(3 * tl + 1) * power_of_two((tl - 3) / 2));
  ensure(exact(predicted) == plan.predicted_genus, "elliptic genus formula disagrees with the fiber formula");
  ensure(plan.genus == plan.predicted_genus, "constructed genus differs from the closed formula");
  ensure(plan.admissible, "the kernels are not admissible");
  plan.predicted_dim_p = plan.predicted_genus - tl;
  ensure(plan.dim_p == plan.predicted_dim_p, "complementary dimension differs from g - t");

  plan.elliptic_count = t;
  for (unsigned j = 1; j <= s; ++j) plan.pairing.emplace_back(j, j + s);
  return plan;
}

}  // namespace isodec
