#include <string>
#include <vector>

#include "isodec/error.hpp"
#include "isodec/group.hpp"

namespace isodec::presets {

GroupPtr dihedral(unsigned q, std::size_t max_order) {
  if (q == 0 || q % 2 == 0)
    throw Error(Errc::InvalidArgument, "dihedral preset needs an odd q >= 1, got " + std::to_string(q));
  std::vector<std::string> names{"r", "s"};
  if (q == 1) {
    // The 2-gon action is not faithful; use the Klein group on 4 points.
    std::vector<Permutation> gens{Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                  Permutation::from_cycles(4, {{0, 2}, {1, 3}})};
    return FiniteGroup::generate(gens, names, max_order);
  }
  const std::uint32_t n = 2 * q;
  std::vector<std::uint32_t> rotation(n), reflection(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    rotation[i] = (i + 1) % n;
    reflection[i] = (n - i) % n;
  }
  std::vector<Permutation> gens{Permutation(rotation), Permutation(reflection)};
  return FiniteGroup::generate(gens, names, max_order);
}

GroupPtr elementary_abelian_2(unsigned t, std::size_t max_order) {
  if (t == 0) throw Error(Errc::InvalidArgument, "Z_2^t needs t >= 1");
  if (t >= 63 || (std::size_t(1) << t) > max_order)
    throw Error(Errc::OrderCapExceeded,
                "Z_2^" + std::to_string(t) + " exceeds the order cap of " + std::to_string(max_order));
  std::vector<Permutation> gens;
  std::vector<std::string> names;
  for (std::uint32_t i = 0; i < t; ++i) {
    gens.push_back(Permutation::from_cycles(2 * t, {{2 * i, 2 * i + 1}}));
    names.push_back("e" + std::to_string(i + 1));
  }
  return FiniteGroup::generate(gens, names, max_order);
}

GroupPtr quaternion() {
  // Points 0..7 stand for 1, i, j, k, -1, -i, -j, -k; right multiplication.
  // unit products: table[a][b] for a, b in {1, i, j, k} as (sign, unit)
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto right_mul = [](int unit) {
    std::vector<std::uint32_t> images(8);
    for (int x = 0; x < 8; ++x) {
      int base = x % 4;
      int sign = x < 4 ? 1 : -1;
      sign *= kSign[base][unit];
      int u = kUnit[base][unit];
      images[x] = std::uint32_t(sign > 0 ? u : u + 4);
    }
    return Permutation(images);
  };
  std::vector<Permutation> gens{right_mul(1), right_mul(2)};
  std::vector<std::string> names{"i", "j"};
  return FiniteGroup::generate(gens, names);
}

GroupPtr cyclic(unsigned n, std::size_t max_order) {
  if (n == 0) throw Error(Errc::InvalidArgument, "cyclic group needs n >= 1");
  std::vector<std::uint32_t> images(n);
  for (std::uint32_t i = 0; i < n; ++i) images[i] = (i + 1) % n;
  std::vector<Permutation> gens{Permutation(images)};
  std::vector<std::string> names{"c"};
  return FiniteGroup::generate(gens, names, max_order);
}

GroupPtr symmetric(unsigned n, std::size_t max_order) {
  if (n < 2) throw Error(Errc::InvalidArgument, "symmetric group needs n >= 2");
  std::vector<std::uint32_t> cycle(n);
  for (std::uint32_t i = 0; i < n; ++i) cycle[i] = i;
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cycle})};
  std::vector<std::string> names{"a", "b"};
  return FiniteGroup::generate(gens, names, max_order);
}

GroupPtr alternating4() {
  std::vector<Permutation> gens{Permutation::from_cycles(4, {{0, 1, 2}}),
                                Permutation::from_cycles(4, {{0, 1}, {2, 3}})};
  std::vector<std::string> names{"a", "b"};
  return FiniteGroup::generate(gens, names);
}

}  // namespace isodec::presets
