#include <doctest.h>

#include "isodec/characters.hpp"
#include "isodec/error.hpp"
#include "support.hpp"

using namespace isodec;

namespace {

// (1/|G|) sum over elements of chi(g^2), element by element.
Rational indicator_by_elements(const ClassFunction& chi) {
  const auto& g = *chi.classes()->group;
  Cyclotomic sum(chi.classes()->conductor());
  for (Element x = 0; x < g.order(); ++x) sum += chi.at(g.mul(x, x));
  return sum.rational_value() / Rational(g.order());
}

// 2-dimensional dihedral character: r^k -> z^(jk) + z^(-jk), reflections -> 0.
std::vector<Cyclotomic> dihedral_character(const FiniteGroup& g, unsigned j) {
  const unsigned e = g.exponent();
  std::vector<Cyclotomic> out;
  const Element r = 1;
  for (Element x = 0; x < g.order(); ++x) {
    std::optional<long long> k;
    for (unsigned i = 0; i < e; ++i)
      if (g.power(r, i) == x) k = i;
    out.push_back(k ? Cyclotomic::root_of_unity(e, j * *k) + Cyclotomic::root_of_unity(e, -(long long)(j * *k))
                    : Cyclotomic(e));
  }
  return out;
}

std::vector<Cyclotomic> by_element(const ClassFunction& chi) {
  std::vector<Cyclotomic> out;
  for (Element x = 0; x < chi.classes()->group->order(); ++x) out.push_back(chi.at(x));
  return out;
}

void check_orthogonality(const CharacterTable& t) {
  const auto& cd = *t.classes;
  CHECK(t.size() == cd.size());
  Integer squares = 0;
  for (auto d : t.degrees) squares += d * d;
  CHECK(squares == Integer(cd.group->order()));
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j)
      CHECK(inner_product(t.irreducibles[i], t.irreducibles[j]) == Rational(i == j ? 1 : 0));
  for (std::size_t a = 0; a < cd.size(); ++a)
    for (std::size_t b = 0; b < cd.size(); ++b) {
      Cyclotomic sum(cd.conductor());
      for (const auto& chi : t.irreducibles) sum += chi.on_class(a) * chi.on_class(b).conj();
      const Rational expected = a == b ? Rational(cd.group->order() / cd.classes.class_size(a)) : Rational(0);
      CHECK(sum == Cyclotomic(cd.conductor(), expected));
    }
}

}  // namespace

TEST_CASE("small tables") {
  const auto z2 = character_table(presets::cyclic(2));
  REQUIRE(z2.size() == 2);
  CHECK(z2.irreducibles[0].on_class(1).rational_value() == 1);
  CHECK(z2.irreducibles[1].on_class(1).rational_value() == -1);

  const auto d12 = character_table(presets::dihedral(3));
  CHECK(d12.degrees == std::vector<unsigned>{1, 1, 1, 1, 2, 2});

  const auto z8 = character_table(presets::elementary_abelian_2(3));
  CHECK(z8.size() == 8);
  for (const auto& chi : z8.irreducibles)
    for (const auto& v : chi.values()) CHECK((v.rational_value() == 1 || v.rational_value() == -1));

  CHECK(character_table(presets::symmetric(4)).degrees == std::vector<unsigned>{1, 1, 2, 3, 3});
  CHECK(character_table(presets::alternating4()).degrees == std::vector<unsigned>{1, 1, 1, 3});
}

TEST_CASE("orthogonality") {
  for (unsigned q : {1u, 3u, 5u, 7u}) check_orthogonality(character_table(presets::dihedral(q)));
  for (unsigned t = 1; t <= 4; ++t) check_orthogonality(character_table(presets::elementary_abelian_2(t)));
  for (const auto& g : {presets::quaternion(), presets::symmetric(4), presets::alternating4(), presets::cyclic(12)})
    check_orthogonality(character_table(g));
}

TEST_CASE("linear characters are homomorphisms") {
  for (const auto& g : {presets::dihedral(5), presets::alternating4(), presets::cyclic(7)}) {
    const auto t = character_table(g);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t.degrees[i] != 1) continue;
      for (Element a = 0; a < g->order(); ++a)
        for (Element b = 0; b < g->order(); ++b)
          CHECK(t.irreducibles[i].at(g->mul(a, b)) == t.irreducibles[i].at(a) * t.irreducibles[i].at(b));
    }
  }
}

TEST_CASE("dihedral degree-two characters and their order") {
  for (unsigned q : {3u, 5u, 7u}) {
    const auto g = presets::dihedral(q);
    const auto t = character_table(g);
    REQUIRE(t.size() == q + 3);
    for (unsigned j = 1; j < q; ++j) CHECK(by_element(t.irreducibles[3 + j]) == dihedral_character(*g, j));
  }
}

TEST_CASE("inner products and permutation characters") {
  const auto g = presets::dihedral(3);
  const auto t = character_table(g);
  const auto& cd = t.classes;
  const auto reg = regular_character(cd);
  for (std::size_t i = 0; i < t.size(); ++i) CHECK(inner_product(reg, t.irreducibles[i]) == t.degrees[i]);

  const auto h1 = oracle::generated(g, {"s"});
  CHECK(inner_product(permutation_character(cd, h1), t.irreducibles[4]) == 1);

  CHECK(permutation_character(cd, Subgroup::whole(g)) == trivial_character(cd));
  CHECK(permutation_character(cd, Subgroup::trivial(g)) == reg);

  const auto rot = permutation_character(cd, oracle::generated(g, {"r"}));
  for (Element x = 0; x < g->order(); ++x)
    CHECK(rot.at(x).rational_value() == (oracle::generated(g, {"r"}).contains(x) ? 2 : 0));

  for (std::size_t i = 0; i < t.size(); ++i) CHECK(fixed_dim(t.irreducibles[i], Subgroup::trivial(g)) == t.degrees[i]);
  CHECK_THROWS_AS(permutation_character(cd, Subgroup::whole(presets::dihedral(5))), Error);
}

TEST_CASE("fixed_dim routes agree") {
  for (const auto& g : {presets::dihedral(3), presets::quaternion(), presets::symmetric(4)}) {
    const auto t = character_table(g);
    for (const auto& h : enumerate_subgroups(g))
      for (const auto& chi : t.irreducibles) {
        const auto avg = fixed_space_average(chi, h);
        CHECK(avg == inner_product(permutation_character(t.classes, h), chi));
        CHECK(Rational(fixed_dim(chi, h)) == avg);
      }
  }
}

TEST_CASE("frobenius-schur indicators") {
  for (const auto& g : {presets::dihedral(3), presets::quaternion(), presets::cyclic(5), presets::alternating4()}) {
    const auto t = character_table(g);
    CHECK(frobenius_schur(t.irreducibles[0]) == 1);
    for (const auto& chi : t.irreducibles) CHECK(Rational(frobenius_schur(chi)) == indicator_by_elements(chi));
  }
  const auto d12 = character_table(presets::dihedral(3));
  CHECK(frobenius_schur(d12.irreducibles[4]) == 1);
  CHECK(frobenius_schur(d12.irreducibles[5]) == 1);
  const auto q8 = character_table(presets::quaternion());
  CHECK(q8.degrees.back() == 2);
  CHECK(frobenius_schur(q8.irreducibles.back()) == -1);
  CHECK_THROWS_AS(frobenius_schur(regular_character(q8.classes)), Error);
}

TEST_CASE("rational classes") {
  const auto d12 = rational_classes(character_table(presets::dihedral(3)));
  CHECK(d12.size() == 6);
  for (const auto& w : d12) CHECK(w.members.size() == 1);

  const auto d20 = rational_classes(character_table(presets::dihedral(5)));
  REQUIRE(d20.size() == 6);
  std::size_t singletons = 0, pairs = 0;
  for (const auto& w : d20) (w.members.size() == 1 ? singletons : pairs) += 1;
  CHECK(singletons == 4);
  CHECK(pairs == 2);
  CHECK(d20[4].field_degree == 2);
  CHECK(d20[4].rational_character.is_rational_valued());

  for (const auto& w : rational_classes(character_table(presets::elementary_abelian_2(3)))) {
    CHECK(w.schur_index == 1);
    CHECK(w.n == 1);
  }

  const auto q8 = rational_classes(character_table(presets::quaternion()));
  CHECK(q8.back().schur_index == 2);
  CHECK(q8.back().n == 1);
  CHECK(q8.back().dim_w() == 4);

  const auto overridden = rational_classes(character_table(presets::dihedral(3)), {{4, 2}});
  CHECK(overridden[4].schur_index == 2);
  CHECK(overridden[4].provenance == SchurProvenance::Override);
  CHECK(overridden[4].n == 1);
  CHECK_THROWS_AS(rational_classes(character_table(presets::dihedral(3)), {{0, 2}}), Error);
}

TEST_CASE("central idempotents") {
  for (const auto& g : {presets::dihedral(3), presets::elementary_abelian_2(3), presets::quaternion(),
                        presets::dihedral(5)}) {
    const auto t = character_table(g);
    const auto classes = rational_classes(t);
    std::vector<GroupAlgebraElement> e;
    for (const auto& w : classes) e.push_back(central_idempotent(t, w));
    GroupAlgebraElement sum(g);
    for (std::size_t i = 0; i < e.size(); ++i) {
      CHECK(e[i] * e[i] == e[i]);
      for (std::size_t j = 0; j < e.size(); ++j)
        if (i != j) CHECK((e[i] * e[j]).is_zero());
      sum = sum + e[i];
    }
    CHECK(sum == GroupAlgebraElement::identity(g));
    for (Element x = 0; x < g->order(); ++x) CHECK(e[0][x] == Rational(1, g->order()));
  }
}
