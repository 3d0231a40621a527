#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "isodec/cyclotomic.hpp"
#include "isodec/error.hpp"

using namespace isodec;

namespace {

using Poly = std::vector<std::int64_t>;

// x^e - 1 divided by Phi_d for every proper divisor d.
Poly cyclotomic_by_division(unsigned e) {
  Poly num(e + 1, 0);
  num[0] = -1;
  num[e] = 1;
  for (unsigned d = 1; d < e; ++d) {
    if (e % d) continue;
    const Poly den = cyclotomic_by_division(d);
    Poly quot(num.size() - den.size() + 1, 0);
    for (std::size_t i = quot.size(); i-- > 0;) {
      quot[i] = num[i + den.size() - 1];
      for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= quot[i] * den[j];
    }
    num = quot;
  }
  return num;
}

std::complex<double> embed(const Cyclotomic& x) {
  const double angle = 2 * std::numbers::pi / x.conductor();
  std::complex<double> out = 0;
  const auto c = x.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) out += c[k].get_d() * std::polar(1.0, angle * double(k));
  return out;
}

Cyclotomic random_element(unsigned e, std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), exp(0, int(e) - 1);
  std::map<long long, Rational> terms;
  for (int i = 0; i < 4; ++i) terms[exp(rng)] += Rational(coef(rng), 1 + (rng() % 3));
  return Cyclotomic::from_exponents(terms, e);
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::EngineAssertion;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  for (unsigned e = 1; e <= 64; ++e) {
    CHECK(cyclotomic_polynomial(e) == cyclotomic_by_division(e));
    CHECK(cyclotomic_polynomial(e).size() == euler_phi(e) + 1);
    const auto z = Cyclotomic::root_of_unity(e, 1);
    Cyclotomic value(e);
    const auto coeffs = cyclotomic_polynomial(e);
    Cyclotomic power(e, 1);
    for (auto c : coeffs) {
      value += power * Rational(c);
      power = power * z;
    }
    CHECK(value.is_zero());
  }
  CHECK(euler_phi(12) == 4);
  CHECK(cyclotomic_polynomial(6) == Poly{1, -1, 1});
}

TEST_CASE("normalization examples") {
  CHECK(Cyclotomic::from_exponents({{2, 1}}, 4) == Cyclotomic(4, -1));
  const auto real = Cyclotomic::from_exponents({{1, 1}, {5, 1}}, 6);
  CHECK(real.is_rational());
  CHECK(real.rational_value() == 1);
  for (unsigned e : {1u, 2u, 7u, 30u}) CHECK(Cyclotomic::from_exponents({{0, 3}}, e).rational_value() == 3);
  CHECK(Cyclotomic::root_of_unity(5, -1) == Cyclotomic::root_of_unity(5, 4));
  CHECK(code_of([] { Cyclotomic(0); }) == Errc::ZeroConductor);
  CHECK(code_of([] { Cyclotomic::root_of_unity(5, 1).rational_value(); }) == Errc::NotRational);
}

TEST_CASE("arithmetic examples") {
  CHECK(Cyclotomic::root_of_unity(5, 1) * Cyclotomic::root_of_unity(5, 4) == Cyclotomic(5, 1));
  const auto real = Cyclotomic::from_exponents({{1, 1}, {5, 1}}, 6);
  CHECK(real * real == Cyclotomic(6, 1));
  const auto x = Cyclotomic::root_of_unity(7, 3) + Cyclotomic(7, Rational(1, 2));
  CHECK((Cyclotomic(7) * x).is_zero());
  CHECK((x - x).is_zero());
  CHECK(-(-x) == x);
  CHECK(code_of([] { Cyclotomic(5, 1) + Cyclotomic(7, 1); }) == Errc::ConductorMismatch);
  CHECK(code_of([] { Cyclotomic(5, 1) / Cyclotomic(5); }) == Errc::DivisionByZero);
}

TEST_CASE("galois action") {
  CHECK(Cyclotomic::root_of_unity(5, 1).conj() == Cyclotomic::root_of_unity(5, 4));
  const auto real = Cyclotomic::from_exponents({{1, 1}, {5, 1}}, 6);
  CHECK(real.galois(7) == real);
  CHECK(code_of([] { Cyclotomic::root_of_unity(6, 1).galois(2); }) == Errc::NotCoprime);
}

TEST_CASE("arithmetic agrees with the complex embedding") {
  std::mt19937 rng(20261016);
  for (unsigned e : {1u, 3u, 4u, 5u, 6u, 8u, 9u, 12u, 15u, 20u, 24u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_element(e, rng);
      const auto b = random_element(e, rng);
      CHECK(std::abs(embed(a * b) - embed(a) * embed(b)) < 1e-9);
      CHECK(std::abs(embed(a + b) - (embed(a) + embed(b))) < 1e-9);
      CHECK(std::abs(embed(a.conj()) - std::conj(embed(a))) < 1e-9);
      CHECK(a.conj().conj() == a);
      if (!b.is_zero()) {
        CHECK(a / b * b == a);
        CHECK(b * b.inverse() == Cyclotomic(e, 1));
      }
      for (long long k = 1; k < e; ++k) {
        if (std::gcd(k, (long long)e) != 1) continue;
        CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
      }
    }
  }
}

TEST_CASE("rational helpers") {
  CHECK(to_string(Rational(3, 6)) == "1/2");
  CHECK(to_string(Rational(-4)) == "-4");
  CHECK(is_integer(Rational(4, 2)));
  CHECK(to_int64(Rational(-12, 3)) == -4);
  CHECK(code_of([] { to_int64(Rational(1, 3)); }) == Errc::NotRational);
}
