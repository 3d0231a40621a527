#ifndef ISODEC_CYCLOTOMIC_HPP
#define ISODEC_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace isodec {

/// Exact rational with arbitrary-precision numerator and denominator,
/// always kept in lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Renders "n" or "n/d".
std::string to_string(const Rational& r);
/// True when the denominator is 1.
bool is_integer(const Rational& r);
/// Returns the value as a 64-bit integer; throws NotRational unless integral.
std::int64_t to_int64(const Rational& r);

/// Integer coefficients of the e-th cyclotomic polynomial, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(unsigned e);
unsigned euler_phi(unsigned e);

struct CyclotomicField;

/// An element of Q(zeta_e) in the power basis 1, z, ..., z^(phi(e)-1), reduced
/// modulo the e-th cyclotomic polynomial. Equality is coefficient equality.
class Cyclotomic {
 public:
  /// Zero of Q(zeta_e). Throws ZeroConductor for e = 0.
  explicit Cyclotomic(unsigned conductor);
  Cyclotomic(unsigned conductor, const Rational& value);

  /// Sum of c_k * zeta_e^k over the map; exponents are reduced mod e.
  static Cyclotomic from_exponents(const std::map<long long, Rational>& terms, unsigned conductor);
  static Cyclotomic root_of_unity(unsigned conductor, long long k);

  unsigned conductor() const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws NotRational when the value is irrational.
  const Rational& rational_value() const;

  Cyclotomic operator+(const Cyclotomic& rhs) const;
  Cyclotomic operator-(const Cyclotomic& rhs) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& rhs) const;
  Cyclotomic operator*(const Rational& rhs) const;
  /// Throws DivisionByZero.
  Cyclotomic operator/(const Cyclotomic& rhs) const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);

  /// Inverse via the extended Euclidean algorithm against Phi_e.
  Cyclotomic inverse() const;

  /// sigma_k: zeta -> zeta^k. Throws NotCoprime unless gcd(k, e) = 1.
  Cyclotomic galois(long long k) const;
  Cyclotomic conj() const { return galois(-1); }

  /// "a0 + a1*z + a2*z^2 ..." with z = zeta_e; rational values render plainly.
  std::string to_string() const;
  /// Like to_string() but annotates the conductor for irrational values.
  std::string to_annotated_string() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Lexicographic order on the coefficient vectors (not a field order).
  friend bool lex_less(const Cyclotomic& a, const Cyclotomic& b);

 private:
  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> coeffs_;

  void check_same_field(const Cyclotomic& rhs) const;
};

}  // namespace isodec

#endif  // ISODEC_CYCLOTOMIC_HPP
