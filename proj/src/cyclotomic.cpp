#include "isodec/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "isodec/error.hpp"

namespace isodec {

namespace {

Rational canonical(const Rational& r) {
  Rational out = r;
  out.canonicalize();
  return out;
}

}  // namespace

std::string to_string(const Rational& r) { return canonical(r).get_str(); }

bool is_integer(const Rational& r) { return canonical(r).get_den() == 1; }

std::int64_t to_int64(const Rational& raw) {
  const Rational r = canonical(raw);
  if (r.get_den() != 1) throw Error(Errc::NotRational, r.get_str() + " is not an integer");
  const mpz_class& num = r.get_num();
  if (!num.fits_slong_p()) throw Error(Errc::InvalidArgument, "integer out of 64-bit range");
  return num.get_si();
}

unsigned euler_phi(unsigned e) {
  unsigned result = e;
  unsigned n = e;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::mutex poly_mutex;
std::map<unsigned, std::vector<std::int64_t>> poly_cache;

std::vector<std::int64_t> compute_cyclotomic(unsigned e) {
  // Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d, by exact division by monic factors.
  std::vector<std::int64_t> num(e + 1, 0);
  num[0] = -1;
  num[e] = 1;
  for (unsigned d = 1; d < e; ++d) {
    if (e % d) continue;
    const auto divisor = cyclotomic_polynomial(d);
    const std::size_t dd = divisor.size() - 1;
    std::vector<std::int64_t> quotient(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      const std::int64_t c = num[i];
      quotient[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * divisor[j];
    }
    num = std::move(quotient);
  }
  return num;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_polynomial(unsigned e) {
  if (e == 0) throw Error(Errc::ZeroConductor, "conductor must be positive");
  {
    std::lock_guard lock(poly_mutex);
    auto it = poly_cache.find(e);
    if (it != poly_cache.end()) return it->second;
  }
  auto poly = compute_cyclotomic(e);
  std::lock_guard lock(poly_mutex);
  poly_cache.emplace(e, poly);
  return poly;
}

struct CyclotomicField {
  unsigned e = 1;
  unsigned phi = 1;
  std::vector<std::int64_t> poly;
  // powers[k] = zeta^k reduced to the power basis, for 0 <= k < max(e, 2 phi - 1)
  std::vector<std::vector<std::int64_t>> powers;
};

namespace {

std::mutex field_mutex;
std::map<unsigned, std::shared_ptr<const CyclotomicField>> field_cache;

std::shared_ptr<const CyclotomicField> field_for(unsigned e) {
  if (e == 0) throw Error(Errc::ZeroConductor, "conductor must be positive");
  {
    std::lock_guard lock(field_mutex);
    auto it = field_cache.find(e);
    if (it != field_cache.end()) return it->second;
  }
  auto field = std::make_shared<CyclotomicField>();
  field->e = e;
  field->poly = cyclotomic_polynomial(e);
  field->phi = unsigned(field->poly.size() - 1);
  const unsigned phi = field->phi;
  const std::size_t count = std::max<std::size_t>(e, 2 * phi);
  field->powers.assign(count, std::vector<std::int64_t>(phi, 0));
  for (std::size_t k = 0; k < count; ++k) {
    if (k < phi) {
      field->powers[k][k] = 1;
      continue;
    }
    // zeta^k = zeta * zeta^(k-1); the top coordinate overflows into -sum poly_i z^i.
    const auto& prev = field->powers[k - 1];
    auto& row = field->powers[k];
    const std::int64_t top = prev[phi - 1];
    for (unsigned i = phi - 1; i > 0; --i) row[i] = prev[i - 1];
    row[0] = 0;
    for (unsigned i = 0; i < phi; ++i) row[i] -= top * field->poly[i];
  }
  std::lock_guard lock(field_mutex);
  auto [it, inserted] = field_cache.emplace(e, std::move(field));
  return it->second;
}

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by b over Q; b must be nonzero and trimmed.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1);
  for (std::size_t top = a.size(); top >= b.size(); --top) {
    const std::size_t i = top - 1;
    if (a[i] == 0) continue;
    const Rational c = a[i] / b.back();
    const std::size_t shift = i - (b.size() - 1);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly mul_poly(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

Poly sub_poly(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------

Cyclotomic::Cyclotomic(unsigned conductor) : field_(field_for(conductor)) {
  coeffs_.assign(field_->phi, Rational(0));
}

Cyclotomic::Cyclotomic(unsigned conductor, const Rational& value) : Cyclotomic(conductor) {
  coeffs_[0] = value;
  coeffs_[0].canonicalize();
}

Cyclotomic Cyclotomic::from_exponents(const std::map<long long, Rational>& terms, unsigned conductor) {
  Cyclotomic out(conductor);
  const long long e = conductor;
  const auto& f = *out.field_;
  for (auto [k, c] : terms) {
    c.canonicalize();
    if (c == 0) continue;
    const auto& row = f.powers[std::size_t(((k % e) + e) % e)];
    for (unsigned i = 0; i < f.phi; ++i)
      if (row[i] != 0) out.coeffs_[i] += c * row[i];
  }
  return out;
}

Cyclotomic Cyclotomic::root_of_unity(unsigned conductor, long long k) {
  return from_exponents({{k, Rational(1)}}, conductor);
}

unsigned Cyclotomic::conductor() const { return field_->e; }

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

const Rational& Cyclotomic::rational_value() const {
  if (!is_rational()) throw Error(Errc::NotRational, to_annotated_string() + " is not rational");
  return coeffs_[0];
}

void Cyclotomic::check_same_field(const Cyclotomic& rhs) const {
  if (field_->e != rhs.field_->e)
    throw Error(Errc::ConductorMismatch, "conductors " + std::to_string(field_->e) + " and " +
                                             std::to_string(rhs.field_->e));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
  Cyclotomic out(*this);
  out += rhs;
  return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const {
  Cyclotomic out(*this);
  out -= rhs;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::operator*(const Rational& raw) const {
  Rational rhs = raw;
  rhs.canonicalize();
  Cyclotomic out(*this);
  for (auto& c : out.coeffs_) c *= rhs;
  return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
  check_same_field(rhs);
  const auto& f = *field_;
  const unsigned phi = f.phi;
  std::vector<Rational> raw(2 * phi - 1);
  bool any = false;
  for (unsigned i = 0; i < phi; ++i) {
    if (coeffs_[i] == 0) continue;
    for (unsigned j = 0; j < phi; ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      raw[i + j] += coeffs_[i] * rhs.coeffs_[j];
      any = true;
    }
  }
  Cyclotomic out(f.e);
  if (!any) return out;
  for (unsigned k = 0; k < phi; ++k) out.coeffs_[k] = raw[k];
  for (unsigned k = phi; k < raw.size(); ++k) {
    if (raw[k] == 0) continue;
    const auto& row = f.powers[k];
    for (unsigned i = 0; i < phi; ++i)
      if (row[i] != 0) out.coeffs_[i] += raw[k] * row[i];
  }
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  const auto& f = *field_;
  Poly modulus(f.poly.begin(), f.poly.end());
  Poly a(coeffs_.begin(), coeffs_.end());
  trim(a);
  // Invariant: s_i * a == r_i (mod modulus).
  Poly r0 = modulus, r1 = a;
  Poly s0{}, s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, rem] = divmod(r0, r1);
    Poly s2 = sub_poly(s0, mul_poly(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant because Phi_e is irreducible.
  ensure(r1.size() == 1, "cyclotomic inverse: gcd with Phi_e is not constant");
  Rational scale = 1 / r1[0];
  Cyclotomic out(f.e);
  auto [q, reduced] = divmod(s1, modulus);
  for (std::size_t i = 0; i < reduced.size(); ++i) out.coeffs_[i] = reduced[i] * scale;
  return out;
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& rhs) const {
  check_same_field(rhs);
  return *this * rhs.inverse();
}

Cyclotomic Cyclotomic::galois(long long k) const {
  const auto& f = *field_;
  const long long e = f.e;
  const long long kk = ((k % e) + e) % e;
  if (std::gcd(kk, e) != 1)
    throw Error(Errc::NotCoprime, std::to_string(k) + " is not coprime to " + std::to_string(e));
  Cyclotomic out(f.e);
  for (unsigned i = 0; i < f.phi; ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& row = f.powers[std::size_t((kk * i) % e)];
    for (unsigned j = 0; j < f.phi; ++j)
      if (row[j] != 0) out.coeffs_[j] += coeffs_[i] * row[j];
  }
  return out;
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += "z";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string Cyclotomic::to_annotated_string() const {
  if (is_rational()) return to_string();
  return to_string() + " (z = zeta_" + std::to_string(field_->e) + ")";
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.field_->e == b.field_->e && a.coeffs_ == b.coeffs_;
}

bool lex_less(const Cyclotomic& a, const Cyclotomic& b) {
  a.check_same_field(b);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] < b.coeffs_[i]) return true;
    if (b.coeffs_[i] < a.coeffs_[i]) return false;
  }
  return false;
}

}  // namespace isodec
