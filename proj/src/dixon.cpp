// Dixon's modular construction of the irreducible characters.
//
// The class-sum structure constants a_ijl give commuting matrices whose
// common eigenvectors over F_p are the central characters
// omega(C_l) = |C_l| chi(g_l) / chi(1). With p = 1 (mod e) and p not
// dividing |G| the joint eigenspaces are one-dimensional, and each value
// chi(g) is recovered exactly from the multiplicities of the e-th roots of
// unity among the eigenvalues of g, which are determined mod p.

#include <cmath>
#include <numeric>

#include "isodec/characters.hpp"
#include "isodec/error.hpp"

namespace isodec::detail {

namespace {

using u64 = std::uint64_t;

struct Fp {
  u64 p;

  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 k) const {
    u64 r = 1;
    a %= p;
    while (k) {
      if (k & 1) r = mul(r, a);
      a = mul(a, a);
      k >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 from(long long x) const {
    long long m = x % (long long)p;
    return u64(m < 0 ? m + (long long)p : m);
  }
};

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;

/// Basis of a subspace of F_p^k in reduced row echelon form.
struct Subspace {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
};

Subspace echelon(std::vector<Vec> rows, const Fp& f) {
  Subspace out;
  if (rows.empty()) return out;
  const std::size_t k = rows.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < k && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const u64 scale = f.inv(rows[r][col]);
    for (auto& x : rows[r]) x = f.mul(x, scale);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const u64 c = rows[i][col];
      for (std::size_t j = 0; j < k; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(c, rows[r][j]));
    }
    out.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

/// Null space of an m x m matrix, as coordinate vectors.
std::vector<Vec> null_space(Mat a, const Fp& f) {
  const std::size_t m = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m && r < m; ++col) {
    std::size_t pivot = r;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(a[r], a[pivot]);
    const u64 scale = f.inv(a[r][col]);
    for (auto& x : a[r]) x = f.mul(x, scale);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a[i][col] == 0) continue;
      const u64 c = a[i][col];
      for (std::size_t j = 0; j < m; ++j) a[i][j] = f.sub(a[i][j], f.mul(c, a[r][j]));
    }
    pivot_col.push_back(col);
    ++r;
  }
  std::vector<bool> is_pivot(m, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < m; ++free) {
    if (is_pivot[free]) continue;
    Vec v(m, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = f.sub(0, a[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

/// Characteristic polynomial (monic, lowest degree first) by Faddeev-LeVerrier.
Vec char_poly(const Mat& a, const Fp& f) {
  const std::size_t n = a.size();
  Vec c(n + 1, 0);
  c[n] = 1;
  Mat m(n, Vec(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    // m <- a * m + c[n-k+1] I
    Mat next(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] = f.add(next[i][j], f.mul(a[i][l], m[l][j]));
      }
    for (std::size_t i = 0; i < n; ++i) next[i][i] = f.add(next[i][i], c[n - k + 1]);
    m = std::move(next);
    u64 trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace = f.add(trace, f.mul(a[i][l], m[l][i]));
    c[n - k] = f.mul(f.sub(0, trace), f.inv(k % f.p));
  }
  return c;
}

std::vector<u64> roots(const Vec& poly, const Fp& f) {
  std::vector<u64> out;
  std::size_t remaining = poly.size() - 1;
  for (u64 x = 0; x < f.p && remaining > 0; ++x) {
    u64 acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, x), poly[i]);
    if (acc == 0) {
      out.push_back(x);
      --remaining;
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<Cyclotomic>> dixon_rows(const ClassData& cd, const DixonOptions& options,
                                                std::uint64_t& prime_used) {
  const auto& group = *cd.group;
  const auto& classes = cd.classes;
  const std::size_t k = classes.size();
  const u64 order = group.order();
  const u64 e = group.exponent();

  u64 p = 0;
  for (u64 candidate = e + 1; candidate < options.prime_search_bound; candidate += e) {
    if (candidate > 2 * order && is_prime(candidate)) {
      p = candidate;
      break;
    }
  }
  if (p == 0 || p >= (u64(1) << 31))
    throw Error(Errc::NoSuitablePrime, "no prime p = 1 mod " + std::to_string(e) + " with p > " +
                                           std::to_string(2 * order) + " below the search bound");
  prime_used = p;
  const Fp f{p};

  // Split F_p^k into joint eigenspaces of the class matrices, one class at a time.
  std::vector<Subspace> spaces;
  {
    std::vector<Vec> unit(k, Vec(k, 0));
    for (std::size_t i = 0; i < k; ++i) unit[i][i] = 1;
    spaces.push_back(echelon(std::move(unit), f));
  }
  for (std::size_t j = 1; j < k; ++j) {
    bool all_split = true;
    for (const auto& s : spaces)
      if (s.rows.size() > 1) all_split = false;
    if (all_split) break;

    // A_j[i][l] = #{x in C_i : x^-1 z_l in C_j}
    Mat a(k, Vec(k, 0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l) {
        const Element z = classes.representatives[l];
        u64 count = 0;
        for (auto x : classes.classes[i])
          if (classes.class_of[group.mul(group.inv(x), z)] == j) ++count;
        a[i][l] = count % p;
      }

    std::vector<Subspace> next;
    for (auto& space : spaces) {
      const std::size_t m = space.rows.size();
      if (m == 1) {
        next.push_back(std::move(space));
        continue;
      }
      // Restriction R with A b_s = sum_t R[t][s] b_t; coordinates are read at the pivots.
      Mat r(m, Vec(m, 0));
      std::vector<Vec> images(m);
      for (std::size_t s = 0; s < m; ++s) {
        Vec image(k, 0);
        for (std::size_t i = 0; i < k; ++i) {
          u64 acc = 0;
          for (std::size_t l = 0; l < k; ++l)
            if (a[i][l]) acc = f.add(acc, f.mul(a[i][l], space.rows[s][l]));
          image[i] = acc;
        }
        for (std::size_t t = 0; t < m; ++t) r[t][s] = image[space.pivots[t]];
      }
      const auto eigenvalues = roots(char_poly(r, f), f);
      std::size_t total = 0;
      for (auto lambda : eigenvalues) {
        Mat shifted = r;
        for (std::size_t t = 0; t < m; ++t) shifted[t][t] = f.sub(shifted[t][t], lambda);
        auto coords = null_space(shifted, f);
        if (coords.empty()) continue;
        std::vector<Vec> vectors;
        for (const auto& c : coords) {
          Vec v(k, 0);
          for (std::size_t t = 0; t < m; ++t)
            if (c[t])
              for (std::size_t l = 0; l < k; ++l) v[l] = f.add(v[l], f.mul(c[t], space.rows[t][l]));
          vectors.push_back(std::move(v));
        }
        total += vectors.size();
        next.push_back(echelon(std::move(vectors), f));
      }
      ensure(total == m, "class matrix is not diagonalizable over F_" + std::to_string(p));
    }
    spaces = std::move(next);
  }
  ensure(spaces.size() == k, "joint eigenspaces did not separate into " + std::to_string(k) + " lines");

  // primitive e-th root of unity mod p
  u64 z = 0;
  const auto factors = prime_factors(e);
  for (u64 a = 2; a < p && z == 0; ++a) {
    const u64 candidate = f.pow(a, (p - 1) / e);
    bool primitive = true;
    for (auto q : factors)
      if (f.pow(candidate, e / q) == 1) primitive = false;
    if (primitive) z = candidate;
  }
  if (e == 1) z = 1;
  ensure(z != 0, "no primitive root of unity mod p");
  const u64 inv_e = f.inv(e % p);

  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& space : spaces) {
    Vec omega = space.rows.front();
    ensure(omega[0] != 0, "central character vanishes on the identity class");
    const u64 norm = f.inv(omega[0]);
    for (auto& x : omega) x = f.mul(x, norm);

    // sum_i omega_i omega_{i*} / |C_i| = |G| / d^2
    u64 sum = 0;
    for (std::size_t i = 0; i < k; ++i)
      sum = f.add(sum, f.mul(f.mul(omega[i], omega[cd.inverse_class[i]]),
                             f.inv(classes.class_size(i) % p)));
    const u64 d_squared = f.mul(order % p, f.inv(sum));
    unsigned degree = 0;
    for (unsigned d = 1; u64(d) * d <= order; ++d)
      if (u64(d) * d % p == d_squared) degree = d;
    ensure(degree != 0, "degree is not a square root of a divisor of |G|");

    Vec chi(k);
    for (std::size_t i = 0; i < k; ++i)
      chi[i] = f.mul(f.mul(degree, omega[i]), f.inv(classes.class_size(i) % p));

    std::vector<Cyclotomic> row;
    row.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      // m_t = (1/e) sum_j chi(g^j) z^(-jt)
      std::map<long long, Rational> terms;
      u64 total = 0;
      for (u64 t = 0; t < e; ++t) {
        u64 acc = 0;
        const u64 step = f.pow(f.inv(z), t);
        u64 w = 1;
        for (u64 j = 0; j < e; ++j) {
          acc = f.add(acc, f.mul(chi[cd.power_class[i][j]], w));
          w = f.mul(w, step);
        }
        const u64 mult = f.mul(acc, inv_e);
        ensure(mult <= degree, "eigenvalue multiplicity exceeds the degree");
        total += mult;
        if (mult) terms[(long long)t] = Rational(long(mult));
      }
      ensure(total == degree, "eigenvalue multiplicities do not sum to the degree");
      row.push_back(Cyclotomic::from_exponents(terms, unsigned(e)));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace isodec::detail
