#pragma once

// Independent reference computations for the test suites. Nothing here
// calls into the library's algorithms: factoring is plain trial division,
// resultants come from the Sylvester determinant, gcds from a separate
// Euclid over mpq_class, and searches are direct loops.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Z = mpz_class;
using Q = mpq_class;

inline std::map<Z, unsigned> trial_factor(Z n) {
  std::map<Z, unsigned> out;
  if (n < 0) n = -n;
  for (Z p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

inline long valuation(const Z& p, const Q& x) {
  Z num = abs(x.get_num()), den = x.get_den();
  long e = 0;
  while (num % p == 0) {
    num /= p;
    ++e;
  }
  while (den % p == 0) {
    den /= p;
    --e;
  }
  return e;
}

inline bool supported_on(Z n, const std::vector<long>& primes) {
  if (n < 0) n = -n;
  if (n == 0) return false;
  for (long p : primes)
    while (n % p == 0) n /= p;
  return n == 1;
}

inline Z non_s_part(Z n, const std::vector<long>& primes) {
  if (n < 0) n = -n;
  for (long p : primes)
    while (n % p == 0) n /= p;
  return n;
}

inline Z trunc_count(const Z& n, const std::vector<long>& primes, unsigned ell) {
  Z out = 1;
  for (const auto& [p, e] : trial_factor(non_s_part(n, primes))) {
    Z pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), std::min<unsigned>(e, ell));
    out *= pe;
  }
  return out;
}

// Polynomials as coefficient vectors, constant term first.
using Poly = std::vector<Q>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Q eval(const Poly& p, const Q& x) {
  Q acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

inline Poly rem(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Q f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

inline long gcd_degree(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return static_cast<long>(a.size()) - 1;
}

inline Q det(std::vector<std::vector<Q>> m) {
  const std::size_t n = m.size();
  Q d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Q f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

/// res(P, Q) as the Sylvester determinant.
inline Q sylvester_resultant(Poly p, Poly q) {
  trim(p);
  trim(q);
  const std::size_t dp = p.size() - 1, dq = q.size() - 1;
  const std::size_t n = dp + dq;
  if (n == 0) return 1;
  std::vector<std::vector<Q>> m(n, std::vector<Q>(n, 0));
  for (std::size_t r = 0; r < dq; ++r)
    for (std::size_t i = 0; i <= dp; ++i) m[r][r + i] = p[dp - i];
  for (std::size_t r = 0; r < dp; ++r)
    for (std::size_t i = 0; i <= dq; ++i) m[dq + r][r + i] = q[dq - i];
  return det(m);
}

inline Q sylvester_discriminant(const Poly& p) {
  const long d = static_cast<long>(p.size()) - 1;
  const Q r = sylvester_resultant(p, derivative(p));
  const Q sign = (d * (d - 1) / 2) % 2 == 0 ? Q(1) : Q(-1);
  return sign * r / p.back();
}

/// Integers n in [1, limit] supported on the primes.
inline std::vector<Z> s_numbers(const std::vector<long>& primes, long limit) {
  std::vector<Z> out;
  for (long n = 1; n <= limit; ++n)
    if (supported_on(n, primes)) out.push_back(n);
  return out;
}

/// Deterministic generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Q rational(long num_bound, long den_bound) {
    const long d = range(1, den_bound);
    Q q(Z(range(-num_bound, num_bound)), Z(d));
    q.canonicalize();
    return q;
  }

  Q nonzero_rational(long num_bound, long den_bound) {
    for (;;) {
      Q q = rational(num_bound, den_bound);
      if (q != 0) return q;
    }
  }

  /// Product of primes from the list with exponents up to max_exp.
  Z s_number(const std::vector<long>& primes, unsigned max_exp) {
    Z out = 1;
    for (long p : primes) {
      const long e = range(0, max_exp);
      for (long i = 0; i < e; ++i) out *= p;
    }
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
