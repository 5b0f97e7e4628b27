#include <algorithm>
#include <map>
#include <vector>

#include "urset/errors.hpp"
#include "urset/qsarith.hpp"

namespace urset::qs {

namespace {

constexpr unsigned long kTrialLimit = 1U << 12;

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Brent's variant of Pollard rho. Deterministic: the polynomial constant
// walks 1, 2, 3, ... until a proper divisor appears.
Integer rho_divisor(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t()) != 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto step = [&](Integer& v) {
      v = v * v + c;
      v %= n;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          q = q * ::abs(x - y) % n;
        }
        g = gcd(q, n);
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        g = gcd(::abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

// Returns (root, k) with n = root^k and k maximal.
std::pair<Integer, unsigned long> perfect_power(const Integer& n) {
  Integer best = n;
  unsigned long best_k = 1;
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long k = 2; k <= bits; ++k) {
    Integer root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      best = root;
      best_k = k;
    }
  }
  return {best, best_k};
}

void factor_into(const Integer& n, unsigned long multiplicity, std::map<Integer, unsigned long>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += multiplicity;
    return;
  }
  const auto [root, k] = perfect_power(n);
  if (k > 1) {
    factor_into(root, multiplicity * k, out);
    return;
  }
  const Integer d = rho_divisor(n);
  factor_into(d, multiplicity, out);
  factor_into(Integer(n / d), multiplicity, out);
}

}  // namespace

Factorization factor(const Integer& n, const Integer& budget) {
  if (n == 0) throw DomainError("cannot factor zero");
  Integer rest = ::abs(n);
  if (rest > budget)
    throw BudgetError("factoring budget exceeded: " + rest.get_str() + " > " + budget.get_str());

  Factorization f;
  f.sign = n < 0 ? -1 : 1;
  for (unsigned long p : small_primes()) {
    if (rest == 1) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    const Integer prime(p);
    f.factors[prime] = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t());
  }
  factor_into(rest, 1, f.factors);
  return f;
}

}  // namespace urset::qs
