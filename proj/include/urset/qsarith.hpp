#pragma once

// Exact rational arithmetic over Q, places, p-adic valuations and the
// S-integer / S-unit layer everything else is built on.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace urset::qs {

using Integer = mpz_class;

Integer parse_integer(std::string_view text);

/// Element of Q, always stored in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : v_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);

  /// Accepts "a/b" or "a" with an optional leading sign. Anything else,
  /// including decimal or exponent notation, is rejected.
  static Rational parse(std::string_view text);

  const Integer& numerator() const { return v_.get_num(); }
  const Integer& denominator() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational abs() const;
  Rational inverse() const;
  Rational pow(long exponent) const;

  /// "a/b", or "a" when b = 1.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

/// Ordering by (numerator, denominator) of the canonical form. Used
/// wherever output order must be canonical rather than numeric.
bool canonical_less(const Rational& a, const Rational& b);

struct Place {
  enum class Kind { Archimedean, Finite };
  Kind kind = Kind::Archimedean;
  Integer prime;  // meaningful only for Finite

  static Place archimedean() { return {}; }
  static Place finite(const Integer& p);
  std::string str() const;
};

/// Deterministic Miller-Rabin; certified for n below kPrimalityCertifiedBound.
/// Larger inputs raise DomainError instead of returning a probable answer.
bool is_prime(const Integer& n);

/// Every integer below this value has its primality decided exactly by
/// the first thirteen prime bases.
const Integer& primality_certified_bound();

/// The finite place set S. The Archimedean place is always implicitly a
/// member and never listed.
class SContext {
 public:
  static const Integer& default_budget();

  SContext() : SContext(std::vector<Integer>{}) {}
  /// Primes are sorted; duplicates or non-primes raise DomainError.
  explicit SContext(std::vector<Integer> primes, Integer factoring_budget = default_budget());

  /// Parses a comma separated prime list such as "2,3,7". Empty text is S = {}.
  static SContext parse(std::string_view primes_csv, Integer factoring_budget = default_budget());

  const std::vector<Integer>& primes() const { return primes_; }
  const Integer& factoring_budget() const { return budget_; }
  bool contains(const Integer& p) const;

  /// The Archimedean place followed by one finite place per listed prime.
  std::vector<Place> places() const;

  /// "2,3,7"
  std::string str() const;

 private:
  std::vector<Integer> primes_;
  Integer budget_;
};

struct Factorization {
  int sign = 1;
  std::map<Integer, unsigned long> factors;

  Integer value() const;
};

/// Exact factorization of a nonzero integer. |n| above `budget` raises
/// BudgetError naming n.
Factorization factor(const Integer& n, const Integer& budget);

/// e with x = p^e * (u/w), p not dividing uw.
long ord(const Integer& p, const Rational& x);

bool is_s_integer(const SContext& S, const Rational& x);
bool is_s_unit(const SContext& S, const Rational& x);

struct SDecomposition {
  Integer s_part;
  Integer non_s_part;
};

/// n = s_part * non_s_part with s_part supported on S and non_s_part coprime
/// to S. A non-S cofactor above the factoring budget raises BudgetError.
SDecomposition s_decompose(const SContext& S, const Integer& n);

/// Removes every prime of S from |n| (n != 0). No budget applies.
Integer strip_s_part(const SContext& S, const Integer& n);

/// Factorization of the non-S part of |n|, budget-checked.
Factorization factor_outside_s(const SContext& S, const Integer& n);

struct UnitPair {
  Rational u;
  Rational v;
  friend bool operator==(const UnitPair&, const UnitPair&) = default;
};

/// All S-unit pairs u + v = 1 with |ord_p(u)| <= bound for every p in S,
/// sorted by u in canonical (numerator, denominator) order.
std::vector<UnitPair> unit_equation_solutions(const SContext& S, unsigned bound, unsigned workers = 1);

}  // namespace urset::qs
