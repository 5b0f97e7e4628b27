#include "urset/qsarith.hpp"

#include <algorithm>
#include <cctype>

#include "urset/errors.hpp"

namespace urset::qs {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) throw ParseError("", "malformed integer '" + std::string(text) + "'");
  Integer v(std::string(body), 10);
  return negative ? Integer(-v) : v;
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  v_.get_num() = num;
  v_.get_den() = den;
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    try {
      return Rational(parse_integer(text));
    } catch (const ParseError&) {
      throw ParseError("", "malformed rational '" + std::string(text) + "' (expected \"a/b\" or \"a\")");
    }
  }
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!all_digits(den) || (num.empty()))
    throw ParseError("", "malformed rational '" + std::string(text) + "' (expected \"a/b\" or \"a\")");
  Integer n;
  try {
    n = parse_integer(num);
  } catch (const ParseError&) {
    throw ParseError("", "malformed rational '" + std::string(text) + "' (expected \"a/b\" or \"a\")");
  }
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("", "zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  Rational r;
  r.v_ = 1 / v_;
  return r;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Rational r;
  mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return numerator().get_str();
  return numerator().get_str() + "/" + denominator().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

bool canonical_less(const Rational& a, const Rational& b) {
  const int c = cmp(a.numerator(), b.numerator());
  if (c != 0) return c < 0;
  return a.denominator() < b.denominator();
}

Place Place::finite(const Integer& p) {
  if (!is_prime(p)) throw DomainError("place over non-prime " + p.get_str());
  return {Kind::Finite, p};
}

std::string Place::str() const { return kind == Kind::Archimedean ? "inf" : prime.get_str(); }

// ---------------------------------------------------------------------------
// Primality

const Integer& primality_certified_bound() {
  static const Integer bound("3317044064679887385961981", 10);
  return bound;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  static const unsigned long kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned long b : kBases) {
    if (n == b) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), b) != 0) return false;
  }
  if (n >= primality_certified_bound())
    throw DomainError("primality of " + n.get_str() + " cannot be certified deterministically");

  Integer d = n - 1;
  const auto s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  const Integer n_minus_1 = n - 1;
  Integer x;
  for (unsigned long b : kBases) {
    const Integer base(b);
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) continue;
    bool witness = true;
    for (mp_bitcnt_t r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n_minus_1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// S-context

const Integer& SContext::default_budget() {
  static const Integer budget("1000000000000000000000000", 10);  // 10^24
  return budget;
}

SContext::SContext(std::vector<Integer> primes, Integer factoring_budget)
    : primes_(std::move(primes)), budget_(std::move(factoring_budget)) {
  if (budget_ < 1) throw DomainError("factoring budget must be positive");
  if (budget_ >= primality_certified_bound())
    throw DomainError("factoring budget " + budget_.get_str() + " exceeds the certified primality range (< " +
                      primality_certified_bound().get_str() + ")");
  std::sort(primes_.begin(), primes_.end());
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (!is_prime(primes_[i])) throw DomainError(primes_[i].get_str() + " is not prime");
    if (i > 0 && primes_[i] == primes_[i - 1]) throw DomainError("duplicate prime " + primes_[i].get_str() + " in S");
  }
}

SContext SContext::parse(std::string_view csv, Integer factoring_budget) {
  std::vector<Integer> primes;
  std::size_t start = 0;
  while (start <= csv.size() && !csv.empty()) {
    auto comma = csv.find(',', start);
    if (comma == std::string_view::npos) comma = csv.size();
    const auto item = csv.substr(start, comma - start);
    Integer p;
    try {
      p = parse_integer(item);
    } catch (const ParseError&) {
      throw ParseError("--s", "malformed prime '" + std::string(item) + "'");
    }
    primes.push_back(p);
    start = comma + 1;
  }
  return SContext(std::move(primes), std::move(factoring_budget));
}

bool SContext::contains(const Integer& p) const { return std::binary_search(primes_.begin(), primes_.end(), p); }

std::vector<Place> SContext::places() const {
  std::vector<Place> out{Place::archimedean()};
  for (const auto& p : primes_) out.push_back({Place::Kind::Finite, p});
  return out;
}

std::string SContext::str() const {
  std::string out;
  for (const auto& p : primes_) {
    if (!out.empty()) out += ',';
    out += p.get_str();
  }
  return out;
}

Integer Factorization::value() const {
  Integer v = sign;
  Integer pe;
  for (const auto& [p, e] : factors) {
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Valuations and S-predicates

long ord(const Integer& p, const Rational& x) {
  if (x.is_zero()) throw DomainError("valuation of zero undefined");
  if (!is_prime(p)) throw DomainError("ord: " + p.get_str() + " is not prime");
  Integer rest;
  const auto up = mpz_remove(rest.get_mpz_t(), x.numerator().get_mpz_t(), p.get_mpz_t());
  const auto down = mpz_remove(rest.get_mpz_t(), x.denominator().get_mpz_t(), p.get_mpz_t());
  return static_cast<long>(up) - static_cast<long>(down);
}

Integer strip_s_part(const SContext& S, const Integer& n) {
  if (n == 0) throw DomainError("S-part of zero undefined");
  Integer rest = ::abs(n);
  for (const auto& p : S.primes()) mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
  return rest;
}

bool is_s_integer(const SContext& S, const Rational& x) { return strip_s_part(S, x.denominator()) == 1; }

bool is_s_unit(const SContext& S, const Rational& x) {
  return !x.is_zero() && strip_s_part(S, x.numerator()) == 1 && strip_s_part(S, x.denominator()) == 1;
}

SDecomposition s_decompose(const SContext& S, const Integer& n) {
  if (n < 1) throw DomainError("s_decompose expects a positive integer, got " + n.get_str());
  Integer non_s = strip_s_part(S, n);
  if (non_s > S.factoring_budget())
    throw BudgetError("factoring budget exceeded: non-S cofactor " + non_s.get_str() + " > " +
                      S.factoring_budget().get_str());
  return {n / non_s, std::move(non_s)};
}

Factorization factor_outside_s(const SContext& S, const Integer& n) {
  return factor(strip_s_part(S, n), S.factoring_budget());
}

}  // namespace urset::qs
