#include "urset/heightfn.hpp"

#include <fmt/format.h>

#include <cmath>
#include <limits>

#include "urset/errors.hpp"

namespace urset::ht {

namespace {

// Exponent products past this many bits are refused rather than computed.
constexpr double kMaxExactBits = 1ULL << 32;

double log_of(const Integer& v) {
  if (v == 1) return 0.0;
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

struct Side {
  std::vector<std::pair<const Integer*, Integer>> powers;  // base, exponent
  Integer lo_bits = 0;  // value >= 2^lo_bits
  Integer hi_bits = 0;  // value <= 2^hi_bits

  void push(const Integer& base, const Integer& exponent) {
    const auto bits = static_cast<unsigned long>(mpz_sizeinbase(base.get_mpz_t(), 2));
    lo_bits += exponent * (bits - 1);
    hi_bits += exponent * bits;
    powers.emplace_back(&base, exponent);
  }

  Integer evaluate() const {
    Integer out = 1, pe;
    for (const auto& [base, e] : powers) {
      mpz_pow_ui(pe.get_mpz_t(), base->get_mpz_t(), e.get_ui());
      out *= pe;
    }
    return out;
  }
};

}  // namespace

Magnitude::Magnitude(Integer value) : value_(std::move(value)) {
  if (value_ < 1) throw DomainError("magnitude must be a positive integer, got " + value_.get_str());
}

Magnitude Magnitude::pow(unsigned long k) const {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), value_.get_mpz_t(), k);
  return Magnitude(std::move(out));
}

LogSum& LogSum::add(const Rational& coefficient, const Magnitude& base) {
  if (!coefficient.is_zero() && !base.is_zero_quantity()) terms_.push_back({coefficient, base});
  return *this;
}

LogSum& LogSum::operator+=(const LogSum& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

LogSum LogSum::scaled(const Rational& factor) const {
  LogSum out;
  for (const auto& t : terms_) out.add(t.coefficient * factor, t.base);
  return out;
}

double LogSum::approx() const {
  double total = 0.0;
  for (const auto& t : terms_) total += t.coefficient.raw().get_d() * log_of(t.base.value());
  return total;
}

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Equal: return "equal";
    case Ordering::Greater: return "greater";
  }
  return "?";
}

Ordering compare(const LogSum& lhs, const LogSum& rhs) {
  Integer common = 1;
  for (const auto* side : {&lhs, &rhs})
    for (const auto& t : side->terms()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), t.coefficient.denominator().get_mpz_t());

  // Positive lhs terms and negated rhs terms go left, the rest right.
  Side left, right;
  auto place = [&](const ScaledLog& t, bool on_lhs) {
    Integer e = t.coefficient.numerator() * (common / t.coefficient.denominator());
    const bool goes_left = (e > 0) == on_lhs;
    (goes_left ? left : right).push(t.base.value(), ::abs(e));
  };
  for (const auto& t : lhs.terms()) place(t, true);
  for (const auto& t : rhs.terms()) place(t, false);

  if (left.lo_bits > right.hi_bits) return Ordering::Greater;
  if (right.lo_bits > left.hi_bits) return Ordering::Less;
  if (left.hi_bits > kMaxExactBits || right.hi_bits > kMaxExactBits)
    throw BudgetError("exact log comparison needs more than 2^32 bits");
  const int c = cmp(left.evaluate(), right.evaluate());
  return c < 0 ? Ordering::Less : (c > 0 ? Ordering::Greater : Ordering::Equal);
}

Ordering cmp_scaled(const ScaledLog& lhs, const ScaledLog& rhs) { return compare(LogSum(lhs), LogSum(rhs)); }

Magnitude height(const Rational& x) {
  const Integer a = ::abs(x.numerator());
  return Magnitude(a > x.denominator() ? a : x.denominator());
}

Magnitude counting(const qs::SContext& S, const Rational& x) {
  if (x.is_zero()) throw DomainError("counting function undefined at zero");
  return Magnitude(qs::s_decompose(S, ::abs(x.numerator())).non_s_part);
}

Magnitude counting_trunc(const qs::SContext& S, unsigned long ell, const Rational& x) {
  if (x.is_zero()) throw DomainError("counting function undefined at zero");
  if (ell == 0) throw DomainError("truncation level must be positive");
  const auto f = qs::factor_outside_s(S, x.numerator());
  Integer out = 1, pe;
  for (const auto& [p, e] : f.factors) {
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), std::min(e, ell));
    out *= pe;
  }
  return Magnitude(std::move(out));
}

std::string format_fixed(double v, int digits) {
  if (std::fabs(v) < 0.5 * std::pow(10.0, -digits)) v = 0.0;
  return fmt::format("{:.{}f}", v, digits);
}

std::string display_log(const Magnitude& m, int digits) { return format_fixed(log_of(m.value()), digits); }

std::string display_log(const LogSum& s, int digits) { return format_fixed(s.approx(), digits); }

}  // namespace urset::ht
