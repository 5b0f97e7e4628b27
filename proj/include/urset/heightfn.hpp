#pragma once

// Heights and counting functions over Q. Every log-valued quantity is held
// as a positive integer M standing for log M, so sums become products and
// every inequality is decided by exact integer comparison.

#include <string>
#include <vector>

#include "urset/qsarith.hpp"

namespace urset::ht {

using qs::Integer;
using qs::Rational;

/// A positive integer M read as the real number log M (natural log).
/// Magnitude(1) is the zero quantity.
class Magnitude {
 public:
  Magnitude() : value_(1) {}
  explicit Magnitude(Integer value);
  static Magnitude of(long value) { return Magnitude(Integer(value)); }

  const Integer& value() const { return value_; }
  bool is_zero_quantity() const { return value_ == 1; }

  /// log(AB) = log A + log B.
  Magnitude operator*(const Magnitude& o) const { return Magnitude(Integer(value_ * o.value_)); }
  Magnitude pow(unsigned long k) const;

  friend bool operator==(const Magnitude& a, const Magnitude& b) { return a.value_ == b.value_; }
  friend bool operator<(const Magnitude& a, const Magnitude& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Magnitude& a, const Magnitude& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Magnitude& a, const Magnitude& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Magnitude& a, const Magnitude& b) { return a.value_ >= b.value_; }

  std::string str() const { return value_.get_str(); }

 private:
  Integer value_;
};

/// coefficient * log(base). The coefficient may be any rational; the
/// quantities the library builds itself always have coefficient >= 0
/// except where a negative factor is the point (q - r - 1 - eps < 0).
struct ScaledLog {
  Rational coefficient;
  Magnitude base;
};

/// Finite linear combination of logs, sum_i c_i log B_i.
class LogSum {
 public:
  LogSum() = default;
  LogSum(const Magnitude& m) { add(1, m); }  // NOLINT(google-explicit-constructor)
  LogSum(const ScaledLog& s) { add(s.coefficient, s.base); }  // NOLINT(google-explicit-constructor)

  LogSum& add(const Rational& coefficient, const Magnitude& base);
  LogSum& operator+=(const LogSum& o);
  friend LogSum operator+(LogSum a, const LogSum& b) { return a += b; }
  LogSum scaled(const Rational& factor) const;

  const std::vector<ScaledLog>& terms() const { return terms_; }

  /// Display-only floating approximation.
  double approx() const;

 private:
  std::vector<ScaledLog> terms_;
};

enum class Ordering { Less, Equal, Greater };

const char* to_string(Ordering o);

/// Exact ordering of lhs vs rhs. Coefficients are cleared to integers and
/// the two sides compared as integer products of powers; bit-length bounds
/// decide the clear cases without exponentiating.
Ordering compare(const LogSum& lhs, const LogSum& rhs);

/// a log A vs b log B.
Ordering cmp_scaled(const ScaledLog& lhs, const ScaledLog& rhs);

inline bool less_equal(const LogSum& lhs, const LogSum& rhs) { return compare(lhs, rhs) != Ordering::Greater; }

/// Weil height, h(a/b) = log max(|a|, b).
Magnitude height(const Rational& x);

/// N(x): the non-S part of |numerator(x)|. Undefined at zero.
Magnitude counting(const qs::SContext& S, const Rational& x);

/// N^(l)(x): prod over p outside S of p^min(ord_p(x)^+, l).
Magnitude counting_trunc(const qs::SContext& S, unsigned long ell, const Rational& x);

/// Decimal approximation of log(m) for display; never used in a verdict.
std::string display_log(const Magnitude& m, int digits = 6);
std::string display_log(const LogSum& s, int digits = 6);

/// Fixed-point rendering with negative zero folded to zero.
std::string format_fixed(double v, int digits);

}  // namespace urset::ht
