#pragma once

#include <span>
#include <string>
#include <vector>

#include "urset/qsarith.hpp"

namespace urset::poly {

using qs::Integer;
using qs::Rational;

/// Univariate polynomial over Q, constant term first. Trailing zero
/// coefficients are always trimmed, so the zero polynomial has no entries.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  static RatPoly constant(const Rational& c) { return RatPoly({c}); }
  static RatPoly monomial(const Rational& c, std::size_t k);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  /// Zero for the zero polynomial.
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  /// Horner evaluation, exact.
  Rational eval(const Rational& x) const;
  RatPoly derivative() const;

  RatPoly operator-() const;
  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

  /// "X^7 + X^6 + 1"
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  RatPoly quotient;
  RatPoly remainder;
};

DivMod divmod(const RatPoly& a, const RatPoly& b);

/// Monic gcd; gcd(0, 0) is 0.
RatPoly gcd(RatPoly a, RatPoly b);

/// res(P, Q) = lc(P)^deg Q * prod Q(alpha) over the roots alpha of P,
/// computed by the Euclidean remainder sequence over Q.
Rational resultant(const RatPoly& p, const RatPoly& q);

/// (-1)^(d(d-1)/2) / lc(P) * res(P, P'). Zero iff P has a repeated root.
Rational discriminant(const RatPoly& p);

/// prod (X - s). Duplicate roots are rejected: the root set is a set.
RatPoly build_from_roots(std::span<const Rational> roots);

/// X^n + a X^(n-m) + b with n > m >= 1.
struct YiFamily {
  unsigned long n = 0;
  unsigned long m = 0;
  Rational a;
  Rational b;

  YiFamily() = default;
  YiFamily(unsigned long n, unsigned long m, Rational a, Rational b);
  RatPoly polynomial() const;
};

struct HypothesisCheck {
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  YiFamily family;
  HypothesisCheck coprime;        // gcd(n, m) = 1
  HypothesisCheck degree_gap;     // n > 2m + 4
  HypothesisCheck a_s_unit;
  HypothesisCheck b_s_unit;
  HypothesisCheck squarefree;     // disc != 0
  HypothesisCheck roots_s_units;  // slope-zero Newton polygon outside S
  Rational discriminant;

  bool pass() const {
    return coprime.pass && degree_gap.pass && a_s_unit.pass && b_s_unit.pass && squarefree.pass && roots_s_units.pass;
  }
};

ValidationReport yi_validate(const qs::SContext& S, const YiFamily& family);

}  // namespace urset::poly
