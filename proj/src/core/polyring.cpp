#include "urset/polyring.hpp"

#include <algorithm>
#include <numeric>

#include "urset/errors.hpp"

namespace urset::poly {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return RatPoly(std::move(d));
}

RatPoly RatPoly::operator-() const {
  RatPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
  return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RatPoly(std::move(v));
}

std::string RatPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (long k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    const bool unit = mag == Rational(1);
    if (k == 0 || !unit) {
      out += mag.is_integer() || k == 0 ? mag.str() : "(" + mag.str() + ")";
    }
    if (k > 0) out += k == 1 ? "X" : "X^" + std::to_string(k);
  }
  return out;
}

DivMod divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const long db = b.degree();
  if (a.degree() < db) return {{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational lead = b.leading();
  for (long k = a.degree(); k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / lead;
    if (c.is_zero()) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  std::vector<Rational> c = a.coeffs();
  const Rational lead = c.back();
  for (auto& x : c) x /= lead;
  return RatPoly(std::move(c));
}

Rational resultant(const RatPoly& p, const RatPoly& q) {
  if (p.is_zero() || q.is_zero()) throw DomainError("resultant of the zero polynomial");
  // Invariant: result = scale * res(a, b), convention lc(a)^deg b * prod b(alpha).
  Rational scale = 1;
  RatPoly a = p, b = q;
  for (;;) {
    const long da = a.degree();
    const long db = b.degree();
    if (da == 0) return scale * a.leading().pow(db);
    if (db == 0) return scale * b.leading().pow(da);
    RatPoly r = divmod(b, a).remainder;  // b(alpha) = r(alpha) at roots of a
    if (r.is_zero()) return 0;
    const long dr = r.degree();
    scale *= a.leading().pow(db - dr);
    // res(a, r) = (-1)^(da*dr) res(r, a)
    if ((da * dr) % 2 != 0) scale = -scale;
    b = std::move(a);
    a = std::move(r);
  }
}

Rational discriminant(const RatPoly& p) {
  const long d = p.degree();
  if (d < 1) throw DomainError("discriminant of a constant polynomial");
  Rational r = resultant(p, p.derivative()) / p.leading();
  return ((d * (d - 1) / 2) % 2 == 0) ? r : -r;
}

RatPoly build_from_roots(std::span<const Rational> roots) {
  std::vector<Rational> sorted(roots.begin(), roots.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("duplicate root: the root set must consist of distinct values");
  RatPoly out = RatPoly::constant(1);
  for (const auto& s : roots) out = out * RatPoly({-s, Rational(1)});
  return out;
}

YiFamily::YiFamily(unsigned long n_, unsigned long m_, Rational a_, Rational b_)
    : n(n_), m(m_), a(std::move(a_)), b(std::move(b_)) {
  if (m < 1 || n <= m) throw DomainError("family requires n > m >= 1");
}

RatPoly YiFamily::polynomial() const {
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  c[n - m] += a;
  c[0] += b;
  return RatPoly(std::move(c));
}

ValidationReport yi_validate(const qs::SContext& S, const YiFamily& fam) {
  ValidationReport rep;
  rep.family = fam;
  const auto g = std::gcd(fam.n, fam.m);
  rep.coprime = {g == 1, "gcd(" + std::to_string(fam.n) + ", " + std::to_string(fam.m) + ") = " + std::to_string(g)};
  const bool gap = fam.n > 2 * fam.m + 4;
  rep.degree_gap = {gap, std::to_string(fam.n) + (gap ? " > " : " <= ") + std::to_string(2 * fam.m + 4) + " = 2m + 4"};
  const bool a_unit = qs::is_s_unit(S, fam.a);
  const bool b_unit = qs::is_s_unit(S, fam.b);
  rep.a_s_unit = {a_unit, "a = " + fam.a.str() + (a_unit ? " is" : " is not") + " an S-unit"};
  rep.b_s_unit = {b_unit, "b = " + fam.b.str() + (b_unit ? " is" : " is not") + " an S-unit"};

  const RatPoly P = fam.polynomial();
  rep.discriminant = discriminant(P);
  rep.squarefree = {!rep.discriminant.is_zero(), "disc(P) = " + rep.discriminant.str()};

  const bool coeffs_integral = std::all_of(P.coeffs().begin(), P.coeffs().end(),
                                           [&](const Rational& c) { return qs::is_s_integer(S, c); });
  const bool roots_ok = coeffs_integral && b_unit;
  rep.roots_s_units = {
      roots_ok,
      std::string(roots_ok ? "holds" : "fails") +
          ": P is monic; coefficients are " + (coeffs_integral ? "" : "not ") +
          "all S-integers; constant term b is " + (b_unit ? "" : "not ") +
          "an S-unit. For every prime p outside S a monic p-integral polynomial with p-unit constant "
          "term has a single Newton polygon segment of slope 0, so every root has valuation 0 at every "
          "place above p, i.e. every root is an S-unit (and conversely the product of the roots is +-b)."};
  return rep;
}

}  // namespace urset::poly
