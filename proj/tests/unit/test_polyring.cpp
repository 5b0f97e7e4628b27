#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "oracles.hpp"
#include "urset/errors.hpp"
#include "urset/polyring.hpp"

using namespace urset;
using poly::RatPoly;
using poly::YiFamily;
using qs::Rational;
using qs::SContext;

namespace {

Rational R(const char* s) { return Rational::parse(s); }

RatPoly P(std::initializer_list<const char*> coeffs) {
  std::vector<Rational> c;
  for (const char* s : coeffs) c.push_back(R(s));
  return RatPoly(c);
}

oracle::Poly to_oracle(const RatPoly& p) {
  oracle::Poly out;
  for (const auto& c : p.coeffs()) out.push_back(c.raw());
  return out;
}

Rational from(const oracle::Q& q) { return Rational(q.get_num(), q.get_den()); }

RatPoly random_poly(oracle::Gen& g, long max_degree) {
  std::vector<Rational> c;
  const long d = g.range(1, max_degree);
  for (long i = 0; i <= d; ++i) c.push_back(from(g.rational(20, 4)));
  if (c.back().is_zero()) c.back() = Rational(1);
  return RatPoly(c);
}

}  // namespace

TEST_CASE("construction trims and prints") {
  CHECK(P({"1", "0", "0"}).degree() == 0);
  CHECK(RatPoly().degree() == -1);
  CHECK(P({"1", "0", "0", "0", "0", "0", "1", "1"}).str() == "X^7 + X^6 + 1");
  CHECK(P({"-3", "17/2", "-11/2", "1"}).str() == "X^3 - (11/2)X^2 + (17/2)X - 3");
  CHECK(RatPoly().str() == "0");
}

TEST_CASE("evaluation examples") {
  const auto f = YiFamily(7, 1, 1, 1).polynomial();
  CHECK(f.eval(0) == Rational(1));
  CHECK(f.eval(1) == Rational(3));
  CHECK(f.eval(-1) == Rational(1));
  CHECK(f.eval(R("1/2")) == R("1/128") + R("1/64") + 1);
}

TEST_CASE("arithmetic and division") {
  oracle::Gen g(31);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(g, 6), b = random_poly(g, 4);
    const auto dm = poly::divmod(a, b);
    CHECK(dm.quotient * b + dm.remainder == a);
    CHECK(dm.remainder.degree() < b.degree());
    const Rational x = from(g.rational(10, 3));
    CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    CHECK((a - b).eval(x) == a.eval(x) - b.eval(x));
  }
  CHECK_THROWS_AS(poly::divmod(P({"1"}), RatPoly()), DomainError);
}

TEST_CASE("resultant examples") {
  const Rational a = R("3/2"), b = R("-5");
  CHECK(poly::resultant(P({"-3/2", "1"}), P({"5", "1"})) == a - b);
  CHECK(poly::resultant(P({"1", "0", "1"}), P({"0", "1"})) == Rational(1));
  CHECK(poly::resultant(P({"-1", "0", "1"}), P({"0", "2"})) == Rational(-4));
  CHECK(oracle::sylvester_resultant(to_oracle(P({"-1", "0", "1"})), to_oracle(P({"0", "2"}))) == -4);
  CHECK_THROWS_AS(poly::resultant(RatPoly(), P({"1"})), DomainError);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  oracle::Gen g(32);
  for (int i = 0; i < 300; ++i) {
    const auto p = random_poly(g, 6), q = random_poly(g, 6);
    CHECK(poly::resultant(p, q) == from(oracle::sylvester_resultant(to_oracle(p), to_oracle(q))));
  }
}

TEST_CASE("discriminant examples") {
  CHECK(poly::discriminant(P({"-1", "0", "1"})) == Rational(4));
  CHECK(poly::discriminant(P({"0", "0", "1"})) == Rational(0));
  CHECK(poly::discriminant(P({"7", "3", "1"})) == Rational(9 - 28));
  CHECK_THROWS_AS(poly::discriminant(P({"5"})), DomainError);

  const auto f = YiFamily(7, 1, 1, 1).polynomial();
  const auto want = oracle::sylvester_discriminant(to_oracle(f));
  CHECK(want == -870199);
  CHECK(poly::discriminant(f) == Rational(-870199));

  oracle::Gen g(33);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_poly(g, 6);
    if (p.degree() < 1) continue;
    CHECK(poly::discriminant(p) == from(oracle::sylvester_discriminant(to_oracle(p))));
  }
}

TEST_CASE("gcd") {
  const auto a = P({"-1", "0", "1"}), b = P({"1", "1"});
  CHECK(poly::gcd(a, b) == P({"1", "1"}));
  CHECK(poly::gcd(a * P({"2", "1"}), b * P({"2", "1"})) == P({"2", "3", "1"}));
  CHECK(poly::gcd(P({"3"}), a) == P({"1"}));
}

TEST_CASE("build_from_roots") {
  const std::vector<Rational> pm{1, -1};
  CHECK(poly::build_from_roots(pm) == P({"-1", "0", "1"}));
  CHECK(poly::build_from_roots(std::vector<Rational>{}) == P({"1"}));
  const std::vector<Rational> r{2, 3, R("1/2")};
  CHECK(poly::build_from_roots(r) == P({"-3", "17/2", "-11/2", "1"}));
  const std::vector<Rational> dup{2, 2};
  CHECK_THROWS_AS(poly::build_from_roots(dup), DomainError);

  oracle::Gen g(34);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> roots;
    while (roots.size() < 5) {
      const Rational x = from(g.rational(30, 5));
      if (std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
    }
    const auto f = poly::build_from_roots(roots);
    CHECK(f.degree() == 5);
    CHECK(f.leading() == Rational(1));
    for (const auto& x : roots) CHECK(f.eval(x).is_zero());
  }
}

TEST_CASE("family construction") {
  CHECK(YiFamily(7, 1, 1, 1).polynomial().str() == "X^7 + X^6 + 1");
  CHECK(YiFamily(9, 2, R("-2"), R("3")).polynomial() == P({"3", "0", "0", "0", "0", "0", "0", "-2", "0", "1"}));
  CHECK_THROWS_AS(YiFamily(3, 3, 1, 1), DomainError);
  CHECK_THROWS_AS(YiFamily(3, 0, 1, 1), DomainError);
}

TEST_CASE("yi_validate verdicts") {
  const auto S = SContext::parse("2,3");
  auto rep = poly::yi_validate(S, YiFamily(7, 1, 1, 1));
  CHECK(rep.pass());
  CHECK(rep.discriminant == Rational(-870199));
  CHECK(poly::yi_validate(SContext(), YiFamily(7, 1, 1, 1)).pass());

  rep = poly::yi_validate(S, YiFamily(6, 1, 1, 1));
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.degree_gap.pass);
  CHECK(rep.coprime.pass);

  rep = poly::yi_validate(S, YiFamily(8, 2, 1, 1));
  CHECK_FALSE(rep.coprime.pass);

  rep = poly::yi_validate(S, YiFamily(7, 1, 1, R("1/5")));
  CHECK_FALSE(rep.b_s_unit.pass);
  CHECK_FALSE(rep.roots_s_units.pass);
  CHECK_FALSE(rep.pass());

  rep = poly::yi_validate(S, YiFamily(7, 1, R("5"), 1));
  CHECK_FALSE(rep.a_s_unit.pass);

  // P(-6/7) = 0 = P'(-6/7) for b = -6^6/7^7.
  const Rational b = -(Rational(6).pow(6) / Rational(7).pow(7));
  const YiFamily fam(7, 1, 1, b);
  const auto f = fam.polynomial();
  CHECK(f.eval(R("-6/7")).is_zero());
  CHECK(f.derivative().eval(R("-6/7")).is_zero());
  CHECK(oracle::gcd_degree(to_oracle(f), to_oracle(f.derivative())) >= 1);
  rep = poly::yi_validate(SContext::parse("2,3,7"), fam);
  CHECK_FALSE(rep.squarefree.pass);
  CHECK(rep.discriminant.is_zero());
  CHECK_FALSE(rep.pass());
}

TEST_CASE("validation pass is the conjunction of checks") {
  const auto S = SContext::parse("2,3,5");
  oracle::Gen g(35);
  const std::vector<const char*> coeffs{"1", "-1", "2", "1/3", "5", "7", "-9/4", "1/7"};
  for (int i = 0; i < 150; ++i) {
    const unsigned long m = g.range(1, 4);
    const unsigned long n = m + g.range(1, 12);
    const YiFamily fam(n, m, R(coeffs[g.range(0, 7)]), R(coeffs[g.range(0, 7)]));
    const auto rep = poly::yi_validate(S, fam);
    const bool all = rep.coprime.pass && rep.degree_gap.pass && rep.a_s_unit.pass && rep.b_s_unit.pass &&
                     rep.squarefree.pass && rep.roots_s_units.pass;
    CHECK(rep.pass() == all);
    CHECK(rep.degree_gap.pass == (n > 2 * m + 4));
    CHECK(rep.coprime.pass == (std::gcd(n, m) == 1));
  }
}
