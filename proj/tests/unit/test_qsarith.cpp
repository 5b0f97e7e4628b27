#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "urset/errors.hpp"
#include "urset/qsarith.hpp"

using namespace urset;
using qs::Integer;
using qs::Rational;
using qs::SContext;

namespace {

Rational R(const char* s) { return Rational::parse(s); }
SContext S23() { return SContext::parse("2,3"); }
Rational from(const oracle::Q& q) { return Rational(q.get_num(), q.get_den()); }

}  // namespace

TEST_CASE("rational parsing is strict") {
  CHECK(R("3/6") == Rational(1, 2));
  CHECK(R("-4/8").str() == "-1/2");
  CHECK(R("+7").str() == "7");
  CHECK(R("0/5").str() == "0");
  CHECK_THROWS_AS(R("6/-4"), ParseError);
  for (const char* bad : {"1.5", "1e3", "", "/", "1/", "/2", "1/0", "a", "1//2", "0x10", " 1", "1 ", "--1", "1/+2"})
    CHECK_THROWS_AS(R(bad), ParseError);
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), DomainError);
}

TEST_CASE("rational arithmetic stays canonical") {
  const Rational a = R("-3/4"), b = R("5/6");
  CHECK((a + b).str() == "1/12");
  CHECK((a * b).str() == "-5/8");
  CHECK((a / b).str() == "-9/10");
  CHECK(a.pow(-2).str() == "16/9");
  CHECK(a.abs().str() == "3/4");
  CHECK_THROWS_AS(Rational(0).inverse(), DomainError);
  CHECK_THROWS_AS(a / Rational(0), DomainError);
  CHECK(R("1/2") < R("2/3"));
  CHECK(qs::canonical_less(R("-1"), R("1/2")));
  CHECK(qs::canonical_less(R("1/2"), R("1/3")));  // numerator first, then denominator
  CHECK_FALSE(qs::canonical_less(R("1/3"), R("1/2")));
}

TEST_CASE("ord examples") {
  CHECK(qs::ord(2, R("8")) == 3);
  CHECK(qs::ord(3, R("4/9")) == -2);
  CHECK(qs::ord(5, R("7")) == 0);
  CHECK_THROWS_WITH_AS(qs::ord(2, R("0")), "valuation of zero undefined", DomainError);
  CHECK_THROWS_AS(qs::ord(4, R("8")), DomainError);
}

TEST_CASE("ord is additive and odd under inversion") {
  oracle::Gen g(11);
  for (int i = 0; i < 2000; ++i) {
    const Rational x = from(g.nonzero_rational(100000, 100000));
    const Rational y = from(g.nonzero_rational(100000, 100000));
    for (long p : {2L, 3L, 5L, 7L, 101L}) {
      CHECK(qs::ord(p, x * y) == qs::ord(p, x) + qs::ord(p, y));
      CHECK(qs::ord(p, x.inverse()) == -qs::ord(p, x));
      CHECK(qs::ord(p, x) == oracle::valuation(p, x.raw()));
    }
  }
}

TEST_CASE("S-integer and S-unit predicates") {
  const auto S = S23();
  CHECK(qs::is_s_integer(S, R("5/6")));
  CHECK_FALSE(qs::is_s_integer(S, R("1/5")));
  CHECK(qs::is_s_integer(S, R("7")));
  CHECK(qs::is_s_integer(S, R("0")));
  CHECK(qs::is_s_unit(S, R("8/9")));
  CHECK(qs::is_s_unit(S, R("-1")));
  CHECK_FALSE(qs::is_s_unit(S, R("5")));
  CHECK_FALSE(qs::is_s_unit(S, R("0")));

  oracle::Gen g(12);
  for (int i = 0; i < 2000; ++i) {
    const Rational x = from(g.nonzero_rational(5000, 5000));
    CHECK(qs::is_s_unit(S, x) == (qs::is_s_integer(S, x) && qs::is_s_integer(S, x.inverse())));
  }
}

TEST_CASE("S-context construction") {
  const auto S = SContext::parse("7,2,3");
  CHECK(S.str() == "2,3,7");
  CHECK(S.contains(7));
  CHECK_FALSE(S.contains(5));
  CHECK(S.places().size() == 4);
  CHECK(S.places()[0].str() == "inf");
  CHECK(SContext::parse("").primes().empty());
  CHECK_THROWS_AS(SContext::parse("2,4"), DomainError);
  CHECK_THROWS_AS(SContext::parse("3,3"), DomainError);
  CHECK_THROWS_AS(SContext::parse("2,,3"), ParseError);
  CHECK_THROWS_AS(SContext::parse("2,x"), ParseError);
  CHECK_THROWS_AS(SContext({2}, Integer(0)), DomainError);
  CHECK_THROWS_AS(SContext({2}, qs::primality_certified_bound()), DomainError);
  CHECK_THROWS_AS(qs::Place::finite(9), DomainError);
}

TEST_CASE("s_decompose examples and budget") {
  const auto S = S23();
  auto d = qs::s_decompose(S, 120);
  CHECK(d.s_part == 24);
  CHECK(d.non_s_part == 5);
  d = qs::s_decompose(S, 8);
  CHECK(d.s_part == 8);
  CHECK(d.non_s_part == 1);
  d = qs::s_decompose(S, 35);
  CHECK(d.s_part == 1);
  CHECK(d.non_s_part == 35);

  const SContext tight({2, 3}, Integer(100));
  CHECK(qs::s_decompose(tight, Integer(2 * 97)).non_s_part == 97);
  CHECK_THROWS_WITH_AS(qs::s_decompose(tight, Integer(2 * 101)), doctest::Contains("101"), BudgetError);
  CHECK_THROWS_AS(qs::s_decompose(S, 0), DomainError);
}

TEST_CASE("factor examples") {
  const Integer budget = SContext::default_budget();
  auto f = qs::factor(80, budget);
  CHECK(f.factors == std::map<Integer, unsigned long>{{2, 4}, {5, 1}});
  CHECK(qs::factor(1, budget).factors.empty());
  f = qs::factor(728, budget);
  CHECK(f.factors == std::map<Integer, unsigned long>{{2, 3}, {7, 1}, {13, 1}});
  f = qs::factor(-12, budget);
  CHECK(f.sign == -1);
  CHECK(f.value() == -12);
  CHECK_THROWS_AS(qs::factor(0, budget), DomainError);
  CHECK_THROWS_AS(qs::factor(1001, Integer(1000)), BudgetError);
}

TEST_CASE("factor handles large semiprimes and prime powers") {
  const Integer budget = SContext::default_budget();
  const Integer p("1000000007", 10), q("998244353", 10);
  auto f = qs::factor(p * q, budget);
  CHECK(f.factors == std::map<Integer, unsigned long>{{q, 1}, {p, 1}});
  f = qs::factor(p * p, budget);
  CHECK(f.factors == std::map<Integer, unsigned long>{{p, 2}});
  f = qs::factor(Integer(101) * 101 * 101 * 101 * 101 * 101 * 101, budget);
  CHECK(f.factors == std::map<Integer, unsigned long>{{101, 7}});
  CHECK_THROWS_AS(qs::factor(p * p * p, budget), BudgetError);
  const Integer big("999999999989", 10);  // prime
  f = qs::factor(big * 4099, budget);
  CHECK(f.factors == std::map<Integer, unsigned long>{{4099, 1}, {big, 1}});
}

TEST_CASE("factor agrees with trial division") {
  oracle::Gen g(13);
  const Integer budget = SContext::default_budget();
  for (int i = 0; i < 1500; ++i) {
    const Integer n = g.range(1, 50000000);
    const auto f = qs::factor(n, budget);
    CHECK(f.value() == n);
    std::map<Integer, unsigned long> want;
    for (const auto& [p, e] : oracle::trial_factor(n)) want[p] = e;
    CHECK(f.factors == want);
  }
}

TEST_CASE("primality") {
  CHECK_FALSE(qs::is_prime(1));
  CHECK(qs::is_prime(2));
  CHECK(qs::is_prime(41));
  CHECK_FALSE(qs::is_prime(561));                      // Carmichael
  CHECK_FALSE(qs::is_prime(Integer("3215031751", 10)));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(qs::is_prime(Integer("1000000007", 10)));
  for (long n = 1; n < 3000; ++n) CHECK(qs::is_prime(n) == (oracle::trial_factor(n) == std::map<oracle::Z, unsigned>{{n, 1}}));
  // 2^89 - 1 is prime and lies above the certified range.
  const Integer m89 = (Integer(1) << 89) - 1;
  REQUIRE(m89 > qs::primality_certified_bound());
  CHECK_THROWS_AS(qs::is_prime(m89), DomainError);
  CHECK_FALSE(qs::is_prime(m89 * 3));  // small factors still decide
}

TEST_CASE("unit equation examples") {
  const auto sols1 = qs::unit_equation_solutions(S23(), 1);
  auto has = [](const std::vector<qs::UnitPair>& v, const char* u, const char* w) {
    return std::find(v.begin(), v.end(), qs::UnitPair{R(u), R(w)}) != v.end();
  };
  CHECK(has(sols1, "2", "-1"));
  const auto sols2 = qs::unit_equation_solutions(S23(), 2);
  CHECK(has(sols2, "9", "-8"));
  CHECK(has(sols2, "1/2", "1/2"));
  CHECK(std::is_sorted(sols2.begin(), sols2.end(),
                       [](const qs::UnitPair& a, const qs::UnitPair& b) { return qs::canonical_less(a.u, b.u); }));

  // S = {5}, E = 1: brute force over u, v in {+-1, +-5, +-1/5}.
  const auto S5 = SContext::parse("5");
  std::vector<qs::UnitPair> want;
  const std::vector<Rational> cand{R("1"), R("-1"), R("5"), R("-5"), R("1/5"), R("-1/5")};
  for (const auto& u : cand)
    for (const auto& v : cand)
      if (u + v == Rational(1)) want.push_back({u, v});
  std::sort(want.begin(), want.end(), [](const qs::UnitPair& a, const qs::UnitPair& b) { return qs::canonical_less(a.u, b.u); });
  CHECK(qs::unit_equation_solutions(S5, 1) == want);
  CHECK(qs::unit_equation_solutions(SContext(), 3).empty());  // only +-1 are units
}

TEST_CASE("unit equation is worker-count independent and closed under symmetries") {
  const auto S = SContext::parse("2,3,5");
  const auto one = qs::unit_equation_solutions(S, 2, 1);
  CHECK(one == qs::unit_equation_solutions(S, 2, 3));
  const std::set<std::string> keys = [&] {
    std::set<std::string> k;
    for (const auto& s : one) k.insert(s.u.str());
    return k;
  }();
  auto within = [&](const Rational& x) {
    for (const auto& p : S.primes())
      if (std::labs(qs::ord(p, x)) > 2) return false;
    return true;
  };
  for (const auto& s : one) {
    CHECK(s.u + s.v == Rational(1));
    if (within(s.v)) CHECK(keys.count(s.v.str()) == 1);
    const Rational iu = s.u.inverse();
    if (within(iu)) CHECK(keys.count(iu.str()) == 1);
  }
}
