#include "urset/sharing.hpp"

#include <algorithm>
#include <map>

#include "urset/errors.hpp"
#include "urset/parallel.hpp"

namespace urset::share {

namespace {

void require_s_integer(const SContext& S, const Rational& v, const char* name) {
  if (!qs::is_s_integer(S, v)) throw DomainError(std::string(name) + " = " + v.str() + " is not an S-integer");
}

// ord_p over primes outside S, as a map prime -> signed exponent.
std::map<qs::Integer, long> outside_profile(const SContext& S, const Rational& v) {
  std::map<qs::Integer, long> out;
  for (const auto& [p, e] : qs::factor_outside_s(S, v.numerator()).factors) out[p] += static_cast<long>(e);
  for (const auto& [p, e] : qs::factor_outside_s(S, v.denominator()).factors) out[p] -= static_cast<long>(e);
  return out;
}

// The non-S parts of numerator and denominator; two nonzero values share
// exactly when these agree. Zero gets its own key.
struct ShareKey {
  bool zero = false;
  qs::Integer num;
  qs::Integer den;
  friend bool operator<(const ShareKey& a, const ShareKey& b) {
    if (a.zero != b.zero) return a.zero < b.zero;
    if (a.num != b.num) return a.num < b.num;
    return a.den < b.den;
  }
};

std::size_t coprime_count(const qs::Integer& h, const std::vector<qs::Integer>& primes) {
  // #{a in [1, h] : gcd(a, prod primes) = 1} by inclusion-exclusion.
  qs::Integer total = 0;
  const std::size_t k = primes.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    qs::Integer d = 1;
    int bits = 0;
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1U) {
        d *= primes[i];
        ++bits;
      }
    qs::Integer q = h / d;
    total += (bits % 2 == 0) ? q : qs::Integer(-q);
  }
  if (!total.fits_ulong_p()) throw BudgetError("search box too large");
  return total.get_ui();
}

}  // namespace

SharePoint share_check(const SContext& S, const RatPoly& P, const Rational& x, const Rational& y) {
  require_s_integer(S, x, "x");
  require_s_integer(S, y, "y");
  SharePoint sp{x, y, P.eval(x), P.eval(y), std::nullopt, false};
  if (sp.py.is_zero()) {
    sp.shares = sp.px.is_zero();
    return sp;
  }
  sp.u = sp.px / sp.py;
  sp.shares = !sp.px.is_zero() && qs::is_s_unit(S, *sp.u);
  return sp;
}

bool ord_profile_equal(const SContext& S, const RatPoly& P, const Rational& x, const Rational& y) {
  const Rational px = P.eval(x);
  const Rational py = P.eval(y);
  if (px.is_zero() || py.is_zero())
    throw DomainError("ord profile undefined: P vanishes at " + (px.is_zero() ? x : y).str());
  return outside_profile(S, px) == outside_profile(S, py);
}

PairSequence make_pair_sequence(const SContext& S, const RatPoly& P,
                                const std::vector<std::pair<Rational, Rational>>& pairs) {
  PairSequence seq{S, P, {}};
  seq.rows.reserve(pairs.size());
  for (const auto& [x, y] : pairs) seq.rows.push_back(share_check(S, P, x, y));
  return seq;
}

AdmissibilityReport admissibility_report(const PairSequence& seq, const Magnitude& threshold) {
  AdmissibilityReport rep;
  rep.rows = seq.rows.size();
  rep.threshold = threshold;
  auto scan = [&](CoordinateAdmissibility& c, auto pick) {
    for (std::size_t i = 0; i < seq.rows.size(); ++i) {
      const Magnitude h = ht::height(pick(seq.rows[i]));
      if (h > c.max_height) c.max_height = h;
      if (h <= threshold) {
        ++c.at_or_below;
        c.last_at_or_below = i;
      }
    }
    c.tail_length = c.last_at_or_below ? seq.rows.size() - *c.last_at_or_below - 1 : seq.rows.size();
    c.never_admissible = !seq.rows.empty() && ht::height(pick(seq.rows.back())).is_zero_quantity();
  };
  scan(rep.x, [](const SharePoint& p) -> const Rational& { return p.x; });
  scan(rep.y, [](const SharePoint& p) -> const Rational& { return p.y; });
  return rep;
}

std::vector<Rational> s_integer_box(const SContext& S, const SearchBox& box, std::size_t limit, std::size_t* total) {
  const qs::Integer& H = box.height_bound.value();
  // Denominators: S-numbers with every exponent <= exp_bound, not above H.
  std::vector<qs::Integer> dens{1};
  for (const auto& p : S.primes()) {
    std::vector<qs::Integer> next;
    for (const auto& d : dens) {
      qs::Integer v = d;
      for (unsigned e = 0; e <= box.exp_bound && v <= H; ++e, v *= p) next.push_back(v);
    }
    dens = std::move(next);
  }
  std::sort(dens.begin(), dens.end());

  std::size_t count = 0;
  for (const auto& d : dens) {
    if (d == 1) {
      const qs::Integer width = 2 * H + 1;
      if (!width.fits_ulong_p()) throw BudgetError("search box too large");
      count += width.get_ui();
      continue;
    }
    std::vector<qs::Integer> ps;
    for (const auto& p : S.primes())
      if (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()) != 0) ps.push_back(p);
    count += 2 * coprime_count(H, ps);
  }
  if (total) *total = count;

  std::vector<Rational> out;
  for (const auto& d : dens) {
    for (qs::Integer a = -H; a <= H && out.size() < limit; ++a) {
      if (d != 1 && gcd(a, d) != 1) continue;
      out.emplace_back(a, d);
    }
    if (out.size() >= limit) break;
  }
  return out;
}

std::vector<SharePoint> search_shared_pairs(const SContext& S, const RatPoly& P, const SearchBox& box,
                                            unsigned workers) {
  std::size_t total = 0;
  const auto cands = s_integer_box(S, box, box.candidate_budget, &total);

  struct Eval {
    Rational value;
    ShareKey key;
  };
  const auto evals = parallel_map<Eval>(cands.size(), workers, [&](std::size_t i) {
    Eval e{P.eval(cands[i]), {}};
    if (e.value.is_zero())
      e.key.zero = true;
    else
      e.key = {false, qs::strip_s_part(S, e.value.numerator()), qs::strip_s_part(S, e.value.denominator())};
    return e;
  });

  std::map<ShareKey, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < cands.size(); ++i) groups[evals[i].key].push_back(i);

  std::vector<SharePoint> out;
  bool pair_budget_hit = false;
  for (const auto& [key, members] : groups) {
    for (std::size_t i : members) {
      for (std::size_t j : members) {
        if (i == j) continue;
        if (out.size() >= box.pair_budget) {
          pair_budget_hit = true;
          break;
        }
        SharePoint sp{cands[i], cands[j], evals[i].value, evals[j].value, std::nullopt, true};
        if (!key.zero) sp.u = sp.px / sp.py;
        out.push_back(std::move(sp));
      }
      if (pair_budget_hit) break;
    }
    if (pair_budget_hit) break;
  }
  std::sort(out.begin(), out.end(), [](const SharePoint& a, const SharePoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });

  if (pair_budget_hit)
    throw PartialResultError<SharePoint>("search budget exceeded: more than " + std::to_string(box.pair_budget) +
                                             " sharing pairs",
                                         std::move(out), "pair groups processed in key order");
  if (cands.size() < total) {
    const std::string range = "processed " + std::to_string(cands.size()) + " of " + std::to_string(total) +
                              " candidates, through x = " + cands.back().str();
    throw PartialResultError<SharePoint>("search budget exceeded: " + range, std::move(out), range);
  }
  return out;
}

}  // namespace urset::share
