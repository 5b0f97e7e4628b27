#include "urset/yitrace.hpp"

#include <algorithm>
#include <map>

#include "urset/errors.hpp"
#include "urset/linalg.hpp"
#include "urset/parallel.hpp"

namespace urset::yi {

namespace {

using sub::Verdict;

Verdict verdict_of(const LogSum& lhs, const LogSum& rhs) {
  return ht::less_equal(lhs, rhs) ? Verdict::Holds : Verdict::Violated;
}

LogSum log_of(const Magnitude& m, const Rational& coefficient = 1) {
  LogSum s;
  s.add(coefficient, m);
  return s;
}

Rational from_ulong(unsigned long v) { return Rational(Integer(v)); }

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Largest |ord_p| over p in S among the given values' denominators.
unsigned max_s_exponent(const SContext& S, const std::vector<Rational>& values) {
  unsigned best = 0;
  for (const auto& v : values)
    for (const auto& p : S.primes()) {
      Integer rest;
      const auto e = mpz_remove(rest.get_mpz_t(), v.denominator().get_mpz_t(), p.get_mpz_t());
      best = std::max(best, static_cast<unsigned>(e));
    }
  return best;
}

}  // namespace

AuxValues aux_build(const YiFamily& fam, const Rational& x, const Rational& y, const Rational& u) {
  if (fam.b.is_zero()) throw DomainError("b must be nonzero");
  const long gap = static_cast<long>(fam.n - fam.m);
  const long m = static_cast<long>(fam.m);
  const Rational inv_b = fam.b.inverse();
  return {-inv_b * x.pow(gap) * (x.pow(m) + fam.a), inv_b * y.pow(gap) * (y.pow(m) + fam.a) * u};
}

bool identity_check(const YiFamily& fam, const Rational& x, const Rational& y, const Rational& u) {
  const auto aux = aux_build(fam, x, y, u);
  return aux.eta + u + aux.zeta == Rational(1);
}

ExplicitConstants explicit_constants(const YiFamily& fam) {
  ExplicitConstants c;
  const RatPoly P = fam.polynomial();
  Integer d = 1;
  for (const auto& co : P.coeffs()) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), co.denominator().get_mpz_t());
  Rational sum;
  for (const auto& co : P.coeffs()) sum += co.abs() * Rational(d);
  c.c_p = 1 + sum.numerator();

  c.c_a = fam.a.denominator() + abs(fam.a.numerator());
  Integer ceil_a;
  mpz_cdiv_q(ceil_a.get_mpz_t(), Integer(abs(fam.a.numerator())).get_mpz_t(), fam.a.denominator().get_mpz_t());
  c.k_a = 2 * std::max(Integer(1), ceil_a) * fam.a.denominator();

  c.c_eta.add(1, ht::height(fam.b));
  c.c_eta.add(Rational(Integer(fam.n), Integer(fam.m)), Magnitude(c.k_a));
  c.row_slack = log_of(Magnitude(c.c_a), 2) + c.c_eta;
  c.c_total = c.row_slack.scaled(2);
  return c;
}

TraceRow make_trace_row(const SContext& S, const YiFamily& fam, const Rational& x, const Rational& y,
                        const Rational& u) {
  TraceRow r;
  r.x = x;
  r.y = y;
  r.u = u;
  const auto aux = aux_build(fam, x, y, u);
  r.eta = aux.eta;
  r.zeta = aux.zeta;
  const RatPoly P = fam.polynomial();
  r.px = P.eval(x);
  r.py = P.eval(y);
  r.h_x = ht::height(x);
  r.h_y = ht::height(y);
  r.h_u = ht::height(u);
  r.h_eta = ht::height(r.eta);
  r.h_zeta = ht::height(r.zeta);
  if (!x.is_zero()) r.n1_x = ht::counting_trunc(S, 1, x);
  if (!y.is_zero()) r.n1_y = ht::counting_trunc(S, 1, y);
  if (!r.eta.is_zero())
    r.n2_eta = ht::counting_trunc(S, 2, r.eta);
  else
    r.flags.emplace_back("eta vanishes");
  if (!r.zeta.is_zero())
    r.n2_zeta = ht::counting_trunc(S, 2, r.zeta);
  else
    r.flags.emplace_back("zeta vanishes");
  const long m = static_cast<long>(fam.m);
  const Rational xma = x.pow(m) + fam.a;
  const Rational yma = y.pow(m) + fam.a;
  if (!xma.is_zero()) r.n_xma = ht::counting(S, xma);
  if (!yma.is_zero()) r.n_yma = ht::counting(S, yma);
  r.identity_ok = r.eta + u + r.zeta == Rational(1);
  return r;
}

// ---------------------------------------------------------------------------

bool RothReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const RothRow& r) { return r.ok(); });
}

RothReport roth_chain_report(const SContext& S, const YiFamily& fam, const Rational& epsilon,
                             const std::vector<TraceRow>& rows) {
  RothReport rep;
  rep.c_p = explicit_constants(fam).c_p;
  const Magnitude cp(rep.c_p);
  for (const auto& r : rows) {
    if (r.px.is_zero() || r.py.is_zero()) throw DomainError("P vanishes on row (" + r.x.str() + ", " + r.y.str() + ")");
    RothRow row;
    row.n_px = ht::counting(S, r.px);
    row.n_py = ht::counting(S, r.py);
    row.counting_equal = row.n_px == row.n_py;
    row.bound_x = cp * r.h_x.pow(fam.n);
    row.bound_y = cp * r.h_y.pow(fam.n);
    row.upper_ok_x = row.n_px <= row.bound_x;
    row.upper_ok_y = row.n_py <= row.bound_y;
    row.lower_y = ht::compare(log_of(r.h_y, from_ulong(fam.n) - 1 - epsilon), log_of(row.n_py));
    if (!r.h_y.is_zero_quantity())
      row.height_ratio = LogSum(r.h_x).approx() / LogSum(r.h_y).approx();
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

bool UnitHeightReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const UnitHeightRow& r) { return r.ok; });
}

UnitHeightReport unit_height_check(const std::vector<TraceRow>& rows) {
  UnitHeightReport rep;
  for (const auto& r : rows) {
    UnitHeightRow row{r.h_u, ht::height(r.px), ht::height(r.py), false};
    row.ok = row.h_u <= row.h_px * row.h_py;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

bool TruncReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const TruncRow& r) { return r.ok(); });
}

TruncReport trunc_bound_check(const SContext& S, const YiFamily& /*fam*/, const std::vector<TraceRow>& rows) {
  TruncReport rep;
  for (const auto& r : rows) {
    TruncRow row;
    if (!r.n2_eta || !r.n2_zeta) {
      row.skip_reason = r.eta.is_zero() ? "eta vanishes" : "zeta vanishes";
      rep.rows.push_back(std::move(row));
      continue;
    }
    row.checked = true;
    // eta != 0 forces x != 0 and x^m + a != 0, likewise for zeta.
    row.bound_eta = r.n1_x->pow(2) * *r.n_xma;
    row.bound_zeta = r.n1_y->pow(2) * *r.n_yma;
    row.eta_ok = *r.n2_eta <= row.bound_eta;
    row.zeta_ok = *r.n2_zeta <= row.bound_zeta;
    row.n2_u = ht::counting_trunc(S, 2, r.u);
    row.u_zero = row.n2_u.is_zero_quantity();
    const Rational sum = r.eta + r.u + r.zeta;
    if (!sum.is_zero()) {
      row.n2_sum = ht::counting_trunc(S, 2, sum);
      row.sum_zero = row.n2_sum.is_zero_quantity();
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

// ---------------------------------------------------------------------------

bool MainReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const MainRow& r) { return r.ok(); });
}

MainReport main_inequality_report(const SContext& S, const YiFamily& fam, const Rational& epsilon,
                                  const std::vector<TraceRow>& rows) {
  if (!poly::yi_validate(S, fam).pass())
    throw DomainError("family fails the hypotheses of the construction; run validate-poly for the itemized report");
  if (epsilon.sign() < 0 || epsilon >= Rational(1)) throw DomainError("epsilon must lie in [0, 1)");

  MainReport rep;
  rep.epsilon = epsilon;
  const Rational n = from_ulong(fam.n);
  const Rational m = from_ulong(fam.m);
  rep.conj_epsilon = epsilon / n;
  rep.constants = explicit_constants(fam);
  const auto& k = rep.constants;
  const Rational gap = n - 2 * m - 4 - epsilon;
  rep.ceiling_finite = gap.sign() > 0;
  rep.ceiling_formula = "H* = C_total / (n - 2m - 4 - eps) = C_total / " + gap.str();
  if (rep.ceiling_finite) rep.ceiling = k.c_total.scaled(gap.inverse());

  const Rational conj_coeff = Rational(1) - rep.conj_epsilon;
  const Magnitude ca2 = Magnitude(k.c_a).pow(2);

  for (const auto& r : rows) {
    MainRow row;
    if (r.eta.is_zero() || r.zeta.is_zero()) {
      row.skipped = true;
      row.skip_reason = r.eta.is_zero() ? "eta vanishes" : "zeta vanishes";
      rep.rows.push_back(std::move(row));
      continue;
    }
    const LogSum hx(r.h_x), hy(r.h_y);
    const LogSum both = hx + hy;
    const LogSum derived_rhs = both.scaled(m + 2) + k.row_slack;

    auto side = [&](const Rational& e1, const Rational& e2, const Rational& e3, const Magnitude& h_self) {
      SideCheck s;
      const Magnitude top = std::max({ht::height(e1), ht::height(e2), ht::height(e3)});
      s.conj_lhs = log_of(top, conj_coeff);
      s.conj_rhs = ht::counting_trunc(S, 2, e1) * ht::counting_trunc(S, 2, e2) * ht::counting_trunc(S, 2, e3);
      const Rational sum = e1 + e2 + e3;
      if (!sum.is_zero()) s.conj_rhs = s.conj_rhs * ht::counting_trunc(S, 2, sum);
      s.conj = verdict_of(s.conj_lhs, LogSum(s.conj_rhs));
      s.height_lower_ok = ht::less_equal(log_of(h_self, n), LogSum(ht::height(e1)) + k.c_eta);
      s.derived_lhs = log_of(h_self, n - epsilon);
      s.derived_rhs = derived_rhs;
      s.derived = verdict_of(s.derived_lhs, s.derived_rhs);
      s.implication_ok = s.conj != Verdict::Holds || s.derived == Verdict::Holds;
      return s;
    };
    const Rational inv_u = r.u.inverse();
    row.x_side = side(r.eta, r.u, r.zeta, r.h_x);
    row.y_side = side(-r.zeta * inv_u, inv_u, -r.eta * inv_u, r.h_y);

    const Magnitude bound = ca2 * (r.h_x * r.h_y).pow(fam.m + 2);
    row.rhs_bound_ok = *r.n2_eta * *r.n2_zeta <= bound;
    row.beyond_ceiling = rep.ceiling_finite && ht::compare(both, rep.ceiling) == ht::Ordering::Greater;
    row.ceiling_consistent =
        !row.beyond_ceiling || row.x_side.conj == Verdict::Violated || row.y_side.conj == Verdict::Violated;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

// ---------------------------------------------------------------------------

DependenceResult dependence_detect(const std::vector<TraceRow>& rows) {
  linalg::Matrix m;
  for (const auto& r : rows) m.push_back({r.eta, r.u, r.zeta});
  DependenceResult out;
  out.rows_used = rows.size();
  for (auto& v : linalg::nullspace(m, 3)) out.basis.push_back({v[0], v[1], v[2]});
  return out;
}

const char* to_string(Branch b) {
  switch (b) {
    case Branch::C1Zero: return "c1 = 0";
    case Branch::BothNonzero: return "C2 != 0 and C3 != 0";
    case Branch::C2Zero: return "C2 = 0";
    case Branch::C3Zero: return "C3 = 0";
    case Branch::Inconsistent: return "C2 = C3 = 0 (inconsistent)";
  }
  return "?";
}

CaseReport case_classify(const SContext& S, const YiFamily& fam, const Triple& triple,
                         const std::vector<TraceRow>& rows, const CaseOptions& opts) {
  const auto& [c1, c2, c3] = triple;
  if (c1.is_zero() && c2.is_zero() && c3.is_zero()) throw DomainError("the zero triple is not a linear relation");

  CaseReport rep;
  rep.triple = triple;
  const long gap = static_cast<long>(fam.n - fam.m);
  const long m = static_cast<long>(fam.m);
  const Rational n = from_ulong(fam.n);
  auto y_value = [&](const Rational& y) { return y.pow(gap) * (y.pow(m) + fam.a); };

  if (c1.is_zero()) {
    rep.branch = Branch::C1Zero;
  } else {
    rep.c2_reduced = Rational(1) - c2 / c1;
    rep.c3_reduced = Rational(1) - c3 / c1;
    const bool z2 = rep.c2_reduced->is_zero();
    const bool z3 = rep.c3_reduced->is_zero();
    rep.branch = z2 && z3 ? Branch::Inconsistent : z2 ? Branch::C2Zero : z3 ? Branch::C3Zero : Branch::BothNonzero;
  }

  const ExplicitConstants k = explicit_constants(fam);

  // C3 = 0 hands the rows to the strong-uniqueness search, run once.
  std::optional<std::vector<std::pair<Rational, Rational>>> su_found;
  if (rep.branch == Branch::C3Zero) {
    const Rational c = rep.c2_reduced->inverse();
    std::vector<Rational> coords;
    Magnitude top;
    for (const auto& r : rows) {
      coords.push_back(r.x);
      coords.push_back(r.y);
      top = std::max({top, r.h_x, r.h_y});
    }
    share::SearchBox box;
    box.height_bound = top;
    box.exp_bound = max_s_exponent(S, coords);
    box.candidate_budget = opts.search_candidate_budget;
    try {
      su_found = strong_uniqueness_search(S, fam.polynomial(), c, box, opts.workers);
      rep.notes.push_back("strong-uniqueness search for P(x) = " + c.str() + " P(y) over height <= " +
                          top.str() + ", S-exponent <= " + std::to_string(box.exp_bound) + ": " +
                          std::to_string(su_found->size()) + " off-diagonal solutions");
    } catch (const BudgetError& e) {
      rep.notes.push_back(std::string("strong-uniqueness search incomplete: ") + e.what());
    }
  }

  std::map<unsigned, std::vector<qs::UnitPair>> unit_cache;

  switch (rep.branch) {
    case Branch::C1Zero:
      if (c3.is_zero())
        rep.relation = "c2 u = 0 (impossible for an S-unit u)";
      else if (c2.is_zero())
        rep.relation = "zeta = 0, so y^(n-m)(y^m+a) = 0";
      else
        rep.relation = "zeta = " + (-c2 / c3).str() + " u, so y^(n-m)(y^m+a) = " + (-fam.b * c2 / c3).str() +
                       " is constant";
      rep.notes.emplace_back("a constant value of y^(n-m)(y^m+a) bounds h(y), contradicting admissibility");
      break;
    case Branch::BothNonzero:
      rep.relation = rep.c3_reduced->str() + " (zeta/u) - 1/u = " + (-*rep.c2_reduced).str();
      rep.notes.emplace_back("two-term unit relation: the corollary applies to (zeta/u, 1/u) with A = C3, B = -1, C = -C2");
      break;
    case Branch::C2Zero:
      rep.relation = "y^(n-m)(y^m+a) = b / (" + rep.c3_reduced->str() + " u)";
      rep.notes.emplace_back("forces y and y^m+a to be S-units; (-y^m/a, (y^m+a)/a) then solves the S-unit equation");
      break;
    case Branch::C3Zero:
      rep.relation = "u = " + rep.c2_reduced->inverse().str();
      break;
    case Branch::Inconsistent:
      rep.relation = "0 = 1";
      rep.notes.emplace_back("C2 = C3 = 0 contradicts eta + u + zeta = 1");
      break;
  }

  for (const auto& r : rows) {
    CaseRow row;
    row.annihilates = (c1 * r.eta + c2 * r.u + c3 * r.zeta).is_zero();
    auto diag = [&](std::string key, std::string value) { row.diagnostics.emplace_back(std::move(key), std::move(value)); };
    switch (rep.branch) {
      case Branch::C1Zero: {
        const Rational yv = y_value(r.y);
        diag("y^(n-m)(y^m+a)", yv.str());
        diag("h(y)", r.h_y.str());
        if (c3.is_zero()) {
          row.relation_holds = false;
        } else {
          row.relation_holds = r.zeta == (-c2 / c3) * r.u;
          diag("zeta/u", (r.zeta / r.u).str());
        }
        break;
      }
      case Branch::BothNonzero: {
        const Rational w = r.zeta / r.u;
        row.relation_holds = *rep.c3_reduced * w - r.u.inverse() == -*rep.c2_reduced;
        diag("zeta/u", w.str());
        diag("h(zeta/u)", ht::height(w).str());
        if (w.is_zero()) {
          diag("note", "zeta vanishes; counting checks skipped");
          break;
        }
        diag("n h(y) <= h(zeta/u) + C_eta",
             yes_no(ht::less_equal(log_of(r.h_y, n), LogSum(ht::height(w)) + k.c_eta)));
        try {
          const Magnitude n1w = ht::counting_trunc(S, 1, w);
          diag("N1(zeta/u)", n1w.str());
          const Rational yma = r.y.pow(m) + fam.a;
          const Magnitude bound = ht::counting_trunc(S, 1, r.y) * ht::counting_trunc(S, 1, yma);
          diag("N1(y) N1(y^m+a)", bound.str());
          diag("N1(zeta/u) <= N1(y) N1(y^m+a)", yes_no(n1w <= bound));
          diag("N1(zeta/u) <= C_a H(y)^(m+1)", yes_no(n1w <= Magnitude(k.c_a) * r.h_y.pow(fam.m + 1)));
          sub::ConjectureOptions co;
          co.epsilon = opts.epsilon;
          const auto cor = sub::corollary_eval(S, *rep.c3_reduced, Rational(-1), -*rep.c2_reduced,
                                               {{w, r.u.inverse()}}, co);
          if (cor[0].error) {
            diag("corollary", *cor[0].error);
          } else {
            diag("corollary (1-eps) h(zeta/u) <= N1(zeta/u) + N1(1/u)", sub::to_string(cor[0].direct_verdict));
            diag("corollary routes agree", yes_no(cor[0].agree));
          }
        } catch (const Error& e) {
          diag("counting", e.what());
        }
        break;
      }
      case Branch::C2Zero: {
        row.relation_holds = y_value(r.y) == fam.b / (*rep.c3_reduced * r.u);
        const Rational yma = r.y.pow(m) + fam.a;
        const bool y_unit = qs::is_s_unit(S, r.y);
        const bool yma_unit = qs::is_s_unit(S, yma);
        diag("y is an S-unit", yes_no(y_unit));
        diag("y^m+a is an S-unit", yes_no(yma_unit));
        if (y_unit && yma_unit && !fam.a.is_zero()) {
          const Rational s = -r.y.pow(m) / fam.a;
          const Rational t = yma / fam.a;
          diag("unit equation pair", "(" + s.str() + ", " + t.str() + ")");
          unsigned e = 0;
          for (const auto& p : S.primes()) e = std::max(e, static_cast<unsigned>(std::labs(qs::ord(p, s))));
          try {
            auto it = unit_cache.find(e);
            if (it == unit_cache.end()) it = unit_cache.emplace(e, qs::unit_equation_solutions(S, e, opts.workers)).first;
            const bool found = std::any_of(it->second.begin(), it->second.end(),
                                           [&](const qs::UnitPair& up) { return up.u == s && up.v == t; });
            diag("found by unit_equation_solutions(E=" + std::to_string(e) + ")", yes_no(found));
          } catch (const BudgetError& err) {
            diag("unit equation enumeration", err.what());
          }
        }
        break;
      }
      case Branch::C3Zero: {
        const Rational c = rep.c2_reduced->inverse();
        row.relation_holds = r.u == c;
        diag("P(x) = c P(y)", yes_no(r.px == c * r.py));
        if (r.x == r.y) {
          diag("strong-uniqueness search", "diagonal row");
        } else if (su_found) {
          const bool hit = std::binary_search(su_found->begin(), su_found->end(), std::make_pair(r.x, r.y));
          diag("found by strong-uniqueness search", yes_no(hit));
        }
        break;
      }
      case Branch::Inconsistent:
        row.relation_holds = false;
        break;
    }
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::vector<std::pair<Rational, Rational>> strong_uniqueness_search(const SContext& S, const RatPoly& P,
                                                                    const Rational& c, const share::SearchBox& box,
                                                                    unsigned workers) {
  if (c.is_zero()) throw DomainError("c must be nonzero");
  std::size_t total = 0;
  const auto cands = share::s_integer_box(S, box, box.candidate_budget, &total);
  const auto values = parallel_map<Rational>(cands.size(), workers, [&](std::size_t i) { return P.eval(cands[i]); });

  std::map<Rational, std::vector<std::size_t>> by_value;
  for (std::size_t i = 0; i < cands.size(); ++i) by_value[values[i]].push_back(i);

  using Pair = std::pair<Rational, Rational>;
  std::vector<Pair> out;
  bool pair_budget_hit = false;
  for (std::size_t j = 0; j < cands.size() && !pair_budget_hit; ++j) {
    const auto it = by_value.find(c * values[j]);
    if (it == by_value.end()) continue;
    for (std::size_t i : it->second) {
      if (i == j) continue;
      if (out.size() >= box.pair_budget) {
        pair_budget_hit = true;
        break;
      }
      out.emplace_back(cands[i], cands[j]);
    }
  }
  std::sort(out.begin(), out.end());
  if (pair_budget_hit)
    throw PartialResultError<Pair>("search budget exceeded: more than " + std::to_string(box.pair_budget) + " solutions",
                                   std::move(out), "candidates y processed in enumeration order");
  if (cands.size() < total) {
    const std::string range = "processed " + std::to_string(cands.size()) + " of " + std::to_string(total) +
                              " candidates, through " + (cands.empty() ? std::string("none") : cands.back().str());
    throw PartialResultError<Pair>("search budget exceeded: " + range, std::move(out), range);
  }
  return out;
}

// ---------------------------------------------------------------------------

bool TraceReport::exact_ok() const {
  const bool rows_ok = std::all_of(rows.begin(), rows.end(), [](const TraceRow& r) { return r.identity_ok; });
  const bool cases_ok = std::all_of(cases.begin(), cases.end(), [](const CaseReport& c) {
    return std::all_of(c.rows.begin(), c.rows.end(), [](const CaseRow& r) { return r.annihilates && r.relation_holds; });
  });
  return validation.pass() && not_shared.empty() && rows_ok && roth.ok() && unit.ok() && trunc.ok() && main.ok() &&
         cases_ok;
}

TraceReport run_trace(const SContext& S, const YiFamily& fam, const std::vector<std::pair<Rational, Rational>>& pairs,
                      const TraceOptions& opts) {
  TraceReport rep;
  rep.validation = poly::yi_validate(S, fam);
  const RatPoly P = fam.polynomial();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    try {
      rep.inputs.push_back(share::share_check(S, P, pairs[i].first, pairs[i].second));
    } catch (const DomainError& e) {
      throw ParseError("pairs[" + std::to_string(i) + "]", e.what());
    }
    const auto& sp = rep.inputs.back();
    if (!sp.shares)
      rep.not_shared.push_back(i);
    else if (!sp.u)
      rep.vanishing.push_back(i);
    else
      rep.included.push_back(i);
  }

  rep.rows = parallel_map<TraceRow>(rep.included.size(), opts.workers, [&](std::size_t k) {
    const auto& sp = rep.inputs[rep.included[k]];
    return make_trace_row(S, fam, sp.x, sp.y, *sp.u);
  });
  rep.roth = roth_chain_report(S, fam, opts.epsilon, rep.rows);
  rep.unit = unit_height_check(rep.rows);
  rep.trunc = trunc_bound_check(S, fam, rep.rows);
  if (rep.validation.pass()) rep.main = main_inequality_report(S, fam, opts.epsilon, rep.rows);
  if (!rep.rows.empty()) {
    rep.dependence = dependence_detect(rep.rows);
    CaseOptions co;
    co.epsilon = opts.epsilon;
    co.workers = opts.workers;
    for (const auto& t : rep.dependence.basis) rep.cases.push_back(case_classify(S, fam, t, rep.rows, co));
  }
  return rep;
}

}  // namespace urset::yi
