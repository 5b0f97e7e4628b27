#include "urset/subspace.hpp"

#include <algorithm>

#include "urset/errors.hpp"
#include "urset/linalg.hpp"
#include "urset/parallel.hpp"

namespace urset::sub {

LinearFormSystem::LinearFormSystem(unsigned r_, std::vector<std::vector<Rational>> forms_)
    : r(r_), forms(std::move(forms_)) {
  if (r < 1) throw DomainError("r must be at least 1");
  for (std::size_t i = 0; i < forms.size(); ++i)
    if (forms[i].size() != r + 1)
      throw DomainError("form " + std::to_string(i) + " has " + std::to_string(forms[i].size()) +
                        " coefficients, expected r + 1 = " + std::to_string(r + 1));
  if (forms.size() < r + 1) throw DomainError("need q >= r + 1 forms");
}

Rational LinearFormSystem::apply(std::size_t i, const std::vector<Rational>& point) const {
  Rational acc;
  for (std::size_t k = 0; k <= r; ++k) acc += forms[i][k] * point[k];
  return acc;
}

GeneralPosition general_position_check(const LinearFormSystem& sys) {
  const std::size_t k = sys.r + 1;
  const std::size_t q = sys.q();
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    linalg::Matrix m;
    for (std::size_t i : idx) m.push_back(sys.forms[i]);
    if (linalg::determinant(std::move(m)).is_zero()) return {false, idx};
    // next combination
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == q - k + pos - 1) --pos;
    if (pos == 0) return {};
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool is_primitive(const SContext&, const std::vector<Rational>& coords) {
  qs::Integer g = 0;
  for (const auto& c : coords) {
    if (!c.is_integer()) return false;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.numerator().get_mpz_t());
  }
  return g == 1;
}

std::vector<Rational> normalize_point(const SContext&, const std::vector<Rational>& coords) {
  qs::Integer l = 1;
  bool nonzero = false;
  for (const auto& c : coords) {
    if (c.is_zero()) continue;
    nonzero = true;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
  }
  if (!nonzero) throw DomainError("the zero tuple is not a projective point");
  std::vector<Rational> out;
  out.reserve(coords.size());
  qs::Integer g = 0;
  for (const auto& c : coords) {
    out.push_back(c * Rational(l));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().numerator().get_mpz_t());
  }
  const Rational shrink(1, g);
  for (auto& c : out) c *= shrink;
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

namespace {

DefectReport evaluate_point(const SContext& S, const LinearFormSystem& sys, const std::vector<Rational>& input,
                            const ConjectureOptions& opts) {
  if (input.size() != sys.r + 1)
    throw DomainError("point has " + std::to_string(input.size()) + " coordinates, expected " +
                      std::to_string(sys.r + 1));
  DefectReport rep;
  rep.input = input;
  if (opts.strict) {
    if (std::all_of(input.begin(), input.end(), [](const Rational& c) { return c.is_zero(); }))
      throw DomainError("the zero tuple is not a projective point");
    if (!is_primitive(S, input)) throw DomainError("point is not a primitive integer vector (strict mode)");
    rep.point = input;
  } else {
    rep.point = normalize_point(S, input);
  }
  rep.lhs_coefficient =
      Rational(static_cast<long>(sys.q())) - Rational(static_cast<long>(sys.r)) - Rational(1) - opts.epsilon;
  for (const auto& c : rep.point) {
    rep.coord_heights.push_back(ht::height(c));
    if (rep.coord_heights.back() > rep.max_height) rep.max_height = rep.coord_heights.back();
  }
  for (std::size_t i = 0; i < sys.q(); ++i) rep.form_values.push_back(sys.apply(i, rep.point));
  for (std::size_t i = 0; i < sys.q(); ++i)
    if (rep.form_values[i].is_zero()) {
      rep.verdict = Verdict::Skipped;
      rep.skip_reason = "form " + std::to_string(i) + " vanishes";
      return rep;
    }
  for (const auto& v : rep.form_values) {
    rep.trunc_counts.push_back(ht::counting_trunc(S, sys.r, v));
    rep.full_counts.push_back(ht::counting(S, v));
    rep.rhs = rep.rhs * rep.trunc_counts.back();
  }
  rep.verdict = ht::less_equal(rep.lhs(), LogSum(rep.rhs)) ? Verdict::Holds : Verdict::Violated;
  return rep;
}

}  // namespace

std::vector<DefectReport> evaluate_conjecture(const SContext& S, const LinearFormSystem& sys,
                                              const std::vector<std::vector<Rational>>& points,
                                              const ConjectureOptions& opts) {
  const auto gp = general_position_check(sys);
  if (!gp.ok) {
    std::string w;
    for (std::size_t i : gp.witness) w += (w.empty() ? "" : ",") + std::to_string(i);
    throw DomainError("degenerate system: forms {" + w + "} are linearly dependent");
  }
  return parallel_map<DefectReport>(points.size(), opts.workers,
                                    [&](std::size_t i) { return evaluate_point(S, sys, points[i], opts); });
}

std::vector<CorollaryRow> corollary_eval(const SContext& S, const Rational& A, const Rational& B, const Rational& C,
                                         const std::vector<std::pair<Rational, Rational>>& pairs,
                                         const ConjectureOptions& opts) {
  if (A.is_zero() || B.is_zero() || C.is_zero()) throw DomainError("A, B and C must be nonzero");
  const LinearFormSystem sys(1, {{1, 0}, {0, 1}, {C, -A}});
  if (!general_position_check(sys).ok) throw DomainError("degenerate corollary system");
  ConjectureOptions inner = opts;
  inner.workers = 1;

  return parallel_map<CorollaryRow>(pairs.size(), opts.workers, [&](std::size_t i) {
    CorollaryRow row;
    row.x = pairs[i].first;
    row.y = pairs[i].second;
    if (A * row.x + B * row.y != C) {
      row.error = "A x + B y = " + (A * row.x + B * row.y).str() + " != C = " + C.str();
      return row;
    }
    if (!qs::is_s_integer(S, row.x) || !qs::is_s_integer(S, row.y)) {
      row.error = "x and y must be S-integers";
      return row;
    }
    row.delegated = evaluate_point(S, sys, {Rational(1), row.x}, inner);
    row.direct_lhs_base = ht::height(row.x);
    if (row.x.is_zero() || row.y.is_zero()) {
      row.direct_verdict = Verdict::Skipped;
    } else {
      row.direct_rhs = ht::counting_trunc(S, 1, row.x) * ht::counting_trunc(S, 1, row.y);
      const LogSum lhs(ht::ScaledLog{Rational(1) - opts.epsilon, row.direct_lhs_base});
      row.direct_verdict = ht::less_equal(lhs, LogSum(row.direct_rhs)) ? Verdict::Holds : Verdict::Violated;
    }
    row.agree = row.direct_verdict == row.delegated.verdict &&
                (row.direct_verdict == Verdict::Skipped ||
                 (row.direct_rhs == row.delegated.rhs && row.direct_lhs_base == row.delegated.max_height &&
                  row.delegated.lhs_coefficient == Rational(1) - opts.epsilon));
    return row;
  });
}

}  // namespace urset::sub
