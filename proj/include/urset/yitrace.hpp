#pragma once

// Exact per-row trace of the unique-range-set argument for
// P(X) = X^n + a X^(n-m) + b on concrete shared pairs (x, y, u):
//
//   eta  = -(1/b) x^(n-m) (x^m + a)
//   zeta =  (1/b) y^(n-m) (y^m + a) u,        eta + u + zeta = 1.
//
// Every inequality is checked with explicit constants in place of O(1).
// Checks split into two kinds: unconditional facts that must hold on every
// row (identity, sharing kernel, truncated bounds, height bounds) and
// conjectural or asymptotic steps, which are reported but never fail a run.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "urset/heightfn.hpp"
#include "urset/polyring.hpp"
#include "urset/sharing.hpp"
#include "urset/subspace.hpp"

namespace urset::yi {

using ht::LogSum;
using ht::Magnitude;
using poly::RatPoly;
using poly::YiFamily;
using qs::Integer;
using qs::Rational;
using qs::SContext;

struct AuxValues {
  Rational eta;
  Rational zeta;
};

AuxValues aux_build(const YiFamily& fam, const Rational& x, const Rational& y, const Rational& u);

/// eta + u + zeta == 1, exactly.
bool identity_check(const YiFamily& fam, const Rational& x, const Rational& y, const Rational& u);

/// Constants replacing the O(1) terms.
struct ExplicitConstants {
  Integer c_p;    // 1 + sum |D c_i|, D = lcm of coefficient denominators: N(P(x)) <= C_P H(x)^n
  Integer c_a;    // den(a) + |num(a)|:  N(x^m + a) <= C_a H(x)^m
  Integer k_a;    // 2 max(1, ceil|a|) den(a)
  LogSum c_eta;   // log H(b) + (n/m) log K_a:  n h(x) <= h(eta) + C_eta
  LogSum row_slack;  // 2 log C_a + C_eta, the per-side additive constant
  LogSum c_total;    // 2 * row_slack
};

ExplicitConstants explicit_constants(const YiFamily& fam);

struct TraceRow {
  Rational x, y, u, eta, zeta;
  Rational px, py;
  Magnitude h_x, h_y, h_u, h_eta, h_zeta;
  std::optional<Magnitude> n1_x, n1_y;   // unset at 0
  std::optional<Magnitude> n2_eta, n2_zeta;
  std::optional<Magnitude> n_xma, n_yma;  // N(x^m + a), N(y^m + a)
  bool identity_ok = false;
  std::vector<std::string> flags;
};

TraceRow make_trace_row(const SContext& S, const YiFamily& fam, const Rational& x, const Rational& y,
                        const Rational& u);

// -- comparability and counting equality ----------------------------------

struct RothRow {
  Magnitude n_px, n_py;
  bool counting_equal = false;
  Magnitude bound_x, bound_y;  // C_P H(.)^n
  bool upper_ok_x = false;
  bool upper_ok_y = false;
  ht::Ordering lower_y = ht::Ordering::Equal;  // (n-1-eps) h(y) vs N(P(y)); informational
  std::optional<double> height_ratio;         // h(x)/h(y), display only
  bool ok() const { return counting_equal && upper_ok_x && upper_ok_y; }
};

struct RothReport {
  Integer c_p;
  std::vector<RothRow> rows;
  bool ok() const;
};

RothReport roth_chain_report(const SContext& S, const YiFamily& fam, const Rational& epsilon,
                             const std::vector<TraceRow>& rows);

// -- h(u) <= h(P(x)) + h(P(y)) --------------------------------------------

struct UnitHeightRow {
  Magnitude h_u, h_px, h_py;
  bool ok = false;
};

struct UnitHeightReport {
  std::vector<UnitHeightRow> rows;
  bool ok() const;
};

UnitHeightReport unit_height_check(const std::vector<TraceRow>& rows);

// -- truncated bounds -----------------------------------------------------

struct TruncRow {
  bool checked = false;
  std::string skip_reason;
  Magnitude bound_eta;   // N^(1)(x)^2 N(x^m + a)
  Magnitude bound_zeta;  // N^(1)(y)^2 N(y^m + a)
  bool eta_ok = false;
  bool zeta_ok = false;
  Magnitude n2_u, n2_sum;  // both must be the zero quantity
  bool u_zero = false;
  bool sum_zero = false;
  bool ok() const { return !checked || (eta_ok && zeta_ok && u_zero && sum_zero); }
};

struct TruncReport {
  std::vector<TruncRow> rows;
  bool ok() const;
};

TruncReport trunc_bound_check(const SContext& S, const YiFamily& fam, const std::vector<TraceRow>& rows);

// -- the main chain and its height ceiling ----------------------------------

/// One orientation of the argument. The x-side uses (eta, u, zeta); the
/// y-side the swapped triple (-zeta/u, 1/u, -eta/u), which also sums to 1.
struct SideCheck {
  LogSum conj_lhs;              // (1 - eps/n) max of the three heights
  Magnitude conj_rhs;           // product of the four N^(2)
  sub::Verdict conj = sub::Verdict::Skipped;
  bool height_lower_ok = false;  // n h(x) <= h(eta) + C_eta, exact
  LogSum derived_lhs;           // (n - eps) h(x)
  LogSum derived_rhs;           // (2 + m)(h(x) + h(y)) + row slack
  sub::Verdict derived = sub::Verdict::Skipped;
  bool implication_ok = false;  // conj holds => derived holds
};

struct MainRow {
  bool skipped = false;
  std::string skip_reason;
  SideCheck x_side;
  SideCheck y_side;
  bool rhs_bound_ok = false;  // N2(eta) N2(zeta) <= C_a^2 (H(x) H(y))^(2+m)
  bool beyond_ceiling = false;
  bool ceiling_consistent = false;  // beyond the ceiling => some side's conjectural step fails
  bool ok() const {
    return skipped || (x_side.height_lower_ok && y_side.height_lower_ok && x_side.implication_ok &&
                       y_side.implication_ok && rhs_bound_ok && ceiling_consistent);
  }
};

struct MainReport {
  Rational epsilon;
  Rational conj_epsilon;  // eps / n, the value at which the conjectural step is evaluated
  ExplicitConstants constants;
  bool ceiling_finite = false;
  LogSum ceiling;  // H* = C_total / (n - 2m - 4 - eps)
  std::string ceiling_formula;
  std::vector<MainRow> rows;
  bool ok() const;
};

/// Raises DomainError when the family fails yi_validate; eps must lie in [0, 1).
MainReport main_inequality_report(const SContext& S, const YiFamily& fam, const Rational& epsilon,
                                  const std::vector<TraceRow>& rows);

// -- linear dependence and the four cases -----------------------------------

using Triple = std::array<Rational, 3>;

struct DependenceResult {
  std::vector<Triple> basis;  // nullspace of the rows (eta_j, u_j, zeta_j)
  std::size_t rows_used = 0;
};

DependenceResult dependence_detect(const std::vector<TraceRow>& rows);

enum class Branch { C1Zero, BothNonzero, C2Zero, C3Zero, Inconsistent };
const char* to_string(Branch b);

struct CaseRow {
  bool annihilates = false;     // c1 eta + c2 u + c3 zeta = 0
  bool relation_holds = false;  // the branch's displayed relation
  std::vector<std::pair<std::string, std::string>> diagnostics;
};

struct CaseReport {
  Triple triple;
  Branch branch = Branch::Inconsistent;
  std::optional<Rational> c2_reduced;  // C_2 = 1 - c2/c1
  std::optional<Rational> c3_reduced;  // C_3 = 1 - c3/c1
  std::string relation;
  std::vector<std::string> notes;
  std::vector<CaseRow> rows;
};

struct CaseOptions {
  Rational epsilon{1, 10};
  unsigned workers = 1;
  std::size_t search_candidate_budget = std::size_t{1} << 16;
};

/// All-zero triple raises DomainError.
CaseReport case_classify(const SContext& S, const YiFamily& fam, const Triple& triple,
                         const std::vector<TraceRow>& rows, const CaseOptions& opts = {});

/// Off-diagonal solutions of P(x) = c P(y) in the box, sorted by (x, y).
/// On budget exhaustion throws PartialResultError<std::pair<Rational, Rational>>.
std::vector<std::pair<Rational, Rational>> strong_uniqueness_search(const SContext& S, const RatPoly& P,
                                                                    const Rational& c, const share::SearchBox& box,
                                                                    unsigned workers = 1);

// -- whole pipeline -------------------------------------------------------

struct TraceOptions {
  Rational epsilon{1, 10};
  unsigned workers = 1;
};

struct TraceReport {
  poly::ValidationReport validation;
  std::vector<share::SharePoint> inputs;  // one per input pair
  std::vector<std::size_t> included;      // input indices with a defined sharing quotient
  std::vector<std::size_t> not_shared;    // input indices failing to share
  std::vector<std::size_t> vanishing;     // P(x) = P(y) = 0, excluded
  std::vector<TraceRow> rows;
  RothReport roth;
  UnitHeightReport unit;
  TruncReport trunc;
  MainReport main;
  DependenceResult dependence;
  std::vector<CaseReport> cases;

  bool exact_ok() const;
};

TraceReport run_trace(const SContext& S, const YiFamily& fam, const std::vector<std::pair<Rational, Rational>>& pairs,
                      const TraceOptions& opts = {});

}  // namespace urset::yi
