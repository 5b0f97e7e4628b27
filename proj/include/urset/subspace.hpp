#pragma once

// Per-point evaluation of the truncated subspace inequality
//   (q - r - 1 - eps) max_i h(x^i) <= sum_i N^(r)(L_i(x))
// and its two-variable corollary for A x + B y = C.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "urset/heightfn.hpp"
#include "urset/qsarith.hpp"

namespace urset::sub {

using ht::LogSum;
using ht::Magnitude;
using qs::Rational;
using qs::SContext;

/// q linear forms in r + 1 variables, one row of coefficients per form.
struct LinearFormSystem {
  unsigned r = 1;
  std::vector<std::vector<Rational>> forms;

  LinearFormSystem() = default;
  /// Shape checks only (r >= 1, every row has r + 1 entries, q >= r + 1).
  LinearFormSystem(unsigned r, std::vector<std::vector<Rational>> forms);

  std::size_t q() const { return forms.size(); }
  Rational apply(std::size_t i, const std::vector<Rational>& point) const;
};

struct GeneralPosition {
  bool ok = true;
  std::vector<std::size_t> witness;  // first singular (r+1)-subset, lexicographic
};

GeneralPosition general_position_check(const LinearFormSystem& sys);

/// Integer coordinates with gcd 1.
bool is_primitive(const SContext& S, const std::vector<Rational>& coords);

/// The primitive integer representative: clears every denominator, then
/// divides by the gcd. Heights of the coordinates then depend only on the
/// projective point, so verdicts are invariant under S-unit rescaling.
/// The zero tuple raises DomainError.
std::vector<Rational> normalize_point(const SContext& S, const std::vector<Rational>& coords);

enum class Verdict { Holds, Violated, Skipped };
const char* to_string(Verdict v);

struct DefectReport {
  std::vector<Rational> input;
  std::vector<Rational> point;  // normalized
  std::vector<Magnitude> coord_heights;
  Magnitude max_height;
  std::vector<Rational> form_values;
  std::vector<Magnitude> trunc_counts;  // N^(r)(L_i), empty when skipped
  std::vector<Magnitude> full_counts;   // N(L_i), empty when skipped
  Magnitude rhs;                        // product of trunc_counts
  Rational lhs_coefficient;             // q - r - 1 - eps
  Verdict verdict = Verdict::Skipped;
  std::string skip_reason;

  LogSum lhs() const { return LogSum(ht::ScaledLog{lhs_coefficient, max_height}); }
};

struct ConjectureOptions {
  Rational epsilon{1, 10};
  bool strict = false;  // reject non-primitive points instead of normalizing
  unsigned workers = 1;
};

/// Report order matches input order. A system failing the general position
/// check raises DomainError.
std::vector<DefectReport> evaluate_conjecture(const SContext& S, const LinearFormSystem& sys,
                                              const std::vector<std::vector<Rational>>& points,
                                              const ConjectureOptions& opts = {});

struct CorollaryRow {
  Rational x;
  Rational y;
  std::optional<std::string> error;  // relation A x + B y = C fails, or x, y not S-integers
  DefectReport delegated;            // conjecture with r = 1 at (1, x)
  Magnitude direct_lhs_base;         // h(x)
  Magnitude direct_rhs;              // N^(1)(x) N^(1)(y)
  Verdict direct_verdict = Verdict::Skipped;
  bool agree = false;
};

/// (1 - eps) h(x) <= N^(1)(x) + N^(1)(y), evaluated both directly and by
/// delegation to the r = 1 conjecture with forms x0, x1, C x0 - A x1.
std::vector<CorollaryRow> corollary_eval(const SContext& S, const Rational& A, const Rational& B, const Rational& C,
                                         const std::vector<std::pair<Rational, Rational>>& pairs,
                                         const ConjectureOptions& opts = {});

}  // namespace urset::sub
