#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "urset/heightfn.hpp"
#include "urset/polyring.hpp"
#include "urset/qsarith.hpp"

namespace urset::share {

using ht::Magnitude;
using poly::RatPoly;
using qs::Rational;
using qs::SContext;

/// One candidate shared pair: u = P(x)/P(y) when P(y) != 0.
struct SharePoint {
  Rational x;
  Rational y;
  Rational px;
  Rational py;
  std::optional<Rational> u;  // unset when P(y) = 0
  bool shares = false;
};

/// shares iff u is an S-unit; if both values vanish the pair shares with u
/// unset, if exactly one vanishes it does not. Non-S-integer x or y raise
/// DomainError.
SharePoint share_check(const SContext& S, const RatPoly& P, const Rational& x, const Rational& y);

/// ord_p(P(x)) = ord_p(P(y)) for every prime p outside S, decided from the
/// factorizations of both values. Vanishing values raise DomainError.
bool ord_profile_equal(const SContext& S, const RatPoly& P, const Rational& x, const Rational& y);

struct PairSequence {
  SContext context;
  RatPoly poly;
  std::vector<SharePoint> rows;
};

PairSequence make_pair_sequence(const SContext& S, const RatPoly& P,
                                const std::vector<std::pair<Rational, Rational>>& pairs);

/// Finite-prefix statistics standing in for "h(x_j) -> infinity".
struct CoordinateAdmissibility {
  std::size_t at_or_below = 0;                     // rows with height <= threshold
  std::optional<std::size_t> last_at_or_below;     // index of the last such row
  std::size_t tail_length = 0;                     // rows after it
  Magnitude max_height;
  bool never_admissible = false;                   // last row has height 0: no threshold leaves a tail
};

struct AdmissibilityReport {
  std::size_t rows = 0;
  Magnitude threshold;
  CoordinateAdmissibility x;
  CoordinateAdmissibility y;
  bool vacuous() const { return rows == 0; }
};

AdmissibilityReport admissibility_report(const PairSequence& seq, const Magnitude& threshold);

/// S-integers a/d with d an S-number whose S-exponents are <= exp_bound and
/// max(|a|, d) <= height_bound.
struct SearchBox {
  Magnitude height_bound;
  unsigned exp_bound = 0;
  std::size_t candidate_budget = std::size_t{1} << 20;
  std::size_t pair_budget = std::size_t{1} << 24;
};

/// Box members in enumeration order: denominator ascending, then numerator
/// ascending. At most `limit` entries are produced; `total` receives the
/// exact box size.
std::vector<Rational> s_integer_box(const SContext& S, const SearchBox& box, std::size_t limit, std::size_t* total);

/// Every sharing pair with x != y in the box, sorted by (x, y). On budget
/// exhaustion throws PartialResultError<SharePoint> with the pairs among the
/// candidates processed so far.
std::vector<SharePoint> search_shared_pairs(const SContext& S, const RatPoly& P, const SearchBox& box,
                                            unsigned workers = 1);

}  // namespace urset::share
