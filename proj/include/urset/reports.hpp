#pragma once

// JSON and plain-text renderings of every report. Log quantities appear as
// the exact integer plus a display-only decimal.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "urset/polyring.hpp"
#include "urset/sharing.hpp"
#include "urset/subspace.hpp"
#include "urset/yitrace.hpp"

namespace urset::report {

using Json = nlohmann::ordered_json;

struct Rendered {
  Json json;
  std::string table;
  bool verdict_ok = true;  // false when a mathematical check failed
};

struct Style {
  int digits = 6;
};

Json magnitude(const ht::Magnitude& m, const Style& st);
Json log_sum(const ht::LogSum& s, const Style& st);

Rendered validation(const poly::ValidationReport& rep, const Style& st);

Rendered shares(const share::PairSequence& seq, const std::optional<share::AdmissibilityReport>& adm,
                const Style& st);

Rendered conjecture(const sub::LinearFormSystem& sys, const qs::Rational& epsilon,
                    const std::vector<sub::DefectReport>& rows, const Style& st);

Rendered corollary(const qs::Rational& A, const qs::Rational& B, const qs::Rational& C, const qs::Rational& epsilon,
                   const std::vector<sub::CorollaryRow>& rows, const Style& st);

Rendered unit_equation(unsigned bound, const std::vector<qs::UnitPair>& sols, const Style& st);

Rendered shared_search(const poly::RatPoly& P, const share::SearchBox& box, const std::vector<share::SharePoint>& rows,
                       const std::optional<std::string>& incomplete, const Style& st);

Rendered su_search(const poly::RatPoly& P, const qs::Rational& c, const share::SearchBox& box,
                   const std::vector<std::pair<qs::Rational, qs::Rational>>& rows,
                   const std::optional<std::string>& incomplete, const Style& st);

Rendered trace(const yi::TraceReport& rep, const yi::TraceOptions& opts, const Style& st);

}  // namespace urset::report
