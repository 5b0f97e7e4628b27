#include "urset/reports.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace urset::report {

using qs::Rational;

namespace {

std::string rat_list(const std::vector<Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].str();
  return out + ")";
}

Json rat_array(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

std::string mag_cell(const ht::Magnitude& m, const Style& st) {
  return m.str() + " [" + ht::display_log(m, st.digits) + "]";
}

Json opt_mag_json(const std::optional<ht::Magnitude>& m, const Style& st) {
  return m ? magnitude(*m, st) : Json(nullptr);
}

Json check(const poly::HypothesisCheck& c) { return Json{{"pass", c.pass}, {"detail", c.detail}}; }

const char* pf(bool b) { return b ? "pass" : "FAIL"; }

}  // namespace

Json magnitude(const ht::Magnitude& m, const Style& st) {
  return Json{{"int", m.str()}, {"log", ht::display_log(m, st.digits)}};
}

Json log_sum(const ht::LogSum& s, const Style& st) {
  Json terms = Json::array();
  for (const auto& t : s.terms()) terms.push_back(Json{{"coeff", t.coefficient.str()}, {"base", t.base.str()}});
  return Json{{"terms", terms}, {"approx", ht::display_log(s, st.digits)}};
}

// ---------------------------------------------------------------------------

Rendered validation(const poly::ValidationReport& rep, const Style&) {
  Rendered r;
  const auto& f = rep.family;
  r.verdict_ok = rep.pass();
  r.json = Json{{"family", Json{{"n", f.n}, {"m", f.m}, {"a", f.a.str()}, {"b", f.b.str()}}},
                {"polynomial", f.polynomial().str()},
                {"discriminant", rep.discriminant.str()},
                {"checks",
                 Json{{"coprime", check(rep.coprime)},
                      {"degree_gap", check(rep.degree_gap)},
                      {"a_s_unit", check(rep.a_s_unit)},
                      {"b_s_unit", check(rep.b_s_unit)},
                      {"squarefree", check(rep.squarefree)},
                      {"roots_s_units", check(rep.roots_s_units)}}},
                {"pass", rep.pass()}};
  std::string t = fmt::format("P(X) = {}\n", f.polynomial().str());
  auto line = [&](const char* name, const poly::HypothesisCheck& c) {
    t += fmt::format("  {:<16} {:<5} {}\n", name, pf(c.pass), c.detail);
  };
  line("coprime", rep.coprime);
  line("degree gap", rep.degree_gap);
  line("a S-unit", rep.a_s_unit);
  line("b S-unit", rep.b_s_unit);
  line("squarefree", rep.squarefree);
  line("roots S-units", rep.roots_s_units);
  t += fmt::format("overall: {}\n", rep.pass() ? "PASS" : "FAIL");
  r.table = std::move(t);
  return r;
}

Json share_point(const share::SharePoint& p) {
  return Json{{"x", p.x.str()},
              {"y", p.y.str()},
              {"P(x)", p.px.str()},
              {"P(y)", p.py.str()},
              {"u", p.u ? Json(p.u->str()) : Json(nullptr)},
              {"shares", p.shares}};
}

Rendered shares(const share::PairSequence& seq, const std::optional<share::AdmissibilityReport>& adm,
                const Style& st) {
  Rendered r;
  Json rows = Json::array();
  std::string t = fmt::format("{:>14} {:>14} {:>20} {:>7}\n", "x", "y", "u", "shares");
  for (const auto& p : seq.rows) {
    rows.push_back(share_point(p));
    r.verdict_ok = r.verdict_ok && p.shares;
    t += fmt::format("{:>14} {:>14} {:>20} {:>7}\n", p.x.str(), p.y.str(), p.u ? p.u->str() : "-",
                     p.shares ? "yes" : "NO");
  }
  r.json = Json{{"polynomial", seq.poly.str()}, {"rows", rows}, {"all_share", r.verdict_ok}};
  if (adm) {
    auto coord = [&](const share::CoordinateAdmissibility& c) {
      return Json{{"at_or_below", c.at_or_below},
                  {"last_at_or_below", c.last_at_or_below ? Json(*c.last_at_or_below) : Json(nullptr)},
                  {"tail_length", c.tail_length},
                  {"max_height", magnitude(c.max_height, st)},
                  {"never_admissible", c.never_admissible}};
    };
    r.json["admissibility"] = Json{{"threshold", magnitude(adm->threshold, st)},
                                   {"rows", adm->rows},
                                   {"vacuous", adm->vacuous()},
                                   {"x", coord(adm->x)},
                                   {"y", coord(adm->y)}};
    t += fmt::format("admissibility at threshold {}: x {} at/below (tail {}), y {} at/below (tail {})\n",
                     adm->threshold.str(), adm->x.at_or_below, adm->x.tail_length, adm->y.at_or_below,
                     adm->y.tail_length);
  }
  r.table = std::move(t);
  return r;
}

Json defect(const sub::DefectReport& d, const Style& st) {
  Json heights = Json::array(), trunc = Json::array(), full = Json::array();
  for (const auto& h : d.coord_heights) heights.push_back(magnitude(h, st));
  for (const auto& h : d.trunc_counts) trunc.push_back(magnitude(h, st));
  for (const auto& h : d.full_counts) full.push_back(magnitude(h, st));
  Json j{{"input", rat_array(d.input)},
         {"point", rat_array(d.point)},
         {"coord_heights", heights},
         {"max_height", magnitude(d.max_height, st)},
         {"form_values", rat_array(d.form_values)},
         {"trunc_counts", trunc},
         {"full_counts", full},
         {"lhs", log_sum(d.lhs(), st)},
         {"lhs_coefficient", d.lhs_coefficient.str()},
         {"rhs", magnitude(d.rhs, st)},
         {"verdict", sub::to_string(d.verdict)}};
  if (d.verdict == sub::Verdict::Skipped) j["skip_reason"] = d.skip_reason;
  return j;
}

Rendered conjecture(const sub::LinearFormSystem& sys, const Rational& epsilon,
                    const std::vector<sub::DefectReport>& rows, const Style& st) {
  Rendered r;
  Json forms = Json::array();
  for (const auto& f : sys.forms) forms.push_back(rat_array(f));
  Json out = Json::array();
  std::size_t violated = 0, skipped = 0;
  std::optional<ht::Magnitude> worst;
  std::string t = fmt::format("{:<24} {:>24} {:>24} {:>9}\n", "point", "LHS", "RHS", "verdict");
  for (const auto& d : rows) {
    out.push_back(defect(d, st));
    if (d.verdict == sub::Verdict::Violated) {
      ++violated;
      if (!worst || d.max_height > *worst) worst = d.max_height;
    }
    if (d.verdict == sub::Verdict::Skipped) ++skipped;
    t += fmt::format("{:<24} {:>24} {:>24} {:>9}\n", rat_list(d.point),
                     d.lhs_coefficient.str() + "*log " + d.max_height.str(), mag_cell(d.rhs, st),
                     sub::to_string(d.verdict));
  }
  r.verdict_ok = violated == 0;
  r.json = Json{{"r", sys.r},
                {"q", sys.q()},
                {"forms", forms},
                {"epsilon", epsilon.str()},
                {"points", out},
                {"summary",
                 Json{{"points", rows.size()},
                      {"violated", violated},
                      {"skipped", skipped},
                      {"max_violating_height", worst ? magnitude(*worst, st) : Json(nullptr)}}}};
  t += fmt::format("{} points, {} violated, {} skipped\n", rows.size(), violated, skipped);
  r.table = std::move(t);
  return r;
}

Rendered corollary(const Rational& A, const Rational& B, const Rational& C, const Rational& epsilon,
                   const std::vector<sub::CorollaryRow>& rows, const Style& st) {
  Rendered r;
  Json out = Json::array();
  std::string t = fmt::format("{:>14} {:>14} {:>22} {:>9} {:>9} {:>6}\n", "x", "y", "N1(x)N1(y)", "direct",
                              "delegated", "agree");
  for (const auto& row : rows) {
    Json j{{"x", row.x.str()}, {"y", row.y.str()}};
    if (row.error) {
      j["error"] = *row.error;
      r.verdict_ok = false;
      t += fmt::format("{:>14} {:>14}  error: {}\n", row.x.str(), row.y.str(), *row.error);
    } else {
      j["direct"] = Json{{"lhs", log_sum(ht::LogSum(ht::ScaledLog{Rational(1) - epsilon, row.direct_lhs_base}), st)},
                         {"rhs", magnitude(row.direct_rhs, st)},
                         {"verdict", sub::to_string(row.direct_verdict)}};
      j["delegated"] = defect(row.delegated, st);
      j["agree"] = row.agree;
      r.verdict_ok = r.verdict_ok && row.agree && row.direct_verdict != sub::Verdict::Violated;
      t += fmt::format("{:>14} {:>14} {:>22} {:>9} {:>9} {:>6}\n", row.x.str(), row.y.str(),
                       mag_cell(row.direct_rhs, st), sub::to_string(row.direct_verdict),
                       sub::to_string(row.delegated.verdict), row.agree ? "yes" : "NO");
    }
    out.push_back(std::move(j));
  }
  r.json = Json{{"A", A.str()}, {"B", B.str()}, {"C", C.str()}, {"epsilon", epsilon.str()}, {"rows", out}};
  r.table = std::move(t);
  return r;
}

Rendered unit_equation(unsigned bound, const std::vector<qs::UnitPair>& sols, const Style&) {
  Rendered r;
  Json out = Json::array();
  std::string t;
  for (const auto& s : sols) {
    out.push_back(Json{{"u", s.u.str()}, {"v", s.v.str()}});
    t += fmt::format("{:>16} + {:<16} = 1\n", s.u.str(), s.v.str());
  }
  t += fmt::format("{} solutions with |ord_p(u)| <= {}\n", sols.size(), bound);
  r.json = Json{{"bound", bound}, {"count", sols.size()}, {"solutions", out}};
  r.table = std::move(t);
  return r;
}

Json box_json(const share::SearchBox& box) {
  return Json{{"height_bound", box.height_bound.str()},
              {"exp_bound", box.exp_bound},
              {"candidate_budget", box.candidate_budget}};
}

Rendered shared_search(const poly::RatPoly& P, const share::SearchBox& box, const std::vector<share::SharePoint>& rows,
                       const std::optional<std::string>& incomplete, const Style&) {
  Rendered r;
  Json out = Json::array();
  std::string t = fmt::format("{:>14} {:>14} {:>20}\n", "x", "y", "u");
  for (const auto& p : rows) {
    out.push_back(share_point(p));
    t += fmt::format("{:>14} {:>14} {:>20}\n", p.x.str(), p.y.str(), p.u ? p.u->str() : "-");
  }
  t += fmt::format("{} sharing pairs with x != y\n", rows.size());
  r.json = Json{{"polynomial", P.str()}, {"box", box_json(box)}, {"count", rows.size()}, {"pairs", out}};
  if (incomplete) {
    r.json["incomplete"] = *incomplete;
    t += "INCOMPLETE: " + *incomplete + "\n";
  }
  r.table = std::move(t);
  return r;
}

Rendered su_search(const poly::RatPoly& P, const Rational& c, const share::SearchBox& box,
                   const std::vector<std::pair<Rational, Rational>>& rows, const std::optional<std::string>& incomplete,
                   const Style&) {
  Rendered r;
  Json out = Json::array();
  std::string t;
  for (const auto& [x, y] : rows) {
    out.push_back(Json{{"x", x.str()}, {"y", y.str()}});
    t += fmt::format("{:>14} {:>14}\n", x.str(), y.str());
  }
  t += fmt::format("{} off-diagonal solutions of P(x) = {} P(y)\n", rows.size(), c.str());
  r.json = Json{{"polynomial", P.str()}, {"c", c.str()}, {"box", box_json(box)}, {"count", rows.size()}, {"pairs", out}};
  if (incomplete) {
    r.json["incomplete"] = *incomplete;
    t += "INCOMPLETE: " + *incomplete + "\n";
  }
  r.table = std::move(t);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

Json side_json(const yi::SideCheck& s, const Style& st) {
  return Json{{"conjectural_step",
               Json{{"lhs", log_sum(s.conj_lhs, st)}, {"rhs", magnitude(s.conj_rhs, st)}, {"verdict", sub::to_string(s.conj)}}},
              {"height_lower_bound_ok", s.height_lower_ok},
              {"derived",
               Json{{"lhs", log_sum(s.derived_lhs, st)},
                    {"rhs", log_sum(s.derived_rhs, st)},
                    {"verdict", sub::to_string(s.derived)}}},
              {"implication_ok", s.implication_ok}};
}

}  // namespace

Rendered trace(const yi::TraceReport& rep, const yi::TraceOptions& opts, const Style& st) {
  Rendered r;
  r.verdict_ok = rep.exact_ok();
  Rendered val = validation(rep.validation, st);

  Json rows = Json::array();
  std::string t = val.table;
  t += fmt::format("\n{:>4} {:>10} {:>10} {:>14} {:>8} {:>22} {:>22} {:>6} {:>6} {:>6}\n", "row", "x", "y", "u",
                   "eta+u+z", "N2(eta) <= bound", "N2(zeta) <= bound", "roth", "h(u)", "main");
  for (std::size_t k = 0; k < rep.rows.size(); ++k) {
    const auto& row = rep.rows[k];
    const auto& roth = rep.roth.rows[k];
    const auto& unit = rep.unit.rows[k];
    const auto& tr = rep.trunc.rows[k];
    Json j{{"input_index", rep.included[k]},
           {"x", row.x.str()},
           {"y", row.y.str()},
           {"u", row.u.str()},
           {"eta", row.eta.str()},
           {"zeta", row.zeta.str()},
           {"P(x)", row.px.str()},
           {"P(y)", row.py.str()},
           {"identity_ok", row.identity_ok},
           {"heights",
            Json{{"x", magnitude(row.h_x, st)},
                 {"y", magnitude(row.h_y, st)},
                 {"u", magnitude(row.h_u, st)},
                 {"eta", magnitude(row.h_eta, st)},
                 {"zeta", magnitude(row.h_zeta, st)}}},
           {"counting",
            Json{{"N1(x)", opt_mag_json(row.n1_x, st)},
                 {"N1(y)", opt_mag_json(row.n1_y, st)},
                 {"N2(eta)", opt_mag_json(row.n2_eta, st)},
                 {"N2(zeta)", opt_mag_json(row.n2_zeta, st)},
                 {"N(x^m+a)", opt_mag_json(row.n_xma, st)},
                 {"N(y^m+a)", opt_mag_json(row.n_yma, st)}}},
           {"flags", row.flags}};
    j["roth_chain"] = Json{{"N(P(x))", magnitude(roth.n_px, st)},
                           {"N(P(y))", magnitude(roth.n_py, st)},
                           {"counting_equal", roth.counting_equal},
                           {"upper_bound_x", magnitude(roth.bound_x, st)},
                           {"upper_bound_y", magnitude(roth.bound_y, st)},
                           {"upper_ok_x", roth.upper_ok_x},
                           {"upper_ok_y", roth.upper_ok_y},
                           {"roth_lower_y", ht::to_string(roth.lower_y)},
                           {"height_ratio", roth.height_ratio ? Json(ht::format_fixed(*roth.height_ratio, st.digits))
                                                              : Json(nullptr)}};
    j["unit_height"] = Json{{"h(u)", magnitude(unit.h_u, st)},
                            {"h(P(x))", magnitude(unit.h_px, st)},
                            {"h(P(y))", magnitude(unit.h_py, st)},
                            {"ok", unit.ok}};
    if (tr.checked) {
      j["truncated_bounds"] = Json{{"bound_eta", magnitude(tr.bound_eta, st)},
                                   {"bound_zeta", magnitude(tr.bound_zeta, st)},
                                   {"eta_ok", tr.eta_ok},
                                   {"zeta_ok", tr.zeta_ok},
                                   {"N2(u)", magnitude(tr.n2_u, st)},
                                   {"N2(eta+u+zeta)", magnitude(tr.n2_sum, st)},
                                   {"u_zero", tr.u_zero},
                                   {"sum_zero", tr.sum_zero}};
    } else {
      j["truncated_bounds"] = Json{{"skipped", tr.skip_reason}};
    }
    std::string main_cell = "-";
    if (k < rep.main.rows.size()) {
      const auto& m = rep.main.rows[k];
      if (m.skipped) {
        j["main"] = Json{{"skipped", m.skip_reason}};
        main_cell = "skip";
      } else {
        j["main"] = Json{{"x_side", side_json(m.x_side, st)},
                         {"y_side", side_json(m.y_side, st)},
                         {"rhs_bound_ok", m.rhs_bound_ok},
                         {"beyond_ceiling", m.beyond_ceiling},
                         {"ceiling_consistent", m.ceiling_consistent},
                         {"ok", m.ok()}};
        main_cell = pf(m.ok());
      }
    }
    rows.push_back(std::move(j));
    t += fmt::format("{:>4} {:>10} {:>10} {:>14} {:>8} {:>22} {:>22} {:>6} {:>6} {:>6}\n", rep.included[k],
                     row.x.str(), row.y.str(), row.u.str(), row.identity_ok ? "=1" : "!=1",
                     tr.checked ? fmt::format("{} <= {} {}", row.n2_eta->str(),
                                              tr.bound_eta.str(), tr.eta_ok ? "ok" : "NO")
                                : "skip",
                     tr.checked ? fmt::format("{} <= {} {}", row.n2_zeta->str(), tr.bound_zeta.str(),
                                              tr.zeta_ok ? "ok" : "NO")
                                : "skip",
                     pf(roth.ok()), pf(unit.ok), main_cell);
  }

  Json excluded = Json::array();
  for (std::size_t i : rep.not_shared) {
    excluded.push_back(Json{{"input_index", i}, {"reason", "does not share"}, {"pair", share_point(rep.inputs[i])}});
    t += fmt::format("input {} ({}, {}) does NOT share\n", i, rep.inputs[i].x.str(), rep.inputs[i].y.str());
  }
  for (std::size_t i : rep.vanishing)
    excluded.push_back(Json{{"input_index", i}, {"reason", "P(x) = P(y) = 0"}, {"pair", share_point(rep.inputs[i])}});

  Json main = nullptr;
  if (rep.validation.pass()) {
    const auto& k = rep.main.constants;
    main = Json{{"epsilon", rep.main.epsilon.str()},
                {"conjectural_step_epsilon", rep.main.conj_epsilon.str()},
                {"constants",
                 Json{{"C_P", k.c_p.get_str()},
                      {"C_a", k.c_a.get_str()},
                      {"K_a", k.k_a.get_str()},
                      {"C_eta", log_sum(k.c_eta, st)},
                      {"row_slack", log_sum(k.row_slack, st)},
                      {"C_total", log_sum(k.c_total, st)}}},
                {"ceiling_formula", rep.main.ceiling_formula},
                {"ceiling_finite", rep.main.ceiling_finite},
                {"ceiling", rep.main.ceiling_finite ? log_sum(rep.main.ceiling, st) : Json(nullptr)},
                {"note",
                 "the conjectural step is evaluated at eps/n so that (1 - eps/n) n = n - eps; its verdicts are "
                 "asymptotic evidence and never fail a run"}};
    t += fmt::format("\nC_P = {}, C_a = {}, C_eta ~ {}, C_total ~ {}\n", k.c_p.get_str(), k.c_a.get_str(),
                     ht::display_log(k.c_eta, st.digits), ht::display_log(k.c_total, st.digits));
    t += rep.main.ceiling_finite
             ? fmt::format("height ceiling H* ~ {} ({})\n", ht::display_log(rep.main.ceiling, st.digits),
                           rep.main.ceiling_formula)
             : std::string("height ceiling: infinite (n - 2m - 4 - eps <= 0)\n");
  } else {
    t += "\nhypotheses unmet: main inequality chain not evaluated (see validate-poly)\n";
  }

  Json basis = Json::array();
  for (const auto& b : rep.dependence.basis) basis.push_back(Json::array({b[0].str(), b[1].str(), b[2].str()}));
  Json cases = Json::array();
  for (const auto& c : rep.cases) {
    Json crow = Json::array();
    for (const auto& row : c.rows) {
      Json d = Json::object();
      for (const auto& [key, value] : row.diagnostics) d[key] = value;
      crow.push_back(Json{{"annihilates", row.annihilates}, {"relation_holds", row.relation_holds}, {"diagnostics", d}});
    }
    cases.push_back(Json{{"triple", Json::array({c.triple[0].str(), c.triple[1].str(), c.triple[2].str()})},
                         {"branch", yi::to_string(c.branch)},
                         {"C2", c.c2_reduced ? Json(c.c2_reduced->str()) : Json(nullptr)},
                         {"C3", c.c3_reduced ? Json(c.c3_reduced->str()) : Json(nullptr)},
                         {"relation", c.relation},
                         {"notes", c.notes},
                         {"rows", crow}});
    t += fmt::format("dependence ({}, {}, {}): branch {}; {}\n", c.triple[0].str(), c.triple[1].str(),
                     c.triple[2].str(), yi::to_string(c.branch), c.relation);
  }
  if (!rep.rows.empty() && rep.dependence.basis.empty()) t += "no linear relation among (eta, u, zeta) on these rows\n";

  r.json = Json{{"epsilon", opts.epsilon.str()},
                {"validation", val.json},
                {"rows", rows},
                {"excluded", excluded},
                {"main", main},
                {"dependence", Json{{"rows_used", rep.dependence.rows_used}, {"basis", basis}}},
                {"cases", cases},
                {"exact_checks_pass", r.verdict_ok}};
  t += fmt::format("exact checks: {}\n", r.verdict_ok ? "PASS" : "FAIL");
  r.table = std::move(t);
  return r;
}

}  // namespace urset::report
