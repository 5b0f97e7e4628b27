#include "urset/urset.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "urset/errors.hpp"
#include "urset/heightfn.hpp"
#include "urset/io.hpp"
#include "urset/reports.hpp"
#include "urset/sharing.hpp"
#include "urset/subspace.hpp"
#include "urset/yitrace.hpp"

using namespace urset;
using qs::Rational;

struct urset_context {
  qs::SContext S;
  unsigned workers = 1;
  report::Style style;
};

struct urset_report {
  std::string json;
  std::string table;
  bool verdict_ok = true;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_error_path;

void set_error(const std::string& what, const std::string& path = {}) {
  g_error = what;
  g_error_path = path;
}

std::string need(const char* s, const char* name) {
  if (s == nullptr) throw ParseError(name, "missing value");
  return s;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

urset_report* make_report(const report::Rendered& r) {
  auto* rep = new urset_report;
  rep->json = r.json.dump(2);
  rep->table = r.table;
  rep->verdict_ok = r.verdict_ok;
  return rep;
}

urset_status finish(const report::Rendered& r, urset_report** out) {
  *out = make_report(r);
  set_error("");
  return r.verdict_ok ? URSET_OK : URSET_VERDICT_FAILED;
}

template <class F>
urset_status guard(F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    set_error(e.what(), e.path());
    return URSET_E_USAGE;
  } catch (const BudgetError& e) {
    set_error(e.what());
    return URSET_E_BUDGET;
  } catch (const DomainError& e) {
    set_error(e.what());
    return URSET_E_DOMAIN;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return URSET_E_INTERNAL;
  } catch (const std::exception& e) {
    set_error(e.what());
    return URSET_E_INTERNAL;
  }
}

Rational rational_arg(const char* text, const char* name) { return io::parse_rational_arg(need(text, name), name); }

ht::Magnitude magnitude_arg(const char* text, const char* name) {
  qs::Integer v;
  try {
    v = qs::parse_integer(need(text, name));
  } catch (const ParseError& e) {
    throw ParseError(name, e.what());
  }
  if (v < 1) throw ParseError(name, "must be a positive integer");
  return ht::Magnitude(v);
}

share::SearchBox box_arg(const char* height, unsigned exp_bound, size_t candidate_budget, size_t pair_budget) {
  share::SearchBox box;
  box.height_bound = magnitude_arg(height, "height");
  box.exp_bound = exp_bound;
  if (candidate_budget != 0) box.candidate_budget = candidate_budget;
  if (pair_budget != 0) box.pair_budget = pair_budget;
  return box;
}

}  // namespace

extern "C" {

const char* urset_version(void) { return URSET_VERSION_STRING; }

const char* urset_last_error(void) { return g_error.c_str(); }

const char* urset_last_error_path(void) { return g_error_path.c_str(); }

urset_status urset_context_new(const char* primes_csv, const char* factoring_budget, unsigned workers, int digits,
                               urset_context** out) {
  if (out == nullptr) return set_error("null output pointer"), URSET_E_USAGE;
  *out = nullptr;
  return guard([&] {
    qs::Integer budget = qs::SContext::default_budget();
    if (factoring_budget != nullptr) {
      try {
        budget = qs::parse_integer(factoring_budget);
      } catch (const ParseError& e) {
        throw ParseError("budget", e.what());
      }
    }
    if (digits < 0 || digits > 60) throw ParseError("digits", "must lie in 1..60");
    auto* ctx = new urset_context{qs::SContext::parse(primes_csv ? primes_csv : "", budget), workers ? workers : 1,
                                  report::Style{digits ? digits : 6}};
    *out = ctx;
    set_error("");
    return URSET_OK;
  });
}

void urset_context_free(urset_context* ctx) { delete ctx; }

urset_status urset_family_poly_json(unsigned long n, unsigned long m, const char* a, const char* b, char** out) {
  if (out == nullptr) return set_error("null output pointer"), URSET_E_USAGE;
  *out = nullptr;
  return guard([&] {
    const poly::YiFamily fam(n, m, rational_arg(a, "a"), rational_arg(b, "b"));
    const auto P = fam.polynomial();
    report::Json coeffs = report::Json::array();
    for (long i = 0; i <= P.degree(); ++i) coeffs.push_back(P.coeff(static_cast<std::size_t>(i)).str());
    *out = dup_string(report::Json{{"coeffs", coeffs}}.dump());
    return URSET_OK;
  });
}

urset_status urset_validate_poly(const urset_context* ctx, unsigned long n, unsigned long m, const char* a,
                                 const char* b, urset_report** out) {
  if (ctx == nullptr || out == nullptr) return set_error("null argument"), URSET_E_USAGE;
  *out = nullptr;
  return guard([&] {
    const poly::YiFamily fam(n, m, rational_arg(a, "a"), rational_arg(b, "b"));
    return finish(report::validation(poly::yi_validate(ctx->S, fam), ctx->style), out);
  });
}

urset_status urset_share(const urset_context* ctx, const char* poly_json, const char* pairs_json,
                         const char* threshold, urset_report** out) {
  if (ctx == nullptr || out == nullptr) return set_error("null argument"), URSET_E_USAGE;
  *out = nullptr;
  return guard([&] {
    const auto P = io::parse_poly(need(poly_json, "poly"));
    const auto pairs = io::parse_pairs(need(pairs_json, "pairs"));
    const auto seq = share::make_pair_sequence(ctx->S, P, pairs);
    std::optional<share::AdmissibilityReport> adm;
    if (threshold != nullptr) adm = share::admissibility_report(seq, magnitude_arg(threshold, "threshold"));
    return finish(report::shares(seq, adm, ctx->style), out);
  });
}

urset_status urset_trace(const urset_context* ctx, unsigned long n, unsigned long m, const char* a, const char* b,
                         const char* pairs_json, const char* epsilon, urset_report** out) {
  if (ctx == nullptr || out == nullptr) return set_error("null argument"), URSET_E_USAGE;
  *out = nullptr;
  return guard([&] {
    const poly::YiFamily fam(n, m, rational_arg(a, "a"), rational_arg(b, "b"));
    yi::TraceOptions opts;
    opts.epsilon = rational_arg(epsilon, "epsilon");
    opts.workers = ctx->workers;
    const auto pairs = io::parse_pairs(need(pairs_json, "pairs"));
    const auto rep = yi::run_trace(ctx->S, fam, pairs, opts);
    return finish(report::trace(rep, opts, ctx->style), out);
  });
}

urset_status urset_subspace(const urset_context* ctx, const char* forms_json, const char* points_json,
                            const char* epsilon, int strict, urset_report** out) {
  if (ctx == nullptr || out == nullptr) return set_error("null argument"), URSET_E_USAGE;
  *out = nullptr;
  return guard([&] {
    const auto sys = io::parse_forms(need(forms_json, "forms"));
    const auto points = io::parse_points(need(points_json, "points"));
    sub::ConjectureOptions opts;
    opts.epsilon = rational_arg(epsilon, "epsilon");
    opts.strict = strict != 0;
    opts.workers = ctx->workers;
    const auto rows = sub::evaluate_conjecture(ctx->S, sys, points, opts);
    return finish(report::conjecture(sys, opts.epsilon, rows, ctx->style), out);
  });
}

urset_status urset_corollary(const urset_context* ctx, const char* A, const char* B, const char* C,
                             const char* pairs_json, const char* epsilon, urset_report** out) {
  if (ctx == nullptr || out == nullptr) return set_error("null argument"), URSET_E_USAGE;
  *out = nullptr;
  return guard([&] {
    const Rational a = rational_arg(A, "A"), b = rational_arg(B, "B"), c = rational_arg(C, "C");
    const auto pairs = io::parse_pairs(need(pairs_json, "pairs"));
    sub::ConjectureOptions opts;
    opts.epsilon = rational_arg(epsilon, "epsilon");
    opts.workers = ctx->workers;
    const auto rows = sub::corollary_eval(ctx->S, a, b, c, pairs, opts);
    return finish(report::corollary(a, b, c, opts.epsilon, rows, ctx->style), out);
  });
}

urset_status urset_unit_eq(const urset_context* ctx, unsigned bound, urset_report** out) {
  if (ctx == nullptr || out == nullptr) return set_error("null argument"), URSET_E_USAGE;
  *out = nullptr;
  return guard([&] {
    const auto sols = qs::unit_equation_solutions(ctx->S, bound, ctx->workers);
    return finish(report::unit_equation(bound, sols, ctx->style), out);
  });
}

urset_status urset_search_shared(const urset_context* ctx, const char* poly_json, const char* height,
                                 unsigned exp_bound, size_t candidate_budget, size_t pair_budget, urset_report** out) {
  if (ctx == nullptr || out == nullptr) return set_error("null argument"), URSET_E_USAGE;
  *out = nullptr;
  return guard([&] {
    const auto P = io::parse_poly(need(poly_json, "poly"));
    const auto box = box_arg(height, exp_bound, candidate_budget, pair_budget);
    try {
      const auto rows = share::search_shared_pairs(ctx->S, P, box, ctx->workers);
      return finish(report::shared_search(P, box, rows, std::nullopt, ctx->style), out);
    } catch (const PartialResultError<share::SharePoint>& e) {
      *out = make_report(report::shared_search(P, box, e.partial(), std::string(e.what()), ctx->style));
      set_error(e.what());
      return URSET_E_BUDGET;
    }
  });
}

urset_status urset_search_su(const urset_context* ctx, const char* poly_json, const char* c, const char* height,
                             unsigned exp_bound, size_t candidate_budget, size_t pair_budget, urset_report** out) {
  if (ctx == nullptr || out == nullptr) return set_error("null argument"), URSET_E_USAGE;
  *out = nullptr;
  return guard([&] {
    const auto P = io::parse_poly(need(poly_json, "poly"));
    const Rational cv = rational_arg(c, "c");
    const auto box = box_arg(height, exp_bound, candidate_budget, pair_budget);
    using Pair = std::pair<Rational, Rational>;
    try {
      const auto rows = yi::strong_uniqueness_search(ctx->S, P, cv, box, ctx->workers);
      return finish(report::su_search(P, cv, box, rows, std::nullopt, ctx->style), out);
    } catch (const PartialResultError<Pair>& e) {
      *out = make_report(report::su_search(P, cv, box, e.partial(), std::string(e.what()), ctx->style));
      set_error(e.what());
      return URSET_E_BUDGET;
    }
  });
}

const char* urset_report_json(const urset_report* rep) { return rep ? rep->json.c_str() : ""; }

const char* urset_report_table(const urset_report* rep) { return rep ? rep->table.c_str() : ""; }

int urset_report_verdict(const urset_report* rep) { return rep && rep->verdict_ok ? 1 : 0; }

void urset_report_free(urset_report* rep) { delete rep; }

urset_status urset_ord(const char* p, const char* x, long* out) {
  if (out == nullptr) return set_error("null output pointer"), URSET_E_USAGE;
  return guard([&] {
    qs::Integer prime;
    try {
      prime = qs::parse_integer(need(p, "p"));
    } catch (const ParseError& e) {
      throw ParseError("p", e.what());
    }
    *out = qs::ord(prime, rational_arg(x, "x"));
    return URSET_OK;
  });
}

urset_status urset_height(const char* x, char** out) {
  if (out == nullptr) return set_error("null output pointer"), URSET_E_USAGE;
  *out = nullptr;
  return guard([&] {
    *out = dup_string(ht::height(rational_arg(x, "x")).str());
    return URSET_OK;
  });
}

urset_status urset_counting(const urset_context* ctx, const char* x, unsigned long ell, char** out) {
  if (ctx == nullptr || out == nullptr) return set_error("null argument"), URSET_E_USAGE;
  *out = nullptr;
  return guard([&] {
    const Rational v = rational_arg(x, "x");
    const auto m = ell == 0 ? ht::counting(ctx->S, v) : ht::counting_trunc(ctx->S, ell, v);
    *out = dup_string(m.str());
    return URSET_OK;
  });
}

urset_status urset_display_log(const char* magnitude, int digits, char** out) {
  if (out == nullptr) return set_error("null output pointer"), URSET_E_USAGE;
  *out = nullptr;
  return guard([&] {
    if (digits < 1 || digits > 60) throw ParseError("digits", "must lie in 1..60");
    *out = dup_string(ht::display_log(magnitude_arg(magnitude, "magnitude"), digits));
    return URSET_OK;
  });
}

void urset_string_free(char* s) { std::free(s); }

}  // extern "C"
