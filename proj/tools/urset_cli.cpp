// urset: command-line front end over the C interface.
//
// Exit status: 0 every check passed, 1 a mathematical verdict failed,
// 2 usage or schema error, 3 budget exhausted, 4 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "urset/urset.h"

namespace {

using Json = nlohmann::ordered_json;

struct Common {
  std::string s;
  std::string epsilon = "1/10";
  std::string budget;
  unsigned workers = 1;
  std::string format = "json";
  std::string out;
  int digits = 6;
};

struct Family {
  unsigned long n = 0;
  unsigned long m = 0;
  std::string a;
  std::string b;
};

struct UsageError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot read '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int exit_code(urset_status st) {
  switch (st) {
    case URSET_OK: return 0;
    case URSET_VERDICT_FAILED: return 1;
    case URSET_E_USAGE:
    case URSET_E_DOMAIN: return 2;
    case URSET_E_BUDGET: return 3;
    default: return 4;
  }
}

struct ContextDeleter {
  void operator()(urset_context* c) const { urset_context_free(c); }
};
struct ReportDeleter {
  void operator()(urset_report* r) const { urset_report_free(r); }
};
using ContextPtr = std::unique_ptr<urset_context, ContextDeleter>;
using ReportPtr = std::unique_ptr<urset_report, ReportDeleter>;

class Runner {
 public:
  explicit Runner(const Common& c) : common_(c) {}

  /// Builds the context; on failure prints the error and returns nullopt.
  std::optional<int> open() {
    urset_context* raw = nullptr;
    const auto st = urset_context_new(common_.s.c_str(), common_.budget.empty() ? nullptr : common_.budget.c_str(),
                                      common_.workers, common_.digits, &raw);
    ctx_.reset(raw);
    if (st != URSET_OK) return fail(st);
    return std::nullopt;
  }

  const urset_context* ctx() const { return ctx_.get(); }

  int fail(urset_status st) const {
    std::cerr << "urset: error: " << urset_last_error() << "\n";
    return exit_code(st);
  }

  /// Emits the report (if any) and maps the status to an exit code.
  int emit(const std::string& command, const Json& config, urset_status st, urset_report* raw) const {
    ReportPtr rep(raw);
    if (!rep) return fail(st);

    Json doc;
    doc["tool"] = "urset";
    doc["version"] = urset_version();
    doc["command"] = command;
    doc["config"] = config;
    doc["result"] = Json::parse(urset_report_json(rep.get()));
    const std::string json = doc.dump(2) + "\n";
    const std::string table = urset_report_table(rep.get());

    if (common_.format == "table" || common_.format == "both") std::cout << table;
    if (common_.format == "json" || common_.format == "both") {
      if (!common_.out.empty()) {
        std::ofstream f(common_.out, std::ios::binary);
        if (!f) {
          std::cerr << "urset: error: cannot write '" << common_.out << "'\n";
          return 2;
        }
        f << json;
      } else {
        if (common_.format == "both") std::cout << "\n";
        std::cout << json;
      }
    }
    if (st == URSET_E_BUDGET) std::cerr << "urset: " << urset_last_error() << "\n";
    return exit_code(st);
  }

  Json base_config() const {
    Json c;
    c["s"] = common_.s;
    if (!common_.budget.empty()) c["factoring_budget"] = common_.budget;
    c["digits"] = common_.digits;
    return c;
  }

 private:
  const Common& common_;
  ContextPtr ctx_;
};

void add_common(CLI::App* cmd, Common& c, bool with_epsilon) {
  cmd->add_option("--s", c.s, "Primes in S, comma separated (empty for S = {})");
  if (with_epsilon) cmd->add_option("--epsilon", c.epsilon, "Epsilon as a rational string \"a/b\"")->capture_default_str();
  cmd->add_option("--budget", c.budget, "Factoring budget (largest non-S cofactor to factor)");
  cmd->add_option("--workers", c.workers, "Worker threads")->check(CLI::Range(1U, 256U))->capture_default_str();
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "table", "both"}))
      ->capture_default_str();
  cmd->add_option("--out", c.out, "Write JSON here instead of standard output");
  cmd->add_option("--digits", c.digits, "Decimals in display-only logs")->check(CLI::Range(1, 60))->capture_default_str();
}

void add_family(CLI::App* cmd, Family& f, bool required) {
  auto* n = cmd->add_option("--n", f.n, "Degree n of X^n + a X^(n-m) + b");
  auto* m = cmd->add_option("--m", f.m, "Gap m");
  auto* a = cmd->add_option("--a", f.a, "Coefficient a (rational string)");
  auto* b = cmd->add_option("--b", f.b, "Constant b (rational string)");
  if (required) {
    n->required();
    m->required();
    a->required();
    b->required();
  } else {
    n->needs(m, a, b);
  }
}

Json family_config(const Family& f) { return Json{{"n", f.n}, {"m", f.m}, {"a", f.a}, {"b", f.b}}; }

/// Polynomial text from --poly or from the family flags.
std::string poly_text(const std::string& poly_path, const Family& f, Json& config) {
  if (!poly_path.empty()) {
    config["poly"] = poly_path;
    return read_file(poly_path);
  }
  if (f.a.empty()) throw UsageError{"give either --poly FILE or --n/--m/--a/--b"};
  config["family"] = family_config(f);
  char* json = nullptr;
  if (urset_family_poly_json(f.n, f.m, f.a.c_str(), f.b.c_str(), &json) != URSET_OK)
    throw UsageError{urset_last_error()};
  std::string out = json;
  urset_string_free(json);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact S-unit sharing, height and truncated-counting toolkit"};
  app.set_version_flag("--version", std::string(urset_version()));
  app.require_subcommand(1);

  Common common;
  Family family;
  std::string poly_path, pairs_path, forms_path, points_path, threshold, corollary, c_value = "1";
  std::string height = "20";
  unsigned exp_bound = 0, bound = 3;
  std::size_t candidate_budget = 0, pair_budget = 0;
  bool strict = false;

  auto* validate = app.add_subcommand("validate-poly", "Check the hypotheses on X^n + a X^(n-m) + b");
  add_common(validate, common, false);
  add_family(validate, family, true);

  auto* share = app.add_subcommand("share", "Decide sharing for each pair and report admissibility");
  add_common(share, common, false);
  add_family(share, family, false);
  share->add_option("--poly", poly_path, "Polynomial file {\"coeffs\": [...]}");
  share->add_option("--pairs", pairs_path, "Pairs file [{\"x\": .., \"y\": ..}]")->required();
  share->add_option("--threshold", threshold, "Admissibility height threshold (integer)");

  auto* trace = app.add_subcommand("trace", "Trace every inequality of the argument on concrete pairs");
  add_common(trace, common, true);
  add_family(trace, family, true);
  trace->add_option("--pairs", pairs_path, "Pairs file")->required();

  auto* subspace = app.add_subcommand("subspace", "Evaluate the truncated subspace inequality");
  add_common(subspace, common, true);
  subspace->add_option("--forms", forms_path, "Forms file {\"r\": .., \"forms\": [[..]]}");
  subspace->add_option("--points", points_path, "Points file [[..], ..]");
  subspace->add_flag("--strict", strict, "Reject non-primitive points instead of normalizing");
  subspace->add_option("--corollary", corollary, "Evaluate the corollary for A x + B y = C, given as A,B,C");
  subspace->add_option("--pairs", pairs_path, "Pairs file for --corollary");

  auto* unit_eq = app.add_subcommand("unit-eq", "Enumerate solutions of u + v = 1 in S-units");
  add_common(unit_eq, common, false);
  unit_eq->add_option("--bound", bound, "Bound on |ord_p(u)| for p in S")->capture_default_str();

  auto* search_shared = app.add_subcommand("search-shared", "Search a box for sharing pairs with x != y");
  auto* search_su = app.add_subcommand("search-su", "Search a box for solutions of P(x) = c P(y) with x != y");
  for (auto* cmd : {search_shared, search_su}) {
    add_common(cmd, common, false);
    add_family(cmd, family, false);
    cmd->add_option("--poly", poly_path, "Polynomial file");
    cmd->add_option("--height", height, "Height bound on candidates")->capture_default_str();
    cmd->add_option("--exp-bound", exp_bound, "Bound on S-exponents of denominators")->capture_default_str();
    cmd->add_option("--candidate-budget", candidate_budget, "Maximum candidates (0: default)");
    cmd->add_option("--pair-budget", pair_budget, "Maximum reported pairs (0: default)");
  }
  search_su->add_option("--c", c_value, "Constant c (rational string)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Runner run(common);
  try {
    if (auto failed = run.open()) return *failed;
    Json config = run.base_config();
    urset_report* rep = nullptr;

    if (validate->parsed()) {
      config["family"] = family_config(family);
      const auto st = urset_validate_poly(run.ctx(), family.n, family.m, family.a.c_str(), family.b.c_str(), &rep);
      return run.emit("validate-poly", config, st, rep);
    }
    if (share->parsed()) {
      const std::string poly = poly_text(poly_path, family, config);
      config["pairs"] = pairs_path;
      if (!threshold.empty()) config["threshold"] = threshold;
      const std::string pairs = read_file(pairs_path);
      const auto st = urset_share(run.ctx(), poly.c_str(), pairs.c_str(), threshold.empty() ? nullptr : threshold.c_str(),
                                  &rep);
      return run.emit("share", config, st, rep);
    }
    if (trace->parsed()) {
      config["family"] = family_config(family);
      config["epsilon"] = common.epsilon;
      config["pairs"] = pairs_path;
      const std::string pairs = read_file(pairs_path);
      const auto st = urset_trace(run.ctx(), family.n, family.m, family.a.c_str(), family.b.c_str(), pairs.c_str(),
                                  common.epsilon.c_str(), &rep);
      return run.emit("trace", config, st, rep);
    }
    if (subspace->parsed()) {
      config["epsilon"] = common.epsilon;
      if (!corollary.empty()) {
        const auto first = corollary.find(',');
        const auto second = first == std::string::npos ? first : corollary.find(',', first + 1);
        if (second == std::string::npos || corollary.find(',', second + 1) != std::string::npos)
          throw UsageError{"--corollary expects A,B,C"};
        if (pairs_path.empty()) throw UsageError{"--corollary requires --pairs"};
        const std::string A = corollary.substr(0, first);
        const std::string B = corollary.substr(first + 1, second - first - 1);
        const std::string C = corollary.substr(second + 1);
        config["corollary"] = Json{{"A", A}, {"B", B}, {"C", C}};
        config["pairs"] = pairs_path;
        const std::string pairs = read_file(pairs_path);
        const auto st =
            urset_corollary(run.ctx(), A.c_str(), B.c_str(), C.c_str(), pairs.c_str(), common.epsilon.c_str(), &rep);
        return run.emit("subspace", config, st, rep);
      }
      if (forms_path.empty() || points_path.empty()) throw UsageError{"subspace needs --forms and --points"};
      config["forms"] = forms_path;
      config["points"] = points_path;
      config["strict"] = strict;
      const std::string forms = read_file(forms_path);
      const std::string points = read_file(points_path);
      const auto st =
          urset_subspace(run.ctx(), forms.c_str(), points.c_str(), common.epsilon.c_str(), strict ? 1 : 0, &rep);
      return run.emit("subspace", config, st, rep);
    }
    if (unit_eq->parsed()) {
      config["bound"] = bound;
      const auto st = urset_unit_eq(run.ctx(), bound, &rep);
      return run.emit("unit-eq", config, st, rep);
    }
    if (search_shared->parsed() || search_su->parsed()) {
      const std::string poly = poly_text(poly_path, family, config);
      config["height"] = height;
      config["exp_bound"] = exp_bound;
      if (candidate_budget != 0) config["candidate_budget"] = candidate_budget;
      if (pair_budget != 0) config["pair_budget"] = pair_budget;
      if (search_shared->parsed()) {
        const auto st = urset_search_shared(run.ctx(), poly.c_str(), height.c_str(), exp_bound, candidate_budget,
                                            pair_budget, &rep);
        return run.emit("search-shared", config, st, rep);
      }
      config["c"] = c_value;
      const auto st = urset_search_su(run.ctx(), poly.c_str(), c_value.c_str(), height.c_str(), exp_bound,
                                      candidate_budget, pair_budget, &rep);
      return run.emit("search-su", config, st, rep);
    }
  } catch (const UsageError& e) {
    std::cerr << "urset: error: " << e.message << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "urset: internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}
