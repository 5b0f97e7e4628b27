#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(URSET_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* name) { return std::string(URSET_TEST_DATA) + "/" + name; }

const std::string kYi = "--n 7 --m 1 --a 1 --b 1 --s 2,3";

}  // namespace

TEST_CASE("validate-poly exit codes") {
  auto r = run("validate-poly " + kYi);
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["tool"] == "urset");
  CHECK(j["command"] == "validate-poly");
  CHECK(j["result"]["discriminant"] == "-870199");
  CHECK_FALSE(j["config"].contains("workers"));

  CHECK(run("validate-poly --n 6 --m 1 --a 1 --b 1 --s 2,3").code == 1);
  CHECK(run("validate-poly --n 7 --m 1 --a 1 --b 1/5 --s 2,3").code == 1);
  CHECK(run("validate-poly --n 7 --m 1 --a 1.5 --b 1 --s 2,3").code == 2);
  CHECK(run("validate-poly --n 7 --m 1 --a 1 --b 1 --s 2,4").code == 2);
  CHECK(run("validate-poly --bogus").code == 2);
  CHECK(run("validate-poly " + kYi + " --format table").out.find("overall: PASS") != std::string::npos);
}

TEST_CASE("share and trace") {
  auto r = run("share --poly " + data("yi7_poly.json") + " --pairs " + data("yi7_shared_pairs.json") +
               " --s 2,3 --threshold 2");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["result"]["all_share"] == true);

  r = run("share --poly " + data("yi7_poly.json") + " --pairs " + data("float_pairs.json") + " --s 2,3", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("pairs[0].y") != std::string::npos);

  r = run("trace " + kYi + " --pairs " + data("yi7_shared_pairs.json"));
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["result"]["exact_checks_pass"] == true);

  r = run("trace " + kYi + " --pairs " + data("yi7_mixed_pairs.json"));
  CHECK(r.code == 1);
  const auto j = json::parse(r.out);
  CHECK(j["result"]["excluded"][0]["input_index"] == 1);
  CHECK(j["result"]["rows"][0]["identity_ok"] == true);
}

TEST_CASE("subspace and corollary") {
  auto r = run("subspace --s 2,3 --forms " + data("forms_p1.json") + " --points " + data("points_fixture.json"));
  CHECK(r.code == 1);
  auto j = json::parse(r.out);
  CHECK(j["result"]["points"][0]["verdict"] == "violated");
  CHECK(j["result"]["points"][0]["rhs"]["int"] == "5");
  CHECK(j["result"]["points"][1]["verdict"] == "holds");

  r = run("subspace --s 2,3 --forms " + data("forms_p1.json") + " --points " + data("points_holding.json"));
  CHECK(r.code == 0);

  r = run("subspace --s 2,3 --forms " + data("forms_degenerate.json") + " --points " + data("points_holding.json"),
          true);
  CHECK(r.code == 2);
  CHECK(r.out.find("degenerate system: forms {0,1} are linearly dependent") != std::string::npos);

  r = run("subspace --s 2,3 --corollary 1,1,1 --pairs " + data("corollary_pairs.json"));
  j = json::parse(r.out);
  CHECK(j["result"]["rows"][0]["agree"] == true);
  CHECK(j["result"]["rows"][0]["direct"]["verdict"] == "violated");
  CHECK(r.code == 1);
}

TEST_CASE("unit-eq and searches") {
  auto r = run("unit-eq --s 2,3 --bound 3");
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  bool found = false;
  for (const auto& s : j["result"]["solutions"]) found = found || (s["u"] == "9" && s["v"] == "-8");
  CHECK(found);

  r = run("search-su " + kYi + " --c 1 --height 20");
  CHECK(r.code == 0);
  j = json::parse(r.out);
  CHECK(j["result"]["pairs"] == json::parse(R"([{"x": "-1", "y": "0"}, {"x": "0", "y": "-1"}])"));

  r = run("search-shared --poly " + data("yi7_poly.json") + " --s 2,3 --height 10 --candidate-budget 5");
  CHECK(r.code == 3);
  CHECK(json::parse(r.out)["result"]["incomplete"].get<std::string>().find("5 of 21") != std::string::npos);
}

TEST_CASE("output is independent of the worker count") {
  const std::string base = "search-shared " + kYi + " --height 30 --exp-bound 1";
  const auto one = run(base + " --workers 1");
  const auto four = run(base + " --workers 4");
  CHECK(one.code == 0);
  CHECK(one.out == four.out);

  const auto u1 = run("unit-eq --s 2,3,5 --bound 2 --workers 1");
  const auto u3 = run("unit-eq --s 2,3,5 --bound 2 --workers 3");
  CHECK(u1.out == u3.out);
}

TEST_CASE("--out writes the document") {
  const auto path = std::filesystem::temp_directory_path() / "urset_cli_out.json";
  std::filesystem::remove(path);
  const auto r = run("validate-poly " + kYi + " --out " + path.string());
  CHECK(r.code == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(json::parse(ss.str())["result"]["discriminant"] == "-870199");
  std::filesystem::remove(path);
}
