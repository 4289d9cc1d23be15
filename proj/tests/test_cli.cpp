#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <nlohmann/json.hpp>

#include "liecert/checks.hpp"

using json = nlohmann::json;
using namespace liecert;

namespace {

struct RunResult {
  std::string out;
  int code = -1;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("LIECERT_BIN");
  std::string cmd = std::string(bin ? bin : "build/liecert") + " " + args +
                    " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WEXITSTATUS(st);
  return r;
}

json parse_report(const RunResult& r) {
  json j = json::parse(r.out);
  // Round trip: serialize and parse again, values must be identical.
  CHECK(json::parse(j.dump()) == j);
  CHECK(j.contains("version"));
  CHECK(j.contains("command"));
  CHECK(j.contains("inputs"));
  CHECK(j.contains("seed"));
  CHECK(j.contains("timing_ms"));
  CHECK(j.contains("verdicts"));
  return j;
}

}  // namespace

TEST_CASE("orbit listing") {
  auto r = run_cli("orbits A 3");
  CHECK(r.code == 0);
  json j = parse_report(r);
  CHECK(j["command"] == "orbits");
  CHECK(j["data"]["orbits"].size() == 5);
  for (const auto& o : j["data"]["orbits"]) {
    CHECK(o.contains("dimension"));
    CHECK(o.contains("diagram"));
    CHECK(o.contains("rigid"));
  }

  auto ve = run_cli("orbits D 4 --partition 2,2,2,2");
  CHECK(ve.code == 0);
  json jv = parse_report(ve);
  REQUIRE(jv["data"]["orbits"].size() == 2);
  CHECK(jv["data"]["orbits"][0]["label"] == "I");
  CHECK(jv["data"]["orbits"][1]["label"] == "II");
  CHECK(jv["data"]["orbits"][0]["dimension"] == jv["data"]["orbits"][1]["dimension"]);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("orbits A 0").code == 2);
  CHECK(run_cli("orbits Z 4").code == 2);
  CHECK(run_cli("verify nonsense").code == 2);
  CHECK(run_cli("charvar typeA-level-minus1").code == 2);  // missing --n
  CHECK(run_cli("").code == 2);                            // no subcommand
}

TEST_CASE("verify reports and exit codes") {
  auto r = run_cli("verify sing-level --case v0 --m 2");
  CHECK(r.code == 0);
  json j = parse_report(r);
  REQUIRE(j["verdicts"].size() == 1);
  CHECK(j["verdicts"][0]["status"] == "pass");
  CHECK(std::string(j["verdicts"][0]["witness"]).find("-2") != std::string::npos);

  // A degree bound below the module degree leaves the search inconclusive:
  // exit 0 normally, exit 3 under --strict.
  auto u = run_cli("verify lemma-l1 --n 4 --degree-bound 1");
  CHECK(u.code == 0);
  json ju = parse_report(u);
  bool any_unknown = false;
  for (const auto& v : ju["verdicts"])
    if (v["status"] == "unknown") any_unknown = true;
  CHECK(any_unknown);
  CHECK(run_cli("--strict verify lemma-l1 --n 4 --degree-bound 1").code == 3);
}

TEST_CASE("seed is recorded in the report") {
  auto r0 = run_cli("verify induction --n 4 --r 5");
  json j0 = parse_report(r0);
  CHECK(j0["seed"] == 0);
  auto r5 = run_cli("--seed 5 verify induction --n 4 --r 5");
  json j5 = parse_report(r5);
  CHECK(j5["seed"] == 5);
  CHECK(r5.code == 0);
}

TEST_CASE("central charge command") {
  auto r = run_cli("central-charge A 3 2,2 -2");
  CHECK(r.code == 0);
  json j = parse_report(r);
  CHECK(j["data"]["central_charge"] == "1");
  // Exact rationals are emitted as strings.
  auto r2 = run_cli("central-charge A 3 2,1,1 7/5");
  CHECK(r2.code == 0);
  json j2 = parse_report(r2);
  CHECK(std::string(j2["data"]["central_charge"]).find('/') != std::string::npos);
}

TEST_CASE("charvar command") {
  auto r = run_cli("charvar typeA-level-minus1 --n 4");
  CHECK(r.code == 0);
  json j = parse_report(r);
  REQUIRE(j["data"]["components"].size() == 4);
  for (const auto& c : j["data"]["components"]) CHECK(c["target_index"] == 0);

  auto rd = run_cli("charvar typeD --r 5");
  CHECK(rd.code == 0);
  json jd = parse_report(rd);
  CHECK(jd["data"]["targets"].size() == 2);
  for (const auto& c : jd["data"]["components"])
    CHECK_FALSE(c["target_index"].is_null());
}

TEST_CASE("sheets command") {
  auto r = run_cli("sheets A 3");
  CHECK(r.code == 0);
  json j = parse_report(r);
  REQUIRE(j["data"]["sheets"].size() == 5);
  for (const auto& s : j["data"]["sheets"])
    CHECK(s["dimension"] >= s["rank"]);
}

TEST_CASE("mutation smoke test: a flipped structure constant is caught") {
  auto g = build_sl(4);
  CHECK(jacobi_identity_ok(*g));
  int flipped = 0;
  for (int i = 0; i < g->dim && flipped < 5; ++i)
    for (int j = 0; j < g->dim && flipped < 5; ++j) {
      if (g->structure_constants[i][j].empty()) continue;
      LieAlgebra mutant = *g;
      mutant.structure_constants[i][j][0].second *= -1;
      CHECK_FALSE(jacobi_identity_ok(mutant));
      ++flipped;
    }
  CHECK(flipped == 5);
}
