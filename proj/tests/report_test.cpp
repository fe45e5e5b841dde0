#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "utaut/report.hpp"

using namespace utaut;
using nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int run_quiet(const RunConfig& cfg, ordered_json* out = nullptr) {
  std::ostringstream sink;
  return run(cfg, sink, out);
}

} // namespace

TEST_CASE("info") {
  RunConfig cfg;
  cfg.command = "info";
  cfg.p = 5;
  ordered_json rep;
  CHECK(run_quiet(cfg, &rep) == kExitPass);
  CHECK(rep["group_order"] == 125);
  CHECK(rep["center_order"] == 5);
  CHECK(rep["nilpotency_class"] == 2);
  CHECK(rep["verdict"] == "PASS");
}

TEST_CASE("classes") {
  RunConfig cfg;
  cfg.command = "classes";
  cfg.p = 2;
  ordered_json rep;
  CHECK(run_quiet(cfg, &rep) == kExitPass);
  CHECK(rep["class_count"] == 5); // D8
  auto hist = rep["class_size_histogram"];
  REQUIRE(hist.size() == 2);
  CHECK(hist[0]["class_size"] == 1);
  CHECK(hist[0]["count"] == 2);
  CHECK(hist[1]["class_size"] == 2);
  CHECK(hist[1]["count"] == 3);
}

TEST_CASE("abelian quotient: class_count equals group_order") {
  RunConfig cfg;
  cfg.command = "classes";
  cfg.p = 3;
  cfg.n = 4;
  cfg.k = 2;
  ordered_json rep;
  CHECK(run_quiet(cfg, &rep) == kExitPass);
  CHECK(rep["class_count"] == rep["group_order"]);
}

TEST_CASE("autc with each method agrees") {
  ordered_json reps[3];
  int idx = 0;
  for (const char* method : {"brute", "structured", "generated"}) {
    RunConfig cfg;
    cfg.command = "autc";
    cfg.p = 2;
    cfg.m = 2;
    cfg.method = method;
    CHECK(run_quiet(cfg, &reps[idx++]) == kExitPass);
  }
  for (auto& rep : reps) {
    CHECK(rep["autc_order"] == 256);
    CHECK(rep["inn_order"] == 16);
    CHECK(rep["outc_order"] == 16);
    CHECK(rep["verdict"] == "PASS");
  }
}

TEST_CASE("verify-b and burnside") {
  RunConfig cfg;
  cfg.command = "verify-b";
  cfg.p = 2;
  cfg.m = 2;
  cfg.method = "all";
  ordered_json rep;
  CHECK(run_quiet(cfg, &rep) == kExitPass);
  CHECK(rep["autc_order"] == 256);
  CHECK(rep["formula_autc"] == 256);
  CHECK(rep["formula_outc"] == 16);

  cfg.command = "burnside";
  ordered_json rep2;
  CHECK(run_quiet(cfg, &rep2) == kExitPass);
  CHECK(rep2["a1_order"] == 16);
  CHECK(rep2["a2_order"] == 16);
  CHECK(rep2["autc_order"] == 256);
}

TEST_CASE("verify-a") {
  RunConfig cfg;
  cfg.command = "verify-a";
  cfg.p = 2;
  cfg.n = 4;
  cfg.k = 4;
  CHECK(run_quiet(cfg) == kExitPass);
}

TEST_CASE("thm27") {
  RunConfig cfg;
  cfg.command = "thm27";
  cfg.p = 2;
  cfg.m = 2;
  cfg.c_literal = {0, 1}; // theta
  ordered_json rep;
  CHECK(run_quiet(cfg, &rep) == kExitPass);
  CHECK(rep["central"] == true);
  CHECK(rep["class_preserving"] == true);
  CHECK(rep["non_inner"] == true);
  CHECK(rep["witnesses_verified"] == 64);

  // prime field is invalid input for this construction
  RunConfig bad = cfg;
  bad.m = 1;
  bad.c_literal = {1};
  CHECK(run_quiet(bad) == kExitBadParams);
}

TEST_CASE("report carries the unasserted basis-conjugating block") {
  RunConfig cfg;
  cfg.command = "report";
  cfg.p = 2;
  cfg.n = 4;
  ordered_json rep;
  CHECK(run_quiet(cfg, &rep) == kExitPass);
  auto cb = rep["cb_open_question"];
  CHECK(cb["verdict"] == "SKIPPED");
  CHECK(cb["candidate_bound"] == 16);     // p^(2n-4)
  CHECK(cb["claimed_prime_field"] == 64); // p^((n-1)(n-2))
  CHECK(cb.contains("computed_cb"));
}

TEST_CASE("json and csv files are written and byte-stable across thread counts") {
  RunConfig cfg;
  cfg.command = "autc";
  cfg.p = 2;
  cfg.m = 2;
  cfg.out_path = "report_test_out.json";
  cfg.csv = true;
  cfg.threads = 1;
  CHECK(run_quiet(cfg) == kExitPass);
  std::string first = slurp("report_test_out.json");
  std::string csv = slurp("report_test_out.csv");
  CHECK(csv.rfind("class_size,count\n", 0) == 0);

  cfg.threads = 8;
  CHECK(run_quiet(cfg) == kExitPass);
  CHECK(slurp("report_test_out.json") == first);
  CHECK(slurp("report_test_out.csv") == csv);

  // sanity: the json parses and echoes the config
  ordered_json parsed = ordered_json::parse(first);
  CHECK(parsed["params"]["p"] == 2);
  CHECK(parsed["params"]["m"] == 2);

  std::remove("report_test_out.json");
  std::remove("report_test_out.csv");
}

TEST_CASE("exit codes") {
  RunConfig cfg;
  cfg.command = "nonsense";
  CHECK(run_quiet(cfg) == kExitBadParams);

  cfg.command = "info";
  cfg.p = 4; // not prime
  CHECK(run_quiet(cfg) == kExitBadParams);

  cfg.p = 2;
  cfg.n = 2; // below the minimum
  CHECK(run_quiet(cfg) == kExitBadParams);

  cfg.n = 6;
  cfg.k = 3;
  cfg.max_order = 64; // 2^12 over the cap
  CHECK(run_quiet(cfg) == kExitCapExceeded);

  RunConfig cand;
  cand.command = "autc";
  cand.p = 2;
  cand.m = 2;
  cand.max_candidates = 16;
  CHECK(run_quiet(cand) == kExitCapExceeded);
}
