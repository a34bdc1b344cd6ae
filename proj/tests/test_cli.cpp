#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

using json = nlohmann::ordered_json;

#ifndef UNIVOQUE_CLI_BINARY
#error "UNIVOQUE_CLI_BINARY must point at the built executable"
#endif

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + UNIVOQUE_CLI_BINARY + " " +
                    args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

json payload(const RunResult& r) {
  REQUIRE(r.status == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("json envelope and exact payload") {
  RunResult r = run_cli("eval --seq \"(10)^\" --q 3/2");
  json doc = payload(r);
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["command"] == "eval");
  CHECK(doc["params"]["seq"] == "(10)^");
  CHECK(doc["params"]["q"] == "3/2");
  CHECK(doc["result"]["value"]["num"] == "6");
  CHECK(doc["result"]["value"]["den"] == "5");
  CHECK(doc["precision"]["exact"] == true);
  CHECK(doc["timing_ms"].is_number_integer());

  // Byte-identical round trip: parse and re-dump reproduces stdout.
  CHECK(doc.dump(2) + "\n" == r.out);
}

TEST_CASE("payloads are deterministic apart from timing") {
  json a = payload(run_cli("klconstant --tol 1e-5"));
  json b = payload(run_cli("klconstant --tol 1e-5"));
  a.erase("timing_ms");
  b.erase("timing_ms");
  CHECK(a.dump() == b.dump());
}

TEST_CASE("smallest univoque base via the command line") {
  json doc = payload(run_cli("klconstant --tol 1e-5"));
  CHECK(doc["result"]["decimal"] == "1.78723");
  // Enclosure endpoints are exact rationals.
  CHECK(doc["result"]["lo"]["num"].is_string());
  CHECK(doc["result"]["hi"]["den"].is_string());
}

TEST_CASE("root solving via the command line") {
  json doc = payload(run_cli("solve --seq \"(10)^\" --x 1 --tol 1e-12"));
  CHECK(doc["result"]["decimal"] == "1.618033988750");
}

TEST_CASE("expansion commands") {
  json dy = payload(run_cli("dyadic --x 3/4"));
  CHECK(dy["result"]["literal"] == "10(1)^");
  CHECK(dy["result"]["preperiod"] == "10");
  CHECK(dy["result"]["period"] == "1");

  json ex = payload(run_cli("expand --x 1 --q 8/5 --depth 12 --mode greedy"));
  CHECK(ex["result"]["digits"] == "101010010100");

  json un = payload(run_cli("unique --seq \"(10)^\" --q 17/10 --depth 64"));
  CHECK(un["result"]["verdict"] == "unique");
  json nu = payload(run_cli("unique --seq \"(10)^\" --q 8/5 --depth 64"));
  CHECK(nu["result"]["verdict"] == "not-unique");

  json dec = payload(run_cli("decompose --x 2/3"));
  CHECK(dec["result"]["case"] == "C");
  CHECK(dec["result"]["m_offset"] == 4);
  CHECK(dec["result"]["stem"] == "10101001");
}

TEST_CASE("component and gap certification commands") {
  json comp = payload(run_cli("component --word 110100 --tol 1e-5"));
  CHECK(comp["result"]["q_left"]["decimal"] == "1.78854");
  CHECK(comp["result"]["q_kl"]["decimal"] == "1.78723");

  json prop = payload(run_cli("prop51 --word 110100 --tol 1e-5"));
  CHECK(prop["result"]["sum_gap_ok"] == true);
  CHECK(prop["result"]["product_gap_ok"] == true);
}

TEST_CASE("level output in both formats") {
  RunResult csv = run_cli("level --x 1 --j 1 --depth 6 --tol 1e-6 --format csv");
  CHECK(csv.status == 0);
  CHECK(csv.out.rfind("word,kind,lo,hi\n", 0) == 0);
  CHECK(csv.out.find("111001,interval,") != std::string::npos);
  CHECK(csv.out.find("1110,gap,") != std::string::npos);

  json doc = payload(run_cli("level --x 1 --j 1 --depth 6 --tol 1e-6"));
  CHECK(doc["result"]["stem"] == "111");
  CHECK(doc["result"]["entries"].size() == 5);  // 3 intervals + 2 gaps
}

TEST_CASE("matching commands") {
  json m = payload(run_cli("match --alpha 3/2 --budget 64"));
  CHECK(m["result"]["verdict"] == "non-matching");
  CHECK(m["result"]["cycle_length"] == 2);
  CHECK(m["result"]["doubling_verdict"] == "non-matching");

  RunResult sweep = run_cli("match-sweep --from 1 --to 2 --count 5 --budget 32");
  CHECK(sweep.status == 0);
  CHECK(sweep.out ==
        "alpha,verdict,m_or_cycle\n"
        "1,non-matching,1\n"
        "5/4,non-matching,4\n"
        "3/2,non-matching,2\n"
        "7/4,matched,1\n"
        "2,matched,1\n");
}

TEST_CASE("alpha-space level command") {
  RunResult csv = run_cli("nm --m 3 --depth 6 --format csv");
  CHECK(csv.status == 0);
  CHECK(csv.out.find("111110,interval,56/55,112/109") != std::string::npos);
  CHECK(csv.out.find("111,gap,56/53,14/13") != std::string::npos);
}

TEST_CASE("threshold and entropy commands") {
  json th = payload(run_cli("thresholdj --x 1 --jmax 16"));
  CHECK(th["result"]["j"] == 9);
  CHECK(th["result"]["run_bound"] == 11);

  json ent = payload(run_cli("entropy --m 3 --depth 3"));
  CHECK(ent["result"]["factor_count"] == 6);
  CHECK(ent["result"]["decimal"] == "0.861654166907");
}

TEST_CASE("exit codes separate usage, math domain, and inconclusive") {
  CHECK(run_cli("definitely-not-a-command").status == 2);
  CHECK(run_cli("eval --seq \"(10)^\" --q notanumber").status == 2);
  CHECK(run_cli("eval --seq \"((\" --q 3/2").status == 2);
  CHECK(run_cli("solve --seq \"(10)^\" --x 1 --tol 0").status == 2);

  // Threshold search that cannot succeed within the cap.
  CHECK(run_cli("thresholdj --x 1 --jmax 1").status == 3);

  // Iteration budget from the environment forces an inconclusive solve.
  CHECK(run_cli("klconstant --tol 1e-12", "UNIVOQUE_MAX_ITERS=2").status == 3);

  // Diagnostics go to stderr: stdout stays empty on failure.
  CHECK(run_cli("thresholdj --x 1 --jmax 1").out.empty());
}

TEST_CASE("sum cover command") {
  json doc = payload(
      run_cli("sumcover --x 1 --j 1 --depth 8 --tol 1e-6 --lambda -1"));
  CHECK(doc["result"]["lambda"] == "-1");
  CHECK(doc["result"]["block_count"] == 1);
  CHECK(doc["result"]["blocks"].size() == 1);
}
