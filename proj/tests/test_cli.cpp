#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "coinv/io.hpp"
#include "coinv/polynomial.hpp"

#ifndef COINV_CLI_PATH
#error "COINV_CLI_PATH must point at the built binary"
#endif

namespace {

using nlohmann::json;

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cmd(const std::string& args) {
  const std::string cmd = std::string(COINV_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  if (WIFEXITED(raw)) r.status = WEXITSTATUS(raw);
  return r;
}

const char* kBigBlocks = "1,3,5,9|6,7,8,10,14|2,12,15|4,13||11,16";
const char* kBigCode = "1,2,2,1,3,0,0,2,2,3,5,1,0,1,2,5";

}  // namespace

TEST_CASE("enumerate prints one row per ordered set partition") {
  auto r = run_cmd("enumerate -n 2 --shape 1,0");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "1,2|\t0,0\t0,1\t0\n"
        "1|2\t0,1\t0,1\t1\n"
        "2|1\t1,0\t1,0\t1\n");
}

TEST_CASE("enumerate csv quotes fields with commas") {
  auto r = run_cmd("enumerate -n 2 --shape 1,0 --out csv");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "blocks,code,maxcode,coinv\n"
        "\"1,2|\",\"0,0\",\"0,1\",0\n"
        "1|2,\"0,1\",\"0,1\",1\n"
        "2|1,\"1,0\",\"1,0\",1\n");
}

TEST_CASE("enumerate json lines are valid and deterministic") {
  auto r1 = run_cmd("enumerate -n 3 --shape 1,1 --out json");
  auto r2 = run_cmd("enumerate -n 3 --shape 1,1 --out json");
  CHECK(r1.status == 0);
  CHECK(r1.out == r2.out);

  std::istringstream lines(r1.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    auto j = json::parse(line);
    CHECK(j.contains("blocks"));
    CHECK(j.contains("code"));
    CHECK(j.contains("maxcode"));
    CHECK(j.contains("coinv"));
    ++rows;
  }
  CHECK(rows == 6);
  CHECK(r1.out.substr(0, r1.out.find('\n')) ==
        R"({"blocks":"1,2|3","code":[1,1,0],"maxcode":[1,1,0],"coinv":2})");
}

TEST_CASE("enumerate restricted to one ordered set partition") {
  auto r = run_cmd("enumerate -n 2 --shape 1,0 --blocks '2|1'");
  CHECK(r.status == 0);
  CHECK(r.out == "2|1\t1,0\t1,0\t1\n");
}

TEST_CASE("code reports the worked large example") {
  auto r = run_cmd(std::string("code -n 16 --shape 3,3,2,2,0,0 --blocks '") + kBigBlocks +
                   "' --out json");
  CHECK(r.status == 0);
  auto j = json::parse(r.out);
  CHECK(j["coinv"] == 30);
  CHECK(j["code"].get<std::vector<int>>() == coinv::split_ints(kBigCode));
  CHECK(j["maxcode"].get<std::vector<int>>() ==
        coinv::split_ints("1,3,2,1,3,0,0,2,5,5,5,1,0,5,5,5"));
  CHECK(j["tableau"] == "5,2,1|8,3,6|12,4|13,7");
}

TEST_CASE("insert inverts code on the worked large example") {
  auto direct = run_cmd(std::string("code -n 16 --shape 3,3,2,2,0,0 --blocks '") + kBigBlocks +
                        "'");
  auto rebuilt = run_cmd(std::string("insert -n 16 --shape 3,3,2,2,0,0 --code ") + kBigCode);
  CHECK(direct.status == 0);
  CHECK(rebuilt.status == 0);
  CHECK(direct.out == rebuilt.out);
  CHECK(direct.out.find("blocks: " + std::string(kBigBlocks) + "\n") != std::string::npos);
  CHECK(direct.out.find("coinv: 30\n") != std::string::npos);
}

TEST_CASE("exit codes distinguish bad input from failed verification") {
  CHECK(run_cmd("insert -n 2 --shape 1,1 --code 0,1").status == 2);  // not in the code family
  CHECK(run_cmd("frobnicate").status == 2);
  CHECK(run_cmd("code -n 2 --shape 1,0").status == 2);  // missing --blocks
  CHECK(run_cmd("code -n 2 --shape 2,1 --blocks '1,2|'").status == 2);  // weight > n
  CHECK(run_cmd("delta -n 3 --shape 2,1 --tableau '1,2|3' --blocks '1,2|3'").status == 2);
  CHECK(run_cmd("delta -n 3 --shape 2,1").status == 2);
  CHECK(run_cmd("verify --suite no_such_suite").status == 2);
}

TEST_CASE("hilbert cross-check text output") {
  auto r = run_cmd("hilbert -n 2 --shape 1,0 --cross-check");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "degree\tambient\tideal\tquotient\n"
        "0\t1\t0\t1\n"
        "1\t2\t0\t2\n"
        "2\t3\t3\t0\n"
        "hilbert: 1,2\n"
        "total: 3\n"
        "cross-check: pass\n");
}

TEST_CASE("hilbert cross-check json output") {
  auto r = run_cmd("hilbert -n 3 --shape 1,1,1 --cross-check --out json");
  CHECK(r.status == 0);
  auto j = json::parse(r.out);
  CHECK(j["n"] == 3);
  CHECK(j["shape"] == "1,1,1");
  CHECK(j["hilbert"].get<std::vector<long>>() == std::vector<long>{1, 2, 2, 1});
  CHECK(j["total"] == 6);
  CHECK(j["cross_check"] == "pass");
  CHECK(j["ambient"].size() == 7);  // degrees 0..n(s-1)
  CHECK(j["ambient"][2] == "6");
  CHECK(j["quotient"].get<std::vector<long>>() ==
        std::vector<long>{1, 2, 2, 1, 0, 0, 0});
}

TEST_CASE("delta json round trips through the polynomial codec") {
  auto r = run_cmd("delta -n 2 --shape 1,0 --blocks '2|1' --out json");
  CHECK(r.status == 0);
  auto j = json::parse(r.out);
  CHECK(j["source"]["blocks"] == "2|1");
  CHECK(j["degree"] == 1);
  CHECK(j["leading_exponent"].get<std::vector<int>>() == std::vector<int>{1, 0});
  auto p = coinv::polynomial_from_json(j["polynomial"].dump());
  CHECK(p == coinv::SparsePolynomial::variable(2, 1));
}

TEST_CASE("delta csv lists terms in decreasing lex order") {
  auto r = run_cmd("delta -n 3 --shape 2,1 --tableau '1,2|3' --out csv");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "coeff,e1,e2,e3\n"
        "1,1,0,0\n"
        "-1,0,0,1\n");
}

TEST_CASE("delta text output") {
  auto r = run_cmd("delta -n 3 --shape 2,1 --tableau '1,2|3'");
  CHECK(r.status == 0);
  CHECK(r.out == "x1 - x3\n");
}

TEST_CASE("verify golden suite passes and is deterministic") {
  auto r1 = run_cmd("verify --suite golden --out csv");
  auto r2 = run_cmd("verify --suite golden --out csv");
  CHECK(r1.status == 0);
  CHECK(r1.out == r2.out);
  std::istringstream lines(r1.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "name,params,pass,counterexample");
  while (std::getline(lines, line)) {  // pass rows end ",1," + empty counterexample
    CHECK(line.size() >= 3);
    CHECK(line.substr(line.size() - 3) == ",1,");
  }

  auto rj = run_cmd("verify --suite golden --out json");
  CHECK(rj.status == 0);
  auto j = json::parse(rj.out);
  CHECK(j["suite"] == "golden");
  CHECK(j["pass"] == true);
  CHECK(j["failures"] == 0);
  CHECK(j["checks"].size() > 0);
  CHECK(j["wall_ms"].size() == j["checks"].size());

  auto rt = run_cmd("verify --suite golden");
  CHECK(rt.status == 0);
  CHECK(rt.out.find("FAIL") == std::string::npos);
  CHECK(rt.out.find("suite golden: ") != std::string::npos);
  CHECK(rt.out.find(" checks passed\n") != std::string::npos);
}

TEST_CASE("verify narrows to a single shape") {
  auto r = run_cmd("verify --suite leading -n 2 --shape 1,0 --out json");
  CHECK(r.status == 0);
  auto j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["checks"].size() == 1);
  CHECK(j["checks"][0]["params"].get<std::string>().find("shape=1,0") != std::string::npos);
}

TEST_CASE("power ideal comparison json") {
  auto r = run_cmd("power-ideal -n 3 -k 2 -s 2 --out json");
  CHECK(r.status == 0);
  auto j = json::parse(r.out);
  CHECK(j["shape"] == "1,1");
  CHECK(j["all_equal"] == true);
  CHECK(j["quotient_total"] == 6);
  CHECK(j["osp_count"] == 6);
  CHECK(j["degrees"].size() == 4);  // degrees 0..n(s-1)
  for (const auto& row : j["degrees"]) CHECK(row["equal"] == true);
}

TEST_CASE("output lands in a file when requested") {
  const std::string path = "/tmp/coinv_cli_test_out.csv";
  std::remove(path.c_str());
  auto r = run_cmd("enumerate -n 2 --shape 1,0 --out csv --output " + path);
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream body;
  body << in.rdbuf();
  CHECK(body.str() ==
        "blocks,code,maxcode,coinv\n"
        "\"1,2|\",\"0,0\",\"0,1\",0\n"
        "1|2,\"0,1\",\"0,1\",1\n"
        "2|1,\"1,0\",\"1,0\",1\n");
  std::remove(path.c_str());
}
