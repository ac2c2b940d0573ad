#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "discdet/cli.hpp"
#include "doctest.h"

using namespace discdet;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "discdet");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) { return slurp(std::string(DISCDET_GOLDEN_DIR) + "/" + name); }

}  // namespace

TEST_CASE("kappa table") {
  const auto r = run({"kappa", "--s-max", "3", "--p-max", "100"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("3 2 5/48 7 (2,5,1) in-B0\n") != std::string::npos);
  CHECK(r.out.find("3 2 5/48 43 (14,29,1) not-in-B\n") != std::string::npos);
  CHECK(r.out == golden("kappa_s3_p100.txt"));
  const std::string csv = "kappa_test_out.csv";
  CHECK(run({"kappa", "--s-max", "1", "--p-max", "10", "--out", csv}).code == kExitOk);
  CHECK(slurp(csv) == "s,l,kappa,p,r,e,d,b_tag\n1,1,-1/2,3,2,2,1,in-B0\n");
  std::remove(csv.c_str());
}

TEST_CASE("verify3 table and files") {
  const auto r = run({"verify3", "--min-p", "3", "--max-p", "43"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == golden("verify3_3_43.csv"));
  const auto jobs = run({"verify3", "--min-p", "3", "--max-p", "43", "--jobs", "3"});
  CHECK(jobs.out == r.out);
  const auto s = run({"verify3", "--min-p", "13", "--max-p", "13", "--survivors", "surv_test.csv", "--out", "tab_test.csv"});
  CHECK(s.code == kExitOk);
  CHECK(slurp("tab_test.csv") == "p,C1,C2,C3,C4,T1,T2,T3,T4\n13,9,2,0,0,1,0,0,0\n");
  const std::string surv = slurp("surv_test.csv");
  CHECK(surv.rfind("p,r,e,d,stage_reached\n13,", 0) == 0);
  CHECK(std::count(surv.begin(), surv.end(), '\n') == 2);
  std::remove("surv_test.csv");
  std::remove("tab_test.csv");
}

TEST_CASE("ppm output") {
  const auto none = run({"ppm", "--h", "2", "--k", "3", "--d", "7"});
  CHECK(none.code == kExitOk);
  CHECK(none.out.empty());
  const auto some = run({"ppm", "--h", "1", "--k", "1", "--d", "4"});
  CHECK(some.out == "1 2 3 4\n4 3 2 1\n");
  CHECK(run({"ppm", "--h", "1", "--k", "2", "--d", "4", "--oracle"}).out == run({"ppm", "--h", "1", "--k", "2", "--d", "4"}).out);
}

TEST_CASE("checks report PASS and summaries") {
  const auto t5 = run({"th5", "--p", "7", "--r", "3", "--e", "4", "--coeffs", "0,0,-1"});
  CHECK(t5.code == kExitOk);
  CHECK(t5.out.rfind("PASS theorem5 f=x^3 + 6\n", 0) == 0);
  CHECK(t5.out.find("FAIL") == std::string::npos);
  const auto t5r = run({"th5", "--p", "11", "--r", "2", "--e", "7", "--trials", "3", "--seed", "9"});
  CHECK(t5r.code == kExitOk);
  CHECK(t5r.out == run({"th5", "--p", "11", "--r", "2", "--e", "7", "--trials", "3", "--seed", "9"}).out);

  const auto t1 = run({"th1sym", "--max-p", "3", "--max-r", "3"});
  CHECK(t1.code == kExitOk);
  CHECK(t1.out.rfind("2 2 1 1 true 1 1\n", 0) == 0);
  CHECK(t1.out.find("false") == std::string::npos);

  const auto e1 = run({"exp1", "--p", "5", "--max-r", "3", "--trials", "2"});
  CHECK(e1.code == kExitOk);
  CHECK(e1.out.find("exp1 summary: ") != std::string::npos);
  CHECK(e1.out.find("FAIL") == std::string::npos);

  const auto e2 = run({"exp2", "--p", "5", "--r", "2", "--trials", "4", "--seed", "1"});
  CHECK(e2.code == kExitOk);
  CHECK(e2.out.find("exp2 summary: ") != std::string::npos);
  CHECK(e2.out == run({"exp2", "--p", "5", "--r", "2", "--trials", "4", "--seed", "1"}).out);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"nosuch"}).code == kExitUsage);
  CHECK(run({"verify3", "--min-p", "3"}).code == kExitUsage);
  CHECK(run({"verify3", "--min-p", "50", "--max-p", "10"}).code == kExitUsage);
  CHECK(run({"th5", "--p", "8", "--r", "3", "--e", "4"}).code == kExitUsage);
  CHECK(run({"th5", "--p", "7", "--r", "3", "--e", "3"}).code == kExitUsage);
  CHECK(run({"th5", "--p", "7", "--r", "3", "--e", "4", "--coeffs", "1,2"}).code == kExitUsage);
  CHECK(run({"th1sym", "--max-p", "11", "--max-r", "3"}).code == kExitUsage);
  CHECK(run({"exp1", "--p", "2", "--max-r", "3"}).code == kExitUsage);
  CHECK(run({"verify3", "--help"}).code == kExitOk);
}

TEST_CASE("binary exit codes") {
  const std::string bin = DISCDET_BINARY;
  CHECK(std::system((bin + " kappa --s-max 2 --p-max 20 > /dev/null").c_str()) == 0);
  const int usage = std::system((bin + " kappa > /dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(usage) == kExitUsage);
}
