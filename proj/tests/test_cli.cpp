#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "qrkit/errors.hpp"
#include "qrkit/text.hpp"

using namespace qrkit;

namespace {

struct RunResult {
  std::string out;
  int code = -1;
};

// runs the installed binary through the shell; stderr folded in unless told not to
RunResult run_cli(const std::string& args, bool merge_stderr = true) {
  std::string cmd = std::string(QRKIT_CLI_PATH) + " " + args +
                    (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult r;
  if (pipe == nullptr) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int st = pclose(pipe);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace

TEST_CASE("spot computation verbs") {
  RunResult r = run_cli("symbol --p 17 --z 1+1i");
  CHECK(r.code == 0);
  CHECK(r.out == "i^0 (=1)\n");
  r = run_cli("twosquares --q 13");
  CHECK(r.code == 0);
  CHECK(r.out == "a=3 b=2; lemma24: a=3 b=2\n");
  r = run_cli("twosquares --q 5");
  CHECK(r.out == "a=1 b=2; lemma24: a=-1 b=2\n");
  r = run_cli("sum --p 7 --x 1/18 --kind main");
  CHECK(r.code == 0);
  CHECK(r.out == "6\n");
  r = run_cli("classify --p 5 --c 1");
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  r = run_cli("lucas --p 101 --P-val 1 --Q-val 100 --n 5");
  CHECK(r.code == 0);
  CHECK(r.out == "U=5 V=11\n");
  r = run_cli("forms --disc -128");
  CHECK(r.code == 0);
  CHECK(r.out == "[1,0,32]\n[3,-2,11]\n[3,2,11]\n[4,4,9]\n");
  r = run_cli("symbol --p 13 --z 2-5i");
  CHECK(r.code == 0);
  CHECK(r.out.substr(0, 2) == "i^");
}

TEST_CASE("verify verb emits stable json that round-trips") {
  RunResult r = run_cli("verify --theorem C2_3 --pmax 200 --format json", false);
  CHECK(r.code == 0);
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["theorem"] == "C2_3");
  CHECK(j["prime_bound"] == 200);
  CHECK(j["param_bound"] == 25);
  CHECK(j["counterexamples"].is_array());
  CHECK(j["counterexamples"].empty());
  CHECK(j["cases_checked"].is_number_unsigned());
  CHECK(j["cases_skipped"].is_number_unsigned());
  CHECK(j["elapsed_ms"].is_number_unsigned());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"theorem", "prime_bound",
                                         "param_bound", "cases_checked",
                                         "cases_skipped", "counterexamples",
                                         "elapsed_ms"});
  CHECK(j.dump(2) + "\n" == r.out);  // byte-identical re-serialization
}

TEST_CASE("verify-all csv mirrors the json fields") {
  RunResult r = run_cli("verify-all --pmax 50 --cmax 5 --format csv", false);
  CHECK(r.code == 0);
  size_t nl = r.out.find('\n');
  CHECK(r.out.substr(0, nl) ==
        "theorem,prime_bound,param_bound,cases_checked,cases_skipped,"
        "counterexamples,elapsed_ms");
  int lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 31);  // header + one row per check
  CHECK(r.out.find("T2_1a,50,5,") != std::string::npos);
  CHECK(r.out.find("EQ1_3,50,5,") != std::string::npos);
}

TEST_CASE("environment default for the sweep bound") {
  std::string cmd = std::string("QRK_PMAX_DEFAULT=150 ") + QRKIT_CLI_PATH +
                    " verify --theorem C2_3 --format json 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(out);
  CHECK(j["prime_bound"] == 150);
}

TEST_CASE("exit codes: usage 2, domain error 2, counterexample-free 0") {
  CHECK(run_cli("bogus").code == 2);
  CHECK(run_cli("sum --p 7").code == 2);           // missing --x
  CHECK(run_cli("sum --p 7 --x 1 --kind wrong").code == 2);
  RunResult r = run_cli("verify --theorem T9_9 --pmax 50");
  CHECK(r.code == 2);
  CHECK(r.out.find("error: UnknownTheorem") != std::string::npos);
  r = run_cli("sum --p 7 --x 1/7 --kind main");
  CHECK(r.code == 2);
  CHECK(r.out.find("error: DenominatorDivisible") != std::string::npos);
  r = run_cli("symbol --p 15 --z 1+1i");
  CHECK(r.code == 2);
  CHECK(r.out.find("error: NotOddPrime") != std::string::npos);
  r = run_cli("twosquares --q 7");
  CHECK(r.code == 2);
  CHECK(r.out.find("error: BadResidueClass") != std::string::npos);
  r = run_cli("forms --disc -6");
  CHECK(r.code == 2);
  CHECK(r.out.find("error: BadDiscriminant") != std::string::npos);
  r = run_cli("symbol --p 5 --z 2+1i");
  CHECK(r.code == 2);
  CHECK(r.out.find("error: NormDivisible") != std::string::npos);
  r = run_cli("symbol --p 7 --z whatever");
  CHECK(r.code == 2);
  CHECK(r.out.find("error: ParseError") != std::string::npos);
  CHECK(run_cli("verify --theorem T2_1a --pmax 100 --cmax 10").code == 0);
  CHECK(run_cli("--help").code == 0);
}

TEST_CASE("gaussian text parsing") {
  CHECK(parse_gaussian("3+4i") == Gaussian{3, 4});
  CHECK(parse_gaussian("3-4i") == Gaussian{3, -4});
  CHECK(parse_gaussian("7") == Gaussian{7, 0});
  CHECK(parse_gaussian("-7") == Gaussian{-7, 0});
  CHECK(parse_gaussian("5i") == Gaussian{0, 5});
  CHECK(parse_gaussian("-5i") == Gaussian{0, -5});
  CHECK(parse_gaussian("i") == Gaussian{0, 1});
  CHECK(parse_gaussian("-i") == Gaussian{0, -1});
  CHECK(parse_gaussian("1+1i") == Gaussian{1, 1});
  CHECK(parse_gaussian("2+i") == Gaussian{2, 1});
  CHECK(parse_gaussian("2-i") == Gaussian{2, -1});
  CHECK(parse_gaussian(" 12 - 34 i ") == Gaussian{12, -34});
  for (const char* bad : {"", "2+", "ii", "3.5", "1+2j", "2 3i"}) {
    CHECK_THROWS_AS(parse_gaussian(bad), DomainError);
  }
}

TEST_CASE("rational text parsing") {
  CHECK(parse_rational("5").num == 5);
  CHECK(parse_rational("5").den == 1);
  CHECK(parse_rational("3/4").num == 3);
  CHECK(parse_rational("3/4").den == 4);
  CHECK(parse_rational("-3/4").num == -3);
  CHECK(parse_rational(" 10 / 21 ").den == 21);
  for (const char* bad : {"", "x", "3/0", "1/2/3", "2."}) {
    CHECK_THROWS_AS(parse_rational(bad), DomainError);
  }
}

TEST_CASE("formatting helpers") {
  CHECK(gaussian_str({3, -4}) == "3-4i");
  CHECK(gaussian_str({0, 1}) == "i");
  CHECK(quartic_str({0}) == "i^0 (=1)");
  CHECK(quartic_str({1}) == "i^1 (=i)");
  CHECK(quartic_str({2}) == "i^2 (=-1)");
  CHECK(quartic_str({3}) == "i^3 (=-i)");
  CHECK(rational_str({3, 4}) == "3/4");
  CHECK(rational_str({5, 1}) == "5");
  CHECK(form_str({1, 0, 32}) == "[1,0,32]");
  CHECK(form_str({3, -2, 11}) == "[3,-2,11]");
}
