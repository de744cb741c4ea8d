// shipping gate: eleven criteria, one PASS/FAIL line each, nonzero exit on
// any failure
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qrkit/binom_sums.hpp"
#include "qrkit/gaussian.hpp"
#include "qrkit/lucas.hpp"
#include "qrkit/modular.hpp"
#include "qrkit/quadratic_forms.hpp"
#include "qrkit/two_squares.hpp"
#include "qrkit/verifier.hpp"

using namespace qrkit;

namespace {

bool all_ok = true;

void report(int idx, bool ok, const std::string& what) {
  std::printf("%s %2d: %s\n", ok ? "PASS" : "FAIL", idx, what.c_str());
  if (!ok) all_ok = false;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct CliRun {
  std::string out;
  int code = -1;
};

CliRun run_cli(const std::string& args) {
  CliRun r;
  std::string cmd = std::string(QRKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[8192];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int st = pclose(pipe);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::vector<uint64_t> odd_primes(uint64_t bound) {
  std::vector<uint64_t> ps = prime_sieve(bound);
  ps.erase(ps.begin());  // drop 2
  return ps;
}

void criterion_1() {
  uint64_t bad = 0, n = 0;
  for (uint64_t p : odd_primes(10000)) {
    int64_t e = (p % 4 == 1) ? int64_t((p - 1) / 4) : -int64_t((p + 1) / 4);
    int want = int(((e % 4) + 4) % 4);
    if (quartic_jacobi({1, 1}, p).r != want) ++bad;
    ++n;
  }
  report(1, bad == 0,
         "symbol of 1+i equals its closed form for all " + std::to_string(n) +
             " odd primes < 10^4 (" + std::to_string(bad) + " mismatches)");
}

void criterion_2() {
  std::mt19937_64 rng(1001);
  std::vector<uint64_t> ps = odd_primes(10000);
  uint64_t bad = 0;
  for (int i = 0; i < 1000; ++i) {
    uint64_t p = ps[rng() % ps.size()];
    uint64_t m, n, norm;
    do {
      m = rng() % p;
      n = rng() % p;
      norm = add_mod(mul_mod(m, m, p), mul_mod(n, n, p), p);
    } while (norm == 0);
    int r = quartic_jacobi({int64_t(m), int64_t(n)}, p).r;
    if (((r % 2) == 0) != (legendre(norm, p) == 1)) ++bad;
  }
  report(2, bad == 0,
         "symbol squared equals the Legendre symbol of the norm on 1000 "
         "random triples (" +
             std::to_string(bad) + " mismatches)");
}

void criterion_3() {
  std::mt19937_64 rng(1002);
  std::vector<uint64_t> ps = odd_primes(10000);
  uint64_t bad = 0;
  for (int i = 0; i < 1000; ++i) {
    uint64_t p = ps[rng() % ps.size()];
    auto draw = [&]() {
      while (true) {
        uint64_t m = rng() % p, n = rng() % p;
        if (add_mod(mul_mod(m, m, p), mul_mod(n, n, p), p) != 0)
          return Gaussian{int64_t(m), int64_t(n)};
      }
    };
    Gaussian z1 = draw(), z2 = draw();
    if (!(quartic_jacobi(gmul(z1, z2), p) ==
          quartic_jacobi(z1, p) * quartic_jacobi(z2, p)))
      ++bad;
    int ri = quartic_jacobi({0, 1}, p).r;
    if ((legendre(2 % p, p) == 1) != (ri == 0)) ++bad;
  }
  report(3, bad == 0,
         "multiplicativity and the symbol of i vs (2|p) on 1000 random cases (" +
             std::to_string(bad) + " mismatches)");
}

void criterion_4() {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport a = verify(TheoremId::T2_1a, 2000, 50);
  VerificationReport b = verify(TheoremId::T2_1b, 2000, 50);
  double secs = seconds_since(t0);
  bool anchors = quartic_class(1, 5) == 1 &&
                 sum_eval(SumKind::Main, reduce_rational({1, 32}, 5), 5) == 4;
  bool ok = a.counterexamples.empty() && b.counterexamples.empty() &&
            anchors && secs < 60.0;
  std::ostringstream os;
  os << "main-sum case tables over primes to 2000, c to 50: "
     << a.cases_checked + b.cases_checked << " cases, "
     << a.counterexamples.size() + b.counterexamples.size()
     << " counterexamples, " << secs << " s";
  report(4, ok, os.str());
}

void criterion_5() {
  TheoremId ids[] = {TheoremId::C2_3, TheoremId::C2_6, TheoremId::C2_7,
                     TheoremId::C2_8, TheoremId::C2_9, TheoremId::C2_11,
                     TheoremId::C3_4, TheoremId::C3_7};
  uint64_t cex = 0, cases = 0;
  for (TheoremId id : ids) {
    VerificationReport rep = verify(id, 10000, 25);
    cex += rep.counterexamples.size();
    cases += rep.cases_checked;
  }
  SumEvaluator ev7(7);
  bool anchors =
      ev7.sum(SumKind::Main, reduce_rational({1, 18}, 7)) == 7 - 1 &&
      power_class(7, decompose(5)) == PowerClass::MinusAB &&
      neg_mod(ev7.sum(SumKind::Main, reduce_rational({1, 80}, 7)), 7) ==
          inv_mod(2, 7);
  report(5, cex == 0 && anchors,
         "fixed-modulus case tables over primes to 10^4: " +
             std::to_string(cases) + " cases, " + std::to_string(cex) +
             " counterexamples");
}

void criterion_6() {
  uint64_t cex = 0, cases = 0;
  for (TheoremId id : {TheoremId::EQ2_8, TheoremId::EQ2_9, TheoremId::EQ2_10}) {
    VerificationReport rep = verify(id, 10000, 25);
    cex += rep.counterexamples.size();
    cases += rep.cases_checked;
  }
  auto w = represents({1, 0, 32}, 41);
  bool anchor = w.has_value() && w->first == 3 && w->second == 1 &&
                sum_eval(SumKind::Main, reduce_rational({-1, 16}, 41), 41) == 1;
  std::string witness =
      w.has_value() ? "witness 41 = " + std::to_string(w->first) + "^2 + 32*" +
                          std::to_string(w->second) + "^2"
                    : "no witness for 41";
  report(6, cex == 0 && anchor,
         "form representation vs vanishing tails over primes to 10^4: " +
             std::to_string(cases) + " cases, " + std::to_string(cex) +
             " counterexamples; " + witness);
}

void criterion_7() {
  bool ok =
      reduced_forms(-128) ==
          std::vector<Form>{{1, 0, 32}, {3, -2, 11}, {3, 2, 11}, {4, 4, 9}} &&
      reduced_forms(-80) ==
          std::vector<Form>{{1, 0, 20}, {3, -2, 7}, {3, 2, 7}, {4, 0, 5}} &&
      reduced_forms(-768) == std::vector<Form>{{1, 0, 192},
                                               {3, 0, 64},
                                               {4, 4, 49},
                                               {7, -4, 28},
                                               {7, 4, 28},
                                               {12, 12, 19},
                                               {13, -8, 16},
                                               {13, 8, 16}};
  report(7, ok, "reduced-form class lists for discriminants -128, -768, -80");
}

void criterion_8() {
  std::mt19937_64 rng(1003);
  std::vector<uint64_t> ps = odd_primes(10000);
  uint64_t bad = 0;
  for (int i = 0; i < 500; ++i) {
    uint64_t p = ps[rng() % ps.size()];
    uint64_t n = rng() % 10001, P = rng() % p, Q = rng() % p;
    LucasPair fast = lucas_uv(n, P, Q, p);
    if (!(fast == lucas_uv_naive(n, P, Q, p))) ++bad;
    uint64_t d = sub_mod(mul_mod(P, P, p), mul_mod(4 % p, Q, p), p);
    uint64_t lhs = sub_mod(mul_mod(fast.v, fast.v, p),
                           mul_mod(d, mul_mod(fast.u, fast.u, p), p), p);
    if (lhs != mul_mod(4 % p, pow_mod(Q, n, p), p)) ++bad;
  }
  uint64_t bridge_bad = 0;
  for (int i = 0; i < 200; ++i) {
    uint64_t p = ps[rng() % ps.size()];
    uint64_t P = 1 + rng() % (p - 1), Q = 1 + rng() % (p - 1);
    SumEvaluator ev(p);
    uint64_t x = mul_mod(Q, inv_mod(mul_mod(4 % p, mul_mod(P, P, p), p), p), p);
    uint64_t main_sum = ev.sum(SumKind::Main, x);
    uint64_t r1 = mul_mod(legendre(P, p) == 1 ? 1 : p - 1,
                          lucas_uv((p + 1) / 2, P, Q, p).u, p);
    if (main_sum != r1) ++bridge_bad;
    uint64_t x2 =
        mul_mod(mul_mod(P, P, p), inv_mod(mul_mod(64 % p, Q, p), p), p);
    uint64_t idx = (p % 4 == 1) ? (p + 1) / 2 : (p - 1) / 2;
    uint64_t scale = inv_mod(pow_mod(neg_mod(Q, p), p / 4, p), p);
    if (ev.sum(SumKind::Main, x2) !=
        mul_mod(scale, lucas_uv(idx, P, Q, p).u, p))
      ++bridge_bad;
    uint64_t q2 = mul_mod(sub_mod(mul_mod(P, P, p), mul_mod(4 % p, Q, p), p),
                          inv_mod(4 % p, p), p);
    uint64_t sgn = legendre(mul_mod(2 % p, P, p), p) == 1 ? 1 : p - 1;
    if (lucas_uv((p - 1) / 2, P, q2, p).v !=
        mul_mod(mul_mod(2 % p, sgn, p), main_sum, p))
      ++bridge_bad;
  }
  report(8, bad == 0 && bridge_bad == 0,
         "Lucas doubling vs naive plus invariant on 500 cases, window-sum "
         "bridges on 200 cases (" +
             std::to_string(bad + bridge_bad) + " mismatches)");
}

void criterion_9() {
  SweepOptions exh;
  exh.prime_bound = 500;
  exh.exhaustive = true;
  uint64_t cex = verify(TheoremId::L3_1, exh).counterexamples.size();
  uint64_t cases = 0;
  for (TheoremId id : {TheoremId::T3_1, TheoremId::C3_1, TheoremId::C3_2,
                       TheoremId::C3_3}) {
    VerificationReport rep = verify(id, 2000, 50);
    cex += rep.counterexamples.size();
    cases += rep.cases_checked;
  }
  for (TheoremId id : {TheoremId::C3_5, TheoremId::C3_6}) {
    VerificationReport rep = verify(id, 10000, 17);
    cex += rep.counterexamples.size();
    cases += rep.cases_checked;
  }
  bool anchor = mul_mod(2, sum_eval(SumKind::Upper,
                                    reduce_rational({1, 32}, 3), 3), 3) == 2;
  report(9, cex == 0 && anchor,
         "window-sum suite (pointwise congruence, case tables, center-sum "
         "biconditionals): " +
             std::to_string(cases) + " cases, " + std::to_string(cex) +
             " counterexamples");
}

void criterion_10() {
  uint64_t bad = 0;
  for (uint64_t q : prime_sieve(10000)) {
    if (q % 4 != 1) continue;
    TwoSquares d = decompose(q);
    int64_t ea = 0, eb = 0;
    for (int64_t a = 1; uint64_t(a) * a <= q; a += 2) {
      uint64_t rest = q - uint64_t(a) * a;
      uint64_t b = isqrt_u64(rest);
      if (b * b == rest) {
        ea = a;
        eb = int64_t(b);
        break;
      }
    }
    if (d.a != ea || d.b != eb) ++bad;
    uint64_t ab = mul_mod(uint64_t(d.a), inv_mod(uint64_t(d.b), q), q);
    if (mul_mod(ab, ab, q) != q - 1) ++bad;
  }
  uint64_t rt_bad = 0, rt_cases = 0;
  for (uint64_t p : odd_primes(500)) {
    for (uint64_t q : prime_sieve(200)) {
      if (q % 4 != 1 || q == p) continue;
      auto [sa, sb] = primary_signs(decompose(q));
      if (mod_i64(sb, p) == 0) continue;
      uint64_t u = mul_mod(mod_i64(-sa, q), inv_mod(mod_i64(sb, q), q), q);
      uint64_t base = ((p - 1) / 2) % 2 == 0 ? p % q : q - p % q;
      uint64_t t = pow_mod(base, (q - 1) / 4, q);
      int lhs_r = t == 1 ? 0 : t == u ? 1 : t == q - 1 ? 2 : 3;
      ++rt_cases;
      if (lhs_r != quartic_class(Rational{sa, sb}, p)) ++rt_bad;
    }
  }
  report(10, bad == 0 && rt_bad == 0,
         "two-square decompositions vs exhaustive search below 10^4 and " +
             std::to_string(rt_cases) + " fourth-root round-trips (" +
             std::to_string(bad + rt_bad) + " mismatches)");
}

void criterion_11() {
  auto t0 = std::chrono::steady_clock::now();
  CliRun r1 = run_cli("verify-all --pmax 2000 --cmax 25 --format json");
  double s1 = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  CliRun r2 = run_cli("verify-all --pmax 2000 --cmax 25 --format json");
  double s2 = seconds_since(t0);
  bool ok = r1.code == 0 && r2.code == 0 && s1 < 300.0 && s2 < 300.0;
  uint64_t cex = 0;
  std::string note;
  try {
    nlohmann::ordered_json j1 = nlohmann::ordered_json::parse(r1.out);
    nlohmann::ordered_json j2 = nlohmann::ordered_json::parse(r2.out);
    if (j1.size() != size_t(kTheoremCount)) ok = false;
    for (auto& rep : j1) cex += rep["counterexamples"].size();
    for (auto& rep : j1) rep["elapsed_ms"] = 0;
    for (auto& rep : j2) rep["elapsed_ms"] = 0;
    if (j1 != j2) {
      ok = false;
      note = "; runs differ";
    }
  } catch (...) {
    ok = false;
    note = "; unparsable output";
  }
  if (cex != 0) ok = false;
  std::ostringstream os;
  os << "full sweep twice through the command line: " << cex
     << " counterexamples, exits " << r1.code << "/" << r2.code << ", " << s1
     << " s and " << s2 << " s" << note;
  report(11, ok, os.str());
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  std::printf("%s\n", all_ok ? "ALL CRITERIA PASSED" : "CRITERIA FAILED");
  return all_ok ? 0 : 1;
}
