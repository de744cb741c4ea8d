#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qrkit {

// identifiers for the congruence checks the sweep engine knows how to run
enum class TheoremId {
  T2_1a,
  T2_1b,
  C2_1,
  C2_2,
  C2_3,
  C2_4,
  R2_1,
  EQ2_8,
  EQ2_9,
  EQ2_10,
  T2_2,
  C2_6,
  C2_7,
  C2_8,
  T2_3,
  C2_9,
  T2_4,
  C2_10,
  C2_11,
  L3_1,
  L3_2,
  T3_1,
  C3_1,
  C3_2,
  C3_3,
  C3_4,
  C3_5,
  C3_6,
  C3_7,
  EQ1_3,
};

inline constexpr int kTheoremCount = 30;

const char* theorem_name(TheoremId id);
TheoremId theorem_from_name(std::string_view name);  // raises UnknownTheorem
std::vector<TheoremId> all_theorems();

struct Counterexample {
  uint64_t p = 0;
  std::string params;
  uint64_t expected = 0;
  uint64_t got = 0;
};

struct SweepOptions {
  uint64_t prime_bound = 1000;
  uint64_t param_bound = 25;
  bool exhaustive = false;  // lift param_bound to its natural per-prime limit
  unsigned jobs = 1;
};

struct VerificationReport {
  TheoremId theorem = TheoremId::T2_1a;
  uint64_t prime_bound = 0;
  uint64_t param_bound = 0;
  std::string params_description;
  uint64_t cases_checked = 0;
  uint64_t cases_skipped = 0;
  std::vector<Counterexample> counterexamples;
  uint64_t elapsed_ms = 0;
};

// sweep one check over all odd primes <= opt.prime_bound.
// checked + skipped always equals the enumerated grid size; counterexamples
// are a subset of checked cases, reported in prime order.
VerificationReport verify(TheoremId id, const SweepOptions& opt);
VerificationReport verify(TheoremId id, uint64_t prime_bound,
                          uint64_t param_bound);

// every check in declaration order
std::vector<VerificationReport> verify_all(const SweepOptions& opt);

}  // namespace qrkit
