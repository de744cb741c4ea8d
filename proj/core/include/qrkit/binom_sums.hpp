#pragma once

#include <cstdint>
#include <vector>

namespace qrkit {

// the three binomial-sum families over F_p, as functions of a residue x:
//   Main:   sum_{k=0}^{floor(p/4)}       C(4k,2k)     x^k
//   Upper:  sum_{k=(p+1)/2}^{floor(3p/4)} C(4k,2k)    x^k
//   Center: sum_{k=1}^{floor((p+1)/4)}   C(4k-2,2k-1) x^k
enum class SumKind { Main, Upper, Center };

// per-prime evaluator with cached coefficient machinery.
// Main/Center walk consecutive-coefficient ratios; Upper reduces each
// C(4k,2k) by base-p digits and reads factorial tables.
class SumEvaluator {
 public:
  explicit SumEvaluator(uint64_t p);

  uint64_t prime() const { return p_; }

  uint64_t sum(SumKind kind, uint64_t x);

  // C(n,k) mod p by base-p digit reduction (factorial tables per digit)
  uint64_t binom(uint64_t n, uint64_t k);

  // the same sums recomputed termwise through binom(); slower cross-check
  uint64_t sum_tables(SumKind kind, uint64_t x);

 private:
  void ensure_steps();
  void ensure_tables();

  uint64_t p_;
  std::vector<uint64_t> main_steps_;    // C(4k,2k)/C(4k-4,2k-2) at index k
  std::vector<uint64_t> center_steps_;  // C(4k-2,2k-1)/C(4k-6,2k-3) at k
  std::vector<uint64_t> fact_, inv_fact_;
};

// one-shot evaluation (builds a throwaway evaluator)
uint64_t sum_eval(SumKind kind, uint64_t x, uint64_t p);

}  // namespace qrkit
