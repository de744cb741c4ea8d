#include "qrkit/binom_sums.hpp"

#include "qrkit/errors.hpp"
#include "qrkit/modular.hpp"

namespace qrkit {

SumEvaluator::SumEvaluator(uint64_t p) : p_(p) { require_odd_prime(p); }

void SumEvaluator::ensure_steps() {
  if (!main_steps_.empty()) return;
  uint64_t mk = p_ / 4;        // last Main index
  uint64_t ck = (p_ + 1) / 4;  // last Center index
  // denominators first, inverted in one batch
  std::vector<uint64_t> den(mk + ck, 1);
  for (uint64_t k = 1; k <= mk; ++k) {
    uint64_t d = mul_mod(2 * k - 1, 2 * k, p_);
    den[k - 1] = mul_mod(d, d, p_);
  }
  for (uint64_t k = 2; k <= ck; ++k) {
    uint64_t d = mul_mod(2 * k - 2, 2 * k - 1, p_);
    den[mk + k - 2] = mul_mod(d, d, p_);
  }
  batch_inverse(den, p_);
  main_steps_.assign(mk + 1, 1);
  center_steps_.assign(ck + 1, 1);
  // in-window numerator factors stay below p: 4k <= p-1 for Main,
  // 4k-2 <= p-1 for Center, so no factor vanishes mod p
  for (uint64_t k = 1; k <= mk; ++k) {
    uint64_t num = mul_mod(mul_mod(4 * k - 3, 4 * k - 2, p_),
                           mul_mod(4 * k - 1, 4 * k, p_), p_);
    main_steps_[k] = mul_mod(num, den[k - 1], p_);
  }
  for (uint64_t k = 2; k <= ck; ++k) {
    uint64_t num = mul_mod(mul_mod(4 * k - 5, 4 * k - 4, p_),
                           mul_mod(4 * k - 3, 4 * k - 2, p_), p_);
    center_steps_[k] = mul_mod(num, den[mk + k - 2], p_);
  }
}

void SumEvaluator::ensure_tables() {
  if (!fact_.empty()) return;
  if (p_ > (1ull << 31))
    raise("ModulusTooLarge",
          "factorial tables need O(p) memory; p=" + std::to_string(p_) +
              " exceeds 2^31");
  fact_.resize(p_);
  inv_fact_.resize(p_);
  fact_[0] = 1;
  for (uint64_t i = 1; i < p_; ++i) fact_[i] = mul_mod(fact_[i - 1], i, p_);
  inv_fact_[p_ - 1] = inv_mod(fact_[p_ - 1], p_);
  for (uint64_t i = p_ - 1; i > 0; --i)
    inv_fact_[i - 1] = mul_mod(inv_fact_[i], i, p_);
}

uint64_t SumEvaluator::binom(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  ensure_tables();
  uint64_t r = 1;
  while (n > 0 || k > 0) {
    uint64_t ni = n % p_, ki = k % p_;
    if (ki > ni) return 0;
    r = mul_mod(r, mul_mod(fact_[ni], mul_mod(inv_fact_[ki],
                                              inv_fact_[ni - ki], p_), p_),
                p_);
    n /= p_;
    k /= p_;
  }
  return r;
}

uint64_t SumEvaluator::sum(SumKind kind, uint64_t x) {
  x %= p_;
  switch (kind) {
    case SumKind::Main: {
      ensure_steps();
      uint64_t mk = p_ / 4;
      uint64_t term = 1, acc = 1;
      for (uint64_t k = 1; k <= mk; ++k) {
        term = mul_mod(term, mul_mod(main_steps_[k], x, p_), p_);
        acc = add_mod(acc, term, p_);
      }
      return acc;
    }
    case SumKind::Center: {
      ensure_steps();
      uint64_t ck = (p_ + 1) / 4;
      uint64_t term = mul_mod(2 % p_, x, p_);  // k = 1
      uint64_t acc = term;
      for (uint64_t k = 2; k <= ck; ++k) {
        term = mul_mod(term, mul_mod(center_steps_[k], x, p_), p_);
        acc = add_mod(acc, term, p_);
      }
      return acc;
    }
    case SumKind::Upper: {
      ensure_tables();
      // window k in [(p+1)/2, floor(3p/4)]: 4k has base-p digits (2, 4k-2p)
      // and 2k has (1, 2k-p), so C(4k,2k) = 2*C(2m,m) with m = 2k-p
      uint64_t lo = (p_ + 1) / 2, hi = 3 * p_ / 4;
      uint64_t xk = pow_mod(x, lo, p_);
      uint64_t acc = 0;
      for (uint64_t k = lo; k <= hi; ++k) {
        uint64_t m = 2 * k - p_;
        uint64_t c = mul_mod(fact_[2 * m],
                             mul_mod(inv_fact_[m], inv_fact_[m], p_), p_);
        acc = add_mod(acc, mul_mod(mul_mod(2 % p_, c, p_), xk, p_), p_);
        xk = mul_mod(xk, x, p_);
      }
      return acc;
    }
  }
  return 0;  // unreachable: the switch covers every SumKind
}

uint64_t SumEvaluator::sum_tables(SumKind kind, uint64_t x) {
  x %= p_;
  uint64_t lo = 0, hi = 0;
  switch (kind) {
    case SumKind::Main:
      lo = 0;
      hi = p_ / 4;
      break;
    case SumKind::Upper:
      lo = (p_ + 1) / 2;
      hi = 3 * p_ / 4;
      break;
    case SumKind::Center:
      lo = 1;
      hi = (p_ + 1) / 4;
      break;
  }
  uint64_t acc = 0;
  uint64_t xk = pow_mod(x, lo, p_);
  for (uint64_t k = lo; k <= hi; ++k) {
    uint64_t c = kind == SumKind::Center ? binom(4 * k - 2, 2 * k - 1)
                                         : binom(4 * k, 2 * k);
    acc = add_mod(acc, mul_mod(c, xk, p_), p_);
    xk = mul_mod(xk, x, p_);
  }
  return acc;
}

uint64_t sum_eval(SumKind kind, uint64_t x, uint64_t p) {
  SumEvaluator ev(p);
  return ev.sum(kind, x);
}

}  // namespace qrkit
