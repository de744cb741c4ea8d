#pragma once

#include <cstdint>
#include <vector>

namespace qrkit {

// Residues are canonical representatives in [0, p). Moduli are odd primes
// fitting a 64-bit word; products go through a 128-bit intermediate.

inline uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<__uint128_t>(a) * b % p);
}

inline uint64_t add_mod(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;  // a, b < p < 2^63, no wrap
  return s >= p ? s - p : s;
}

inline uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline uint64_t neg_mod(uint64_t a, uint64_t p) { return a ? p - a : 0; }

// canonical residue of a signed value
inline uint64_t mod_i64(int64_t x, uint64_t p) {
  int64_t m = x % static_cast<int64_t>(p);
  return static_cast<uint64_t>(m < 0 ? m + static_cast<int64_t>(p) : m);
}

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t p);

// multiplicative inverse mod prime p; raises ZeroInverse on a ≡ 0
uint64_t inv_mod(uint64_t a, uint64_t p);

// in-place inversion of a batch of nonzero residues with a single inv_mod
void batch_inverse(std::vector<uint64_t>& v, uint64_t p);

// Legendre symbol via the Euler criterion: -1, 0 or 1
int legendre(uint64_t a, uint64_t p);

// square root mod odd prime (Tonelli-Shanks); returns the smaller of the two
// roots; raises NonResidue when no root exists
uint64_t sqrt_mod(uint64_t a, uint64_t p);

std::vector<uint64_t> prime_sieve(uint64_t bound);

// deterministic Miller-Rabin, valid for all 64-bit n
bool is_prime(uint64_t n);

// raises NotOddPrime unless p is an odd prime
void require_odd_prime(uint64_t p);

uint64_t isqrt_u64(uint64_t n);

// exact rational, reduced mod p on demand
struct Rational {
  int64_t num = 0;
  int64_t den = 1;
};

// num * den^-1 mod p; raises DenominatorDivisible when p | den
uint64_t reduce_rational(const Rational& r, uint64_t p);

}  // namespace qrkit
