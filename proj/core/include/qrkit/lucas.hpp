#pragma once

#include <cstdint>

namespace qrkit {

struct LucasPair {
  uint64_t u = 0;
  uint64_t v = 2;
  friend bool operator==(const LucasPair&, const LucasPair&) = default;
};

// (U_n, V_n) mod p for the sequences with U_0=0, U_1=1, V_0=2, V_1=P and
// X_{n+1} = P X_n - Q X_{n-1}; logarithmic index doubling.
LucasPair lucas_uv(uint64_t n, uint64_t P, uint64_t Q, uint64_t p);

// same values by direct linear iteration; oracle for lucas_uv.
// raises NaiveBoundExceeded when n > max_n.
LucasPair lucas_uv_naive(uint64_t n, uint64_t P, uint64_t Q, uint64_t p,
                         uint64_t max_n = 1000000);

}  // namespace qrkit
