#include "qrkit/lucas.hpp"

#include "qrkit/errors.hpp"
#include "qrkit/modular.hpp"

namespace qrkit {

LucasPair lucas_uv(uint64_t n, uint64_t P, uint64_t Q, uint64_t p) {
  require_odd_prime(p);
  P %= p;
  Q %= p;
  if (n == 0) return {0, 2 % p};
  uint64_t D = sub_mod(mul_mod(P, P, p), mul_mod(4 % p, Q, p), p);
  uint64_t half = inv_mod(2 % p, p);
  // walk the bits of n MSB-first, keeping (U_k, V_k, Q^k)
  uint64_t u = 0, v = 2 % p, qk = 1;
  int bit = 63;
  while (!((n >> bit) & 1)) --bit;
  for (; bit >= 0; --bit) {
    // k -> 2k
    u = mul_mod(u, v, p);
    v = sub_mod(mul_mod(v, v, p), mul_mod(2 % p, qk, p), p);
    qk = mul_mod(qk, qk, p);
    if ((n >> bit) & 1) {
      // 2k -> 2k+1
      uint64_t nu = mul_mod(add_mod(mul_mod(P, u, p), v, p), half, p);
      uint64_t nv =
          mul_mod(add_mod(mul_mod(D, u, p), mul_mod(P, v, p), p), half, p);
      u = nu;
      v = nv;
      qk = mul_mod(qk, Q, p);
    }
  }
  return {u, v};
}

LucasPair lucas_uv_naive(uint64_t n, uint64_t P, uint64_t Q, uint64_t p,
                         uint64_t max_n) {
  require_odd_prime(p);
  if (n > max_n)
    raise("NaiveBoundExceeded",
          "index " + std::to_string(n) + " exceeds naive bound " +
              std::to_string(max_n));
  P %= p;
  Q %= p;
  uint64_t u0 = 0, u1 = 1 % p, v0 = 2 % p, v1 = P;
  if (n == 0) return {u0, v0};
  for (uint64_t k = 1; k < n; ++k) {
    uint64_t u2 = sub_mod(mul_mod(P, u1, p), mul_mod(Q, u0, p), p);
    uint64_t v2 = sub_mod(mul_mod(P, v1, p), mul_mod(Q, v0, p), p);
    u0 = u1;
    u1 = u2;
    v0 = v1;
    v1 = v2;
  }
  return {u1, v1};
}

}  // namespace qrkit
