#include "qrkit/two_squares.hpp"

#include <string>

#include "qrkit/errors.hpp"
#include "qrkit/modular.hpp"

namespace qrkit {

TwoSquares decompose(uint64_t q) {
  if (!is_prime(q) || q % 4 != 1)
    raise("BadResidueClass",
          "need a prime q = 1 (mod 4), got " + std::to_string(q));
  uint64_t bound = isqrt_u64(q);
  // Euclid on (q, sqrt(-1)): the first remainder <= sqrt(q) is a leg
  uint64_t r0 = q, r1 = sqrt_mod(q - 1, q);
  while (r1 > bound) {
    uint64_t r2 = r0 % r1;
    r0 = r1;
    r1 = r2;
  }
  uint64_t x = r1;
  uint64_t y = isqrt_u64(q - x * x);
  TwoSquares t;
  t.q = q;
  t.a = static_cast<int64_t>(x % 2 == 1 ? x : y);
  t.b = static_cast<int64_t>(x % 2 == 1 ? y : x);
  return t;
}

std::pair<int64_t, int64_t> primary_signs(const TwoSquares& t) {
  int64_t a = t.a, b = t.b;
  if ((a + b) % 4 != 1 && (a + b) % 4 != -3) a = -a;
  return {a, b};
}

PowerClass power_class(uint64_t p, const TwoSquares& t) {
  uint64_t q = t.q;
  uint64_t ab = mul_mod(static_cast<uint64_t>(t.a) % q,
                        inv_mod(static_cast<uint64_t>(t.b) % q, q), q);
  uint64_t w = pow_mod(p % q, (q - 1) / 4, q);
  if (w == 1) return PowerClass::PlusOne;
  if (w == q - 1) return PowerClass::MinusOne;
  if (w == ab) return PowerClass::PlusAB;
  if (w == q - ab) return PowerClass::MinusAB;
  raise("NoClassMatch", "p^((q-1)/4) is not a fourth root of unity mod " +
                            std::to_string(q) + " for p=" + std::to_string(p));
}

}  // namespace qrkit
