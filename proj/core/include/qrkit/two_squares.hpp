#pragma once

#include <cstdint>
#include <utility>

namespace qrkit {

// q = a^2 + b^2 for a prime q = 1 (mod 4), normalized to a odd > 0, b even > 0
struct TwoSquares {
  uint64_t q = 0;
  int64_t a = 0;
  int64_t b = 0;
  friend bool operator==(const TwoSquares&, const TwoSquares&) = default;
};

// Cornacchia on (q, sqrt(-1 mod q)); raises BadResidueClass unless q is a
// prime = 1 (mod 4)
TwoSquares decompose(uint64_t q);

// flip the sign of a so that a + b = 1 (mod 4), keeping b positive even
std::pair<int64_t, int64_t> primary_signs(const TwoSquares& t);

// which fourth root of unity p^((q-1)/4) lands on mod q, named against the
// roots {1, -1, a/b, -a/b}; (a/b)^2 = -1 mod q makes these exhaustive
enum class PowerClass { PlusOne, MinusOne, PlusAB, MinusAB };

PowerClass power_class(uint64_t p, const TwoSquares& t);

}  // namespace qrkit
