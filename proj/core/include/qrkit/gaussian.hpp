#pragma once

#include <cstdint>

#include "qrkit/modular.hpp"

namespace qrkit {

struct Gaussian {
  int64_t re = 0;
  int64_t im = 0;
  friend bool operator==(const Gaussian&, const Gaussian&) = default;
};

Gaussian gmul(const Gaussian& x, const Gaussian& y);
inline Gaussian gconj(const Gaussian& z) { return {z.re, -z.im}; }
__int128 gnorm(const Gaussian& z);

// the unit i^r, r in 0..3; multiplication adds exponents mod 4
struct QuarticValue {
  int r = 0;
  friend bool operator==(const QuarticValue&, const QuarticValue&) = default;
  friend QuarticValue operator*(QuarticValue x, QuarticValue y) {
    return {(x.r + y.r) & 3};
  }
};

// quartic Jacobi symbol ((z)/p) for an odd prime p not dividing the norm of z.
//
// p ≡ 3 (mod 4): p stays prime in Z[i]; the symbol is z^((p^2-1)/4) in
// Z[i]/(p), always a power of i.
// p ≡ 1 (mod 4): p splits into conjugate Gaussian primes; the symbol is the
// product of the quartic characters mod the two factors, each evaluated in
// F_p by sending i to a root u of u^2 ≡ -1 (one factor per root).
//
// raises NormDivisible when p | norm(z)
QuarticValue quartic_jacobi(const Gaussian& z, uint64_t p);

// the unique associate of a Gaussian prime congruent to 1 mod (1+i)^3,
// i.e. with even imaginary part and re+im ≡ 1 (mod 4);
// raises NotSplitPrime unless norm(z) is an odd prime
Gaussian primary_associate(const Gaussian& z);

// index r with ((c + i)/p) = i^r; raises NormDivisible when p | c^2+1
int quartic_class(uint64_t c_residue, uint64_t p);
int quartic_class(const Rational& c, uint64_t p);

}  // namespace qrkit
