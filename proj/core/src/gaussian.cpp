#include "qrkit/gaussian.hpp"

#include <string>

#include "qrkit/errors.hpp"

namespace qrkit {

Gaussian gmul(const Gaussian& x, const Gaussian& y) {
  __int128 re = static_cast<__int128>(x.re) * y.re - static_cast<__int128>(x.im) * y.im;
  __int128 im = static_cast<__int128>(x.re) * y.im + static_cast<__int128>(x.im) * y.re;
  return {static_cast<int64_t>(re), static_cast<int64_t>(im)};
}

__int128 gnorm(const Gaussian& z) {
  return static_cast<__int128>(z.re) * z.re + static_cast<__int128>(z.im) * z.im;
}

namespace {

struct GRes {
  uint64_t re, im;
};

GRes gmul_mod(const GRes& x, const GRes& y, uint64_t p) {
  return {sub_mod(mul_mod(x.re, y.re, p), mul_mod(x.im, y.im, p), p),
          add_mod(mul_mod(x.re, y.im, p), mul_mod(x.im, y.re, p), p)};
}

GRes gpow_mod(GRes b, uint64_t e, uint64_t p) {
  GRes r{1, 0};
  while (e) {
    if (e & 1) r = gmul_mod(r, b, p);
    b = gmul_mod(b, b, p);
    e >>= 1;
  }
  return r;
}

// exponent k with x = u^k in F_p, where u^2 ≡ -1 and x^4 = 1
int unit_log(uint64_t x, uint64_t u, uint64_t p) {
  if (x == 1) return 0;
  if (x == u) return 1;
  if (x == p - 1) return 2;
  if (x == p - u) return 3;
  raise("NormDivisible", "value is not a fourth root of unity; composite modulus?");
}

}  // namespace

QuarticValue quartic_jacobi(const Gaussian& z, uint64_t p) {
  require_odd_prime(p);
  uint64_t re = mod_i64(z.re, p), im = mod_i64(z.im, p);
  uint64_t nrm = add_mod(mul_mod(re, re, p), mul_mod(im, im, p), p);
  if (nrm == 0)
    raise("NormDivisible", "norm of Gaussian argument divisible by " + std::to_string(p));
  if (p % 4 == 3) {
    // z^((p^2-1)/4) split as (z^((p-1)/2))^((p+1)/2) to keep exponents in 64 bits
    GRes w = gpow_mod(gpow_mod({re, im}, (p - 1) / 2, p), (p + 1) / 2, p);
    if (w.im == 0) return {w.re == 1 ? 0 : 2};
    return {w.im == 1 ? 1 : 3};
  }
  uint64_t u = sqrt_mod(p - 1, p);
  // character at one prime factor: reduce i -> u, raise to (p-1)/4, read off
  // the power of u; the conjugate factor uses the other root p-u
  uint64_t e = (p - 1) / 4;
  int k = unit_log(pow_mod(add_mod(re, mul_mod(im, u, p), p), e, p), u, p);
  uint64_t ubar = p - u;
  int l = unit_log(pow_mod(add_mod(re, mul_mod(im, ubar, p), p), e, p), ubar, p);
  return {(k + l) & 3};
}

Gaussian primary_associate(const Gaussian& z) {
  __int128 n = gnorm(z);
  if (n < 3 || (n & 1) == 0 || n > static_cast<__int128>(UINT64_MAX) ||
      !is_prime(static_cast<uint64_t>(n)))
    raise("NotSplitPrime", "norm is not an odd prime");
  Gaussian cand = z;
  for (int k = 0; k < 4; ++k) {
    if (cand.im % 2 == 0 && mod_i64(cand.re + cand.im, 4) == 1) return cand;
    cand = {-cand.im, cand.re};  // multiply by i
  }
  raise("NotSplitPrime", "no primary associate found");  // unreachable for odd prime norm
}

int quartic_class(uint64_t c_residue, uint64_t p) {
  uint64_t c = c_residue % p;
  if (add_mod(mul_mod(c, c, p), 1, p) == 0)
    raise("NormDivisible", "c^2+1 divisible by " + std::to_string(p));
  return quartic_jacobi({static_cast<int64_t>(c), 1}, p).r;
}

int quartic_class(const Rational& c, uint64_t p) {
  return quartic_class(reduce_rational(c, p), p);
}

}  // namespace qrkit
