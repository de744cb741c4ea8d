#include "qrkit/modular.hpp"

#include <string>

#include "qrkit/errors.hpp"

namespace qrkit {

uint64_t pow_mod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t inv_mod(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) raise("ZeroInverse", "inverse of 0 mod " + std::to_string(p));
  // extended Euclid on (a, p); p prime so gcd is 1
  int64_t t = 0, newt = 1;
  uint64_t r = p, newr = a;
  while (newr != 0) {
    uint64_t q = r / newr;
    int64_t tt = t - static_cast<int64_t>(q) * newt;
    t = newt;
    newt = tt;
    uint64_t rr = r - q * newr;
    r = newr;
    newr = rr;
  }
  return t < 0 ? static_cast<uint64_t>(t + static_cast<int64_t>(p)) : static_cast<uint64_t>(t);
}

void batch_inverse(std::vector<uint64_t>& v, uint64_t p) {
  if (v.empty()) return;
  std::vector<uint64_t> pref(v.size());
  uint64_t acc = 1;
  for (size_t i = 0; i < v.size(); ++i) {
    pref[i] = acc;
    acc = mul_mod(acc, v[i], p);
  }
  uint64_t inv = inv_mod(acc, p);
  for (size_t i = v.size(); i-- > 0;) {
    uint64_t vi = v[i];
    v[i] = mul_mod(inv, pref[i], p);
    inv = mul_mod(inv, vi, p);
  }
}

int legendre(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  uint64_t t = pow_mod(a, (p - 1) / 2, p);
  return t == 1 ? 1 : -1;
}

uint64_t sqrt_mod(uint64_t a, uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (legendre(a, p) != 1)
    raise("NonResidue", std::to_string(a) + " is not a square mod " + std::to_string(p));
  uint64_t x;
  if (p % 4 == 3) {
    x = pow_mod(a, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks: p-1 = q * 2^s with q odd
    uint64_t q = p - 1, s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    uint64_t n = 2;
    while (n < p && legendre(n, p) != -1) ++n;
    if (n == p)
      raise("NonResidue", "no quadratic non-residue below " + std::to_string(p) +
                              "; composite modulus?");
    uint64_t z = pow_mod(n, q, p);
    uint64_t m = s;
    uint64_t c = z;
    uint64_t t = pow_mod(a, q, p);
    uint64_t r = pow_mod(a, (q + 1) / 2, p);
    while (t != 1) {
      uint64_t i = 0, tt = t;
      while (tt != 1) {
        tt = mul_mod(tt, tt, p);
        ++i;
      }
      uint64_t b = c;
      for (uint64_t j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
      m = i;
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      r = mul_mod(r, b, p);
    }
    x = r;
  }
  return x <= p - x ? x : p - x;
}

std::vector<uint64_t> prime_sieve(uint64_t bound) {
  std::vector<uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  uint64_t d = n - 1, s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // these bases make the test deterministic for all 64-bit n
  for (uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    uint64_t x = pow_mod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (uint64_t r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

void require_odd_prime(uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    raise("NotOddPrime", std::to_string(p) + " is not an odd prime");
}

uint64_t isqrt_u64(uint64_t n) {
  if (n == 0) return 0;
  uint64_t x = static_cast<uint64_t>(__builtin_sqrtl(static_cast<long double>(n)));
  while (x > 0 && x > n / x) --x;
  while ((x + 1) <= n / (x + 1)) ++x;
  return x;
}

uint64_t reduce_rational(const Rational& r, uint64_t p) {
  uint64_t den = mod_i64(r.den, p);
  if (den == 0)
    raise("DenominatorDivisible", "denominator " + std::to_string(r.den) +
                                      " divisible by " + std::to_string(p));
  return mul_mod(mod_i64(r.num, p), inv_mod(den, p), p);
}

}  // namespace qrkit
