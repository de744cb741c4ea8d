#include "qrkit/verifier.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "qrkit/binom_sums.hpp"
#include "qrkit/errors.hpp"
#include "qrkit/gaussian.hpp"
#include "qrkit/lucas.hpp"
#include "qrkit/modular.hpp"
#include "qrkit/quadratic_forms.hpp"
#include "qrkit/two_squares.hpp"

namespace qrkit {

namespace {

constexpr const char* kNames[kTheoremCount] = {
    "T2_1a", "T2_1b", "C2_1",  "C2_2",  "C2_3",  "C2_4",
    "R2_1",  "EQ2_8", "EQ2_9", "EQ2_10", "T2_2", "C2_6",
    "C2_7",  "C2_8",  "T2_3",  "C2_9",  "T2_4",  "C2_10",
    "C2_11", "L3_1",  "L3_2",  "T3_1",  "C3_1",  "C3_2",
    "C3_3",  "C3_4",  "C3_5",  "C3_6",  "C3_7",  "EQ1_3"};

struct Tally {
  uint64_t checked = 0;
  uint64_t skipped = 0;
  std::vector<Counterexample> cex;
  std::vector<uint64_t> pair_counts;  // C2_2: matched pairs per (m,n) cell

  void skip(uint64_t n = 1) { skipped += n; }
  void expect(uint64_t p, std::string params, uint64_t expected,
              uint64_t got) {
    ++checked;
    if (expected != got) cex.push_back({p, std::move(params), expected, got});
  }
};

struct Ctx {
  uint64_t p = 0;
  size_t pindex = 0;
  const SweepOptions* opt = nullptr;
  const std::vector<uint64_t>* primes = nullptr;
  const std::vector<uint64_t>* qs = nullptr;
  const std::vector<TwoSquares>* qdec = nullptr;
  const std::vector<std::array<int8_t, 25>>* c22 = nullptr;

  // per-prime parameter cap
  uint64_t grid() const {
    return opt->exhaustive ? p - 1
                           : std::min<uint64_t>(p - 1, opt->param_bound);
  }
};

// Legendre value (+-1) as a canonical residue; never called with a = 0 mod p
uint64_t lres(int s, uint64_t p) { return s == 1 ? 1 : p - 1; }

// apply (-1)^parity
uint64_t sgn_res(int parity, uint64_t v, uint64_t p) {
  return parity ? neg_mod(v, p) : v;
}

int parity_p2m1_8(uint64_t p) {  // parity of (p^2-1)/8
  uint64_t m = p % 8;
  return (m == 1 || m == 7) ? 0 : 1;
}

// x = num * (16 * den)^-1 mod p
uint64_t over16(uint64_t num, uint64_t den, uint64_t p) {
  return mul_mod(num % p, inv_mod(mul_mod(16 % p, den % p, p), p), p);
}

std::string two(const char* k1, uint64_t v1, const char* k2, uint64_t v2) {
  return std::string(k1) + "=" + std::to_string(v1) + "," + k2 + "=" +
         std::to_string(v2);
}

// ---- per-prime check bodies -------------------------------------------

void chk_T2_1a(const Ctx& c, SumEvaluator& ev, Tally& t) {
  uint64_t p = c.p;
  uint64_t s2 = lres(legendre(2 % p, p), p);
  for (uint64_t a = 1; a <= c.grid(); ++a) {
    uint64_t w = add_mod(mul_mod(a, a, p), 1, p);
    if (w == 0) {
      t.skip();
      continue;
    }
    uint64_t got =
        mul_mod(s2, ev.sum(SumKind::Main, over16(mul_mod(a, a, p), w, p)), p);
    int r = quartic_class(a, p);
    uint64_t expd = r == 0 ? 1 : r == 1 ? a : r == 2 ? p - 1 : p - a;
    t.expect(p, "c=" + std::to_string(a), expd, got);
  }
}

void chk_T2_1b(const Ctx& c, SumEvaluator& ev, Tally& t) {
  uint64_t p = c.p;
  for (uint64_t a = 1; a <= c.grid(); ++a) {
    uint64_t w = add_mod(mul_mod(a, a, p), 1, p);
    if (w == 0) {
      t.skip();
      continue;
    }
    uint64_t got = ev.sum(SumKind::Main, over16(1, w, p));
    int r = quartic_class(a, p);
    uint64_t ia = inv_mod(a, p);
    uint64_t expd = r == 0 ? 1 : r == 1 ? p - ia : r == 2 ? p - 1 : ia;
    t.expect(p, "c=" + std::to_string(a), expd, got);
  }
}

void chk_C2_1(const Ctx& c, SumEvaluator& ev, Tally& t) {
  uint64_t p = c.p;
  for (uint64_t a = 1; a <= c.grid(); ++a) {
    uint64_t w = add_mod(mul_mod(a, a, p), 1, p);
    if (w == 0) {
      t.skip();
      continue;
    }
    uint64_t got = mul_mod(ev.sum(SumKind::Main, over16(mul_mod(a, a, p), w, p)),
                           ev.sum(SumKind::Main, over16(1, w, p)), p);
    uint64_t expd = lres(legendre(mul_mod(2 % p, w, p), p), p);
    t.expect(p, "c=" + std::to_string(a), expd, got);
  }
}

void chk_C2_2(const Ctx& c, Tally& t) {
  uint64_t p = c.p;
  const auto& tab = *c.c22;
  t.pair_counts.assign(25, 0);
  for (size_t j = 0; j < c.pindex; ++j) {
    uint64_t q = (*c.primes)[j];
    for (int m = 1; m <= 5; ++m) {
      for (int n = 1; n <= 5; ++n) {
        int idx = (m - 1) * 5 + (n - 1);
        int8_t cp = tab[c.pindex][idx], cq = tab[j][idx];
        if (cp < 0 || cq < 0) {  // m = n or a shared factor with p or q
          t.skip();
          continue;
        }
        uint64_t M = 8u * uint64_t(m * m + n * n);
        if (p % M != q % M && (p % M + q % M) % M != 0) {
          t.skip();
          continue;
        }
        ++t.pair_counts[idx];
        t.expect(p,
                 "q=" + std::to_string(q) + ",m=" + std::to_string(m) +
                     ",n=" + std::to_string(n),
                 uint64_t(cq), uint64_t(cp));
      }
    }
  }
}

void chk_C2_3(const Ctx& c, SumEvaluator& ev, Tally& t) {
  uint64_t p = c.p;
  uint64_t got = ev.sum(SumKind::Main, inv_mod(32 % p, p));
  uint64_t m = p % 16;
  uint64_t expd = (m == 1 || m == 3 || m == 13 || m == 15) ? 1 : p - 1;
  t.expect(p, "", expd, got);
}

void chk_C2_4(const Ctx& c, SumEvaluator& ev, Tally& t) {
  uint64_t p = c.p;
  for (uint64_t a = 1; a <= c.grid(); ++a) {
    uint64_t w = add_mod(mul_mod(a, a, p), 1, p);
    if (a == 1 || a == p - 1 || w == 0) {
      t.skip();
      continue;
    }
    uint64_t w2 = mul_mod(2 % p, w, p);
    uint64_t c2w = mul_mod(mul_mod(a, a, p), w, p);
    bool solvable = false;
    for (uint64_t x = 0; x < p && !solvable; ++x) {
      uint64_t x2 = mul_mod(x, x, p);
      uint64_t v = add_mod(sub_mod(mul_mod(x2, x2, p), mul_mod(w2, x2, p), p),
                           c2w, p);
      solvable = (v == 0);
    }
    bool vanish = ev.sum(SumKind::Main, over16(1, w, p)) == 1;
    t.expect(p, "c=" + std::to_string(a), solvable ? 1 : 0, vanish ? 1 : 0);
  }
}

void chk_R2_1(const Ctx& c, SumEvaluator& ev, Tally& t) {
  uint64_t p = c.p;
  for (uint64_t a = 1; a <= c.grid(); ++a) {
    uint64_t w = add_mod(a, 1, p);
    if (w == 0) {
      t.skip(2);
      continue;
    }
    int la = legendre(a, p), lw = legendre(w, p);
    uint64_t x1 = over16(1, w, p);
    bool v1 = ev.sum(SumKind::Main, x1) == 0;
    bool e1 = (la == -1 && lw == 1);
    t.expect(p, "a=" + std::to_string(a) + ",arg=1", e1 ? 1 : 0, v1 ? 1 : 0);
    bool v2 = ev.sum(SumKind::Main, mul_mod(a, x1, p)) == 0;
    bool e2 = (la == -1 && lw == -1);
    t.expect(p, "a=" + std::to_string(a) + ",arg=2", e2 ? 1 : 0, v2 ? 1 : 0);
  }
}

void chk_rep(const Ctx& c, SumEvaluator& ev, Tally& t,
             std::initializer_list<Form> forms, uint64_t minus_arg) {
  uint64_t p = c.p;
  if (p == 3) {
    t.skip();
    return;
  }
  bool rep = false;
  for (const Form& f : forms)
    if (represents(f, int64_t(p))) rep = true;
  uint64_t x = inv_mod(neg_mod(minus_arg % p, p), p);
  bool vanish = ev.sum(SumKind::Main, x) == 1;
  t.expect(p, "", rep ? 1 : 0, vanish ? 1 : 0);
}

// classify t = p^((q-1)/4) mod q against {1, -1, u, -u}; u*u = -1 mod q
int root_class(uint64_t tq, uint64_t u, uint64_t q) {
  if (tq == 1) return 0;
  if (tq == q - 1) return 1;
  if (tq == u) return 2;
  return 3;  // tq == q - u: the four values exhaust the fourth roots of 1
}

void chk_T2_2(const Ctx& c, SumEvaluator& ev, Tally& t) {
  uint64_t p = c.p;
  for (size_t j = 0; j < c.qs->size(); ++j) {
    uint64_t q = (*c.qs)[j];
    const TwoSquares& d = (*c.qdec)[j];
    uint64_t a = uint64_t(d.a), b = uint64_t(d.b);
    if (q == p || b % p == 0) {
      t.skip();
      continue;
    }
    int par = parity_p2m1_8(p) ^ int(((p - 1) / 2 % 2) & ((q - 1) / 4 % 2));
    uint64_t got =
        sgn_res(par, ev.sum(SumKind::Main, over16(mul_mod(a % p, a % p, p), q, p)), p);
    uint64_t tq = pow_mod(p % q, (q - 1) / 4, q);
    uint64_t abq = mul_mod(a % q, inv_mod(b % q, q), q);
    uint64_t abp = mul_mod(a % p, inv_mod(b % p, p), p);
    uint64_t table[4] = {1, p - 1, neg_mod(abp, p), abp};
    uint64_t expd = table[root_class(tq, abq, q)];
    t.expect(p, "q=" + std::to_string(q), expd, got);
  }
}

void chk_fixed_q(const Ctx& c, SumEvaluator& ev, Tally& t, uint64_t q,
                 uint64_t num, uint64_t den, int mode) {
  // mode 0: sign (-1)^[p/4] (C2_6/C2_7); mode 1: sign (2|p) (C2_8)
  uint64_t p = c.p;
  if (p == q) {
    t.skip();
    return;
  }
  int par = mode == 0 ? int(p / 4 % 2) : (legendre(2 % p, p) == 1 ? 0 : 1);
  uint64_t x = mul_mod(num % p, inv_mod(den % p, p), p);
  uint64_t got = sgn_res(par, ev.sum(SumKind::Main, x), p);
  uint64_t m = p % q, expd = 0;
  if (q == 5) {
    uint64_t h = inv_mod(2 % p, p);
    expd = m == 1 ? 1 : m == 4 ? p - 1 : m == 2 ? h : neg_mod(h, p);
  } else if (q == 13) {
    uint64_t r32 = mul_mod(3 % p, inv_mod(2 % p, p), p);
    if (m == 1 || m == 3 || m == 9)
      expd = 1;
    else if (m == 4 || m == 10 || m == 12)
      expd = p - 1;
    else if (m == 2 || m == 5 || m == 6)
      expd = neg_mod(r32, p);
    else
      expd = r32;
  } else {  // q == 17
    uint64_t i4 = inv_mod(4 % p, p);
    if (m == 1 || m == 4 || m == 13 || m == 16)
      expd = 1;
    else if (m == 2 || m == 8 || m == 9 || m == 15)
      expd = p - 1;
    else if (m == 6 || m == 7 || m == 10 || m == 11)
      expd = i4;
    else
      expd = neg_mod(i4, p);
  }
  t.expect(p, "", expd, got);
}

void chk_T2_3(const Ctx& c, SumEvaluator& ev, Tally& t) {
  uint64_t p = c.p;
  for (size_t j = 0; j < c.qs->size(); ++j) {
    uint64_t q = (*c.qs)[j];
    const TwoSquares& d = (*c.qdec)[j];
    uint64_t a = uint64_t(d.a), b = uint64_t(d.b);
    if (q == p || a % p == 0) {
      t.skip();
      continue;
    }
    int par = int(((p - 1) / 2 % 2) & ((q - 1) / 4 % 2));
    uint64_t got =
        sgn_res(par, ev.sum(SumKind::Main, over16(mul_mod(b % p, b % p, p), q, p)), p);
    uint64_t tq = pow_mod(p % q, (q - 1) / 4, q);
    uint64_t baq = mul_mod(b % q, inv_mod(a % q, q), q);
    uint64_t bap = mul_mod(b % p, inv_mod(a % p, p), p);
    uint64_t table[4] = {1, p - 1, neg_mod(bap, p), bap};
    uint64_t expd = table[root_class(tq, baq, q)];
    t.expect(p, "q=" + std::to_string(q), expd, got);
  }
}

void chk_C2_9(const Ctx& c, SumEvaluator& ev, Tally& t) {
  uint64_t p = c.p;
  int par = int((p - 1) / 2 % 2);
  // p = 3 divides the odd leg of 13 = 9 + 4, so row 2 excludes it
  if (p == 5) {
    t.skip();
  } else {
    uint64_t got = sgn_res(par, ev.sum(SumKind::Main, inv_mod(20 % p, p)), p);
    uint64_t m = p % 5;
    uint64_t expd = m == 1   ? 1
                    : m == 4 ? p - 1
                    : m == 3 ? 2 % p
                             : neg_mod(2 % p, p);
    t.expect(p, "row=1", expd, got);
  }
  if (p == 13 || p == 3) {
    t.skip();
  } else {
    uint64_t got = sgn_res(par, ev.sum(SumKind::Main, inv_mod(52 % p, p)), p);
    uint64_t m = p % 13;
    uint64_t v23 = mul_mod(2 % p, inv_mod(3 % p, p), p);
    uint64_t expd;
    if (m == 1 || m == 3 || m == 9)
      expd = 1;
    else if (m == 4 || m == 10 || m == 12)
      expd = p - 1;
    else if (m == 2 || m == 5 || m == 6)
      expd = v23;
    else
      expd = neg_mod(v23, p);
    t.expect(p, "row=2", expd, got);
  }
  if (p == 17) {
    t.skip();
  } else {
    uint64_t got = ev.sum(SumKind::Main, inv_mod(17 % p, p));
    uint64_t m = p % 17;
    uint64_t expd;
    if (m == 1 || m == 4 || m == 13 || m == 16)
      expd = 1;
    else if (m == 2 || m == 8 || m == 9 || m == 15)
      expd = p - 1;
    else if (m == 3 || m == 5 || m == 12 || m == 14)
      expd = 4 % p;
    else
      expd = neg_mod(4 % p, p);
    t.expect(p, "row=3", expd, got);
  }
}

void chk_T2_4(const Ctx& c, SumEvaluator& ev, Tally& t) {
  uint64_t p = c.p, g = c.grid();
  for (uint64_t a = 1; a <= g; ++a) {
    for (uint64_t b = 1; b <= g; ++b) {
      uint64_t w = sub_mod(mul_mod(a, a, p), mul_mod(b, b, p), p);
      if (w == 0) {
        t.skip();
        continue;
      }
      uint64_t A = add_mod(a, b, p), B = sub_mod(a, b, p);
      uint64_t inv2b = inv_mod(mul_mod(2 % p, b, p), p);
      uint64_t lA = lres(legendre(A, p), p), lB = lres(legendre(B, p), p);
      uint64_t got1 = ev.sum(SumKind::Main, over16(w, mul_mod(a, a, p), p));
      uint64_t e1 = mul_mod(
          mul_mod(inv2b, lres(legendre(mul_mod(2 % p, a, p), p), p), p),
          sub_mod(mul_mod(A, lA, p), mul_mod(B, lB, p), p), p);
      uint64_t got2 = ev.sum(SumKind::Main, over16(mul_mod(a, a, p), w, p));
      uint64_t nw = neg_mod(w, p), e2;
      if (p % 4 == 1) {
        uint64_t s = sub_mod(mul_mod(A, lB, p), mul_mod(B, lA, p), p);
        e2 = mul_mod(mul_mod(inv2b, s, p), pow_mod(nw, (p - 1) / 4, p), p);
      } else {
        e2 = mul_mod(mul_mod(inv2b, sub_mod(lA, lB, p), p),
                     pow_mod(nw, (p + 1) / 4, p), p);
      }
      ++t.checked;
      if (got1 != e1)
        t.cex.push_back({p, two("a", a, "b", b) + ",part=1", e1, got1});
      else if (got2 != e2)
        t.cex.push_back({p, two("a", a, "b", b) + ",part=2", e2, got2});
    }
  }
}

void chk_C2_10(const Ctx& c, SumEvaluator& ev, Tally& t) {
  uint64_t p = c.p;
  for (uint64_t m = 1; m <= c.grid(); ++m) {
    if (m == 1 || m == p - 1) {
      t.skip();
      continue;
    }
    uint64_t mm1 = m - 1, mp1 = m + 1;  // nonzero residues: 2 <= m <= p-2
    uint64_t lm = lres(legendre(m, p), p);
    uint64_t invmp1 = inv_mod(mp1, p);
    uint64_t x1 = neg_mod(
        mul_mod(m, inv_mod(mul_mod(4 % p, mul_mod(mm1, mm1, p), p), p), p), p);
    uint64_t got1 = ev.sum(SumKind::Main, x1);
    uint64_t e1 = mul_mod(mul_mod(invmp1, lres(legendre(mm1, p), p), p),
                          add_mod(mul_mod(m, lm, p), lres(legendre(p - 1, p), p), p), p);
    uint64_t x2 = neg_mod(
        mul_mod(mul_mod(mm1, mm1, p), inv_mod(mul_mod(64 % p, m, p), p), p), p);
    uint64_t got2 = ev.sum(SumKind::Main, x2);
    uint64_t e2;
    if (p % 4 == 1)
      e2 = mul_mod(mul_mod(invmp1, add_mod(m, lm, p), p),
                   pow_mod(m, (p - 1) / 4, p), p);
    else
      e2 = mul_mod(mul_mod(invmp1, add_mod(lm, 1, p), p),
                   pow_mod(m, (p + 1) / 4, p), p);
    ++t.checked;
    if (got1 != e1)
      t.cex.push_back({p, "m=" + std::to_string(m) + ",part=1", e1, got1});
    else if (got2 != e2)
      t.cex.push_back({p, "m=" + std::to_string(m) + ",part=2", e2, got2});
  }
}

void chk_C2_11(const Ctx& c, SumEvaluator& ev, Tally& t) {
  uint64_t p = c.p;
  if (p == 3) {
    t.skip();
    return;
  }
  uint64_t got = ev.sum(SumKind::Main, inv_mod(18 % p, p));
  int64_t v = 2 * legendre(6 % p, p) - legendre(3 % p, p);
  t.expect(p, "", mod_i64(v, p), got);
}

void chk_L3_1(const Ctx& c, SumEvaluator& ev, Tally& t) {
  uint64_t p = c.p;
  uint64_t kmax = c.opt->exhaustive
                      ? (p - 1) / 2
                      : std::min<uint64_t>((p - 1) / 2, c.opt->param_bound);
  for (uint64_t k = 1; k <= kmax; ++k) {
    uint64_t n = (p - 1) / 2 + k;
    uint64_t got = ev.binom(4 * n, 2 * n);
    uint64_t expd = mul_mod(2 % p, ev.binom(4 * k - 2, 2 * k - 1), p);
    t.expect(p, "k=" + std::to_string(k), expd, got);
  }
}

void chk_L3_2(const Ctx& c, SumEvaluator& ev, Tally& t) {
  uint64_t p = c.p, g = c.grid();
  for (uint64_t P = 1; P <= g; ++P) {
    for (uint64_t Q = 1; Q <= g; ++Q) {
      uint64_t got = lucas_uv((p - 1) / 2, P, Q, p).u;
      uint64_t f = mul_mod(mul_mod(2 % p, P, p), inv_mod(Q, p), p);
      f = mul_mod(f, lres(legendre(P, p), p), p);
      uint64_t x = mul_mod(
          Q, inv_mod(mul_mod(4 % p, mul_mod(P, P, p), p), p), p);
      uint64_t expd = mul_mod(f, ev.sum(SumKind::Center, x), p);
      t.expect(p, two("P", P, "Q", Q), expd, got);
    }
  }
}

// the shared case table of the window sums: 0 when c^2+1 is a square,
// otherwise +-1 by the quartic class of c
uint64_t window_expected(uint64_t cc, uint64_t w, uint64_t p) {
  if (legendre(w, p) == 1) return 0;
  return quartic_class(cc, p) == 1 ? 1 : p - 1;
}

void chk_T3_1(const Ctx& c, SumEvaluator& ev, Tally& t) {
  uint64_t p = c.p;
  for (uint64_t a = 1; a <= c.grid(); ++a) {
    uint64_t w = add_mod(mul_mod(a, a, p), 1, p);
    if (w == 0) {
      t.skip();
      continue;
    }
    uint64_t y = over16(1, w, p);
    uint64_t expd = window_expected(a, w, p);
    uint64_t got1 = mul_mod(mul_mod(2 % p, a, p), ev.sum(SumKind::Upper, y), p);
    uint64_t got2 =
        neg_mod(mul_mod(mul_mod(4 % p, a, p), ev.sum(SumKind::Center, y), p), p);
    ++t.checked;
    if (got1 != expd)
      t.cex.push_back({p, "c=" + std::to_string(a) + ",part=1", expd, got1});
    else if (got2 != expd)
      t.cex.push_back({p, "c=" + std::to_string(a) + ",part=2", expd, got2});
  }
}

void chk_C3_1(const Ctx& c, SumEvaluator& ev, Tally& t) {
  uint64_t p = c.p;
  uint64_t l2 = lres(legendre(2 % p, p), p);
  for (uint64_t a = 1; a <= c.grid(); ++a) {
    uint64_t w = add_mod(mul_mod(a, a, p), 1, p);
    if (w == 0) {
      t.skip();
      continue;
    }
    uint64_t x = over16(mul_mod(a, a, p), w, p);
    uint64_t ia = inv_mod(a, p);
    uint64_t expd = window_expected(a, w, p);
    uint64_t got1 = neg_mod(
        mul_mod(mul_mod(mul_mod(2 % p, ia, p), l2, p), ev.sum(SumKind::Upper, x), p),
        p);
    uint64_t got2 =
        mul_mod(mul_mod(mul_mod(4 % p, ia, p), l2, p), ev.sum(SumKind::Center, x), p);
    ++t.checked;
    if (got1 != expd)
      t.cex.push_back({p, "c=" + std::to_string(a) + ",part=1", expd, got1});
    else if (got2 != expd)
      t.cex.push_back({p, "c=" + std::to_string(a) + ",part=2", expd, got2});
  }
}

void chk_C3_2(const Ctx& c, SumEvaluator& ev, Tally& t) {
  uint64_t p = c.p;
  for (uint64_t a = 1; a <= c.grid(); ++a) {
    uint64_t w = add_mod(mul_mod(a, a, p), 1, p);
    if (w == 0 || legendre(w, p) != -1) {
      t.skip();
      continue;
    }
    uint64_t y = over16(1, w, p);
    uint64_t expd = ev.sum(SumKind::Main, y);
    uint64_t got1 = mul_mod(4 % p, ev.sum(SumKind::Center, y), p);
    uint64_t got2 = neg_mod(mul_mod(2 % p, ev.sum(SumKind::Upper, y), p), p);
    ++t.checked;
    if (got1 != expd)
      t.cex.push_back({p, "c=" + std::to_string(a) + ",part=1", expd, got1});
    else if (got2 != expd)
      t.cex.push_back({p, "c=" + std::to_string(a) + ",part=2", expd, got2});
  }
}

void chk_C3_3(const Ctx& c, SumEvaluator& ev, Tally& t) {
  uint64_t p = c.p;
  uint64_t l2 = lres(legendre(2 % p, p), p);
  for (uint64_t a = 1; a <= c.grid(); ++a) {
    uint64_t cc2 = mul_mod(a, a, p);
    uint64_t w = add_mod(cc2, 1, p);
    if (w == 0) {
      t.skip();
      continue;
    }
    uint64_t y1 = over16(1, w, p), y2 = mul_mod(cc2, y1, p);
    uint64_t f = neg_mod(mul_mod(cc2, l2, p), p);
    uint64_t got1 = ev.sum(SumKind::Upper, y2);
    uint64_t e1 = mul_mod(f, ev.sum(SumKind::Upper, y1), p);
    uint64_t got2 = ev.sum(SumKind::Center, y2);
    uint64_t e2 = mul_mod(f, ev.sum(SumKind::Center, y1), p);
    ++t.checked;
    if (got1 != e1)
      t.cex.push_back({p, "c=" + std::to_string(a) + ",part=1", e1, got1});
    else if (got2 != e2)
      t.cex.push_back({p, "c=" + std::to_string(a) + ",part=2", e2, got2});
  }
}

void chk_C3_4(const Ctx& c, SumEvaluator& ev, Tally& t) {
  uint64_t p = c.p;
  uint64_t y = inv_mod(32 % p, p);
  uint64_t m8 = p % 8, m16 = p % 16, expd;
  if (m8 == 1 || m8 == 7)
    expd = 0;
  else if (m16 == 5 || m16 == 11)
    expd = 1;
  else
    expd = p - 1;  // p = +-3 mod 16
  uint64_t got1 = mul_mod(2 % p, ev.sum(SumKind::Upper, y), p);
  uint64_t got2 = neg_mod(mul_mod(4 % p, ev.sum(SumKind::Center, y), p), p);
  ++t.checked;
  if (got1 != expd)
    t.cex.push_back({p, "part=1", expd, got1});
  else if (got2 != expd)
    t.cex.push_back({p, "part=2", expd, got2});
}

void chk_C3_56(const Ctx& c, SumEvaluator& ev, Tally& t, bool six) {
  uint64_t p = c.p;
  for (size_t j = 0; j < c.qs->size(); ++j) {
    uint64_t q = (*c.qs)[j];
    if (q == p || legendre(p % q, q) != -1) {
      t.skip();
      continue;
    }
    const TwoSquares& d = (*c.qdec)[j];
    uint64_t a = uint64_t(d.a), b = uint64_t(d.b);
    // (p|q) = -1 forces p coprime to ab
    int par = int(((p - 1) / 2 % 2) & ((q - 1) / 4 % 2));
    uint64_t num = six ? a : b, den = six ? b : a;
    if (six) par ^= parity_p2m1_8(p);
    uint64_t lhs = sgn_res(
        par, ev.sum(SumKind::Center, over16(mul_mod(num % p, num % p, p), q, p)), p);
    uint64_t rq = mul_mod(num % q, inv_mod(den % q, q), q);
    uint64_t rp4 =
        mul_mod(num % p, inv_mod(mul_mod(4 % p, den % p, p), p), p);
    uint64_t tq = pow_mod(p % q, (q - 1) / 4, q);
    bool rplus = tq == rq, rminus = tq == q - rq;
    bool lplus = lhs == neg_mod(rp4, p), lminus = lhs == rp4;
    ++t.checked;
    std::string params = "q=" + std::to_string(q);
    if (lplus != rplus)
      t.cex.push_back({p, params + ",sign=+", rplus ? 1u : 0u, lplus ? 1u : 0u});
    else if (lminus != rminus)
      t.cex.push_back({p, params + ",sign=-", rminus ? 1u : 0u, lminus ? 1u : 0u});
  }
}

void chk_C3_7(const Ctx& c, SumEvaluator& ev, Tally& t) {
  uint64_t p = c.p;
  if (p == 5) {
    t.skip();
    return;
  }
  uint64_t got = ev.sum(SumKind::Center, inv_mod(20 % p, p));
  uint64_t m = p % 5, h = inv_mod(2 % p, p);
  int par = int((p - 1) / 2 % 2);
  uint64_t expd;
  if (m == 1 || m == 4)
    expd = 0;
  else if (m == 2)
    expd = par ? h : neg_mod(h, p);  // -(-1)^((p-1)/2)/2
  else
    expd = par ? neg_mod(h, p) : h;  // +(-1)^((p-1)/2)/2
  t.expect(p, "", expd, got);
}

void chk_EQ1_3(const Ctx& c, SumEvaluator& ev, Tally& t) {
  uint64_t p = c.p;
  for (size_t j = 0; j < c.qs->size(); ++j) {
    uint64_t q = (*c.qs)[j];
    const TwoSquares& d = (*c.qdec)[j];
    uint64_t a = uint64_t(d.a), b = uint64_t(d.b);
    uint64_t diff = uint64_t(std::abs(d.a * d.a - d.b * d.b));
    if (q == p || a % p == 0 || b % p == 0 || diff % p == 0) {
      t.skip(4);
      continue;
    }
    int par = parity_p2m1_8(p) ^ int(((p - 1) / 2 % 2) & ((q - 1) / 4 % 2));
    int lpq = legendre(p % q, q);
    uint64_t S = ev.sum(SumKind::Main, over16(mul_mod(a % p, a % p, p), q, p));
    uint64_t abq = mul_mod(a % q, inv_mod(b % q, q), q);
    uint64_t abp = mul_mod(a % p, inv_mod(b % p, p), p);
    uint64_t tq = pow_mod(p % q, (q - 1) / 4, q);
    uint64_t tab_q[4] = {1, abq, q - 1, q - abq};
    uint64_t tab_p[4] = {1, abp, p - 1, neg_mod(abp, p)};
    for (int r = 0; r < 4; ++r) {
      bool qside = tq == tab_q[r];
      uint64_t v = sgn_res(par ^ (lpq == 1 ? 0 : 1), tab_p[r], p);
      bool pside = S == v;
      t.expect(p, "q=" + std::to_string(q) + ",r=" + std::to_string(r),
               qside ? 1 : 0, pside ? 1 : 0);
    }
  }
}

void run_check(TheoremId id, const Ctx& c, Tally& t) {
  SumEvaluator ev(c.p);
  switch (id) {
    case TheoremId::T2_1a: chk_T2_1a(c, ev, t); break;
    case TheoremId::T2_1b: chk_T2_1b(c, ev, t); break;
    case TheoremId::C2_1: chk_C2_1(c, ev, t); break;
    case TheoremId::C2_2: chk_C2_2(c, t); break;
    case TheoremId::C2_3: chk_C2_3(c, ev, t); break;
    case TheoremId::C2_4: chk_C2_4(c, ev, t); break;
    case TheoremId::R2_1: chk_R2_1(c, ev, t); break;
    case TheoremId::EQ2_8: chk_rep(c, ev, t, {{1, 0, 32}}, 16); break;
    case TheoremId::EQ2_9: chk_rep(c, ev, t, {{1, 0, 192}, {12, 12, 19}}, 32); break;
    case TheoremId::EQ2_10: chk_rep(c, ev, t, {{1, 0, 20}}, 64); break;
    case TheoremId::T2_2: chk_T2_2(c, ev, t); break;
    case TheoremId::C2_6: chk_fixed_q(c, ev, t, 5, 1, 80, 0); break;
    case TheoremId::C2_7: chk_fixed_q(c, ev, t, 13, 9, 208, 0); break;
    case TheoremId::C2_8: chk_fixed_q(c, ev, t, 17, 1, 272, 1); break;
    case TheoremId::T2_3: chk_T2_3(c, ev, t); break;
    case TheoremId::C2_9: chk_C2_9(c, ev, t); break;
    case TheoremId::T2_4: chk_T2_4(c, ev, t); break;
    case TheoremId::C2_10: chk_C2_10(c, ev, t); break;
    case TheoremId::C2_11: chk_C2_11(c, ev, t); break;
    case TheoremId::L3_1: chk_L3_1(c, ev, t); break;
    case TheoremId::L3_2: chk_L3_2(c, ev, t); break;
    case TheoremId::T3_1: chk_T3_1(c, ev, t); break;
    case TheoremId::C3_1: chk_C3_1(c, ev, t); break;
    case TheoremId::C3_2: chk_C3_2(c, ev, t); break;
    case TheoremId::C3_3: chk_C3_3(c, ev, t); break;
    case TheoremId::C3_4: chk_C3_4(c, ev, t); break;
    case TheoremId::C3_5: chk_C3_56(c, ev, t, false); break;
    case TheoremId::C3_6: chk_C3_56(c, ev, t, true); break;
    case TheoremId::C3_7: chk_C3_7(c, ev, t); break;
    case TheoremId::EQ1_3: chk_EQ1_3(c, ev, t); break;
  }
}

std::vector<std::array<int8_t, 25>> build_c22_classes(
    const std::vector<uint64_t>& primes) {
  std::vector<std::array<int8_t, 25>> tab(primes.size());
  for (size_t i = 0; i < primes.size(); ++i) {
    uint64_t s = primes[i];
    SumEvaluator ev(s);
    for (uint64_t m = 1; m <= 5; ++m) {
      for (uint64_t n = 1; n <= 5; ++n) {
        int idx = int((m - 1) * 5 + (n - 1));
        uint64_t sum2 = m * m + n * n, diff = m > n ? m * m - n * n : n * n - m * m;
        if (m == n || m % s == 0 || n % s == 0 || sum2 % s == 0 ||
            diff % s == 0) {
          tab[i][idx] = -2;
          continue;
        }
        uint64_t S = ev.sum(SumKind::Main, over16(mul_mod(n % s, n % s, s), sum2, s));
        uint64_t nm = mul_mod(n % s, inv_mod(m % s, s), s);
        int8_t cls = -1;
        if (S == 1)
          cls = 0;
        else if (S == s - 1)
          cls = 1;
        else if (S == nm)
          cls = 2;
        else if (S == neg_mod(nm, s))
          cls = 3;
        tab[i][idx] = cls;
      }
    }
  }
  return tab;
}

const char* grid_description(TheoremId id) {
  switch (id) {
    case TheoremId::T2_1a:
      return "c in 1..min(p-1,cap) with c^2+1 nonzero: (2|p)*S_main(c^2/(16(c^2+1))) vs {1,c,-1,-c} at the quartic class of c";
    case TheoremId::T2_1b:
      return "c in 1..min(p-1,cap) with c^2+1 nonzero: S_main(1/(16(c^2+1))) vs {1,-1/c,-1,1/c} at the quartic class of c";
    case TheoremId::C2_1:
      return "c in 1..min(p-1,cap) with c^2+1 nonzero: product of the two main sums vs (2(c^2+1)|p)";
    case TheoremId::C2_2:
      return "m,n in 1..5 and primes q<p with p=+-q mod 8(m^2+n^2), skipping shared factors of mn(m^2+n^2)(m^2-n^2): class of S_main(n^2/(16(m^2+n^2))) in {1,-1,n/m,-n/m} must agree mod p and mod q";
    case TheoremId::C2_3:
      return "one case per prime: S_main(1/32) vs +-1 by p mod 16";
    case TheoremId::C2_4:
      return "c in 1..min(p-1,cap), c != +-1, c^2+1 nonzero: solvability of x^4-2(c^2+1)x^2+c^2(c^2+1) vs S_main(1/(16(c^2+1))) = 1";
    case TheoremId::R2_1:
      return "a in 1..min(p-1,cap) with a+1 nonzero, two cases each: S_main(1/(16(a+1))) = 0 iff (a|p)=-1 and ((a+1)|p)=1; S_main(a/(16(a+1))) = 0 iff (a|p)=-1 and ((a+1)|p)=-1";
    case TheoremId::EQ2_8:
      return "one case per prime p>3: x^2+32y^2 represents p iff S_main(-1/16) = 1";
    case TheoremId::EQ2_9:
      return "one case per prime p>3: x^2+192y^2 or 12x^2+12xy+19y^2 represents p iff S_main(-1/32) = 1";
    case TheoremId::EQ2_10:
      return "one case per prime p>3: x^2+20y^2 represents p iff S_main(-1/64) = 1";
    case TheoremId::T2_2:
      return "q = a^2+b^2 = 1 mod 4 prime, q <= min(pmax,cap), skipping p | bq: (-1)^((p^2-1)/8+(p-1)/2*(q-1)/4)*S_main(a^2/(16q)) vs {1,-1,-a/b,a/b} at the fourth-root class of p^((q-1)/4) mod q";
    case TheoremId::C2_6:
      return "one case per prime p != 5: (-1)^[p/4]*S_main(1/80) by p mod 5";
    case TheoremId::C2_7:
      return "one case per prime p != 13: (-1)^[p/4]*S_main(9/208) by p mod 13";
    case TheoremId::C2_8:
      return "one case per prime p != 17: (2|p)*S_main(1/272) by p mod 17";
    case TheoremId::T2_3:
      return "q = a^2+b^2 = 1 mod 4 prime, q <= min(pmax,cap), skipping p | aq: (-1)^((p-1)/2*(q-1)/4)*S_main(b^2/(16q)) vs {1,-1,-b/a,b/a} at the fourth-root class of p^((q-1)/4) mod q";
    case TheoremId::C2_9:
      return "three rows per prime: signed S_main at 1/20 (p != 5), 1/52 (p != 3,13; 3 divides the odd leg of 13), 1/17 (p != 17) against tables by p mod 5/13/17";
    case TheoremId::T2_4:
      return "a,b in 1..min(p-1,cap)^2 with ab(a^2-b^2) nonzero: closed Legendre forms of S_main((a^2-b^2)/(16a^2)) and S_main(a^2/(16(a^2-b^2)))";
    case TheoremId::C2_10:
      return "m in 1..min(p-1,cap), m != 0,+-1: closed Legendre forms of S_main(-m/(4(m-1)^2)) and S_main(-(m-1)^2/(64m))";
    case TheoremId::C2_11:
      return "one case per prime p>3: S_main(1/18) vs 2(6|p)-(3|p)";
    case TheoremId::L3_1:
      return "k in 1..min((p-1)/2,cap): C(4((p-1)/2+k),2((p-1)/2+k)) = 2*C(4k-2,2k-1) mod p";
    case TheoremId::L3_2:
      return "P,Q in 1..min(p-1,cap)^2: U_((p-1)/2)(P,Q) vs (2P/Q)(P|p)*S_center(Q/(4P^2))";
    case TheoremId::T3_1:
      return "c in 1..min(p-1,cap) with c^2+1 nonzero: 2c*S_upper and -4c*S_center at 1/(16(c^2+1)) vs 0 when (c^2+1|p)=1, else +-1 by the quartic class of c";
    case TheoremId::C3_1:
      return "c in 1..min(p-1,cap) with c^2+1 nonzero: -(2/c)(2|p)*S_upper and (4/c)(2|p)*S_center at c^2/(16(c^2+1)) vs 0 when (c^2+1|p)=1, else +-1 by the quartic class of c";
    case TheoremId::C3_2:
      return "c in 1..min(p-1,cap) with (c^2+1|p) = -1: 4*S_center = -2*S_upper = S_main at 1/(16(c^2+1))";
    case TheoremId::C3_3:
      return "c in 1..min(p-1,cap) with c^2+1 nonzero: S_upper and S_center at c^2/(16(c^2+1)) vs -c^2(2|p) times the same sums at 1/(16(c^2+1))";
    case TheoremId::C3_4:
      return "one case per prime: 2*S_upper(1/32) and -4*S_center(1/32) vs 0 for p=+-1 mod 8, +1 for p=+-5 mod 16, -1 for p=+-3 mod 16";
    case TheoremId::C3_5:
      return "q = a^2+b^2 = 1 mod 4 prime, q <= min(pmax,cap), (p|q) = -1: (-1)^((p-1)/2*(q-1)/4)*S_center(b^2/(16q)) = -+b/(4a) iff p^((q-1)/4) = +-b/a mod q, both signs";
    case TheoremId::C3_6:
      return "q = a^2+b^2 = 1 mod 4 prime, q <= min(pmax,cap), (p|q) = -1: (-1)^((p^2-1)/8+(p-1)/2*(q-1)/4)*S_center(a^2/(16q)) = -+a/(4b) iff p^((q-1)/4) = +-a/b mod q, both signs";
    case TheoremId::C3_7:
      return "one case per prime p != 5: S_center(1/20) vs 0 for p=+-1 mod 5, else -+(-1)^((p-1)/2)/2 by p mod 5";
    case TheoremId::EQ1_3:
      return "q = a^2+b^2 = 1 mod 4 prime, q <= min(pmax,cap), r in 0..3, skipping p | ab(a^2-b^2)q: p^((q-1)/4) = (a/b)^r mod q iff S_main(a^2/(16q)) = (-1)^((p^2-1)/8+(p-1)/2*(q-1)/4)*(p|q)*(a/b)^r mod p, powers of a/b read from {1,a/b,-1,-a/b}";
  }
  return "";
}

}  // namespace

const char* theorem_name(TheoremId id) { return kNames[int(id)]; }

TheoremId theorem_from_name(std::string_view name) {
  for (int i = 0; i < kTheoremCount; ++i)
    if (name == kNames[i]) return TheoremId(i);
  raise("UnknownTheorem", "no check named '" + std::string(name) + "'");
}

std::vector<TheoremId> all_theorems() {
  std::vector<TheoremId> v;
  v.reserve(kTheoremCount);
  for (int i = 0; i < kTheoremCount; ++i) v.push_back(TheoremId(i));
  return v;
}

VerificationReport verify(TheoremId id, const SweepOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<uint64_t> primes = prime_sieve(opt.prime_bound);
  if (!primes.empty() && primes.front() == 2) primes.erase(primes.begin());

  uint64_t qcap = opt.exhaustive
                      ? opt.prime_bound
                      : std::min(opt.prime_bound, opt.param_bound);
  std::vector<uint64_t> qs;
  std::vector<TwoSquares> qdec;
  for (uint64_t q : primes) {
    if (q % 4 == 1 && q <= qcap) {
      qs.push_back(q);
      qdec.push_back(decompose(q));
    }
  }
  std::vector<std::array<int8_t, 25>> c22;
  if (id == TheoremId::C2_2) c22 = build_c22_classes(primes);

  size_t n = primes.size();
  std::vector<Tally> tallies(n);
  auto work = [&](size_t i) {
    Ctx c;
    c.p = primes[i];
    c.pindex = i;
    c.opt = &opt;
    c.primes = &primes;
    c.qs = &qs;
    c.qdec = &qdec;
    c.c22 = &c22;
    run_check(id, c, tallies[i]);
  };
  unsigned jobs = std::max(1u, opt.jobs);
  if (jobs <= 1) {
    for (size_t i = 0; i < n; ++i) work(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
      pool.emplace_back([&] {
        for (size_t i; (i = next.fetch_add(1)) < n;) work(i);
      });
    }
    for (auto& th : pool) th.join();
  }

  VerificationReport rep;
  rep.theorem = id;
  rep.prime_bound = opt.prime_bound;
  rep.param_bound = opt.param_bound;
  rep.params_description = grid_description(id);
  std::array<uint64_t, 25> pairs{};
  for (Tally& ta : tallies) {
    rep.cases_checked += ta.checked;
    rep.cases_skipped += ta.skipped;
    for (Counterexample& ce : ta.cex)
      rep.counterexamples.push_back(std::move(ce));
    if (!ta.pair_counts.empty())
      for (int k = 0; k < 25; ++k) pairs[k] += ta.pair_counts[k];
  }
  if (id == TheoremId::C2_2) {
    uint64_t lo = UINT64_MAX;
    for (int m = 1; m <= 5; ++m)
      for (int nn = 1; nn <= 5; ++nn)
        if (m != nn) lo = std::min(lo, pairs[(m - 1) * 5 + (nn - 1)]);
    if (lo == UINT64_MAX) lo = 0;
    rep.params_description += "; min matched pairs per (m,n): " +
                              std::to_string(lo) +
                              (lo < 50 ? " (insufficient data)" : "");
  }
  rep.elapsed_ms = uint64_t(std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - t0)
                                .count());
  return rep;
}

VerificationReport verify(TheoremId id, uint64_t prime_bound,
                          uint64_t param_bound) {
  SweepOptions opt;
  opt.prime_bound = prime_bound;
  opt.param_bound = param_bound;
  return verify(id, opt);
}

std::vector<VerificationReport> verify_all(const SweepOptions& opt) {
  std::vector<VerificationReport> out;
  out.reserve(kTheoremCount);
  for (TheoremId id : all_theorems()) out.push_back(verify(id, opt));
  return out;
}

}  // namespace qrkit
