#include "qrkit/quadratic_forms.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qrkit/errors.hpp"
#include "qrkit/modular.hpp"

namespace qrkit {

std::vector<Form> reduced_forms(int64_t d) {
  int64_t m = -d;
  if (d >= 0 || (m % 4 != 0 && m % 4 != 3))
    raise("BadDiscriminant",
          "need d < 0 with d = 0 or 1 (mod 4), got " + std::to_string(d));
  std::vector<Form> out;
  for (int64_t a = 1; 3 * a * a <= m; ++a) {
    for (int64_t b = -a; b <= a; ++b) {
      if ((b - d) % 2 != 0) continue;
      int64_t num = b * b - d;
      if (num % (4 * a) != 0) continue;
      int64_t c = num / (4 * a);
      if (c < a) continue;
      if ((b < 0) && (-b == a || a == c)) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
      out.push_back({a, b, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::pair<int64_t, int64_t>> represents(const Form& f,
                                                      int64_t n) {
  int64_t d = discriminant(f);
  if (f.a <= 0 || d >= 0)
    raise("BadDiscriminant", "form is not positive definite");
  if (n < 0) return std::nullopt;
  if (n == 0) return std::make_pair<int64_t, int64_t>(0, 0);
  // for fixed y the form is a quadratic in x with discriminant 4an + d y^2,
  // which positive definiteness drives negative once y is large
  for (int64_t y = 0;; ++y) {
    int64_t disc = 4 * f.a * n + d * y * y;
    if (disc < 0) break;
    uint64_t s = isqrt_u64(static_cast<uint64_t>(disc));
    if (static_cast<int64_t>(s * s) != disc) continue;
    for (int64_t sign : {1, -1}) {
      int64_t num = -f.b * y + sign * static_cast<int64_t>(s);
      if (num % (2 * f.a) != 0) continue;
      int64_t x = num / (2 * f.a);
      if (y == 0 && x < 0) continue;  // (x,0) and (-x,0) agree
      return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

}  // namespace qrkit
