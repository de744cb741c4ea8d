#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace qrkit {

// positive definite integral binary quadratic form a x^2 + b xy + c y^2
struct Form {
  int64_t a = 0;
  int64_t b = 0;
  int64_t c = 0;
  friend bool operator==(const Form&, const Form&) = default;
  friend auto operator<=>(const Form&, const Form&) = default;
};

inline int64_t discriminant(const Form& f) {
  return f.b * f.b - 4 * f.a * f.c;
}

// every reduced primitive form of discriminant d (d < 0, d = 0 or 1 mod 4),
// sorted lexicographically; raises BadDiscriminant otherwise.
// reduced: |b| <= a <= c, with b >= 0 whenever |b| = a or a = c.
std::vector<Form> reduced_forms(int64_t d);

// a witness (x, y) with f(x, y) = n, or nullopt; scans y ascending
std::optional<std::pair<int64_t, int64_t>> represents(const Form& f,
                                                      int64_t n);

}  // namespace qrkit
