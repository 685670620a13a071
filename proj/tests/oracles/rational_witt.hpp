#pragma once
// Hyperbolicity of small diagonal forms over Q by direct search. Entries are
// nonzero integers. Rank 2: <a, b> = 0 iff -ab is a square. Rank 4:
// <a, b, c, d> = 0 iff <a, b> and <-c, -d> are isometric, i.e. the
// discriminants agree and <a, b> represents -c. Representation is decided by
// a bounded search for a x^2 + b y^2 = -c z^2, which for entries of absolute
// value <= 15 stays well inside Holzer's bound.

#include <cmath>
#include <cstdlib>
#include <vector>

namespace oracle {

inline bool is_square_int(long long v) {
  if (v < 0) return false;
  long long r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(v))));
  for (long long t = std::max(0LL, r - 2); t <= r + 2; ++t)
    if (t * t == v) return true;
  return false;
}

// a x^2 + b y^2 = t z^2 with z != 0
inline bool represents(long a, long b, long t, long bound = 60) {
  for (long long z = 1; z <= bound; ++z)
    for (long long x = 0; x <= bound; ++x) {
      long long rest = t * z * z - a * x * x;
      if (rest % b != 0) continue;
      if (is_square_int(rest / b)) return true;
    }
  return false;
}

inline bool rational_hyperbolic(const std::vector<long>& d) {
  if (d.size() % 2) return false;
  if (d.empty()) return true;
  if (d.size() == 2) return is_square_int(-static_cast<long long>(d[0]) * d[1]);
  if (d.size() == 4) {
    long long disc = static_cast<long long>(d[0]) * d[1] * d[2] * d[3];
    if (!is_square_int(disc)) return false;
    return represents(d[0], d[1], -d[2]);
  }
  std::abort();  // ranks above 4 are outside the oracle
}

}  // namespace oracle
