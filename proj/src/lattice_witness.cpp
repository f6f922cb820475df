#include "digifix/lattice_witness.hpp"

#include <cstdint>

#include "digifix/errors.hpp"

namespace digifix {

PowersOfTwoReport powers_of_two_window_check(int n) {
  if (n < 2 || n > 61) throw InputError("window size N must lie in [2, 61]");
  auto pow2 = [](int e) { return std::int64_t{1} << e; };
  auto f = [](std::int64_t x) { return x == 1 ? x : x / 2; };
  auto d = [](std::int64_t a, std::int64_t b) { return a > b ? a - b : b - a; };

  PowersOfTwoReport r;
  for (int k = 1; k <= n; ++k) {
    // d(f1, f2^k) < d(1, 2^k) / 2, doubled to stay in integers.
    r.strict_half_from_one &= 2 * d(f(1), f(pow2(k))) < d(1, pow2(k));
    ++r.inequalities_checked;
  }
  for (int m = 1; m <= n; ++m) {
    for (int k = m; k <= n; ++k) {
      const std::int64_t lhs = d(f(pow2(m)), f(pow2(k)));
      r.exact_half_between_powers &= lhs == pow2(k - 1) - pow2(m - 1) && 2 * lhs == d(pow2(m), pow2(k));
      ++r.inequalities_checked;
    }
  }
  // f maps {2^0..2^N} onto {2^0..2^(N-1)}.
  std::vector<bool> hit(n + 1, false);
  for (int k = 0; k <= n; ++k) {
    const std::int64_t y = f(pow2(k));
    const int e = 63 - __builtin_clzll(static_cast<unsigned long long>(y));
    if (pow2(e) != y) r.loses_only_top = false;
    else hit[e] = true;
  }
  for (int k = 0; k < n; ++k) r.loses_only_top &= hit[k];
  r.loses_only_top &= !hit[n];
  return r;
}

int midpoint_halving_escape(const Point& j) {
  std::vector<Coord> c(j.coords().begin(), j.coords().end());
  bool nonzero = false;
  for (Coord x : c) nonzero |= x != 0;
  if (!nonzero) throw InputError("the origin stays on the lattice under halving");
  for (int k = 1;; ++k) {
    for (Coord& x : c) {
      if (x % 2 != 0) return k;
    }
    for (Coord& x : c) x /= 2;
  }
}

}  // namespace digifix
