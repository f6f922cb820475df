#pragma once

#include <cstddef>
#include <vector>

#include "digifix/point.hpp"

namespace digifix {

// Exact check on X_N = {2^0, ..., 2^N} in Z with f(1) = 1, f(x) = x/2:
// d(f1, f2^n) < d(1, 2^n)/2 for 1 <= n <= N, d(f2^m, f2^n) = d(2^m, 2^n)/2
// for 1 <= m <= n <= N, and f(X_N) = X_N minus its top element.
struct PowersOfTwoReport {
  bool strict_half_from_one = true;
  bool exact_half_between_powers = true;
  bool loses_only_top = true;
  std::size_t inequalities_checked = 0;
  bool passed() const { return strict_half_from_one && exact_half_between_powers && loses_only_top; }
};

// N in [2, 61]; throws InputError otherwise.
PowersOfTwoReport powers_of_two_window_check(int n);

// Smallest k >= 1 such that j / 2^k leaves the integer lattice. Throws
// InputError for j = 0, which never escapes.
int midpoint_halving_escape(const Point& j);

}  // namespace digifix
