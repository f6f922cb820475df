#pragma once

#include <array>
#include <vector>

namespace digifix {

// One covering constraint a.w >= b over non-negative w in R^3.
struct CoverRow {
  std::array<double, 3> a;
  double b;
};

struct Lp3Solution {
  bool bounded_feasible = false;  // the constraint set is non-empty
  double objective = 0.0;         // min w0 + w1 + w2
  std::array<double, 3> w{0.0, 0.0, 0.0};
};

// Minimizes w0 + w1 + w2 subject to the rows and w >= 0 by enumerating the
// vertices of the feasible polyhedron. Rows must have non-negative coefficients.
Lp3Solution minimize_cover_sum(const std::vector<CoverRow>& rows);

}  // namespace digifix
