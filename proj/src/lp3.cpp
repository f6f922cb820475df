#include "digifix/lp3.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <tuple>

#include "digifix/metric.hpp"

namespace digifix {

namespace {

using Vec3 = std::array<double, 3>;

double det3(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
  return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1]) - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0]) +
         r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
}

// Cramer's rule for the planes r_i . w = b_i.
std::optional<Vec3> solve3(const std::array<CoverRow, 3>& planes) {
  const double det = det3(planes[0].a, planes[1].a, planes[2].a);
  if (std::abs(det) < 1e-12) return std::nullopt;
  Vec3 w{};
  for (int col = 0; col < 3; ++col) {
    std::array<Vec3, 3> m{planes[0].a, planes[1].a, planes[2].a};
    for (int r = 0; r < 3; ++r) m[r][col] = planes[r].b;
    w[col] = det3(m[0], m[1], m[2]) / det;
  }
  return w;
}

bool satisfies(const std::vector<CoverRow>& rows, const Vec3& w) {
  for (double wi : w) {
    if (wi < -kTolerance) return false;
  }
  for (const auto& r : rows) {
    const double lhs = r.a[0] * w[0] + r.a[1] * w[1] + r.a[2] * w[2];
    if (lhs < r.b - kTolerance * std::max(1.0, std::abs(r.b))) return false;
  }
  return true;
}

}  // namespace

Lp3Solution minimize_cover_sum(const std::vector<CoverRow>& input) {
  std::vector<CoverRow> rows;
  for (const auto& r : input) {
    if (r.b <= kTolerance) continue;  // implied by w >= 0
    if (r.a[0] <= 0 && r.a[1] <= 0 && r.a[2] <= 0) return {};
    rows.push_back(r);
  }
  std::sort(rows.begin(), rows.end(), [](const CoverRow& x, const CoverRow& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  rows.erase(std::unique(rows.begin(), rows.end(),
                         [](const CoverRow& x, const CoverRow& y) { return x.a == y.a && x.b == y.b; }),
             rows.end());

  Lp3Solution best;
  best.bounded_feasible = true;
  if (rows.empty()) return best;

  std::vector<CoverRow> planes{{{1, 0, 0}, 0}, {{0, 1, 0}, 0}, {{0, 0, 1}, 0}};
  planes.insert(planes.end(), rows.begin(), rows.end());

  best.objective = std::numeric_limits<double>::infinity();
  const std::size_t p = planes.size();
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i + 1; j < p; ++j) {
      for (std::size_t k = j + 1; k < p; ++k) {
        const auto w = solve3({planes[i], planes[j], planes[k]});
        if (!w || !satisfies(rows, *w)) continue;
        Vec3 clamped{std::max(0.0, (*w)[0]), std::max(0.0, (*w)[1]), std::max(0.0, (*w)[2])};
        const double obj = clamped[0] + clamped[1] + clamped[2];
        if (obj < best.objective - 1e-12) {
          best.objective = obj;
          best.w = clamped;
        }
      }
    }
  }
  return best;
}

}  // namespace digifix
