#pragma once

#include <cmath>
#include <cstdlib>
#include <random>
#include <set>
#include <vector>

#include "digifix/image.hpp"
#include "digifix/selfmap.hpp"

namespace digifix::fixtures {

inline DigitalImage five_dim_example() {
  return DigitalImage(5, {Point{0, 0, 0, 0, 0}, Point{2, 0, 0, 0, 0}, Point{1, 1, 1, 1, 1}}, AdjacencySpec{5});
}

inline SelfMap five_dim_map() { return SelfMap({0, 0, 1}); }

// c_u adjacency straight from the definition: distinct, every coordinate
// differs by at most 1, and at most u coordinates differ.
inline bool oracle_adjacent(const Point& a, const Point& b, int u) {
  int differing = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto gap = std::llabs(a[i] - b[i]);
    if (gap > 1) return false;
    differing += gap == 1 ? 1 : 0;
  }
  return differing >= 1 && differing <= u;
}

inline double oracle_lp(const Point& a, const Point& b, double p) {
  double s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::pow(std::abs(static_cast<double>(a[i] - b[i])), p);
  return std::pow(s, 1.0 / p);
}

// Random image with up to max_points distinct points in [0, side)^dim.
inline DigitalImage random_image(std::mt19937_64& rng, std::size_t dim, int side, std::size_t max_points, int u) {
  std::uniform_int_distribution<int> coord(0, side - 1);
  std::uniform_int_distribution<std::size_t> count(1, max_points);
  const std::size_t target = count(rng);
  std::set<std::vector<Coord>> seen;
  std::vector<Point> pts;
  for (int tries = 0; pts.size() < target && tries < 1000; ++tries) {
    std::vector<Coord> c(dim);
    for (auto& x : c) x = coord(rng);
    if (seen.insert(c).second) pts.emplace_back(c);
  }
  return DigitalImage(dim, pts, AdjacencySpec{u});
}

}  // namespace digifix::fixtures
