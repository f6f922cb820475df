#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "digifix/enumeration.hpp"
#include "digifix/image.hpp"

namespace digifix {

// Inclusive axis-aligned box of lattice points.
struct Window {
  std::vector<Coord> lo;
  std::vector<Coord> hi;

  // "5x5" -> [0,4] x [0,4].
  static Window parse(std::string_view text);
  static Window cube(std::size_t dim, Coord side);
  std::size_t dim() const { return lo.size(); }
  std::vector<Point> points() const;  // lexicographic order
};

// Connected and 2-regular: the adjacency graph is a single induced cycle.
// Throws InputError when |X| < 4.
bool is_simple_closed_curve(const DigitalImage& img);

struct SccSearchResult {
  bool found = false;
  bool budget_exhausted = false;
  std::vector<Point> curve;  // cyclic order
  std::size_t length = 0;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultSccBudget = 50'000'000;

// Deterministic backtracking search for an induced cycle of `length` points
// under c_u inside the window. The curve starts at its smallest window point.
SccSearchResult find_scc(std::size_t dim, int u, std::size_t length, const Window& window,
                         std::uint64_t budget = kDefaultSccBudget);

// Every induced cycle of the given length in the window, each listed once,
// starting at its smallest point and oriented toward the smaller neighbour.
std::vector<std::vector<Point>> enumerate_sccs(std::size_t dim, int u, std::size_t length, const Window& window);

struct NeighborhoodBound {
  bool premise = false;     // every contraction maps X into N(x', 1) of its fixed point
  std::size_t c_sharp = 0;
  bool bound_holds = true;  // c_sharp <= 3, meaningful when the premise holds
  std::uint64_t contractions = 0;
};

// Euclidean contractions of a simple closed curve: premise f(X) in N(x',1)
// and the resulting bound C# <= 3. Throws InputError when img is not a curve.
NeighborhoodBound scc_neighborhood_bound(const DigitalImage& img, const EnumerationOptions& options = {});

}  // namespace digifix
