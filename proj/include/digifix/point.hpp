#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace digifix {

using Coord = std::int64_t;

/// A lattice point in Z^n.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Coord> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Coord> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Coord> coords() const { return coords_; }

  Point operator+(const Point& offset) const;

  auto operator<=>(const Point&) const = default;
  bool operator==(const Point&) const = default;

  std::string to_string() const;

 private:
  std::vector<Coord> coords_;
};

/// c_u adjacency: x != y, at most u coordinates differ by exactly 1 and the
/// rest agree. Throws InputError on dimension mismatch or u outside [1, n].
bool cu_adjacent(const Point& x, const Point& y, int u);

}  // namespace digifix
