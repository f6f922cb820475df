#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "digifix/point.hpp"

namespace digifix {

struct AdjacencySpec {
  int u = 1;
};

// A finite ordered set of lattice points with c_u adjacency; the graph (X, kappa).
// Point order defines the indices used by self-maps. Immutable after construction.
class DigitalImage {
 public:
  DigitalImage(std::size_t dim, std::vector<Point> points, AdjacencySpec adjacency);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  AdjacencySpec adjacency() const { return adjacency_; }

  const Point& point(std::size_t i) const { return points_.at(i); }
  const std::vector<Point>& points() const { return points_; }

  std::optional<std::size_t> index_of(const Point& p) const;
  // Throws InputError when p is not a member.
  std::size_t require_index(const Point& p) const;

  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * size() + j] != 0; }
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return neighbors_.at(i); }
  std::size_t degree(std::size_t i) const { return neighbors_.at(i).size(); }

  DigitalImage with_adjacency(int u) const;
  DigitalImage translated(const Point& offset) const;

 private:
  std::size_t dim_;
  std::vector<Point> points_;
  AdjacencySpec adjacency_;
  std::map<Point, std::size_t> index_;
  std::vector<char> adj_;
  std::vector<std::vector<std::size_t>> neighbors_;
};

// Connected components as blocks of indices; blocks ordered by their smallest member.
std::vector<std::vector<std::size_t>> components(const DigitalImage& img);
bool is_connected(const DigitalImage& img);

// Hop count of a shortest path, or nullopt across components.
std::optional<std::size_t> shortest_path_length(const DigitalImage& img, std::size_t from, std::size_t to);
std::optional<std::size_t> shortest_path_length(const DigitalImage& img, const Point& x, const Point& y);

// BFS hop counts from one source; unreachable entries are nullopt.
std::vector<std::optional<std::size_t>> hops_from(const DigitalImage& img, std::size_t source);

// N(x, r): points of x's component within r hops. Always the hop metric,
// whatever metric the caller classifies with.
std::vector<std::size_t> neighborhood(const DigitalImage& img, std::size_t center, std::size_t radius);

// Every adjacent pair sits at squared Euclidean distance exactly u.
// Throws InputError when the image is disconnected.
bool is_uniformly_connected(const DigitalImage& img);

}  // namespace digifix
