#include "digifix/image.hpp"

#include <algorithm>
#include <deque>

#include "digifix/errors.hpp"

namespace digifix {

DigitalImage::DigitalImage(std::size_t dim, std::vector<Point> points, AdjacencySpec adjacency)
    : dim_(dim), points_(std::move(points)), adjacency_(adjacency) {
  if (dim_ == 0) throw InputError("image dimension must be at least 1");
  if (adjacency_.u < 1 || static_cast<std::size_t>(adjacency_.u) > dim_) {
    throw InputError("adjacency c_" + std::to_string(adjacency_.u) + " is not defined in dimension " +
                     std::to_string(dim_));
  }
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].dim() != dim_) {
      throw InputError("point " + std::to_string(i) + " " + points_[i].to_string() + " does not have " +
                       std::to_string(dim_) + " coordinates");
    }
    if (!index_.emplace(points_[i], i).second) {
      throw InputError("duplicate point " + points_[i].to_string() + " at index " + std::to_string(i));
    }
  }
  const std::size_t n = points_.size();
  adj_.assign(n * n, 0);
  neighbors_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cu_adjacent(points_[i], points_[j], adjacency_.u)) {
        adj_[i * n + j] = adj_[j * n + i] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (adj_[i * n + j]) neighbors_[i].push_back(j);
    }
  }
}

std::optional<std::size_t> DigitalImage::index_of(const Point& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t DigitalImage::require_index(const Point& p) const {
  auto idx = index_of(p);
  if (!idx) throw InputError("point " + p.to_string() + " is not in the image");
  return *idx;
}

DigitalImage DigitalImage::with_adjacency(int u) const { return DigitalImage(dim_, points_, AdjacencySpec{u}); }

DigitalImage DigitalImage::translated(const Point& offset) const {
  std::vector<Point> moved;
  moved.reserve(points_.size());
  for (const auto& p : points_) moved.push_back(p + offset);
  return DigitalImage(dim_, std::move(moved), adjacency_);
}

std::vector<std::optional<std::size_t>> hops_from(const DigitalImage& img, std::size_t source) {
  std::vector<std::optional<std::size_t>> dist(img.size());
  std::deque<std::size_t> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : img.neighbors(v)) {
      if (!dist[w]) {
        dist[w] = *dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<std::size_t>> components(const DigitalImage& img) {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<bool> seen(img.size(), false);
  for (std::size_t s = 0; s < img.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> block;
    const auto dist = hops_from(img, s);
    for (std::size_t v = 0; v < img.size(); ++v) {
      if (dist[v]) {
        block.push_back(v);
        seen[v] = true;
      }
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

bool is_connected(const DigitalImage& img) { return components(img).size() <= 1; }

std::optional<std::size_t> shortest_path_length(const DigitalImage& img, std::size_t from, std::size_t to) {
  if (from >= img.size() || to >= img.size()) throw InputError("point index out of range");
  return hops_from(img, from)[to];
}

std::optional<std::size_t> shortest_path_length(const DigitalImage& img, const Point& x, const Point& y) {
  return shortest_path_length(img, img.require_index(x), img.require_index(y));
}

std::vector<std::size_t> neighborhood(const DigitalImage& img, std::size_t center, std::size_t radius) {
  if (center >= img.size()) throw InputError("point index out of range");
  const auto dist = hops_from(img, center);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < img.size(); ++v) {
    if (dist[v] && *dist[v] <= radius) out.push_back(v);
  }
  return out;
}

bool is_uniformly_connected(const DigitalImage& img) {
  if (!is_connected(img)) throw InputError("uniform connectedness is defined for connected images only");
  const auto u = static_cast<Coord>(img.adjacency().u);
  for (std::size_t i = 0; i < img.size(); ++i) {
    for (std::size_t j : img.neighbors(i)) {
      // Adjacent coordinates differ by 0 or 1, so the squared distance is the count of differing ones.
      Coord sq = 0;
      for (std::size_t k = 0; k < img.dim(); ++k) sq += img.point(i)[k] != img.point(j)[k] ? 1 : 0;
      if (sq != u) return false;
    }
  }
  return true;
}

}  // namespace digifix
