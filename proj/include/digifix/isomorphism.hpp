#pragma once

#include <cstddef>
#include <vector>

#include "digifix/image.hpp"

namespace digifix {

inline constexpr std::size_t kIsomorphismCap = 10;

struct Isomorphism {
  bool isomorphic = false;
  std::vector<std::size_t> mapping;  // index in a -> index in b
};

// Graph isomorphism of the two adjacency graphs by backtracking with degree
// pruning. Throws CapExceeded when either image has more than `cap` points.
Isomorphism find_isomorphism(const DigitalImage& a, const DigitalImage& b, std::size_t cap = kIsomorphismCap);

}  // namespace digifix
