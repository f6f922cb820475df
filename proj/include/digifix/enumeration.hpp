#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "digifix/metric.hpp"
#include "digifix/selfmap.hpp"

namespace digifix {

inline constexpr std::size_t kDefaultEnumerationCap = 7;

struct EnumerationOptions {
  std::size_t cap = kDefaultEnumerationCap;
  bool require_continuous = false;
};

// Visits all |X|^|X| tables in lexicographic order. Return false from the
// visitor to stop early.
void for_each_self_map(std::size_t n, const std::function<bool(const SelfMap&)>& visit);

// Number of self-maps, |X|^|X|.
std::uint64_t map_space_size(std::size_t n);

// All maps with gamma* < 1 in lexicographic table order, by a backtracking
// search that rejects a partial table as soon as one pair fails to shrink.
// Throws CapExceeded above options.cap points.
std::vector<SelfMap> enumerate_contractions(const DistanceMatrix& dm, const DigitalImage& img,
                                            const EnumerationOptions& options = {});

// Reference: tests every table with banach_modulus. Same output as above.
std::vector<SelfMap> enumerate_contractions_reference(const DistanceMatrix& dm, const DigitalImage& img,
                                                      const EnumerationOptions& options = {});

struct ComplexityResult {
  std::size_t c_sharp = 0;           // 0 when no contraction qualifies
  std::optional<SelfMap> witness;    // lexicographically first map attaining c_sharp
  std::uint64_t maps_enumerated = 0; // size of the exhaustively covered map space
  std::uint64_t contractions = 0;
};

// Steps until |f^m(X)| = 1 for a contraction f (0 for a singleton X).
std::size_t collapse_depth(const SelfMap& f);

// Max over contractions of the minimal m with |f^{m-1}(X)| > 1 and |f^m(X)| = 1.
// OpenMP-parallel over the value of f(x_0); the merge is a max with ties going
// to the smaller table, so the result matches c_sharp_reference exactly.
ComplexityResult c_sharp(const Metric& metric, const DigitalImage& img, const EnumerationOptions& options = {});
ComplexityResult c_sharp(const DistanceMatrix& dm, const DigitalImage& img, const EnumerationOptions& options = {});

// Serial brute force over every table; kept as the oracle for c_sharp.
ComplexityResult c_sharp_reference(const DistanceMatrix& dm, const DigitalImage& img,
                                   const EnumerationOptions& options = {});

}  // namespace digifix
