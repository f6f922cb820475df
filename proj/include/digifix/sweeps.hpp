#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "digifix/metric.hpp"
#include "digifix/scc.hpp"

namespace digifix {

// Subsets of a window with min_points..max_points points, in lexicographic
// subset order, under c_u. With connected_only, disconnected subsets are skipped.
std::vector<DigitalImage> window_images(const Window& window, std::size_t min_points, std::size_t max_points, int u,
                                        bool connected_only);

struct SweepChecks {
  bool banach_implies_constant = false;  // contractions on connected c1 images are constant
  bool reich_collapse = false;           // universal Reich forms hold exactly for constants
  bool banach_uniqueness = true;         // one fixed point, collapse within the distance bound
};

struct SweepStats {
  std::uint64_t images = 0;
  std::uint64_t maps = 0;
  std::uint64_t contractions = 0;
  std::uint64_t nonconstant_contractions = 0;
  std::uint64_t fixed_point_violations = 0;
  std::uint64_t collapse_violations = 0;
  std::uint64_t reich_mismatches = 0;
  std::uint64_t self_composed_mismatches = 0;

  SweepStats& operator+=(const SweepStats& o);
  bool operator==(const SweepStats&) const = default;
  std::uint64_t violations() const;
};

// Every map on every image under every metric. Parallel over images.
SweepStats sweep_all_maps(const std::vector<DigitalImage>& images, const std::vector<Metric>& metrics,
                          const SweepChecks& checks);
// Serial version of the same kernel, used to cross-check the parallel one.
SweepStats sweep_all_maps_reference(const std::vector<DigitalImage>& images, const std::vector<Metric>& metrics,
                                    const SweepChecks& checks);

}  // namespace digifix
