#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "digifix/metric.hpp"
#include "digifix/selfmap.hpp"

namespace digifix {

// Picard iteration x_{n+1} = f(x_n) for a Kannan map, run until it is eventually constant.
struct KannanResult {
  std::size_t fixed_point = 0;
  std::vector<std::size_t> orbit;
  std::size_t stabilization_index = 0;
  bool unique = false;  // Fix(f) is exactly {fixed_point}
};

// Throws PremiseViolation when f is not a Kannan map, InputError on a bad start index.
KannanResult kannan_fixed_point(const DistanceMatrix& dm, const SelfMap& f, std::size_t start);

struct PairFixedPoint {
  std::size_t fixed_point = 0;      // Ja
  std::size_t coincidence = 0;      // a, the eventual value of K u_n
  std::vector<std::size_t> preimages;  // u_0, u_1, ...
  std::vector<std::size_t> values;     // K u_1, K u_2, ...
  bool verified = false;            // J and K both fix the result
  bool unique = false;
};

// Common fixed point of J, K under J(X) in K(X), weak commutativity and the
// three-coefficient inequality. Builds K u_n = J u_{n-1}, choosing the
// lowest-index preimage. Throws PremiseViolation listing every failed premise.
PairFixedPoint common_fixed_point_pair(const DistanceMatrix& dm, const SelfMap& j, const SelfMap& k,
                                       const std::array<double, 3>& xi, std::size_t start);

struct FourMapFixedPoint {
  std::size_t sigma = 0;
  std::vector<std::size_t> preimages;  // u_n
  std::vector<std::size_t> values;     // q_n
  bool verified = false;
  bool unique = false;
};

// Common fixed point of J, K, L, M with J(X) in M(X), K(X) in L(X),
// JL = LJ, KM = MK and d(Ju,Kq) <= xi d(Lu,Mq), 0 < xi < 1.
FourMapFixedPoint common_fixed_point_four(const DistanceMatrix& dm, const SelfMap& j, const SelfMap& k,
                                          const SelfMap& l, const SelfMap& m, double xi, std::size_t start);

struct LmCollapse {
  bool j_equals_k = false;
  bool constancy_applies = false;  // c1-connected image and c1-continuous L
  bool j_constant = false;
  bool passed = false;
};

// With L = M the four-map inequality forces J = K, and J constant when the
// image is c1-connected and L is c1-continuous. Throws PremiseViolation when
// the inequality fails at xi. The metric must be an l_p metric or the hop metric.
LmCollapse lm_collapse_check(const Metric& metric, const DigitalImage& img, const SelfMap& j, const SelfMap& k,
                             const SelfMap& l, double xi);

struct SingletonCollapse {
  std::size_t steps = 0;        // minimal n with |f^n(X)| = 1
  std::size_t fixed_point = 0;
  std::size_t bound = 0;        // number of distinct positive distances
};

// Throws PremiseViolation unless f is distance-decreasing.
SingletonCollapse singleton_collapse(const DistanceMatrix& dm, const SelfMap& f);

// Checks that a c_u-continuous Euclidean contraction on a uniformly c_u-connected
// image is constant. Throws PremiseViolation when a hypothesis fails.
bool uniformly_connected_collapse_check(const DigitalImage& img, const SelfMap& f);

}  // namespace digifix
