#pragma once

#include <array>
#include <optional>

#include "digifix/metric.hpp"
#include "digifix/selfmap.hpp"

namespace digifix {

/// Optimal Banach constant gamma* = max_{x != y} d(fx,fy) / d(x,y).
///
/// For exact metrics `power_ratio` holds the p-th power of gamma* as an
/// integer ratio, so `is_banach` (gamma* < 1) is decided without rounding.
struct BanachModulus {
  double gamma = 0.0;
  std::optional<Ratio> power_ratio;
  bool is_banach = true;
};

BanachModulus banach_modulus(const DistanceMatrix& dm, const SelfMap& f);
BanachModulus banach_modulus(const Metric& m, const DigitalImage& img, const SelfMap& f);

// d(fx,fy) < d(x,y) for every x != y.
bool is_distance_decreasing(const DistanceMatrix& dm, const SelfMap& f);
bool is_distance_decreasing(const Metric& m, const DigitalImage& img, const SelfMap& f);

/// k* = max_{x != y} d(fx,fy) / (d(x,fx) + d(y,fy)); 0/0 contributes 0 and
/// positive/0 makes the map infeasible. Exact for l1 and the hop metric.
struct KannanModulus {
  bool feasible = true;
  double k = 0.0;
  std::optional<Ratio> exact;
  bool is_kannan = true;  // feasible and k* < 1/2
};

KannanModulus kannan_modulus(const DistanceMatrix& dm, const SelfMap& f);
KannanModulus kannan_modulus(const Metric& m, const DigitalImage& img, const SelfMap& f);

// Minimal a+b+c over non-negative (a,b,c) with
// d(fx,fy) <= a d(x,fx) + b d(y,fy) + c d(x,y) for all x, y.
struct ReichWitness {
  bool feasible = false;  // the minimum is < 1
  double sum = 0.0;
  std::array<double, 3> coeffs{0.0, 0.0, 0.0};
};

ReichWitness reich_existential_feasible(const DistanceMatrix& dm, const SelfMap& f);
ReichWitness reich_existential_feasible(const Metric& m, const DigitalImage& img, const SelfMap& f);

// The inequality demanded for *every* admissible (a,b,c). Its right side is
// monotone in a, b, c, so it suffices to test the admissible corner (0,0,0).
bool reich_universal_holds(const DistanceMatrix& dm, const SelfMap& f);
// Same quantifier applied to d(Fu,Fv) <= a d(Fu,FFu) + b d(Fv,FFv) + c d(Fu,Fv).
bool self_composed_reich_holds(const DistanceMatrix& dm, const SelfMap& f);

// d(S(T(x)), T(S(x))) <= d(S(x), T(x)) for all x.
bool is_weakly_commutative(const DistanceMatrix& dm, const SelfMap& s, const SelfMap& t);
// For every x with Sx = Tx, STx = TSx.
bool is_weakly_compatible(const SelfMap& s, const SelfMap& t);
// j(X) is a subset of k(X).
bool image_contained(const SelfMap& j, const SelfMap& k);

// d(Ju,Jq) <= x1 d(Ku,Kq) + x2 d(Ku,Ju) + x3 d(Kq,Jq) for all u, q.
bool pair_inequality_holds(const DistanceMatrix& dm, const SelfMap& j, const SelfMap& k,
                           const std::array<double, 3>& xi);
// Minimal-sum coefficients for the pair inequality, found by the same LP as Reich.
ReichWitness pair_coefficients(const DistanceMatrix& dm, const SelfMap& j, const SelfMap& k);

// d(Ju,Kq) <= xi d(Lu,Mq) for all u, q.
bool four_map_inequality_holds(const DistanceMatrix& dm, const SelfMap& j, const SelfMap& k,
                               const SelfMap& l, const SelfMap& m, double xi);
// Smallest xi with the four-map inequality holding (nullopt when no finite xi works).
std::optional<double> four_map_min_xi(const DistanceMatrix& dm, const SelfMap& j, const SelfMap& k,
                                      const SelfMap& l, const SelfMap& m);

struct ClassificationReport {
  BanachModulus banach;
  bool distance_decreasing = false;
  KannanModulus kannan;
  ReichWitness reich;
  bool reich_universal = false;
  bool continuous = false;
  bool constant = false;
};

ClassificationReport classify(const Metric& m, const DigitalImage& img, const SelfMap& f);

struct PairReport {
  bool weakly_commutative = false;
  bool weakly_compatible = false;
  ReichWitness coefficients;  // for the pair inequality
  bool containment = false;   // S(X) within T(X)
};

PairReport check_pair(const Metric& m, const DigitalImage& img, const SelfMap& s, const SelfMap& t);

}  // namespace digifix
