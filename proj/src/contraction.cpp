#include "digifix/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "digifix/lp3.hpp"

namespace digifix {

namespace {

// Admissible (a, b, c) triples at which the universally quantified Reich forms
// are evaluated. The zero corner decides the verdict; the others only add checks.
constexpr std::array<std::array<double, 3>, 5> kAdmissibleTriples{{
    {0.0, 0.0, 0.0},
    {0.0, 0.0, 0.5},
    {0.25, 0.25, 0.25},
    {0.9, 0.0, 0.0},
    {0.0, 0.45, 0.45},
}};

bool approx_le(double lhs, double rhs) { return lhs <= rhs + kTolerance * std::max(1.0, std::abs(rhs)); }

ReichWitness from_lp(const Lp3Solution& sol) {
  ReichWitness out;
  if (!sol.bounded_feasible) return out;
  out.sum = sol.objective;
  out.coeffs = sol.w;
  out.feasible = sol.objective < 1.0 - kTolerance;
  return out;
}

}  // namespace

BanachModulus banach_modulus(const DistanceMatrix& dm, const SelfMap& f) {
  BanachModulus out;
  const std::size_t n = dm.size();
  if (dm.exact()) {
    Ratio best{0, 1};
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        const Ratio r{dm.payload(f(x), f(y)), dm.payload(x, y)};
        if (best < r) best = r;
      }
    }
    const int e = *dm.metric().exponent();
    out.power_ratio = best;
    out.gamma = e == 1 ? best.value() : e == 2 ? std::sqrt(best.value()) : std::pow(best.value(), 1.0 / e);
    out.is_banach = best.num < best.den;
    return out;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) out.gamma = std::max(out.gamma, dm.value(f(x), f(y)) / dm.value(x, y));
  }
  out.is_banach = out.gamma < 1.0 - kTolerance;
  return out;
}

BanachModulus banach_modulus(const Metric& m, const DigitalImage& img, const SelfMap& f) {
  f.check_against(img);
  return banach_modulus(DistanceMatrix(m, img), f);
}

bool is_distance_decreasing(const DistanceMatrix& dm, const SelfMap& f) {
  for (std::size_t x = 0; x < dm.size(); ++x) {
    for (std::size_t y = x + 1; y < dm.size(); ++y) {
      if (!dm.less(f(x), f(y), x, y)) return false;
    }
  }
  return true;
}

bool is_distance_decreasing(const Metric& m, const DigitalImage& img, const SelfMap& f) {
  f.check_against(img);
  return is_distance_decreasing(DistanceMatrix(m, img), f);
}

KannanModulus kannan_modulus(const DistanceMatrix& dm, const SelfMap& f) {
  KannanModulus out;
  const std::size_t n = dm.size();
  if (dm.metric().integer_valued()) {
    Ratio best{0, 1};
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        const std::int64_t num = dm.payload(f(x), f(y));
        if (num == 0) continue;
        const Ratio r{num, dm.payload(x, f(x)) + dm.payload(y, f(y))};
        if (best < r) best = r;
      }
    }
    out.feasible = best.den != 0;
    out.exact = best;
    out.k = best.value();
    out.is_kannan = out.feasible && 2 * static_cast<__int128>(best.num) < best.den;
    return out;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (dm.is_zero(f(x), f(y))) continue;
      const double den = dm.value(x, f(x)) + dm.value(y, f(y));
      if (dm.is_zero(x, f(x)) && dm.is_zero(y, f(y))) {
        out.feasible = false;
        continue;
      }
      out.k = std::max(out.k, dm.value(f(x), f(y)) / den);
    }
  }
  if (!out.feasible) out.k = std::numeric_limits<double>::infinity();
  out.is_kannan = out.feasible && out.k < 0.5 - kTolerance;
  return out;
}

KannanModulus kannan_modulus(const Metric& m, const DigitalImage& img, const SelfMap& f) {
  f.check_against(img);
  return kannan_modulus(DistanceMatrix(m, img), f);
}

ReichWitness reich_existential_feasible(const DistanceMatrix& dm, const SelfMap& f) {
  std::vector<CoverRow> rows;
  for (std::size_t x = 0; x < dm.size(); ++x) {
    for (std::size_t y = 0; y < dm.size(); ++y) {
      if (x == y) continue;
      rows.push_back({{dm.value(x, f(x)), dm.value(y, f(y)), dm.value(x, y)}, dm.value(f(x), f(y))});
    }
  }
  return from_lp(minimize_cover_sum(rows));
}

ReichWitness reich_existential_feasible(const Metric& m, const DigitalImage& img, const SelfMap& f) {
  f.check_against(img);
  return reich_existential_feasible(DistanceMatrix(m, img), f);
}

bool reich_universal_holds(const DistanceMatrix& dm, const SelfMap& f) {
  for (const auto& [a, b, c] : kAdmissibleTriples) {
    for (std::size_t x = 0; x < dm.size(); ++x) {
      for (std::size_t y = 0; y < dm.size(); ++y) {
        const double rhs = a * dm.value(x, f(x)) + b * dm.value(y, f(y)) + c * dm.value(x, y);
        // At the zero corner the right side is exactly 0, so decide exactly.
        const bool ok = (a == 0 && b == 0 && c == 0) ? dm.is_zero(f(x), f(y)) : approx_le(dm.value(f(x), f(y)), rhs);
        if (!ok) return false;
      }
    }
  }
  return true;
}

bool self_composed_reich_holds(const DistanceMatrix& dm, const SelfMap& f) {
  for (const auto& [a, b, c] : kAdmissibleTriples) {
    for (std::size_t u = 0; u < dm.size(); ++u) {
      for (std::size_t v = 0; v < dm.size(); ++v) {
        const std::size_t fu = f(u), fv = f(v);
        const double rhs = a * dm.value(fu, f(fu)) + b * dm.value(fv, f(fv)) + c * dm.value(fu, fv);
        const bool ok = (a == 0 && b == 0 && c == 0) ? dm.is_zero(fu, fv) : approx_le(dm.value(fu, fv), rhs);
        if (!ok) return false;
      }
    }
  }
  return true;
}

bool is_weakly_commutative(const DistanceMatrix& dm, const SelfMap& s, const SelfMap& t) {
  for (std::size_t x = 0; x < dm.size(); ++x) {
    if (!dm.less_equal(s(t(x)), t(s(x)), s(x), t(x))) return false;
  }
  return true;
}

bool is_weakly_compatible(const SelfMap& s, const SelfMap& t) {
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (s(x) == t(x) && s(t(x)) != t(s(x))) return false;
  }
  return true;
}

bool image_contained(const SelfMap& j, const SelfMap& k) {
  const IndexSet all = SelfMap::identity(j.size()).table();
  const IndexSet jx = image_of(j, all);
  const IndexSet kx = image_of(k, all);
  return std::includes(kx.begin(), kx.end(), jx.begin(), jx.end());
}

bool pair_inequality_holds(const DistanceMatrix& dm, const SelfMap& j, const SelfMap& k,
                           const std::array<double, 3>& xi) {
  for (std::size_t u = 0; u < dm.size(); ++u) {
    for (std::size_t q = 0; q < dm.size(); ++q) {
      const double rhs = xi[0] * dm.value(k(u), k(q)) + xi[1] * dm.value(k(u), j(u)) + xi[2] * dm.value(k(q), j(q));
      if (dm.is_zero(j(u), j(q))) continue;
      if (!approx_le(dm.value(j(u), j(q)), rhs)) return false;
    }
  }
  return true;
}

ReichWitness pair_coefficients(const DistanceMatrix& dm, const SelfMap& j, const SelfMap& k) {
  std::vector<CoverRow> rows;
  for (std::size_t u = 0; u < dm.size(); ++u) {
    for (std::size_t q = 0; q < dm.size(); ++q) {
      rows.push_back({{dm.value(k(u), k(q)), dm.value(k(u), j(u)), dm.value(k(q), j(q))}, dm.value(j(u), j(q))});
    }
  }
  return from_lp(minimize_cover_sum(rows));
}

bool four_map_inequality_holds(const DistanceMatrix& dm, const SelfMap& j, const SelfMap& k, const SelfMap& l,
                               const SelfMap& m, double xi) {
  for (std::size_t u = 0; u < dm.size(); ++u) {
    for (std::size_t q = 0; q < dm.size(); ++q) {
      if (dm.is_zero(j(u), k(q))) continue;
      if (!approx_le(dm.value(j(u), k(q)), xi * dm.value(l(u), m(q)))) return false;
    }
  }
  return true;
}

std::optional<double> four_map_min_xi(const DistanceMatrix& dm, const SelfMap& j, const SelfMap& k,
                                      const SelfMap& l, const SelfMap& m) {
  double best = 0.0;
  for (std::size_t u = 0; u < dm.size(); ++u) {
    for (std::size_t q = 0; q < dm.size(); ++q) {
      if (dm.is_zero(j(u), k(q))) continue;
      if (dm.is_zero(l(u), m(q))) return std::nullopt;
      best = std::max(best, dm.value(j(u), k(q)) / dm.value(l(u), m(q)));
    }
  }
  return best;
}

ClassificationReport classify(const Metric& m, const DigitalImage& img, const SelfMap& f) {
  f.check_against(img);
  const DistanceMatrix dm(m, img);
  ClassificationReport r;
  r.banach = banach_modulus(dm, f);
  r.distance_decreasing = is_distance_decreasing(dm, f);
  r.kannan = kannan_modulus(dm, f);
  r.reich = reich_existential_feasible(dm, f);
  r.reich_universal = reich_universal_holds(dm, f);
  r.continuous = is_continuous(img, f);
  r.constant = is_constant(f);
  return r;
}

PairReport check_pair(const Metric& m, const DigitalImage& img, const SelfMap& s, const SelfMap& t) {
  s.check_against(img);
  t.check_against(img);
  const DistanceMatrix dm(m, img);
  PairReport r;
  r.weakly_commutative = is_weakly_commutative(dm, s, t);
  r.weakly_compatible = is_weakly_compatible(s, t);
  r.coefficients = pair_coefficients(dm, s, t);
  r.containment = image_contained(s, t);
  return r;
}

}  // namespace digifix
