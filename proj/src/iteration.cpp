#include "digifix/iteration.hpp"

#include <sstream>
#include <stdexcept>

#include "digifix/contraction.hpp"
#include "digifix/errors.hpp"

namespace digifix {

namespace {

void check_start(const DistanceMatrix& dm, std::size_t start) {
  if (start >= dm.size()) throw InputError("start index " + std::to_string(start) + " is out of range");
}

void check_sizes(const DistanceMatrix& dm, std::initializer_list<const SelfMap*> maps) {
  for (const SelfMap* m : maps) {
    if (m->size() != dm.size()) throw InputError("map size does not match the image");
  }
}

// Lowest index i with g(i) == target.
std::optional<std::size_t> lowest_preimage(const SelfMap& g, std::size_t target) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g(i) == target) return i;
  }
  return std::nullopt;
}

std::string describe(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Iteration caps. The proofs guarantee strictly shrinking steps, so these are never hit on valid input.
std::size_t iteration_cap(std::size_t n) { return 4 * n + 8; }

}  // namespace

KannanResult kannan_fixed_point(const DistanceMatrix& dm, const SelfMap& f, std::size_t start) {
  check_sizes(dm, {&f});
  check_start(dm, start);
  const KannanModulus km = kannan_modulus(dm, f);
  if (!km.is_kannan) {
    throw PremiseViolation({km.feasible ? "map is not a Kannan contraction: k* = " + describe(km.k) + " is not below 1/2"
                                        : "map is not a Kannan contraction: no finite k exists"});
  }
  KannanResult out;
  out.orbit.push_back(start);
  for (std::size_t step = 0;; ++step) {
    if (step > iteration_cap(dm.size())) throw std::logic_error("Kannan iteration failed to stabilize");
    const std::size_t next = f(out.orbit.back());
    const bool repeat = next == out.orbit.back();
    out.orbit.push_back(next);
    if (repeat) break;
  }
  out.fixed_point = out.orbit.back();
  out.stabilization_index = is_eventually_constant({out.orbit, std::nullopt}).index;
  out.unique = fixed_points(f) == IndexSet{out.fixed_point};
  return out;
}

PairFixedPoint common_fixed_point_pair(const DistanceMatrix& dm, const SelfMap& j, const SelfMap& k,
                                       const std::array<double, 3>& xi, std::size_t start) {
  check_sizes(dm, {&j, &k});
  check_start(dm, start);
  std::vector<std::string> violated;
  if (xi[0] < 0 || xi[1] < 0 || xi[2] < 0 || !(xi[0] + xi[1] + xi[2] < 1.0)) {
    violated.push_back("coefficients must be non-negative with sum below 1");
  }
  if (!image_contained(j, k)) violated.push_back("J(X) is not contained in K(X)");
  if (!is_weakly_commutative(dm, j, k)) violated.push_back("J and K are not weakly commutative");
  if (!pair_inequality_holds(dm, j, k, xi)) violated.push_back("the three-coefficient inequality fails at the given coefficients");
  if (!violated.empty()) throw PremiseViolation(std::move(violated));

  PairFixedPoint out;
  out.preimages.push_back(start);
  for (std::size_t step = 0;; ++step) {
    if (step > iteration_cap(dm.size())) throw std::logic_error("pair iteration failed to stabilize");
    const std::size_t target = j(out.preimages.back());
    out.preimages.push_back(*lowest_preimage(k, target));
    out.values.push_back(target);
    const std::size_t m = out.values.size();
    if (m >= 2 && out.values[m - 1] == out.values[m - 2]) break;
  }
  out.coincidence = out.values.back();
  out.fixed_point = j(out.coincidence);
  out.verified = j(out.fixed_point) == out.fixed_point && k(out.fixed_point) == out.fixed_point;
  std::size_t common = 0;
  for (std::size_t x = 0; x < j.size(); ++x) common += (j(x) == x && k(x) == x) ? 1 : 0;
  out.unique = out.verified && common == 1;
  return out;
}

FourMapFixedPoint common_fixed_point_four(const DistanceMatrix& dm, const SelfMap& j, const SelfMap& k,
                                          const SelfMap& l, const SelfMap& m, double xi, std::size_t start) {
  check_sizes(dm, {&j, &k, &l, &m});
  check_start(dm, start);
  std::vector<std::string> violated;
  if (!(xi > 0.0 && xi < 1.0)) violated.push_back("xi must lie in (0, 1)");
  if (!image_contained(j, m)) violated.push_back("J(X) is not contained in M(X)");
  if (!image_contained(k, l)) violated.push_back("K(X) is not contained in L(X)");
  if (compose(j, l) != compose(l, j)) violated.push_back("J and L do not commute");
  if (compose(k, m) != compose(m, k)) violated.push_back("K and M do not commute");
  if (!four_map_inequality_holds(dm, j, k, l, m, xi)) violated.push_back("d(Ju,Kq) <= xi d(Lu,Mq) fails");
  if (!violated.empty()) throw PremiseViolation(std::move(violated));

  // q_{2n} = J u_{2n} = M u_{2n+1},  q_{2n+1} = K u_{2n+1} = L u_{2n+2}
  FourMapFixedPoint out;
  out.preimages.push_back(start);
  for (std::size_t n = 0;; ++n) {
    if (n > iteration_cap(dm.size())) throw std::logic_error("four-map iteration failed to stabilize");
    const bool even = n % 2 == 0;
    const std::size_t q = even ? j(out.preimages[n]) : k(out.preimages[n]);
    out.values.push_back(q);
    out.preimages.push_back(*lowest_preimage(even ? m : l, q));
    const std::size_t s = out.values.size();
    if (s >= 2 && out.values[s - 1] == out.values[s - 2]) break;
  }
  out.sigma = out.values.back();
  const std::size_t s = out.sigma;
  out.verified = j(s) == s && k(s) == s && l(s) == s && m(s) == s;
  std::size_t common = 0;
  for (std::size_t x = 0; x < j.size(); ++x) common += (j(x) == x && k(x) == x && l(x) == x && m(x) == x) ? 1 : 0;
  out.unique = out.verified && common == 1;
  return out;
}

LmCollapse lm_collapse_check(const Metric& metric, const DigitalImage& img, const SelfMap& j, const SelfMap& k,
                             const SelfMap& l, double xi) {
  j.check_against(img);
  k.check_against(img);
  l.check_against(img);
  const DistanceMatrix dm(metric, img);
  std::vector<std::string> violated;
  if (!(xi > 0.0 && xi < 1.0)) violated.push_back("xi must lie in (0, 1)");
  if (!four_map_inequality_holds(dm, j, k, l, l, xi)) violated.push_back("d(Ju,Kq) <= xi d(Lu,Lq) fails");
  if (!violated.empty()) throw PremiseViolation(std::move(violated));

  LmCollapse out;
  out.j_equals_k = j == k;
  const DigitalImage c1 = img.with_adjacency(1);
  out.constancy_applies = is_connected(c1) && is_continuous(c1, l);
  out.j_constant = is_constant(j);
  out.passed = out.j_equals_k && (!out.constancy_applies || out.j_constant);
  return out;
}

SingletonCollapse singleton_collapse(const DistanceMatrix& dm, const SelfMap& f) {
  check_sizes(dm, {&f});
  if (!is_distance_decreasing(dm, f)) throw PremiseViolation({"map is not distance-decreasing"});
  SingletonCollapse out;
  IndexSet current = SelfMap::identity(f.size()).table();
  while (current.size() > 1) {
    current = image_of(f, current);
    ++out.steps;
    if (out.steps > iteration_cap(dm.size())) throw std::logic_error("image sequence failed to collapse");
  }
  out.fixed_point = current.front();
  out.bound = dm.distinct_positive().size();
  return out;
}

bool uniformly_connected_collapse_check(const DigitalImage& img, const SelfMap& f) {
  f.check_against(img);
  std::vector<std::string> violated;
  if (!is_connected(img)) {
    violated.push_back("image is not connected");
  } else if (!is_uniformly_connected(img)) {
    violated.push_back("image is not uniformly c_u-connected");
  }
  if (!is_continuous(img, f)) violated.push_back("map is not c_u-continuous");
  if (!banach_modulus(Metric::l2(), img, f).is_banach) violated.push_back("map is not a Euclidean contraction");
  if (!violated.empty()) throw PremiseViolation(std::move(violated));
  return is_constant(f);
}

}  // namespace digifix
