#include "digifix/suite.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "digifix/contraction.hpp"
#include "digifix/errors.hpp"
#include "digifix/isomorphism.hpp"
#include "digifix/iteration.hpp"
#include "digifix/lattice_witness.hpp"
#include "digifix/sweeps.hpp"

namespace digifix {

namespace {

constexpr const char* kReported = "reported";
constexpr const char* kDerived = "derived";
constexpr const char* kTrivial = "trivial";

class Recorder {
 public:
  void equal(std::string name, json expected, json actual, const char* provenance) {
    const bool ok = expected == actual;
    push(std::move(name), std::move(expected), std::move(actual), provenance, ok);
  }
  void near(std::string name, double expected, double actual, double tol, const char* provenance) {
    push(std::move(name), expected, actual, provenance, std::abs(expected - actual) <= tol);
  }
  void holds(std::string name, bool actual, const char* provenance) {
    push(std::move(name), true, actual, provenance, actual);
  }

  ScenarioOutcome finish(std::string id, std::string title, json caps = json::object()) {
    ScenarioOutcome out;
    out.id = std::move(id);
    out.title = std::move(title);
    out.caps = std::move(caps);
    out.status = std::all_of(items_.begin(), items_.end(), [](const Assertion& a) { return a.pass; })
                     ? ScenarioStatus::Pass
                     : ScenarioStatus::Fail;
    out.assertions = std::move(items_);
    return out;
  }

 private:
  void push(std::string name, json expected, json actual, const char* provenance, bool ok) {
    items_.push_back({std::move(name), std::move(expected), std::move(actual), provenance, ok});
  }

  std::vector<Assertion> items_;
};

DigitalImage five_dim_example() {
  return DigitalImage(5, {Point{0, 0, 0, 0, 0}, Point{2, 0, 0, 0, 0}, Point{1, 1, 1, 1, 1}}, AdjacencySpec{5});
}

json stats_json(const SweepStats& s) {
  return {{"images", s.images},
          {"maps", s.maps},
          {"contractions", s.contractions},
          {"nonconstant_contractions", s.nonconstant_contractions},
          {"fixed_point_violations", s.fixed_point_violations},
          {"collapse_violations", s.collapse_violations},
          {"reich_mismatches", s.reich_mismatches},
          {"self_composed_mismatches", s.self_composed_mismatches}};
}

json metric_names(const std::vector<Metric>& metrics) {
  json out = json::array();
  for (const auto& m : metrics) out.push_back(m.name());
  return out;
}

ScenarioOutcome non_continuous_contraction() {
  Recorder r;
  const DigitalImage img = five_dim_example();
  const SelfMap f({0, 0, 1});
  const Metric l2 = Metric::l2();
  const DistanceMatrix dm(l2, img);

  r.equal("squared d(x0,x1)", 4, dm.payload(0, 1), kReported);
  r.equal("squared d(x0,x2)", 5, dm.payload(0, 2), kReported);
  r.equal("squared d(x1,x2)", 5, dm.payload(1, 2), kReported);
  r.holds("c5-connected", is_connected(img), kReported);

  const auto report = classify(l2, img, f);
  r.equal("gamma* squared as exact ratio", json::array({4, 5}),
          json::array({report.banach.power_ratio->num, report.banach.power_ratio->den}), kReported);
  r.near("gamma* = 2/sqrt(5)", 2.0 / std::sqrt(5.0), report.banach.gamma, 1e-12, kReported);
  r.equal("is digital contraction", true, report.banach.is_banach, kReported);
  r.equal("c5-continuous", false, report.continuous, kReported);
  r.equal("uniformly c5-connected", true, is_uniformly_connected(img), kReported);
  r.equal("|f(X)|", 2, image_of(f, SelfMap::identity(3).table()).size(), kReported);
  r.equal("Fix(f)", json::array({0}), fixed_points(f), kReported);
  r.holds("existential Reich with a = b = 0, c = 2/sqrt(5)",
          report.reich.feasible && std::abs(report.reich.coeffs[0]) < 1e-9 && std::abs(report.reich.coeffs[1]) < 1e-9 &&
              std::abs(report.reich.coeffs[2] - 2.0 / std::sqrt(5.0)) < 1e-9,
          kReported);
  r.equal("universal Reich form", false, report.reich_universal, kReported);
  r.equal("Kannan (k* = 2/sqrt(5) > 1/2)", false, report.kannan.is_kannan, kDerived);
  r.equal("C#(X, c5)", 2, c_sharp(l2, img).c_sharp, kDerived);
  return r.finish("S1", "non-continuous Euclidean contraction on a uniformly c5-connected image");
}

ScenarioOutcome powers_of_two() {
  Recorder r;
  constexpr int kN = 30;
  const auto rep = powers_of_two_window_check(kN);
  r.holds("d(f1, f2^n) < d(1, 2^n)/2 for 1 <= n <= N", rep.strict_half_from_one, kReported);
  r.holds("d(f2^m, f2^n) = 2^(n-1) - 2^(m-1) = d(2^m, 2^n)/2", rep.exact_half_between_powers, kReported);
  r.holds("f(X_N) drops only 2^N", rep.loses_only_top, kDerived);
  r.equal("inequalities checked", kN + kN * (kN + 1) / 2, rep.inequalities_checked, kTrivial);
  return r.finish("S2", "powers-of-two contraction without finite collapse (window N = 30)", {{"N", kN}});
}

ScenarioOutcome odd_curve() {
  Recorder r;
  const Window window = Window::parse("5x5");
  const auto found = find_scc(2, 2, 7, window);
  r.holds("7-point c2 simple closed curve found", found.found, kReported);
  if (found.found) {
    const DigitalImage curve(2, found.curve, AdjacencySpec{2});
    r.holds("curve passes the 2-regular connected check", is_simple_closed_curve(curve), kDerived);
    const auto nbd = neighborhood(curve, 4, 1);
    r.equal("N(x4, 1) = {x3, x4, x5}", json::array({3, 4, 5}), nbd, kReported);
    r.equal("|N(x4, 1)|", 3, nbd.size(), kReported);
    r.equal("hops x3 -> x5", 2, shortest_path_length(curve, 3, 5).value_or(0), kDerived);
    r.equal("curve length is odd", true, found.curve.size() % 2 == 1, kReported);
  }
  json caps{{"window", "5x5"}, {"u", 2}, {"length", 7}, {"nodes", found.nodes}};
  if (found.found) {
    caps["curve"] = json::array();
    for (const auto& p : found.curve) caps["curve"].push_back(std::vector<Coord>(p.coords().begin(), p.coords().end()));
  }
  return r.finish("S3", "odd-length digital simple closed curve", caps);
}

ScenarioOutcome c1_constancy() {
  Recorder r;
  const auto images = window_images(Window::parse("3x3"), 1, 5, 1, true);
  const std::vector<Metric> metrics{Metric::l1(), Metric::l2(), Metric::lp(3), Metric::lp(1.5)};
  SweepChecks checks;
  checks.banach_implies_constant = true;
  const auto stats = sweep_all_maps(images, metrics, checks);
  r.equal("non-constant contractions on connected c1 images", 0, stats.nonconstant_contractions, kReported);
  r.equal("contractions without exactly one fixed point", 0, stats.fixed_point_violations, kReported);
  r.equal("collapse depth above #distinct distances", 0, stats.collapse_violations, kDerived);
  r.holds("sweep covered images", stats.images > 0 && stats.contractions > 0, kTrivial);
  return r.finish("S4", "contractions on connected c1 images are constant",
                  {{"window", "3x3"}, {"max_points", 5}, {"metrics", metric_names(metrics)}, {"stats", stats_json(stats)}});
}

ScenarioOutcome reich_collapse(const SuiteOptions& options) {
  Recorder r;
  const auto images = window_images(Window::parse("3x3"), 1, 4, 2, false);
  const std::vector<Metric> metrics{Metric::l1(), Metric::l2()};
  SweepChecks checks;
  checks.reich_collapse = true;
  const auto stats = sweep_all_maps(images, metrics, checks);
  r.equal("universal Reich form vs constancy mismatches", 0, stats.reich_mismatches, kReported);
  r.equal("self-composed Reich form vs constancy mismatches", 0, stats.self_composed_mismatches, kReported);
  r.equal("contractions without exactly one fixed point", 0, stats.fixed_point_violations, kReported);
  r.equal("collapse depth above #distinct distances", 0, stats.collapse_violations, kDerived);
  json caps{{"window", "3x3"}, {"max_points", 4}, {"metrics", metric_names(metrics)}, {"stats", stats_json(stats)}};

  if (options.seed) {
    // Sampled spot checks on larger images; only run when a seed is given.
    std::mt19937_64 rng(*options.seed);
    const auto pool = Window::parse("4x4").points();
    std::uint64_t mismatches = 0, samples = 0;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Point> pts = pool;
      std::shuffle(pts.begin(), pts.end(), rng);
      pts.resize(6);
      const DigitalImage img(2, pts, AdjacencySpec{2});
      const DistanceMatrix dm(Metric::l2(), img);
      std::uniform_int_distribution<std::size_t> pick(0, 5);
      for (int k = 0; k < 10; ++k) {
        std::vector<std::size_t> t(6);
        for (auto& x : t) x = k % 3 == 0 ? 0 : pick(rng);
        const SelfMap f(t);
        mismatches += reich_universal_holds(dm, f) != is_constant(f) ? 1 : 0;
        mismatches += self_composed_reich_holds(dm, f) != is_constant(f) ? 1 : 0;
        ++samples;
      }
    }
    r.equal("sampled mismatches (seeded)", 0, mismatches, kDerived);
    caps["seed"] = *options.seed;
    caps["samples"] = samples;
  }
  return r.finish("S5", "universally quantified Reich forms force constancy", caps);
}

ScenarioOutcome non_invariance() {
  struct Candidate {
    DigitalImage img;
    std::size_t c_sharp;
    std::string family;
  };
  std::vector<Candidate> candidates;
  const Metric l2 = Metric::l2();
  auto add_family = [&](const Window& w, int u, const std::string& family) {
    for (auto& img : window_images(w, 3, 4, u, true)) {
      const std::size_t c = c_sharp(l2, img).c_sharp;
      candidates.push_back({std::move(img), c, family});
    }
  };
  add_family(Window::parse("5"), 1, "Z c1 window 5");
  add_family(Window::parse("3x3"), 1, "Z^2 c1 window 3x3");
  add_family(Window::parse("3x3"), 2, "Z^2 c2 window 3x3");
  add_family(Window::parse("3x3x3"), 3, "Z^3 c3 window 3x3x3");
  candidates.push_back({five_dim_example(), c_sharp(l2, five_dim_example()).c_sharp, "Z^5 c5 three-point path"});

  std::optional<std::pair<std::size_t, std::size_t>> hit;
  for (std::size_t i = 0; i < candidates.size() && !hit; ++i) {
    for (std::size_t j = 0; j < i && !hit; ++j) {
      if (candidates[i].c_sharp == candidates[j].c_sharp || candidates[i].img.size() != candidates[j].img.size()) continue;
      if (find_isomorphism(candidates[j].img, candidates[i].img).isomorphic) hit = std::make_pair(j, i);
    }
  }

  Recorder r;
  json caps{{"candidates", candidates.size()}, {"points", "3..4"}, {"metric", "l2"}};
  if (!hit) {
    auto out = r.finish("S6", "C# is not an isomorphism invariant", caps);
    out.status = ScenarioStatus::Inconclusive;
    return out;
  }
  const auto& a = candidates[hit->first];
  const auto& b = candidates[hit->second];
  r.holds("isomorphic pair found", true, kReported);
  r.holds("C# differs", a.c_sharp != b.c_sharp, kReported);
  caps["pair"] = {{{"family", a.family}, {"image", image_to_json(a.img)}, {"c_sharp", a.c_sharp}},
                  {{"family", b.family}, {"image", image_to_json(b.img)}, {"c_sharp", b.c_sharp}}};
  return r.finish("S6", "C# is not an isomorphism invariant", caps);
}

ScenarioOutcome pair_iteration() {
  Recorder r;
  const DigitalImage img = five_dim_example();
  const DistanceMatrix dm(Metric::l2(), img);
  const std::size_t n = img.size();

  const auto demo = common_fixed_point_pair(dm, SelfMap::constant(n, 2), SelfMap::identity(n), {0.5, 0, 0}, 0);
  r.equal("J constant at x2, K identity: fixed point", 2, demo.fixed_point, kDerived);
  r.holds("J constant at x2, K identity: verified and unique", demo.verified && demo.unique, kDerived);

  bool rejected = false;
  try {
    common_fixed_point_pair(dm, SelfMap::identity(n), SelfMap::identity(n), {0.5, 0.2, 0.2}, 0);
  } catch (const PremiseViolation&) {
    rejected = true;
  }
  r.holds("J = K = identity rejected", rejected, kTrivial);

  // Every premise-satisfying pair on a 3-point line, from every start.
  const DigitalImage line(1, {Point{0}, Point{1}, Point{3}}, AdjacencySpec{1});
  const DistanceMatrix ldm(Metric::l1(), line);
  std::uint64_t instances = 0, runs = 0, failures = 0, nonconstant = 0;
  for_each_self_map(3, [&](const SelfMap& j) {
    for_each_self_map(3, [&](const SelfMap& k) {
      if (!image_contained(j, k) || !is_weakly_commutative(ldm, j, k)) return true;
      const auto coeffs = pair_coefficients(ldm, j, k);
      if (!coeffs.feasible) return true;
      ++instances;
      nonconstant += is_constant(j) ? 0 : 1;
      for (std::size_t u0 = 0; u0 < 3; ++u0) {
        ++runs;
        const auto res = common_fixed_point_pair(ldm, j, k, coeffs.coeffs, u0);
        failures += (res.verified && res.unique) ? 0 : 1;
      }
      return true;
    });
    return true;
  });
  r.holds("premise-satisfying pairs exist", instances > 0, kTrivial);
  r.equal("runs without a verified unique common fixed point", 0, failures, kReported);
  return r.finish("S7", "common fixed point of a weakly commutative pair",
                  {{"instances", instances}, {"runs", runs}, {"nonconstant_J", nonconstant}});
}

ScenarioOutcome four_map_iteration() {
  Recorder r;
  const DigitalImage img = five_dim_example();
  const DistanceMatrix dm(Metric::l2(), img);
  const std::size_t n = img.size();
  const SelfMap id = SelfMap::identity(n);

  const auto demo = common_fixed_point_four(dm, SelfMap::constant(n, 1), SelfMap::constant(n, 1), id, id, 0.5, 2);
  r.equal("J = K constant at x1, L = M identity: sigma", 1, demo.sigma, kDerived);
  r.holds("sigma fixed by all four maps and unique", demo.verified && demo.unique, kDerived);

  const DigitalImage line(1, {Point{0}, Point{1}, Point{3}}, AdjacencySpec{1});
  const DistanceMatrix ldm(Metric::l1(), line);
  std::vector<SelfMap> maps;
  for_each_self_map(3, [&](const SelfMap& f) {
    maps.push_back(f);
    return true;
  });
  std::uint64_t instances = 0, failures = 0;
  for (const auto& j : maps) {
    for (const auto& m : maps) {
      if (!image_contained(j, m)) continue;
      for (const auto& k : maps) {
        if (compose(k, m) != compose(m, k)) continue;
        for (const auto& l : maps) {
          if (!image_contained(k, l) || compose(j, l) != compose(l, j)) continue;
          const auto xi = four_map_min_xi(ldm, j, k, l, m);
          if (!xi || *xi >= 1.0 - kTolerance) continue;
          ++instances;
          for (std::size_t u0 = 0; u0 < 3; ++u0) {
            const auto res = common_fixed_point_four(ldm, j, k, l, m, std::max(*xi, 0.5), u0);
            failures += (res.verified && res.unique) ? 0 : 1;
          }
        }
      }
    }
  }
  r.holds("premise-satisfying quadruples exist", instances > 0, kTrivial);
  r.equal("runs without a verified unique common fixed point", 0, failures, kReported);

  // L = M collapse on the connected c1 path {0,1,2}.
  const DigitalImage path(1, {Point{0}, Point{1}, Point{2}}, AdjacencySpec{1});
  std::uint64_t premise = 0, collapse_failures = 0, constancy_cases = 0;
  for (const Metric& metric : {Metric::l1(), Metric::l2(), Metric::shortest_path()}) {
    const DistanceMatrix pdm(metric, path);
    for (const auto& j : maps) {
      for (const auto& k : maps) {
        for (const auto& l : maps) {
          const auto xi = four_map_min_xi(pdm, j, k, l, l);
          if (!xi || *xi >= 1.0 - kTolerance) continue;
          ++premise;
          const auto res = lm_collapse_check(metric, path, j, k, l, std::max(*xi, 0.5));
          collapse_failures += res.passed ? 0 : 1;
          constancy_cases += res.constancy_applies ? 1 : 0;
        }
      }
    }
  }
  r.holds("L = M premise instances exist", premise > 0, kTrivial);
  r.holds("continuous-L instances exist", constancy_cases > 0, kTrivial);
  r.equal("L = M instances where J != K or J non-constant", 0, collapse_failures, kReported);
  return r.finish("S8", "common fixed point of four maps and the L = M collapse",
                  {{"instances", instances}, {"lm_instances", premise}, {"lm_constancy_cases", constancy_cases}});
}

ScenarioOutcome halving_escape() {
  Recorder r;
  r.equal("escape of (1)", 1, midpoint_halving_escape(Point{1}), kTrivial);
  r.equal("escape of (4)", 3, midpoint_halving_escape(Point{4}), kDerived);
  r.equal("escape of (6,2)", 2, midpoint_halving_escape(Point{6, 2}), kDerived);
  std::uint64_t checked = 0, bad = 0;
  for (Coord a = -16; a <= 16; ++a) {
    for (Coord b = -16; b <= 16; ++b) {
      if (a == 0 && b == 0) continue;
      const int k = midpoint_halving_escape(Point{a, b});
      // j / 2^(k-1) is integral, j / 2^k is not.
      const Coord before = Coord{1} << (k - 1);
      const Coord at = Coord{1} << k;
      const bool ok = a % before == 0 && b % before == 0 && (a % at != 0 || b % at != 0);
      bad += ok ? 0 : 1;
      ++checked;
    }
  }
  r.equal("every nonzero j in [-16,16]^2 leaves the lattice", 0, bad, kReported);
  bool origin_rejected = false;
  try {
    midpoint_halving_escape(Point{0, 0});
  } catch (const InputError&) {
    origin_rejected = true;
  }
  r.holds("origin never escapes", origin_rejected, kTrivial);
  return r.finish("S9", "midpoint-closed digital image is {0}", {{"box", "[-16,16]^2"}, {"checked", checked}});
}

ScenarioOutcome curve_bound() {
  Recorder r;
  const Window window = Window::parse("5x5");
  EnumerationOptions options;
  options.cap = 8;
  json per_length = json::array();
  std::uint64_t total = 0, premise_true = 0, violations = 0;
  std::size_t max_c = 0;
  for (std::size_t len = 4; len <= 8; ++len) {
    const auto curves = enumerate_sccs(2, 2, len, window);
    std::vector<NeighborhoodBound> results(curves.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(curves.size()); ++i) {
      results[i] = scc_neighborhood_bound(DigitalImage(2, curves[i], AdjacencySpec{2}), options);
    }
    std::uint64_t with_premise = 0;
    for (const auto& res : results) {
      if (!res.premise) continue;
      ++with_premise;
      max_c = std::max(max_c, res.c_sharp);
      violations += res.bound_holds ? 0 : 1;
    }
    total += curves.size();
    premise_true += with_premise;
    per_length.push_back({{"length", len}, {"curves", curves.size()}, {"premise_holds", with_premise}});
  }
  r.holds("curves enumerated", total > 0, kTrivial);
  r.equal("premise-satisfying curves with C# > 3", 0, violations, kReported);
  r.holds("max C# under the premise <= 3", max_c <= 3, kReported);
  return r.finish("S10", "C# <= 3 on simple closed curves with the neighbourhood premise",
                  {{"window", "5x5"}, {"u", 2}, {"lengths", "4..8"}, {"curves", total},
                   {"premise_holds", premise_true}, {"max_c_sharp", max_c}, {"per_length", per_length}});
}

}  // namespace

const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids{"S1", "S2", "S3", "S4", "S5", "S6", "S7", "S8", "S9", "S10"};
  return ids;
}

ScenarioOutcome run_scenario(const std::string& id, const SuiteOptions& options) {
  if (id == "S1") return non_continuous_contraction();
  if (id == "S2") return powers_of_two();
  if (id == "S3") return odd_curve();
  if (id == "S4") return c1_constancy();
  if (id == "S5") return reich_collapse(options);
  if (id == "S6") return non_invariance();
  if (id == "S7") return pair_iteration();
  if (id == "S8") return four_map_iteration();
  if (id == "S9") return halving_escape();
  if (id == "S10") return curve_bound();
  throw InputError("unknown scenario '" + id + "'");
}

std::vector<ScenarioOutcome> run_paper_suite(const SuiteOptions& options) {
  for (const auto& id : options.only) {
    if (std::find(scenario_ids().begin(), scenario_ids().end(), id) == scenario_ids().end()) {
      throw InputError("unknown scenario '" + id + "'");
    }
  }
  std::vector<ScenarioOutcome> out;
  for (const auto& id : scenario_ids()) {
    if (options.only.empty() || std::find(options.only.begin(), options.only.end(), id) != options.only.end()) {
      out.push_back(run_scenario(id, options));
    }
  }
  return out;
}

std::string status_name(ScenarioStatus status) {
  switch (status) {
    case ScenarioStatus::Pass: return "pass";
    case ScenarioStatus::Fail: return "fail";
    case ScenarioStatus::Inconclusive: return "inconclusive";
  }
  return "fail";
}

json to_json(const ScenarioOutcome& outcome) {
  json assertions = json::array();
  for (const auto& a : outcome.assertions) {
    assertions.push_back({{"name", a.name},
                          {"expected", a.expected},
                          {"actual", a.actual},
                          {"provenance", a.provenance},
                          {"pass", a.pass}});
  }
  return {{"scenario", outcome.id},        {"title", outcome.title}, {"pass", outcome.pass()},
          {"status", status_name(outcome.status)}, {"caps", outcome.caps}, {"assertions", assertions}};
}

}  // namespace digifix
