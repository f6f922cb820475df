#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "digifix/contraction.hpp"
#include "digifix/enumeration.hpp"
#include "digifix/errors.hpp"
#include "digifix/isomorphism.hpp"
#include "digifix/scc.hpp"
#include "digifix/sweeps.hpp"
#include "fixtures.hpp"

using namespace digifix;
using digifix::fixtures::five_dim_example;
using digifix::fixtures::five_dim_map;

namespace {

// C# straight from the definition: every table, plain doubles, naive iteration.
std::size_t oracle_c_sharp(const DigitalImage& img) {
  const std::size_t n = img.size();
  std::size_t best = 0;
  for_each_self_map(n, [&](const SelfMap& f) {
    bool shrinks = true;
    for (std::size_t x = 0; x < n && shrinks; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (fixtures::oracle_lp(img.point(f(x)), img.point(f(y)), 2) >=
            fixtures::oracle_lp(img.point(x), img.point(y), 2) - 1e-12) {
          shrinks = false;
          break;
        }
    if (!shrinks || n < 2) return true;
    std::vector<std::size_t> cur(n);
    for (std::size_t i = 0; i < n; ++i) cur[i] = i;
    std::size_t m = 0;
    while (true) {
      for (auto& v : cur) v = f(v);
      ++m;
      if (std::all_of(cur.begin(), cur.end(), [&](std::size_t v) { return v == cur[0]; })) break;
    }
    best = std::max(best, m);
    return true;
  });
  return best;
}

}  // namespace

TEST(Enumeration, FiveDimExampleContainsItsMap) {
  const DistanceMatrix dm(Metric::l2(), five_dim_example());
  const auto maps = enumerate_contractions(dm, five_dim_example());
  EXPECT_NE(std::find(maps.begin(), maps.end(), five_dim_map()), maps.end());
}

TEST(Enumeration, SingletonAndTwoPoints) {
  const DigitalImage single(1, {Point{0}}, AdjacencySpec{1});
  const auto one = enumerate_contractions(DistanceMatrix(Metric::l2(), single), single);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one.front(), SelfMap::identity(1));

  const DigitalImage pair(1, {Point{0}, Point{2}}, AdjacencySpec{1});
  const auto two = enumerate_contractions(DistanceMatrix(Metric::l2(), pair), pair);
  EXPECT_EQ(two, (std::vector<SelfMap>{SelfMap::constant(2, 0), SelfMap::constant(2, 1)}));
}

TEST(Enumeration, CapIsEnforced) {
  std::vector<Point> pts;
  for (Coord i = 0; i < 8; ++i) pts.push_back(Point{i});
  const DigitalImage big(1, pts, AdjacencySpec{1});
  EXPECT_THROW(enumerate_contractions(DistanceMatrix(Metric::l1(), big), big), CapExceeded);
  EXPECT_THROW(c_sharp(Metric::l1(), big), CapExceeded);
  EXPECT_NO_THROW(c_sharp(Metric::l1(), big, EnumerationOptions{8, false}));
}

TEST(Enumeration, MatchesReference) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const auto img = fixtures::random_image(rng, 2, 4, 6, 1 + trial % 2);
    for (const Metric& m : {Metric::l1(), Metric::l2(), Metric::lp(1.5)}) {
      const DistanceMatrix dm(m, img);
      EXPECT_EQ(enumerate_contractions(dm, img), enumerate_contractions_reference(dm, img));
      EnumerationOptions cont{kDefaultEnumerationCap, true};
      EXPECT_EQ(enumerate_contractions(dm, img, cont), enumerate_contractions_reference(dm, img, cont));
    }
  }
}

TEST(CSharp, Examples) {
  EXPECT_EQ(c_sharp(Metric::l2(), DigitalImage(2, {Point{3, 3}}, AdjacencySpec{1})).c_sharp, 0u);
  const auto r = c_sharp(Metric::l2(), five_dim_example());
  EXPECT_EQ(r.c_sharp, 2u);
  EXPECT_EQ(r.maps_enumerated, 27u);
  EXPECT_EQ(oracle_c_sharp(five_dim_example()), 2u);
  EXPECT_EQ(c_sharp(Metric::l2(), DigitalImage(1, {Point{0}, Point{2}}, AdjacencySpec{1})).c_sharp, 1u);
}

TEST(CSharp, WitnessRevalidates) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const auto img = fixtures::random_image(rng, 2, 5, 6, 2);
    const DistanceMatrix dm(Metric::l2(), img);
    const auto r = c_sharp(dm, img);
    if (r.c_sharp == 0) continue;
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_TRUE(banach_modulus(dm, *r.witness).is_banach);
    const auto seq = image_sequence(*r.witness);
    ASSERT_GT(seq.sets.size(), r.c_sharp);
    EXPECT_EQ(seq.sets[r.c_sharp].size(), 1u);
    EXPECT_GT(seq.sets[r.c_sharp - 1].size(), 1u);
  }
}

TEST(CSharp, ParallelMatchesReferenceAndOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto img = fixtures::random_image(rng, 2, 4, 6, 1 + trial % 2);
    const DistanceMatrix dm(Metric::l2(), img);
    const auto fast = c_sharp(dm, img);
    const auto ref = c_sharp_reference(dm, img);
    EXPECT_EQ(fast.c_sharp, ref.c_sharp);
    EXPECT_EQ(fast.witness, ref.witness);
    EXPECT_EQ(fast.contractions, ref.contractions);
    EXPECT_EQ(fast.maps_enumerated, ref.maps_enumerated);
    if (img.size() <= 5) EXPECT_EQ(fast.c_sharp, oracle_c_sharp(img));
  }
}

TEST(CSharp, InvariantUnderTranslationAndReordering) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const auto img = fixtures::random_image(rng, 2, 5, 6, 2);
    const auto base = c_sharp(Metric::l2(), img).c_sharp;
    EXPECT_EQ(c_sharp(Metric::l2(), img.translated(Point{5, -3})).c_sharp, base);
    auto pts = img.points();
    std::reverse(pts.begin(), pts.end());
    EXPECT_EQ(c_sharp(Metric::l2(), DigitalImage(2, pts, img.adjacency())).c_sharp, base);
  }
}

TEST(CSharp, RequireContinuousNeverExceedsUnrestricted) {
  const auto img = five_dim_example();
  const auto all = c_sharp(Metric::l2(), img);
  const auto cont = c_sharp(Metric::l2(), img, EnumerationOptions{kDefaultEnumerationCap, true});
  EXPECT_LE(cont.c_sharp, all.c_sharp);
  EXPECT_LE(cont.contractions, all.contractions);
}

TEST(Isomorphism, Examples) {
  const auto img = five_dim_example();
  const auto self = find_isomorphism(img, img);
  EXPECT_TRUE(self.isomorphic);
  EXPECT_EQ(self.mapping, (std::vector<std::size_t>{0, 1, 2}));

  const DigitalImage path(1, {Point{0}, Point{1}, Point{2}}, AdjacencySpec{1});
  const DigitalImage triangle(2, {Point{0, 0}, Point{0, 1}, Point{1, 1}}, AdjacencySpec{2});
  EXPECT_FALSE(find_isomorphism(path, triangle).isomorphic);

  // Both are 3-point paths; C# differs, so C# is not a graph invariant.
  const auto iso = find_isomorphism(path, img);
  ASSERT_TRUE(iso.isomorphic);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(path.adjacent(i, j), img.adjacent(iso.mapping[i], iso.mapping[j]));
  EXPECT_NE(c_sharp(Metric::l2(), path).c_sharp, c_sharp(Metric::l2(), img).c_sharp);
}

TEST(Isomorphism, CapIsEnforced) {
  std::vector<Point> pts;
  for (Coord i = 0; i < 11; ++i) pts.push_back(Point{i});
  const DigitalImage big(1, pts, AdjacencySpec{1});
  EXPECT_THROW(find_isomorphism(big, big), CapExceeded);
}

TEST(SimpleClosedCurve, Examples) {
  EXPECT_THROW(is_simple_closed_curve(DigitalImage(2, {Point{0, 0}, Point{0, 1}, Point{1, 1}}, AdjacencySpec{2})),
               InputError);
  const std::vector<Point> diamond{Point{1, 0}, Point{0, 1}, Point{-1, 0}, Point{0, -1}};
  EXPECT_TRUE(is_simple_closed_curve(DigitalImage(2, diamond, AdjacencySpec{2})));
  // Under c1 the diamond's points are pairwise non-adjacent.
  EXPECT_FALSE(is_simple_closed_curve(DigitalImage(2, diamond, AdjacencySpec{1})));
  const std::vector<Point> square{Point{0, 0}, Point{1, 0}, Point{1, 1}, Point{0, 1}};
  EXPECT_TRUE(is_simple_closed_curve(DigitalImage(2, square, AdjacencySpec{1})));
  EXPECT_FALSE(is_simple_closed_curve(DigitalImage(2, square, AdjacencySpec{2})));
}

TEST(FindScc, OddCurveUnderC2) {
  const auto r = find_scc(2, 2, 7, Window::parse("5x5"));
  ASSERT_TRUE(r.found);
  ASSERT_EQ(r.curve.size(), 7u);
  const DigitalImage curve(2, r.curve, AdjacencySpec{2});
  EXPECT_TRUE(is_simple_closed_curve(curve));
  EXPECT_EQ(neighborhood(curve, 4, 1), (std::vector<std::size_t>{3, 4, 5}));
  EXPECT_EQ(shortest_path_length(curve, 3, 5), 2u);
}

TEST(FindScc, FourCycleAndRejections) {
  const auto r = find_scc(2, 1, 4, Window::parse("5x5"));
  ASSERT_TRUE(r.found);
  EXPECT_TRUE(is_simple_closed_curve(DigitalImage(2, r.curve, AdjacencySpec{1})));
  EXPECT_THROW(find_scc(2, 2, 3, Window::parse("5x5")), InputError);
  EXPECT_FALSE(find_scc(2, 1, 5, Window::parse("5x5")).found);  // c1 cycles are even
  const auto tight = find_scc(2, 2, 8, Window::parse("5x5"), 3);
  EXPECT_TRUE(tight.budget_exhausted);
}

TEST(FindScc, EveryEnumeratedCurveIsSimpleAndClosed) {
  for (int u = 1; u <= 2; ++u) {
    for (std::size_t len = 4; len <= 8; ++len) {
      const auto curves = enumerate_sccs(2, u, len, Window::parse("4x4"));
      for (const auto& c : curves) EXPECT_TRUE(is_simple_closed_curve(DigitalImage(2, c, AdjacencySpec{u})));
      const auto found = find_scc(2, u, len, Window::parse("4x4"));
      EXPECT_EQ(found.found, !curves.empty());
      if (found.found) EXPECT_EQ(found.curve, curves.front());
    }
  }
}

TEST(FindScc, UnitSquaresCountedOnce) {
  // A 4x4 window holds 3 x 3 unit squares under c1.
  EXPECT_EQ(enumerate_sccs(2, 1, 4, Window::parse("4x4")).size(), 9u);
}

TEST(NeighborhoodBound, CurvesInSmallWindow) {
  for (std::size_t len = 4; len <= 6; ++len) {
    for (const auto& c : enumerate_sccs(2, 2, len, Window::parse("4x4"))) {
      const auto r = scc_neighborhood_bound(DigitalImage(2, c, AdjacencySpec{2}));
      if (r.premise) EXPECT_LE(r.c_sharp, 3u);
      EXPECT_EQ(r.bound_holds, !r.premise || r.c_sharp <= 3);
    }
  }
  EXPECT_THROW(scc_neighborhood_bound(DigitalImage(1, {Point{0}, Point{1}, Point{2}, Point{3}}, AdjacencySpec{1})),
               InputError);
}

TEST(Window, Parse) {
  const auto w = Window::parse("3x2");
  EXPECT_EQ(w.dim(), 2u);
  EXPECT_EQ(w.points().size(), 6u);
  EXPECT_EQ(w.points().front(), (Point{0, 0}));
  EXPECT_THROW(Window::parse("3xx2"), InputError);
  EXPECT_THROW(Window::parse("0x2"), InputError);
}

TEST(Sweeps, ParallelMatchesSerial) {
  const auto images = window_images(Window::parse("3x3"), 1, 4, 1, true);
  const std::vector<Metric> metrics{Metric::l1(), Metric::l2()};
  SweepChecks checks;
  checks.banach_implies_constant = true;
  checks.reich_collapse = true;
  const auto fast = sweep_all_maps(images, metrics, checks);
  const auto slow = sweep_all_maps_reference(images, metrics, checks);
  EXPECT_EQ(fast, slow);
  EXPECT_EQ(fast.violations(), 0u);
  EXPECT_EQ(fast.images, images.size());
}

TEST(Sweeps, WindowImageCounts) {
  // Subsets of a 3x3 window with 1..2 points: 9 + 36.
  EXPECT_EQ(window_images(Window::parse("3x3"), 1, 2, 1, false).size(), 45u);
  // Connected c1 pairs: 12 horizontal or vertical edges.
  EXPECT_EQ(window_images(Window::parse("3x3"), 2, 2, 1, true).size(), 12u);
}
