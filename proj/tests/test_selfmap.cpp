#include <gtest/gtest.h>

#include <algorithm>

#include "digifix/enumeration.hpp"
#include "digifix/errors.hpp"
#include "fixtures.hpp"

using namespace digifix;
using digifix::fixtures::five_dim_example;
using digifix::fixtures::five_dim_map;

TEST(SelfMap, RejectsOutOfRangeEntries) {
  EXPECT_THROW(SelfMap({0, 3, 1}), InputError);
  EXPECT_THROW(SelfMap({0, 1}).check_against(five_dim_example()), InputError);
}

TEST(Continuity, Examples) {
  const auto img = five_dim_example();
  EXPECT_FALSE(is_continuous(img, five_dim_map()));
  EXPECT_TRUE(is_continuous(img, SelfMap::identity(3)));
  EXPECT_TRUE(is_continuous(img, SelfMap::constant(3, 1)));
}

TEST(FixedPoints, Examples) {
  EXPECT_EQ(fixed_points(SelfMap::identity(4)), (IndexSet{0, 1, 2, 3}));
  EXPECT_EQ(fixed_points(five_dim_map()), (IndexSet{0}));
  EXPECT_EQ(fixed_points(SelfMap::constant(4, 2)), (IndexSet{2}));
}

TEST(ImageSequence, Examples) {
  const auto seq = image_sequence(five_dim_map());
  EXPECT_TRUE(seq.stabilized);
  EXPECT_EQ(seq.sets, (std::vector<IndexSet>{{0, 1, 2}, {0, 1}, {0}, {0}}));

  const auto id = image_sequence(SelfMap::identity(3));
  EXPECT_EQ(id.sets, (std::vector<IndexSet>{{0, 1, 2}, {0, 1, 2}}));

  const auto c = image_sequence(SelfMap::constant(3, 2));
  EXPECT_EQ(c.sets, (std::vector<IndexSet>{{0, 1, 2}, {2}, {2}}));
}

TEST(ImageSequence, CapStopsBeforeStabilizing) {
  const auto seq = image_sequence(SelfMap({1, 2, 3, 3}), 1);
  EXPECT_FALSE(seq.stabilized);
  EXPECT_EQ(seq.sets.size(), 2u);
}

TEST(Compose, Examples) {
  const SelfMap f = five_dim_map();
  EXPECT_EQ(iterate(f, 1), f);
  EXPECT_EQ(iterate(f, 0), SelfMap::identity(3));
  EXPECT_EQ(compose(SelfMap::identity(3), f), f);
  EXPECT_TRUE(is_constant(iterate(f, 2)));
  EXPECT_EQ(iterate(f, 2)(2), 0u);
  // (f o g)(x) = f(g(x))
  const SelfMap g({2, 0, 1});
  EXPECT_EQ(compose(f, g), SelfMap({1, 0, 0}));
  EXPECT_THROW(compose(f, SelfMap::identity(2)), InputError);
}

TEST(EventuallyConstant, Examples) {
  auto r = is_eventually_constant({{1, 2, 3, 3, 3}, 2});
  EXPECT_TRUE(r.eventually_constant);
  EXPECT_EQ(r.index, 2u);
  EXPECT_TRUE(r.claim_consistent);
  EXPECT_FALSE(is_eventually_constant({{1, 2, 1, 2}, std::nullopt}).eventually_constant);
  EXPECT_FALSE(is_eventually_constant({{1, 2, 3, 3}, 0}).claim_consistent);
}

TEST(Properties, CompositionOfContinuousMapsIsContinuous) {
  const std::vector<DigitalImage> images{
      DigitalImage(2, {Point{0, 0}, Point{0, 1}, Point{1, 1}, Point{1, 0}}, AdjacencySpec{1}),
      DigitalImage(2, {Point{0, 0}, Point{1, 1}, Point{2, 1}, Point{3, 3}}, AdjacencySpec{2}),
      DigitalImage(1, {Point{0}, Point{1}, Point{2}}, AdjacencySpec{1}),
      five_dim_example()};
  for (const auto& img : images) {
    std::vector<SelfMap> continuous;
    for_each_self_map(img.size(), [&](const SelfMap& f) {
      if (is_continuous(img, f)) continuous.push_back(f);
      return true;
    });
    for (const auto& f : continuous)
      for (const auto& g : continuous) EXPECT_TRUE(is_continuous(img, compose(f, g)));
  }
}

TEST(Properties, ImageSetsShrinkAndContainFixedPoints) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for_each_self_map(n, [&](const SelfMap& f) {
      const auto seq = image_sequence(f);
      EXPECT_TRUE(seq.stabilized);
      const auto fix = fixed_points(f);
      for (std::size_t i = 0; i < seq.sets.size(); ++i) {
        if (i > 0) {
          EXPECT_LE(seq.sets[i].size(), seq.sets[i - 1].size());
          // Oracle: f^i(X) directly from the iterated table.
          auto direct = iterate(f, i).table();
          std::sort(direct.begin(), direct.end());
          direct.erase(std::unique(direct.begin(), direct.end()), direct.end());
          EXPECT_EQ(seq.sets[i], direct);
        }
        EXPECT_TRUE(std::includes(seq.sets[i].begin(), seq.sets[i].end(), fix.begin(), fix.end()));
      }
      return true;
    });
  }
}

TEST(Properties, MapSpaceIsEnumeratedInOrder) {
  std::vector<std::vector<std::size_t>> tables;
  for_each_self_map(3, [&](const SelfMap& f) {
    tables.push_back(f.table());
    return true;
  });
  EXPECT_EQ(tables.size(), map_space_size(3));
  EXPECT_TRUE(std::is_sorted(tables.begin(), tables.end()));
  EXPECT_EQ(std::adjacent_find(tables.begin(), tables.end()), tables.end());
}
