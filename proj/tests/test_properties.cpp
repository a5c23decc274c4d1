#include <gtest/gtest.h>

#include "flipgraph/component_stats.hpp"
#include "flipgraph/hypercube.hpp"
#include "flipgraph/serialize.hpp"
#include "flipgraph/signed_equiv.hpp"
#include "oracles.hpp"

using namespace flipgraph;

// Random walks on polygons too large to enumerate.

namespace {

const ColourScheme kTwo = ColourScheme::cyclic(2);

ColouredTriangulation random_state(oracle::Gen& gen, int n, int m) {
  // Random triangulation by random flips from a random fan.
  Triangulation t = fan(n, gen.uniform(0, n - 1));
  for (int i = 0; i < 4 * n; ++i) {
    const auto ds = t.diagonals();
    if (ds.empty()) break;
    t = flip(t, ds[static_cast<std::size_t>(gen.uniform(0, static_cast<int>(ds.size()) - 1))]).triangulation;
  }
  return ColouredTriangulation::make(std::move(t), gen.word(static_cast<std::size_t>(n - 2), m));
}

}  // namespace

TEST(Property, WalkPreservesSignedInvariants) {
  oracle::Gen gen(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen.uniform(8, 16);
    auto ct = random_state(gen, n, 2);
    const auto p = weighting(ct);
    const auto col = colouring(ct);
    auto plus = [](const ColouredTriangulation& x) { return std::count(x.colours.begin(), x.colours.end(), 0); };
    for (int step = 0; step < 40; ++step) {
      const auto options = flippable_diagonals(ct);
      if (options.empty()) break;
      const auto before = plus(ct);
      ct = coloured_flip(ct, gen.pick(options), kTwo);
      EXPECT_EQ(std::abs(plus(ct) - before), 2);
      EXPECT_EQ(weighting(ct), p);
      // Colouring is invariant up to global swap, which does not change it.
      EXPECT_EQ(colouring(ct), col);
      EXPECT_EQ(signs_from_weighting(ct.triangulation, p), ct);
    }
  }
}

TEST(Property, FlipIsReversibleForInvolutions) {
  oracle::Gen gen(5);
  for (const auto& scheme : {kTwo, ColourScheme::from_images({1, 0, 3, 2}), ColourScheme::identity(3)}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto ct = random_state(gen, gen.uniform(5, 14), scheme.colour_count());
      for (const Diagonal d : flippable_diagonals(ct)) {
        const auto next = coloured_flip(ct, d, scheme);
        const Diagonal back = flip(ct.triangulation, d).inserted;
        EXPECT_EQ(coloured_flip(next, back, scheme), ct);
      }
    }
  }
}

TEST(Property, FlipCountsAreConsistent) {
  oracle::Gen gen(9);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = gen.uniform(1, 4);
    const auto ct = random_state(gen, gen.uniform(4, 20), m);
    const auto fl = flippable_diagonals(ct);
    EXPECT_EQ(is_frozen(ct), fl.empty());
    for (const Diagonal d : ct.triangulation.diagonals()) {
      EXPECT_EQ(is_flippable(ct, d), std::binary_search(fl.begin(), fl.end(), d));
    }
  }
}

TEST(Property, IndependentFlipsCommute) {
  oracle::Gen gen(13);
  for (int trial = 0; trial < 60; ++trial) {
    const auto ct = random_state(gen, gen.uniform(6, 13), 2);
    const auto set = independent_flippable_set(ct);
    const auto cube = verify_hypercube(ct, set, kTwo);
    EXPECT_EQ(cube.nodes.size(), std::size_t{1} << set.size());
  }
}

TEST(Property, JsonRoundTripRandom) {
  oracle::Gen gen(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = gen.uniform(1, 12);
    const auto ct = random_state(gen, gen.uniform(3, 15), m);
    const auto back = parse_coloured(to_json(ct, m).dump());
    EXPECT_EQ(back.ct, ct);
    EXPECT_EQ(back.colour_count, m);
  }
}

TEST(Property, ColouringRoundTripLargeN) {
  oracle::Gen gen(23);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ct = random_state(gen, gen.uniform(4, 24), 2);
    const auto v = valuation(ct);
    const auto col = colouring(ct);
    EXPECT_EQ(valuation_from_colouring(ct.triangulation, col), v);
    const auto pair = signs_from_valuation(ct.triangulation, v);
    EXPECT_TRUE(pair[0] == ct || pair[1] == ct);
  }
}
