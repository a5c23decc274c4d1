#include <gtest/gtest.h>

#include <set>

#include "flipgraph/component_stats.hpp"
#include "flipgraph/error.hpp"
#include "flipgraph/hypercube.hpp"
#include "flipgraph/verify.hpp"
#include "oracles.hpp"

using namespace flipgraph;

namespace {

const ColourScheme kTwo = ColourScheme::cyclic(2);

Adjacency cycle(std::uint32_t len) {
  Adjacency a(len);
  for (std::uint32_t i = 0; i < len; ++i) {
    a[i].push_back((i + 1) % len);
    a[(i + 1) % len].push_back(i);
  }
  return a;
}

// Girth by brute force: shortest closed walk that is a simple cycle, via
// removing each edge and measuring the remaining distance.
std::optional<std::size_t> girth_oracle(const Adjacency& adj) {
  std::optional<std::size_t> best;
  for (std::uint32_t u = 0; u < adj.size(); ++u) {
    for (const std::uint32_t v : adj[u]) {
      if (v < u) continue;
      std::vector<int> dist(adj.size(), -1);
      std::vector<std::uint32_t> queue{u};
      dist[u] = 0;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        const auto x = queue[i];
        for (const auto y : adj[x]) {
          if ((x == u && y == v) || (x == v && y == u) || dist[y] >= 0) continue;
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
      }
      if (dist[v] > 0) {
        const std::size_t len = static_cast<std::size_t>(dist[v]) + 1;
        if (!best || len < *best) best = len;
      }
    }
  }
  return best;
}

}  // namespace

TEST(Stats, LadderOnHandmadeGraphs) {
  EXPECT_EQ(component_stats(Adjacency(1)).shape, ShapeClass::kIsolated);
  EXPECT_EQ(component_stats(Adjacency{{1}, {0}}).shape, ShapeClass::kPath);
  EXPECT_EQ(component_stats(Adjacency{{1, 2, 3}, {0}, {0}, {0}}).shape, ShapeClass::kTree);
  auto four = cycle(4);
  four.push_back({0});
  four[0].push_back(4);
  const auto s4 = component_stats(four);
  EXPECT_EQ(s4.shape, ShapeClass::kFourCycleWithLeaves);
  EXPECT_EQ(s4.girth, 4u);
  EXPECT_EQ(s4.leaf_count, 1u);
  EXPECT_EQ(component_stats(cycle(6)).shape, ShapeClass::kOther);
  const auto c5 = component_stats(cycle(5));
  EXPECT_EQ(c5.girth, 5u);
  EXPECT_FALSE(c5.bipartite);
  EXPECT_EQ(to_string(ShapeClass::kFourCycleWithLeaves), "four_cycle_with_leaves");
}

TEST(Stats, GirthMatchesOracle) {
  const auto g = build_flip_graph(8, kTwo);
  const auto labels = label_components(g);
  for (const auto& members : labels.members) {
    const auto comp = extract_component(g, members);
    EXPECT_EQ(girth(comp.adjacency), girth_oracle(comp.adjacency));
  }
}

TEST(Stats, ParallelAnalysisIsDeterministic) {
  const auto g = build_flip_graph(8, kTwo);
  const auto labels = label_components(g);
  const auto a = analyze_components(g, labels, 1);
  const auto b = analyze_components(g, labels, 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].size, b[i].size);
    EXPECT_EQ(a[i].girth, b[i].girth);
    EXPECT_EQ(a[i].shape, b[i].shape);
    EXPECT_EQ(a[i].leaf_count, b[i].leaf_count);
  }
}

TEST(Stats, SmallPolygonShapes) {
  for (int n = 4; n <= 6; ++n) {
    const auto g = build_flip_graph(n, kTwo);
    for (const auto& s : analyze_components(g, label_components(g))) {
      EXPECT_NE(s.shape, ShapeClass::kOther) << n;
    }
  }
}

TEST(Bipartite, WitnessAlternatesOnEveryEdge) {
  for (int n = 4; n <= 8; ++n) {
    const auto g = build_flip_graph(n, kTwo);
    for (const auto& members : label_components(g).members) {
      const auto comp = extract_component(g, members);
      const auto w = is_bipartite(comp, kTwo);
      EXPECT_TRUE(w.bipartite);
      // Independent check: BFS 2-colouring.
      EXPECT_TRUE(component_stats(comp).bipartite);
    }
  }
  const auto comp = component_of(ColouredTriangulation::uniform(fan(5, 0), 0), ColourScheme::cyclic(3));
  EXPECT_THROW(is_bipartite(comp, ColourScheme::cyclic(3)), Error);
}

TEST(MinSize, Examples) {
  EXPECT_EQ(min_nontrivial_size(6, kTwo), 4u);
  EXPECT_EQ(min_nontrivial_size(8, kTwo), 6u);
  EXPECT_EQ(min_nontrivial_size(3, kTwo), std::nullopt);
}

TEST(EventuallyFlippable, Examples) {
  const auto frozen = ColouredTriangulation::make(fan(6, 0), {0, 1, 0, 1});
  EXPECT_TRUE(eventually_flippable(frozen, kTwo).empty());
  const auto mono = ColouredTriangulation::uniform(fan(7, 0), 1);
  const auto all = eventually_flippable(mono, kTwo);
  EXPECT_EQ(std::vector<Diagonal>(all.begin(), all.end()),
            std::vector<Diagonal>(mono.triangulation.diagonals().begin(), mono.triangulation.diagonals().end()));
  // Path start: only (0,2) is flippable now, but every diagonal gets its turn.
  EXPECT_EQ(eventually_flippable(fan_path_start(7), kTwo).size(), 4u);
}

TEST(Conjecture, NoViolationsSmallN) {
  for (int n = 4; n <= 7; ++n) {
    const auto g = build_flip_graph(n, kTwo);
    for (const auto& members : label_components(g).members) {
      EXPECT_TRUE(check_conjecture(extract_component(g, members)).empty());
    }
  }
}

TEST(Conjecture, ReportsRepeatedTriangleColours) {
  // Two members sharing face {0,1,2} with different colours.
  Component comp;
  comp.members = {ColouredTriangulation::make(fan(5, 0), {0, 0, 1}),
                  ColouredTriangulation::make(fan(5, 0), {1, 0, 1})};
  comp.adjacency = {{1}, {0}};
  const auto v = check_conjecture(comp);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].triangle, (Face{0, 1, 2}));
  EXPECT_EQ(v[0].colours, (std::vector<Colour>{0, 1}));
}

TEST(Hypercube, Disjointness) {
  const auto hex = fan(6, 0);
  EXPECT_TRUE(quadrilaterals_disjoint(hex, {0, 2}, {0, 4}));
  EXPECT_FALSE(quadrilaterals_disjoint(hex, {0, 2}, {0, 3}));
}

TEST(Hypercube, IndependentSets) {
  EXPECT_EQ(independent_flippable_set(ColouredTriangulation::uniform(fan(6, 0), 0)).size(), 2u);
  EXPECT_EQ(independent_flippable_set(ColouredTriangulation::uniform(fan(10, 0), 0)).size(), 4u);
  EXPECT_TRUE(independent_flippable_set(ColouredTriangulation::make(fan(6, 0), {0, 1, 0, 1})).empty());
}

TEST(Hypercube, IndependentSetIsMaximumByBruteForce) {
  oracle::Gen gen(3);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = gen.uniform(5, 10);
    const auto tris = enumerate_triangulations(n);
    const auto ct = ColouredTriangulation::make(gen.pick(tris), gen.word(static_cast<std::size_t>(n - 2), 2));
    const auto flippable = flippable_diagonals(ct);
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << flippable.size()); ++mask) {
      bool ok = true;
      for (std::size_t i = 0; i < flippable.size() && ok; ++i) {
        for (std::size_t j = i + 1; j < flippable.size() && ok; ++j) {
          if ((mask >> i & 1) && (mask >> j & 1)) {
            // Disjoint iff no triangle is shared: the two incident face
            // pairs have empty intersection.
            const auto& t = ct.triangulation;
            const auto a = t.incident_faces(*t.find_diagonal(flippable[i]));
            const auto b = t.incident_faces(*t.find_diagonal(flippable[j]));
            ok = a[0] != b[0] && a[0] != b[1] && a[1] != b[0] && a[1] != b[1];
          }
        }
      }
      if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
    }
    const auto set = independent_flippable_set(ct);
    EXPECT_EQ(set.size(), best);
    EXPECT_NO_THROW(verify_hypercube(ct, set, kTwo));
  }
}

TEST(Hypercube, Witnesses) {
  const auto hex = ColouredTriangulation::uniform(fan(6, 0), 0);
  const auto zero = verify_hypercube(hex, {}, kTwo);
  EXPECT_EQ(zero.nodes.size(), 1u);
  EXPECT_TRUE(zero.edges.empty());
  const std::vector<Diagonal> two{{0, 2}, {0, 4}};
  const auto sq = verify_hypercube(hex, two, kTwo);
  EXPECT_EQ(sq.nodes.size(), 4u);
  EXPECT_EQ(sq.edges.size(), 4u);
  const auto oct = ColouredTriangulation::uniform(fan(8, 0), 0);
  const auto cube = verify_hypercube(oct, independent_flippable_set(oct), kTwo);
  EXPECT_EQ(cube.dimension, 3);
  EXPECT_EQ(cube.nodes.size(), 8u);
  EXPECT_EQ(cube.edges.size(), 12u);
  const std::vector<Diagonal> clash{{0, 2}, {0, 3}};
  EXPECT_THROW(verify_hypercube(hex, clash, kTwo), Error);
}

TEST(Hypercube, WitnessEdgesAreGraphEdges) {
  const auto g = build_flip_graph(8, kTwo);
  const auto w = fan_hypercube_dims(8);
  for (const auto& cube : w.witnesses) {
    for (const auto& [x, y] : cube.edges) {
      const auto nb = g.neighbours(*g.find(cube.nodes[x]));
      EXPECT_TRUE(std::binary_search(nb.begin(), nb.end(), *g.find(cube.nodes[y])));
    }
  }
}

TEST(Hypercube, FanDimensions) {
  for (int n = 5; n <= 12; ++n) {
    const int k = n - 2;
    const auto cubes = fan_hypercube_dims(n);
    const auto dims = cubes.dimensions();
    EXPECT_EQ(dims.front(), k / 2) << n;
    if (k % 2 == 0) {
      EXPECT_EQ(dims, (std::vector<int>{k / 2, k / 2 - 1}));
    } else {
      EXPECT_EQ(dims, (std::vector<int>{(k - 1) / 2, (k - 1) / 2}));
      EXPECT_NE(cubes.witnesses[0].generators, cubes.witnesses[1].generators);
    }
  }
  EXPECT_EQ(fan_hypercube_dims(12).dimensions().front(), 5);
  EXPECT_THROW(fan_hypercube_dims(4), Error);
}
