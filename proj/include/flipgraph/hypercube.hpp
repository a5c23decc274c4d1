#pragma once

// Independent flips and the hypercube subgraphs they span.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "flipgraph/colour.hpp"

namespace flipgraph {

/// Quadrilaterals of two diagonals are disjoint when they share no triangle.
/// Sharing a boundary edge or a vertex is allowed.
bool quadrilaterals_disjoint(const Triangulation& t, Diagonal x, Diagonal y);

/// A maximum set of flippable diagonals with pairwise disjoint
/// quadrilaterals. Among maximum sets the lexicographically smallest sorted
/// list is returned.
std::vector<Diagonal> independent_flippable_set(const ColouredTriangulation& ct);

struct HypercubeWitness {
  int dimension = 0;
  std::vector<Diagonal> generators;
  /// nodes[mask] is reached from the base by flipping the generators in mask.
  std::vector<ColouredTriangulation> nodes;
  /// Pairs of masks at Hamming distance 1.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

/// Flips every subset of the generators and checks that the 2^k states are
/// distinct, independent of flip order, and adjacent whenever their masks
/// differ in one bit. Throws kInvalidArgument if the generators are not
/// flippable and pairwise disjoint, kInternal if the cube does not close.
HypercubeWitness verify_hypercube(const ColouredTriangulation& ct,
                                  std::span<const Diagonal> generators,
                                  const ColourScheme& scheme);

struct FanHypercubes {
  /// Monochromatic fan at apex 0 with two colours.
  ColouredTriangulation base;
  std::vector<HypercubeWitness> witnesses;
  /// Number of nodes the first two witnesses share.
  std::size_t shared_nodes = 0;

  std::vector<int> dimensions() const;
};

/// For k = n-2 triangles: k even gives cubes of dimension k/2 and k/2-1; k
/// odd gives two distinct cubes of dimension (k-1)/2, one skipping the first
/// and one skipping the last triangle of the fan. Requires n >= 5.
FanHypercubes fan_hypercube_dims(int n);

}  // namespace flipgraph
