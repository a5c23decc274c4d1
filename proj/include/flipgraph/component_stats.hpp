#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "flipgraph/flip_graph.hpp"

namespace flipgraph {

enum class ShapeClass { kIsolated, kPath, kTree, kFourCycleWithLeaves, kOther };

std::string_view to_string(ShapeClass shape);

struct ComponentStats {
  std::size_t size = 0;
  std::size_t edge_count = 0;
  std::size_t leaf_count = 0;
  std::size_t max_degree = 0;
  std::optional<std::size_t> girth;  // nullopt for acyclic components
  bool bipartite = true;
  ShapeClass shape = ShapeClass::kIsolated;
};

using Adjacency = std::vector<std::vector<std::uint32_t>>;

/// Shortest cycle length by one BFS per root; nullopt for forests.
std::optional<std::size_t> girth(const Adjacency& adjacency);

/// Decision ladder: size 1 -> isolated; acyclic with max degree <= 2 -> path;
/// acyclic -> tree; exactly one cycle, of length 4 -> four-cycle with leaves;
/// anything else -> other.
ComponentStats component_stats(const Adjacency& adjacency);
inline ComponentStats component_stats(const Component& comp) {
  return component_stats(comp.adjacency);
}

/// Stats of every component of the graph, in label order.
std::vector<ComponentStats> analyze_components(const FlipGraph& graph,
                                               const ComponentLabels& labels,
                                               int workers = 1);

struct BipartiteWitness {
  bool bipartite = false;
  /// Per member: floor(X / 2) mod 2, X = number of colour-0 ("+") faces.
  /// A flip moves X by exactly 2, so this bit alternates along every edge.
  std::vector<std::uint8_t> side;
};

/// Checks that every edge joins members on opposite witness sides. Two
/// colours only; throws kUnsupported otherwise.
BipartiteWitness is_bipartite(const Component& comp, const ColourScheme& scheme);

/// Smallest component size above 1, or nullopt when every node is isolated.
std::optional<std::size_t> min_nontrivial_size(const FlipGraph& graph);
std::optional<std::size_t> min_nontrivial_size(int n, const ColourScheme& scheme,
                                               const BuildOptions& options = {});

/// Diagonals d of ct for which some state reachable from ct still contains d
/// with both incident faces the same colour.
std::vector<Diagonal> eventually_flippable(const ColouredTriangulation& ct,
                                           const ColourScheme& scheme,
                                           std::uint64_t node_budget = kDefaultNodeBudget);

struct ConjectureViolation {
  Face triangle;
  std::vector<Colour> colours;
};

/// Triangles that occur with two or more colours among the members.
std::vector<ConjectureViolation> check_conjecture(const Component& comp);

}  // namespace flipgraph
