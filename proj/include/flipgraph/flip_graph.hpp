#pragma once

// sigma-flip graphs over all coloured triangulations of an n-gon.
//
// Node ids follow the canonical order of coloured triangulations (diagonal
// list, then colour word), so id = rank(triangulation) * m^(n-2) + word,
// where the colour word is read as a base-m number with face 0 most
// significant.
//
// Edges are undirected: a sigma-flip from x to y links both. Unless sigma is
// an involution, a node may therefore have more neighbours than flippable
// diagonals.
//
// build_flip_graph is the OpenMP kernel; build_flip_graph_reference is the
// plain serial construction used to check it.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "flipgraph/colour.hpp"

namespace flipgraph {

using NodeId = std::uint32_t;

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct BuildOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  int workers = 1;
};

/// Throws kBudgetExceeded when count_coloured(n, m) exceeds the budget.
void check_node_budget(int n, int m, std::uint64_t node_budget);

class FlipGraph {
 public:
  int vertex_count() const noexcept { return n_; }
  const ColourScheme& scheme() const noexcept { return scheme_; }

  std::size_t node_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  /// Sorted neighbour ids.
  std::span<const NodeId> neighbours(NodeId id) const {
    return {targets_.data() + offsets_[id], targets_.data() + offsets_[id + 1]};
  }
  std::size_t degree(NodeId id) const { return offsets_[id + 1] - offsets_[id]; }

  ColouredTriangulation node(NodeId id) const;
  std::optional<NodeId> find(const ColouredTriangulation& ct) const;

  /// Canonically sorted triangulations; node ids are built on their ranks.
  std::span<const Triangulation> triangulations() const noexcept {
    return triangulations_;
  }
  std::uint64_t words_per_triangulation() const noexcept { return words_; }

  friend bool operator==(const FlipGraph& x, const FlipGraph& y) {
    return x.n_ == y.n_ && x.scheme_ == y.scheme_ && x.offsets_ == y.offsets_ &&
           x.targets_ == y.targets_;
  }

 private:
  friend FlipGraph build_flip_graph(int, const ColourScheme&, const BuildOptions&);
  friend FlipGraph build_flip_graph_reference(int, const ColourScheme&, std::uint64_t);

  FlipGraph(int n, ColourScheme scheme, std::vector<Triangulation> sorted);

  int n_;
  ColourScheme scheme_;
  std::vector<Triangulation> triangulations_;
  std::map<std::vector<Diagonal>, std::uint32_t> rank_;
  std::uint64_t words_ = 1;
  std::vector<std::uint64_t> offsets_;
  std::vector<NodeId> targets_;
};

/// Parallel construction; output is identical for every worker count.
FlipGraph build_flip_graph(int n, const ColourScheme& scheme,
                           const BuildOptions& options = {});

/// Serial construction by explicit coloured_flip on every node.
FlipGraph build_flip_graph_reference(int n, const ColourScheme& scheme,
                                     std::uint64_t node_budget = kDefaultNodeBudget);

struct ComponentLabels {
  std::vector<std::uint32_t> component_of;
  /// Member ids per component, each sorted; components ordered by smallest id.
  std::vector<std::vector<NodeId>> members;
};

ComponentLabels label_components(const FlipGraph& graph);

/// Component size -> number of components of that size.
using Census = std::map<std::size_t, std::uint64_t>;

Census census(const FlipGraph& graph);
Census census(int n, const ColourScheme& scheme, const BuildOptions& options = {});

/// A connected component as a standalone graph: canonically sorted members
/// plus adjacency over local indices.
struct Component {
  std::vector<ColouredTriangulation> members;
  std::vector<std::vector<std::uint32_t>> adjacency;
  /// Graph node ids of the members when extracted from a FlipGraph.
  std::vector<NodeId> ids;

  std::size_t size() const noexcept { return members.size(); }
  std::optional<std::uint32_t> index_of(const ColouredTriangulation& ct) const;
};

Component extract_component(const FlipGraph& graph, std::span<const NodeId> ids);

/// Breadth-first search from ct without building the whole graph. Throws
/// kBudgetExceeded once more than node_budget states are discovered.
Component component_of(const ColouredTriangulation& ct, const ColourScheme& scheme,
                       std::uint64_t node_budget = kDefaultNodeBudget);

/// Fills comp.ids with the ids the members would have in the full graph for
/// colour_count colours, without building it.
void attach_node_ids(Component& comp, int colour_count);

}  // namespace flipgraph
