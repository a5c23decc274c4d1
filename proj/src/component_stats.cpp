#include "flipgraph/component_stats.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

#include "flipgraph/error.hpp"

namespace flipgraph {

namespace {

constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();

bool two_colourable(const Adjacency& adjacency) {
  std::vector<int> side(adjacency.size(), -1);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t start = 0; start < adjacency.size(); ++start) {
    if (side[start] >= 0) continue;
    side[start] = 0;
    queue.assign(1, start);
    while (!queue.empty()) {
      const std::uint32_t u = queue.front();
      queue.pop_front();
      for (const std::uint32_t w : adjacency[u]) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

Adjacency local_adjacency(const FlipGraph& graph, const std::vector<NodeId>& ids) {
  Adjacency adjacency(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (const NodeId w : graph.neighbours(ids[i])) {
      auto it = std::lower_bound(ids.begin(), ids.end(), w);
      adjacency[i].push_back(static_cast<std::uint32_t>(it - ids.begin()));
    }
  }
  return adjacency;
}

}  // namespace

std::string_view to_string(ShapeClass shape) {
  switch (shape) {
    case ShapeClass::kIsolated: return "isolated";
    case ShapeClass::kPath: return "path";
    case ShapeClass::kTree: return "tree";
    case ShapeClass::kFourCycleWithLeaves: return "four_cycle_with_leaves";
    case ShapeClass::kOther: return "other";
  }
  return "other";
}

std::optional<std::size_t> girth(const Adjacency& adjacency) {
  const std::size_t n = adjacency.size();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<std::uint32_t> dist(n);
  std::vector<std::uint32_t> parent(n);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[root] = 0;
    parent[root] = kUnseen;
    queue.assign(1, root);
    while (!queue.empty()) {
      const std::uint32_t u = queue.front();
      queue.pop_front();
      // No cycle through this root can beat best once 2*dist+1 reaches it.
      if (2 * static_cast<std::size_t>(dist[u]) + 1 >= best) break;
      for (const std::uint32_t w : adjacency[u]) {
        if (dist[w] == kUnseen) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min<std::size_t>(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

ComponentStats component_stats(const Adjacency& adjacency) {
  ComponentStats stats;
  stats.size = adjacency.size();
  std::size_t degree_sum = 0;
  for (const auto& list : adjacency) {
    degree_sum += list.size();
    stats.max_degree = std::max(stats.max_degree, list.size());
    if (list.size() == 1) ++stats.leaf_count;
  }
  stats.edge_count = degree_sum / 2;
  stats.girth = girth(adjacency);
  stats.bipartite = two_colourable(adjacency);

  const bool acyclic = stats.edge_count + 1 == stats.size;
  const bool unicyclic = stats.edge_count == stats.size;
  if (stats.size == 1) {
    stats.shape = ShapeClass::kIsolated;
  } else if (acyclic) {
    stats.shape = stats.max_degree <= 2 ? ShapeClass::kPath : ShapeClass::kTree;
  } else if (unicyclic && stats.girth == 4u) {
    stats.shape = ShapeClass::kFourCycleWithLeaves;
  } else {
    stats.shape = ShapeClass::kOther;
  }
  return stats;
}

std::vector<ComponentStats> analyze_components(const FlipGraph& graph,
                                               const ComponentLabels& labels,
                                               int workers) {
  std::vector<ComponentStats> out(labels.members.size());
  const auto count = static_cast<std::int64_t>(labels.members.size());
#pragma omp parallel for num_threads(std::max(1, workers)) schedule(dynamic, 8)
  for (std::int64_t c = 0; c < count; ++c) {
    out[c] = component_stats(local_adjacency(graph, labels.members[c]));
  }
  return out;
}

BipartiteWitness is_bipartite(const Component& comp, const ColourScheme& scheme) {
  if (scheme.colour_count() != 2) {
    throw Error(ErrorKind::kUnsupported,
                "parity witness is defined for two colours only");
  }
  BipartiteWitness witness;
  witness.side.reserve(comp.size());
  for (const auto& member : comp.members) {
    const auto plus = std::count(member.colours.begin(), member.colours.end(), 0);
    witness.side.push_back(static_cast<std::uint8_t>((plus / 2) % 2));
  }
  witness.bipartite = true;
  for (std::size_t u = 0; u < comp.size() && witness.bipartite; ++u) {
    for (const std::uint32_t w : comp.adjacency[u]) {
      if (witness.side[u] == witness.side[w]) {
        witness.bipartite = false;
        break;
      }
    }
  }
  return witness;
}

std::optional<std::size_t> min_nontrivial_size(const FlipGraph& graph) {
  for (const auto& [size, count] : census(graph)) {
    if (size > 1 && count > 0) return size;
  }
  return std::nullopt;
}

std::optional<std::size_t> min_nontrivial_size(int n, const ColourScheme& scheme,
                                               const BuildOptions& options) {
  return min_nontrivial_size(build_flip_graph(n, scheme, options));
}

std::vector<Diagonal> eventually_flippable(const ColouredTriangulation& ct,
                                           const ColourScheme& scheme,
                                           std::uint64_t node_budget) {
  const auto own = ct.triangulation.diagonals();
  std::vector<bool> reached(own.size(), false);
  const Component comp = component_of(ct, scheme, node_budget);
  for (const auto& member : comp.members) {
    for (std::size_t j = 0; j < own.size(); ++j) {
      if (!reached[j] && is_flippable(member, own[j])) reached[j] = true;
    }
  }
  std::vector<Diagonal> out;
  for (std::size_t j = 0; j < own.size(); ++j) {
    if (reached[j]) out.push_back(own[j]);
  }
  return out;
}

std::vector<ConjectureViolation> check_conjecture(const Component& comp) {
  std::map<Face, std::set<Colour>> seen;
  for (const auto& member : comp.members) {
    const auto faces = member.triangulation.faces();
    for (std::size_t f = 0; f < faces.size(); ++f) seen[faces[f]].insert(member.colours[f]);
  }
  std::vector<ConjectureViolation> out;
  for (const auto& [face, colours] : seen) {
    if (colours.size() >= 2) out.push_back({face, {colours.begin(), colours.end()}});
  }
  return out;
}

}  // namespace flipgraph
