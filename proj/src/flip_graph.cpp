#include "flipgraph/flip_graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "flipgraph/error.hpp"

namespace flipgraph {

namespace {

// One precomputed move per (triangulation, diagonal): which faces must agree,
// where the flip lands, and where each face of the target came from.
struct MoveTable {
  std::size_t diagonals_per_triangulation = 0;
  std::size_t faces_per_triangulation = 0;
  std::vector<std::uint16_t> side_a;
  std::vector<std::uint16_t> side_b;
  std::vector<std::uint32_t> target;
  std::vector<std::int16_t> origin;  // faces_per_triangulation entries per move
};

MoveTable build_move_table(const FlipGraph& graph, int workers) {
  const auto tris = graph.triangulations();
  const int n = graph.vertex_count();
  MoveTable table;
  table.diagonals_per_triangulation = static_cast<std::size_t>(n - 3);
  table.faces_per_triangulation = static_cast<std::size_t>(n - 2);
  const std::size_t moves = tris.size() * table.diagonals_per_triangulation;
  table.side_a.resize(moves);
  table.side_b.resize(moves);
  table.target.resize(moves);
  table.origin.resize(moves * table.faces_per_triangulation);

  const auto count = static_cast<std::int64_t>(tris.size());
#pragma omp parallel for num_threads(workers) schedule(dynamic, 16)
  for (std::int64_t r = 0; r < count; ++r) {
    const Triangulation& t = tris[r];
    for (std::size_t j = 0; j < table.diagonals_per_triangulation; ++j) {
      const std::size_t move = r * table.diagonals_per_triangulation + j;
      auto [f1, f2] = t.incident_faces(j);
      table.side_a[move] = static_cast<std::uint16_t>(f1);
      table.side_b[move] = static_cast<std::uint16_t>(f2);
      FlipResult flipped = flip(t, t.diagonals()[j]);
      // Target ids are looked up through node() inverse: rank of triangulation.
      ColouredTriangulation probe = ColouredTriangulation::uniform(flipped.triangulation, 0);
      table.target[move] =
          static_cast<std::uint32_t>(*graph.find(probe) / graph.words_per_triangulation());
      for (std::size_t g = 0; g < table.faces_per_triangulation; ++g) {
        table.origin[move * table.faces_per_triangulation + g] =
            static_cast<std::int16_t>(flipped.face_origin[g]);
      }
    }
  }
  return table;
}

void decode_word(std::uint64_t word, int m, std::vector<Colour>& out) {
  for (std::size_t pos = out.size(); pos > 0; --pos) {
    out[pos - 1] = static_cast<Colour>(word % m);
    word /= m;
  }
}

std::uint64_t encode_word(const std::vector<Colour>& colours, int m) {
  std::uint64_t word = 0;
  for (Colour c : colours) word = word * m + static_cast<std::uint64_t>(c);
  return word;
}

std::vector<std::uint64_t> to_offsets(const std::vector<std::uint32_t>& degree) {
  std::vector<std::uint64_t> offsets(degree.size() + 1, 0);
  for (std::size_t i = 0; i < degree.size(); ++i) offsets[i + 1] = offsets[i] + degree[i];
  return offsets;
}

bool is_involution(const ColourScheme& scheme) {
  for (Colour c = 0; c < scheme.colour_count(); ++c) {
    if (scheme.next(scheme.next(c)) != c) return false;
  }
  return true;
}

// Adds the reverse of every stored flip. Lists are sorted on input and output.
void symmetrize(std::vector<std::uint64_t>& offsets, std::vector<NodeId>& targets, int workers) {
  const std::size_t nodes = offsets.size() - 1;
  std::vector<std::uint32_t> in_degree(nodes, 0);
  for (const NodeId w : targets) ++in_degree[w];
  const auto in_offsets = to_offsets(in_degree);
  std::vector<NodeId> in_targets(targets.size());
  std::vector<std::uint64_t> cursor(in_offsets.begin(), in_offsets.end() - 1);
  for (std::size_t u = 0; u < nodes; ++u) {
    for (std::uint64_t k = offsets[u]; k < offsets[u + 1]; ++k) {
      in_targets[cursor[targets[k]]++] = static_cast<NodeId>(u);
    }
  }

  const auto count = static_cast<std::int64_t>(nodes);
  auto merge = [&](std::int64_t u, NodeId* out) {
    const NodeId* a = targets.data() + offsets[u];
    const NodeId* a_end = targets.data() + offsets[u + 1];
    const NodeId* b = in_targets.data() + in_offsets[u];
    const NodeId* b_end = in_targets.data() + in_offsets[u + 1];
    std::size_t k = 0;
    while (a != a_end || b != b_end) {
      NodeId next;
      if (b == b_end || (a != a_end && *a < *b)) {
        next = *a++;
      } else if (a == a_end || *b < *a) {
        next = *b++;
      } else {
        next = *a++;
        ++b;
      }
      if (out != nullptr) out[k] = next;
      ++k;
    }
    return k;
  };

  std::vector<std::uint32_t> degree(nodes);
#pragma omp parallel for num_threads(workers) schedule(static)
  for (std::int64_t u = 0; u < count; ++u) degree[u] = static_cast<std::uint32_t>(merge(u, nullptr));
  std::vector<std::uint64_t> merged_offsets = to_offsets(degree);
  std::vector<NodeId> merged(merged_offsets.back());
#pragma omp parallel for num_threads(workers) schedule(static)
  for (std::int64_t u = 0; u < count; ++u) merge(u, merged.data() + merged_offsets[u]);
  offsets = std::move(merged_offsets);
  targets = std::move(merged);
}

}  // namespace

void check_node_budget(int n, int m, std::uint64_t node_budget) {
  const BigInt nodes = count_coloured(n, m);
  const BigInt hard_limit = std::numeric_limits<NodeId>::max();
  if (nodes > node_budget || nodes > hard_limit) {
    throw Error(ErrorKind::kBudgetExceeded,
                "flip graph for n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                    " has " + nodes.str() + " nodes, budget is " +
                    std::to_string(node_budget));
  }
}

FlipGraph::FlipGraph(int n, ColourScheme scheme, std::vector<Triangulation> sorted)
    : n_(n), scheme_(std::move(scheme)), triangulations_(std::move(sorted)) {
  for (std::size_t r = 0; r < triangulations_.size(); ++r) {
    const auto ds = triangulations_[r].diagonals();
    rank_.emplace(std::vector<Diagonal>(ds.begin(), ds.end()),
                  static_cast<std::uint32_t>(r));
  }
  for (int k = 0; k < n - 2; ++k) words_ *= static_cast<std::uint64_t>(scheme_.colour_count());
  offsets_.assign(1, 0);
}

ColouredTriangulation FlipGraph::node(NodeId id) const {
  std::vector<Colour> colours(static_cast<std::size_t>(n_ - 2));
  decode_word(id % words_, scheme_.colour_count(), colours);
  return {triangulations_[id / words_], std::move(colours)};
}

std::optional<NodeId> FlipGraph::find(const ColouredTriangulation& ct) const {
  if (ct.vertex_count() != n_) return std::nullopt;
  for (Colour c : ct.colours) {
    if (c < 0 || c >= scheme_.colour_count()) return std::nullopt;
  }
  const auto ds = ct.triangulation.diagonals();
  auto it = rank_.find(std::vector<Diagonal>(ds.begin(), ds.end()));
  if (it == rank_.end()) return std::nullopt;
  return static_cast<NodeId>(it->second * words_ +
                             encode_word(ct.colours, scheme_.colour_count()));
}

FlipGraph build_flip_graph(int n, const ColourScheme& scheme, const BuildOptions& options) {
  check_node_budget(n, scheme.colour_count(), options.node_budget);
  const int workers = std::max(1, options.workers);

  auto tris = enumerate_triangulations(n);
  std::sort(tris.begin(), tris.end());
  FlipGraph graph(n, scheme, std::move(tris));

  const int m = scheme.colour_count();
  const std::uint64_t words = graph.words_;
  const auto nodes = static_cast<std::int64_t>(graph.triangulations_.size() * words);
  if (n == 3) {
    graph.offsets_.assign(static_cast<std::size_t>(nodes) + 1, 0);
    return graph;
  }
  const MoveTable table = build_move_table(graph, workers);
  const std::size_t per_tri = table.diagonals_per_triangulation;
  const std::size_t faces = table.faces_per_triangulation;

  std::vector<std::uint32_t> degree(static_cast<std::size_t>(nodes), 0);
#pragma omp parallel num_threads(workers)
  {
    std::vector<Colour> colours(faces);
#pragma omp for schedule(static)
    for (std::int64_t id = 0; id < nodes; ++id) {
      const std::uint64_t r = static_cast<std::uint64_t>(id) / words;
      decode_word(static_cast<std::uint64_t>(id) % words, m, colours);
      std::uint32_t deg = 0;
      for (std::size_t j = 0; j < per_tri; ++j) {
        const std::size_t move = r * per_tri + j;
        deg += colours[table.side_a[move]] == colours[table.side_b[move]];
      }
      degree[id] = deg;
    }
  }

  graph.offsets_ = to_offsets(degree);
  graph.targets_.resize(graph.offsets_.back());

#pragma omp parallel num_threads(workers)
  {
    std::vector<Colour> colours(faces);
    std::vector<Colour> next(faces);
#pragma omp for schedule(static)
    for (std::int64_t id = 0; id < nodes; ++id) {
      const std::uint64_t r = static_cast<std::uint64_t>(id) / words;
      decode_word(static_cast<std::uint64_t>(id) % words, m, colours);
      NodeId* out = graph.targets_.data() + graph.offsets_[id];
      std::size_t filled = 0;
      for (std::size_t j = 0; j < per_tri; ++j) {
        const std::size_t move = r * per_tri + j;
        const Colour shared = colours[table.side_a[move]];
        if (colours[table.side_b[move]] != shared) continue;
        const Colour painted = scheme.next(shared);
        const std::int16_t* origin = table.origin.data() + move * faces;
        for (std::size_t g = 0; g < faces; ++g) {
          next[g] = origin[g] >= 0 ? colours[origin[g]] : painted;
        }
        out[filled++] = static_cast<NodeId>(table.target[move] * words + encode_word(next, m));
      }
      std::sort(out, out + filled);
    }
  }
  if (!is_involution(scheme)) symmetrize(graph.offsets_, graph.targets_, workers);
  return graph;
}

FlipGraph build_flip_graph_reference(int n, const ColourScheme& scheme,
                                     std::uint64_t node_budget) {
  check_node_budget(n, scheme.colour_count(), node_budget);

  std::vector<ColouredTriangulation> nodes;
  for (const auto& ct : enumerate_coloured(n, scheme.colour_count())) nodes.push_back(ct);
  std::sort(nodes.begin(), nodes.end());

  auto tris = enumerate_triangulations(n);
  std::sort(tris.begin(), tris.end());
  FlipGraph graph(n, scheme, std::move(tris));

  std::vector<std::vector<NodeId>> adjacency(nodes.size());
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    for (const Diagonal d : flippable_diagonals(nodes[id])) {
      const auto next = coloured_flip(nodes[id], d, scheme);
      auto it = std::lower_bound(nodes.begin(), nodes.end(), next);
      const auto target = static_cast<std::size_t>(it - nodes.begin());
      adjacency[id].push_back(static_cast<NodeId>(target));
      adjacency[target].push_back(static_cast<NodeId>(id));
    }
  }
  for (auto& list : adjacency) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  std::vector<std::uint32_t> degree(nodes.size());
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    degree[id] = static_cast<std::uint32_t>(adjacency[id].size());
  }
  graph.offsets_ = to_offsets(degree);
  graph.targets_.reserve(graph.offsets_.back());
  for (const auto& list : adjacency) {
    graph.targets_.insert(graph.targets_.end(), list.begin(), list.end());
  }
  return graph;
}

ComponentLabels label_components(const FlipGraph& graph) {
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  ComponentLabels labels;
  labels.component_of.assign(graph.node_count(), kUnseen);
  std::vector<NodeId> stack;
  for (std::size_t start = 0; start < graph.node_count(); ++start) {
    if (labels.component_of[start] != kUnseen) continue;
    const auto label = static_cast<std::uint32_t>(labels.members.size());
    auto& members = labels.members.emplace_back();
    labels.component_of[start] = label;
    stack.assign(1, static_cast<NodeId>(start));
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (const NodeId w : graph.neighbours(u)) {
        if (labels.component_of[w] == kUnseen) {
          labels.component_of[w] = label;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
  }
  return labels;
}

Census census(const FlipGraph& graph) {
  Census out;
  for (const auto& members : label_components(graph).members) ++out[members.size()];
  return out;
}

Census census(int n, const ColourScheme& scheme, const BuildOptions& options) {
  return census(build_flip_graph(n, scheme, options));
}

std::optional<std::uint32_t> Component::index_of(const ColouredTriangulation& ct) const {
  auto it = std::lower_bound(members.begin(), members.end(), ct);
  if (it == members.end() || *it != ct) return std::nullopt;
  return static_cast<std::uint32_t>(it - members.begin());
}

Component extract_component(const FlipGraph& graph, std::span<const NodeId> ids) {
  Component comp;
  comp.ids.assign(ids.begin(), ids.end());
  std::sort(comp.ids.begin(), comp.ids.end());
  comp.members.reserve(comp.ids.size());
  comp.adjacency.resize(comp.ids.size());
  for (std::size_t i = 0; i < comp.ids.size(); ++i) {
    comp.members.push_back(graph.node(comp.ids[i]));
    for (const NodeId w : graph.neighbours(comp.ids[i])) {
      auto it = std::lower_bound(comp.ids.begin(), comp.ids.end(), w);
      if (it != comp.ids.end() && *it == w) {
        comp.adjacency[i].push_back(static_cast<std::uint32_t>(it - comp.ids.begin()));
      }
    }
  }
  return comp;
}

Component component_of(const ColouredTriangulation& ct, const ColourScheme& scheme,
                       std::uint64_t node_budget) {
  check_colours(ct, scheme);
  std::map<ColouredTriangulation, std::uint32_t> seen;
  std::vector<ColouredTriangulation> order;
  std::vector<std::vector<std::uint32_t>> adjacency;
  std::deque<std::uint32_t> queue;

  auto visit = [&](const ColouredTriangulation& x) {
    auto [it, inserted] = seen.emplace(x, static_cast<std::uint32_t>(order.size()));
    if (inserted) {
      if (order.size() >= node_budget) {
        throw Error(ErrorKind::kBudgetExceeded,
                    "component exceeds node budget of " + std::to_string(node_budget));
      }
      order.push_back(x);
      adjacency.emplace_back();
      queue.push_back(it->second);
    }
    return it->second;
  };

  // Reverse edges are flips under the inverse permutation.
  std::optional<ColourScheme> inverse;
  if (!is_involution(scheme)) {
    std::vector<Colour> images(static_cast<std::size_t>(scheme.colour_count()));
    for (Colour c = 0; c < scheme.colour_count(); ++c) images[scheme.next(c)] = c;
    inverse = ColourScheme::from_images(std::move(images));
  }

  visit(ct);
  while (!queue.empty()) {
    const std::uint32_t u = queue.front();
    queue.pop_front();
    for (const Diagonal d : flippable_diagonals(order[u])) {
      // visit() may grow adjacency, so take the index before indexing.
      const std::uint32_t w = visit(coloured_flip(order[u], d, scheme));
      adjacency[u].push_back(w);
      if (inverse) {
        const std::uint32_t v = visit(coloured_flip(order[u], d, *inverse));
        adjacency[u].push_back(v);
      }
    }
  }

  // Relabel local indices into canonical member order.
  Component comp;
  std::vector<std::uint32_t> rank(order.size());
  {
    std::uint32_t next = 0;
    for (auto& [key, local] : seen) rank[local] = next++;
  }
  comp.members.reserve(order.size());
  for (auto& [key, local] : seen) comp.members.push_back(key);
  comp.adjacency.resize(order.size());
  for (std::size_t u = 0; u < order.size(); ++u) {
    auto& list = comp.adjacency[rank[u]];
    for (const std::uint32_t w : adjacency[u]) list.push_back(rank[w]);
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return comp;
}

void attach_node_ids(Component& comp, int colour_count) {
  comp.ids.clear();
  if (comp.members.empty()) return;
  const int n = comp.members.front().vertex_count();
  auto tris = enumerate_triangulations(n);
  std::sort(tris.begin(), tris.end());
  std::uint64_t words = 1;
  for (int k = 0; k < n - 2; ++k) words *= static_cast<std::uint64_t>(colour_count);
  for (const auto& member : comp.members) {
    auto it = std::lower_bound(tris.begin(), tris.end(), member.triangulation);
    const auto rank = static_cast<std::uint64_t>(it - tris.begin());
    comp.ids.push_back(static_cast<NodeId>(rank * words + encode_word(member.colours, colour_count)));
  }
}

}  // namespace flipgraph
