#include "flipgraph/hypercube.hpp"

#include <algorithm>
#include <string>

#include "flipgraph/error.hpp"

namespace flipgraph {

namespace {

bool faces_overlap(const Triangulation& t, std::size_t i, std::size_t j) {
  auto [a1, a2] = t.incident_faces(i);
  auto [b1, b2] = t.incident_faces(j);
  return a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2;
}

struct IndependentSearch {
  const Triangulation& t;
  std::vector<std::size_t> candidates;  // diagonal indices, ascending
  std::vector<std::size_t> current;
  std::vector<std::size_t> best;

  void run(std::size_t pos) {
    if (current.size() + (candidates.size() - pos) <= best.size()) return;
    if (pos == candidates.size()) {
      best = current;
      return;
    }
    const std::size_t c = candidates[pos];
    bool compatible = std::none_of(current.begin(), current.end(), [&](std::size_t chosen) {
      return faces_overlap(t, chosen, c);
    });
    // Including first visits equal-size sets in lexicographic order.
    if (compatible) {
      current.push_back(c);
      run(pos + 1);
      current.pop_back();
    }
    run(pos + 1);
  }
};

}  // namespace

bool quadrilaterals_disjoint(const Triangulation& t, Diagonal x, Diagonal y) {
  auto i = t.find_diagonal(x);
  auto j = t.find_diagonal(y);
  if (!i || !j) throw Error(ErrorKind::kUnknownDiagonal, "unknown diagonal");
  return *i != *j && !faces_overlap(t, *i, *j);
}

std::vector<Diagonal> independent_flippable_set(const ColouredTriangulation& ct) {
  const Triangulation& t = ct.triangulation;
  IndependentSearch search{t, {}, {}, {}};
  for (std::size_t i = 0; i < t.diagonals().size(); ++i) {
    auto [f1, f2] = t.incident_faces(i);
    if (ct.colours[f1] == ct.colours[f2]) search.candidates.push_back(i);
  }
  search.run(0);
  std::vector<Diagonal> out;
  for (std::size_t i : search.best) out.push_back(t.diagonals()[i]);
  return out;
}

HypercubeWitness verify_hypercube(const ColouredTriangulation& ct,
                                  std::span<const Diagonal> generators,
                                  const ColourScheme& scheme) {
  check_colours(ct, scheme);
  const std::size_t k = generators.size();
  if (k > 24) throw Error(ErrorKind::kInvalidArgument, "hypercube dimension too large");
  for (std::size_t i = 0; i < k; ++i) {
    if (!is_flippable(ct, generators[i])) {
      throw Error(ErrorKind::kInvalidArgument, "generator " + std::to_string(i) +
                                                   " is not a flippable diagonal");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!quadrilaterals_disjoint(ct.triangulation, generators[i], generators[j])) {
        throw Error(ErrorKind::kInvalidArgument,
                    "generators " + std::to_string(j) + " and " + std::to_string(i) +
                        " have overlapping quadrilaterals");
      }
    }
  }

  HypercubeWitness cube;
  cube.dimension = static_cast<int>(k);
  cube.generators.assign(generators.begin(), generators.end());
  const std::uint32_t corners = 1u << k;
  cube.nodes.reserve(corners);
  cube.nodes.push_back(ct);
  for (std::uint32_t mask = 1; mask < corners; ++mask) {
    const int high = 31 - __builtin_clz(mask);
    cube.nodes.push_back(coloured_flip(cube.nodes[mask ^ (1u << high)], generators[high], scheme));
  }

  // Every corner must be reachable from each lower neighbour by the matching
  // generator, whatever order the other generators were applied in.
  for (std::uint32_t mask = 1; mask < corners; ++mask) {
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint32_t bit = 1u << i;
      if (!(mask & bit)) continue;
      const std::uint32_t lower = mask ^ bit;
      bool closes = false;
      try {
        closes = coloured_flip(cube.nodes[lower], generators[i], scheme) == cube.nodes[mask];
      } catch (const Error&) {
        closes = false;
      }
      if (!closes) {
        throw Error(ErrorKind::kInternal,
                    "hypercube does not close: flips do not commute at corner " +
                        std::to_string(mask));
      }
      cube.edges.emplace_back(lower, mask);
    }
  }

  std::vector<ColouredTriangulation> sorted = cube.nodes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::kInternal, "hypercube corners are not distinct");
  }
  return cube;
}

std::vector<int> FanHypercubes::dimensions() const {
  std::vector<int> dims;
  for (const auto& w : witnesses) dims.push_back(w.dimension);
  return dims;
}

FanHypercubes fan_hypercube_dims(int n) {
  if (n < 5) {
    throw Error(ErrorKind::kInvalidArgument,
                "fan hypercubes need at least 5 vertices, got " + std::to_string(n));
  }
  const auto scheme = ColourScheme::cyclic(2);
  FanHypercubes out{ColouredTriangulation::uniform(fan(n, 0), 0), {}, 0};

  // Fan triangles are {0, t+1, t+2}; pairing triangles t and t+1 flips (0, t+2).
  const int triangles = n - 2;
  auto pairs_from = [&](int first, int last_triangle) {
    std::vector<Diagonal> gens;
    for (int t = first; t + 1 <= last_triangle; t += 2) gens.push_back(make_diagonal(n, 0, t + 2));
    return gens;
  };
  std::vector<std::vector<Diagonal>> choices;
  if (triangles % 2 == 0) {
    choices.push_back(pairs_from(0, triangles - 1));
    choices.push_back(pairs_from(1, triangles - 1));
  } else {
    choices.push_back(pairs_from(1, triangles - 1));
    choices.push_back(pairs_from(0, triangles - 2));
  }
  for (const auto& gens : choices) out.witnesses.push_back(verify_hypercube(out.base, gens, scheme));

  std::vector<ColouredTriangulation> a = out.witnesses[0].nodes;
  std::vector<ColouredTriangulation> b = out.witnesses[1].nodes;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<ColouredTriangulation> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  out.shared_nodes = both.size();
  return out;
}

}  // namespace flipgraph
