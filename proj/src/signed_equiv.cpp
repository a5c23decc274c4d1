#include "flipgraph/signed_equiv.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "flipgraph/error.hpp"

namespace flipgraph {

namespace {

constexpr std::uint8_t kNoColour = 0xff;

int residue(int x) { return ((x % 3) + 3) % 3; }

int residue_to_weight(int r) { return r == 2 ? -1 : r; }

Vertex apex_of(const Face& f, Diagonal d) {
  for (Vertex v : f) {
    if (v != d.a && v != d.b) return v;
  }
  return -1;
}

void require_valuation_size(const Triangulation& t, const Valuation& v) {
  if (v.bits.size() != t.diagonals().size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "valuation has " + std::to_string(v.bits.size()) + " entries, expected " +
                    std::to_string(t.diagonals().size()));
  }
  for (auto b : v.bits) {
    if (b > 1) throw Error(ErrorKind::kInvalidArgument, "valuation entries must be 0 or 1");
  }
}

// Diagonal indices incident to each face.
std::vector<std::vector<std::size_t>> face_diagonals(const Triangulation& t) {
  std::vector<std::vector<std::size_t>> out(t.faces().size());
  for (std::size_t j = 0; j < t.diagonals().size(); ++j) {
    auto [f1, f2] = t.incident_faces(j);
    out[f1].push_back(j);
    out[f2].push_back(j);
  }
  return out;
}

}  // namespace

void require_signed(const ColouredTriangulation& ct) {
  for (Colour c : ct.colours) {
    if (c != 0 && c != 1) {
      throw Error(ErrorKind::kUnsupported,
                  "signed triangulations use colours 0 and 1 only, found " + std::to_string(c));
    }
  }
}

int sign_of(Colour c) { return c == 0 ? 1 : -1; }

Weighting weighting(const ColouredTriangulation& ct) {
  require_signed(ct);
  std::vector<int> sums(static_cast<std::size_t>(ct.vertex_count()), 0);
  const auto faces = ct.triangulation.faces();
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (Vertex v : faces[f]) sums[v] += sign_of(ct.colours[f]);
  }
  Weighting p;
  p.values.reserve(sums.size());
  for (int s : sums) p.values.push_back(residue_to_weight(residue(s)));
  return p;
}

Valuation valuation(const ColouredTriangulation& ct) {
  require_signed(ct);
  const auto& t = ct.triangulation;
  Valuation v;
  v.bits.reserve(t.diagonals().size());
  for (std::size_t j = 0; j < t.diagonals().size(); ++j) {
    auto [f1, f2] = t.incident_faces(j);
    v.bits.push_back(ct.colours[f1] == ct.colours[f2] ? 0 : 1);
  }
  return v;
}

std::array<ColouredTriangulation, 2> signs_from_valuation(const Triangulation& t,
                                                          const Valuation& v) {
  require_valuation_size(t, v);
  const auto incident = face_diagonals(t);
  std::vector<Colour> colours(t.faces().size(), -1);
  colours[0] = 0;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t f = queue.front();
    queue.pop_front();
    for (std::size_t j : incident[f]) {
      auto [f1, f2] = t.incident_faces(j);
      const std::size_t g = f1 == f ? f2 : f1;
      if (colours[g] >= 0) continue;
      colours[g] = colours[f] ^ v.bits[j];
      queue.push_back(g);
    }
  }
  ColouredTriangulation s{t, std::move(colours)};
  ColouredTriangulation swapped = global_swap(s);
  return {std::move(s), std::move(swapped)};
}

VertexColouring canonicalize(std::vector<std::uint8_t> colours) {
  std::array<std::uint8_t, 256> relabel;
  relabel.fill(kNoColour);
  std::uint8_t next = 0;
  for (auto& c : colours) {
    if (relabel[c] == kNoColour) relabel[c] = next++;
    c = relabel[c];
  }
  return {std::move(colours)};
}

VertexColouring colouring_from_valuation(const Triangulation& t, const Valuation& v,
                                         std::optional<Vertex> seed_vertex) {
  require_valuation_size(t, v);
  const int n = t.vertex_count();
  Vertex seed = -1;
  if (seed_vertex) {
    if (*seed_vertex < 0 || *seed_vertex >= n || t.degree(*seed_vertex) != 2) {
      throw Error(ErrorKind::kInvalidArgument, "seed vertex must have degree 2");
    }
    seed = *seed_vertex;
  } else {
    for (Vertex x = 0; x < n && seed < 0; ++x) {
      if (t.degree(x) == 2) seed = x;
    }
  }
  const auto faces = t.faces();
  std::size_t ear = 0;
  while (std::find(faces[ear].begin(), faces[ear].end(), seed) == faces[ear].end()) ++ear;

  std::vector<std::uint8_t> col(static_cast<std::size_t>(n), kNoColour);
  for (std::uint8_t i = 0; i < 3; ++i) col[faces[ear][i]] = i;

  const auto incident = face_diagonals(t);
  std::vector<bool> visited(faces.size(), false);
  visited[ear] = true;
  std::deque<std::size_t> queue{ear};
  while (!queue.empty()) {
    const std::size_t f = queue.front();
    queue.pop_front();
    for (std::size_t j : incident[f]) {
      auto [f1, f2] = t.incident_faces(j);
      const std::size_t g = f1 == f ? f2 : f1;
      if (visited[g]) continue;
      visited[g] = true;
      const Diagonal d = t.diagonals()[j];
      const Vertex x = apex_of(faces[f], d);
      const Vertex z = apex_of(faces[g], d);
      std::uint8_t colour = col[x];
      if (v.bits[j] == 0) {
        colour = 0;
        while (colour == col[x] || colour == col[d.a] || colour == col[d.b]) ++colour;
      }
      if (col[z] != kNoColour && col[z] != colour) {
        throw Error(ErrorKind::kInternal, "colour propagation conflict at vertex " +
                                              std::to_string(z));
      }
      col[z] = colour;
      queue.push_back(g);
    }
  }
  return canonicalize(std::move(col));
}

Valuation valuation_from_colouring(const Triangulation& t, const VertexColouring& col) {
  const int n = t.vertex_count();
  if (col.colours.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::kInvalidArgument, "colouring has the wrong number of vertices");
  }
  for (Vertex x = 0; x < n; ++x) {
    if (col.colours[x] == col.colours[(x + 1) % n]) {
      throw Error(ErrorKind::kInvalidArgument, "colouring is not proper on a boundary edge");
    }
  }
  Valuation v;
  for (const Diagonal d : t.diagonals()) {
    if (col.colours[d.a] == col.colours[d.b]) {
      throw Error(ErrorKind::kInvalidArgument, "colouring is not proper on a diagonal");
    }
    const auto q = quadrilateral_of(t, d);
    std::array<std::uint8_t, 4> cs{col.colours[q[0]], col.colours[q[1]], col.colours[q[2]],
                                   col.colours[q[3]]};
    std::sort(cs.begin(), cs.end());
    const bool all_distinct = std::adjacent_find(cs.begin(), cs.end()) == cs.end();
    v.bits.push_back(all_distinct ? 0 : 1);
  }
  return v;
}

std::optional<ColouredTriangulation> signs_from_weighting(const Triangulation& t,
                                                          const Weighting& p) {
  const int n = t.vertex_count();
  if (p.values.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::kInvalidArgument, "weighting has the wrong number of vertices");
  }
  std::vector<int> rest(static_cast<std::size_t>(n));
  for (Vertex x = 0; x < n; ++x) {
    const int w = p.values[x];
    if (w < -1 || w > 1) throw Error(ErrorKind::kInvalidArgument, "weights must be -1, 0 or 1");
    rest[x] = residue(w);
  }

  const auto faces = t.faces();
  std::vector<bool> alive(faces.size(), true);
  std::vector<int> live_faces(static_cast<std::size_t>(n), 0);
  for (const Face& f : faces) {
    for (Vertex v : f) ++live_faces[v];
  }
  std::vector<Colour> colours(faces.size(), 0);

  for (std::size_t step = 0; step < faces.size(); ++step) {
    Vertex ear_tip = 0;
    while (live_faces[ear_tip] != 1) ++ear_tip;
    if (rest[ear_tip] == 0) return std::nullopt;
    const int sign = rest[ear_tip] == 1 ? 1 : -1;

    std::size_t f = 0;
    while (!alive[f] ||
           std::find(faces[f].begin(), faces[f].end(), ear_tip) == faces[f].end()) {
      ++f;
    }
    colours[f] = sign > 0 ? 0 : 1;
    alive[f] = false;
    for (Vertex v : faces[f]) {
      rest[v] = residue(rest[v] - sign);
      --live_faces[v];
    }
  }
  if (std::any_of(rest.begin(), rest.end(), [](int r) { return r != 0; })) return std::nullopt;
  return ColouredTriangulation{t, std::move(colours)};
}

bool uses_four_colours(const VertexColouring& col) {
  std::array<bool, 256> seen{};
  int distinct = 0;
  for (auto c : col.colours) {
    if (!seen[c]) {
      seen[c] = true;
      ++distinct;
    }
  }
  return distinct == 4;
}

bool is_alternating(const ColouredTriangulation& ct) {
  const Valuation v = valuation(ct);
  return std::all_of(v.bits.begin(), v.bits.end(), [](auto b) { return b == 1; });
}

ColouredTriangulation global_swap(const ColouredTriangulation& ct) {
  require_signed(ct);
  ColouredTriangulation out = ct;
  for (auto& c : out.colours) c = 1 - c;
  return out;
}

ColouredTriangulation signed_class(const ColouredTriangulation& ct) {
  ColouredTriangulation swapped = global_swap(ct);
  return swapped.colours < ct.colours ? swapped : ct;
}

VertexColouring colouring(const ColouredTriangulation& ct) {
  return colouring_from_valuation(ct.triangulation, valuation(ct));
}

bool decide_equivalence(const ColouredTriangulation& ct1, const ColouredTriangulation& ct2) {
  if (ct1.vertex_count() != ct2.vertex_count()) {
    throw Error(ErrorKind::kInvalidArgument,
                "cannot compare a " + std::to_string(ct1.vertex_count()) + "-gon with a " +
                    std::to_string(ct2.vertex_count()) + "-gon");
  }
  require_signed(ct1);
  require_signed(ct2);
  if (signed_class(ct1) == signed_class(ct2)) return true;
  const VertexColouring c1 = colouring(ct1);
  return c1 == colouring(ct2) && uses_four_colours(c1);
}

}  // namespace flipgraph
