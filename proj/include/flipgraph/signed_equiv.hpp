#pragma once

// Two-coloured ("signed") triangulations and their equivalent encodings:
// vertex weightings, diagonal valuations and proper vertex 4-colourings.
// Colour 0 is the sign +1, colour 1 the sign -1.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "flipgraph/colour.hpp"

namespace flipgraph {

/// Per vertex: sum of incident face signs mod 3, reported as -1, 0 or +1.
struct Weighting {
  std::vector<int> values;
  friend bool operator==(const Weighting&, const Weighting&) = default;
};

/// Per diagonal (in diagonals() order): 0 iff both incident faces share a sign.
struct Valuation {
  std::vector<std::uint8_t> bits;
  friend bool operator==(const Valuation&, const Valuation&) = default;
};

/// Vertex colours 0..3 (printed a..d), canonical: vertex 0 has colour 0 and
/// each new colour first appears in increasing order.
struct VertexColouring {
  std::vector<std::uint8_t> colours;
  friend bool operator==(const VertexColouring&, const VertexColouring&) = default;
  friend auto operator<=>(const VertexColouring&, const VertexColouring&) = default;
};

/// Throws kUnsupported if ct uses a colour other than 0 and 1.
void require_signed(const ColouredTriangulation& ct);

int sign_of(Colour c);

Weighting weighting(const ColouredTriangulation& ct);

Valuation valuation(const ColouredTriangulation& ct);

/// Both sign assignments with the given valuation; the first has face 0
/// coloured 0 and the second is its global swap.
std::array<ColouredTriangulation, 2> signs_from_valuation(const Triangulation& t,
                                                          const Valuation& v);

/// Relabels colours by first occurrence over vertices 0..n-1.
VertexColouring canonicalize(std::vector<std::uint8_t> colours);

/// Colours the ear at the lowest-index degree-2 vertex (or at seed_vertex,
/// which must have degree 2) with three distinct colours, then crosses each
/// diagonal yt of a quadrilateral xyzt: z copies x's colour if v(yt) = 1 and
/// takes the fourth colour if v(yt) = 0. Result is canonical.
VertexColouring colouring_from_valuation(const Triangulation& t, const Valuation& v,
                                         std::optional<Vertex> seed_vertex = std::nullopt);

/// A diagonal is 0 iff the four vertices of its quadrilateral all differ.
/// Throws kInvalidArgument if col is not proper on t.
Valuation valuation_from_colouring(const Triangulation& t, const VertexColouring& col);

/// The unique sign assignment matching p on t, or nullopt. Peels ears: a
/// degree-2 vertex with residue 0 fails, otherwise its residue fixes the
/// sign of its triangle, which is subtracted before recursing.
std::optional<ColouredTriangulation> signs_from_weighting(const Triangulation& t,
                                                          const Weighting& p);

bool uses_four_colours(const VertexColouring& col);

/// All diagonals valued 1.
bool is_alternating(const ColouredTriangulation& ct);

/// Swaps colours 0 and 1 on every face.
ColouredTriangulation global_swap(const ColouredTriangulation& ct);

/// Representative of {ct, global_swap(ct)} with the smaller colour word.
ColouredTriangulation signed_class(const ColouredTriangulation& ct);

/// Canonical 4-colouring of ct's valuation.
VertexColouring colouring(const ColouredTriangulation& ct);

/// True iff ct1 and ct2 lie in the same signed class, or their canonical
/// colourings agree and use four colours. Throws kInvalidArgument if the
/// polygons differ.
bool decide_equivalence(const ColouredTriangulation& ct1, const ColouredTriangulation& ct2);

}  // namespace flipgraph
