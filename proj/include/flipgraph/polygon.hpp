#pragma once

// Uncoloured triangulations of a convex polygon with vertices 0..n-1 in
// counterclockwise order. No quotient by rotation or reflection is taken.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace flipgraph {

using BigInt = boost::multiprecision::cpp_int;
using Vertex = int;

/// A chord between two non-adjacent polygon vertices, stored with a < b.
struct Diagonal {
  Vertex a = 0;
  Vertex b = 0;

  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

/// Vertex triple of a triangle, sorted ascending.
using Face = std::array<Vertex, 3>;

/// True when {a, b} (in either order) is a diagonal of the n-gon.
bool is_valid_diagonal(int n, Diagonal d);

/// Normalizes the endpoint order and validates; throws kInvalidArgument.
Diagonal make_diagonal(int n, Vertex u, Vertex v);

/// Two diagonals cross iff exactly one endpoint of y lies strictly inside the
/// open interval (x.a, x.b). Diagonals sharing an endpoint never cross.
bool crosses(Diagonal x, Diagonal y);

/// A triangulation in canonical form: diagonals sorted lexicographically,
/// faces derived from them (each face sorted, face list sorted).
class Triangulation {
 public:
  /// Validates count, range and pairwise non-crossing; throws
  /// kInvalidArgument otherwise. Input order of diagonals is irrelevant.
  static Triangulation from_diagonals(int n, std::vector<Diagonal> diagonals);

  int vertex_count() const noexcept { return n_; }
  std::span<const Diagonal> diagonals() const noexcept { return diagonals_; }
  std::span<const Face> faces() const noexcept { return faces_; }

  std::optional<std::size_t> find_diagonal(Diagonal d) const;
  std::optional<std::size_t> find_face(const Face& f) const;

  /// Indices (into faces()) of the two triangles on either side of the
  /// diagonal with the given index; first < second.
  std::array<std::size_t, 2> incident_faces(std::size_t diagonal_index) const {
    return incident_[diagonal_index];
  }

  /// Number of neighbours of v in the triangulated polygon (boundary + diagonals).
  int degree(Vertex v) const;

  friend bool operator==(const Triangulation& x, const Triangulation& y) {
    return x.n_ == y.n_ && x.diagonals_ == y.diagonals_;
  }
  friend std::strong_ordering operator<=>(const Triangulation& x,
                                          const Triangulation& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    return x.diagonals_ <=> y.diagonals_;
  }

 private:
  Triangulation() = default;

  int n_ = 0;
  std::vector<Diagonal> diagonals_;
  std::vector<Face> faces_;
  std::vector<std::array<std::size_t, 2>> incident_;
};

/// k-th Catalan number, exact.
BigInt catalan(unsigned k);

/// All catalan(n-2) triangulations. Order follows the recursion on edge
/// (0, n-1): the apex of the triangle on that edge ascends, then the left
/// sub-polygon varies slowest.
std::vector<Triangulation> enumerate_triangulations(int n);

struct FlipResult {
  Triangulation triangulation;
  Diagonal inserted;
  /// For each face of the new triangulation, the index of the same triangle
  /// in the old one, or -1 for the two triangles created by the flip.
  std::vector<int> face_origin;
};

/// Replaces d by the other diagonal of its quadrilateral. Throws
/// kUnknownDiagonal if d is not in t.
FlipResult flip(const Triangulation& t, Diagonal d);

/// The quadrilateral around d in cyclic order; d joins positions 0 and 2.
std::array<Vertex, 4> quadrilateral_of(const Triangulation& t, Diagonal d);

struct DualTree {
  std::size_t node_count = 0;
  /// Face index pairs, one per diagonal, in diagonal order.
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::vector<std::size_t> degrees() const;
  std::size_t leaf_count() const;
};

DualTree dual_tree(const Triangulation& t);

/// The fan triangulation with every diagonal incident to apex.
Triangulation fan(int n, Vertex apex);

}  // namespace flipgraph
