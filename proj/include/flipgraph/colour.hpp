#pragma once

// Coloured triangulations and sigma-flips. Colours are 0-based; the cyclic
// scheme maps colour i to (i + 1) mod m. For two colours, colour 0 is the
// "+" sign and colour 1 the "-" sign.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

#include "flipgraph/polygon.hpp"

namespace flipgraph {

using Colour = int;

/// Colour count m plus the permutation sigma applied to the two triangles
/// created by a flip.
class ColourScheme {
 public:
  /// sigma = (0 1 ... m-1).
  static ColourScheme cyclic(int m);
  static ColourScheme identity(int m);
  /// images[i] = sigma(i); throws kInvalidArgument unless a bijection.
  static ColourScheme from_images(std::vector<Colour> images);

  int colour_count() const noexcept { return static_cast<int>(images_.size()); }
  Colour next(Colour c) const { return images_[c]; }
  std::span<const Colour> images() const noexcept { return images_; }

  bool is_single_cycle() const;
  bool is_cyclic() const;
  /// Smallest colour in the sigma-cycle through c.
  Colour cycle_of(Colour c) const;

  friend bool operator==(const ColourScheme&, const ColourScheme&) = default;

 private:
  explicit ColourScheme(std::vector<Colour> images) : images_(std::move(images)) {}
  std::vector<Colour> images_;
};

/// A triangulation with one colour per face, aligned with faces().
struct ColouredTriangulation {
  Triangulation triangulation;
  std::vector<Colour> colours;

  /// Checks one non-negative colour per face; throws kInvalidArgument.
  static ColouredTriangulation make(Triangulation t, std::vector<Colour> colours);
  static ColouredTriangulation uniform(Triangulation t, Colour c);

  int vertex_count() const noexcept { return triangulation.vertex_count(); }

  friend bool operator==(const ColouredTriangulation&,
                         const ColouredTriangulation&) = default;
  friend std::strong_ordering operator<=>(const ColouredTriangulation& x,
                                          const ColouredTriangulation& y) {
    if (auto c = x.triangulation <=> y.triangulation; c != 0) return c;
    return x.colours <=> y.colours;
  }
};

/// Throws kInvalidArgument if some colour of ct is not below scheme's m.
void check_colours(const ColouredTriangulation& ct, const ColourScheme& scheme);

/// Diagonals whose two incident triangles share a colour.
std::vector<Diagonal> flippable_diagonals(const ColouredTriangulation& ct);
bool is_flippable(const ColouredTriangulation& ct, Diagonal d);
bool is_frozen(const ColouredTriangulation& ct);

/// Flips d and paints both new triangles sigma(i), where i is the shared
/// colour of the old ones. Other triangles keep their colours.
/// Throws kUnknownDiagonal or kNotFlippable.
ColouredTriangulation coloured_flip(const ColouredTriangulation& ct, Diagonal d,
                                    const ColourScheme& scheme);

/// catalan(n-2) * m^(n-2).
BigInt count_coloured(int n, int m);
/// catalan(k) * m * (m-1)^(k-1) with k = n-2 triangles.
BigInt count_frozen(int n, int m);

/// Lazily yields every coloured triangulation of the n-gon: triangulations in
/// enumerate_triangulations order, colour words lexicographic within each.
class ColouredEnumeration {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = ColouredTriangulation;
    using difference_type = std::ptrdiff_t;
    using pointer = const ColouredTriangulation*;
    using reference = const ColouredTriangulation&;

    iterator() = default;
    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return !it.current_.has_value();
    }

   private:
    friend class ColouredEnumeration;
    iterator(const ColouredEnumeration* owner);
    void load();

    const ColouredEnumeration* owner_ = nullptr;
    std::size_t tri_ = 0;
    std::vector<Colour> word_;
    std::optional<ColouredTriangulation> current_;
  };

  ColouredEnumeration(int n, int m);

  iterator begin() const { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

  int vertex_count() const noexcept { return n_; }
  int colour_count() const noexcept { return m_; }

 private:
  int n_;
  int m_;
  std::vector<Triangulation> triangulations_;
};

ColouredEnumeration enumerate_coloured(int n, int m);

struct FlipSequence {
  std::vector<Diagonal> steps;

  friend bool operator==(const FlipSequence&, const FlipSequence&) = default;
};

/// Left-to-right composition of coloured_flip. Throws SequenceError naming
/// the first step that is not a valid coloured flip.
ColouredTriangulation apply_sequence(const ColouredTriangulation& ct,
                                     const FlipSequence& seq,
                                     const ColourScheme& scheme);

/// Rewrites a valid 2-coloured sequence from start as a sequence for the
/// cyclic m-colour scheme (m even): a flip out of colour 0 stays single, a
/// flip out of colour 1 becomes m-1 flips on the same quadrilateral.
/// start must only use colours 0 and 1.
FlipSequence translate_sequence(const ColouredTriangulation& start,
                                const FlipSequence& seq2, int m);

struct CycleRegion {
  Colour cycle;  // smallest colour of the sigma-cycle
  std::vector<std::size_t> faces;
};

/// Faces grouped by the sigma-cycle of their colour, ordered by cycle.
std::vector<CycleRegion> cycle_regions(const ColouredTriangulation& ct,
                                       const ColourScheme& scheme);

}  // namespace flipgraph
