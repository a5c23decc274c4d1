#include "flipgraph/colour.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "flipgraph/error.hpp"

namespace flipgraph {

namespace {

void require_colour_count(int m) {
  if (m < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "need at least one colour, got " + std::to_string(m));
  }
}

std::string describe(Diagonal d) {
  return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
}

}  // namespace

ColourScheme ColourScheme::cyclic(int m) {
  require_colour_count(m);
  std::vector<Colour> images(m);
  for (int i = 0; i < m; ++i) images[i] = (i + 1) % m;
  return ColourScheme(std::move(images));
}

ColourScheme ColourScheme::identity(int m) {
  require_colour_count(m);
  std::vector<Colour> images(m);
  std::iota(images.begin(), images.end(), 0);
  return ColourScheme(std::move(images));
}

ColourScheme ColourScheme::from_images(std::vector<Colour> images) {
  require_colour_count(static_cast<int>(images.size()));
  std::vector<bool> hit(images.size(), false);
  for (Colour c : images) {
    if (c < 0 || c >= static_cast<Colour>(images.size()) || hit[c]) {
      throw Error(ErrorKind::kInvalidArgument, "sigma is not a permutation");
    }
    hit[c] = true;
  }
  return ColourScheme(std::move(images));
}

bool ColourScheme::is_single_cycle() const {
  Colour c = 0;
  int length = 0;
  do {
    c = images_[c];
    ++length;
  } while (c != 0);
  return length == colour_count();
}

bool ColourScheme::is_cyclic() const { return *this == cyclic(colour_count()); }

Colour ColourScheme::cycle_of(Colour c) const {
  Colour smallest = c;
  for (Colour x = images_[c]; x != c; x = images_[x]) smallest = std::min(smallest, x);
  return smallest;
}

ColouredTriangulation ColouredTriangulation::make(Triangulation t,
                                                  std::vector<Colour> colours) {
  if (colours.size() != t.faces().size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "expected " + std::to_string(t.faces().size()) +
                    " face colours, got " + std::to_string(colours.size()));
  }
  for (Colour c : colours) {
    if (c < 0) throw Error(ErrorKind::kInvalidArgument, "negative colour");
  }
  return {std::move(t), std::move(colours)};
}

ColouredTriangulation ColouredTriangulation::uniform(Triangulation t, Colour c) {
  std::vector<Colour> colours(t.faces().size(), c);
  return make(std::move(t), std::move(colours));
}

void check_colours(const ColouredTriangulation& ct, const ColourScheme& scheme) {
  for (Colour c : ct.colours) {
    if (c < 0 || c >= scheme.colour_count()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "colour " + std::to_string(c) + " outside 0.." +
                      std::to_string(scheme.colour_count() - 1));
    }
  }
}

std::vector<Diagonal> flippable_diagonals(const ColouredTriangulation& ct) {
  std::vector<Diagonal> out;
  const auto& t = ct.triangulation;
  for (std::size_t i = 0; i < t.diagonals().size(); ++i) {
    auto [f1, f2] = t.incident_faces(i);
    if (ct.colours[f1] == ct.colours[f2]) out.push_back(t.diagonals()[i]);
  }
  return out;
}

bool is_flippable(const ColouredTriangulation& ct, Diagonal d) {
  auto index = ct.triangulation.find_diagonal(d);
  if (!index) return false;
  auto [f1, f2] = ct.triangulation.incident_faces(*index);
  return ct.colours[f1] == ct.colours[f2];
}

bool is_frozen(const ColouredTriangulation& ct) {
  const auto& t = ct.triangulation;
  for (std::size_t i = 0; i < t.diagonals().size(); ++i) {
    auto [f1, f2] = t.incident_faces(i);
    if (ct.colours[f1] == ct.colours[f2]) return false;
  }
  return true;
}

ColouredTriangulation coloured_flip(const ColouredTriangulation& ct, Diagonal d,
                                    const ColourScheme& scheme) {
  auto index = ct.triangulation.find_diagonal(d);
  if (!index) throw Error(ErrorKind::kUnknownDiagonal, "unknown diagonal " + describe(d));
  auto [f1, f2] = ct.triangulation.incident_faces(*index);
  Colour shared = ct.colours[f1];
  if (ct.colours[f2] != shared) {
    throw Error(ErrorKind::kNotFlippable,
                "diagonal " + describe(d) + " is not flippable");
  }
  if (shared >= scheme.colour_count()) check_colours(ct, scheme);
  Colour painted = scheme.next(shared);

  FlipResult r = flip(ct.triangulation, d);
  std::vector<Colour> colours(r.face_origin.size());
  for (std::size_t g = 0; g < colours.size(); ++g) {
    colours[g] = r.face_origin[g] >= 0 ? ct.colours[r.face_origin[g]] : painted;
  }
  return {std::move(r.triangulation), std::move(colours)};
}

BigInt count_coloured(int n, int m) {
  if (n < 3) throw Error(ErrorKind::kInvalidArgument, "polygon needs at least 3 vertices");
  require_colour_count(m);
  return catalan(n - 2) * boost::multiprecision::pow(BigInt(m), n - 2);
}

BigInt count_frozen(int n, int m) {
  if (n < 3) throw Error(ErrorKind::kInvalidArgument, "polygon needs at least 3 vertices");
  require_colour_count(m);
  const int k = n - 2;
  return catalan(k) * m * boost::multiprecision::pow(BigInt(m - 1), k - 1);
}

ColouredEnumeration::ColouredEnumeration(int n, int m)
    : n_(n), m_(m), triangulations_(enumerate_triangulations(n)) {
  require_colour_count(m);
}

ColouredEnumeration::iterator::iterator(const ColouredEnumeration* owner)
    : owner_(owner), word_(owner->n_ - 2, 0) {
  load();
}

void ColouredEnumeration::iterator::load() {
  if (tri_ >= owner_->triangulations_.size()) {
    current_.reset();
    return;
  }
  current_ = ColouredTriangulation{owner_->triangulations_[tri_], word_};
}

ColouredEnumeration::iterator& ColouredEnumeration::iterator::operator++() {
  // Odometer over colour words; the last face is the fastest digit.
  std::size_t pos = word_.size();
  while (pos > 0) {
    --pos;
    if (++word_[pos] < owner_->m_) {
      load();
      return *this;
    }
    word_[pos] = 0;
  }
  ++tri_;
  load();
  return *this;
}

ColouredEnumeration enumerate_coloured(int n, int m) { return ColouredEnumeration(n, m); }

ColouredTriangulation apply_sequence(const ColouredTriangulation& ct,
                                     const FlipSequence& seq,
                                     const ColourScheme& scheme) {
  check_colours(ct, scheme);
  ColouredTriangulation state = ct;
  for (std::size_t k = 0; k < seq.steps.size(); ++k) {
    try {
      state = coloured_flip(state, seq.steps[k], scheme);
    } catch (const Error& e) {
      throw SequenceError(k, e.what());
    }
  }
  return state;
}

FlipSequence translate_sequence(const ColouredTriangulation& start,
                                const FlipSequence& seq2, int m) {
  if (m < 2 || m % 2 != 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "target colour count must be even, got " + std::to_string(m));
  }
  const auto two = ColourScheme::cyclic(2);
  check_colours(start, two);

  FlipSequence out;
  ColouredTriangulation state = start;
  for (std::size_t k = 0; k < seq2.steps.size(); ++k) {
    const Diagonal d = seq2.steps[k];
    auto index = state.triangulation.find_diagonal(d);
    if (!index) throw SequenceError(k, "unknown diagonal " + describe(d));
    auto [f1, f2] = state.triangulation.incident_faces(*index);
    if (state.colours[f1] != state.colours[f2]) {
      throw SequenceError(k, "diagonal " + describe(d) + " is not flippable");
    }
    if (state.colours[f1] == 0) {
      out.steps.push_back(d);
    } else {
      // 1 -> 2 -> ... -> m-1 -> 0 alternates the two diagonals of one quadrilateral.
      auto quad = quadrilateral_of(state.triangulation, d);
      const Diagonal other = make_diagonal(state.vertex_count(), quad[1], quad[3]);
      for (int r = 0; r < m - 1; ++r) out.steps.push_back(r % 2 == 0 ? d : other);
    }
    state = coloured_flip(state, d, two);
  }
  return out;
}

std::vector<CycleRegion> cycle_regions(const ColouredTriangulation& ct,
                                       const ColourScheme& scheme) {
  check_colours(ct, scheme);
  std::map<Colour, std::vector<std::size_t>> groups;
  for (std::size_t f = 0; f < ct.colours.size(); ++f) {
    groups[scheme.cycle_of(ct.colours[f])].push_back(f);
  }
  std::vector<CycleRegion> out;
  out.reserve(groups.size());
  for (auto& [cycle, faces] : groups) out.push_back({cycle, std::move(faces)});
  return out;
}

}  // namespace flipgraph
