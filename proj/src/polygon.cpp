#include "flipgraph/polygon.hpp"

#include <algorithm>
#include <string>

#include "flipgraph/error.hpp"

namespace flipgraph {

namespace {

std::string describe(Diagonal d) {
  return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
}

// Appends every triangulation of the convex polygon on vertices lo..hi
// (contiguous labels) to out, each as an unsorted diagonal list.
void triangulate_range(Vertex lo, Vertex hi,
                       std::vector<std::vector<Diagonal>>& out) {
  if (hi - lo < 2) {
    out.emplace_back();
    return;
  }
  for (Vertex apex = lo + 1; apex < hi; ++apex) {
    std::vector<std::vector<Diagonal>> left;
    std::vector<std::vector<Diagonal>> right;
    triangulate_range(lo, apex, left);
    triangulate_range(apex, hi, right);
    for (const auto& l : left) {
      for (const auto& r : right) {
        std::vector<Diagonal> ds;
        ds.reserve(l.size() + r.size() + 2);
        ds.insert(ds.end(), l.begin(), l.end());
        ds.insert(ds.end(), r.begin(), r.end());
        if (apex - lo >= 2) ds.push_back({lo, apex});
        if (hi - apex >= 2) ds.push_back({apex, hi});
        out.push_back(std::move(ds));
      }
    }
  }
}

}  // namespace

bool is_valid_diagonal(int n, Diagonal d) {
  Vertex a = std::min(d.a, d.b);
  Vertex b = std::max(d.a, d.b);
  return a >= 0 && b < n && b - a >= 2 && !(a == 0 && b == n - 1);
}

Diagonal make_diagonal(int n, Vertex u, Vertex v) {
  Diagonal d{std::min(u, v), std::max(u, v)};
  if (!is_valid_diagonal(n, d)) {
    throw Error(ErrorKind::kInvalidArgument,
                "not a diagonal of a " + std::to_string(n) + "-gon: " +
                    describe(d));
  }
  return d;
}

bool crosses(Diagonal x, Diagonal y) {
  if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b) return false;
  auto inside = [&](Vertex v) { return x.a < v && v < x.b; };
  return inside(y.a) != inside(y.b);
}

Triangulation Triangulation::from_diagonals(int n,
                                            std::vector<Diagonal> diagonals) {
  if (n < 3) {
    throw Error(ErrorKind::kInvalidArgument,
                "polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  if (diagonals.size() != static_cast<std::size_t>(n - 3)) {
    throw Error(ErrorKind::kInvalidArgument,
                "a triangulation of a " + std::to_string(n) + "-gon has " +
                    std::to_string(n - 3) + " diagonals, got " +
                    std::to_string(diagonals.size()));
  }
  for (auto& d : diagonals) d = make_diagonal(n, d.a, d.b);
  std::sort(diagonals.begin(), diagonals.end());
  if (std::adjacent_find(diagonals.begin(), diagonals.end()) !=
      diagonals.end()) {
    throw Error(ErrorKind::kInvalidArgument, "duplicate diagonal");
  }
  for (std::size_t i = 0; i < diagonals.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonals.size(); ++j) {
      if (crosses(diagonals[i], diagonals[j])) {
        throw Error(ErrorKind::kInvalidArgument,
                    "diagonals " + describe(diagonals[i]) + " and " +
                        describe(diagonals[j]) + " cross");
      }
    }
  }

  Triangulation t;
  t.n_ = n;
  t.diagonals_ = std::move(diagonals);

  // Neighbours of each vertex in counterclockwise order; consecutive
  // neighbours u, w of a bound the face {a, u, w}.
  std::vector<std::vector<Vertex>> nbrs(n);
  for (Vertex v = 0; v < n; ++v) {
    nbrs[v].push_back((v + 1) % n);
    nbrs[v].push_back((v + n - 1) % n);
  }
  for (const auto& d : t.diagonals_) {
    nbrs[d.a].push_back(d.b);
    nbrs[d.b].push_back(d.a);
  }
  t.faces_.reserve(n - 2);
  for (Vertex a = 0; a < n; ++a) {
    auto& list = nbrs[a];
    std::sort(list.begin(), list.end(), [&](Vertex u, Vertex w) {
      return (u - a + n) % n < (w - a + n) % n;
    });
    for (std::size_t i = 0; i + 1 < list.size(); ++i) {
      Vertex u = list[i];
      Vertex w = list[i + 1];
      if (u > a && w > a) t.faces_.push_back(Face{a, std::min(u, w), std::max(u, w)});
    }
  }
  std::sort(t.faces_.begin(), t.faces_.end());

  t.incident_.reserve(t.diagonals_.size());
  for (const auto& d : t.diagonals_) {
    std::array<std::size_t, 2> sides{};
    int found = 0;
    for (std::size_t f = 0; f < t.faces_.size() && found < 2; ++f) {
      const Face& face = t.faces_[f];
      bool has_a = std::find(face.begin(), face.end(), d.a) != face.end();
      bool has_b = std::find(face.begin(), face.end(), d.b) != face.end();
      if (has_a && has_b) sides[found++] = f;
    }
    t.incident_.push_back(sides);
  }
  return t;
}

std::optional<std::size_t> Triangulation::find_diagonal(Diagonal d) const {
  auto it = std::lower_bound(diagonals_.begin(), diagonals_.end(), d);
  if (it == diagonals_.end() || *it != d) return std::nullopt;
  return static_cast<std::size_t>(it - diagonals_.begin());
}

std::optional<std::size_t> Triangulation::find_face(const Face& f) const {
  auto it = std::lower_bound(faces_.begin(), faces_.end(), f);
  if (it == faces_.end() || *it != f) return std::nullopt;
  return static_cast<std::size_t>(it - faces_.begin());
}

int Triangulation::degree(Vertex v) const {
  int deg = 2;
  for (const auto& d : diagonals_) {
    if (d.a == v || d.b == v) ++deg;
  }
  return deg;
}

BigInt catalan(unsigned k) {
  // C_{i+1} = C_i * 2(2i+1) / (i+2), every intermediate quotient exact.
  BigInt c = 1;
  for (unsigned i = 0; i < k; ++i) {
    c *= 2 * (2 * i + 1);
    c /= (i + 2);
  }
  return c;
}

std::vector<Triangulation> enumerate_triangulations(int n) {
  if (n < 3) {
    throw Error(ErrorKind::kInvalidArgument,
                "polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  std::vector<std::vector<Diagonal>> raw;
  triangulate_range(0, n - 1, raw);
  std::vector<Triangulation> out;
  out.reserve(raw.size());
  for (auto& ds : raw) out.push_back(Triangulation::from_diagonals(n, std::move(ds)));
  return out;
}

std::array<Vertex, 4> quadrilateral_of(const Triangulation& t, Diagonal d) {
  auto index = t.find_diagonal(d);
  if (!index) throw Error(ErrorKind::kUnknownDiagonal, "unknown diagonal " + describe(d));
  auto [f1, f2] = t.incident_faces(*index);
  auto apex = [&](std::size_t f) {
    for (Vertex v : t.faces()[f]) {
      if (v != d.a && v != d.b) return v;
    }
    return Vertex{-1};
  };
  Vertex x = apex(f1);
  Vertex y = apex(f2);
  if (!(d.a < x && x < d.b)) std::swap(x, y);
  return {d.a, x, d.b, y};
}

FlipResult flip(const Triangulation& t, Diagonal d) {
  auto quad = quadrilateral_of(t, d);
  Diagonal inserted = make_diagonal(t.vertex_count(), quad[1], quad[3]);
  std::vector<Diagonal> ds(t.diagonals().begin(), t.diagonals().end());
  *std::find(ds.begin(), ds.end(), d) = inserted;
  Triangulation next = Triangulation::from_diagonals(t.vertex_count(), std::move(ds));

  std::vector<int> origin;
  origin.reserve(next.faces().size());
  for (const Face& f : next.faces()) {
    auto old = t.find_face(f);
    origin.push_back(old ? static_cast<int>(*old) : -1);
  }
  return {std::move(next), inserted, std::move(origin)};
}

std::vector<std::size_t> DualTree::degrees() const {
  std::vector<std::size_t> deg(node_count, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

std::size_t DualTree::leaf_count() const {
  auto deg = degrees();
  return static_cast<std::size_t>(std::count(deg.begin(), deg.end(), 1));
}

DualTree dual_tree(const Triangulation& t) {
  DualTree tree;
  tree.node_count = t.faces().size();
  tree.edges.reserve(t.diagonals().size());
  for (std::size_t i = 0; i < t.diagonals().size(); ++i) {
    auto [f1, f2] = t.incident_faces(i);
    tree.edges.emplace_back(f1, f2);
  }
  return tree;
}

Triangulation fan(int n, Vertex apex) {
  if (n < 3) {
    throw Error(ErrorKind::kInvalidArgument,
                "polygon needs at least 3 vertices, got " + std::to_string(n));
  }
  if (apex < 0 || apex >= n) {
    throw Error(ErrorKind::kInvalidArgument,
                "apex " + std::to_string(apex) + " out of range for a " +
                    std::to_string(n) + "-gon");
  }
  std::vector<Diagonal> ds;
  for (int k = 2; k <= n - 2; ++k) ds.push_back(make_diagonal(n, apex, (apex + k) % n));
  return Triangulation::from_diagonals(n, std::move(ds));
}

}  // namespace flipgraph
