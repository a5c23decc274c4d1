#include "flipgraph/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "flipgraph/error.hpp"

namespace flipgraph {

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::kParse, "field '" + field + "': " + what);
}

int read_int(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) field_error(field, "expected an integer");
  return j.get<int>();
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) throw Error(ErrorKind::kParse, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) field_error(key, "missing");
  return *it;
}

std::vector<Diagonal> read_diagonals(const Json& j) {
  if (!j.is_array()) field_error("diagonals", "expected an array of [a,b] pairs");
  std::vector<Diagonal> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string field = "diagonals[" + std::to_string(i) + "]";
    const Json& pair = j[i];
    if (!pair.is_array() || pair.size() != 2) field_error(field, "expected [a,b]");
    out.push_back({read_int(pair[0], field + "[0]"), read_int(pair[1], field + "[1]")});
  }
  return out;
}

std::string dot_id(const ColouredTriangulation& ct) { return "\"" + canonical_key(ct) + "\""; }

}  // namespace

Json to_json(const Triangulation& t) {
  Json ds = Json::array();
  for (const Diagonal d : t.diagonals()) ds.push_back({d.a, d.b});
  return Json{{"n", t.vertex_count()}, {"diagonals", std::move(ds)}};
}

Json to_json(const ColouredTriangulation& ct, int colour_count) {
  Json j = to_json(ct.triangulation);
  Json out{{"n", j["n"]}, {"m", colour_count}, {"diagonals", j["diagonals"]}};
  out["colours"] = ct.colours;
  return out;
}

Triangulation triangulation_from_json(const Json& j) {
  const int n = read_int(require(j, "n"), "n");
  if (n < 3) field_error("n", "polygon needs at least 3 vertices");
  try {
    return Triangulation::from_diagonals(n, read_diagonals(require(j, "diagonals")));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParse) throw;
    field_error("diagonals", e.what());
  }
}

ColouredInput coloured_from_json(const Json& j) {
  Triangulation t = triangulation_from_json(j);
  const int m = read_int(require(j, "m"), "m");
  if (m < 1) field_error("m", "need at least one colour");
  const Json& cs = require(j, "colours");
  if (!cs.is_array()) field_error("colours", "expected an array");
  if (cs.size() != t.faces().size()) {
    field_error("colours", "expected " + std::to_string(t.faces().size()) + " entries, got " +
                               std::to_string(cs.size()));
  }
  std::vector<Colour> colours;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string field = "colours[" + std::to_string(i) + "]";
    const int c = read_int(cs[i], field);
    if (c < 0 || c >= m) field_error(field, "colour outside 0.." + std::to_string(m - 1));
    colours.push_back(c);
  }
  return {ColouredTriangulation{std::move(t), std::move(colours)}, m};
}

ColouredInput parse_coloured(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
  return coloured_from_json(j);
}

std::string canonical_key(const ColouredTriangulation& ct) {
  std::ostringstream out;
  out << ct.vertex_count() << ';';
  bool first = true;
  for (const Diagonal d : ct.triangulation.diagonals()) {
    if (!first) out << ',';
    first = false;
    out << d.a << '-' << d.b;
  }
  out << ';';
  const bool digits =
      std::all_of(ct.colours.begin(), ct.colours.end(), [](Colour c) { return c < 10; });
  for (std::size_t i = 0; i < ct.colours.size(); ++i) {
    if (!digits && i > 0) out << '.';
    out << ct.colours[i];
  }
  return out.str();
}

void write_census_csv(std::ostream& out, const Census& census, bool header) {
  if (header) out << "size,count\n";
  for (const auto& [size, count] : census) out << size << ',' << count << '\n';
}

Json census_to_json(const Census& census) {
  Json rows = Json::array();
  for (const auto& [size, count] : census) rows.push_back({{"size", size}, {"count", count}});
  return rows;
}

void write_dot(std::ostream& out, const FlipGraph& graph, bool drop_isolated) {
  out << "graph flipgraph {\n";
  for (NodeId id = 0; id < graph.node_count(); ++id) {
    if (drop_isolated && graph.degree(id) == 0) continue;
    out << "  " << dot_id(graph.node(id)) << ";\n";
  }
  for (NodeId id = 0; id < graph.node_count(); ++id) {
    for (const NodeId w : graph.neighbours(id)) {
      if (w > id) out << "  " << dot_id(graph.node(id)) << " -- " << dot_id(graph.node(w)) << ";\n";
    }
  }
  out << "}\n";
}

void write_dot(std::ostream& out, const Component& comp) {
  out << "graph component {\n";
  for (const auto& member : comp.members) out << "  " << dot_id(member) << ";\n";
  for (std::size_t u = 0; u < comp.size(); ++u) {
    for (const std::uint32_t w : comp.adjacency[u]) {
      if (w > u) {
        out << "  " << dot_id(comp.members[u]) << " -- " << dot_id(comp.members[w]) << ";\n";
      }
    }
  }
  out << "}\n";
}

Json stats_to_json(const ComponentStats& stats) {
  Json j{{"size", stats.size},
         {"edges", stats.edge_count},
         {"leaf_count", stats.leaf_count},
         {"max_degree", stats.max_degree}};
  j["girth"] = stats.girth ? Json(*stats.girth) : Json(nullptr);
  j["bipartite"] = stats.bipartite;
  j["shape_class"] = std::string(to_string(stats.shape));
  return j;
}

Json component_to_json(const Component& comp, const ComponentStats& stats, int colour_count) {
  Json members = Json::array();
  for (const auto& member : comp.members) {
    Json entry = to_json(member, colour_count);
    entry["key"] = canonical_key(member);
    members.push_back(std::move(entry));
  }
  Json j;
  j["ids"] = comp.ids;
  j["members"] = std::move(members);
  j["stats"] = stats_to_json(stats);
  return j;
}

Json to_json(const Weighting& p) { return Json(p.values); }

Json to_json(const Valuation& v) {
  Json j = Json::array();
  for (auto b : v.bits) j.push_back(static_cast<int>(b));
  return j;
}

Json to_json(const VertexColouring& col) {
  Json j = Json::array();
  for (auto c : col.colours) j.push_back(std::string(1, static_cast<char>('a' + c)));
  return j;
}

}  // namespace flipgraph
