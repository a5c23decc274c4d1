#pragma once

// File formats. Triangulation JSON: {"n": N, "diagonals": [[a,b], ...]};
// coloured: {"n", "m", "diagonals", "colours"} with colours aligned to the
// sorted face list. Faces are always recomputed on load.

#include <ostream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "flipgraph/component_stats.hpp"
#include "flipgraph/flip_graph.hpp"
#include "flipgraph/signed_equiv.hpp"

namespace flipgraph {

using Json = nlohmann::ordered_json;

struct ColouredInput {
  ColouredTriangulation ct;
  int colour_count = 2;
};

Json to_json(const Triangulation& t);
Json to_json(const ColouredTriangulation& ct, int colour_count);

/// Throw kParse with a message naming the offending field.
Triangulation triangulation_from_json(const Json& j);
ColouredInput coloured_from_json(const Json& j);

/// Parses text (reporting line/column on syntax errors) then validates.
ColouredInput parse_coloured(std::string_view text);

/// "N;a-b,c-d,...;word". The colour word is one digit per face when every
/// colour is below 10 and dot-separated otherwise.
std::string canonical_key(const ColouredTriangulation& ct);

/// Rows "size,count" ascending by size.
void write_census_csv(std::ostream& out, const Census& census, bool header = false);
Json census_to_json(const Census& census);

/// Undirected DOT graph with nodes labelled by canonical key.
void write_dot(std::ostream& out, const FlipGraph& graph, bool drop_isolated = false);
void write_dot(std::ostream& out, const Component& comp);

Json stats_to_json(const ComponentStats& stats);
/// {"ids", "members", "stats"}; ids are graph node ids when known.
Json component_to_json(const Component& comp, const ComponentStats& stats, int colour_count);

Json to_json(const Weighting& p);
Json to_json(const Valuation& v);
Json to_json(const VertexColouring& col);

}  // namespace flipgraph
