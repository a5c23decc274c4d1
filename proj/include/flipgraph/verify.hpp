#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flipgraph/flip_graph.hpp"

namespace flipgraph {

/// Known component-size tables for two colours, n = 4..9.
std::optional<Census> reference_census(int n);

/// Fan at apex 0 whose triangles, walked from vertex 1 to vertex n-1, are
/// coloured 0, 0, 1, 0, 1, ...; its component is a path.
ColouredTriangulation fan_path_start(int n);

struct EquivalenceOracleReport {
  std::size_t class_components = 0;   // non-frozen, up to global swap
  std::size_t colourings = 0;         // distinct canonical 4-colourings
  std::size_t split_components = 0;   // class components with >1 colouring
  std::size_t shared_colourings = 0;  // colourings spread over >1 class component
  bool holds() const { return split_components == 0 && shared_colourings == 0; }
};

/// Compares class-level components of a two-colour graph with the fibres of
/// the canonical colouring map over non-frozen nodes.
EquivalenceOracleReport check_equivalence_oracle(const FlipGraph& graph,
                                                 const ComponentLabels& labels);

struct CheckResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
  /// Reported only; never fails a run.
  bool advisory = false;
};

/// Runs every invariant that applies to (n, scheme). Checks tied to two
/// colours only run for the cyclic two-colour scheme.
std::vector<CheckResult> run_verification(int n, const ColourScheme& scheme,
                                          const BuildOptions& options = {});

/// "name expected X actual Y PASS|FAIL|NOTE".
std::string format_check(const CheckResult& check);

}  // namespace flipgraph
