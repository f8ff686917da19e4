#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sctree/betti.hpp"
#include "sctree/complex.hpp"
#include "sctree/construction.hpp"
#include "sctree/decomposability.hpp"
#include "sctree/hypergraph.hpp"
#include "sctree/ideal.hpp"

namespace sctree {

// Key order is kept so that output is stable byte for byte.
using Json = nlohmann::ordered_json;

// ParseError carries "line L, column C" for syntax errors.
Json parse_json(std::string_view text);
Json read_json_file(const std::string& path);

// {"vertices": [...], "facets": [[...], ...]}
SimplicialComplex complex_from_json(const Json& j);
Json to_json(const SimplicialComplex& complex);

// {"vertices": [...], "edges": [[...], ...]}; the universe is the vertex list.
Hypergraph hypergraph_from_json(const Json& j);
Json to_json(const Hypergraph& h);
// Edges only, each as a list of labels.
Json edges_json(const std::vector<VertexSet>& edges, const Labels& labels);
Json set_json(VertexSet s, const Labels& labels);

// {"variables": [...], "generators": [{"x1": 2, "x3": 1}, ...]}
MonomialIdeal ideal_from_json(const Json& j);
Json to_json(const MonomialIdeal& ideal);
Json monomial_json(const Monomial& m, const Labels& vars);

// {"field": "Q", "entries": [{"i": 0, "j": 2, "beta": 2}, ...]}
Json to_json(const BettiTable& table);
BettiTable betti_from_json(const Json& j);

// {"complex": ..., "k": [...], "string": "LDLL"}
struct RunDescriptor {
  SimplicialComplex complex;
  std::vector<unsigned> k;
  std::string letters;
};
RunDescriptor run_descriptor_from_json(const Json& j);

// Per-step record {s, P, u, c, A, B, kBudgets, edges, edgesStripped}.
Json trace_json(const Construction& construction, const ConstructionState& state);

Json to_json(const ComplexVDNode& tree);
Json to_json(const HypergraphVDNode& tree);

}  // namespace sctree
