#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "sctree/complex.hpp"
#include "sctree/hypergraph.hpp"

namespace sctree {

// No facet of del_Δ(x) is a face of link_Δ(x).
bool is_shedding_vertex(const SimplicialComplex& complex, std::size_t x);
// No facet of Δ(H \ x) is independent in H / x; the same condition as for
// the independence complex. False when {x} is an edge.
bool is_shedding_vertex(const Hypergraph& h, std::size_t x);

struct DecompositionOptions {
  std::size_t max_vertices = 24;
};

// Leaves are simplices; an internal node sheds `vertex` into link and deletion.
struct ComplexVDNode {
  SimplicialComplex complex;
  std::optional<std::size_t> vertex;
  std::shared_ptr<const ComplexVDNode> link;
  std::shared_ptr<const ComplexVDNode> deletion;
};
using ComplexVDTree = std::shared_ptr<const ComplexVDNode>;

// Vertex decomposability is blind to isolated vertices, so every node holds
// a stripped hypergraph H° and children are stripped again. Leaves have no
// edges.
struct HypergraphVDNode {
  Hypergraph graph;
  std::optional<std::size_t> vertex;
  std::shared_ptr<const HypergraphVDNode> contraction;
  std::shared_ptr<const HypergraphVDNode> deletion;
};
using HypergraphVDTree = std::shared_ptr<const HypergraphVDNode>;

ComplexVDTree find_vertex_decomposition(const SimplicialComplex& complex, const DecompositionOptions& options = {});
HypergraphVDTree find_vertex_decomposition(const Hypergraph& h, const DecompositionOptions& options = {});

// Node-by-node: children recomputed from the parent, shedding rechecked,
// leaves checked to be simplices / edgeless.
bool verify_vertex_decomposition(const SimplicialComplex& complex, const ComplexVDNode& tree);
bool verify_vertex_decomposition(const Hypergraph& h, const HypergraphVDNode& tree);

std::size_t node_count(const ComplexVDNode& tree);
std::size_t node_count(const HypergraphVDNode& tree);

// Any r < s has x ∈ F_s \ F_r with F_s \ F_j = {x} for some j < s.
bool is_shelling(const std::vector<VertexSet>& order);
bool is_shelling_of(const SimplicialComplex& complex, const std::vector<VertexSet>& order);

// Shelling of the deletion, then x joined to a shelling of the link.
std::vector<VertexSet> shelling_from_decomposition(const ComplexVDNode& tree);
// Shelling of Δ(h) read off a decomposition of h°.
std::vector<VertexSet> shelling_from_decomposition(const Hypergraph& h, const HypergraphVDNode& tree);

struct ShellingOptions {
  DecompositionOptions decomposition;
  std::size_t max_facets = 24;  // exhaustive search bound
};

std::optional<std::vector<VertexSet>> find_shelling(const SimplicialComplex& complex,
                                                    const ShellingOptions& options = {});

}  // namespace sctree
