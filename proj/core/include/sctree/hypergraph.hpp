#pragma once

#include <cstddef>
#include <vector>

#include "sctree/complex.hpp"
#include "sctree/vertex_set.hpp"

namespace sctree {

// A simple hypergraph: an explicit vertex set inside a labelled universe and
// an antichain of nonempty edges. Edges are kept lexicographically sorted.
class Hypergraph {
 public:
  Hypergraph(Labels labels, VertexSet vertices, std::vector<VertexSet> edges);

  const Labels& labels() const { return labels_; }
  std::size_t universe_size() const { return labels_.size(); }
  VertexSet vertices() const { return vertices_; }
  const std::vector<VertexSet>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(VertexSet e) const;
  std::size_t degree(std::size_t v) const;
  // {x} is an edge, or x lies in no edge.
  bool is_isolated_vertex(std::size_t v) const;
  bool is_isolated() const;

  bool operator==(const Hypergraph& other) const = default;
  std::string format() const;

 private:
  Labels labels_;
  VertexSet vertices_;
  std::vector<VertexSet> edges_;
};

// The hypergraph whose edges are the facets, on all vertices of the complex.
Hypergraph hypergraph_of(const SimplicialComplex& complex);

std::vector<VertexSet> minimal_vertex_covers(const Hypergraph& h);
// Minimal transversals of a family of sets; {∅} for the empty family.
std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& sets);
bool is_unmixed(const Hypergraph& h);
bool is_unmixed(const SimplicialComplex& complex);

SimplicialComplex independence_complex(const Hypergraph& h);
bool is_independent(const Hypergraph& h, VertexSet w);

Hypergraph contract(const Hypergraph& h, std::size_t x);
Hypergraph delete_vertex(const Hypergraph& h, std::size_t x);
Hypergraph strip_isolated(const Hypergraph& h);

}  // namespace sctree
