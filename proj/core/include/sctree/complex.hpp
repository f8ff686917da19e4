#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sctree/vertex_set.hpp"

namespace sctree {

// A simplicial complex given by its facets over a labelled vertex universe.
// The facet order is kept as given: facet indices carry meaning for leaf
// orders and the construction. Complexes produced by operations come back
// with lexicographically sorted facets.
class SimplicialComplex {
 public:
  SimplicialComplex(Labels labels, std::vector<VertexSet> facets);

  // Maximalizes an arbitrary generating family and sorts it.
  static SimplicialComplex from_generators(Labels labels, std::vector<VertexSet> generators);
  // Builds labels x1..xn and facets from 1-based vertex numbers.
  static SimplicialComplex from_numbers(std::size_t n, const std::vector<std::vector<std::size_t>>& facets);

  const Labels& labels() const { return labels_; }
  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<VertexSet>& facets() const { return facets_; }
  std::size_t facet_count() const { return facets_.size(); }
  VertexSet facet(std::size_t i) const { return facets_.at(i); }

  bool contains_face(VertexSet face) const;
  bool is_facet(VertexSet face) const;
  // Union of all facets.
  VertexSet support() const;
  int dimension() const;

  // Same facets as sets, same labels; facet order ignored.
  bool same_as(const SimplicialComplex& other) const;

  std::string format() const;

 private:
  Labels labels_;
  std::vector<VertexSet> facets_;
};

SimplicialComplex link(const SimplicialComplex& complex, VertexSet face);
SimplicialComplex deletion(const SimplicialComplex& complex, VertexSet face);

// Subcollection on the listed facet indices, in that order.
SimplicialComplex subcollection(const SimplicialComplex& complex, const std::vector<std::size_t>& facets);

struct LeafInfo {
  std::size_t facet;
  std::optional<std::size_t> branch;  // smallest-index branch; none for a lone facet
};

std::vector<LeafInfo> find_leaves(const SimplicialComplex& complex);
std::optional<std::size_t> smallest_branch(const SimplicialComplex& complex, std::size_t facet);
bool is_leaf(const SimplicialComplex& complex, std::size_t facet);

struct GoodLeafCertificate {
  std::size_t leaf;
  std::vector<std::size_t> chain;           // the other facets, largest intersection first
  std::vector<VertexSet> intersections;     // leaf ∩ chain[i], weakly decreasing
};

std::optional<GoodLeafCertificate> good_leaf_certificate(const SimplicialComplex& complex, std::size_t facet);

// Every order of leaf ∩ (largest intersection) in which each nonempty
// intersection of the chain appears as a prefix.
std::vector<std::vector<std::size_t>> good_vertex_sequences(const SimplicialComplex& complex, std::size_t facet);
// Innermost shell first, each shell by vertex index.
std::vector<std::size_t> canonical_good_vertex_sequence(const SimplicialComplex& complex, std::size_t facet);

// Repeatedly takes the smallest-index good leaf of what remains.
std::optional<std::vector<std::size_t>> good_leaf_order(const SimplicialComplex& complex);
bool is_good_leaf_order(const SimplicialComplex& complex, const std::vector<std::size_t>& order);

bool is_connected(const SimplicialComplex& complex);
bool is_forest(const SimplicialComplex& complex);
bool is_simplicial_tree(const SimplicialComplex& complex);

struct GraftingOptions {
  std::size_t max_facets = 12;
};

bool is_grafted(const SimplicialComplex& complex, const GraftingOptions& options = {});

}  // namespace sctree
