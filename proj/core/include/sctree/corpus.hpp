#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sctree/complex.hpp"
#include "sctree/hypergraph.hpp"
#include "sctree/ideal.hpp"

namespace sctree::corpus {

// Simplicial trees used throughout the tests and the verify command.
SimplicialComplex four_facet_tree();   // 8 vertices, facets of sizes 4, 4, 3, 3
SimplicialComplex three_facet_tree();  // 8 vertices, facets of sizes 3, 4, 4
SimplicialComplex five_facet_tree();   // 10 vertices, a chain of five facets
// Three triangles x1x2x3, x3x4x5, x4x5x6.
Hypergraph three_triangles();

// Squarefree, linear resolution in every characteristic; its square is not linear.
MonomialIdeal nonlinear_square_ideal();
// Linear resolution in characteristic 0 but not in characteristic 2.
MonomialIdeal char2_ideal();

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
};
std::vector<NamedComplex> named_trees();

// Every simplicial tree on 1..max_vertices vertices (all of them used) with
// 1..max_facets facets, one per isomorphism class, in a fixed order.
std::vector<SimplicialComplex> small_trees(std::size_t max_vertices = 6, std::size_t max_facets = 3);

// All vectors in {lo..hi}^length, lexicographically.
std::vector<std::vector<unsigned>> k_vectors(std::size_t length, unsigned lo, unsigned hi);

}  // namespace sctree::corpus
