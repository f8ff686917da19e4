#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sctree/complex.hpp"

namespace sctree {

// Q (characteristic 0) or GF(p) for p in {2, 3, 5}.
struct Field {
  unsigned characteristic = 0;

  static Field rationals() { return Field{0}; }
  static Field gf(unsigned p);
  static Field parse(std::string_view text);
  std::string name() const;
  friend bool operator==(Field, Field) = default;
};

using SparseRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

// Rank of a sparse integer matrix over the field. Over Q the elimination is
// fraction-free in 64-bit integers and restarts in arbitrary precision if an
// intermediate value would overflow.
std::size_t matrix_rank(std::vector<SparseRow> rows, Field field);

// faces[k] lists the faces with k vertices as bit masks, k = 0 holding the
// empty face. Returns dim H̃_d for d = -1 .. faces.size() - 2.
std::vector<std::size_t> reduced_homology_of_faces(std::vector<std::vector<std::uint64_t>> faces, Field field);

std::vector<std::vector<std::uint64_t>> faces_from_facets(const std::vector<VertexSet>& facets);
// Subsets of `ground` containing none of the forbidden sets.
std::vector<std::vector<std::uint64_t>> faces_avoiding(VertexSet ground, const std::vector<VertexSet>& forbidden);

// Entry d + 1 holds dim H̃_d(Δ; field), for d = -1 .. dim Δ.
std::vector<std::size_t> reduced_homology(const SimplicialComplex& complex, Field field);

}  // namespace sctree
