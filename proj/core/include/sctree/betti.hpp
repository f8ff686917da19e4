#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "sctree/complex.hpp"
#include "sctree/homology.hpp"
#include "sctree/ideal.hpp"

namespace sctree {

// Graded Betti numbers of the ideal I (not of S/I).
struct BettiTable {
  Field field;
  std::map<std::pair<int, int>, std::uint64_t> entries;  // (i, j) -> β_{i,j}, positive only

  std::uint64_t at(int i, int j) const;
  void add(int i, int j, std::uint64_t beta);
  // max j - i; none for the zero ideal.
  std::optional<int> regularity() const;
  int projective_dimension() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

enum class BettiMethod {
  Auto,      // Hochster on small polarizations, Koszul otherwise
  Hochster,  // restrictions of the Stanley-Reisner complex of the polarization
  Koszul,    // upper Koszul complexes over the lcm lattice, no polarization
};

struct BettiOptions {
  BettiMethod method = BettiMethod::Auto;
  std::size_t max_polarized = 22;       // Hochster refuses larger polarizations
  std::size_t auto_hochster = 12;       // Auto switches to Koszul above this many polarized variables
  std::size_t max_lattice = 5'000'000;  // multidegrees visited by either engine
};

// Multigraded contributions are coarsened to (i, |b|).
BettiTable betti_numbers(const MonomialIdeal& ideal, Field field = {}, const BettiOptions& options = {});

int regularity(const MonomialIdeal& ideal, Field field = {}, const BettiOptions& options = {});

// Equigenerated in degree d with reg = d.
bool has_linear_resolution(const MonomialIdeal& ideal, Field field = {}, const BettiOptions& options = {});

enum class ComponentwiseMethod {
  // reg(I_{≤j}) ≤ j for every generator degree j, I_{≤j} generated by the
  // minimal generators of degree ≤ j. Equivalent to the component test
  // since (I_{≤j})_{≥j} = I_<j> and reg(M_{≥j}) = max(j, reg M) for M
  // generated in degrees ≤ j.
  Truncation,
  // I_<j> for every j in [min degree, max degree], tested directly.
  Components,
};

struct ComponentwiseOptions {
  ComponentwiseMethod method = ComponentwiseMethod::Truncation;
  BettiOptions betti;
  // Also tests I_<maxdeg+1> directly when it has at most this many generators.
  std::size_t spot_check_generators = 200;
};

struct ComponentwiseResult {
  bool linear = true;
  std::optional<std::uint64_t> failing_degree;
  bool spot_checked = false;
};

ComponentwiseResult componentwise_linearity(const MonomialIdeal& ideal, Field field = {},
                                            const ComponentwiseOptions& options = {});
bool is_componentwise_linear(const MonomialIdeal& ideal, Field field = {}, const ComponentwiseOptions& options = {});

// S/I(Δ) is Cohen-Macaulay iff J(Δ) has a linear resolution (Eagon-Reiner).
bool is_cohen_macaulay_facet_ring(const SimplicialComplex& complex, Field field = {},
                                  const BettiOptions& options = {});
// Δ is sequentially CM iff the Alexander dual of I_Δ, generated by the
// complements of the facets, is componentwise linear (Herzog-Hibi).
bool is_sequentially_cm(const SimplicialComplex& complex, Field field = {}, const ComponentwiseOptions& options = {});

}  // namespace sctree
