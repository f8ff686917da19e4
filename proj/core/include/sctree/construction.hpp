#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sctree/complex.hpp"
#include "sctree/hypergraph.hpp"
#include "sctree/ideal.hpp"

namespace sctree {

// Layered hypergraphs live over the universe of a PolarizationMap: base
// vertex x_j with layers 1..a_j, labelled "xj_f".
struct LayeredHypergraph {
  Hypergraph graph;
  PolarizationMap universe;
};

// F(k) on the base vertices of `face`; k = 0 gives the isolated hypergraph
// on the layer-1 copies.
LayeredHypergraph build_F_k(const Labels& base, VertexSet face, unsigned k);
// Union of F_i(k_i) over the edges F_i of h, in h's edge order.
LayeredHypergraph build_H_k(const Hypergraph& h, const std::vector<unsigned>& k);
// Same, with the facets of a complex in their given order.
LayeredHypergraph build_H_k(const SimplicialComplex& complex, const std::vector<unsigned>& k);

enum class Move { Link, Delete };

char move_letter(Move m);
std::vector<Move> parse_moves(std::string_view letters);

struct Step {
  std::size_t facet;  // ℓ, in construction order
  std::size_t base;   // u
  std::size_t layer;  // c
  Move move;
};

struct ConstructionState {
  std::size_t s = 0;
  Hypergraph hbar;
  Hypergraph stripped;  // (hbar)°
  VertexSet A;          // base vertices
  VertexSet B;
  std::vector<Step> history;
  std::vector<unsigned> budgets;  // k_i^(s)
  bool terminated = false;
};

struct Selection {
  std::size_t facet;
  std::size_t base;
  std::size_t layer;
};

struct TerminalBlock {
  std::size_t facet;
  VertexSet support;                 // F_i \ A, base vertices
  std::vector<std::size_t> offsets;  // c'_p per support vertex, ascending vertex order
  unsigned reduced_budget;           // k̄_i
};

struct TerminalDecomposition {
  std::vector<TerminalBlock> blocks;
  bool disjoint = true;
  bool isomorphic = true;  // (hbar)° equals the shifted disjoint union edge for edge
};

struct RunResult {
  std::vector<ConstructionState> states;  // states[s] for s = 0..last
  bool terminated = false;
  std::optional<std::size_t> alpha;
};

// The contraction/deletion recursion driven by a string over {L, D}.
// Facets are used in the given order when it is a good leaf order, and
// otherwise in the canonical good leaf order (k travels with its facet).
class Construction {
 public:
  Construction(const SimplicialComplex& tree, std::vector<unsigned> k);

  const SimplicialComplex& complex() const { return complex_; }
  // facet_order()[i] is the input index of construction facet i.
  const std::vector<std::size_t>& facet_order() const { return order_; }
  const std::vector<unsigned>& k() const { return k_; }
  const PolarizationMap& universe() const { return initial_.universe; }
  const Hypergraph& initial_hypergraph() const { return initial_.graph; }
  std::optional<std::size_t> branch(std::size_t i) const { return branches_.at(i); }
  const std::vector<std::size_t>& good_vertices(std::size_t i) const { return sequences_.at(i); }

  ConstructionState initial_state() const;
  std::vector<std::size_t> compute_U(const ConstructionState& state) const;
  std::optional<Selection> next_selection(const ConstructionState& state) const;
  ConstructionState advance(const ConstructionState& state, Move move) const;

  // Budgets recomputed from A and the step history alone.
  std::vector<unsigned> budgets_for(VertexSet A, const std::vector<Step>& history) const;
  bool constructible_for(VertexSet layered, const ConstructionState& state, std::size_t facet) const;
  std::optional<std::size_t> constructible_witness(VertexSet layered, const ConstructionState& state) const;
  // Every constructible set of the state, for all facets.
  std::vector<VertexSet> constructible_sets(const ConstructionState& state) const;

  TerminalDecomposition terminal_decomposition(const ConstructionState& state) const;

  // Runs until termination or until the letters run out. The first letter
  // drives step 1.
  RunResult run(const std::vector<Move>& moves) const;
  RunResult run(std::string_view letters) const { return run(parse_moves(letters)); }

  std::string layered_name(std::size_t base, std::size_t layer) const;

 private:
  // Largest layer deleted so far at base j while j stays outside A.
  std::size_t deleted_floor(const ConstructionState& state, std::size_t base) const;
  bool satisfies_star(const ConstructionState& state, std::size_t facet) const;

  SimplicialComplex complex_;
  std::vector<std::size_t> order_;
  std::vector<unsigned> k_;
  LayeredHypergraph initial_;
  std::vector<std::optional<std::size_t>> branches_;
  std::vector<std::vector<std::size_t>> sequences_;
  std::size_t first_vertex_ = 0;
};

// α(L) with the stationary state; StringTooShort if the letters run out first.
std::pair<std::size_t, ConstructionState> alpha(const SimplicialComplex& tree, const std::vector<unsigned>& k,
                                                std::string_view letters);

}  // namespace sctree
