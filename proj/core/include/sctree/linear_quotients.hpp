#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sctree/hypergraph.hpp"
#include "sctree/ideal.hpp"

namespace sctree {

struct LinearQuotientCheck {
  bool ok = true;
  std::optional<std::size_t> violating_index;  // first i whose colon is not generated by variables
};

// NotAPermutation unless `order` lists the minimal generators exactly once.
LinearQuotientCheck check_linear_quotients(const MonomialIdeal& ideal, const std::vector<Monomial>& order);
bool has_linear_quotients(const MonomialIdeal& ideal, const std::vector<Monomial>& order);

// Minimal generators of (u_1, ..., u_{i-1}) : u_i.
std::vector<Monomial> colon_generators(const std::vector<Monomial>& before, const Monomial& u);

struct LinearQuotientOptions {
  std::size_t max_generators = 20;
};

// Exhaustive backtracking, lower degrees tried first.
std::optional<std::vector<Monomial>> find_linear_quotients_order(const MonomialIdeal& ideal,
                                                                  const LinearQuotientOptions& options = {});

// x_{V \ F} over a shelling F_1, F_2, ... of Δ(h), as monomials over h's
// labels. NotAShelling if the order is not a shelling of Δ(h).
std::vector<Monomial> shelling_to_linear_quotients(const Hypergraph& h, const std::vector<VertexSet>& shelling);

}  // namespace sctree
