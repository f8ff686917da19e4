#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sctree/complex.hpp"
#include "sctree/hypergraph.hpp"
#include "sctree/vertex_set.hpp"

namespace sctree {

// Dense exponent vector over a fixed variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);
  static Monomial squarefree(std::size_t nvars, VertexSet support);
  static Monomial variable(std::size_t nvars, std::size_t var);

  std::size_t nvars() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  void set(std::size_t i, std::uint32_t e) { exps_[i] = e; }

  std::uint64_t degree() const;
  VertexSet support() const;
  bool is_one() const;
  bool is_squarefree() const;
  bool divides(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
// Throws Overflow instead of wrapping.
Monomial operator*(const Monomial& a, const Monomial& b);
// Requires b | a.
Monomial quotient(const Monomial& a, const Monomial& b);

// Degree first, then the larger exponent vector (x1 > x2 > ...).
bool canonical_less(const Monomial& a, const Monomial& b);

std::string format_monomial(const Monomial& m, const Labels& vars);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// Keeps a divisibility antichain, sorted canonically.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(Labels variables, std::vector<Monomial> generators);

  const Labels& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;
  bool is_squarefree() const;
  bool is_equigenerated() const;
  std::uint64_t min_degree() const;
  std::uint64_t max_degree() const;
  std::size_t max_exponent(std::size_t var) const;

  std::optional<std::size_t> variable_index(const std::string& label) const;
  std::string format() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  Labels vars_;
  std::vector<Monomial> gens_;
};

struct IdealLimits {
  // Bound on pairwise products/lcms examined by a single operation.
  std::size_t max_pairs = 1'000'000;
};

MonomialIdeal facet_ideal(const SimplicialComplex& complex);
MonomialIdeal edge_ideal(const Hypergraph& h);
// Minimal generators x_C over the minimal vertex covers C.
MonomialIdeal cover_ideal(const Hypergraph& h);
MonomialIdeal cover_ideal(const SimplicialComplex& complex);

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b, const IdealLimits& limits = {});
MonomialIdeal power(const MonomialIdeal& a, unsigned k, const IdealLimits& limits = {});
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b, const IdealLimits& limits = {});

// (x_j : j in support)^k; the unit ideal for k = 0.
MonomialIdeal prime_power(const Labels& vars, VertexSet support, unsigned k);
// Supports of the minimal primes of a squarefree ideal.
std::vector<VertexSet> minimal_primes(const MonomialIdeal& squarefree);
MonomialIdeal symbolic_power(const MonomialIdeal& squarefree, unsigned k, const IdealLimits& limits = {});
// Intersection of prime powers with one exponent per prime.
MonomialIdeal intersect_prime_powers(const Labels& vars, const std::vector<VertexSet>& primes,
                                     const std::vector<unsigned>& exponents, const IdealLimits& limits = {});

MonomialIdeal alexander_dual(const MonomialIdeal& squarefree);
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& squarefree);

MonomialIdeal colon_by_variable(const MonomialIdeal& ideal, std::size_t var);
MonomialIdeal eliminate_variable(const MonomialIdeal& ideal, std::size_t var);

// I_<j>: the ideal generated by all degree-j elements.
MonomialIdeal degree_component(const MonomialIdeal& ideal, std::uint64_t j, std::size_t max_generators = 200000);
// Generated by the minimal generators of degree at most j.
MonomialIdeal generators_up_to_degree(const MonomialIdeal& ideal, std::uint64_t j);

struct PolarizationMap {
  Labels base;
  std::vector<std::size_t> layers;                            // a_j, at least 1
  Labels polarized;                                           // "xj_f"
  std::vector<std::pair<std::size_t, std::size_t>> source;    // polarized index -> (j, f)
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> target;

  std::size_t index(std::size_t var, std::size_t layer) const;
};

std::string layered_label(const std::string& base, std::size_t layer);
PolarizationMap polarization_map(const Labels& base, const std::vector<std::size_t>& layers);

struct Polarization {
  MonomialIdeal ideal;
  PolarizationMap map;
};

Polarization polarize(const MonomialIdeal& ideal);
Monomial polarize_monomial(const Monomial& m, const PolarizationMap& map);
Monomial depolarize_monomial(const Monomial& m, const PolarizationMap& map);
std::vector<Monomial> depolarize_order(const std::vector<Monomial>& order, const PolarizationMap& map);

// Generators written as sets of variable labels; lets ideals over different
// label universes be compared by name.
std::vector<std::map<std::string, std::uint32_t>> named_generators(const MonomialIdeal& ideal);
bool same_generators_by_name(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace sctree
