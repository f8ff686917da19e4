#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sctree/corpus.hpp"
#include "sctree/error.hpp"
#include "sctree/hypergraph.hpp"
#include "sctree/ideal.hpp"

using namespace sctree;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

Labels numbered(std::size_t n) {
  Labels out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

// x^a in I iff some generator divides it; compared on every monomial of a box.
bool same_membership(const MonomialIdeal& a, const MonomialIdeal& b, std::uint32_t box) {
  std::size_t n = a.nvars();
  std::vector<std::uint32_t> e(n, 0);
  while (true) {
    Monomial m(e);
    if (a.contains(m) != b.contains(m)) return false;
    std::size_t i = 0;
    while (i < n && e[i] == box) e[i++] = 0;
    if (i == n) return true;
    ++e[i];
  }
}

}  // namespace

TEST(Monomial, Arithmetic) {
  auto a = mono({2, 0, 1});
  auto b = mono({1, 3, 0});
  EXPECT_EQ(lcm(a, b), mono({2, 3, 1}));
  EXPECT_EQ(gcd(a, b), mono({1, 0, 0}));
  EXPECT_EQ(a * b, mono({3, 3, 1}));
  EXPECT_EQ(quotient(a * b, b), a);
  EXPECT_TRUE(mono({1, 0, 0}).divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ(a.degree(), 3u);
  EXPECT_EQ(a.support(), (VertexSet{0, 2}));
  EXPECT_THROW(quotient(a, b), Error);
  EXPECT_EQ(format_monomial(a, {"x", "y", "z"}), "x^2*z");
  EXPECT_EQ(format_monomial(Monomial(3), {"x", "y", "z"}), "1");
}

TEST(Monomial, CanonicalOrder) {
  // Degree first, then x1 > x2 > ...
  EXPECT_TRUE(canonical_less(mono({0, 1}), mono({1, 1})));
  EXPECT_TRUE(canonical_less(mono({1, 0}), mono({0, 1})));
  EXPECT_TRUE(canonical_less(mono({2, 0}), mono({1, 1})));
  auto gens = minimalize({mono({1, 1}), mono({0, 2}), mono({2, 0}), mono({1, 2}), mono({2, 0})});
  EXPECT_EQ(gens, (std::vector<Monomial>{mono({2, 0}), mono({1, 1}), mono({0, 2})}));
}

TEST(Ideal, RejectsMismatchedVariables) {
  EXPECT_THROW(MonomialIdeal(numbered(2), {mono({1, 0, 0})}), Error);
}

TEST(Ideal, CoverIdealOfAPathAndItsSquare) {
  auto path = SimplicialComplex::from_numbers(3, {{1, 2}, {2, 3}});
  auto j = cover_ideal(path);
  EXPECT_EQ(j.generators(), (std::vector<Monomial>{mono({0, 1, 0}), mono({1, 0, 1})}));
  auto j2 = power(j, 2);
  EXPECT_EQ(j2.generators(), (std::vector<Monomial>{mono({0, 2, 0}), mono({1, 1, 1}), mono({2, 0, 2})}));
  EXPECT_EQ(j2.format(), "(x2^2, x1*x2*x3, x1^2*x3^2)");
}

TEST(Ideal, PowersOfSmallCases) {
  auto j = cover_ideal(SimplicialComplex::from_numbers(3, {{1, 2}, {2, 3}}));
  EXPECT_EQ(power(j, 0).generators(), (std::vector<Monomial>{Monomial(3)}));
  EXPECT_EQ(power(j, 1), j);
  EXPECT_EQ(multiply(j, j), power(j, 2));
}

TEST(Ideal, SymbolicPowersAgreeWithOrdinaryPowersOnTrees) {
  for (const auto& [name, tree] : corpus::named_trees()) {
    auto j = cover_ideal(tree);
    for (unsigned k = 1; k <= 3; ++k)
      EXPECT_EQ(symbolic_power(j, k), power(j, k)) << name << " k=" << k;
  }
}

TEST(Ideal, SymbolicPowerOfATriangleCoverIdealDiffers) {
  // The edge ideal of a triangle is not normally torsion-free: x1x2x3 lies in
  // the second symbolic power of its cover ideal but not in the square.
  auto triangle = SimplicialComplex::from_numbers(3, {{1, 2}, {2, 3}, {1, 3}});
  auto j = cover_ideal(triangle);
  EXPECT_TRUE(symbolic_power(j, 2).contains(mono({1, 1, 1})));
  EXPECT_FALSE(power(j, 2).contains(mono({1, 1, 1})));
}

TEST(Ideal, CoverIdealIsTheDualOfTheFacetIdeal) {
  for (const auto& [name, tree] : corpus::named_trees()) {
    auto i = facet_ideal(tree);
    EXPECT_EQ(alexander_dual(i), cover_ideal(tree)) << name;
    EXPECT_EQ(alexander_dual(alexander_dual(i)), i) << name;
  }
}

TEST(Ideal, MinimalPrimesOfTheCoverIdealAreTheFacets) {
  auto tree = corpus::four_facet_tree();
  auto primes = minimal_primes(cover_ideal(tree));
  std::vector<VertexSet> facets = tree.facets();
  sort_lex(facets);
  EXPECT_EQ(primes, facets);
}

TEST(Ideal, IntersectionAndPrimePowers) {
  auto vars = numbered(3);
  auto p = prime_power(vars, VertexSet{0, 1}, 2);
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(prime_power(vars, VertexSet{0}, 0).generators(), (std::vector<Monomial>{Monomial(3)}));
  auto q = prime_power(vars, VertexSet{1, 2}, 1);
  auto both = intersect(p, q);
  EXPECT_TRUE(same_membership(both, intersect_prime_powers(vars, {VertexSet{0, 1}, VertexSet{1, 2}}, {2, 1}), 4));
  for (const Monomial& g : both.generators()) {
    EXPECT_TRUE(p.contains(g));
    EXPECT_TRUE(q.contains(g));
  }
}

TEST(Ideal, ColonAndElimination) {
  auto j2 = power(cover_ideal(SimplicialComplex::from_numbers(3, {{1, 2}, {2, 3}})), 2);
  auto colon = colon_by_variable(j2, 1);
  EXPECT_EQ(colon.generators(), (std::vector<Monomial>{mono({0, 1, 0}), mono({1, 0, 1})}));
  auto elim = eliminate_variable(j2, 1);
  EXPECT_EQ(elim.generators(), (std::vector<Monomial>{mono({2, 0, 2})}));
}

TEST(Ideal, DegreeComponents) {
  auto j = cover_ideal(SimplicialComplex::from_numbers(3, {{1, 2}, {2, 3}}));
  auto c2 = degree_component(j, 2);
  // x2 times every variable, plus x1x3.
  EXPECT_EQ(c2.size(), 4u);
  EXPECT_TRUE(c2.is_equigenerated());
  EXPECT_EQ(degree_component(j, 1).generators(), (std::vector<Monomial>{mono({0, 1, 0})}));
  EXPECT_THROW(degree_component(j, 6, 3), Error);
  auto low = generators_up_to_degree(j, 1);
  EXPECT_EQ(low.size(), 1u);
}

TEST(Ideal, PolarizationOfTheSquare) {
  auto j2 = power(cover_ideal(SimplicialComplex::from_numbers(3, {{1, 2}, {2, 3}})), 2);
  auto pol = polarize(j2);
  EXPECT_TRUE(pol.ideal.is_squarefree());
  EXPECT_EQ(pol.map.polarized, (Labels{"x1_1", "x1_2", "x2_1", "x2_2", "x3_1", "x3_2"}));
  EXPECT_EQ(pol.ideal.format(), "(x2_1*x2_2, x1_1*x2_1*x3_1, x1_1*x1_2*x3_1*x3_2)");
  EXPECT_EQ(layered_label("x5", 2), "x5_2");
}

TEST(IdealProperty, PolarizationRoundTrips) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    auto ideal = oracle::random_ideal(rng, 5, 5, 4);
    auto pol = polarize(ideal);
    ASSERT_TRUE(pol.ideal.is_squarefree());
    std::vector<Monomial> back;
    for (const Monomial& g : pol.ideal.generators()) back.push_back(depolarize_monomial(g, pol.map));
    EXPECT_EQ(MonomialIdeal(ideal.variables(), back), ideal) << ideal.format();
    for (const Monomial& g : ideal.generators()) EXPECT_TRUE(pol.ideal.contains(polarize_monomial(g, pol.map)));
  }
}

TEST(IdealProperty, CoverIdealMatchesBruteCovers) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + rng() % 6;
    std::vector<VertexSet> edges;
    for (int i = 0; i < 4; ++i) {
      VertexSet e(rng() & VertexSet::range(n).bits());
      if (e.size() < 2) continue;
      edges.push_back(e);
    }
    if (edges.empty()) continue;
    Hypergraph h(numbered(n), VertexSet::range(n), minimal_sets(edges));
    std::vector<Monomial> gens;
    for (VertexSet c : oracle::brute_minimal_covers(h.vertices(), h.edges())) gens.push_back(Monomial::squarefree(n, c));
    EXPECT_EQ(cover_ideal(h), MonomialIdeal(numbered(n), gens)) << h.format();
  }
}

TEST(Ideal, NamedComparisonIgnoresVariableOrder) {
  MonomialIdeal a({"a", "b"}, {mono({1, 0}), mono({0, 2})});
  MonomialIdeal b({"b", "a"}, {mono({2, 0}), mono({0, 1})});
  EXPECT_TRUE(same_generators_by_name(a, b));
  MonomialIdeal c({"b", "a"}, {mono({1, 0}), mono({0, 1})});
  EXPECT_FALSE(same_generators_by_name(a, c));
}
