#include "sctree/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace sctree::corpus {

namespace {

Labels numbered(std::size_t n) {
  Labels out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

MonomialIdeal squarefree_ideal(std::size_t n, const std::vector<std::vector<std::size_t>>& gens) {
  std::vector<Monomial> ms;
  for (const auto& g : gens) {
    VertexSet s;
    for (std::size_t v : g) s.insert(v - 1);
    ms.push_back(Monomial::squarefree(n, s));
  }
  return MonomialIdeal(numbered(n), std::move(ms));
}

}  // namespace

SimplicialComplex four_facet_tree() {
  return SimplicialComplex::from_numbers(8, {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 5, 6}, {6, 7, 8}});
}

SimplicialComplex three_facet_tree() {
  return SimplicialComplex::from_numbers(8, {{1, 2, 3}, {1, 4, 5, 6}, {5, 6, 7, 8}});
}

SimplicialComplex five_facet_tree() {
  return SimplicialComplex::from_numbers(10, {{1, 2, 3}, {4, 5, 6}, {1, 7, 8}, {7, 8, 9, 10}, {4, 9, 10}});
}

Hypergraph three_triangles() {
  return hypergraph_of(SimplicialComplex::from_numbers(6, {{1, 2, 3}, {3, 4, 5}, {4, 5, 6}}));
}

MonomialIdeal nonlinear_square_ideal() {
  return squarefree_ideal(6, {{4, 5, 6}, {3, 5, 6}, {3, 4, 6}, {3, 4, 5}, {2, 5, 6}, {2, 3, 4}, {1, 3, 6}, {1, 4, 5}});
}

MonomialIdeal char2_ideal() {
  return squarefree_ideal(6, {{1, 2, 3},
                              {1, 2, 5},
                              {1, 3, 6},
                              {1, 4, 5},
                              {1, 4, 6},
                              {2, 3, 4},
                              {2, 4, 6},
                              {2, 5, 6},
                              {3, 4, 5},
                              {3, 5, 6}});
}

std::vector<NamedComplex> named_trees() {
  return {{"four-facet", four_facet_tree()},
          {"three-facet", three_facet_tree()},
          {"five-facet", five_facet_tree()}};
}

std::vector<SimplicialComplex> small_trees(std::size_t max_vertices, std::size_t max_facets) {
  std::vector<SimplicialComplex> out;
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    // Bit images of every subset under every vertex permutation.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<std::vector<std::uint64_t>> images;
    do {
      std::vector<std::uint64_t> img(subsets, 0);
      for (std::uint64_t m = 0; m < subsets; ++m)
        for (std::size_t v = 0; v < n; ++v)
          if ((m >> v) & 1U) img[m] |= std::uint64_t{1} << perm[v];
      images.push_back(std::move(img));
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto canonical = [&](const std::vector<std::uint64_t>& facets) {
      std::vector<std::uint64_t> best;
      for (const auto& img : images) {
        std::vector<std::uint64_t> mapped;
        for (std::uint64_t f : facets) mapped.push_back(img[f]);
        std::sort(mapped.begin(), mapped.end());
        if (best.empty() || mapped < best) best = std::move(mapped);
      }
      return best;
    };

    const std::uint64_t full = subsets - 1;
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<std::uint64_t> current;
    // Facets chosen in increasing mask order.
    auto visit = [&](auto&& self, std::uint64_t from, std::uint64_t covered) -> void {
      if (!current.empty() && covered == full) {
        std::vector<VertexSet> facets;
        for (std::uint64_t f : current) facets.push_back(VertexSet(f));
        SimplicialComplex c(numbered(n), facets);
        if (is_simplicial_tree(c)) seen.insert(canonical(current));
      }
      if (current.size() == max_facets) return;
      for (std::uint64_t m = from; m < subsets; ++m) {
        bool comparable = std::any_of(current.begin(), current.end(), [&](std::uint64_t f) {
          return (f & m) == f || (f & m) == m;
        });
        if (comparable) continue;
        current.push_back(m);
        self(self, m + 1, covered | m);
        current.pop_back();
      }
    };
    visit(visit, 1, 0);

    std::vector<std::vector<std::uint64_t>> classes(seen.begin(), seen.end());
    std::stable_sort(classes.begin(), classes.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (const auto& cls : classes) {
      std::vector<VertexSet> facets;
      for (std::uint64_t f : cls) facets.push_back(VertexSet(f));
      out.push_back(SimplicialComplex::from_generators(numbered(n), std::move(facets)));
    }
  }
  return out;
}

std::vector<std::vector<unsigned>> k_vectors(std::size_t length, unsigned lo, unsigned hi) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> k(length, lo);
  while (true) {
    out.push_back(k);
    std::size_t i = length;
    while (i > 0 && k[i - 1] == hi) k[--i] = lo;
    if (i == 0) break;
    ++k[i - 1];
  }
  return out;
}

}  // namespace sctree::corpus
