#pragma once

// Slow, direct implementations used as independent references in tests.
// Nothing here calls the library's algorithms for the quantity it checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sctree/betti.hpp"
#include "sctree/complex.hpp"
#include "sctree/hypergraph.hpp"
#include "sctree/ideal.hpp"

namespace oracle {

using sctree::Monomial;
using sctree::MonomialIdeal;
using sctree::SimplicialComplex;
using sctree::VertexSet;

using Rational = boost::multiprecision::cpp_rational;

// Dense Gaussian elimination with exact rationals, or mod p.
inline std::size_t dense_rank(std::vector<std::vector<long long>> m, unsigned p) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  if (p == 0) {
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
      std::size_t piv = rank;
      while (piv < rows && a[piv][c] == 0) ++piv;
      if (piv == rows) continue;
      std::swap(a[piv], a[rank]);
      for (std::size_t r = 0; r < rows; ++r) {
        if (r == rank || a[r][c] == 0) continue;
        Rational f = a[r][c] / a[rank][c];
        for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
      }
      ++rank;
    }
    return rank;
  }
  const long long q = p;
  for (auto& row : m)
    for (auto& v : row) v = ((v % q) + q) % q;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    long long inv = 1;
    while ((m[rank][c] * inv) % q != 1) ++inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      long long f = (m[r][c] * inv) % q;
      for (std::size_t k = c; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % q + q) % q;
    }
    ++rank;
  }
  return rank;
}

// Graded Betti numbers of I from the Taylor complex tensored with K. In
// multidegree b the strand has the generator subsets with lcm b, and only
// faces with the same lcm survive in the differential.
inline std::map<std::pair<int, int>, std::uint64_t> taylor_betti(const MonomialIdeal& ideal, unsigned p) {
  const auto& g = ideal.generators();
  const std::size_t m = g.size();
  std::map<std::vector<std::uint32_t>, std::vector<std::uint32_t>> strands;  // lcm -> subset masks
  for (std::uint32_t mask = 1; mask < (1U << m); ++mask) {
    Monomial l(ideal.nvars());
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1U) l = sctree::lcm(l, g[i]);
    strands[l.exponents()].push_back(mask);
  }
  std::map<std::pair<int, int>, std::uint64_t> out;
  for (const auto& [b, masks] : strands) {
    int degree = std::accumulate(b.begin(), b.end(), 0);
    std::map<int, std::vector<std::uint32_t>> by_size;
    for (auto s : masks) by_size[__builtin_popcount(s)].push_back(s);
    auto boundary_rank = [&](int size) -> std::size_t {
      // from subsets of `size` to subsets of size - 1 within the strand
      if (!by_size.count(size) || !by_size.count(size - 1)) return 0;
      const auto& hi = by_size[size];
      const auto& lo = by_size[size - 1];
      std::vector<std::vector<long long>> mat(hi.size(), std::vector<long long>(lo.size(), 0));
      for (std::size_t r = 0; r < hi.size(); ++r) {
        int sign = 1;
        for (std::size_t i = 0; i < m; ++i) {
          if (!((hi[r] >> i) & 1U)) continue;
          std::uint32_t face = hi[r] & ~(1U << i);
          auto it = std::find(lo.begin(), lo.end(), face);
          if (it != lo.end()) mat[r][static_cast<std::size_t>(it - lo.begin())] = sign;
          sign = -sign;
        }
      }
      return dense_rank(std::move(mat), p);
    };
    for (const auto& [size, list] : by_size) {
      // homological degree size - 1
      std::size_t dim = list.size() - boundary_rank(size) - boundary_rank(size + 1);
      if (dim) out[{size - 1, degree}] += dim;
    }
  }
  return out;
}

inline std::vector<VertexSet> brute_minimal_covers(VertexSet vertices, const std::vector<VertexSet>& edges) {
  std::vector<std::size_t> vs = vertices.to_vector();
  std::vector<VertexSet> covers;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << vs.size()); ++m) {
    VertexSet c;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if ((m >> i) & 1U) c.insert(vs[i]);
    bool covers_all = std::all_of(edges.begin(), edges.end(), [&](VertexSet e) { return e.intersects(c); });
    if (covers_all) covers.push_back(c);
  }
  std::vector<VertexSet> minimal;
  for (VertexSet c : covers) {
    bool smaller = std::any_of(covers.begin(), covers.end(), [&](VertexSet d) { return d != c && d.subset_of(c); });
    if (!smaller) minimal.push_back(c);
  }
  sctree::sort_lex(minimal);
  return minimal;
}

// F is a leaf of the family if it is alone or some other member G has
// F ∩ H ⊆ F ∩ G for every other member H.
inline bool has_leaf(const std::vector<VertexSet>& family) {
  if (family.size() == 1) return true;
  for (std::size_t f = 0; f < family.size(); ++f) {
    for (std::size_t g = 0; g < family.size(); ++g) {
      if (g == f) continue;
      bool dominates = true;
      for (std::size_t h = 0; h < family.size(); ++h)
        if (h != f && !(family[f] & family[h]).subset_of(family[f] & family[g])) dominates = false;
      if (dominates) return true;
    }
  }
  return false;
}

inline bool brute_connected(const std::vector<VertexSet>& facets) {
  std::vector<bool> seen(facets.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::size_t f = stack.back();
    stack.pop_back();
    for (std::size_t g = 0; g < facets.size(); ++g)
      if (!seen[g] && facets[f].intersects(facets[g])) {
        seen[g] = true;
        stack.push_back(g);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

inline bool brute_is_tree(const SimplicialComplex& c) {
  const auto& fs = c.facets();
  if (!brute_connected(fs)) return false;
  for (std::uint32_t mask = 1; mask < (1U << fs.size()); ++mask) {
    std::vector<VertexSet> sub;
    for (std::size_t i = 0; i < fs.size(); ++i)
      if ((mask >> i) & 1U) sub.push_back(fs[i]);
    if (!has_leaf(sub)) return false;
  }
  return true;
}

// Literal shelling condition.
inline bool literal_shelling(const std::vector<VertexSet>& order) {
  for (std::size_t s = 0; s < order.size(); ++s)
    for (std::size_t r = 0; r < s; ++r) {
      bool found = false;
      for (std::size_t x : order[s] - order[r])
        for (std::size_t j = 0; j < s && !found; ++j)
          if (order[s] - order[j] == VertexSet::singleton(x)) found = true;
      if (!found) return false;
    }
  return true;
}

inline bool brute_shellable(std::vector<VertexSet> facets) {
  std::sort(facets.begin(), facets.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
  do {
    if (literal_shelling(facets)) return true;
  } while (std::next_permutation(facets.begin(), facets.end(),
                                 [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); }));
  return false;
}

// Colon generators straight from the definition, then a variable test.
inline bool literal_linear_quotients(const std::vector<Monomial>& order) {
  for (std::size_t i = 1; i < order.size(); ++i) {
    std::vector<Monomial> colon;
    for (std::size_t j = 0; j < i; ++j) colon.push_back(sctree::quotient(sctree::lcm(order[j], order[i]), order[i]));
    std::vector<Monomial> minimal;
    for (const auto& a : colon) {
      bool dominated = std::any_of(colon.begin(), colon.end(), [&](const Monomial& b) { return b != a && b.divides(a); });
      if (!dominated && std::find(minimal.begin(), minimal.end(), a) == minimal.end()) minimal.push_back(a);
    }
    for (const auto& a : minimal)
      if (a.degree() != 1) return false;
  }
  return true;
}

inline MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t max_vars, std::size_t max_gens,
                                  std::uint32_t max_degree) {
  std::uniform_int_distribution<std::size_t> nv(1, max_vars), ng(1, max_gens);
  std::size_t n = nv(rng), m = ng(rng);
  sctree::Labels labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<Monomial> gens;
  std::uniform_int_distribution<std::uint32_t> deg(1, max_degree);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  for (std::size_t i = 0; i < m; ++i) {
    Monomial g(n);
    std::uint32_t d = deg(rng);
    for (std::uint32_t k = 0; k < d; ++k) {
      std::size_t v = var(rng);
      g.set(v, g[v] + 1);
    }
    gens.push_back(g);
  }
  return MonomialIdeal(labels, gens);
}

}  // namespace oracle
