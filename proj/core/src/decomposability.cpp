#include "sctree/decomposability.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_set>

#include "sctree/error.hpp"

namespace sctree {

bool is_shedding_vertex(const SimplicialComplex& complex, std::size_t x) {
  if (!complex.support().contains(x))
    fail(ErrorCode::VertexNotPresent, "vertex " + std::to_string(x) + " is not in the complex");
  SimplicialComplex lk = link(complex, VertexSet::singleton(x));
  SimplicialComplex del = deletion(complex, VertexSet::singleton(x));
  return std::none_of(del.facets().begin(), del.facets().end(), [&](VertexSet g) { return lk.contains_face(g); });
}

bool is_shedding_vertex(const Hypergraph& h, std::size_t x) {
  if (!h.vertices().contains(x)) fail(ErrorCode::VertexNotPresent, "vertex " + std::to_string(x) + " is not in H");
  if (h.has_edge(VertexSet::singleton(x))) return false;
  Hypergraph del = delete_vertex(h, x);
  Hypergraph con = contract(h, x);
  for (VertexSet cover : minimal_vertex_covers(del))
    if (is_independent(con, del.vertices() - cover)) return false;
  return true;
}

namespace {

using Key = std::vector<std::uint64_t>;

Key key_of(const std::vector<VertexSet>& sets) {
  Key k;
  k.reserve(sets.size());
  for (VertexSet s : sets) k.push_back(s.bits());
  std::sort(k.begin(), k.end());
  return k;
}

// Descending degree, ties by index.
template <class Degree>
std::vector<std::size_t> candidates(VertexSet vertices, Degree degree) {
  std::vector<std::pair<std::size_t, std::size_t>> scored;
  for (std::size_t v : vertices) scored.emplace_back(degree(v), v);
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::vector<std::size_t> out;
  for (const auto& [d, v] : scored) out.push_back(v);
  return out;
}

class ComplexSearch {
 public:
  ComplexVDTree decompose(const SimplicialComplex& complex) {
    if (complex.facet_count() == 1) return std::make_shared<ComplexVDNode>(ComplexVDNode{complex, {}, nullptr, nullptr});
    Key key = key_of(complex.facets());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    ComplexVDTree found;
    auto degree = [&](std::size_t v) {
      return static_cast<std::size_t>(std::count_if(complex.facets().begin(), complex.facets().end(),
                                                     [&](VertexSet f) { return f.contains(v); }));
    };
    for (std::size_t x : candidates(complex.support(), degree)) {
      if (!is_shedding_vertex(complex, x)) continue;
      ComplexVDTree lk = decompose(link(complex, VertexSet::singleton(x)));
      if (!lk) continue;
      ComplexVDTree del = decompose(deletion(complex, VertexSet::singleton(x)));
      if (!del) continue;
      found = std::make_shared<ComplexVDNode>(ComplexVDNode{complex, x, lk, del});
      break;
    }
    memo_.emplace(std::move(key), found);
    return found;
  }

 private:
  std::map<Key, ComplexVDTree> memo_;
};

class HypergraphSearch {
 public:
  // h is stripped.
  HypergraphVDTree decompose(const Hypergraph& h) {
    if (h.edges().empty()) return std::make_shared<HypergraphVDNode>(HypergraphVDNode{h, {}, nullptr, nullptr});
    Key key = key_of(h.edges());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    HypergraphVDTree found;
    for (std::size_t x : candidates(h.vertices(), [&](std::size_t v) { return h.degree(v); })) {
      if (!is_shedding_vertex(h, x)) continue;
      HypergraphVDTree con = decompose(strip_isolated(contract(h, x)));
      if (!con) continue;
      HypergraphVDTree del = decompose(strip_isolated(delete_vertex(h, x)));
      if (!del) continue;
      found = std::make_shared<HypergraphVDNode>(HypergraphVDNode{h, x, con, del});
      break;
    }
    memo_.emplace(std::move(key), found);
    return found;
  }

 private:
  std::map<Key, HypergraphVDTree> memo_;
};

}  // namespace

ComplexVDTree find_vertex_decomposition(const SimplicialComplex& complex, const DecompositionOptions& options) {
  if (complex.support().size() > options.max_vertices)
    fail(ErrorCode::SizeLimitExceeded, std::to_string(complex.support().size()) + " vertices, limit " +
                                           std::to_string(options.max_vertices));
  return ComplexSearch().decompose(complex);
}

HypergraphVDTree find_vertex_decomposition(const Hypergraph& h, const DecompositionOptions& options) {
  Hypergraph stripped = strip_isolated(h);
  if (stripped.vertices().size() > options.max_vertices)
    fail(ErrorCode::SizeLimitExceeded, std::to_string(stripped.vertices().size()) + " vertices, limit " +
                                           std::to_string(options.max_vertices));
  return HypergraphSearch().decompose(stripped);
}

bool verify_vertex_decomposition(const SimplicialComplex& complex, const ComplexVDNode& tree) {
  if (!tree.complex.same_as(complex)) return false;
  if (!tree.vertex) return complex.facet_count() == 1;
  std::size_t x = *tree.vertex;
  if (!tree.link || !tree.deletion) return false;
  if (!complex.support().contains(x) || !is_shedding_vertex(complex, x)) return false;
  return verify_vertex_decomposition(link(complex, VertexSet::singleton(x)), *tree.link) &&
         verify_vertex_decomposition(deletion(complex, VertexSet::singleton(x)), *tree.deletion);
}

bool verify_vertex_decomposition(const Hypergraph& h, const HypergraphVDNode& tree) {
  Hypergraph stripped = strip_isolated(h);
  if (!(tree.graph == stripped)) return false;
  if (!tree.vertex) return stripped.edges().empty();
  std::size_t x = *tree.vertex;
  if (!tree.contraction || !tree.deletion) return false;
  if (!stripped.vertices().contains(x) || !is_shedding_vertex(stripped, x)) return false;
  return verify_vertex_decomposition(contract(stripped, x), *tree.contraction) &&
         verify_vertex_decomposition(delete_vertex(stripped, x), *tree.deletion);
}

std::size_t node_count(const ComplexVDNode& tree) {
  if (!tree.vertex) return 1;
  return 1 + node_count(*tree.link) + node_count(*tree.deletion);
}

std::size_t node_count(const HypergraphVDNode& tree) {
  if (!tree.vertex) return 1;
  return 1 + node_count(*tree.contraction) + node_count(*tree.deletion);
}

namespace {

// Whether f may follow the facets in `before`.
bool admissible(VertexSet f, const std::vector<VertexSet>& before) {
  VertexSet ridge_vertices;
  for (VertexSet g : before) {
    VertexSet diff = f - g;
    if (diff.size() == 1) ridge_vertices |= diff;
  }
  return std::all_of(before.begin(), before.end(), [&](VertexSet g) { return (f - g).intersects(ridge_vertices); });
}

}  // namespace

bool is_shelling(const std::vector<VertexSet>& order) {
  std::vector<VertexSet> before;
  for (VertexSet f : order) {
    if (!admissible(f, before)) return false;
    before.push_back(f);
  }
  return true;
}

bool is_shelling_of(const SimplicialComplex& complex, const std::vector<VertexSet>& order) {
  std::vector<VertexSet> a = order, b = complex.facets();
  sort_lex(a);
  sort_lex(b);
  return a == b && is_shelling(order);
}

std::vector<VertexSet> shelling_from_decomposition(const ComplexVDNode& tree) {
  if (!tree.vertex) return tree.complex.facets();
  std::vector<VertexSet> out = shelling_from_decomposition(*tree.deletion);
  for (VertexSet g : shelling_from_decomposition(*tree.link)) out.push_back(g.with(*tree.vertex));
  return out;
}

std::vector<VertexSet> shelling_from_decomposition(const Hypergraph& h, const HypergraphVDNode& tree) {
  if (!tree.vertex) {
    VertexSet facet = h.vertices();
    for (VertexSet e : h.edges()) {
      if (e.size() != 1) fail(ErrorCode::InconsistentState, "decomposition leaf still has edges");
      facet -= e;
    }
    return {facet};
  }
  std::size_t x = *tree.vertex;
  std::vector<VertexSet> out = shelling_from_decomposition(delete_vertex(h, x), *tree.deletion);
  for (VertexSet g : shelling_from_decomposition(contract(h, x), *tree.contraction)) out.push_back(g.with(x));
  return out;
}

std::optional<std::vector<VertexSet>> find_shelling(const SimplicialComplex& complex, const ShellingOptions& options) {
  const auto& facets = complex.facets();
  if (facets.size() == 1) return facets;
  if (complex.support().size() <= options.decomposition.max_vertices) {
    if (ComplexVDTree tree = find_vertex_decomposition(complex, options.decomposition)) {
      auto order = shelling_from_decomposition(*tree);
      if (is_shelling_of(complex, order)) return order;
    }
  }
  if (facets.size() > options.max_facets)
    fail(ErrorCode::SizeLimitExceeded, std::to_string(facets.size()) + " facets, limit " +
                                           std::to_string(options.max_facets));

  // Larger facets first; admissibility depends only on the set placed so far.
  std::vector<VertexSet> pool = facets;
  std::stable_sort(pool.begin(), pool.end(), [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
  std::unordered_set<std::uint64_t> dead;
  std::vector<VertexSet> chosen;
  std::function<bool(std::uint64_t)> extend = [&](std::uint64_t used) {
    if (chosen.size() == pool.size()) return true;
    if (dead.count(used)) return false;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if ((used >> i) & 1U) continue;
      if (!admissible(pool[i], chosen)) continue;
      chosen.push_back(pool[i]);
      if (extend(used | (std::uint64_t{1} << i))) return true;
      chosen.pop_back();
    }
    dead.insert(used);
    return false;
  };
  if (extend(0)) return chosen;
  return std::nullopt;
}

}  // namespace sctree
