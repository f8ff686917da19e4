#include "sctree/hypergraph.hpp"

#include <algorithm>

#include "sctree/error.hpp"

namespace sctree {

Hypergraph::Hypergraph(Labels labels, VertexSet vertices, std::vector<VertexSet> edges)
    : labels_(std::move(labels)), vertices_(vertices), edges_(std::move(edges)) {
  if (labels_.size() > kMaxVertices) fail(ErrorCode::SizeLimitExceeded, "more than 64 vertices");
  if (!vertices_.subset_of(VertexSet::range(labels_.size())))
    fail(ErrorCode::InvalidArgument, "vertex outside the label universe");
  for (VertexSet e : edges_) {
    if (e.empty()) fail(ErrorCode::InvalidArgument, "edges must be nonempty");
    if (!e.subset_of(vertices_)) fail(ErrorCode::InvalidArgument, "edge uses a vertex outside the vertex set");
  }
  sort_lex(edges_);
  if (!is_antichain(edges_)) fail(ErrorCode::InvalidArgument, "edges must form an antichain");
}

bool Hypergraph::has_edge(VertexSet e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e, LexLess{});
}

std::size_t Hypergraph::degree(std::size_t v) const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [&](VertexSet e) { return e.contains(v); }));
}

bool Hypergraph::is_isolated_vertex(std::size_t v) const {
  if (!vertices_.contains(v)) fail(ErrorCode::VertexNotPresent, std::to_string(v));
  for (VertexSet e : edges_)
    if (e.contains(v)) return e.size() == 1;
  return true;
}

bool Hypergraph::is_isolated() const {
  return std::all_of(edges_.begin(), edges_.end(), [](VertexSet e) { return e.size() == 1; });
}

std::string Hypergraph::format() const {
  std::string out = "V=" + format_set(vertices_, labels_) + " E={";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) out += ",";
    out += format_set(edges_[i], labels_);
  }
  return out + "}";
}

Hypergraph hypergraph_of(const SimplicialComplex& complex) {
  if (complex.facet_count() == 1 && complex.facet(0).empty())
    return Hypergraph(complex.labels(), VertexSet::range(complex.vertex_count()), {});
  return Hypergraph(complex.labels(), VertexSet::range(complex.vertex_count()), complex.facets());
}

std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& sets) {
  // Berge's incremental scheme, minimalizing after each set.
  std::vector<VertexSet> covers{VertexSet{}};
  std::vector<VertexSet> ordered = sets;
  std::sort(ordered.begin(), ordered.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });
  for (VertexSet e : ordered) {
    std::vector<VertexSet> next;
    next.reserve(covers.size() * 2);
    for (VertexSet c : covers) {
      if (c.intersects(e)) {
        next.push_back(c);
      } else {
        for (std::size_t v : e) next.push_back(c.with(v));
      }
    }
    covers = minimal_sets(std::move(next));
  }
  sort_lex(covers);
  return covers;
}

std::vector<VertexSet> minimal_vertex_covers(const Hypergraph& h) { return minimal_transversals(h.edges()); }

bool is_unmixed(const Hypergraph& h) {
  auto covers = minimal_vertex_covers(h);
  return std::all_of(covers.begin(), covers.end(), [&](VertexSet c) { return c.size() == covers.front().size(); });
}

bool is_unmixed(const SimplicialComplex& complex) { return is_unmixed(hypergraph_of(complex)); }

SimplicialComplex independence_complex(const Hypergraph& h) {
  std::vector<VertexSet> facets;
  for (VertexSet c : minimal_vertex_covers(h)) facets.push_back(h.vertices() - c);
  return SimplicialComplex::from_generators(h.labels(), std::move(facets));
}

bool is_independent(const Hypergraph& h, VertexSet w) {
  return std::none_of(h.edges().begin(), h.edges().end(), [&](VertexSet e) { return e.subset_of(w); });
}

Hypergraph contract(const Hypergraph& h, std::size_t x) {
  if (!h.vertices().contains(x)) fail(ErrorCode::VertexNotPresent, "contract: vertex " + std::to_string(x));
  std::vector<VertexSet> shortened, rest;
  for (VertexSet e : h.edges()) {
    if (e.contains(x)) {
      if (e.size() == 1)
        fail(ErrorCode::InvalidArgument, "contracting a vertex with a trivial edge gives the unit ideal");
      shortened.push_back(e.without(x));
    } else {
      rest.push_back(e);
    }
  }
  std::vector<VertexSet> edges = shortened;
  for (VertexSet e : rest) {
    bool absorbed = std::any_of(shortened.begin(), shortened.end(), [&](VertexSet s) { return s.subset_of(e); });
    if (!absorbed) edges.push_back(e);
  }
  return Hypergraph(h.labels(), h.vertices().without(x), minimal_sets(std::move(edges)));
}

Hypergraph delete_vertex(const Hypergraph& h, std::size_t x) {
  if (!h.vertices().contains(x)) fail(ErrorCode::VertexNotPresent, "delete: vertex " + std::to_string(x));
  std::vector<VertexSet> edges;
  for (VertexSet e : h.edges())
    if (!e.contains(x)) edges.push_back(e);
  return Hypergraph(h.labels(), h.vertices().without(x), std::move(edges));
}

Hypergraph strip_isolated(const Hypergraph& h) {
  std::vector<VertexSet> edges;
  VertexSet keep;
  for (VertexSet e : h.edges()) {
    if (e.size() >= 2) {
      edges.push_back(e);
      keep |= e;
    }
  }
  return Hypergraph(h.labels(), keep, std::move(edges));
}

}  // namespace sctree
