#include "sctree/construction.hpp"

#include <algorithm>
#include <numeric>

#include "sctree/error.hpp"

namespace sctree {

namespace {

// Calls visit(f) for every f in [lo_1, hi] x ... x [lo_b, hi] with sum <= cap.
template <class Visit>
void for_each_layer_vector(const std::vector<std::size_t>& lo, std::size_t hi, std::size_t cap, Visit&& visit) {
  const std::size_t b = lo.size();
  std::vector<std::size_t> f(lo);
  std::size_t min_rest = std::accumulate(lo.begin(), lo.end(), std::size_t{0});
  if (min_rest > cap) return;
  for (std::size_t p = 0; p < b; ++p)
    if (lo[p] > hi) return;
  auto rec = [&](auto&& self, std::size_t p, std::size_t sum) -> void {
    if (p == b) {
      visit(f);
      return;
    }
    // Later coordinates need at least their lower bounds.
    std::size_t later = 0;
    for (std::size_t q = p + 1; q < b; ++q) later += lo[q];
    for (std::size_t v = lo[p]; v <= hi && sum + v + later <= cap; ++v) {
      f[p] = v;
      self(self, p + 1, sum + v);
    }
    f[p] = lo[p];
  };
  rec(rec, 0, 0);
}

LayeredHypergraph build_layered(const Labels& base, const std::vector<VertexSet>& faces, const std::vector<unsigned>& k) {
  if (faces.size() != k.size())
    fail(ErrorCode::KVectorLengthMismatch,
         "k has " + std::to_string(k.size()) + " entries for " + std::to_string(faces.size()) + " facets");
  std::vector<std::size_t> layers(base.size(), 1);
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t j : faces[i]) layers[j] = std::max<std::size_t>(layers[j], k[i]);
  PolarizationMap universe = polarization_map(base, layers);

  VertexSet vertices;
  std::vector<VertexSet> edges;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto js = faces[i].to_vector();
    if (js.empty()) fail(ErrorCode::InvalidArgument, "F(k) needs a nonempty face");
    const std::size_t top = std::max<std::size_t>(1, k[i]);
    for (std::size_t j : js)
      for (std::size_t f = 1; f <= top; ++f) vertices.insert(universe.index(j, f));
    if (k[i] == 0) continue;
    const std::size_t b = js.size();
    for_each_layer_vector(std::vector<std::size_t>(b, 1), k[i], k[i] + b - 1, [&](const std::vector<std::size_t>& f) {
      VertexSet e;
      for (std::size_t p = 0; p < b; ++p) e.insert(universe.index(js[p], f[p]));
      edges.push_back(e);
    });
  }
  return LayeredHypergraph{Hypergraph(universe.polarized, vertices, std::move(edges)), std::move(universe)};
}

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

}  // namespace

LayeredHypergraph build_F_k(const Labels& base, VertexSet face, unsigned k) {
  return build_layered(base, {face}, {k});
}

LayeredHypergraph build_H_k(const Hypergraph& h, const std::vector<unsigned>& k) {
  return build_layered(h.labels(), h.edges(), k);
}

LayeredHypergraph build_H_k(const SimplicialComplex& complex, const std::vector<unsigned>& k) {
  return build_layered(complex.labels(), complex.facets(), k);
}

char move_letter(Move m) { return m == Move::Link ? 'L' : 'D'; }

std::vector<Move> parse_moves(std::string_view letters) {
  std::vector<Move> out;
  for (char c : letters) {
    if (c == 'L' || c == 'l') out.push_back(Move::Link);
    else if (c == 'D' || c == 'd') out.push_back(Move::Delete);
    else fail(ErrorCode::InvalidArgument, std::string("string letters must be L or D, got '") + c + "'");
  }
  return out;
}

Construction::Construction(const SimplicialComplex& tree, std::vector<unsigned> k)
    : complex_(tree),
      initial_{Hypergraph(tree.labels(), VertexSet{}, {}), PolarizationMap{}} {
  const std::size_t t = tree.facet_count();
  if (k.size() != t)
    fail(ErrorCode::KVectorLengthMismatch, "k has " + std::to_string(k.size()) + " entries for " + std::to_string(t) + " facets");
  if (!is_simplicial_tree(tree)) fail(ErrorCode::NotATree, tree.format());

  order_ = identity_order(t);
  if (!is_good_leaf_order(tree, order_)) order_ = *good_leaf_order(tree);
  complex_ = subcollection(tree, order_);
  for (std::size_t i : order_) k_.push_back(k[i]);
  initial_ = build_H_k(complex_, k_);

  const bool isolated = strip_isolated(initial_.graph).edges().empty();
  if (!isolated && std::find(k_.begin(), k_.end(), 0U) != k_.end())
    fail(ErrorCode::InvalidArgument, "the construction needs positive k entries");

  branches_.assign(t, std::nullopt);
  sequences_.assign(t, {});
  for (std::size_t i = 0; i + 1 < t; ++i) {
    std::vector<std::size_t> tail(t - i);
    std::iota(tail.begin(), tail.end(), i);
    SimplicialComplex delta_i = subcollection(complex_, tail);
    auto b = smallest_branch(delta_i, 0);
    if (!b) fail(ErrorCode::NotATree, "facet without a branch in its tail");
    branches_[i] = i + *b;
    sequences_[i] = canonical_good_vertex_sequence(delta_i, 0);
  }
  if (t >= 2) {
    if (sequences_[0].empty()) fail(ErrorCode::NotATree, "first facet meets no other facet");
    first_vertex_ = sequences_[0].front();
  }
}

std::string Construction::layered_name(std::size_t base, std::size_t layer) const {
  return universe().polarized.at(universe().index(base, layer));
}

ConstructionState Construction::initial_state() const {
  Hypergraph stripped = strip_isolated(initial_.graph);
  const bool done = complex_.facet_count() == 1 || stripped.edges().empty();
  return ConstructionState{0, initial_.graph, std::move(stripped), {}, {}, {}, k_, done};
}

std::size_t Construction::deleted_floor(const ConstructionState& state, std::size_t base) const {
  std::size_t floor = 0;
  for (const Step& st : state.history)
    if (st.base == base && st.move == Move::Delete) floor = std::max(floor, st.layer);
  return floor;
}

std::vector<unsigned> Construction::budgets_for(VertexSet A, const std::vector<Step>& history) const {
  std::vector<unsigned> out(k_.size());
  for (std::size_t i = 0; i < k_.size(); ++i) {
    const VertexSet FA = complex_.facet(i) & A;
    long long d = -static_cast<long long>(FA.size());
    for (const Step& st : history)
      if (st.move == Move::Link && FA.contains(st.base)) d += static_cast<long long>(st.layer);
    const long long left = static_cast<long long>(k_[i]) - d;
    out[i] = left > 0 ? static_cast<unsigned>(left) : 0U;
  }
  return out;
}

bool Construction::constructible_for(VertexSet layered, const ConstructionState& state, std::size_t facet) const {
  if (layered.empty()) return false;
  const auto& src = universe().source;
  VertexSet bases;
  std::size_t sum = 0;
  for (std::size_t v : layered) {
    if (v >= src.size()) return false;
    const auto [j, f] = src[v];
    if (bases.contains(j)) return false;
    bases.insert(j);
    if (f > k_[facet]) return false;
    if (state.B.contains(j) && !state.A.contains(j) && f <= deleted_floor(state, j)) return false;
    sum += f;
  }
  if (bases != (complex_.facet(facet) - state.A)) return false;
  return sum <= state.budgets[facet] + layered.size() - 1;
}

std::optional<std::size_t> Construction::constructible_witness(VertexSet layered, const ConstructionState& state) const {
  for (std::size_t i = 0; i < k_.size(); ++i)
    if (constructible_for(layered, state, i)) return i;
  return std::nullopt;
}

std::vector<VertexSet> Construction::constructible_sets(const ConstructionState& state) const {
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < k_.size(); ++i) {
    const auto js = (complex_.facet(i) - state.A).to_vector();
    if (js.empty() || k_[i] == 0) continue;
    std::vector<std::size_t> lo(js.size(), 1);
    for (std::size_t p = 0; p < js.size(); ++p)
      if (state.B.contains(js[p])) lo[p] = deleted_floor(state, js[p]) + 1;
    for_each_layer_vector(lo, k_[i], state.budgets[i] + js.size() - 1, [&](const std::vector<std::size_t>& f) {
      VertexSet e;
      for (std::size_t p = 0; p < js.size(); ++p) e.insert(universe().index(js[p], f[p]));
      out.push_back(e);
    });
  }
  sort_lex(out);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Construction::satisfies_star(const ConstructionState& state, std::size_t facet) const {
  const auto& edges = state.stripped.edges();
  return std::any_of(edges.begin(), edges.end(), [&](VertexSet e) { return constructible_for(e, state, facet); });
}

std::vector<std::size_t> Construction::compute_U(const ConstructionState& state) const {
  std::vector<std::size_t> U;
  const std::size_t t = complex_.facet_count();
  for (std::size_t i = 0; i + 1 < t; ++i) {
    const VertexSet shared = complex_.facet(i) & complex_.facet(*branches_[i]);
    if (shared.subset_of(state.A)) continue;
    if (satisfies_star(state, i)) U.push_back(i);
  }
  return U;
}

std::optional<Selection> Construction::next_selection(const ConstructionState& state) const {
  if (state.terminated) return std::nullopt;
  auto present = [&](std::size_t j, std::size_t f) {
    auto it = universe().target.find({j, f});
    return it != universe().target.end() && state.stripped.vertices().contains(it->second);
  };
  if (state.s == 0) {
    if (!present(first_vertex_, 1)) fail(ErrorCode::InconsistentState, "first vertex is not in H(k)°");
    return Selection{0, first_vertex_, 1};
  }
  auto U = compute_U(state);
  if (U.empty()) return std::nullopt;
  const std::size_t ell = U.front();
  const auto& seq = sequences_[ell];
  auto it = std::find_if(seq.begin(), seq.end(), [&](std::size_t w) { return !state.A.contains(w); });
  if (it == seq.end()) fail(ErrorCode::InconsistentState, "every good vertex already contracted");
  const std::size_t u = *it;
  for (std::size_t c = 1; c <= universe().layers[u]; ++c)
    if (present(u, c)) return Selection{ell, u, c};
  fail(ErrorCode::InconsistentState, "no layer of the selected vertex survives in (H̄)°");
}

ConstructionState Construction::advance(const ConstructionState& state, Move move) const {
  if (state.terminated) return state;
  auto sel = next_selection(state);
  if (!sel) {
    ConstructionState done = state;
    done.terminated = true;
    return done;
  }
  const std::size_t x = universe().index(sel->base, sel->layer);
  ConstructionState next{state.s + 1,
                         move == Move::Link ? contract(state.hbar, x) : delete_vertex(state.hbar, x),
                         state.stripped,
                         state.A,
                         state.B,
                         state.history,
                         {},
                         false};
  if (move == Move::Link) next.A.insert(sel->base);
  else next.B.insert(sel->base);
  next.history.push_back(Step{sel->facet, sel->base, sel->layer, move});
  next.stripped = strip_isolated(next.hbar);
  next.budgets = budgets_for(next.A, next.history);
  next.terminated = compute_U(next).empty();
  return next;
}

TerminalDecomposition Construction::terminal_decomposition(const ConstructionState& state) const {
  if (!state.terminated) fail(ErrorCode::NotTerminated, "state at step " + std::to_string(state.s));
  TerminalDecomposition out;
  for (std::size_t i = 0; i < k_.size(); ++i) {
    if (!satisfies_star(state, i)) continue;
    TerminalBlock block{i, complex_.facet(i) - state.A, {}, 0};
    std::size_t shift = 0;
    for (std::size_t j : block.support) {
      std::size_t c = 1;
      while (c <= universe().layers[j] && !state.stripped.vertices().contains(universe().index(j, c))) ++c;
      block.offsets.push_back(c - 1);
      shift += c - 1;
    }
    block.reduced_budget = state.budgets[i] > shift ? static_cast<unsigned>(state.budgets[i] - shift) : 0U;
    out.blocks.push_back(std::move(block));
  }
  for (std::size_t a = 0; a < out.blocks.size(); ++a)
    for (std::size_t b = a + 1; b < out.blocks.size(); ++b)
      if (out.blocks[a].support.intersects(out.blocks[b].support)) out.disjoint = false;

  std::vector<VertexSet> expected;
  for (const auto& block : out.blocks) {
    const auto js = block.support.to_vector();
    const std::size_t b = js.size();
    if (block.reduced_budget == 0) continue;
    for_each_layer_vector(std::vector<std::size_t>(b, 1), block.reduced_budget, block.reduced_budget + b - 1,
                          [&](const std::vector<std::size_t>& f) {
                            VertexSet e;
                            for (std::size_t p = 0; p < b; ++p) {
                              auto it = universe().target.find({js[p], f[p] + block.offsets[p]});
                              if (it == universe().target.end()) {
                                out.isomorphic = false;
                                return;
                              }
                              e.insert(it->second);
                            }
                            expected.push_back(e);
                          });
  }
  sort_lex(expected);
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
  if (expected != state.stripped.edges()) out.isomorphic = false;
  return out;
}

RunResult Construction::run(const std::vector<Move>& moves) const {
  RunResult result;
  result.states.push_back(initial_state());
  std::size_t pos = 0;
  while (!result.states.back().terminated && pos < moves.size())
    result.states.push_back(advance(result.states.back(), moves[pos++]));
  result.terminated = result.states.back().terminated;
  if (result.terminated) result.alpha = result.states.back().s;
  return result;
}

std::pair<std::size_t, ConstructionState> alpha(const SimplicialComplex& tree, const std::vector<unsigned>& k,
                                                std::string_view letters) {
  Construction c(tree, k);
  RunResult r = c.run(letters);
  if (!r.terminated)
    fail(ErrorCode::StringTooShort, "string of length " + std::to_string(letters.size()) + " ends before termination");
  return {*r.alpha, r.states.back()};
}

}  // namespace sctree
