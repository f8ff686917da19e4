// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Runtime limits are part of each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sctree/betti.hpp"
#include "sctree/construction.hpp"
#include "sctree/corpus.hpp"
#include "sctree/decomposability.hpp"
#include "sctree/homology.hpp"
#include "sctree/hypergraph.hpp"
#include "sctree/ideal.hpp"
#include "sctree/linear_quotients.hpp"

using namespace sctree;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first few problems; anything recorded is a failure.
class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    ++failures_;
    if (failures_ <= 5) problems_ += (problems_.empty() ? "" : "; ") + what;
  }
  Outcome done(const std::string& summary) const {
    std::ostringstream out;
    out << summary << ", " << checks_ << " checks";
    if (failures_) out << ", " << failures_ << " failed: " << problems_;
    return {failures_ == 0, out.str()};
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string problems_;
};

using EdgeNames = std::set<std::set<std::string>>;

EdgeNames names(const Hypergraph& h) {
  EdgeNames out;
  for (VertexSet e : h.edges()) {
    std::set<std::string> edge;
    for (std::size_t v : e) edge.insert(h.labels()[v]);
    out.insert(edge);
  }
  return out;
}

std::vector<SimplicialComplex> tree_corpus() {
  std::vector<SimplicialComplex> out;
  for (const auto& t : corpus::named_trees()) out.push_back(t.complex);
  for (auto& t : corpus::small_trees(6, 3)) out.push_back(std::move(t));
  return out;
}

DecompositionOptions wide_decomposition() {
  DecompositionOptions o;
  o.max_vertices = kMaxVertices;
  return o;
}

Outcome layered_hypergraph_edges() {
  Checker c;
  auto h = build_H_k(corpus::three_triangles(), {2, 1, 3});
  EdgeNames expected{{"x1_1", "x2_1", "x3_1"}, {"x1_2", "x2_1", "x3_1"}, {"x1_1", "x2_2", "x3_1"},
                     {"x1_1", "x2_1", "x3_2"}, {"x3_1", "x4_1", "x5_1"}, {"x4_1", "x5_1", "x6_1"},
                     {"x4_2", "x5_1", "x6_1"}, {"x4_1", "x5_2", "x6_1"}, {"x4_1", "x5_1", "x6_2"},
                     {"x4_3", "x5_1", "x6_1"}, {"x4_1", "x5_3", "x6_1"}, {"x4_1", "x5_1", "x6_3"},
                     {"x4_2", "x5_2", "x6_1"}, {"x4_2", "x5_1", "x6_2"}, {"x4_1", "x5_2", "x6_2"}};
  c.expect(expected.size() == 15, "expected list has 15 edges");
  c.expect(names(h.graph) == expected, "edge sets differ");
  c.expect(h.graph.vertices().size() == 15, "vertex count");
  return c.done(std::to_string(h.graph.edge_count()) + " edges");
}

std::string selected(const Construction& con, const ConstructionState& s) {
  const Step& st = s.history.back();
  return con.layered_name(st.base, st.layer);
}

Outcome three_facet_trace() {
  Checker c;
  Construction con(corpus::three_facet_tree(), {1, 2, 2});
  auto run = con.run("LDLL");
  c.expect(run.terminated && run.alpha == 4u, "alpha is not 4");
  if (run.states.size() != 5) {
    c.expect(false, "expected 5 states");
    return c.done("trace");
  }
  std::vector<EdgeNames> printed{
      {{"x2_1", "x3_1"},
       {"x4_1", "x5_1", "x6_1"},
       {"x4_2", "x5_1", "x6_1"},
       {"x4_1", "x5_2", "x6_1"},
       {"x4_1", "x5_1", "x6_2"},
       {"x5_1", "x6_1", "x7_1", "x8_1"},
       {"x5_2", "x6_1", "x7_1", "x8_1"},
       {"x5_1", "x6_2", "x7_1", "x8_1"},
       {"x5_1", "x6_1", "x7_2", "x8_1"},
       {"x5_1", "x6_1", "x7_1", "x8_2"}},
      {{"x2_1", "x3_1"}, {"x4_1", "x5_2", "x6_1"}, {"x5_2", "x6_1", "x7_1", "x8_1"}},
      {{"x2_1", "x3_1"}, {"x4_1", "x6_1"}, {"x6_1", "x7_1", "x8_1"}},
      {{"x2_1", "x3_1"}, {"x4_1"}, {"x7_1", "x8_1"}},
  };
  std::vector<std::string> vertices{"x1_1", "x5_1", "x5_2", "x6_1"};
  for (std::size_t s = 1; s <= 4; ++s) {
    c.expect(names(run.states[s].hbar) == printed[s - 1], "edges at step " + std::to_string(s));
    c.expect(selected(con, run.states[s]) == vertices[s - 1], "vertex at step " + std::to_string(s));
  }
  auto td = con.terminal_decomposition(run.states[4]);
  c.expect(td.blocks.size() == 2, "two terminal blocks");
  if (td.blocks.size() == 2) {
    c.expect(td.blocks[0].facet == 0 && td.blocks[0].support == VertexSet({1, 2}) && td.blocks[0].reduced_budget == 1,
             "first block is not x2,x3 with budget 1");
    c.expect(td.blocks[1].facet == 2 && td.blocks[1].support == VertexSet({6, 7}) && td.blocks[1].reduced_budget == 1,
             "second block is not x7,x8 with budget 1");
  }
  c.expect(td.disjoint && td.isomorphic, "terminal hypergraph is not the disjoint union");
  return c.done("alpha " + std::to_string(run.alpha.value_or(0)));
}

Outcome five_facet_trace() {
  Checker c;
  Construction con(corpus::five_facet_tree(), {1, 1, 1, 4, 2});
  auto run = con.run("LLL");
  if (run.states.size() != 4) {
    c.expect(false, "expected 4 states");
    return c.done("trace");
  }
  const auto& st = run.states[3];
  EdgeNames printed{{"x2_1", "x3_1"},         {"x5_1", "x6_1"},         {"x8_2", "x9_3", "x10_1"},
                    {"x8_2", "x9_1", "x10_3"}, {"x8_2", "x9_2", "x10_2"}, {"x9_1", "x10_1"},
                    {"x9_1", "x10_2"},         {"x9_2", "x10_1"}};
  c.expect(names(st.stripped) == printed, "stripped edges differ");
  c.expect(con.compute_U(st) == std::vector<std::size_t>{3}, "U is not {4}");
  auto next = con.next_selection(st);
  c.expect(next && con.layered_name(next->base, next->layer) == "x9_1", "next vertex is not x9_1");
  const auto& u = con.universe();
  VertexSet cand{u.index(7, 2), u.index(8, 1), u.index(9, 1)};
  c.expect(con.constructible_witness(cand, st).has_value(), "candidate not constructible");
  c.expect(!st.stripped.has_edge(cand) && !st.hbar.has_edge(cand), "candidate is an edge");
  return c.done(std::to_string(st.stripped.edge_count()) + " stripped edges");
}

Outcome polarization_identity() {
  Checker c;
  std::size_t cases = 0;
  auto check = [&](const std::string& name, const Labels& vars, const std::vector<VertexSet>& primes,
                   const LayeredHypergraph& hk, const std::vector<unsigned>& k) {
    auto jk = intersect_prime_powers(vars, primes, k);
    auto pol = polarize(jk);
    auto cover = cover_ideal(hk.graph);
    ++cases;
    std::string ks;
    for (unsigned x : k) ks += std::to_string(x);
    c.expect(same_generators_by_name(pol.ideal, cover), name + " k=" + ks);
  };
  for (const auto& [name, tree] : corpus::named_trees()) {
    for (const auto& k : corpus::k_vectors(tree.facet_count(), 1, 3))
      check(name, tree.labels(), tree.facets(), build_H_k(tree, k), k);
    // uniform k through the symbolic power itself
    auto j = cover_ideal(tree);
    for (unsigned k = 1; k <= 3; ++k) {
      auto hk = build_H_k(tree, std::vector<unsigned>(tree.facet_count(), k));
      c.expect(same_generators_by_name(polarize(symbolic_power(j, k)).ideal, cover_ideal(hk.graph)),
               name + " symbolic k=" + std::to_string(k));
    }
  }
  auto h = corpus::three_triangles();
  for (const auto& k : corpus::k_vectors(h.edge_count(), 1, 3)) check("three-triangles", h.labels(), h.edges(), build_H_k(h, k), k);
  return c.done(std::to_string(cases) + " k-vectors");
}

Outcome vertex_decomposability() {
  Checker c;
  std::size_t cases = 0, nodes = 0;
  for (const auto& tree : tree_corpus()) {
    for (const auto& k : corpus::k_vectors(tree.facet_count(), 1, 2)) {
      auto hk = build_H_k(tree, k);
      auto vd = find_vertex_decomposition(hk.graph, wide_decomposition());
      ++cases;
      if (!vd) {
        c.expect(false, "no decomposition for " + tree.format());
        continue;
      }
      nodes += node_count(*vd);
      c.expect(verify_vertex_decomposition(hk.graph, *vd), "certificate rejected for " + tree.format());
    }
  }
  return c.done(std::to_string(cases) + " hypergraphs, " + std::to_string(nodes) + " certificate nodes");
}

Outcome linear_quotients_of_powers() {
  Checker c;
  std::size_t cases = 0;
  for (const auto& tree : tree_corpus()) {
    auto j = cover_ideal(tree);
    for (unsigned k = 1; k <= 3; ++k) {
      ++cases;
      std::string tag = tree.format() + " k=" + std::to_string(k);
      auto hk = build_H_k(tree, std::vector<unsigned>(tree.facet_count(), k));
      auto vd = find_vertex_decomposition(hk.graph, wide_decomposition());
      if (!vd) {
        c.expect(false, "no decomposition for " + tag);
        continue;
      }
      auto order = shelling_to_linear_quotients(hk.graph, shelling_from_decomposition(hk.graph, *vd));
      c.expect(has_linear_quotients(cover_ideal(hk.graph), order), "polarized order fails for " + tag);
      auto jk = power(j, k);
      auto depolarized = depolarize_order(order, hk.universe);
      c.expect(has_linear_quotients(jk, depolarized), "depolarized order fails for " + tag);
      for (Field f : {Field::rationals(), Field::gf(2)})
        c.expect(is_componentwise_linear(jk, f), "not componentwise linear over " + f.name() + " for " + tag);
    }
  }
  return c.done(std::to_string(cases) + " powers");
}

Outcome regularity_of_powers() {
  Checker c;
  BettiOptions hochster;
  hochster.method = BettiMethod::Hochster;
  hochster.max_polarized = kMaxVertices;
  std::ostringstream summary;
  for (const auto& [name, tree] : corpus::named_trees()) {
    if (name == "five-facet") continue;
    auto j = cover_ideal(tree);
    int d = static_cast<int>(j.max_degree());
    for (int s = 1; s <= 2; ++s) {
      auto table = betti_numbers(power(j, static_cast<unsigned>(s)), Field::rationals(), hochster);
      int reg = table.regularity().value_or(-1);
      summary << (summary.tellp() ? "; " : "") << name << " s=" << s << " reg " << reg;
      c.expect(reg == s * d, name + " s=" + std::to_string(s) + ": reg " + std::to_string(reg));
    }
  }
  return c.done(summary.str());
}

// Reisner: Δ is CM over Q iff every link, Δ included, has H̃_i = 0 below its dimension.
bool reisner_cm(const SimplicialComplex& sr) {
  std::set<std::uint64_t> faces;
  for (VertexSet f : sr.facets())
    for (std::uint64_t sub = f.bits();; sub = (sub - 1) & f.bits()) {
      faces.insert(sub);
      if (sub == 0) break;
    }
  for (std::uint64_t bits : faces) {
    VertexSet face(bits);
    if (sr.is_facet(face)) continue;
    auto lk = link(sr, face);
    auto h = reduced_homology(lk, Field::rationals());
    for (std::size_t i = 0; i + 1 < h.size(); ++i)
      if (h[i] != 0) return false;
  }
  return true;
}

Outcome six_way_equivalence() {
  Checker c;
  std::size_t agreeing_true = 0, trees = 0;
  for (const auto& tree : corpus::small_trees(6, 3)) {
    ++trees;
    auto j = cover_ideal(tree);
    std::vector<bool> v{has_linear_resolution(j),
                        has_linear_resolution(power(j, 2)),
                        has_linear_resolution(power(j, 3)),
                        is_cohen_macaulay_facet_ring(tree),
                        is_unmixed(tree),
                        is_grafted(tree)};
    bool all_same = std::all_of(v.begin(), v.end(), [&](bool b) { return b == v[0]; });
    c.expect(all_same, "verdicts split on " + tree.format());
    // Eagon-Reiner against Reisner on the Stanley-Reisner complex.
    c.expect(reisner_cm(independence_complex(hypergraph_of(tree))) == v[3], "Reisner disagrees on " + tree.format());
    agreeing_true += all_same && v[0];
  }
  return c.done(std::to_string(trees) + " trees, " + std::to_string(agreeing_true) + " with all six true");
}

Outcome negative_controls() {
  Checker c;
  auto s = corpus::nonlinear_square_ideal();
  auto s2 = power(s, 2);
  for (Field f : {Field::rationals(), Field::gf(2)}) {
    c.expect(has_linear_resolution(s, f), "first ideal not linear over " + f.name());
    c.expect(!has_linear_resolution(s2, f), "square linear over " + f.name());
  }
  auto t = corpus::char2_ideal();
  c.expect(has_linear_resolution(t, Field::rationals()), "second ideal not linear over Q");
  c.expect(!has_linear_resolution(t, Field::gf(2)), "second ideal linear over GF2");
  return c.done("verdicts");
}

Outcome taylor_oracle() {
  Checker c;
  std::mt19937_64 rng(20240517);
  BettiOptions hochster;
  hochster.method = BettiMethod::Hochster;
  hochster.max_polarized = kMaxVertices;
  std::size_t entries = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto ideal = oracle::random_ideal(rng, 6, 6, 4);
    for (unsigned p : {0u, 2u}) {
      auto taylor = oracle::taylor_betti(ideal, p);
      auto table = betti_numbers(ideal, Field{p}, hochster);
      entries += taylor.size();
      c.expect(table.entries == taylor, ideal.format() + " over " + Field{p}.name());
    }
  }
  return c.done("100 ideals, " + std::to_string(entries) + " nonzero entries");
}

Outcome construction_properties() {
  Checker c;
  std::size_t runs = 0, states = 0;
  std::vector<std::string> strings{""};
  for (std::size_t len = 1; len <= 6; ++len)
    for (std::size_t m = 0; m < (std::size_t{1} << len); ++m) {
      std::string s;
      for (std::size_t i = 0; i < len; ++i) s += ((m >> i) & 1U) ? 'D' : 'L';
      strings.push_back(s);
    }
  for (const auto& [name, tree] : corpus::named_trees()) {
    if (name == "five-facet") continue;
    for (const auto& k : corpus::k_vectors(tree.facet_count(), 1, 2)) {
      Construction con(tree, k);
      for (const auto& letters : strings) {
        ++runs;
        auto run = con.run(letters);
        std::string tag = name + " " + letters;
        for (const auto& st : run.states) {
          ++states;
          for (VertexSet e : st.hbar.edges())
            c.expect(con.constructible_witness(e, st).has_value(), tag + ": edge not constructible");
          for (VertexSet set : con.constructible_sets(st)) {
            bool contains_edge = std::any_of(st.hbar.edges().begin(), st.hbar.edges().end(),
                                             [&](VertexSet e) { return e.subset_of(set); });
            c.expect(contains_edge, tag + ": constructible set without an edge");
          }
          c.expect(con.budgets_for(st.A, st.history) == st.budgets, tag + ": budgets drift");
          const auto& h = st.history;
          for (std::size_t p = 0; p < h.size(); ++p)
            for (std::size_t q = 0; q < p; ++q)
              if (h[q].move == Move::Delete && h[q].base == h[p].base)
                c.expect(h[p].layer > h[q].layer, tag + ": layer did not increase");
          if (st.terminated) {
            auto td = con.terminal_decomposition(st);
            c.expect(td.disjoint && td.isomorphic, tag + ": terminal blocks");
          } else {
            auto sel = con.next_selection(st);
            c.expect(sel.has_value(), tag + ": no selection before termination");
            if (sel) {
              std::size_t x = con.universe().index(sel->base, sel->layer);
              c.expect(st.stripped.vertices().contains(x) && is_shedding_vertex(st.stripped, x),
                       tag + ": selected vertex does not shed");
            }
          }
        }
      }
    }
  }
  return c.done(std::to_string(runs) + " runs, " + std::to_string(states) + " states");
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "layered hypergraph of three triangles", 1, layered_hypergraph_edges},
      {"AC2", "three-facet construction trace", 5, three_facet_trace},
      {"AC3", "five-facet stripped edges and selection", 5, five_facet_trace},
      {"AC4", "polarized symbolic powers are cover ideals", 60, polarization_identity},
      {"AC5", "layered hypergraphs are vertex decomposable", 600, vertex_decomposability},
      {"AC6", "powers of cover ideals have linear quotients", 600, linear_quotients_of_powers},
      {"AC7", "regularity of powers", 900, regularity_of_powers},
      {"AC8", "six-way equivalence on small trees", 600, six_way_equivalence},
      {"AC9", "negative controls", 60, negative_controls},
      {"AC10", "Hochster against the Taylor complex", 600, taylor_oracle},
      {"AC11", "construction invariants", 600, construction_properties},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = cr.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs < cr.limit_seconds;
    bool pass = out.ok && in_time;
    failed += !pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, cr.limit_seconds);
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << cr.id << " " << cr.title << " (" << timing << ")"
              << (in_time ? "" : " over time") << ": " << out.detail << std::endl;
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : std::string("acceptance: all passed"))
            << std::endl;
  return failed ? 1 : 0;
}
