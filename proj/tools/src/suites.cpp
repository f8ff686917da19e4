#include <algorithm>
#include <atomic>
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "commands.hpp"
#include "sctree/betti.hpp"
#include "sctree/construction.hpp"
#include "sctree/corpus.hpp"
#include "sctree/decomposability.hpp"
#include "sctree/error.hpp"
#include "sctree/hypergraph.hpp"
#include "sctree/ideal.hpp"
#include "sctree/linear_quotients.hpp"

namespace sctree::cli {

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    if (++failures_ <= 3) problems_ += (problems_.empty() ? "" : "; ") + what;
  }
  Outcome done(const std::string& summary) const {
    std::ostringstream out;
    out << summary << " (" << checks_ << " checks";
    if (failures_) out << ", " << failures_ << " failed: " << problems_;
    out << ")";
    return {failures_ == 0, out.str()};
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string problems_;
};

struct Check {
  std::string id;
  std::function<Outcome()> run;
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

std::string selected(const Construction& con, const ConstructionState& s) {
  const Step& st = s.history.back();
  return con.layered_name(st.base, st.layer);
}

std::string kstr(const std::vector<unsigned>& k) {
  std::string s;
  for (unsigned x : k) s += std::to_string(x);
  return s;
}

const std::vector<Field>& fields() {
  static const std::vector<Field> f{Field::rationals(), Field::gf(2)};
  return f;
}

BettiOptions betti_opts(const Limits& l, BettiMethod m = BettiMethod::Auto) {
  BettiOptions o;
  o.method = m;
  o.max_polarized = l.max_polarized;
  return o;
}

std::string two_digits(std::size_t i) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%02zu", i);
  return buf;
}

// ---- examples ----

std::vector<Check> examples(const Options&) {
  std::vector<Check> out;
  out.push_back({"examples/good-vertex-sequences", [] {
                   Checker c;
                   auto tree = corpus::four_facet_tree();
                   auto cert = good_leaf_certificate(tree, 0);
                   c.expect(cert.has_value(), "first facet is not a good leaf");
                   std::set<std::vector<std::string>> seqs;
                   for (const auto& seq : good_vertex_sequences(tree, 0)) {
                     std::vector<std::string> s;
                     for (std::size_t v : seq) s.push_back(tree.labels()[v]);
                     seqs.insert(s);
                   }
                   c.expect(seqs == std::set<std::vector<std::string>>{{"x1", "x2", "x3"}, {"x1", "x3", "x2"}},
                            "sequences differ");
                   return c.done(std::to_string(seqs.size()) + " sequences");
                 }});
  out.push_back({"examples/isolated-vertices-after-moves", [] {
                   Checker c;
                   Construction con(corpus::three_facet_tree(), {1, 2, 2});
                   auto run = con.run("LD");
                   const auto& u = con.universe();
                   auto isolated = [&](std::size_t s, std::size_t base, std::size_t layer) {
                     const auto& h = run.states.at(s).hbar;
                     std::size_t x = u.index(base, layer);
                     return h.vertices().contains(x) && !h.has_edge(VertexSet::singleton(x)) && h.degree(x) == 0;
                   };
                   c.expect(isolated(1, 0, 2), "x1_2 after one step");
                   c.expect(isolated(2, 5, 2), "x6_2 after two steps");
                   return c.done("x1_2 and x6_2 survive without edges");
                 }});
  out.push_back({"examples/layered-three-triangles", [] {
                   Checker c;
                   auto h = build_H_k(corpus::three_triangles(), {2, 1, 3});
                   EdgeNames expected{{"x1_1", "x2_1", "x3_1"}, {"x1_2", "x2_1", "x3_1"}, {"x1_1", "x2_2", "x3_1"},
                                      {"x1_1", "x2_1", "x3_2"}, {"x3_1", "x4_1", "x5_1"}, {"x4_1", "x5_1", "x6_1"},
                                      {"x4_2", "x5_1", "x6_1"}, {"x4_1", "x5_2", "x6_1"}, {"x4_1", "x5_1", "x6_2"},
                                      {"x4_3", "x5_1", "x6_1"}, {"x4_1", "x5_3", "x6_1"}, {"x4_1", "x5_1", "x6_3"},
                                      {"x4_2", "x5_2", "x6_1"}, {"x4_2", "x5_1", "x6_2"}, {"x4_1", "x5_2", "x6_2"}};
                   c.expect(names(h.graph) == expected, "edge sets differ");
                   return c.done(std::to_string(h.graph.edge_count()) + " edges");
                 }});
  out.push_back({"examples/three-facet-trace", [] {
                   Checker c;
                   Construction con(corpus::three_facet_tree(), {1, 2, 2});
                   auto run = con.run("LDLL");
                   c.expect(run.terminated && run.alpha == 4u, "alpha is not 4");
                   if (run.states.size() != 5) return Outcome{false, "expected 5 states"};
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
                   bool blocks = td.blocks.size() == 2 && td.blocks[0].facet == 0 &&
                                 td.blocks[0].support == VertexSet({1, 2}) && td.blocks[0].reduced_budget == 1 &&
                                 td.blocks[1].facet == 2 && td.blocks[1].support == VertexSet({6, 7}) &&
                                 td.blocks[1].reduced_budget == 1;
                   c.expect(blocks, "terminal blocks");
                   c.expect(td.disjoint && td.isomorphic, "terminal hypergraph is not the disjoint union");
                   return c.done("alpha 4, blocks {x2,x3}(1) and {x7,x8}(1)");
                 }});
  out.push_back({"examples/five-facet-stripped-edges", [] {
                   Checker c;
                   Construction con(corpus::five_facet_tree(), {1, 1, 1, 4, 2});
                   auto run = con.run("LLL");
                   if (run.states.size() != 4) return Outcome{false, "expected 4 states"};
                   const auto& st = run.states[3];
                   EdgeNames printed{{"x2_1", "x3_1"},         {"x5_1", "x6_1"},         {"x8_2", "x9_3", "x10_1"},
                                     {"x8_2", "x9_1", "x10_3"}, {"x8_2", "x9_2", "x10_2"}, {"x9_1", "x10_1"},
                                     {"x9_1", "x10_2"},         {"x9_2", "x10_1"}};
                   c.expect(names(st.stripped) == printed, "stripped edges differ");
                   c.expect(con.compute_U(st) == std::vector<std::size_t>{3}, "U is not the fourth facet");
                   auto next = con.next_selection(st);
                   c.expect(next && con.layered_name(next->base, next->layer) == "x9_1", "next vertex is not x9_1");
                   const auto& u = con.universe();
                   VertexSet cand{u.index(7, 2), u.index(8, 1), u.index(9, 1)};
                   c.expect(con.constructible_witness(cand, st).has_value(), "candidate not constructible");
                   c.expect(!st.stripped.has_edge(cand), "candidate is an edge");
                   return c.done("8 stripped edges, next x9_1");
                 }});
  out.push_back({"examples/path-square", [] {
                   Checker c;
                   auto path = SimplicialComplex::from_numbers(3, {{1, 2}, {2, 3}});
                   auto j2 = power(cover_ideal(path), 2);
                   c.expect(j2.format() == "(x2^2, x1*x2*x3, x1^2*x3^2)", "square is " + j2.format());
                   auto order = find_linear_quotients_order(j2);
                   c.expect(order && has_linear_quotients(j2, *order), "no linear-quotient order");
                   return c.done(j2.format());
                 }});
  return out;
}

// ---- theorem1: layered hypergraphs and powers of cover ideals ----

Outcome polarization(const std::string& name, const Labels& vars, const std::vector<VertexSet>& primes,
                     const std::function<LayeredHypergraph(const std::vector<unsigned>&)>& layered) {
  Checker c;
  std::size_t n = 0;
  for (const auto& k : corpus::k_vectors(primes.size(), 1, 3)) {
    auto pol = polarize(intersect_prime_powers(vars, primes, k));
    c.expect(same_generators_by_name(pol.ideal, cover_ideal(layered(k).graph)), name + " k=" + kstr(k));
    ++n;
  }
  return c.done(std::to_string(n) + " k-vectors");
}

Outcome tree_theorem1(const SimplicialComplex& tree, const Options& o) {
  Checker c;
  DecompositionOptions d;
  d.max_vertices = o.limits.max_vertices;
  std::size_t decomposed = 0;
  for (const auto& k : corpus::k_vectors(tree.facet_count(), 1, 2)) {
    auto hk = build_H_k(tree, k);
    auto vd = find_vertex_decomposition(hk.graph, d);
    c.expect(vd != nullptr, "H(" + kstr(k) + ") not decomposable");
    if (vd) c.expect(verify_vertex_decomposition(hk.graph, *vd), "certificate rejected for k=" + kstr(k));
    decomposed += vd != nullptr;
  }
  auto j = cover_ideal(tree);
  ComponentwiseOptions cl;
  cl.betti = betti_opts(o.limits);
  for (unsigned k = 1; k <= 3; ++k) {
    auto order = tree_power_order(tree, k, o.limits);
    auto jk = power(j, k);
    c.expect(order && has_linear_quotients(jk, *order), "no order for k=" + std::to_string(k));
    for (Field f : fields())
      c.expect(is_componentwise_linear(jk, f, cl), "not componentwise linear over " + f.name());
  }
  return c.done(std::to_string(decomposed) + " decompositions, powers 1..3");
}

std::vector<Check> theorem1(const Options& o) {
  std::vector<Check> out;
  for (const auto& nt : corpus::named_trees()) {
    auto tree = nt.complex;
    out.push_back({"theorem1/polarization/" + nt.name, [tree, name = nt.name] {
                     return polarization(name, tree.labels(), tree.facets(),
                                         [&](const std::vector<unsigned>& k) { return build_H_k(tree, k); });
                   }});
    out.push_back({"theorem1/powers/" + nt.name, [tree, o] { return tree_theorem1(tree, o); }});
  }
  out.push_back({"theorem1/polarization/three-triangles", [] {
                   auto h = corpus::three_triangles();
                   return polarization("three-triangles", h.labels(), h.edges(),
                                       [&](const std::vector<unsigned>& k) { return build_H_k(h, k); });
                 }});
  auto small = corpus::small_trees(6, 3);
  for (std::size_t i = 0; i < small.size(); ++i) {
    auto tree = small[i];
    out.push_back({"theorem1/powers/small-tree-" + two_digits(i), [tree, o] { return tree_theorem1(tree, o); }});
  }
  return out;
}

// ---- theorem2: six equivalent conditions on trees ----

std::vector<Check> theorem2(const Options& o) {
  std::vector<Check> out;
  auto small = corpus::small_trees(6, 3);
  for (std::size_t i = 0; i < small.size(); ++i) {
    auto tree = small[i];
    out.push_back({"theorem2/small-tree-" + two_digits(i), [tree, o] {
                     Checker c;
                     auto j = cover_ideal(tree);
                     auto bo = betti_opts(o.limits);
                     bool unmixed = is_unmixed(tree), grafted = is_grafted(tree);
                     c.expect(unmixed == grafted, "unmixed and grafted disagree");
                     for (Field f : fields()) {
                       std::vector<bool> v{has_linear_resolution(j, f, bo),
                                           has_linear_resolution(power(j, 2), f, bo),
                                           has_linear_resolution(power(j, 3), f, bo),
                                           is_cohen_macaulay_facet_ring(tree, f, bo)};
                       for (bool b : v) c.expect(b == unmixed, "verdicts split over " + f.name());
                     }
                     return c.done(std::string("all ") + (unmixed ? "true" : "false"));
                   }});
  }
  return out;
}

// ---- regularity of powers ----

std::vector<Check> regularity_suite(const Options& o) {
  std::vector<Check> out;
  for (const auto& nt : corpus::named_trees()) {
    if (nt.name == "five-facet") continue;
    for (unsigned s = 1; s <= 2; ++s) {
      auto tree = nt.complex;
      out.push_back({"regularity/" + nt.name + "/s=" + std::to_string(s), [tree, s, o] {
                       Checker c;
                       auto j = cover_ideal(tree);
                       int want = static_cast<int>(s * j.max_degree());
                       auto js = power(j, s);
                       std::string got;
                       for (Field f : fields()) {
                         auto table = betti_numbers(js, f, betti_opts(o.limits, BettiMethod::Hochster));
                         int reg = table.regularity().value_or(-1);
                         got += (got.empty() ? "" : ", ") + f.name() + " " + std::to_string(reg);
                         c.expect(reg == want, "reg over " + f.name() + " is " + std::to_string(reg));
                       }
                       return c.done("reg " + got + ", expected " + std::to_string(want));
                     }});
    }
  }
  return out;
}

// ---- construction lemmas ----

std::vector<std::string> move_strings(std::size_t max_len) {
  std::vector<std::string> out{""};
  for (std::size_t len = 1; len <= max_len; ++len)
    for (std::size_t m = 0; m < (std::size_t{1} << len); ++m) {
      std::string s;
      for (std::size_t i = 0; i < len; ++i) s += ((m >> i) & 1U) ? 'D' : 'L';
      out.push_back(s);
    }
  return out;
}

Outcome construction_lemmas(const SimplicialComplex& tree, const std::vector<unsigned>& k) {
  Checker c;
  Construction con(tree, k);
  std::size_t states = 0;
  for (const auto& letters : move_strings(6)) {
    auto run = con.run(letters);
    for (const auto& st : run.states) {
      ++states;
      std::string tag = letters + " s=" + std::to_string(st.s);
      for (VertexSet e : st.hbar.edges())
        c.expect(con.constructible_witness(e, st).has_value(), tag + ": edge not constructible");
      for (VertexSet set : con.constructible_sets(st))
        c.expect(std::any_of(st.hbar.edges().begin(), st.hbar.edges().end(), [&](VertexSet e) { return e.subset_of(set); }),
                 tag + ": constructible set without an edge");
      c.expect(con.budgets_for(st.A, st.history) == st.budgets, tag + ": budgets drift");
      const auto& h = st.history;
      for (std::size_t p = 0; p < h.size(); ++p)
        for (std::size_t q = 0; q < p; ++q)
          if (h[q].move == Move::Delete && h[q].base == h[p].base)
            c.expect(h[p].layer > h[q].layer, tag + ": layer did not increase");
      if (st.terminated) {
        auto td = con.terminal_decomposition(st);
        c.expect(td.disjoint && td.isomorphic, tag + ": terminal blocks");
      } else if (auto sel = con.next_selection(st)) {
        std::size_t x = con.universe().index(sel->base, sel->layer);
        c.expect(is_shedding_vertex(st.stripped, x), tag + ": selected vertex does not shed");
      } else {
        c.expect(false, tag + ": no selection before termination");
      }
    }
  }
  return c.done(std::to_string(states) + " states");
}

std::vector<Check> construction_suite(const Options&) {
  std::vector<Check> out;
  for (const auto& nt : corpus::named_trees()) {
    if (nt.name == "five-facet") continue;
    for (const auto& k : corpus::k_vectors(nt.complex.facet_count(), 1, 2)) {
      auto tree = nt.complex;
      out.push_back({"construction-lemmas/" + nt.name + "/k=" + kstr(k), [tree, k] { return construction_lemmas(tree, k); }});
    }
  }
  return out;
}

// ---- counterexamples ----

std::vector<Check> counterexamples(const Options& o) {
  std::vector<Check> out;
  out.push_back({"counterexamples/nonlinear-square", [o] {
                   Checker c;
                   auto i = corpus::nonlinear_square_ideal();
                   auto bo = betti_opts(o.limits);
                   for (Field f : fields()) {
                     c.expect(has_linear_resolution(i, f, bo), "ideal not linear over " + f.name());
                     c.expect(!has_linear_resolution(power(i, 2), f, bo), "square linear over " + f.name());
                   }
                   return c.done("linear ideal, nonlinear square, over Q and GF2");
                 }});
  out.push_back({"counterexamples/char2", [o] {
                   Checker c;
                   auto i = corpus::char2_ideal();
                   auto bo = betti_opts(o.limits);
                   c.expect(has_linear_resolution(i, Field::rationals(), bo), "not linear over Q");
                   c.expect(!has_linear_resolution(i, Field::gf(2), bo), "linear over GF2");
                   return c.done("linear over Q only");
                 }});
  return out;
}

using SuiteFn = std::vector<Check> (*)(const Options&);

const std::map<std::string, SuiteFn>& suites() {
  static const std::map<std::string, SuiteFn> s{
      {"examples", examples},           {"theorem1", theorem1},
      {"theorem2", theorem2},           {"regularity", regularity_suite},
      {"construction-lemmas", construction_suite}, {"counterexamples", counterexamples},
  };
  return s;
}

struct Result {
  std::string id;
  Outcome outcome;
  bool size_limited = false;
  double seconds = 0;
};

std::vector<Result> run_parallel(const std::vector<Check>& checks) {
  std::vector<Result> results(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < checks.size();) {
      Result& r = results[i];
      r.id = checks[i].id;
      auto t0 = std::chrono::steady_clock::now();
      try {
        r.outcome = checks[i].run();
      } catch (const Error& e) {
        r.size_limited = e.code() == ErrorCode::SizeLimitExceeded;
        r.outcome = {false, e.what()};
      } catch (const std::exception& e) {
        r.outcome = {false, std::string("exception: ") + e.what()};
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  n = std::min(n, checks.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(results.begin(), results.end(), [](const Result& a, const Result& b) { return a.id < b.id; });
  return results;
}

}  // namespace

Report cmd_verify_paper(const std::string& suite, const Options& options) {
  std::vector<Check> checks;
  if (suite == "all") {
    for (const auto& [name, fn] : suites()) {
      auto more = fn(options);
      checks.insert(checks.end(), more.begin(), more.end());
    }
  } else if (auto it = suites().find(suite); it != suites().end()) {
    checks = it->second(options);
  } else {
    fail(ErrorCode::UnknownSuite, "unknown suite '" + suite + "'");
  }

  Report r("verify-paper");
  r.inputs()["suite"] = suite;
  r.inputs()["limits"] = {{"maxVertices", options.limits.max_vertices},
                          {"maxGenerators", options.limits.max_generators},
                          {"maxPolarized", options.limits.max_polarized}};

  auto results = timed(r, "total", [&] { return run_parallel(checks); });
  Json list = Json::array();
  std::size_t passed = 0, limited = 0;
  for (const auto& res : results) {
    list.push_back({{"id", res.id}, {"passed", res.outcome.ok}, {"detail", res.outcome.detail}});
    r.time(res.id, res.seconds);
    if (res.outcome.ok) {
      ++passed;
    } else if (res.size_limited) {
      ++limited;
    }
    std::cerr << (res.outcome.ok ? "[PASS] " : res.size_limited ? "[SIZE] " : "[FAIL] ") << res.id << ": "
              << res.outcome.detail << "\n";
  }
  std::size_t failed = results.size() - passed - limited;
  r.certificates()["checks"] = list;
  r.verdicts()["checks"] = results.size();
  r.verdicts()["passed"] = passed;
  r.verdicts()["failed"] = failed;
  r.verdicts()["sizeLimited"] = limited;
  r.verdicts()["allPassed"] = passed == results.size();
  r.failed = failed > 0;
  r.size_limited = limited > 0;
  return r;
}

}  // namespace sctree::cli
