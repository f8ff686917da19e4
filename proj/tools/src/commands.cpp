#include "commands.hpp"

#include <algorithm>

#include "sctree/complex.hpp"
#include "sctree/construction.hpp"
#include "sctree/decomposability.hpp"
#include "sctree/error.hpp"
#include "sctree/hypergraph.hpp"
#include "sctree/ideal.hpp"
#include "sctree/linear_quotients.hpp"

namespace sctree::cli {

namespace {

enum class InputKind { Complex, Hypergraph, Ideal, Run };

// Sniffs the top-level keys; the schema check itself happens in the io parsers.
InputKind kind_of(const Json& j) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "input must be a JSON object");
  if (j.contains("complex")) return InputKind::Run;
  if (j.contains("facets")) return InputKind::Complex;
  if (j.contains("edges")) return InputKind::Hypergraph;
  if (j.contains("generators")) return InputKind::Ideal;
  fail(ErrorCode::ParseError, "expected one of: facets, edges, generators, complex");
}

SimplicialComplex load_complex(const Json& j) {
  switch (kind_of(j)) {
    case InputKind::Complex: return complex_from_json(j);
    case InputKind::Run: return run_descriptor_from_json(j).complex;
    default: fail(ErrorCode::ParseError, "expected a simplicial complex (facets)");
  }
}

void check_vertices(std::size_t n, const Limits& limits, const char* what) {
  if (n > limits.max_vertices)
    fail(ErrorCode::SizeLimitExceeded, std::string(what) + " has " + std::to_string(n) + " vertices, limit " +
                                           std::to_string(limits.max_vertices));
}

BettiOptions betti_options(const Limits& limits, BettiMethod method = BettiMethod::Auto) {
  BettiOptions o;
  o.method = method;
  o.max_polarized = limits.max_polarized;
  return o;
}

ComponentwiseOptions cl_options(const Limits& limits) {
  ComponentwiseOptions o;
  o.betti = betti_options(limits);
  return o;
}

Json labels_of(const std::vector<std::size_t>& vs, const Labels& labels) {
  Json out = Json::array();
  for (std::size_t v : vs) out.push_back(labels.at(v));
  return out;
}

Json facet_json(const SimplicialComplex& c, std::size_t f) { return set_json(c.facet(f), c.labels()); }

std::vector<unsigned> uniform(std::size_t t, unsigned k) { return std::vector<unsigned>(t, k); }

}  // namespace

std::optional<std::vector<Monomial>> tree_power_order(const SimplicialComplex& tree, unsigned k, const Limits& limits) {
  auto hk = build_H_k(tree, uniform(tree.facet_count(), k));
  DecompositionOptions d;
  d.max_vertices = limits.max_vertices;
  auto vd = find_vertex_decomposition(hk.graph, d);
  if (!vd) return std::nullopt;
  auto order = shelling_to_linear_quotients(hk.graph, shelling_from_decomposition(hk.graph, *vd));
  return depolarize_order(order, hk.universe);
}

Report cmd_analyze(const std::string& path, const Options& options) {
  Report r("analyze");
  auto c = load_complex(read_json_file(path));
  r.inputs()["complex"] = to_json(c);
  check_vertices(c.labels().size(), options.limits, "complex");

  bool tree = timed(r, "tree", [&] { return is_simplicial_tree(c); });
  r.verdicts()["connected"] = is_connected(c);
  r.verdicts()["forest"] = is_forest(c);
  r.verdicts()["tree"] = tree;

  Json leaves = Json::array();
  Json good = Json::array();
  timed(r, "leaves", [&] {
    for (const auto& l : find_leaves(c)) {
      Json lj;
      lj["facet"] = facet_json(c, l.facet);
      lj["branch"] = l.branch ? facet_json(c, *l.branch) : Json(nullptr);
      leaves.push_back(lj);
      auto cert = good_leaf_certificate(c, l.facet);
      if (!cert) continue;
      Json g;
      g["facet"] = facet_json(c, l.facet);
      Json chain = Json::array(), cuts = Json::array();
      for (std::size_t f : cert->chain) chain.push_back(facet_json(c, f));
      for (VertexSet s : cert->intersections) cuts.push_back(set_json(s, c.labels()));
      g["chain"] = chain;
      g["intersections"] = cuts;
      Json seqs = Json::array();
      for (const auto& seq : good_vertex_sequences(c, l.facet)) seqs.push_back(labels_of(seq, c.labels()));
      g["goodVertexSequences"] = seqs;
      good.push_back(g);
    }
  });
  r.certificates()["leaves"] = leaves;
  r.certificates()["goodLeaves"] = good;

  auto order = timed(r, "goodLeafOrder", [&] { return good_leaf_order(c); });
  r.verdicts()["hasGoodLeafOrder"] = order.has_value();
  if (order) {
    Json o = Json::array();
    for (std::size_t f : *order) o.push_back(facet_json(c, f));
    r.certificates()["goodLeafOrder"] = o;
    if (!is_good_leaf_order(c, *order)) r.failed = true;
  }

  auto h = hypergraph_of(c);
  auto covers = timed(r, "covers", [&] { return minimal_vertex_covers(h); });
  r.certificates()["minimalVertexCovers"] = edges_json(covers, c.labels());
  r.verdicts()["unmixed"] = is_unmixed(h);
  // Grafting is only decided for trees.
  if (tree) r.verdicts()["grafted"] = timed(r, "grafted", [&] { return is_grafted(c); });
  return r;
}

Report cmd_cover_power(const std::string& path, unsigned k, const Options& options) {
  if (k == 0) fail(ErrorCode::InvalidArgument, "--k must be at least 1");
  Report r("cover-power");
  auto c = load_complex(read_json_file(path));
  r.inputs()["complex"] = to_json(c);
  r.inputs()["k"] = k;
  r.inputs()["symbolic"] = options.symbolic;
  r.inputs()["field"] = options.field.name();
  check_vertices(c.labels().size(), options.limits, "complex");

  auto j = cover_ideal(c);
  auto jk = timed(r, "power", [&] { return options.symbolic ? symbolic_power(j, k) : power(j, k); });
  const Labels& vars = j.variables();
  r.certificates()["coverIdeal"] = monomials_json(j.generators(), vars);
  r.certificates()["power"] = monomials_json(jk.generators(), vars);
  r.verdicts()["coverIdealGenerators"] = j.size();
  r.verdicts()["powerGenerators"] = jk.size();

  bool tree = is_simplicial_tree(c);
  std::optional<std::vector<Monomial>> order;
  std::string route;
  timed(r, "linearQuotients", [&] {
    // J^(k) = J^k on trees, so the shelling route covers both.
    if (tree) {
      route = "decomposition";
      order = tree_power_order(c, k, options.limits);
    } else {
      route = "search";
      LinearQuotientOptions lq;
      lq.max_generators = options.limits.max_generators;
      order = find_linear_quotients_order(jk, lq);
    }
  });
  r.verdicts()["linearQuotientsRoute"] = route;
  r.verdicts()["linearQuotients"] = order.has_value();
  if (order) {
    r.certificates()["linearQuotientsOrder"] = monomials_json(*order, vars);
    bool ok = timed(r, "orderCheck", [&] { return has_linear_quotients(jk, *order); });
    r.verdicts()["orderVerified"] = ok;
    if (!ok) r.failed = true;
  }

  auto cl = timed(r, "componentwiseLinear",
                  [&] { return componentwise_linearity(jk, options.field, cl_options(options.limits)); });
  r.verdicts()["componentwiseLinear"] = cl.linear;
  if (cl.failing_degree) r.verdicts()["failingDegree"] = *cl.failing_degree;
  if (order && !cl.linear) r.failed = true;

  int reg = timed(r, "regularity",
                  [&] { return regularity(jk, options.field, betti_options(options.limits)); });
  r.verdicts()["regularity"] = reg;
  r.verdicts()["coverIdealDegree"] = j.max_degree();
  r.verdicts()["regularityIsKTimesDegree"] = reg == static_cast<int>(k * j.max_degree());
  return r;
}

Report cmd_construct(const std::string& path, std::optional<std::vector<unsigned>> k,
                     std::optional<std::string> letters, const Options& options) {
  Report r("construct");
  Json in = read_json_file(path);
  SimplicialComplex c = load_complex(in);
  if (kind_of(in) == InputKind::Run) {
    auto desc = run_descriptor_from_json(in);
    if (!k) k = desc.k;
    if (!letters) letters = desc.letters;
  }
  if (!k) fail(ErrorCode::InvalidArgument, "no k vector: pass --k or a run descriptor");
  if (!letters) letters = std::string();
  r.inputs()["complex"] = to_json(c);
  r.inputs()["k"] = *k;
  r.inputs()["string"] = *letters;
  check_vertices(c.labels().size(), options.limits, "complex");

  if (std::all_of(k->begin(), k->end(), [](unsigned x) { return x == 0; })) {
    // H(0) has no edges: nothing to select, the run is over before it starts.
    if (k->size() != c.facet_count()) fail(ErrorCode::KVectorLengthMismatch, "k has the wrong length");
    parse_moves(*letters);
    auto h0 = build_H_k(c, *k);
    r.verdicts()["terminated"] = true;
    r.verdicts()["alpha"] = 0;
    r.certificates()["edges"] = edges_json(h0.graph.edges(), h0.graph.labels());
    return r;
  }

  Construction con(c, *k);
  auto run = timed(r, "run", [&] { return con.run(*letters); });
  r.verdicts()["terminated"] = run.terminated;
  r.verdicts()["alpha"] = run.alpha ? Json(*run.alpha) : Json(nullptr);
  r.verdicts()["steps"] = run.states.size() - 1;

  // Each selected vertex must shed the stripped hypergraph it was chosen from.
  bool shedding = true;
  Json per_step = Json::array();
  timed(r, "shedding", [&] {
    for (std::size_t s = 1; s < run.states.size(); ++s) {
      const Step& st = run.states[s].history.back();
      std::size_t x = con.universe().index(st.base, st.layer);
      bool ok = is_shedding_vertex(run.states[s - 1].stripped, x);
      shedding = shedding && ok;
      per_step.push_back({{"s", s}, {"vertex", con.layered_name(st.base, st.layer)}, {"shedding", ok}});
    }
  });
  r.verdicts()["sheddingVerified"] = shedding;
  if (!shedding) r.failed = true;
  r.certificates()["shedding"] = per_step;

  if (options.trace) {
    Json trace = Json::array();
    for (const auto& st : run.states) trace.push_back(trace_json(con, st));
    r.certificates()["trace"] = trace;
  } else {
    r.certificates()["final"] = trace_json(con, run.states.back());
  }

  if (run.terminated) {
    auto td = timed(r, "terminal", [&] { return con.terminal_decomposition(run.states.back()); });
    Json blocks = Json::array();
    for (const auto& b : td.blocks) {
      blocks.push_back({{"facet", facet_json(c, b.facet)},
                        {"support", set_json(b.support, c.labels())},
                        {"offsets", b.offsets},
                        {"reducedBudget", b.reduced_budget}});
    }
    r.certificates()["terminalBlocks"] = blocks;
    r.verdicts()["terminalDisjoint"] = td.disjoint;
    r.verdicts()["terminalIsomorphic"] = td.isomorphic;
    if (!td.disjoint || !td.isomorphic) r.failed = true;
  }
  return r;
}

Report cmd_betti(const std::string& path, unsigned power_k, BettiMethod method, const Options& options) {
  Report r("betti");
  Json in = read_json_file(path);
  MonomialIdeal ideal;
  switch (kind_of(in)) {
    case InputKind::Ideal:
      ideal = ideal_from_json(in);
      r.inputs()["ideal"] = to_json(ideal);
      break;
    case InputKind::Hypergraph: {
      auto h = hypergraph_from_json(in);
      r.inputs()["hypergraph"] = to_json(h);
      ideal = cover_ideal(h);
      break;
    }
    default: {
      auto c = load_complex(in);
      r.inputs()["complex"] = to_json(c);
      ideal = cover_ideal(c);
    }
  }
  r.inputs()["power"] = power_k;
  r.inputs()["field"] = options.field.name();
  r.inputs()["method"] = method == BettiMethod::Hochster ? "hochster" : method == BettiMethod::Koszul ? "koszul" : "auto";
  check_vertices(ideal.nvars(), options.limits, "ideal");

  if (power_k != 1) ideal = timed(r, "power", [&] { return power(ideal, power_k); });
  r.certificates()["ideal"] = monomials_json(ideal.generators(), ideal.variables());
  auto table = timed(r, "betti", [&] { return betti_numbers(ideal, options.field, betti_options(options.limits, method)); });
  r.certificates()["betti"] = betti_json(table);
  r.verdicts()["regularity"] = table.regularity() ? Json(*table.regularity()) : Json(nullptr);
  r.verdicts()["projectiveDimension"] = table.projective_dimension();
  r.verdicts()["linearResolution"] =
      ideal.is_equigenerated() && table.regularity() == std::optional<int>(static_cast<int>(ideal.min_degree()));
  return r;
}

Report cmd_check_vd(const std::string& path, std::optional<std::vector<unsigned>> k, const Options& options) {
  Report r("check-vd");
  Json in = read_json_file(path);
  DecompositionOptions d;
  d.max_vertices = options.limits.max_vertices;

  auto check_hypergraph = [&](const Hypergraph& h) {
    auto vd = timed(r, "decomposition", [&] { return find_vertex_decomposition(h, d); });
    r.verdicts()["vertexDecomposable"] = vd != nullptr;
    if (!vd) return;
    bool ok = timed(r, "verify", [&] { return verify_vertex_decomposition(h, *vd); });
    r.verdicts()["certificateVerified"] = ok;
    r.verdicts()["nodes"] = node_count(*vd);
    r.certificates()["decomposition"] = to_json(*vd);
    if (!ok) r.failed = true;
  };

  InputKind kind = kind_of(in);
  if (kind == InputKind::Hypergraph) {
    auto h = hypergraph_from_json(in);
    r.inputs()["hypergraph"] = to_json(h);
    if (k) {
      r.inputs()["k"] = *k;
      auto hk = build_H_k(h, *k);
      r.certificates()["layered"] = to_json(hk.graph);
      check_hypergraph(hk.graph);
    } else {
      check_hypergraph(h);
    }
    return r;
  }

  auto c = load_complex(in);
  r.inputs()["complex"] = to_json(c);
  if (k) {
    r.inputs()["k"] = *k;
    auto hk = build_H_k(c, *k);
    r.certificates()["layered"] = to_json(hk.graph);
    check_hypergraph(hk.graph);
    return r;
  }
  auto vd = timed(r, "decomposition", [&] { return find_vertex_decomposition(c, d); });
  r.verdicts()["vertexDecomposable"] = vd != nullptr;
  if (vd) {
    bool ok = timed(r, "verify", [&] { return verify_vertex_decomposition(c, *vd); });
    r.verdicts()["certificateVerified"] = ok;
    r.verdicts()["nodes"] = node_count(*vd);
    r.certificates()["decomposition"] = to_json(*vd);
    if (!ok) r.failed = true;
  }
  return r;
}

Report cmd_check_shellable(const std::string& path, std::optional<std::vector<unsigned>> k, const Options& options) {
  Report r("check-shellable");
  Json in = read_json_file(path);
  ShellingOptions so;
  so.decomposition.max_vertices = options.limits.max_vertices;

  // Complexes are shelled directly. Hypergraphs go through Ind(H), whose
  // shelling also yields a linear-quotient order of J(H).
  std::optional<Hypergraph> h;
  if (kind_of(in) == InputKind::Hypergraph) {
    h = hypergraph_from_json(in);
    r.inputs()["hypergraph"] = to_json(*h);
  } else {
    auto c = load_complex(in);
    r.inputs()["complex"] = to_json(c);
    if (!k) {
      auto sh = timed(r, "shelling", [&] { return find_shelling(c, so); });
      r.verdicts()["shellable"] = sh.has_value();
      if (sh) {
        r.certificates()["shelling"] = edges_json(*sh, c.labels());
        bool ok = is_shelling_of(c, *sh);
        r.verdicts()["shellingVerified"] = ok;
        if (!ok) r.failed = true;
      }
      return r;
    }
    h = hypergraph_of(c);
  }
  if (k) {
    r.inputs()["k"] = *k;
    h = build_H_k(*h, *k).graph;
    r.certificates()["layered"] = to_json(*h);
  }
  check_vertices(h->vertices().size(), options.limits, "hypergraph");

  auto ind = independence_complex(*h);
  auto sh = timed(r, "shelling", [&] { return find_shelling(ind, so); });
  r.verdicts()["shellable"] = sh.has_value();
  if (!sh) return r;
  r.certificates()["shelling"] = edges_json(*sh, ind.labels());
  bool ok = is_shelling_of(ind, *sh);
  auto order = shelling_to_linear_quotients(*h, *sh);
  auto j = cover_ideal(*h);
  bool lq = timed(r, "linearQuotients", [&] { return has_linear_quotients(j, order); });
  r.certificates()["linearQuotientsOrder"] = monomials_json(order, j.variables());
  r.verdicts()["shellingVerified"] = ok;
  r.verdicts()["linearQuotients"] = lq;
  if (!ok || !lq) r.failed = true;
  return r;
}

}  // namespace sctree::cli
