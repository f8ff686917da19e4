#include "sctree/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "sctree/error.hpp"

namespace sctree {

namespace {

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

[[noreturn]] void malformed(const std::string& what) { fail(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) malformed("expected an object");
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field '") + key + "'");
  return *it;
}

Labels labels_from(const Json& j, const char* key) {
  const Json& arr = field(j, key);
  if (!arr.is_array()) malformed(std::string("'") + key + "' must be an array");
  Labels out;
  for (const Json& v : arr) {
    if (!v.is_string()) malformed(std::string("'") + key + "' entries must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::size_t label_index(const Labels& labels, const std::string& name) {
  auto it = std::find(labels.begin(), labels.end(), name);
  if (it == labels.end()) malformed("unknown vertex '" + name + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

std::vector<VertexSet> sets_from(const Json& arr, const Labels& labels, const char* key) {
  if (!arr.is_array()) malformed(std::string("'") + key + "' must be an array");
  std::vector<VertexSet> out;
  for (const Json& s : arr) {
    if (!s.is_array()) malformed(std::string("'") + key + "' entries must be arrays");
    VertexSet set;
    for (const Json& v : s) {
      if (!v.is_string()) malformed("vertex names must be strings");
      set.insert(label_index(labels, v.get<std::string>()));
    }
    out.push_back(set);
  }
  return out;
}

Json labels_json(const Labels& labels) {
  Json arr = Json::array();
  for (const auto& l : labels) arr.push_back(l);
  return arr;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::string msg = e.what();
    if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    fail(ErrorCode::ParseError, location(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + msg);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

SimplicialComplex complex_from_json(const Json& j) {
  Labels labels = labels_from(j, "vertices");
  auto facets = sets_from(field(j, "facets"), labels, "facets");
  try {
    return SimplicialComplex(std::move(labels), std::move(facets));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SizeLimitExceeded) throw;
    malformed(e.what());
  }
}

Json to_json(const SimplicialComplex& complex) {
  Json j;
  j["vertices"] = labels_json(complex.labels());
  j["facets"] = edges_json(complex.facets(), complex.labels());
  return j;
}

Hypergraph hypergraph_from_json(const Json& j) {
  Labels labels = labels_from(j, "vertices");
  auto edges = sets_from(field(j, "edges"), labels, "edges");
  VertexSet all = VertexSet::range(labels.size());
  try {
    return Hypergraph(std::move(labels), all, std::move(edges));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SizeLimitExceeded) throw;
    malformed(e.what());
  }
}

Json to_json(const Hypergraph& h) {
  Json j;
  Labels present;
  for (std::size_t v : h.vertices()) present.push_back(h.labels()[v]);
  j["vertices"] = labels_json(present);
  j["edges"] = edges_json(h.edges(), h.labels());
  return j;
}

Json set_json(VertexSet s, const Labels& labels) {
  Json arr = Json::array();
  for (std::size_t v : s) arr.push_back(labels.at(v));
  return arr;
}

Json edges_json(const std::vector<VertexSet>& edges, const Labels& labels) {
  Json arr = Json::array();
  for (VertexSet e : edges) arr.push_back(set_json(e, labels));
  return arr;
}

MonomialIdeal ideal_from_json(const Json& j) {
  Labels vars = labels_from(j, "variables");
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) malformed("'generators' must be an array");
  std::vector<Monomial> out;
  for (const Json& g : gens) {
    if (!g.is_object()) malformed("generators must be objects mapping variables to exponents");
    Monomial m(vars.size());
    for (const auto& [name, e] : g.items()) {
      if (!e.is_number_unsigned()) malformed("exponent of '" + name + "' must be a nonnegative integer");
      m.set(label_index(vars, name), e.get<std::uint32_t>());
    }
    out.push_back(std::move(m));
  }
  try {
    return MonomialIdeal(std::move(vars), std::move(out));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SizeLimitExceeded) throw;
    malformed(e.what());
  }
}

Json monomial_json(const Monomial& m, const Labels& vars) {
  Json o = Json::object();
  for (std::size_t v = 0; v < m.nvars(); ++v)
    if (m[v] != 0) o[vars.at(v)] = m[v];
  return o;
}

Json to_json(const MonomialIdeal& ideal) {
  Json j;
  j["variables"] = labels_json(ideal.variables());
  Json gens = Json::array();
  for (const Monomial& g : ideal.generators()) gens.push_back(monomial_json(g, ideal.variables()));
  j["generators"] = gens;
  return j;
}

Json to_json(const BettiTable& table) {
  Json j;
  j["field"] = table.field.name();
  Json entries = Json::array();
  for (const auto& [ij, beta] : table.entries) {
    Json e;
    e["i"] = ij.first;
    e["j"] = ij.second;
    e["beta"] = beta;
    entries.push_back(e);
  }
  j["entries"] = entries;
  return j;
}

BettiTable betti_from_json(const Json& j) {
  const Json& f = field(j, "field");
  if (!f.is_string()) malformed("'field' must be a string");
  BettiTable table{Field::parse(f.get<std::string>()), {}};
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) malformed("'entries' must be an array");
  for (const Json& e : entries) table.add(field(e, "i").get<int>(), field(e, "j").get<int>(), field(e, "beta").get<std::uint64_t>());
  return table;
}

RunDescriptor run_descriptor_from_json(const Json& j) {
  SimplicialComplex complex = complex_from_json(field(j, "complex"));
  const Json& k = field(j, "k");
  if (!k.is_array()) malformed("'k' must be an array");
  std::vector<unsigned> ks;
  for (const Json& v : k) {
    if (!v.is_number_unsigned()) malformed("'k' entries must be nonnegative integers");
    ks.push_back(v.get<unsigned>());
  }
  std::string letters;
  if (auto it = j.find("string"); it != j.end()) {
    if (!it->is_string()) malformed("'string' must be a string");
    letters = it->get<std::string>();
  }
  return RunDescriptor{std::move(complex), std::move(ks), std::move(letters)};
}

Json trace_json(const Construction& construction, const ConstructionState& state) {
  const Labels& base = construction.complex().labels();
  const Labels& layered = construction.universe().polarized;
  Json j;
  j["s"] = state.s;
  if (state.s == 0) {
    j["P"] = nullptr;
    j["u"] = nullptr;
    j["c"] = nullptr;
  } else {
    const Step& step = state.history.back();
    j["P"] = std::string(1, move_letter(step.move));
    j["u"] = base.at(step.base);
    j["c"] = step.layer;
  }
  j["A"] = set_json(state.A, base);
  j["B"] = set_json(state.B, base);
  j["kBudgets"] = state.budgets;
  j["edges"] = edges_json(state.hbar.edges(), layered);
  j["edgesStripped"] = edges_json(state.stripped.edges(), layered);
  j["terminated"] = state.terminated;
  return j;
}

Json to_json(const ComplexVDNode& tree) {
  Json j;
  j["facets"] = edges_json(tree.complex.facets(), tree.complex.labels());
  if (tree.vertex) {
    j["shed"] = tree.complex.labels().at(*tree.vertex);
    j["link"] = to_json(*tree.link);
    j["deletion"] = to_json(*tree.deletion);
  }
  return j;
}

Json to_json(const HypergraphVDNode& tree) {
  Json j;
  j["edges"] = edges_json(tree.graph.edges(), tree.graph.labels());
  if (tree.vertex) {
    j["shed"] = tree.graph.labels().at(*tree.vertex);
    j["contraction"] = to_json(*tree.contraction);
    j["deletion"] = to_json(*tree.deletion);
  }
  return j;
}

}  // namespace sctree
