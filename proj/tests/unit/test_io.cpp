#include <gtest/gtest.h>

#include <functional>

#include "sctree/corpus.hpp"
#include "sctree/error.hpp"
#include "sctree/io.hpp"

using namespace sctree;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InconsistentState;
}

}  // namespace

TEST(Io, ComplexRoundTrip) {
  for (const auto& [name, tree] : corpus::named_trees()) {
    auto back = complex_from_json(parse_json(to_json(tree).dump()));
    EXPECT_EQ(back.labels(), tree.labels()) << name;
    EXPECT_EQ(back.facets(), tree.facets()) << name;
  }
}

TEST(Io, HypergraphAndIdealRoundTrip) {
  auto h = corpus::three_triangles();
  EXPECT_EQ(hypergraph_from_json(to_json(h)), h);
  for (const auto& ideal : {corpus::nonlinear_square_ideal(), corpus::char2_ideal()})
    EXPECT_EQ(ideal_from_json(to_json(ideal)), ideal);
  auto j = parse_json(R"({"variables": ["a", "b"], "generators": [{"a": 2}, {"a": 1, "b": 1}]})");
  EXPECT_EQ(ideal_from_json(j).format(), "(a^2, a*b)");
}

TEST(Io, BettiRoundTrip) {
  BettiTable t{Field::gf(2), {}};
  t.add(0, 2, 3);
  t.add(1, 3, 2);
  auto j = to_json(t);
  EXPECT_EQ(j.dump(), R"({"field":"GF2","entries":[{"i":0,"j":2,"beta":3},{"i":1,"j":3,"beta":2}]})");
  EXPECT_EQ(betti_from_json(j), t);
}

TEST(Io, SyntaxErrorsCarryLineAndColumn) {
  try {
    parse_json("{\n  \"vertices\": [\"x1\",\n  ]\n}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3, column 3"), std::string::npos) << e.what();
  }
}

TEST(Io, SchemaErrors) {
  EXPECT_EQ(code_of([] { complex_from_json(parse_json(R"({"vertices": ["a"]})")); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { complex_from_json(parse_json(R"({"vertices": ["a"], "facets": [["b"]]})")); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { complex_from_json(parse_json(R"({"vertices": ["a", "b"], "facets": [["a"], ["a", "b"]]})")); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { ideal_from_json(parse_json(R"({"variables": ["a"], "generators": [{"a": -1}]})")); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { read_json_file("/nonexistent/file.json"); }), ErrorCode::ParseError);
}

TEST(Io, RunDescriptorAndTrace) {
  auto j = parse_json(R"({"complex": {"vertices": ["x1","x2","x3","x4","x5","x6","x7","x8"],
      "facets": [["x1","x2","x3"],["x1","x4","x5","x6"],["x5","x6","x7","x8"]]}, "k": [1,2,2], "string": "LDLL"})");
  auto run = run_descriptor_from_json(j);
  EXPECT_EQ(run.k, (std::vector<unsigned>{1, 2, 2}));
  EXPECT_EQ(run.letters, "LDLL");
  Construction c(run.complex, run.k);
  auto result = c.run(run.letters);
  auto t = trace_json(c, result.states[2]);
  EXPECT_EQ(t["P"], "D");
  EXPECT_EQ(t["u"], "x5");
  EXPECT_EQ(t["c"], 1);
  EXPECT_EQ(t["B"].dump(), R"(["x5"])");
  EXPECT_EQ(t["kBudgets"].dump(), "[1,2,2]");
  EXPECT_TRUE(trace_json(c, result.states[0])["P"].is_null());
}

TEST(Io, FixtureFilesMatchTheCorpus) {
  const std::string dir = SCTREE_FIXTURE_DIR;
  auto four = complex_from_json(read_json_file(dir + "/four_facet_tree.json"));
  EXPECT_TRUE(four.same_as(corpus::four_facet_tree()));
  auto three = complex_from_json(read_json_file(dir + "/three_facet_tree.json"));
  EXPECT_TRUE(three.same_as(corpus::three_facet_tree()));
  auto five = complex_from_json(read_json_file(dir + "/five_facet_tree.json"));
  EXPECT_TRUE(five.same_as(corpus::five_facet_tree()));
  EXPECT_EQ(hypergraph_from_json(read_json_file(dir + "/three_triangles.json")), corpus::three_triangles());
  EXPECT_EQ(ideal_from_json(read_json_file(dir + "/nonlinear_square_ideal.json")), corpus::nonlinear_square_ideal());
  EXPECT_EQ(ideal_from_json(read_json_file(dir + "/char2_ideal.json")), corpus::char2_ideal());
}
