// Copyright 2026 The bcnobs Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <bcnobs/dot.hpp>
#include <bcnobs/io.hpp>
#include <bcnobs/observability.hpp>
#include <bcnobs/random.hpp>

#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "fixtures.hpp"

namespace bcnobs {
namespace {

using namespace bcnobs::testing;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  EXPECT_TRUE(in) << path;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fixture(const std::string& name) { return std::string(BCNOBS_FIXTURE_DIR) + "/" + name; }
std::string golden(const std::string& name) { return std::string(BCNOBS_GOLDEN_DIR) + "/" + name; }

TEST(Parse, FixtureFiles) {
  EXPECT_EQ(load_bcn(fixture("bcn5.json")), bcn5());
  EXPECT_EQ(load_bcn(fixture("bcn6.json")), bcn6());
  EXPECT_EQ(load_bcn(fixture("bcn7.json")), bcn7());
}

TEST(Parse, InputFirstAndUpperCaseDimensions) {
  // bcn6 with columns listed input-first: u1 block then u2 block.
  const auto b = parse_bcn(R"({"N": 4, "M": 2, "Q": 2, "ordering": "input-first",
                               "L": [1,3,1,3, 1,3,2,2], "H": [1,1,2,2]})");
  EXPECT_EQ(b, bcn6());
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_bcn(R"({"n":2,"m":1,"q":1,"L":[1,1,2,1,2,4,1,1],"H":[1,2,2,2]})"),
               ParseError);
  EXPECT_THROW(parse_bcn(R"({"n":2,"m":1,"q":1,"ordering":"state-first",
                             "L":[1,1,2,1,2,5,1,1],"H":[1,2,2,2]})"),
               ParseError);
  EXPECT_THROW(parse_bcn(R"({"n":2,"m":1,"q":1,"ordering":"state-first",
                             "L":[1,1,2,1,2,4,1],"H":[1,2,2,2]})"),
               ParseError);
  EXPECT_THROW(parse_bcn(R"({"N":3,"M":2,"Q":2,"ordering":"state-first","L":[],"H":[]})"),
               ParseError);
  EXPECT_THROW(parse_bcn(R"({"n":2,"m":1,"q":1,"ordering":"diagonal",
                             "L":[1,1,2,1,2,4,1,1],"H":[1,2,2,2]})"),
               ParseError);
  EXPECT_THROW(parse_bcn("{ not json"), ParseError);
  EXPECT_THROW(parse_bcn(R"({"n":0,"m":1,"q":1,"ordering":"state-first","L":[1,1],"H":[1]})"),
               ParseError);
  EXPECT_THROW(load_bcn(fixture("does-not-exist.json")), ParseError);
}

TEST(Parse, TruthTable) {
  // x1' = x1 AND u, x2' = x2; y = x1.  State bits x1 x2, input bit u.
  const auto b = parse_bcn(R"({"n": 2, "m": 1, "q": 1, "truth_table": {
      "transition": {"11|1": "11", "11|0": "01", "10|1": "10", "10|0": "00",
                     "01|1": "01", "01|0": "01", "00|1": "00", "00|0": "00"},
      "output": {"11": "1", "10": "1", "01": "0", "00": "0"}}})");
  // true first: 11 -> 1, 10 -> 2, 01 -> 3, 00 -> 4; u = 1 -> 1, u = 0 -> 2.
  const auto expected = make_bcn(4, 2, 2, {1, 3, 2, 4, 3, 3, 4, 4}, {1, 1, 2, 2});
  EXPECT_EQ(b, expected);

  EXPECT_THROW(parse_bcn(R"({"n":1,"m":1,"q":1,"truth_table":{
      "transition":{"1|1":"1"},"output":{"1":"1","0":"0"}}})"),
               ParseError);
  EXPECT_THROW(parse_bcn(R"({"n":1,"m":1,"q":1,"truth_table":{
      "transition":{"11":"1"},"output":{"1":"1","0":"0"}}})"),
               ParseError);
}

TEST(Serialize, RoundTrip) {
  for (auto order : {ColumnOrder::StateFirst, ColumnOrder::InputFirst}) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto b = gen_random_bcn(seed, 1 + seed % 4, 1 + seed % 2, 1);
      const auto doc = to_document(b, order, "r" + std::to_string(seed));
      const auto text = serialize_document(doc);
      EXPECT_EQ(parse_document(text), doc);
      EXPECT_EQ(parse_bcn(text), b);
    }
  }
  const auto doc = parse_document(slurp(fixture("bcn5.json")));
  EXPECT_EQ(doc, to_document(bcn5(), ColumnOrder::StateFirst, "bcn5"));
}

TEST(Serialize, TruthTableRoundTrip) {
  const std::string text = R"({"n":1,"m":1,"q":1,"truth_table":{
      "transition":{"1|1":"0","1|0":"1","0|1":"1","0|0":"0"},"output":{"1":"1","0":"0"}}})";
  const auto doc = parse_document(text);
  EXPECT_EQ(parse_document(serialize_document(doc)), doc);
}

std::set<std::string> lines_of(const std::string& s) {
  std::set<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.insert(line);
  return out;
}

TEST(Dot, PairGraphsMatchGolden) {
  const auto g5 = emit_dot(PairGraph::build(bcn5()), "bcn5");
  EXPECT_EQ(lines_of(g5), lines_of(slurp(golden("bcn5_pair_graph.dot"))));
  EXPECT_EQ(g5, slurp(golden("bcn5_pair_graph.dot")));
  const auto g7 = emit_dot(PairGraph::build(bcn7()), "bcn7");
  EXPECT_EQ(g7, slurp(golden("bcn7_pair_graph.dot")));
}

TEST(Dot, PairGraphKeepsIsolatedVertices) {
  const auto dot = emit_dot(PairGraph::build(bcn5()));
  EXPECT_NE(dot.find("  \"34\";\n"), std::string::npos);
  EXPECT_EQ(dot.find("\"34\" ->"), std::string::npos);
}

TEST(Dot, AutomatonMatchesGolden) {
  const auto g = PairGraph::build(bcn5());
  const auto a = subset_automaton(g, determining_payload(g, sx(2)));
  EXPECT_EQ(emit_dot(a, "A_x2"), slurp(golden("bcn5_A_x2.dot")));
}

TEST(Dot, ByteStable) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto b = gen_random_bcn(seed, 3, 1, 1);
    const auto g1 = PairGraph::build(b), g2 = PairGraph::build(b);
    EXPECT_EQ(emit_dot(g1), emit_dot(g2));
    const auto nd = g1.non_diagonal_vertices();
    if (nd.empty()) continue;
    EXPECT_EQ(emit_dot(subset_automaton(g1, nd)), emit_dot(subset_automaton(g2, nd)));
  }
}

}  // namespace
}  // namespace bcnobs
