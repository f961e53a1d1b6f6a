// Copyright 2026 The lacolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "lacolor/grid.hpp"
#include "lacolor/io.hpp"
#include "test_support.hpp"

namespace lacolor {
namespace {

TEST(MatrixCsv, FanK1) {
  EXPECT_EQ(matrix_csv(matrix_5x2k(1)), "1,2\n6,8\n7,4\n10,9\n5,3\n");
}

TEST(MatrixCsv, SequencesN6FirstLine) {
  const std::string csv = sequences_csv(sequences_6x4n(6));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "1,97,83,38,108,36,85,13,84,37,24,120");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 12);
}

TEST(MatrixJson, CarriesShapeAndSequences) {
  const Json j = matrix_json(matrix_6x4n(2));
  EXPECT_EQ(j["kind"], "6x4n");
  EXPECT_EQ(j["rows"], 6);
  EXPECT_EQ(j["cols"], 8);
  EXPECT_EQ(j["sequences"].size(), 4u);
  EXPECT_EQ(j["cells"][0][0], 1);
}

TEST(GraphDocument, RoundTripIsLossless) {
  for (const auto& spec : default_grid()) {
    if (spec.family == Family::OddKH) continue;
    const FamilyBuild b = build(spec);
    GraphDocument doc{b.spec, b.graph, b.expected, verification_json(b.graph, b.expected)};
    const std::string text = write_document(doc);
    const GraphDocument back = read_document(text);
    ASSERT_EQ(back.graph.order(), b.graph.order());
    ASSERT_EQ(back.graph.size(), b.graph.size());
    for (EdgeId id = 0; id < b.graph.size(); ++id) {
      EXPECT_EQ(back.graph.edge(id).a, b.graph.edge(id).a);
      EXPECT_EQ(back.graph.edge(id).b, b.graph.edge(id).b);
      EXPECT_EQ(back.graph.edge(id).label, b.graph.edge(id).label);
    }
    EXPECT_EQ(back.family, doc.family);
    EXPECT_EQ(back.expected, doc.expected);
    EXPECT_EQ(write_document(back), text);
    // Verifying the reloaded graph reproduces the stored report byte for byte.
    EXPECT_EQ(verification_json(back.graph, back.expected).dump(), doc.report->dump());
  }
}

TEST(GraphDocument, RejectsMalformedInput) {
  const FamilyBuild b = build_fb(1);
  const Json good = document_json({b.spec, b.graph, b.expected, std::nullopt});
  auto expect_rejected = [](const Json& j) { EXPECT_THROW(read_document(j.dump()), DocumentError) << j.dump(); };

  EXPECT_THROW(read_document("{not json"), DocumentError);
  EXPECT_THROW(read_document("[]"), DocumentError);
  Json j = good;
  j["format"] = "other";
  expect_rejected(j);
  j = good;
  j["version"] = 2;
  expect_rejected(j);
  j = good;
  j["edges"][0]["u"] = 99;
  expect_rejected(j);
  j = good;
  j["edges"][0]["label"] = 0;
  expect_rejected(j);
  j = good;
  j["edges"][0]["label"] = -4;
  expect_rejected(j);
  j = good;
  j["edges"][1]["u"] = j["edges"][0]["u"];
  j["edges"][1]["v"] = j["edges"][0]["v"];
  expect_rejected(j);
  j = good;
  j["vertices"][2]["id"] = 7;
  expect_rejected(j);
  j = good;
  j["vertices"][0]["degree"] = 5;
  expect_rejected(j);
  j = good;
  j["vertices"][1]["name"] = j["vertices"][0]["name"];
  expect_rejected(j);
  j = good;
  j["family"]["tag"] = "nope";
  expect_rejected(j);
  j = good;
  j.erase("edges");
  expect_rejected(j);
}

TEST(GraphDocument, FamilyIsOptional) {
  GraphDocument doc{std::nullopt, testing::path(3), std::nullopt, std::nullopt};
  const GraphDocument back = read_document(write_document(doc));
  EXPECT_FALSE(back.family.has_value());
  EXPECT_EQ(back.graph.size(), 2u);
}

TEST(Dot, FanOfTwoSnapshot) {
  const std::string want =
      "graph \"FB\" {\n"
      "  0 [label=\"u_1\", sum=11];\n"
      "  1 [label=\"v_1\", sum=11];\n"
      "  2 [label=\"w_1\", sum=14];\n"
      "  3 [label=\"x\", sum=38];\n"
      "  4 [label=\"u_2\", sum=11];\n"
      "  5 [label=\"v_2\", sum=11];\n"
      "  6 [label=\"w_2\", sum=14];\n"
      "  0 -- 2 [label=1];\n"
      "  1 -- 2 [label=6];\n"
      "  3 -- 2 [label=7];\n"
      "  3 -- 0 [label=10];\n"
      "  3 -- 1 [label=5];\n"
      "  4 -- 6 [label=2];\n"
      "  5 -- 6 [label=8];\n"
      "  3 -- 6 [label=4];\n"
      "  3 -- 4 [label=9];\n"
      "  3 -- 5 [label=3];\n"
      "}\n";
  EXPECT_EQ(export_dot(build_fb(1).graph, "FB"), want);
}

TEST(Dot, QuotesNames) {
  LabeledGraph g = new_graph({"a\"b", "c"});
  g.add_edge(VertexId{0}, VertexId{1}, 1);
  EXPECT_NE(export_dot(g).find("label=\"a\\\"b\""), std::string::npos);
}

}  // namespace
}  // namespace lacolor
