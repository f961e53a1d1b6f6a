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

#pragma once

/// \file io.hpp
///
/// Serialization: CSV/JSON for matrices, a versioned JSON graph document,
/// JSON color reports and DOT export. Output is byte-stable: keys keep
/// insertion order and everything is emitted in id order.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lacolor/families.hpp"
#include "lacolor/graph.hpp"
#include "lacolor/matrix.hpp"
#include "lacolor/search.hpp"
#include "lacolor/verifier.hpp"

namespace lacolor {

using Json = nlohmann::ordered_json;

inline constexpr const char* kDocumentFormat = "lacolor-graph";
inline constexpr int kDocumentVersion = 1;

class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Matrices

inline std::string matrix_csv(const LabelMatrix& m) {
  std::ostringstream out;
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (c) out << ',';
      out << m.at(r, c);
    }
    out << '\n';
  }
  return out.str();
}

inline std::string sequences_csv(const std::vector<Sequence>& seqs) {
  std::ostringstream out;
  for (const auto& t : seqs) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out << ',';
      out << t[i];
    }
    out << '\n';
  }
  return out.str();
}

inline Json matrix_json(const LabelMatrix& m) {
  Json j;
  j["kind"] = std::string(to_string(m.kind));
  j["parameter"] = m.parameter;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  Json grid = Json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
    grid.push_back(std::move(row));
  }
  j["cells"] = std::move(grid);
  if (!m.sequences.empty()) {
    Json seqs = Json::array();
    for (const auto& t : m.sequences) seqs.push_back(Json(std::vector<Label>(t.begin(), t.end())));
    j["sequences"] = std::move(seqs);
  }
  return j;
}

inline Json validation_json(const ValidationReport& report) {
  Json j;
  j["ok"] = report.ok();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json item;
    item["name"] = c.name;
    item["passed"] = c.passed;
    if (!c.detail.empty()) item["detail"] = c.detail;
    if (c.informational) item["informational"] = true;
    checks.push_back(std::move(item));
  }
  j["checks"] = std::move(checks);
  return j;
}

// ---------------------------------------------------------------------------
// Reports

inline Json expected_json(const ExpectedColors& e) {
  Json j;
  j["claimed_colors"] = e.claimed_colors;
  j["at_most"] = e.at_most;
  Json classes = Json::array();
  for (const auto& c : e.classes) {
    classes.push_back(Json{{"value", c.value}, {"size", c.size}, {"degree", c.degree}});
  }
  j["classes"] = std::move(classes);
  return j;
}

inline ExpectedColors expected_from_json(const Json& j) {
  ExpectedColors e;
  e.claimed_colors = j.at("claimed_colors").get<std::size_t>();
  e.at_most = j.value("at_most", false);
  for (const auto& c : j.at("classes")) {
    e.classes.push_back(
        {c.at("value").get<Label>(), c.at("size").get<std::size_t>(), c.at("degree").get<std::size_t>()});
  }
  return e;
}

inline Json report_json(const LabeledGraph& g, const ColorReport& r) {
  Json j;
  j["local_antimagic"] = r.local_antimagic;
  j["bijective"] = r.bijective;
  j["color_count"] = r.color_count;
  j["sum_total"] = r.sum_total;
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    Json members = Json::array();
    for (VertexId v : c.members) members.push_back(v.value);
    classes.push_back(Json{{"value", c.value}, {"size", c.members.size()}, {"vertices", members}});
  }
  j["classes"] = std::move(classes);
  j["sums"] = r.sums;
  Json issues = Json::array();
  for (const auto& i : r.label_issues) {
    issues.push_back(Json{{"edge", i.edge},
                          {"label", i.label},
                          {"kind", i.kind == LabelIssueKind::Duplicate ? "duplicate" : "out_of_range"}});
  }
  j["label_issues"] = std::move(issues);
  Json conflicts = Json::array();
  for (const auto& c : r.conflicts) {
    const auto& e = g.edge(c.edge);
    conflicts.push_back(
        Json{{"edge", c.edge}, {"u", g.name(e.a)}, {"v", g.name(e.b)}, {"sum", c.sum}});
  }
  j["conflicts"] = std::move(conflicts);
  if (r.bipartition) {
    j["bipartite"] = true;
    j["parts"] = Json::array({r.bipartition->left, r.bipartition->right});
    j["balanced"] = r.bipartition->balanced_components();
  } else {
    j["bipartite"] = false;
  }
  return j;
}

inline Json check_json(const ExpectationCheck& c) {
  return Json{{"passed", c.passed}, {"diffs", c.diffs}};
}

/// The report attached by `build --verify` and printed by `verify`.
inline Json verification_json(const LabeledGraph& g, const std::optional<ExpectedColors>& expected) {
  Json j;
  j["coloring"] = report_json(g, induced_coloring(g));
  if (expected) j["expected"] = check_json(check_expected(g, *expected));
  return j;
}

inline Json search_json(const SearchResult& r) {
  Json j;
  j["outcome"] = std::string(to_string(r.outcome));
  if (r.outcome == SearchOutcome::Value) {
    j["colors"] = r.colors;
    j["witness"] = r.witness;
  }
  if (r.outcome == SearchOutcome::Timeout) {
    j["budget_ms"] = r.budget.count();
    if (r.best_so_far) j["best_so_far"] = *r.best_so_far;
  }
  j["stats"] = Json{{"nodes", r.stats.nodes},
                    {"leaves", r.stats.leaves},
                    {"conflict_prunes", r.stats.conflict_prunes},
                    {"bound_prunes", r.stats.bound_prunes}};
  return j;
}

inline Json discrepancy_json(const Discrepancy& d) {
  return Json{{"quantity", d.quantity},
              {"printed", d.printed_formula},
              {"printed_value", d.printed_value},
              {"verified", d.verified_formula},
              {"verified_value", d.verified_value}};
}

// ---------------------------------------------------------------------------
// Graph documents

struct GraphDocument {
  std::optional<FamilySpec> family;
  LabeledGraph graph;
  std::optional<ExpectedColors> expected;
  std::optional<Json> report;
};

inline Json family_json(const FamilySpec& spec) {
  Json params = Json::object();
  for (std::string_view p : family_parameters(spec.family)) {
    const auto& fp = spec.params;
    int v = p == "k" ? fp.k : p == "n" ? fp.n : p == "r" ? fp.r : p == "s" ? fp.s : fp.m;
    params[std::string(p)] = v;
  }
  return Json{{"tag", std::string(family_tag(spec.family))}, {"params", params}};
}

inline Json document_json(const GraphDocument& doc) {
  Json j;
  j["format"] = kDocumentFormat;
  j["version"] = kDocumentVersion;
  if (doc.family) j["family"] = family_json(*doc.family);
  const auto& g = doc.graph;
  Json vertices = Json::array();
  for (std::uint32_t v = 0; v < g.order(); ++v) {
    vertices.push_back(Json{{"id", v}, {"name", g.name(VertexId{v})}, {"degree", g.degree(VertexId{v})}});
  }
  j["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    edges.push_back(Json{{"u", e.a.value}, {"v", e.b.value}, {"label", e.label}});
  }
  j["edges"] = std::move(edges);
  if (doc.expected) j["expected_colors"] = expected_json(*doc.expected);
  if (doc.report) j["report"] = *doc.report;
  return j;
}

inline std::string write_document(const GraphDocument& doc) { return document_json(doc).dump(2) + "\n"; }

namespace detail {

[[noreturn]] inline void bad_document(const std::string& why) {
  throw DocumentError("invalid graph document: " + why);
}

}  // namespace detail

/// Parses and validates a graph document. Vertex ids must be 0..n-1 in
/// order, edges must reference existing ids, labels must be positive, and
/// stored degrees must match the edge list.
inline GraphDocument read_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    detail::bad_document(e.what());
  }
  try {
    if (!j.is_object()) detail::bad_document("top level is not an object");
    if (j.value("format", std::string()) != kDocumentFormat) detail::bad_document("format is not lacolor-graph");
    if (j.value("version", 0) != kDocumentVersion) detail::bad_document("unsupported version");

    GraphDocument doc;
    if (j.contains("family")) {
      const auto& f = j.at("family");
      auto fam = parse_family(f.at("tag").get<std::string>());
      if (!fam) detail::bad_document("unknown family tag " + f.at("tag").get<std::string>());
      FamilySpec spec{*fam, {}};
      const auto& p = f.value("params", Json::object());
      spec.params.k = p.value("k", 0);
      spec.params.n = p.value("n", 0);
      spec.params.r = p.value("r", 0);
      spec.params.s = p.value("s", 0);
      spec.params.m = p.value("m", 0);
      doc.family = spec;
    }

    const auto& vertices = j.at("vertices");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const auto& v = vertices[i];
      if (v.at("id").get<std::size_t>() != i) detail::bad_document("vertex ids must be 0..n-1 in order");
      try {
        doc.graph.add_vertex(v.at("name").get<std::string>());
      } catch (const GraphError& e) {
        detail::bad_document(e.what());
      }
    }
    for (const auto& e : j.at("edges")) {
      const auto u = e.at("u").get<std::uint64_t>();
      const auto v = e.at("v").get<std::uint64_t>();
      if (u >= doc.graph.order() || v >= doc.graph.order()) {
        detail::bad_document("edge references unknown vertex id");
      }
      const Label label = e.at("label").get<Label>();
      try {
        doc.graph.add_edge(VertexId{static_cast<std::uint32_t>(u)},
                           VertexId{static_cast<std::uint32_t>(v)}, label);
      } catch (const GraphError& err) {
        detail::bad_document(err.what());
      }
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i].contains("degree") &&
          vertices[i]["degree"].get<std::size_t>() !=
              doc.graph.degree(VertexId{static_cast<std::uint32_t>(i)})) {
        detail::bad_document("stored degree of vertex " + std::to_string(i) + " disagrees with edges");
      }
    }
    if (j.contains("expected_colors")) doc.expected = expected_from_json(j.at("expected_colors"));
    if (j.contains("report")) doc.report = j.at("report");
    return doc;
  } catch (const Json::exception& e) {
    detail::bad_document(e.what());
  }
}

// ---------------------------------------------------------------------------
// DOT

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// Undirected DOT in vertex-id order; edges carry their label, vertices
/// their induced sum.
inline std::string export_dot(const LabeledGraph& g, const std::string& name = "G") {
  const ColorReport report = induced_coloring(g);
  std::ostringstream out;
  out << "graph " << detail::dot_quote(name) << " {\n";
  for (std::uint32_t v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=" << detail::dot_quote(g.name(VertexId{v})) << ", sum=" << report.sums[v]
        << "];\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << e.a.value << " -- " << e.b.value << " [label=" << e.label << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace lacolor
