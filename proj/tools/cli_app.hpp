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

// The lacolor command line. Exit codes: 0 ok, 1 verification failure,
// 2 usage error.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lacolor/lacolor.hpp"

namespace lacolor::cli {

inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;
inline constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

inline GraphDocument load(const std::string& path) {
  if (path.empty()) throw UsageError("no input file given");
  try {
    return read_document(slurp(path));
  } catch (const DocumentError& e) {
    throw UsageError(e.what());
  }
}

struct MatrixArgs {
  std::string kind;
  int k = 0;
  int n = 0;
  std::string format = "csv";
  bool validate = false;
  bool sequences = false;
};

inline int run_matrix(const MatrixArgs& a, std::ostream& out, std::ostream& err) {
  LabelMatrix m;
  try {
    if (a.kind == "5x2k") {
      m = matrix_5x2k(a.k);
    } else if (a.kind == "6x4n") {
      m = matrix_6x4n(a.n);
    } else if (a.kind == "kx10") {
      m = matrix_kx10(a.k);
    } else {
      throw UsageError("unknown matrix kind " + a.kind + " (want 5x2k, 6x4n or kx10)");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.sequences && m.kind != MatrixKind::SixBy4n) throw UsageError("--sequences applies to 6x4n only");

  std::optional<ValidationReport> report;
  if (a.validate) report = validate(m);

  if (a.format == "json") {
    Json j = matrix_json(m);
    if (report) j["validation"] = validation_json(*report);
    out << j.dump(2) << "\n";
  } else {
    out << (a.sequences ? sequences_csv(m.sequences) : matrix_csv(m));
    if (report) {
      for (const auto& c : report->failures()) err << "FAIL " << c.name << ": " << c.detail << "\n";
      err << "validation " << (report->ok() ? "passed" : "failed") << "\n";
    }
  }
  return report && !report->ok() ? kFailed : kOk;
}

struct BuildArgs {
  std::string family;
  FamilyParams params;
  std::string out_path;
  bool verify = false;
  bool experimental = false;
};

inline int run_build(const BuildArgs& a, std::ostream& out, std::ostream& err) {
  auto fam = parse_family(a.family);
  if (!fam) throw UsageError("unknown family " + a.family);
  FamilyBuild b;
  try {
    b = build({*fam, a.params}, a.experimental);
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
  for (const auto& w : b.warnings) err << "warning: " << w << "\n";
  for (const auto& d : b.discrepancies) {
    err << "discrepancy: " << d.quantity << ": printed " << d.printed_formula << " = "
        << d.printed_value << ", verified " << d.verified_formula << " = " << d.verified_value << "\n";
  }

  GraphDocument doc{b.spec, b.graph, b.expected, std::nullopt};
  int code = kOk;
  if (a.verify) {
    Json report = verification_json(b.graph, b.expected);
    if (!b.discrepancies.empty()) {
      Json ds = Json::array();
      for (const auto& d : b.discrepancies) ds.push_back(discrepancy_json(d));
      report["discrepancies"] = std::move(ds);
    }
    if (!report["coloring"]["local_antimagic"].get<bool>() || !report["expected"]["passed"].get<bool>()) {
      code = kFailed;
      for (const auto& d : report["expected"]["diffs"]) err << "mismatch: " << d.get<std::string>() << "\n";
    }
    doc.report = std::move(report);
  }
  emit(write_document(doc), a.out_path, out);
  return code;
}

inline int run_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  const GraphDocument doc = load(path);
  const Json report = verification_json(doc.graph, doc.expected);
  out << report.dump(2) << "\n";
  bool ok = report["coloring"]["local_antimagic"].get<bool>();
  const ColorReport cr = induced_coloring(doc.graph);
  for (const auto& i : cr.label_issues) {
    const auto& e = doc.graph.edge(i.edge);
    err << "edge " << doc.graph.name(e.a) << "-" << doc.graph.name(e.b) << " label " << i.label
        << (i.kind == LabelIssueKind::Duplicate ? " duplicates another label" : " is out of range")
        << "\n";
  }
  for (const auto& c : cr.conflicts) {
    const auto& e = doc.graph.edge(c.edge);
    err << "edge " << doc.graph.name(e.a) << "-" << doc.graph.name(e.b)
        << " joins two vertices with sum " << c.sum << "\n";
  }
  if (report.contains("expected") && !report["expected"]["passed"].get<bool>()) {
    ok = false;
    for (const auto& d : report["expected"]["diffs"]) err << "mismatch: " << d.get<std::string>() << "\n";
  }
  return ok ? kOk : kFailed;
}

inline int run_search(const std::string& path, std::size_t max_edges, long long budget_ms,
                      std::ostream& out, std::ostream& err) {
  const GraphDocument doc = load(path);
  SearchOptions opt;
  opt.max_edges = max_edges;
  if (budget_ms > 0) opt.budget = std::chrono::milliseconds(budget_ms);
  SearchResult r;
  try {
    r = chi_la_exact(doc.graph, opt);
  } catch (const GraphError& e) {
    if (e.code() == GraphErrc::TooLarge) throw UsageError(e.what());
    throw;
  }
  out << search_json(r).dump(2) << "\n";
  switch (r.outcome) {
    case SearchOutcome::Value:
      err << "Value(" << r.colors << ")\n";
      return kOk;
    case SearchOutcome::NoLabelingExists:
      err << "NoLabelingExists\n";
      return kOk;
    case SearchOutcome::Timeout:
      err << "Timeout(" << r.budget.count() << " ms)\n";
      return kFailed;
  }
  return kFailed;
}

inline int run_export(const std::string& path, const std::string& format, std::ostream& out) {
  if (format != "dot") throw UsageError("unsupported export format " + format);
  const GraphDocument doc = load(path);
  std::string name = doc.family ? std::string(family_tag(doc.family->family)) : "G";
  out << export_dot(doc.graph, name);
  return kOk;
}

inline int run_selftest(std::ostream& out) {
  bool ok = true;
  int bad = 0;
  for (int p = 1; p <= 50; ++p) {
    bad += !validate_5x2k(matrix_5x2k(p)).ok();
    bad += !validate_6x4n(matrix_6x4n(p)).ok();
    bad += !validate_kx10(matrix_kx10(p)).ok();
  }
  out << (bad ? "FAIL" : "ok  ") << " matrices k,n in [1,50]";
  if (bad) out << ": " << bad << " failures";
  out << "\n";
  ok = ok && bad == 0;

  for (Family f : kAllFamilies) {
    std::size_t pass = 0;
    const auto grid = default_grid(f);
    std::string first_failure;
    for (const auto& spec : grid) {
      const FamilyBuild b = build(spec, true);
      const auto check = check_expected(b.graph, b.expected);
      if (check.passed) {
        ++pass;
      } else if (first_failure.empty()) {
        first_failure = check.diffs.front();
      }
    }
    const bool fam_ok = pass == grid.size();
    out << (fam_ok ? "ok  " : "FAIL") << " " << family_tag(f) << " " << pass << "/" << grid.size();
    if (!fam_ok) out << ": " << first_failure;
    out << "\n";
    ok = ok && fam_ok;
  }
  return ok ? kOk : kFailed;
}

}  // namespace detail

/// Runs the CLI on `args` (without the program name).
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local antimagic labelings: matrices, families, verification, search", "lacolor"};
  app.require_subcommand(1);

  detail::MatrixArgs margs;
  auto* matrix = app.add_subcommand("matrix", "Emit a label matrix");
  matrix->add_option("kind", margs.kind, "5x2k, 6x4n or kx10")->required();
  matrix->add_option("--k", margs.k, "Parameter k (5x2k, kx10)");
  matrix->add_option("--n", margs.n, "Parameter n (6x4n)");
  matrix->add_option("--format", margs.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  matrix->add_flag("--validate", margs.validate, "Run the matching validator");
  matrix->add_flag("--sequences", margs.sequences, "Emit T_1..T_2n instead of the grid (6x4n)");

  detail::BuildArgs bargs;
  auto* buildc = app.add_subcommand("build", "Build a labeled family member");
  buildc->add_option("family", bargs.family, "Family tag")->required();
  buildc->add_option("--k", bargs.params.k);
  buildc->add_option("--n", bargs.params.n);
  buildc->add_option("--r", bargs.params.r);
  buildc->add_option("--s", bargs.params.s);
  buildc->add_option("--m", bargs.params.m);
  buildc->add_option("--out", bargs.out_path, "Output file (default stdout)");
  buildc->add_flag("--verify", bargs.verify, "Attach the verification report");
  buildc->add_flag("--experimental", bargs.experimental, "Allow experimental families");

  std::string input;
  auto add_input = [&input](CLI::App* sub) {
    auto* pos = sub->add_option("file", input, "Graph document");
    auto* opt = sub->add_option("--input", input, "Graph document");
    pos->excludes(opt);
  };
  auto* verify = app.add_subcommand("verify", "Verify a graph document");
  add_input(verify);

  std::size_t max_edges = 11;
  long long budget_ms = 0;
  auto* search = app.add_subcommand("search", "Exact chi_la by exhaustive search");
  add_input(search);
  search->add_option("--max-edges", max_edges, "Refuse graphs with more edges");
  search->add_option("--budget", budget_ms, "Time budget in milliseconds");

  std::string export_format = "dot";
  auto* exportc = app.add_subcommand("export", "Export a graph document");
  add_input(exportc);
  exportc->add_option("--format", export_format, "dot");

  auto* selftest = app.add_subcommand("selftest", "Run all validators over the default grid");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*matrix) return detail::run_matrix(margs, out, err);
    if (*buildc) return detail::run_build(bargs, out, err);
    if (*verify) return detail::run_verify(input, out, err);
    if (*search) return detail::run_search(input, max_edges, budget_ms, out, err);
    if (*exportc) return detail::run_export(input, export_format, out);
    if (*selftest) return detail::run_selftest(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace lacolor::cli
