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

// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if
// any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "golden.hpp"
#include "lacolor/lacolor.hpp"
#include "test_support.hpp"

namespace lacolor {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void fail(const std::string& why) {
    if (pass) note << why;
    pass = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string point(const FamilySpec& s) {
  std::ostringstream o;
  o << family_tag(s.family) << "(";
  bool first = true;
  for (auto p : family_parameters(s.family)) {
    const int v = p == "k" ? s.params.k : p == "n" ? s.params.n : p == "r" ? s.params.r : p == "s" ? s.params.s : s.params.m;
    o << (first ? "" : ",") << p << "=" << v;
    first = false;
  }
  o << ")";
  return o.str();
}

template <class Table>
bool same_cells(const LabelMatrix& m, const Table& t) {
  if (m.rows != t.size() || m.cols != t[0].size()) return false;
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (m.at(r, c) != t[r][c]) return false;
    }
  }
  return true;
}

// 1. Golden tables.
void golden_tables(Outcome& o) {
  const auto t0 = Clock::now();
  o.expect(same_cells(matrix_5x2k(6), golden::kFan6), "5x2k(6) differs from table");
  const auto seqs = sequences_6x4n(6);
  bool seq_ok = seqs.size() == golden::kSeq6.size();
  for (std::size_t i = 0; seq_ok && i < seqs.size(); ++i) {
    seq_ok = std::equal(seqs[i].begin(), seqs[i].end(), golden::kSeq6[i].begin(), golden::kSeq6[i].end());
  }
  o.expect(seq_ok, "6x4n(6) sequences differ from table");
  o.expect(same_cells(matrix_kx10(4), golden::kCycle4), "kx10(4) differs from table");
  const double ms = ms_since(t0);
  o.expect(ms < 1000.0, "took " + std::to_string(ms) + " ms");
  o.note << (o.pass ? "3 tables cell-for-cell, " : "; ") << static_cast<long>(ms) << " ms";
}

// 2. Validators over k, n in [1, 50].
void matrix_invariants(Outcome& o) {
  const auto t0 = Clock::now();
  int runs = 0;
  for (int k = 1; k <= 50; ++k) {
    for (const auto& rep : {validate_5x2k(matrix_5x2k(k)), validate_6x4n(sequences_6x4n(k)),
                            validate_6x4n(matrix_6x4n(k)), validate_kx10(matrix_kx10(k))}) {
      ++runs;
      if (!rep.ok()) o.fail("k=" + std::to_string(k) + ": " + rep.failures().front().name);
    }
  }
  const double ms = ms_since(t0);
  o.expect(ms < 5000.0, "took " + std::to_string(ms) + " ms");
  o.note << (o.pass ? "" : "; ") << runs << " validator runs, " << static_cast<long>(ms) << " ms";
}

// 3. Every family over its grid verifies with exact class sizes.
void family_grid(Outcome& o) {
  const auto t0 = Clock::now();
  std::size_t points = 0;
  for (Family f : kAllFamilies) {
    const auto grid = default_grid(f);
    if (grid.size() < 10) o.fail(std::string(family_tag(f)) + " has fewer than 10 grid points");
    for (const auto& spec : grid) {
      const FamilyBuild b = build(spec, true);
      ++points;
      if (!induced_coloring(b.graph).local_antimagic) o.fail(point(spec) + " not local antimagic");
      const auto check = check_expected(b.graph, b.expected);
      if (!check.passed) o.fail(point(spec) + ": " + check.diffs.front());
    }
  }
  const auto rdf = build_rdf(3, 2);
  const auto rep = induced_coloring(rdf.graph);
  o.expect(rep.color_values() == std::vector<Label>{61, 79, 208}, "rDF(3,2) colors");
  o.expect(rep.find_class(61) && rep.find_class(61)->members.size() == 24 && rep.find_class(79) &&
               rep.find_class(79)->members.size() == 12 && rep.find_class(208) &&
               rep.find_class(208)->members.size() == 6,
           "rDF(3,2) class sizes");
  const double ms = ms_since(t0);
  o.expect(ms < 30000.0, "took " + std::to_string(ms) + " ms");
  o.note << (o.pass ? "" : "; ") << points << " points, rDF(3,2) 61/79/208 x 24/12/6, "
         << static_cast<long>(ms) << " ms";
}

// 4. Claimed color counts.
void color_counts(Outcome& o) {
  std::size_t exact = 0, at_most = 0;
  for (const auto& spec : default_grid()) {
    const FamilyBuild b = build(spec, true);
    const std::size_t colors = induced_coloring(b.graph).color_count;
    if (spec.family == Family::C8Units || spec.family == Family::KC82) {
      ++at_most;
      if (colors > 4) o.fail(point(spec) + " has " + std::to_string(colors) + " colors");
    } else if (!b.expected.at_most && b.expected.claimed_colors == 3) {
      ++exact;
      if (colors != 3) o.fail(point(spec) + " has " + std::to_string(colors) + " colors");
    }
  }
  o.note << (o.pass ? "" : "; ") << exact << " points with exactly 3, " << at_most << " with <= 4";
}

// 5. Distinctness predicates against the mod-4 conditions.
void distinctness(Outcome& o) {
  std::size_t inside = 0, outside = 0, outside_distinct = 0;
  auto tally = [&](bool hypothesis, bool distinct, const std::string& what) {
    if (hypothesis) {
      ++inside;
      if (!distinct) o.fail(what + " coincides inside the hypothesis region");
    } else {
      ++outside;
      outside_distinct += distinct;
    }
  };
  for (long r = 2; r <= 20; ++r) {
    for (long s = 2; s <= 20; s += 2) {
      const std::string at = "(r=" + std::to_string(r) + ",s=" + std::to_string(s) + ")";
      long k = r * s / 2;  // FB1, FB2
      tally(r % 4 != 0, r * (10 * k + 1) != s * (17 * k + 2), "FB1" + at);
      tally((r * s) % 4 != 0, r * (13 * k + 1) != s * (17 * k + 2), "FB2" + at);
      k = r * s;  // DF1, DF2
      tally(k % 4 != 0, r * (13 * k + 1) != s * (17 * k + 2), "DF1" + at);
      tally(r % 4 != 0, r * (10 * k + 1) != s * (17 * k + 2), "DF2" + at);
    }
  }
  o.note << (o.pass ? "" : "; ") << inside << " hypothesis points distinct; outside: " << outside_distinct << "/"
         << outside << " also distinct";
}

// 6. Two-color gate and lower bounds.
void lower_bounds(Outcome& o) {
  const std::set<Family> balanced{Family::RDF, Family::NC482, Family::G1,  Family::G2,  Family::H1,
                                  Family::DF1, Family::DF2,   Family::DF3, Family::DF4};
  // Families without an exact 3-color claim.
  const std::set<Family> skip{Family::FBUnits, Family::Bk, Family::C8Units, Family::KC82, Family::OddKH};
  std::size_t gates = 0, bounds = 0;
  for (const auto& spec : default_grid()) {
    const FamilyBuild b = build(spec, true);
    if (balanced.count(spec.family)) {
      ++gates;
      const auto gate = two_color_gate(b.graph);
      if (gate.verdict != GateVerdict::ImpossibleByLemma) o.fail(point(spec) + " gate inconclusive");
    }
    if (!skip.count(spec.family)) {
      ++bounds;
      const int lb = lower_bound(b.graph);
      if (lb < 3) o.fail(point(spec) + " lower bound " + std::to_string(lb));
    }
  }
  o.note << (o.pass ? "" : "; ") << gates << " gate verdicts, " << bounds << " lower bounds >= 3";
}

// 7. Exact search spot checks.
void oracle_checks(Outcome& o) {
  const auto k2 = chi_la_exact(testing::path(2));
  o.expect(k2.outcome == SearchOutcome::NoLabelingExists, "K2: " + std::string(to_string(k2.outcome)));
  const auto p3 = chi_la_exact(testing::path(3));
  o.expect(p3.outcome == SearchOutcome::Value && p3.colors == 3, "P3 not Value(3)");
  const auto fb1 = chi_la_exact(testing::fan_one());
  o.expect(fb1.outcome == SearchOutcome::Value && fb1.colors == 3, "FB(1) not Value(3)");
  o.expect(fb1.stats.elapsed_ms <= 1000.0, "FB(1) over 1 s");
  SearchOptions opts;
  opts.budget = std::chrono::minutes(5);
  const auto fb2 = chi_la_exact(build_fb(1).graph, opts);
  o.expect(fb2.outcome == SearchOutcome::Value && fb2.colors == 3, "FB(2) not Value(3)");
  o.expect(fb2.outcome != SearchOutcome::Value || testing::naive_local_antimagic(relabel(build_fb(1).graph, fb2.witness)),
           "FB(2) witness invalid");
  o.note << (o.pass ? "" : "; ") << "K2 none, P3 3, FB(1) 3 in " << static_cast<long>(fb1.stats.elapsed_ms)
         << " ms, FB(2) 3 in " << static_cast<long>(fb2.stats.elapsed_ms) << " ms";
}

// 8. Verified values that differ from the printed formulas.
void discrepancies(Outcome& o) {
  for (int k = 1; k <= 12; ++k) {
    const auto kd = build_kd82(k);
    const auto rep = induced_coloring(kd.graph);
    const Label fused = 34L * k + 4;
    o.expect(rep.find_class(fused) != nullptr, "kD82 k=" + std::to_string(k) + " lacks 34k+4");
    o.expect(rep.find_class(34L * k + 2) == nullptr, "kD82 k=" + std::to_string(k) + " has 34k+2");
    const bool recorded = std::any_of(kd.discrepancies.begin(), kd.discrepancies.end(), [&](const Discrepancy& d) {
      return d.printed_value == 34L * k + 2 && d.verified_value == fused;
    });
    o.expect(recorded, "kD82 k=" + std::to_string(k) + " divergence not recorded");

    const auto c8 = build_c8_units(k);
    const auto crep = induced_coloring(c8.graph);
    o.expect(crep.find_class(13L * k + 1) != nullptr, "C8 units k=" + std::to_string(k) + " lacks 13k+1");
    o.expect(crep.find_class(13L * k + 2) == nullptr, "C8 units k=" + std::to_string(k) + " has 13k+2");
    const bool c8_recorded = std::any_of(c8.discrepancies.begin(), c8.discrepancies.end(), [&](const Discrepancy& d) {
      return d.printed_value == 13L * k + 2 && d.verified_value == 13L * k + 1;
    });
    o.expect(c8_recorded, "C8 units k=" + std::to_string(k) + " divergence not recorded");
  }
  o.note << (o.pass ? "" : "; ") << "kD82 34k+4 (printed 34k+2), C8 units 13k+1 (printed 13k+2), k=1..12";
}

// 9. Single transpositions are always caught.
void transpositions(Outcome& o) {
  std::mt19937_64 rng(20260101);
  std::size_t total = 0, by_expected = 0;
  for (const auto& spec : default_grid()) {
    const FamilyBuild b = build(spec, true);
    const auto base = induced_coloring(b.graph).sums;
    const std::size_t m = b.graph.size();
    for (int t = 0; t < 100; ++t) {
      const EdgeId e1 = rng() % m;
      EdgeId e2 = rng() % (m - 1);
      if (e2 >= e1) ++e2;
      LabeledGraph g = b.graph;
      g.set_label(e1, b.graph.edge(e2).label);
      g.set_label(e2, b.graph.edge(e1).label);
      const auto rep = induced_coloring(g);
      const bool expected_fails = !rep.local_antimagic || !check_expected(g, b.expected).passed;
      const bool sums_differ = rep.sums != base;
      ++total;
      by_expected += expected_fails;
      if (!expected_fails && !sums_differ) o.fail(point(spec) + " transposition undetected");
    }
  }
  // Golden matrices: every swap of two distinct cells breaks a validator.
  auto swaps = [&](LabelMatrix m, const std::function<bool(const LabelMatrix&)>& ok) {
    for (int t = 0; t < 100; ++t) {
      const std::size_t i = rng() % m.cells.size();
      std::size_t j = rng() % (m.cells.size() - 1);
      if (j >= i) ++j;
      std::swap(m.cells[i], m.cells[j]);
      ++total;
      if (ok(m)) o.fail(std::string(to_string(m.kind)) + " swap undetected");
      std::swap(m.cells[i], m.cells[j]);
    }
  };
  swaps(matrix_5x2k(6), [](const LabelMatrix& m) { return validate_5x2k(m).ok(); });
  swaps(matrix_kx10(4), [](const LabelMatrix& m) { return validate_kx10(m).ok(); });
  auto seqs = sequences_6x4n(6);
  for (int t = 0; t < 100; ++t) {
    auto& seq = seqs[rng() % seqs.size()];
    const std::size_t i = rng() % seq.size();
    std::size_t j = rng() % (seq.size() - 1);
    if (j >= i) ++j;
    std::swap(seq[i], seq[j]);
    ++total;
    if (validate_6x4n(seqs).ok()) o.fail("6x4n sequence swap undetected");
    std::swap(seq[i], seq[j]);
  }
  o.note << (o.pass ? "" : "; ") << total << " transpositions detected (" << by_expected
         << " on families by the color claim alone, rest by per-vertex sums)";
}

}  // namespace
}  // namespace lacolor

int main() {
  using namespace lacolor;
  const std::pair<const char*, void (*)(Outcome&)> criteria[] = {
      {"golden matrices", golden_tables},    {"matrix invariants", matrix_invariants},
      {"family verification grid", family_grid}, {"color-count claims", color_counts},
      {"distinctness arithmetic", distinctness}, {"lower bounds", lower_bounds},
      {"oracle spot-checks", oracle_checks},  {"discrepancy ledger", discrepancies},
      {"metamorphic transpositions", transpositions},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << ++index << " " << name << ": " << o.note.str() << "\n";
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << (9 - failed) << "/9\n";
  return failed ? 1 : 0;
}
