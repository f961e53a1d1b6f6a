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

/// \file verifier.hpp
///
/// Ground truth for edge labelings. Everything here is recomputed from the
/// edge list; nothing trusts the construction that produced the graph.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lacolor/expected_colors.hpp"
#include "lacolor/graph.hpp"

namespace lacolor {

struct ColorClass {
  Label value = 0;
  std::vector<VertexId> members;
};

enum class LabelIssueKind { OutOfRange, Duplicate };

struct LabelIssue {
  EdgeId edge = 0;
  Label label = 0;
  LabelIssueKind kind = LabelIssueKind::OutOfRange;
};

/// An edge whose endpoints receive the same induced sum.
struct EdgeConflict {
  EdgeId edge = 0;
  Label sum = 0;
};

struct ColorReport {
  std::vector<Label> sums;         // induced sum per vertex id
  std::vector<ColorClass> classes; // ascending by value
  std::size_t color_count = 0;
  bool bijective = false;
  bool local_antimagic = false;
  std::vector<LabelIssue> label_issues;
  std::vector<EdgeConflict> conflicts;
  std::optional<Bipartition> bipartition;
  Label sum_total = 0;

  const ColorClass* find_class(Label value) const {
    auto it = std::lower_bound(classes.begin(), classes.end(), value,
                               [](const ColorClass& c, Label v) { return c.value < v; });
    return it != classes.end() && it->value == value ? &*it : nullptr;
  }

  std::vector<Label> color_values() const {
    std::vector<Label> out;
    for (const auto& c : classes) out.push_back(c.value);
    return out;
  }
};

namespace detail {

inline Label checked_add(Label a, Label b) {
  Label out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("induced sum overflows 64 bits");
  return out;
}

}  // namespace detail

inline ColorReport induced_coloring(const LabeledGraph& g) {
  ColorReport r;
  r.sums.assign(g.order(), 0);
  const auto m = static_cast<Label>(g.size());

  std::vector<int> seen(g.size() + 1, 0);
  for (EdgeId id = 0; id < g.size(); ++id) {
    const auto& e = g.edge(id);
    r.sums[e.a.value] = detail::checked_add(r.sums[e.a.value], e.label);
    r.sums[e.b.value] = detail::checked_add(r.sums[e.b.value], e.label);
    if (e.label < 1 || e.label > m) {
      r.label_issues.push_back({id, e.label, LabelIssueKind::OutOfRange});
    } else if (seen[static_cast<std::size_t>(e.label)]++ > 0) {
      r.label_issues.push_back({id, e.label, LabelIssueKind::Duplicate});
    }
  }
  r.bijective = r.label_issues.empty();

  for (EdgeId id = 0; id < g.size(); ++id) {
    const auto& e = g.edge(id);
    if (r.sums[e.a.value] == r.sums[e.b.value]) r.conflicts.push_back({id, r.sums[e.a.value]});
  }
  r.local_antimagic = r.bijective && r.conflicts.empty();

  std::map<Label, std::vector<VertexId>> classes;
  for (std::uint32_t v = 0; v < g.order(); ++v) {
    classes[r.sums[v]].push_back(VertexId{v});
    r.sum_total = detail::checked_add(r.sum_total, r.sums[v]);
  }
  for (auto& [value, members] : classes) r.classes.push_back({value, std::move(members)});
  r.color_count = r.classes.size();
  r.bipartition = is_bipartite(g);
  return r;
}

struct ExpectationCheck {
  bool passed = true;
  std::vector<std::string> diffs;

  void fail(std::string why) {
    passed = false;
    diffs.push_back(std::move(why));
  }
};

/// Compares a graph's induced coloring with a claimed one: the labeling must
/// be local antimagic, claimed values pairwise distinct, and every class must
/// match in value, size and degree. Exact integer match throughout.
inline ExpectationCheck check_expected(const LabeledGraph& g, const ExpectedColors& expected) {
  ExpectationCheck out;
  const ColorReport report = induced_coloring(g);

  for (const auto& issue : report.label_issues) {
    const auto& e = g.edge(issue.edge);
    out.fail("edge " + g.name(e.a) + "-" + g.name(e.b) + " label " + std::to_string(issue.label) +
             (issue.kind == LabelIssueKind::Duplicate ? " is a duplicate" : " is out of range"));
  }
  for (const auto& c : report.conflicts) {
    const auto& e = g.edge(c.edge);
    out.fail("edge " + g.name(e.a) + "-" + g.name(e.b) + " joins two vertices with sum " +
             std::to_string(c.sum));
  }

  for (std::size_t i = 0; i < expected.classes.size(); ++i) {
    for (std::size_t j = i + 1; j < expected.classes.size(); ++j) {
      if (expected.classes[i].value == expected.classes[j].value) {
        out.fail("claimed colors are not distinct: value " +
                 std::to_string(expected.classes[i].value) + " is claimed twice");
      }
    }
  }

  std::size_t covered = 0;
  for (const auto& want : expected.classes) {
    const ColorClass* got = report.find_class(want.value);
    if (got == nullptr) {
      out.fail("color " + std::to_string(want.value) + " does not occur");
      continue;
    }
    covered += got->members.size();
    if (got->members.size() != want.size) {
      out.fail("color " + std::to_string(want.value) + " has " +
               std::to_string(got->members.size()) + " vertices, want " +
               std::to_string(want.size));
    }
    for (VertexId v : got->members) {
      if (g.degree(v) != want.degree) {
        out.fail("vertex " + g.name(v) + " with color " + std::to_string(want.value) +
                 " has degree " + std::to_string(g.degree(v)) + ", want " +
                 std::to_string(want.degree));
        break;
      }
    }
  }
  for (const auto& cls : report.classes) {
    bool claimed = std::any_of(expected.classes.begin(), expected.classes.end(),
                               [&](const ExpectedClass& c) { return c.value == cls.value; });
    if (!claimed) {
      out.fail("unexpected color " + std::to_string(cls.value) + " at vertex " +
               g.name(cls.members.front()));
    }
  }
  if (covered != g.order() && out.passed) {
    out.fail("claimed classes cover " + std::to_string(covered) + " of " +
             std::to_string(g.order()) + " vertices");
  }

  if (expected.at_most) {
    if (report.color_count > expected.claimed_colors) {
      out.fail(std::to_string(report.color_count) + " colors, claimed at most " +
               std::to_string(expected.claimed_colors));
    }
  } else if (report.color_count != expected.claimed_colors) {
    out.fail(std::to_string(report.color_count) + " colors, claimed exactly " +
             std::to_string(expected.claimed_colors));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lower bounds

enum class GateVerdict { ImpossibleByLemma, Inconclusive };

struct GateResult {
  GateVerdict verdict = GateVerdict::Inconclusive;
  std::string reason;
};

/// Decides whether a local antimagic labeling could induce exactly two
/// colors x < y. Such a labeling forces the color classes X, Y to form a
/// bipartition with |X| > |Y| and x|X| = y|Y| = q(q+1)/2, q = size.
inline GateResult two_color_gate(const LabeledGraph& g) {
  const auto q = static_cast<Label>(g.size());
  if (q == 0) return {GateVerdict::Inconclusive, "graph has no edges"};
  auto bp = is_bipartite(g);
  if (!bp) return {GateVerdict::Inconclusive, "graph is not bipartite"};

  for (std::uint32_t v = 0; v < g.order(); ++v) {
    if (g.degree(VertexId{v}) == 0) {
      return {GateVerdict::ImpossibleByLemma,
              "isolated vertex " + g.name(VertexId{v}) + " would carry color 0"};
    }
  }
  if (bp->balanced_components()) {
    return {GateVerdict::ImpossibleByLemma,
            "every component has equal part sizes, so |X| = |Y| for any two-coloring"};
  }

  // Achievable |X| over all side choices per component (subset sum).
  const std::size_t n = g.order();
  std::vector<char> reach(n + 1, 0);
  reach[0] = 1;
  for (auto [a, b] : bp->component_sides) {
    std::vector<char> next(n + 1, 0);
    for (std::size_t t = 0; t <= n; ++t) {
      if (!reach[t]) continue;
      if (t + a <= n) next[t + a] = 1;
      if (t + b <= n) next[t + b] = 1;
    }
    reach.swap(next);
  }
  const Label total = q * (q + 1) / 2;
  for (std::size_t big = 1; big <= n; ++big) {
    const std::size_t small = n - big;
    if (!reach[big] || small == 0 || big <= small) continue;
    const auto X = static_cast<Label>(big);
    const auto Y = static_cast<Label>(small);
    if (total % X == 0 && total % Y == 0) {
      return {GateVerdict::Inconclusive,
              "split |X|=" + std::to_string(big) + ", |Y|=" + std::to_string(small) +
                  " admits x=" + std::to_string(total / X) + ", y=" + std::to_string(total / Y)};
    }
  }
  return {GateVerdict::ImpossibleByLemma,
          "no bipartition split with |X| > |Y| divides q(q+1)/2 = " + std::to_string(total)};
}

/// max(chi(g), 3 if the two-color gate rules out two colors, 2). chi is
/// computed exactly when every component fits the budget; otherwise the
/// bound falls back to 3 for non-bipartite graphs.
inline int lower_bound(const LabeledGraph& g, std::size_t chi_budget = 20) {
  int bound = 2;
  if (two_color_gate(g).verdict == GateVerdict::ImpossibleByLemma) bound = 3;
  try {
    bound = std::max(bound, chromatic_number_small(g, chi_budget));
  } catch (const GraphError& e) {
    if (e.code() != GraphErrc::TooLarge) throw;
    if (!is_bipartite(g)) bound = std::max(bound, 3);
  }
  return bound;
}

}  // namespace lacolor
