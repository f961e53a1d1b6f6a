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

/// \file graph.hpp
///
/// Simple undirected graphs carrying an edge labeling, plus the vertex
/// merge / split engine that every family builder is expressed in.
///
/// Edges are addressed by a stable EdgeId (their index in the edge list).
/// Merges and splits never reorder edges, so a labeling attached at
/// construction time survives every later transformation.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace lacolor {

using Label = std::int64_t;
using EdgeId = std::size_t;

struct VertexId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

enum class GraphErrc {
  DuplicateName,
  UnknownVertex,
  Loop,
  ParallelEdge,
  NonPositiveLabel,
  LoopCreated,
  ParallelEdgeCreated,
  InvalidPlan,
  NotAPartition,
  TooLarge,
};

inline std::string_view to_string(GraphErrc code) {
  switch (code) {
    case GraphErrc::DuplicateName: return "DuplicateName";
    case GraphErrc::UnknownVertex: return "UnknownVertex";
    case GraphErrc::Loop: return "Loop";
    case GraphErrc::ParallelEdge: return "ParallelEdge";
    case GraphErrc::NonPositiveLabel: return "NonPositiveLabel";
    case GraphErrc::LoopCreated: return "LoopCreated";
    case GraphErrc::ParallelEdgeCreated: return "ParallelEdgeCreated";
    case GraphErrc::InvalidPlan: return "InvalidPlan";
    case GraphErrc::NotAPartition: return "NotAPartition";
    case GraphErrc::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

class GraphError : public std::runtime_error {
 public:
  GraphError(GraphErrc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  GraphErrc code() const noexcept { return code_; }

 private:
  GraphErrc code_;
};

/// Display names follow the (role, copy, position) convention: "x", "u_3",
/// "u_{3,4}".
inline std::string vertex_name(std::string_view role) { return std::string(role); }

inline std::string vertex_name(std::string_view role, long index) {
  return std::string(role) + "_" + std::to_string(index);
}

inline std::string vertex_name(std::string_view role, long copy, long position) {
  return std::string(role) + "_{" + std::to_string(copy) + "," +
         std::to_string(position) + "}";
}

struct LabeledEdge {
  VertexId a;
  VertexId b;
  Label label = 0;

  bool touches(VertexId v) const { return a == v || b == v; }
  VertexId other(VertexId v) const { return a == v ? b : a; }
};

class LabeledGraph {
 public:
  LabeledGraph() = default;

  explicit LabeledGraph(std::span<const std::string> names) {
    for (const auto& n : names) add_vertex(n);
  }

  VertexId add_vertex(std::string name) {
    VertexId id{static_cast<std::uint32_t>(names_.size())};
    auto [it, inserted] = index_.emplace(name, id);
    if (!inserted) throw GraphError(GraphErrc::DuplicateName, "vertex '" + name + "'");
    names_.push_back(std::move(name));
    incident_.emplace_back();
    return id;
  }

  EdgeId add_edge(VertexId a, VertexId b, Label label) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw GraphError(GraphErrc::Loop, "at vertex '" + name(a) + "'");
    if (label <= 0) {
      throw GraphError(GraphErrc::NonPositiveLabel,
                       "edge " + name(a) + "-" + name(b) + " label " + std::to_string(label));
    }
    if (!keys_.insert(key(a, b)).second) {
      throw GraphError(GraphErrc::ParallelEdge, "edge " + name(a) + "-" + name(b));
    }
    EdgeId id = edges_.size();
    edges_.push_back({a, b, label});
    incident_[a.value].push_back(id);
    incident_[b.value].push_back(id);
    return id;
  }

  EdgeId add_edge(std::string_view a, std::string_view b, Label label) {
    return add_edge(at(a), at(b), label);
  }

  std::size_t order() const noexcept { return names_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::string& name(VertexId v) const { return names_.at(v.value); }

  std::optional<VertexId> find(std::string_view n) const {
    auto it = index_.find(n);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  VertexId at(std::string_view n) const {
    if (auto v = find(n)) return *v;
    throw GraphError(GraphErrc::UnknownVertex, "'" + std::string(n) + "'");
  }

  const LabeledEdge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const LabeledEdge> edges() const noexcept { return edges_; }

  std::span<const EdgeId> incident(VertexId v) const { return incident_.at(v.value); }
  std::size_t degree(VertexId v) const { return incident_.at(v.value).size(); }

  bool adjacent(VertexId a, VertexId b) const { return keys_.contains(key(a, b)); }

  std::optional<EdgeId> edge_between(VertexId a, VertexId b) const {
    if (!adjacent(a, b)) return std::nullopt;
    for (EdgeId e : incident(a)) {
      if (edges_[e].other(a) == b) return e;
    }
    return std::nullopt;
  }

  std::vector<VertexId> neighbors(VertexId v) const {
    std::vector<VertexId> out;
    out.reserve(degree(v));
    for (EdgeId e : incident(v)) out.push_back(edges_[e].other(v));
    return out;
  }

  /// Replaces the label of one edge. Used by tests and search witnesses; does
  /// not check that the labeling stays bijective.
  void set_label(EdgeId e, Label label) {
    if (label <= 0) {
      throw GraphError(GraphErrc::NonPositiveLabel, "label " + std::to_string(label));
    }
    edges_.at(e).label = label;
  }

  std::vector<Label> labels() const {
    std::vector<Label> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back(e.label);
    return out;
  }

 private:
  static std::uint64_t key(VertexId a, VertexId b) {
    auto lo = std::min(a.value, b.value);
    auto hi = std::max(a.value, b.value);
    return (static_cast<std::uint64_t>(lo) << 32) | hi;
  }

  void check_vertex(VertexId v) const {
    if (v.value >= names_.size()) {
      throw GraphError(GraphErrc::UnknownVertex, "id " + std::to_string(v.value));
    }
  }

  std::vector<std::string> names_;
  std::map<std::string, VertexId, std::less<>> index_;
  std::vector<LabeledEdge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
  std::unordered_set<std::uint64_t> keys_;
};

inline LabeledGraph new_graph(std::span<const std::string> names) {
  return LabeledGraph(names);
}

inline LabeledGraph new_graph(std::initializer_list<std::string> names) {
  return LabeledGraph(std::span<const std::string>(names.begin(), names.size()));
}

inline LabeledGraph add_edge(LabeledGraph g, VertexId a, VertexId b, Label label) {
  g.add_edge(a, b, label);
  return g;
}

// ---------------------------------------------------------------------------
// Merge / split / union

struct MergeGroup {
  std::vector<VertexId> members;
  std::string name;  // display name of the fused vertex
};

struct MergePlan {
  std::vector<MergeGroup> groups;

  MergePlan& add(std::vector<VertexId> members, std::string name) {
    groups.push_back({std::move(members), std::move(name)});
    return *this;
  }
};

/// Fuses each group of the plan into a single vertex. Surviving vertices keep
/// their relative order; a fused vertex takes the position of its smallest
/// member. Edges keep their ids and labels.
inline LabeledGraph apply_merge(const LabeledGraph& g, const MergePlan& plan) {
  const std::size_t n = g.order();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> group_of(n, kNone);

  for (std::size_t gi = 0; gi < plan.groups.size(); ++gi) {
    const auto& group = plan.groups[gi];
    if (group.members.size() < 2) {
      throw GraphError(GraphErrc::InvalidPlan,
                       "group '" + group.name + "' has fewer than two members");
    }
    for (VertexId v : group.members) {
      if (v.value >= n) {
        throw GraphError(GraphErrc::InvalidPlan, "group '" + group.name + "' names unknown vertex");
      }
      if (group_of[v.value] != kNone) {
        throw GraphError(GraphErrc::InvalidPlan,
                         "vertex '" + g.name(v) + "' appears in two groups");
      }
      group_of[v.value] = gi;
    }
  }

  LabeledGraph out;
  std::vector<VertexId> image(n);
  std::vector<bool> emitted(plan.groups.size(), false);
  for (std::uint32_t i = 0; i < n; ++i) {
    VertexId v{i};
    std::size_t gi = group_of[i];
    if (gi == kNone) {
      image[i] = out.add_vertex(g.name(v));
    } else if (!emitted[gi]) {
      emitted[gi] = true;
      VertexId fused = out.add_vertex(plan.groups[gi].name);
      for (VertexId m : plan.groups[gi].members) image[m.value] = fused;
    }
  }

  for (const auto& e : g.edges()) {
    VertexId a = image[e.a.value];
    VertexId b = image[e.b.value];
    if (a == b) {
      throw GraphError(GraphErrc::LoopCreated, "edge " + g.name(e.a) + "-" + g.name(e.b) +
                                                   " lies inside group '" + out.name(a) + "'");
    }
    if (out.adjacent(a, b)) {
      throw GraphError(GraphErrc::ParallelEdgeCreated,
                       "'" + out.name(a) + "' and '" + out.name(b) + "' would be joined twice");
    }
    out.add_edge(a, b, e.label);
  }
  return out;
}

/// Replaces v by two vertices: the first keeps v's position and carries the
/// edges of `first`, the second is appended and carries `second`.
inline LabeledGraph split_vertex(const LabeledGraph& g, VertexId v,
                                 std::span<const EdgeId> first,
                                 std::span<const EdgeId> second,
                                 std::string first_name, std::string second_name) {
  if (v.value >= g.order()) throw GraphError(GraphErrc::UnknownVertex, "split target");
  std::vector<EdgeId> want(g.incident(v).begin(), g.incident(v).end());
  std::vector<EdgeId> got(first.begin(), first.end());
  got.insert(got.end(), second.begin(), second.end());
  std::sort(want.begin(), want.end());
  std::sort(got.begin(), got.end());
  if (want != got) {
    throw GraphError(GraphErrc::NotAPartition,
                     "blocks do not partition the edges at '" + g.name(v) + "'");
  }

  LabeledGraph out;
  for (std::uint32_t i = 0; i < g.order(); ++i) {
    out.add_vertex(i == v.value ? first_name : g.name(VertexId{i}));
  }
  VertexId v2 = out.add_vertex(std::move(second_name));
  std::vector<bool> to_second(g.size(), false);
  for (EdgeId e : second) to_second[e] = true;

  for (EdgeId id = 0; id < g.size(); ++id) {
    const auto& e = g.edge(id);
    VertexId a = e.a;
    VertexId b = e.b;
    if (to_second[id]) {
      if (a == v) a = v2;
      if (b == v) b = v2;
    }
    out.add_edge(a, b, e.label);
  }
  return out;
}

/// Disjoint union; vertex names are namespaced by component index
/// ("0:name", "1:name"). Labels are copied verbatim.
inline LabeledGraph disjoint_union(const LabeledGraph& g1, const LabeledGraph& g2) {
  LabeledGraph out;
  const std::uint32_t shift = static_cast<std::uint32_t>(g1.order());
  for (std::uint32_t i = 0; i < g1.order(); ++i) out.add_vertex("0:" + g1.name(VertexId{i}));
  for (std::uint32_t i = 0; i < g2.order(); ++i) out.add_vertex("1:" + g2.name(VertexId{i}));
  for (const auto& e : g1.edges()) out.add_edge(e.a, e.b, e.label);
  for (const auto& e : g2.edges()) {
    out.add_edge(VertexId{e.a.value + shift}, VertexId{e.b.value + shift}, e.label);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Structure queries

inline std::vector<std::size_t> degrees(const LabeledGraph& g) {
  std::vector<std::size_t> out(g.order());
  for (std::uint32_t i = 0; i < g.order(); ++i) out[i] = g.degree(VertexId{i});
  return out;
}

/// Component index per vertex; components are numbered in order of their
/// smallest vertex.
inline std::vector<std::size_t> component_index(const LabeledGraph& g) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(g.order(), kNone);
  std::size_t next = 0;
  for (std::uint32_t s = 0; s < g.order(); ++s) {
    if (comp[s] != kNone) continue;
    std::queue<VertexId> q;
    q.push(VertexId{s});
    comp[s] = next;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (VertexId w : g.neighbors(v)) {
        if (comp[w.value] == kNone) {
          comp[w.value] = next;
          q.push(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

inline std::vector<std::vector<VertexId>> connected_components(const LabeledGraph& g) {
  auto comp = component_index(g);
  std::size_t count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<VertexId>> out(count);
  for (std::uint32_t i = 0; i < g.order(); ++i) out[comp[i]].push_back(VertexId{i});
  return out;
}

struct Bipartition {
  std::vector<int> side;  // 0 or 1 per vertex; each component's smallest vertex gets 0
  std::vector<std::pair<std::size_t, std::size_t>> component_sides;
  std::size_t left = 0;
  std::size_t right = 0;

  bool balanced_components() const {
    return std::all_of(component_sides.begin(), component_sides.end(),
                       [](const auto& p) { return p.first == p.second; });
  }
};

inline std::optional<Bipartition> is_bipartite(const LabeledGraph& g) {
  Bipartition bp;
  bp.side.assign(g.order(), -1);
  for (std::uint32_t s = 0; s < g.order(); ++s) {
    if (bp.side[s] != -1) continue;
    std::pair<std::size_t, std::size_t> sizes{0, 0};
    std::queue<VertexId> q;
    q.push(VertexId{s});
    bp.side[s] = 0;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      (bp.side[v.value] == 0 ? sizes.first : sizes.second)++;
      for (VertexId w : g.neighbors(v)) {
        if (bp.side[w.value] == -1) {
          bp.side[w.value] = 1 - bp.side[v.value];
          q.push(w);
        } else if (bp.side[w.value] == bp.side[v.value]) {
          return std::nullopt;
        }
      }
    }
    bp.component_sides.push_back(sizes);
    bp.left += sizes.first;
    bp.right += sizes.second;
  }
  return bp;
}

namespace detail {

// Backtracking c-colorability of one component, vertices pre-ordered.
inline bool colorable(const LabeledGraph& g, const std::vector<VertexId>& order,
                      const std::vector<std::size_t>& pos, std::vector<int>& color,
                      std::size_t i, int colors, int used) {
  if (i == order.size()) return true;
  VertexId v = order[i];
  int limit = std::min(colors, used + 1);
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (VertexId w : g.neighbors(v)) {
      if (pos[w.value] < i && color[w.value] == c) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    color[v.value] = c;
    if (colorable(g, order, pos, color, i + 1, colors, std::max(used, c + 1))) return true;
  }
  color[v.value] = -1;
  return false;
}

}  // namespace detail

/// Exact chromatic number by backtracking, component by component. Every
/// component must have at most `budget` vertices.
inline int chromatic_number_small(const LabeledGraph& g, std::size_t budget = 20) {
  int chi = 0;
  std::vector<std::size_t> pos(g.order(), 0);
  std::vector<int> color(g.order(), -1);
  for (const auto& comp : connected_components(g)) {
    if (comp.size() > budget) {
      throw GraphError(GraphErrc::TooLarge, "component of " + std::to_string(comp.size()) +
                                                " vertices exceeds budget " +
                                                std::to_string(budget));
    }
    // BFS order keeps each vertex adjacent to an earlier one.
    std::vector<VertexId> order;
    std::vector<bool> seen(g.order(), false);
    std::queue<VertexId> q;
    q.push(comp.front());
    seen[comp.front().value] = true;
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      order.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        if (!seen[w.value]) {
          seen[w.value] = true;
          q.push(w);
        }
      }
    }
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i].value] = i;
    int c = 1;
    while (!detail::colorable(g, order, pos, color, 0, c, 0)) ++c;
    chi = std::max(chi, c);
  }
  return chi;
}

}  // namespace lacolor
