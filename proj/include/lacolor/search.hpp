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

/// \file search.hpp
///
/// Exhaustive search for the local antimagic chromatic number of small
/// graphs.
///
/// Labels are assigned edge by edge in an order that completes vertices
/// early. A branch dies as soon as two adjacent completed vertices share a
/// sum, or once its completed vertices already use as many colors as the
/// best labeling found so far. The first edge's label splits the search
/// into independent subtrees that worker threads pick up in order.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "lacolor/graph.hpp"
#include "lacolor/verifier.hpp"

namespace lacolor {

enum class SearchOutcome { Value, NoLabelingExists, Timeout };

inline std::string_view to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Value: return "Value";
    case SearchOutcome::NoLabelingExists: return "NoLabelingExists";
    case SearchOutcome::Timeout: return "Timeout";
  }
  return "?";
}

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t conflict_prunes = 0;
  std::uint64_t bound_prunes = 0;
  double elapsed_ms = 0;
};

struct SearchOptions {
  std::size_t max_edges = 11;
  std::chrono::milliseconds budget{0};  // 0: LACOLOR_SEARCH_BUDGET_MS, else unlimited
  unsigned workers = 0;                 // 0: hardware concurrency
  std::optional<std::uint64_t> order_seed;
  bool stop_at_lower_bound = true;
};

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::NoLabelingExists;
  std::size_t colors = 0;              // Value only
  std::vector<Label> witness;          // Value only: label per edge id
  std::optional<std::size_t> best_so_far;  // Timeout only
  std::chrono::milliseconds budget{0};
  SearchStats stats;
};

namespace detail {

inline std::chrono::milliseconds default_budget() {
  if (const char* env = std::getenv("LACOLOR_SEARCH_BUDGET_MS")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return std::chrono::milliseconds(v);
  }
  return std::chrono::milliseconds(0);
}

inline bool is_regular(const LabeledGraph& g) {
  if (g.order() == 0) return true;
  const std::size_t d = g.degree(VertexId{0});
  for (std::uint32_t v = 1; v < g.order(); ++v) {
    if (g.degree(VertexId{v}) != d) return false;
  }
  return true;
}

/// Edge order that finishes vertices as early as possible: repeatedly take
/// the edge whose endpoints have the fewest unassigned edges left.
inline std::vector<EdgeId> completion_order(const LabeledGraph& g,
                                            std::optional<std::uint64_t> seed) {
  std::vector<EdgeId> pool(g.size());
  std::iota(pool.begin(), pool.end(), EdgeId{0});
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(pool.begin(), pool.end(), rng);
  }
  std::vector<std::size_t> left(g.order());
  for (std::uint32_t v = 0; v < g.order(); ++v) left[v] = g.degree(VertexId{v});
  std::vector<EdgeId> order;
  while (!pool.empty()) {
    auto score = [&](EdgeId id) {
      const auto& e = g.edge(id);
      return std::min(left[e.a.value], left[e.b.value]) * 64 +
             std::max(left[e.a.value], left[e.b.value]);
    };
    auto best = std::min_element(pool.begin(), pool.end(),
                                 [&](EdgeId x, EdgeId y) { return score(x) < score(y); });
    const auto& e = g.edge(*best);
    --left[e.a.value];
    --left[e.b.value];
    order.push_back(*best);
    pool.erase(best);
  }
  return order;
}

struct Shared {
  std::atomic<std::size_t> best{SIZE_MAX};
  std::atomic<bool> timed_out{false};
  std::chrono::steady_clock::time_point deadline;
  bool has_deadline = false;
};

/// Depth-first search of one subtree (first edge fixed to `first_label`).
class SubtreeSearch {
 public:
  SubtreeSearch(const LabeledGraph& g, const std::vector<EdgeId>& order, std::size_t lower_bound,
                Shared& shared)
      : g_(g), order_(order), lb_(lower_bound), shared_(shared), m_(g.size()) {
    sums_.assign(g.order(), 0);
    left_.resize(g.order());
    for (std::uint32_t v = 0; v < g.order(); ++v) left_[v] = g.degree(VertexId{v});
    used_.assign(m_ + 2, 0);
    labels_.assign(m_, 0);
    const Label cap = static_cast<Label>(m_) * static_cast<Label>(m_ + 1) / 2;
    counts_.assign(static_cast<std::size_t>(cap) + 1, 0);
    // Vertices without edges are complete from the start and carry 0.
    for (std::uint32_t v = 0; v < g.order(); ++v) {
      if (left_[v] == 0 && counts_[0]++ == 0) ++distinct_;
    }
  }

  void run(Label first_label) {
    if (m_ == 0) {
      record();
      return;
    }
    if (assign(0, first_label)) descend(1);
    unassign(0, first_label);
  }

  std::size_t best = SIZE_MAX;
  std::vector<Label> witness;
  SearchStats stats;

 private:
  bool stop() const { return stopped_; }

  void tick() {
    ++stats.nodes;
    if ((stats.nodes & 4095) == 0 && shared_.has_deadline) {
      if (shared_.timed_out.load(std::memory_order_relaxed) ||
          std::chrono::steady_clock::now() >= shared_.deadline) {
        shared_.timed_out = true;
        stopped_ = true;
      }
    }
  }

  // Adds the label and returns false when a completed vertex collides with
  // a completed neighbor.
  bool assign(std::size_t depth, Label l) {
    tick();
    const EdgeId id = order_[depth];
    const auto& e = g_.edge(id);
    labels_[id] = l;
    used_[static_cast<std::size_t>(l)] = 1;
    bool ok = true;
    for (VertexId v : {e.a, e.b}) {
      sums_[v.value] += l;
      if (--left_[v.value] == 0) {
        if (counts_[static_cast<std::size_t>(sums_[v.value])]++ == 0) ++distinct_;
      }
    }
    for (VertexId v : {e.a, e.b}) {
      if (left_[v.value] != 0) continue;
      for (EdgeId inc : g_.incident(v)) {
        VertexId w = g_.edge(inc).other(v);
        if (left_[w.value] == 0 && sums_[w.value] == sums_[v.value]) ok = false;
      }
    }
    if (!ok) ++stats.conflict_prunes;
    return ok;
  }

  void unassign(std::size_t depth, Label l) {
    const EdgeId id = order_[depth];
    const auto& e = g_.edge(id);
    for (VertexId v : {e.a, e.b}) {
      if (left_[v.value]++ == 0) {
        if (--counts_[static_cast<std::size_t>(sums_[v.value])] == 0) --distinct_;
      }
      sums_[v.value] -= l;
    }
    used_[static_cast<std::size_t>(l)] = 0;
    labels_[id] = 0;
  }

  bool over_bound() const {
    const std::size_t global = shared_.best.load(std::memory_order_relaxed);
    return distinct_ >= best || distinct_ > global;
  }

  void descend(std::size_t depth) {
    if (stop()) return;
    if (over_bound()) {
      ++stats.bound_prunes;
      return;
    }
    if (depth == m_) {
      record();
      return;
    }
    for (Label l = 1; l <= static_cast<Label>(m_) && !stop(); ++l) {
      if (used_[static_cast<std::size_t>(l)]) continue;
      if (assign(depth, l)) descend(depth + 1);
      unassign(depth, l);
    }
  }

  void record() {
    ++stats.leaves;
    if (distinct_ >= best) return;
    best = distinct_;
    witness = labels_;
    std::size_t cur = shared_.best.load();
    while (best < cur && !shared_.best.compare_exchange_weak(cur, best)) {
    }
    if (best <= lb_) stopped_ = true;
  }

  const LabeledGraph& g_;
  const std::vector<EdgeId>& order_;
  std::size_t lb_;
  Shared& shared_;
  std::size_t m_;
  std::vector<Label> sums_;
  std::vector<std::size_t> left_;
  std::vector<char> used_;
  std::vector<Label> labels_;
  std::vector<std::uint32_t> counts_;
  std::size_t distinct_ = 0;
  bool stopped_ = false;
};

}  // namespace detail

/// Minimum number of colors over all local antimagic labelings of g (its
/// own labels are ignored). Throws GraphError(TooLarge) when g has more than
/// options.max_edges edges.
///
/// The witness is deterministic: among labelings achieving the minimum it
/// is the first found in the lowest first-label subtree, independent of the
/// worker count.
inline SearchResult chi_la_exact(const LabeledGraph& g, SearchOptions options = {}) {
  const auto start = std::chrono::steady_clock::now();
  if (g.size() > options.max_edges) {
    throw GraphError(GraphErrc::TooLarge, std::to_string(g.size()) + " edges exceed the limit of " +
                                              std::to_string(options.max_edges));
  }
  SearchResult result;
  result.budget = options.budget.count() > 0 ? options.budget : detail::default_budget();

  detail::Shared shared;
  if (result.budget.count() > 0) {
    shared.has_deadline = true;
    shared.deadline = start + result.budget;
  }
  std::size_t lb = 0;
  if (options.stop_at_lower_bound) {
    try {
      lb = static_cast<std::size_t>(lower_bound(g));
    } catch (const GraphError&) {
      lb = 0;
    }
    if (g.size() == 0) lb = 0;
  }

  const auto order = detail::completion_order(g, options.order_seed);
  const auto m = static_cast<Label>(g.size());
  // l -> m+1-l maps sums s to d(m+1)-s, which keeps every coloring intact
  // only when all degrees agree.
  const Label first_max = m == 0 ? 1 : detail::is_regular(g) ? (m + 1) / 2 : m;

  std::vector<detail::SubtreeSearch> subtrees;
  subtrees.reserve(static_cast<std::size_t>(first_max));
  for (Label l = 1; l <= first_max; ++l) subtrees.emplace_back(g, order, lb, shared);

  unsigned workers = options.workers ? options.workers : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(first_max));
  std::atomic<Label> next{1};
  auto work = [&] {
    for (Label l = next++; l <= first_max; l = next++) {
      subtrees[static_cast<std::size_t>(l - 1)].run(l);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::size_t best = SIZE_MAX;
  const std::vector<Label>* witness = nullptr;
  for (const auto& s : subtrees) {
    result.stats.nodes += s.stats.nodes;
    result.stats.leaves += s.stats.leaves;
    result.stats.conflict_prunes += s.stats.conflict_prunes;
    result.stats.bound_prunes += s.stats.bound_prunes;
    if (s.best < best) {
      best = s.best;
      witness = &s.witness;
    }
  }
  result.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (shared.timed_out) {
    result.outcome = SearchOutcome::Timeout;
    if (best != SIZE_MAX) result.best_so_far = best;
    return result;
  }
  if (witness == nullptr) {
    result.outcome = SearchOutcome::NoLabelingExists;
    return result;
  }
  result.outcome = SearchOutcome::Value;
  result.colors = best;
  result.witness = *witness;
  return result;
}

/// g with its labels replaced by `labels` (indexed by edge id).
inline LabeledGraph relabel(LabeledGraph g, const std::vector<Label>& labels) {
  for (EdgeId id = 0; id < g.size() && id < labels.size(); ++id) g.set_label(id, labels[id]);
  return g;
}

enum class ThreeVerdict { Confirmed3, OnlyUpperBound };

inline std::string_view to_string(ThreeVerdict v) {
  return v == ThreeVerdict::Confirmed3 ? "Confirmed3" : "OnlyUpperBound";
}

/// Confirms chi_la(g) = 3 from a 3-color witness labeling and a lower bound
/// of 3 from chi or the two-color gate. Throws std::invalid_argument when the
/// witness is not a local antimagic labeling with exactly 3 colors.
inline ThreeVerdict confirm_three(const LabeledGraph& witness, std::size_t chi_budget = 20) {
  const ColorReport report = induced_coloring(witness);
  if (!report.local_antimagic || report.color_count != 3) {
    throw std::invalid_argument("witness is not a local antimagic labeling with 3 colors");
  }
  return lower_bound(witness, chi_budget) >= 3 ? ThreeVerdict::Confirmed3
                                               : ThreeVerdict::OnlyUpperBound;
}

}  // namespace lacolor
