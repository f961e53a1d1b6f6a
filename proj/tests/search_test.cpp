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

#include <cstdlib>
#include <random>

#include "lacolor/families.hpp"
#include "lacolor/search.hpp"
#include "lacolor/verifier.hpp"
#include "test_support.hpp"

namespace lacolor {
namespace {

void expect_witness(const LabeledGraph& g, const SearchResult& r) {
  ASSERT_EQ(r.outcome, SearchOutcome::Value);
  const LabeledGraph w = relabel(g, r.witness);
  EXPECT_TRUE(testing::naive_local_antimagic(w));
  EXPECT_EQ(testing::naive_color_count(w), r.colors);
}

// Bipartite, 7 vertices, 8 edges; a 4/3 split is arithmetically possible
// for two colors, and chi is 2.
LabeledGraph unsettled_graph() {
  LabeledGraph g;
  for (int i = 0; i < 7; ++i) g.add_vertex("q" + std::to_string(i));
  const std::pair<std::uint32_t, std::uint32_t> edges[] = {{3, 6}, {0, 1}, {1, 3}, {0, 4},
                                                           {0, 5}, {0, 6}, {2, 5}, {3, 4}};
  const Label labels[] = {2, 1, 8, 3, 5, 7, 4, 6};
  for (std::size_t i = 0; i < 8; ++i) g.add_edge(VertexId{edges[i].first}, VertexId{edges[i].second}, labels[i]);
  return g;
}

TEST(ChiLaExact, SingleEdgeHasNoLabeling) {
  const auto r = chi_la_exact(testing::path(2));
  EXPECT_EQ(r.outcome, SearchOutcome::NoLabelingExists);
}

TEST(ChiLaExact, PathOfThree) {
  const auto g = testing::path(3);
  const auto r = chi_la_exact(g);
  EXPECT_EQ(r.colors, 3u);
  expect_witness(g, r);
}

TEST(ChiLaExact, SingleFan) {
  const auto g = testing::fan_one();
  const auto r = chi_la_exact(g);
  EXPECT_EQ(r.colors, 3u);
  expect_witness(g, r);
  EXPECT_LT(r.stats.elapsed_ms, 1000.0);
}

TEST(ChiLaExact, TwoBladeFan) {
  const auto g = build_fb(1).graph;
  ASSERT_EQ(g.size(), 10u);
  const auto r = chi_la_exact(g);
  EXPECT_EQ(r.colors, 3u);
  expect_witness(g, r);
}

TEST(ChiLaExact, Cycles) {
  for (std::size_t n : {3u, 4u, 5u, 6u, 7u}) {
    const auto g = testing::cycle(n);
    const auto r = chi_la_exact(g);
    EXPECT_EQ(r.colors, 3u) << n;
    EXPECT_EQ(std::optional<std::size_t>(r.colors), testing::naive_chi_la(g)) << n;
  }
}

TEST(ChiLaExact, EdgelessGraphs) {
  const auto r0 = chi_la_exact(LabeledGraph{});
  EXPECT_EQ(r0.outcome, SearchOutcome::Value);
  EXPECT_EQ(r0.colors, 0u);
  const auto r1 = chi_la_exact(new_graph({"a", "b"}));
  EXPECT_EQ(r1.colors, 1u);
}

TEST(ChiLaExact, TooLarge) {
  try {
    chi_la_exact(build_fb_units(2).graph);
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.code(), GraphErrc::TooLarge);
  }
  SearchOptions o;
  o.max_edges = 5;
  EXPECT_THROW(chi_la_exact(testing::path(7), o), GraphError);
}

TEST(ChiLaExact, Timeout) {
  SearchOptions o;
  o.max_edges = 13;
  o.budget = std::chrono::milliseconds(30);
  o.stop_at_lower_bound = false;
  // Takes several hundred milliseconds to settle at 4 colors.
  const auto r = chi_la_exact(disjoint_union(build_fb(1).graph, testing::path(4)), o);
  EXPECT_EQ(r.outcome, SearchOutcome::Timeout);
  EXPECT_EQ(r.budget.count(), 30);
  EXPECT_TRUE(r.witness.empty());
}

TEST(ChiLaExact, BudgetFromEnvironment) {
  ::setenv("LACOLOR_SEARCH_BUDGET_MS", "25", 1);
  SearchOptions o;
  o.max_edges = 13;
  o.stop_at_lower_bound = false;
  const auto r = chi_la_exact(disjoint_union(build_fb(1).graph, testing::path(4)), o);
  ::unsetenv("LACOLOR_SEARCH_BUDGET_MS");
  EXPECT_EQ(r.budget.count(), 25);
}

TEST(ChiLaExact, PrunedAgreesWithNaiveEnumeration) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    const auto g = testing::random_graph(rng, 3 + rng() % 6, 1 + rng() % 8);
    SearchOptions o;
    o.workers = 1 + trial % 3;
    const auto r = chi_la_exact(g, o);
    const auto naive = testing::naive_chi_la(g);
    if (naive) {
      ASSERT_EQ(r.outcome, SearchOutcome::Value) << trial;
      EXPECT_EQ(r.colors, *naive) << trial;
      expect_witness(g, r);
    } else {
      EXPECT_EQ(r.outcome, SearchOutcome::NoLabelingExists) << trial;
    }
  }
}

TEST(ChiLaExact, RegularGraphsAgreeWithNaive) {
  // Exercises the complement symmetry, which is only enabled on regular
  // graphs.
  std::vector<LabeledGraph> regular{testing::cycle(4), testing::cycle(5), testing::cycle(8)};
  LabeledGraph k4 = new_graph({"a", "b", "c", "d"});
  Label l = 1;
  for (const char* a : {"a", "b", "c", "d"}) {
    for (const char* b : {"a", "b", "c", "d"}) {
      if (std::string(a) < b) k4.add_edge(a, b, l++);
    }
  }
  regular.push_back(k4);
  regular.push_back(disjoint_union(testing::cycle(3), testing::cycle(4)));
  for (const auto& g : regular) {
    const auto r = chi_la_exact(g);
    EXPECT_EQ(std::optional<std::size_t>(r.colors), testing::naive_chi_la(g));
    expect_witness(g, r);
  }
}

TEST(ChiLaExact, IndependentOfSeedAndWorkers) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = testing::random_graph(rng, 5 + rng() % 3, 6 + rng() % 4);
    SearchOptions base;
    base.workers = 1;
    const auto ref = chi_la_exact(g, base);
    for (unsigned workers : {1u, 2u, 4u}) {
      for (std::uint64_t seed : {1ull, 99ull}) {
        SearchOptions o;
        o.workers = workers;
        o.order_seed = seed;
        const auto r = chi_la_exact(g, o);
        EXPECT_EQ(r.outcome, ref.outcome);
        EXPECT_EQ(r.colors, ref.colors);
      }
      SearchOptions same = base;
      same.workers = workers;
      EXPECT_EQ(chi_la_exact(g, same).witness, ref.witness) << "witness depends on workers";
    }
  }
}

TEST(ChiLaExact, DisconnectedInputsSearchedWhole) {
  // Two disjoint P_3 share one label range; each alone has chi_la 3.
  const auto g = disjoint_union(testing::path(3), testing::path(3));
  const auto r = chi_la_exact(g);
  EXPECT_EQ(std::optional<std::size_t>(r.colors), testing::naive_chi_la(g));
}

TEST(ConfirmThree, FanOfTwo) {
  EXPECT_EQ(confirm_three(build_fb(1).graph), ThreeVerdict::Confirmed3);
}

TEST(ConfirmThree, DiamondFanViaGate) {
  const auto g = build_rdf(1, 2).graph;
  EXPECT_EQ(chromatic_number_small(g), 2);
  EXPECT_EQ(confirm_three(g), ThreeVerdict::Confirmed3);
}

TEST(ConfirmThree, NoLowerBoundSource) {
  const auto g = unsettled_graph();
  ASSERT_EQ(induced_coloring(g).color_count, 3u);
  ASSERT_TRUE(is_bipartite(g).has_value());
  EXPECT_EQ(two_color_gate(g).verdict, GateVerdict::Inconclusive);
  EXPECT_EQ(confirm_three(g), ThreeVerdict::OnlyUpperBound);
}

TEST(ConfirmThree, RejectsBadWitness) {
  EXPECT_THROW(confirm_three(build_c8_units(4).graph), std::invalid_argument);
  EXPECT_THROW(confirm_three(testing::path(2)), std::invalid_argument);
}

}  // namespace
}  // namespace lacolor
