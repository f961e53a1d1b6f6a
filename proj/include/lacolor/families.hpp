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

/// \file families.hpp
///
/// Labeled graph families built from the label matrices.
///
/// Every builder starts from disjoint labeled units (fan units FB(1),
/// prism units C_4(8,2), or 8-cycle units C_8 with a pendant path) and then
/// fuses vertices with apply_merge / split_vertex. Labels are attached once,
/// when the units are created, and are never touched again.
///
/// Each builder also returns the coloring its construction is expected to
/// induce (ExpectedColors). Those values come from additivity of the unit
/// sums; the verifier checks them against the edge list.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lacolor/expected_colors.hpp"
#include "lacolor/graph.hpp"
#include "lacolor/matrix.hpp"

namespace lacolor {

enum class Family {
  FBUnits, FB, RFB, FB1, FB2, RDF, DFr, DF1, DF2, DF3, DF4,
  NC482, G1, G2, H1, H2, H3, HmRS,
  C8Units, Bk, KC82, KD82, RG82, OddKH,
};

inline constexpr std::array kAllFamilies{
    Family::FBUnits, Family::FB,  Family::RFB, Family::FB1,   Family::FB2, Family::RDF,
    Family::DFr,     Family::DF1, Family::DF2, Family::DF3,   Family::DF4, Family::NC482,
    Family::G1,      Family::G2,  Family::H1,  Family::H2,    Family::H3,  Family::HmRS,
    Family::C8Units, Family::Bk,  Family::KC82, Family::KD82, Family::RG82, Family::OddKH,
};

inline std::string_view family_tag(Family f) {
  switch (f) {
    case Family::FBUnits: return "FB_units";
    case Family::FB: return "FB";
    case Family::RFB: return "rFB";
    case Family::FB1: return "FB1";
    case Family::FB2: return "FB2";
    case Family::RDF: return "rDF";
    case Family::DFr: return "DFr";
    case Family::DF1: return "DF1";
    case Family::DF2: return "DF2";
    case Family::DF3: return "DF3";
    case Family::DF4: return "DF4";
    case Family::NC482: return "nC482";
    case Family::G1: return "G1";
    case Family::G2: return "G2";
    case Family::H1: return "H1";
    case Family::H2: return "H2";
    case Family::H3: return "H3";
    case Family::HmRS: return "Hm_rs";
    case Family::C8Units: return "C8_units";
    case Family::Bk: return "Bk";
    case Family::KC82: return "kC82";
    case Family::KD82: return "kD82";
    case Family::RG82: return "rG82";
    case Family::OddKH: return "OddKH";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view tag) {
  for (Family f : kAllFamilies) {
    if (family_tag(f) == tag) return f;
  }
  return std::nullopt;
}

/// Parameters a family reads; unused ones stay 0.
struct FamilyParams {
  int k = 0;
  int n = 0;
  int r = 0;
  int s = 0;
  int m = 0;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

struct FamilySpec {
  Family family = Family::FB;
  FamilyParams params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Which parameters each family takes, in CLI order.
inline std::vector<std::string_view> family_parameters(Family f) {
  switch (f) {
    case Family::FBUnits: case Family::FB: case Family::C8Units: case Family::Bk:
    case Family::KC82: case Family::KD82:
      return {"k"};
    case Family::NC482: case Family::H1: case Family::H2: case Family::H3:
      return {"n"};
    case Family::HmRS:
      return {"m", "r", "s"};
    default:
      return {"r", "s"};
  }
}

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value printed for a construction that disagrees with what additivity
/// of the unit sums gives. The verified value is the one built into
/// ExpectedColors.
struct Discrepancy {
  std::string quantity;
  std::string printed_formula;
  Label printed_value = 0;
  std::string verified_formula;
  Label verified_value = 0;
};

struct FamilyBuild {
  FamilySpec spec;
  LabeledGraph graph;
  ExpectedColors expected;
  std::vector<std::string> warnings;
  std::vector<Discrepancy> discrepancies;
  bool experimental = false;
  std::optional<ExpectedColors> printed_claim;  // OddKH: the coloring as printed
};

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw ParameterError(what);
}

inline std::string ks(long v) { return std::to_string(v); }

// --- fan units -------------------------------------------------------------

// Edge ids of fan unit i (1-based) in a graph built by fan_units().
struct FanUnitEdges {
  EdgeId uw, vw, xw, xu, xv;
};

inline FanUnitEdges fan_edges(std::size_t i) {
  const EdgeId b = 5 * (i - 1);
  return {b, b + 1, b + 2, b + 3, b + 4};
}

/// 2k disjoint FB(1) units labeled column-wise by matrix_5x2k(k).
inline LabeledGraph fan_units(int k) {
  const LabelMatrix mat = matrix_5x2k(k);
  LabeledGraph g;
  for (std::size_t i = 1; i <= mat.cols; ++i) {
    const long li = static_cast<long>(i);
    VertexId u = g.add_vertex(vertex_name("u", li));
    VertexId v = g.add_vertex(vertex_name("v", li));
    VertexId w = g.add_vertex(vertex_name("w", li));
    VertexId x = g.add_vertex(vertex_name("x", li));
    g.add_edge(u, w, mat(1, i));
    g.add_edge(v, w, mat(2, i));
    g.add_edge(x, w, mat(3, i));
    g.add_edge(x, u, mat(4, i));
    g.add_edge(x, v, mat(5, i));
  }
  return g;
}

inline std::vector<VertexId> lookup(const LabeledGraph& g, const std::vector<std::string>& names) {
  std::vector<VertexId> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(g.at(n));
  return out;
}

/// Units forming the j-th FB(s) hub of rFB(s): x_{(j-1)s/2+a} and their
/// mirrors x_{2k-(j-1)s/2+1-a}, a = 1..s/2, in that order.
inline std::vector<long> rfb_units(long k, long s, long j) {
  std::vector<long> out;
  for (long a = 1; a <= s / 2; ++a) out.push_back((j - 1) * s / 2 + a);
  for (long a = 1; a <= s / 2; ++a) out.push_back(2 * k - (j - 1) * s / 2 + 1 - a);
  return out;
}

inline LabeledGraph merge_rfb(const LabeledGraph& units, long k, long r, long s) {
  MergePlan plan;
  for (long j = 1; j <= r; ++j) {
    std::vector<std::string> members;
    for (long i : rfb_units(k, s, j)) members.push_back(vertex_name("x", i));
    plan.add(lookup(units, members), vertex_name("x", j));
  }
  return apply_merge(units, plan);
}

/// Diamond-fan hubs over `blocks` blocks of s fan units. Block j pairs with
/// block blocks+1-j for j = 1..pairs; y_j takes the w-side of block j and
/// the u,v-side of its partner, z_j the opposite sides. Units of blocks not
/// in a pair are left untouched.
inline LabeledGraph diamond_fans(LabeledGraph g, long blocks, long s, long pairs) {
  const long partner_first = blocks - pairs + 1;
  for (long j = 1; j <= blocks; ++j) {
    if (j > pairs && j < partner_first) continue;
    for (long a = 1; a <= s; ++a) {
      const long i = (j - 1) * s + a;
      const auto e = fan_edges(static_cast<std::size_t>(i));
      const std::array<EdgeId, 1> to_w{e.xw};
      const std::array<EdgeId, 2> to_uv{e.xu, e.xv};
      g = split_vertex(g, g.at(vertex_name("x", i)), to_w, to_uv,
                       vertex_name("x^1", i), vertex_name("x^2", i));
    }
  }
  MergePlan plan;
  for (long j = 1; j <= pairs; ++j) {
    std::vector<std::string> y, z;
    for (long a = 1; a <= s; ++a) {
      const long mine = (j - 1) * s + a;
      const long theirs = (blocks - j) * s + a;
      y.push_back(vertex_name("x^1", mine));
      y.push_back(vertex_name("x^2", theirs));
      z.push_back(vertex_name("x^2", mine));
      z.push_back(vertex_name("x^1", theirs));
    }
    plan.add(lookup(g, y), vertex_name("y", j));
    plan.add(lookup(g, z), vertex_name("z", j));
  }
  return apply_merge(g, plan);
}

// --- prism units -----------------------------------------------------------

/// n disjoint C_4(8,2) units; copy a takes its u-cycle and rungs from T_a
/// and its v-cycle from T_{n+a}.
inline LabeledGraph prism_units(int n) {
  const auto seqs = sequences_6x4n(n);
  constexpr std::array<int, 8> cycle_terms{1, 3, 4, 6, 7, 9, 10, 12};
  constexpr std::array<int, 4> rung_terms{2, 5, 8, 11};
  LabeledGraph g;
  for (long a = 1; a <= n; ++a) {
    for (long i = 1; i <= 8; ++i) g.add_vertex(vertex_name("u", a, i));
    for (long i = 1; i <= 8; ++i) g.add_vertex(vertex_name("v", a, i));
  }
  for (long a = 1; a <= n; ++a) {
    const Sequence& tu = seqs[static_cast<std::size_t>(a - 1)];
    const Sequence& tv = seqs[static_cast<std::size_t>(n + a - 1)];
    for (long i = 1; i <= 8; ++i) {
      const long next = i % 8 + 1;
      const int term = cycle_terms[static_cast<std::size_t>(i - 1)] - 1;
      g.add_edge(vertex_name("u", a, i), vertex_name("u", a, next), tu[term]);
      g.add_edge(vertex_name("v", a, i), vertex_name("v", a, next), tv[term]);
    }
    for (long j = 1; j <= 4; ++j) {
      g.add_edge(vertex_name("u", a, 2 * j), vertex_name("v", a, 2 * j),
                 tu[rung_terms[static_cast<std::size_t>(j - 1)] - 1]);
    }
  }
  return g;
}

// Pairs fused into x_{i,1}, x_{i,2}, y_{i,1}, y_{i,2} for H_m(n).
inline std::array<std::array<std::string, 2>, 4> h_pairs(int m, long i) {
  auto u = [i](long p) { return vertex_name("u", i, p); };
  auto v = [i](long p) { return vertex_name("v", i, p); };
  switch (m) {
    case 1: return {{{u(1), u(5)}, {u(3), u(7)}, {v(1), v(5)}, {v(3), v(7)}}};
    case 2: return {{{u(1), v(7)}, {u(5), v(3)}, {u(3), v(5)}, {u(7), v(1)}}};
    default: return {{{u(1), v(1)}, {u(5), v(5)}, {u(3), v(3)}, {u(7), v(7)}}};
  }
}

// --- 8-cycle units ---------------------------------------------------------

/// k disjoint C_8 units with pendant vertex x_i on u_{i,2}, u_{i,6}; row i of
/// matrix_kx10(k) labels unit i.
inline LabeledGraph cycle_units(int k) {
  const LabelMatrix mat = matrix_kx10(k);
  LabeledGraph g;
  for (long i = 1; i <= k; ++i) {
    for (long j = 1; j <= 8; ++j) g.add_vertex(vertex_name("u", i, j));
    g.add_vertex(vertex_name("x", i));
  }
  for (long i = 1; i <= k; ++i) {
    const auto row = static_cast<std::size_t>(i);
    for (long j = 1; j <= 8; ++j) {
      g.add_edge(vertex_name("u", i, j), vertex_name("u", i, j % 8 + 1),
                 mat(row, static_cast<std::size_t>(j)));
    }
    g.add_edge(vertex_name("x", i), vertex_name("u", i, 2), mat(row, 9));
    g.add_edge(vertex_name("x", i), vertex_name("u", i, 6), mat(row, 10));
  }
  return g;
}

inline LabeledGraph fuse_pendant(const LabeledGraph& units, long k, bool with_u4) {
  MergePlan plan;
  for (long i = 1; i <= k; ++i) {
    std::vector<std::string> members{vertex_name("x", i), vertex_name("u", i, 8)};
    if (with_u4) members.push_back(vertex_name("u", i, 4));
    plan.add(lookup(units, members), vertex_name(with_u4 ? "w" : "z", i));
  }
  return apply_merge(units, plan);
}

inline ExpectedColors colors(std::vector<ExpectedClass> classes, std::size_t claimed,
                             bool at_most = false) {
  return {std::move(classes), claimed, at_most};
}

inline std::size_t sz(long v) { return static_cast<std::size_t>(v); }

inline void note_degree3_discrepancy(FamilyBuild& b, long k) {
  b.discrepancies.push_back({"degree-3 vertices u_{i,2}, u_{i,6}", "13k+2", 13 * k + 2,
                             "13k+1", 13 * k + 1});
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Fan families

inline FamilyBuild build_fb_units(int k) {
  detail::require(k >= 1, "FB_units requires k >= 1");
  using detail::sz;
  const long K = k;
  FamilyBuild b{{Family::FBUnits, {.k = k}}, detail::fan_units(k), {}, {}, {}, false, {}};
  const LabelMatrix mat = matrix_5x2k(k);
  std::vector<ExpectedClass> classes{{10 * K + 1, sz(4 * K), 2}, {13 * K + 1, sz(2 * K), 3}};
  for (std::size_t i = 1; i <= mat.cols; ++i) classes.push_back({hub_column_sum(mat, i), 1, 3});
  std::sort(classes.begin(), classes.end(),
            [](const ExpectedClass& a, const ExpectedClass& c) { return a.value < c.value; });
  b.expected = detail::colors(std::move(classes), 2 + 2 * sz(K));
  return b;
}

inline FamilyBuild build_fb(int k) {
  detail::require(k >= 1, "FB requires k >= 1");
  using detail::sz;
  const long K = k;
  LabeledGraph units = detail::fan_units(k);
  std::vector<VertexId> hubs;
  for (long i = 1; i <= 2 * K; ++i) hubs.push_back(units.at(vertex_name("x", i)));
  MergePlan plan;
  plan.add(std::move(hubs), "x");
  FamilyBuild b{{Family::FB, {.k = k}}, apply_merge(units, plan), {}, {}, {}, false, {}};
  b.expected = detail::colors(
      {{10 * K + 1, sz(4 * K), 2}, {13 * K + 1, sz(2 * K), 3}, {K * (34 * K + 4), 1, sz(6 * K)}}, 3);
  return b;
}

inline FamilyBuild build_rfb(int r, int s) {
  detail::require(r >= 2, "rFB requires r >= 2");
  detail::require(s >= 2 && s % 2 == 0, "rFB requires even s >= 2");
  detail::require(r * s >= 4, "rFB requires rs >= 4");
  using detail::sz;
  const long k = static_cast<long>(r) * s / 2;
  FamilyBuild b{{Family::RFB, {.r = r, .s = s}},
                detail::merge_rfb(detail::fan_units(static_cast<int>(k)), k, r, s),
                {}, {}, {}, false, {}};
  b.expected = detail::colors({{10 * k + 1, sz(4 * k), 2},
                               {13 * k + 1, sz(2 * k), 3},
                               {s * (17 * k + 2), sz(r), sz(3L * s)}},
                              3);
  return b;
}

/// FB_1 fuses the degree-2 vertices u_{i,j} (and v_{i,j}) across the r
/// copies of FB(s); FB_2 fuses the degree-3 vertices w_{i,j}.
inline FamilyBuild build_fb12(int which, int r, int s) {
  detail::require(which == 1 || which == 2, "FB variant must be 1 or 2");
  detail::require(r >= 2, "FB1/FB2 require r >= 2");
  detail::require(s >= 2 && s % 2 == 0, "FB1/FB2 require even s >= 2");
  using detail::sz;
  const long k = static_cast<long>(r) * s / 2;
  LabeledGraph g = detail::merge_rfb(detail::fan_units(static_cast<int>(k)), k, r, s);

  std::vector<std::vector<long>> units;  // units[i-1][j-1] = unit index of (i, j)
  for (long i = 1; i <= r; ++i) units.push_back(detail::rfb_units(k, s, i));

  MergePlan plan;
  for (long j = 1; j <= s; ++j) {
    std::vector<std::string> us, vs, ws;
    for (long i = 1; i <= r; ++i) {
      const long unit = units[sz(i - 1)][sz(j - 1)];
      us.push_back(vertex_name("u", unit));
      vs.push_back(vertex_name("v", unit));
      ws.push_back(vertex_name("w", unit));
    }
    if (which == 1) {
      plan.add(detail::lookup(g, us), vertex_name("U", j));
      plan.add(detail::lookup(g, vs), vertex_name("V", j));
    } else {
      plan.add(detail::lookup(g, ws), vertex_name("W", j));
    }
  }

  FamilyBuild b{{which == 1 ? Family::FB1 : Family::FB2, {.r = r, .s = s}},
                apply_merge(g, plan), {}, {}, {}, false, {}};
  const Label hub = s * (17 * k + 2);
  if (which == 1) {
    if (r % 4 == 0) {
      b.warnings.push_back("r = " + detail::ks(r) +
                           " is 0 mod 4: r(10k+1) and s(17k+2) are not guaranteed distinct");
    }
    b.expected = detail::colors({{r * (10 * k + 1), sz(2L * s), sz(2L * r)},
                                 {13 * k + 1, sz(2 * k), 3},
                                 {hub, sz(r), sz(3L * s)}},
                                3);
  } else {
    if ((static_cast<long>(r) * s) % 4 == 0) {
      b.warnings.push_back("rs = " + detail::ks(static_cast<long>(r) * s) +
                           " is 0 mod 4: r(13k+1) and s(17k+2) are not guaranteed distinct");
    }
    b.expected = detail::colors({{10 * k + 1, sz(4 * k), 2},
                                 {r * (13 * k + 1), sz(s), sz(3L * r)},
                                 {hub, sz(r), sz(3L * s)}},
                                3);
  }
  return b;
}

inline FamilyBuild build_fb1(int r, int s) { return build_fb12(1, r, s); }
inline FamilyBuild build_fb2(int r, int s) { return build_fb12(2, r, s); }

inline FamilyBuild build_rdf(int r, int s) {
  detail::require(r >= 1 && s >= 1, "rDF requires r, s >= 1");
  detail::require(2L * r * s >= 4, "rDF requires 2rs >= 4");
  using detail::sz;
  const long k = static_cast<long>(r) * s;
  FamilyBuild b{{Family::RDF, {.r = r, .s = s}},
                detail::diamond_fans(detail::fan_units(static_cast<int>(k)), 2L * r, s, r),
                {}, {}, {}, false, {}};
  b.expected = detail::colors({{10 * k + 1, sz(4 * k), 2},
                               {13 * k + 1, sz(2 * k), 3},
                               {s * (17 * k + 2), sz(2L * r), sz(3L * s)}},
                              3);
  return b;
}

/// rDF(2s) on blocks 1..r and r+2..2r+1, with block r+1 fused into FB(s).
inline FamilyBuild build_dfr(int r, int s) {
  detail::require(r >= 1, "DFr requires r >= 1");
  detail::require(s >= 2 && s % 2 == 0, "DFr requires even s >= 2");
  using detail::sz;
  const long blocks = 2L * r + 1;
  const long k = blocks * s / 2;
  LabeledGraph g = detail::diamond_fans(detail::fan_units(static_cast<int>(k)), blocks, s, r);
  std::vector<VertexId> hub;
  for (long i = static_cast<long>(r) * s + 1; i <= (r + 1L) * s; ++i) {
    hub.push_back(g.at(vertex_name("x", i)));
  }
  MergePlan plan;
  plan.add(std::move(hub), "x");
  FamilyBuild b{{Family::DFr, {.r = r, .s = s}}, apply_merge(g, plan), {}, {}, {}, false, {}};
  b.expected = detail::colors({{10 * k + 1, sz(4 * k), 2},
                               {13 * k + 1, sz(2 * k), 3},
                               {s * (17 * k + 2), sz(2L * r + 1), sz(3L * s)}},
                              3);
  return b;
}

/// DF^1..DF^4(r, 2s), all derived from rDF(2s) with k = rs.
inline FamilyBuild build_df_variant(int variant, int r, int s) {
  detail::require(variant >= 1 && variant <= 4, "DF variant must be 1..4");
  detail::require(r >= 2, "DF variants require r >= 2");
  detail::require(s >= 1, "DF variants require s >= 1");
  if (variant == 4) detail::require(r % 2 == 0, "DF4 requires even r");
  using detail::sz;
  const long k = static_cast<long>(r) * s;
  const FamilyBuild base = build_rdf(r, s);
  const LabeledGraph& g = base.graph;

  const Family tags[] = {Family::DF1, Family::DF2, Family::DF3, Family::DF4};
  FamilyBuild b{{tags[variant - 1], {.r = r, .s = s}}, {}, {}, {}, {}, false, {}};

  // Unit indices of the first and second side of component j.
  auto near = [&](long j, long a) { return (j - 1) * s + a; };
  auto far = [&](long j, long a) { return (2L * r - j) * s + a; };

  MergePlan plan;
  const Label hub = s * (17 * k + 2);
  switch (variant) {
    case 1: {
      for (long a = 1; a <= s; ++a) {
        std::vector<std::string> first, second;
        for (long j = 1; j <= r; ++j) {
          first.push_back(vertex_name("w", near(j, a)));
          second.push_back(vertex_name("w", far(j, a)));
        }
        plan.add(detail::lookup(g, first), vertex_name("alpha^1", a));
        plan.add(detail::lookup(g, second), vertex_name("alpha^2", a));
      }
      if (s % 2 != 0 || k % 4 == 0) {
        b.warnings.push_back("DF1 hypothesis (s even, rs not 0 mod 4) fails: r(13k+1) and "
                             "s(17k+2) are not guaranteed distinct");
      }
      b.expected = detail::colors({{10 * k + 1, sz(4 * k), 2},
                                   {r * (13 * k + 1), sz(2L * s), sz(3L * r)},
                                   {hub, sz(2L * r), sz(3L * s)}},
                                  3);
      break;
    }
    case 2: {
      for (long a = 1; a <= s; ++a) {
        std::array<std::vector<std::string>, 4> groups;
        for (long j = 1; j <= r; ++j) {
          groups[0].push_back(vertex_name("u", near(j, a)));
          groups[1].push_back(vertex_name("u", far(j, a)));
          groups[2].push_back(vertex_name("v", near(j, a)));
          groups[3].push_back(vertex_name("v", far(j, a)));
        }
        for (std::size_t t = 0; t < 4; ++t) {
          plan.add(detail::lookup(g, groups[t]), vertex_name("beta^" + std::to_string(t + 1), a));
        }
      }
      if (s % 2 != 0 || r % 4 == 0) {
        b.warnings.push_back("DF2 hypothesis (s even, r not 0 mod 4) fails: r(10k+1) and "
                             "s(17k+2) are not guaranteed distinct");
      }
      b.expected = detail::colors({{r * (10 * k + 1), sz(4L * s), sz(2L * r)},
                                   {13 * k + 1, sz(2 * k), 3},
                                   {hub, sz(2L * r), sz(3L * s)}},
                                  3);
      break;
    }
    case 3: {
      std::vector<std::string> ys, zs;
      for (long j = 1; j <= r; ++j) {
        ys.push_back(vertex_name("y", j));
        zs.push_back(vertex_name("z", j));
      }
      plan.add(detail::lookup(g, ys), "y");
      plan.add(detail::lookup(g, zs), "z");
      b.expected = detail::colors({{10 * k + 1, sz(4 * k), 2},
                                   {13 * k + 1, sz(2 * k), 3},
                                   {r * hub, 2, sz(3 * k)}},
                                  3);
      break;
    }
    default: {
      for (long j = 1; j <= r; ++j) {
        const long next = j % r + 1;
        plan.add(detail::lookup(g, {vertex_name("y", j), vertex_name("z", next)}),
                 vertex_name("yz", j));
      }
      b.expected = detail::colors({{10 * k + 1, sz(4 * k), 2},
                                   {13 * k + 1, sz(2 * k), 3},
                                   {2 * hub, sz(r), sz(6L * s)}},
                                  3);
      break;
    }
  }
  b.graph = apply_merge(g, plan);
  return b;
}

// ---------------------------------------------------------------------------
// Prism families

inline FamilyBuild build_nc482(int n) {
  detail::require(n >= 1, "nC482 requires n >= 1");
  using detail::sz;
  const long N = n;
  FamilyBuild b{{Family::NC482, {.n = n}}, detail::prism_units(n), {}, {}, {}, false, {}};
  b.expected = detail::colors(
      {{20 * N + 1, sz(8 * N), 2}, {30 * N + 1, sz(4 * N), 3}, {30 * N + 2, sz(4 * N), 3}}, 3);
  return b;
}

/// G_1 fuses the degree-2 vertices at odd positions, G_2 the degree-3
/// vertices u_2, u_8, v_4, v_6, across each block of s prism copies.
inline FamilyBuild build_g(int which, int r, int s) {
  detail::require(which == 1 || which == 2, "G variant must be 1 or 2");
  detail::require(r >= 1, "G1/G2 require r >= 1");
  detail::require(s >= 2, "G1/G2 require s >= 2");
  using detail::sz;
  const long n = static_cast<long>(r) * s;
  LabeledGraph g = detail::prism_units(static_cast<int>(n));
  MergePlan plan;
  auto fuse = [&](const char* role, long b, long pos, const char* fused) {
    std::vector<std::string> members;
    for (long i = 1; i <= s; ++i) members.push_back(vertex_name(role, (b - 1) * s + i, pos));
    plan.add(detail::lookup(g, members), vertex_name(fused, b, pos));
  };
  for (long b = 1; b <= r; ++b) {
    if (which == 1) {
      for (long j = 1; j <= 4; ++j) {
        fuse("u", b, 2 * j - 1, "U");
        fuse("v", b, 2 * j - 1, "V");
      }
    } else {
      fuse("u", b, 2, "U");
      fuse("u", b, 8, "U");
      fuse("v", b, 4, "V");
      fuse("v", b, 6, "V");
    }
  }
  FamilyBuild out{{which == 1 ? Family::G1 : Family::G2, {.r = r, .s = s}},
                  apply_merge(g, plan), {}, {}, {}, false, {}};
  if (which == 1) {
    out.expected = detail::colors({{s * (20 * n + 1), sz(8L * r), sz(2L * s)},
                                   {30 * n + 1, sz(4 * n), 3},
                                   {30 * n + 2, sz(4 * n), 3}},
                                  3);
  } else {
    out.expected = detail::colors({{20 * n + 1, sz(8 * n), 2},
                                   {30 * n + 2, sz(4 * n), 3},
                                   {s * (30 * n + 1), sz(4L * r), sz(3L * s)}},
                                  3);
  }
  return out;
}

inline FamilyBuild build_g1(int r, int s) { return build_g(1, r, s); }
inline FamilyBuild build_g2(int r, int s) { return build_g(2, r, s); }

inline FamilyBuild build_h(int m, int n) {
  detail::require(m >= 1 && m <= 3, "H variant must be 1..3");
  detail::require(n >= 1, "H requires n >= 1");
  using detail::sz;
  const long N = n;
  LabeledGraph g = detail::prism_units(n);
  MergePlan plan;
  for (long i = 1; i <= N; ++i) {
    const auto pairs = detail::h_pairs(m, i);
    const std::array<std::string, 4> names{vertex_name("x", i, 1), vertex_name("x", i, 2),
                                           vertex_name("y", i, 1), vertex_name("y", i, 2)};
    for (std::size_t t = 0; t < 4; ++t) {
      plan.add(detail::lookup(g, {pairs[t][0], pairs[t][1]}), names[t]);
    }
  }
  const Family tags[] = {Family::H1, Family::H2, Family::H3};
  FamilyBuild b{{tags[m - 1], {.n = n}}, apply_merge(g, plan), {}, {}, {}, false, {}};
  b.expected = detail::colors(
      {{30 * N + 1, sz(4 * N), 3}, {30 * N + 2, sz(4 * N), 3}, {40 * N + 2, sz(4 * N), 4}}, 3);
  return b;
}

inline FamilyBuild build_hm_rs(int m, int r, int s) {
  detail::require(m >= 1 && m <= 3, "Hm_rs requires m in 1..3");
  detail::require(r >= 1, "Hm_rs requires r >= 1");
  detail::require(s >= 2, "Hm_rs requires s >= 2");
  using detail::sz;
  const long n = static_cast<long>(r) * s;
  const FamilyBuild base = build_h(m, static_cast<int>(n));
  MergePlan plan;
  for (long b = 1; b <= r; ++b) {
    for (long j = 1; j <= 2; ++j) {
      std::vector<std::string> xs, ys;
      for (long i = 1; i <= s; ++i) {
        xs.push_back(vertex_name("x", (b - 1) * s + i, j));
        ys.push_back(vertex_name("y", (b - 1) * s + i, j));
      }
      plan.add(detail::lookup(base.graph, xs), vertex_name("X", b, j));
      plan.add(detail::lookup(base.graph, ys), vertex_name("Y", b, j));
    }
  }
  FamilyBuild out{{Family::HmRS, {.r = r, .s = s, .m = m}}, apply_merge(base.graph, plan),
                  {}, {}, {}, false, {}};
  out.expected = detail::colors({{30 * n + 1, sz(4 * n), 3},
                                 {30 * n + 2, sz(4 * n), 3},
                                 {s * (40 * n + 2), sz(4L * r), sz(4L * s)}},
                                3);
  return out;
}

// ---------------------------------------------------------------------------
// 8-cycle families

inline FamilyBuild build_c8_units(int k) {
  detail::require(k >= 1, "C8_units requires k >= 1");
  using detail::sz;
  const long K = k;
  FamilyBuild b{{Family::C8Units, {.k = k}}, detail::cycle_units(k), {}, {}, {}, false, {}};
  b.expected = detail::colors({{6 * K + 2, sz(K), 2},
                               {10 * K + 1, sz(5 * K), 2},
                               {13 * K + 1, sz(2 * K), 3},
                               {18 * K + 1, sz(K), 2}},
                              4, true);
  detail::note_degree3_discrepancy(b, K);
  return b;
}

inline FamilyBuild build_bk(int k) {
  detail::require(k >= 1, "Bk requires k >= 1");
  using detail::sz;
  const long K = k;
  LabeledGraph units = detail::cycle_units(k);
  MergePlan plan;
  for (long i = 1; i <= K; ++i) {
    plan.add(detail::lookup(units, {vertex_name("u", i, 4), vertex_name("u", i, 8)}),
             vertex_name("b", i));
  }
  FamilyBuild b{{Family::Bk, {.k = k}}, apply_merge(units, plan), {}, {}, {}, false, {}};
  b.expected = detail::colors(
      {{10 * K + 1, sz(5 * K), 2}, {13 * K + 1, sz(2 * K), 3}, {24 * K + 3, sz(K), 4}}, 3);
  detail::note_degree3_discrepancy(b, K);
  return b;
}

inline FamilyBuild build_kc82(int k) {
  detail::require(k >= 1, "kC82 requires k >= 1");
  using detail::sz;
  const long K = k;
  FamilyBuild b{{Family::KC82, {.k = k}}, detail::fuse_pendant(detail::cycle_units(k), K, false),
                {}, {}, {}, false, {}};
  b.expected = detail::colors({{6 * K + 2, sz(K), 2},
                               {10 * K + 1, sz(4 * K), 2},
                               {13 * K + 1, sz(2 * K), 3},
                               {28 * K + 2, sz(K), 4}},
                              4, true);
  return b;
}

inline FamilyBuild build_kd82(int k) {
  detail::require(k >= 1, "kD82 requires k >= 1");
  using detail::sz;
  const long K = k;
  FamilyBuild b{{Family::KD82, {.k = k}}, detail::fuse_pendant(detail::cycle_units(k), K, true),
                {}, {}, {}, false, {}};
  b.expected = detail::colors(
      {{10 * K + 1, sz(4 * K), 2}, {13 * K + 1, sz(2 * K), 3}, {34 * K + 4, sz(K), 6}}, 3);
  b.discrepancies.push_back({"fused vertex w_i = {x_i, u_{i,4}, u_{i,8}}", "34k+2", 34 * K + 2,
                             "(10k+1)+(6k+2)+(18k+1) = 34k+4", 34 * K + 4});
  return b;
}

/// rG(8,2) from kC(8,2), k = rs: within block a of s copies, the z's of the
/// first half join the u_4's of the second half in one vertex, and the z's
/// of the second half join the u_4's of the first half in another.
inline FamilyBuild build_rg82(int r, int s) {
  detail::require(r >= 1, "rG82 requires r >= 1");
  detail::require(s >= 2 && s % 2 == 0, "rG82 requires even s >= 2");
  using detail::sz;
  const long k = static_cast<long>(r) * s;
  LabeledGraph g = detail::fuse_pendant(detail::cycle_units(static_cast<int>(k)), k, false);
  MergePlan plan;
  for (long a = 1; a <= r; ++a) {
    std::vector<std::string> first, second;
    for (long i = 1; i <= s / 2; ++i) {
      first.push_back(vertex_name("z", (a - 1) * s + i));
      first.push_back(vertex_name("u", (2 * a - 1) * s / 2 + i, 4));
      second.push_back(vertex_name("z", (2 * a - 1) * s / 2 + i));
      second.push_back(vertex_name("u", (a - 1) * s + i, 4));
    }
    plan.add(detail::lookup(g, first), vertex_name("g", a, 1));
    plan.add(detail::lookup(g, second), vertex_name("g", a, 2));
  }
  FamilyBuild b{{Family::RG82, {.r = r, .s = s}}, apply_merge(g, plan), {}, {}, {}, false, {}};
  b.expected = detail::colors({{10 * k + 1, sz(4 * k), 2},
                               {13 * k + 1, sz(2 * k), 3},
                               {s * (17 * k + 2), sz(2L * r), sz(3L * s)}},
                              3);
  return b;
}

/// Odd k = rs. Within block a of s copies (h = (s+1)/2): one vertex fuses
/// z's of copies 1..h with u_4's of copies h+1..s, another fuses z's of
/// copies h+1..s with u_4's of copies 1..h. The printed index sets overrun
/// [1,k]; this reading is the one that keeps every index in range.
inline FamilyBuild build_oddk_h(int r, int s) {
  detail::require(r >= 1 && s >= 1, "OddKH requires r, s >= 1");
  const long k = static_cast<long>(r) * s;
  detail::require(k % 2 == 1 && k >= 3, "OddKH requires k = rs odd and >= 3");
  using detail::sz;
  LabeledGraph g = detail::fuse_pendant(detail::cycle_units(static_cast<int>(k)), k, false);
  const long h = (s + 1) / 2;
  MergePlan plan;
  if (s > 1) {
    for (long a = 1; a <= r; ++a) {
      const long base = (a - 1) * s;
      std::vector<std::string> first, second;
      for (long i = 1; i <= h; ++i) {
        first.push_back(vertex_name("z", base + i));
        second.push_back(vertex_name("u", base + i, 4));
      }
      for (long j = 1; j < h; ++j) {
        first.push_back(vertex_name("u", base + h + j, 4));
        second.push_back(vertex_name("z", base + h + j));
      }
      plan.add(detail::lookup(g, first), vertex_name("g", a, 1));
      plan.add(detail::lookup(g, second), vertex_name("g", a, 2));
    }
  }
  FamilyBuild b{{Family::OddKH, {.r = r, .s = s}}, plan.groups.empty() ? g : apply_merge(g, plan),
                {}, {}, {}, true, {}};
  const Label pairs = (s - 1) * (17 * k + 2);
  b.expected = detail::colors({{10 * k + 1, sz(4 * k), 2},
                               {13 * k + 1, sz(2 * k), 3},
                               {pairs + 28 * k + 2, sz(r), sz(3L * (s - 1) + 4)},
                               {pairs + 6 * k + 2, sz(r), sz(3L * (s - 1) + 2)}},
                              4, true);
  b.printed_claim = detail::colors({{10 * k + 1, sz(4 * k), 2},
                                    {13 * k + 2, sz(2 * k), 3},
                                    {pairs + 18 * k + 1, sz(r), sz(3L * (s - 1) + 4)},
                                    {pairs + 6 * k + 2, sz(r), sz(3L * (s - 1) + 2)}},
                                   4, true);
  b.warnings.push_back("experimental: printed merge sets {z_i, u_{(k+1)/2+i}} for i <= (k+1)/2 "
                       "reach copy index " + detail::ks((k + 1) / 2 + (k + 1) / 2) + " > k = " +
                       detail::ks(k) + "; built with the u_4 ranges exchanged per block");
  detail::note_degree3_discrepancy(b, k);
  b.discrepancies.push_back({"degree 3(s-1)+4 vertices", "(s-1)(17k+2)+18k+1",
                             pairs + 18 * k + 1, "(s-1)(17k+2)+28k+2", pairs + 28 * k + 2});
  return b;
}

// ---------------------------------------------------------------------------

/// Builds any family from its tag and parameters. OddKH requires
/// `allow_experimental`.
inline FamilyBuild build(const FamilySpec& spec, bool allow_experimental = false) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::FBUnits: return build_fb_units(p.k);
    case Family::FB: return build_fb(p.k);
    case Family::RFB: return build_rfb(p.r, p.s);
    case Family::FB1: return build_fb1(p.r, p.s);
    case Family::FB2: return build_fb2(p.r, p.s);
    case Family::RDF: return build_rdf(p.r, p.s);
    case Family::DFr: return build_dfr(p.r, p.s);
    case Family::DF1: return build_df_variant(1, p.r, p.s);
    case Family::DF2: return build_df_variant(2, p.r, p.s);
    case Family::DF3: return build_df_variant(3, p.r, p.s);
    case Family::DF4: return build_df_variant(4, p.r, p.s);
    case Family::NC482: return build_nc482(p.n);
    case Family::G1: return build_g1(p.r, p.s);
    case Family::G2: return build_g2(p.r, p.s);
    case Family::H1: return build_h(1, p.n);
    case Family::H2: return build_h(2, p.n);
    case Family::H3: return build_h(3, p.n);
    case Family::HmRS: return build_hm_rs(p.m, p.r, p.s);
    case Family::C8Units: return build_c8_units(p.k);
    case Family::Bk: return build_bk(p.k);
    case Family::KC82: return build_kc82(p.k);
    case Family::KD82: return build_kd82(p.k);
    case Family::RG82: return build_rg82(p.r, p.s);
    case Family::OddKH:
      detail::require(allow_experimental, "OddKH is experimental; enable it explicitly");
      return build_oddk_h(p.r, p.s);
  }
  throw ParameterError("unknown family");
}

}  // namespace lacolor
