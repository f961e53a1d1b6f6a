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

/// \file matrix.hpp
///
/// The three label matrices and their validators.
///
///  - FiveBy2k: 5 x 2k, a bijection onto [1,10k]. Column i labels the five
///    edges u_iw_i, v_iw_i, x_iw_i, x_iu_i, x_iv_i of the i-th fan unit.
///  - SixBy4n: 6 x 4n over [1,20n], with [2n+1,4n] and [16n+1,18n] used
///    twice. It is generated from the 2n length-12 sequences T_1..T_2n.
///  - KBy10: k x 10, a bijection onto [1,10k]. Row i labels the i-th
///    8-cycle unit (columns 1-8) and its pendant vertex (columns 9, 10).
///
/// Validators never throw; they return every check with a pass flag.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lacolor/graph.hpp"

namespace lacolor {

enum class MatrixKind { FiveBy2k, SixBy4n, KBy10 };

inline std::string_view to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::FiveBy2k: return "5x2k";
    case MatrixKind::SixBy4n: return "6x4n";
    case MatrixKind::KBy10: return "kx10";
  }
  return "?";
}

using Sequence = std::array<Label, 12>;

struct LabelMatrix {
  MatrixKind kind = MatrixKind::FiveBy2k;
  int parameter = 0;  // k or n
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Label> cells;         // row-major
  std::vector<Sequence> sequences;  // SixBy4n only

  Label at(std::size_t r, std::size_t c) const { return cells.at(r * cols + c); }
  Label& at(std::size_t r, std::size_t c) { return cells.at(r * cols + c); }

  // 1-based access, matching the row/column numbering of the tables.
  Label operator()(std::size_t r, std::size_t c) const { return at(r - 1, c - 1); }
};

struct ValidationCheck {
  std::string name;
  bool passed = true;
  std::string detail;         // first counterexample when failed
  bool informational = false; // does not affect ok()
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool ok() const {
    for (const auto& c : checks) {
      if (!c.passed && !c.informational) return false;
    }
    return true;
  }

  std::vector<ValidationCheck> failures() const {
    std::vector<ValidationCheck> out;
    for (const auto& c : checks) {
      if (!c.passed) out.push_back(c);
    }
    return out;
  }
};

namespace detail {

inline void require_parameter(const char* what, long value) {
  if (value < 1) {
    throw std::invalid_argument(std::string(what) + " must be >= 1, got " + std::to_string(value));
  }
}

// Accumulates a check; keeps the first failure message.
class CheckBuilder {
 public:
  CheckBuilder(ValidationReport& report, std::string name, bool informational = false)
      : report_(report) {
    check_.name = std::move(name);
    check_.informational = informational;
  }
  CheckBuilder(const CheckBuilder&) = delete;
  CheckBuilder& operator=(const CheckBuilder&) = delete;
  ~CheckBuilder() { report_.checks.push_back(std::move(check_)); }

  void expect(bool cond, const std::string& detail) {
    if (!cond && check_.passed) {
      check_.passed = false;
      check_.detail = detail;
    }
  }

  void expect_eq(Label got, Label want, const std::string& where) {
    if (got != want) {
      expect(false, where + ": got " + std::to_string(got) + ", want " + std::to_string(want));
    }
  }

 private:
  ValidationReport& report_;
  ValidationCheck check_;
};

// counts[v] for every v in [1, hi]; returns detail of first mismatch.
inline std::string multiset_mismatch(const std::vector<Label>& values, Label hi,
                                     const std::map<Label, int>& expected_count) {
  std::map<Label, int> seen;
  for (Label v : values) {
    if (v < 1 || v > hi) return "entry " + std::to_string(v) + " outside [1," + std::to_string(hi) + "]";
    ++seen[v];
  }
  for (Label v = 1; v <= hi; ++v) {
    auto it = expected_count.find(v);
    int want = it == expected_count.end() ? 1 : it->second;
    int got = seen.count(v) ? seen[v] : 0;
    if (got != want) {
      return "value " + std::to_string(v) + " appears " + std::to_string(got) + " times, want " +
             std::to_string(want);
    }
  }
  return {};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 5 x 2k

inline LabelMatrix matrix_5x2k(int k) {
  detail::require_parameter("k", k);
  const Label K = k;
  LabelMatrix m{MatrixKind::FiveBy2k, k, 5, static_cast<std::size_t>(2 * k), {}, {}};
  m.cells.assign(m.rows * m.cols, 0);
  for (Label i = 1; i <= 2 * K; ++i) {
    const bool first = i == 1;
    const bool last = i == 2 * K;
    const bool left = i <= K;  // columns 2..k when not first
    Label r1, r2, r3, r4, r5;
    if (first) {
      r1 = 1;
      r3 = 7 * K;
      r4 = 10 * K;
    } else if (last) {
      r1 = 2 * K;
      r3 = 3 * K + 1;
      r4 = 8 * K + 1;
    } else if (left) {
      r1 = K + i - 1;
      r3 = 6 * K + 3 - 2 * i;
      r4 = 9 * K + 2 - i;
    } else {
      r1 = i - K + 1;
      r3 = 8 * K - 2 * i;
      r4 = 11 * K - i;
    }
    r2 = left ? 6 * K + i - 1 : 6 * K + i;
    r5 = left ? 4 * K + 2 - i : 4 * K + 1 - i;
    const auto c = static_cast<std::size_t>(i - 1);
    m.at(0, c) = r1;
    m.at(1, c) = r2;
    m.at(2, c) = r3;
    m.at(3, c) = r4;
    m.at(4, c) = r5;
  }
  return m;
}

/// Sum of rows 3..5 in column i (1-based): the induced label of x_i in the
/// i-th fan unit.
inline Label hub_column_sum(const LabelMatrix& m, std::size_t i) {
  return m(3, i) + m(4, i) + m(5, i);
}

inline ValidationReport validate_5x2k(const LabelMatrix& m) {
  using detail::CheckBuilder;
  ValidationReport report;
  {
    CheckBuilder c(report, "kind");
    c.expect(m.kind == MatrixKind::FiveBy2k, "matrix is not 5x2k");
    c.expect(m.parameter >= 1, "k < 1");
    c.expect(m.rows == 5 && m.cols == 2 * static_cast<std::size_t>(m.parameter) &&
                 m.cells.size() == m.rows * m.cols,
             "shape is not 5 x 2k");
  }
  if (!report.ok()) return report;

  const Label k = m.parameter;
  const std::size_t n = m.cols;  // 2k
  auto col = [](std::size_t i) { return "column " + std::to_string(i); };

  {
    CheckBuilder c(report, "bijection onto [1,10k]");
    std::string bad = detail::multiset_mismatch(m.cells, 10 * k, {});
    c.expect(bad.empty(), bad);
  }
  {
    CheckBuilder c(report, "rows 1-3 column sum = 13k+1");
    for (std::size_t i = 1; i <= n; ++i) c.expect_eq(m(1, i) + m(2, i) + m(3, i), 13 * k + 1, col(i));
  }
  {
    CheckBuilder c(report, "rows 1+4 and rows 2+5 = 10k+1");
    for (std::size_t i = 1; i <= n; ++i) {
      c.expect_eq(m(1, i) + m(4, i), 10 * k + 1, col(i) + " rows 1+4");
      c.expect_eq(m(2, i) + m(5, i), 10 * k + 1, col(i) + " rows 2+5");
    }
  }
  {
    CheckBuilder c(report, "rows 3-5 sums: endpoints, progressions, mirror pairs = 34k+4");
    c.expect_eq(hub_column_sum(m, 1), 21 * k + 1, col(1));
    c.expect_eq(hub_column_sum(m, n), 13 * k + 3, col(n));
    for (std::size_t i = 2; i <= static_cast<std::size_t>(k); ++i) {
      c.expect_eq(hub_column_sum(m, i), 19 * k - 1 - 4 * static_cast<Label>(i - 2), col(i));
    }
    for (std::size_t i = k + 1; i + 1 <= n; ++i) {
      c.expect_eq(hub_column_sum(m, i), 19 * k - 3 - 4 * static_cast<Label>(i - k - 1), col(i));
    }
    for (std::size_t a = 1; a <= static_cast<std::size_t>(k); ++a) {
      c.expect_eq(hub_column_sum(m, a) + hub_column_sum(m, n + 1 - a), 34 * k + 4,
                  "columns " + std::to_string(a) + "," + std::to_string(n + 1 - a));
    }
  }
  {
    CheckBuilder c(report, "total of rows 3-5 = k(34k+4)");
    Label total = 0;
    for (std::size_t i = 1; i <= n; ++i) total += hub_column_sum(m, i);
    c.expect_eq(total, k * (34 * k + 4), "total");
  }
  {
    // Every factorization 2k = rs with r >= 2: row 3 of block j plus rows 4,5
    // of block r+1-j sum to s(17k+2).
    CheckBuilder c(report, "block sums = s(17k+2)");
    auto block_sum = [&](std::size_t s, std::size_t j, std::size_t r_lo, std::size_t r_hi) {
      Label t = 0;
      for (std::size_t i = (j - 1) * s + 1; i <= j * s; ++i) {
        for (std::size_t r = r_lo; r <= r_hi; ++r) t += m(r, i);
      }
      return t;
    };
    for (std::size_t r = 2; r <= n; ++r) {
      if (n % r != 0) continue;
      const std::size_t s = n / r;
      const Label want = static_cast<Label>(s) * (17 * k + 2);
      for (std::size_t j = 1; j <= r / 2; ++j) {
        std::string where = "r=" + std::to_string(r) + " block " + std::to_string(j);
        c.expect_eq(block_sum(s, j, 3, 3) + block_sum(s, r + 1 - j, 4, 5), want, where);
        c.expect_eq(block_sum(s, j, 4, 5) + block_sum(s, r + 1 - j, 3, 3), want, where + " (mirror)");
      }
    }
  }
  {
    CheckBuilder c(report, "odd r: middle block rows 3-5 = s(17k+2)", true);
    for (std::size_t r = 3; r <= n; r += 2) {
      if (n % r != 0) continue;
      const std::size_t s = n / r;
      const std::size_t j = (r + 1) / 2;
      Label t = 0;
      for (std::size_t i = (j - 1) * s + 1; i <= j * s; ++i) t += hub_column_sum(m, i);
      c.expect_eq(t, static_cast<Label>(s) * (17 * k + 2), "r=" + std::to_string(r));
    }
  }
  {
    CheckBuilder c(report, "row2(i)+row3(i)+row4(2k+1-i) = 21k+1");
    for (std::size_t i = 1; i <= n; ++i) c.expect_eq(m(2, i) + m(3, i) + m(4, n + 1 - i), 21 * k + 1, col(i));
  }
  {
    CheckBuilder c(report, "mirror pairs: row 4 = 18k+1, row 5 = 6k+2");
    for (std::size_t i = 1; i <= static_cast<std::size_t>(k); ++i) {
      c.expect_eq(m(4, i) + m(4, n + 1 - i), 18 * k + 1, col(i) + " row 4");
      c.expect_eq(m(5, i) + m(5, n + 1 - i), 6 * k + 2, col(i) + " row 5");
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// 6 x 4n

inline std::vector<Sequence> sequences_6x4n(int n_param) {
  detail::require_parameter("n", n_param);
  const Label n = n_param;
  std::vector<Sequence> out;
  out.reserve(2 * n_param);
  for (Label a = 1; a <= n; ++a) {
    out.push_back({a, 16 * n + a, 14 * n + 1 - 2 * a, 6 * n + 2 * a, 18 * n + 1 - a,
                   6 * n + 1 - a, 14 * n + a, 2 * n + a, 14 * n + 2 - 2 * a, 6 * n - 1 + 2 * a,
                   4 * n + 1 - a, 20 * n + 1 - a});
  }
  for (Label b = 1; b <= n; ++b) {
    out.push_back({4 * n + b, 16 * n + b, 10 * n + 2 - 2 * b, 10 * n - 1 + 2 * b,
                   18 * n + 1 - b, 2 * n + 1 - b, 18 * n + b, 2 * n + b, 10 * n + 1 - 2 * b,
                   10 * n + 2 * b, 4 * n + 1 - b, 16 * n + 1 - b});
  }
  return out;
}

namespace detail {

/// Grid placement of the sequence terms (1-based term positions, rows 1..6):
///   column a       <- T_a     terms 1,2,3,7,8,9
///   column 2n+a    <- T_a     terms 4,5,6,10,11,12
///   column 2n+1-b  <- T_{n+b} terms 6,5,4,12,11,10
///   column 4n+1-b  <- T_{n+b} terms 3,2,1,9,8,7
inline std::vector<Label> place_6x4n(const std::vector<Sequence>& seqs) {
  const std::size_t n = seqs.size() / 2, cols = 4 * n;
  std::vector<Label> cells(6 * cols, 0);
  auto place = [&](std::size_t col, const Sequence& t, std::array<int, 6> terms) {
    for (std::size_t r = 0; r < 6; ++r) cells[r * cols + col - 1] = t[terms[r] - 1];
  };
  for (std::size_t a = 1; a <= n; ++a) {
    place(a, seqs[a - 1], {1, 2, 3, 7, 8, 9});
    place(2 * n + a, seqs[a - 1], {4, 5, 6, 10, 11, 12});
  }
  for (std::size_t b = 1; b <= n; ++b) {
    place(2 * n + 1 - b, seqs[n + b - 1], {6, 5, 4, 12, 11, 10});
    place(4 * n + 1 - b, seqs[n + b - 1], {3, 2, 1, 9, 8, 7});
  }
  return cells;
}

}  // namespace detail

inline LabelMatrix matrix_6x4n(int n_param) {
  auto seqs = sequences_6x4n(n_param);
  const std::size_t n = static_cast<std::size_t>(n_param);
  LabelMatrix m{MatrixKind::SixBy4n, n_param, 6, 4 * n, {}, seqs};
  m.cells = detail::place_6x4n(seqs);
  return m;
}

namespace detail {

inline std::map<Label, int> doubled_values_6x4n(Label n) {
  std::map<Label, int> twice;
  for (Label v = 2 * n + 1; v <= 4 * n; ++v) twice[v] = 2;
  for (Label v = 16 * n + 1; v <= 18 * n; ++v) twice[v] = 2;
  return twice;
}

inline void check_sequences(ValidationReport& report, const std::vector<Sequence>& seqs) {
  using detail::CheckBuilder;
  {
    CheckBuilder c(report, "sequence count is even and nonzero");
    c.expect(!seqs.empty() && seqs.size() % 2 == 0, "got " + std::to_string(seqs.size()));
  }
  if (seqs.empty() || seqs.size() % 2 != 0) return;
  const std::size_t half = seqs.size() / 2;
  const Label n = static_cast<Label>(half);
  auto t = [&](std::size_t a, int pos) { return seqs[a - 1][pos - 1]; };
  auto tag = [](std::size_t a) { return "T_" + std::to_string(a); };

  {
    CheckBuilder c(report, "t1+t12 = t6+t7 = t9+t10 = 20n+1");
    for (std::size_t a = 1; a <= seqs.size(); ++a) {
      c.expect_eq(t(a, 1) + t(a, 12), 20 * n + 1, tag(a) + " t1+t12");
      c.expect_eq(t(a, 6) + t(a, 7), 20 * n + 1, tag(a) + " t6+t7");
      c.expect_eq(t(a, 9) + t(a, 10), 20 * n + 1, tag(a) + " t9+t10");
    }
  }
  {
    CheckBuilder c(report, "triple sums 30n+1 / 30n+2");
    for (std::size_t a = 1; a <= seqs.size(); ++a) {
      const bool low = a <= half;
      const Label outer = low ? 30 * n + 1 : 30 * n + 2;
      const Label inner = low ? 30 * n + 2 : 30 * n + 1;
      c.expect_eq(t(a, 1) + t(a, 2) + t(a, 3), outer, tag(a) + " t1..t3");
      c.expect_eq(t(a, 10) + t(a, 11) + t(a, 12), outer, tag(a) + " t10..t12");
      c.expect_eq(t(a, 4) + t(a, 5) + t(a, 6), inner, tag(a) + " t4..t6");
      c.expect_eq(t(a, 7) + t(a, 8) + t(a, 9), inner, tag(a) + " t7..t9");
    }
  }
  {
    CheckBuilder c(report, "T_a and T_{n+a} share terms 2,5,8,11");
    for (std::size_t a = 1; a <= half; ++a) {
      for (int pos : {2, 5, 8, 11}) {
        c.expect_eq(t(half + a, pos), t(a, pos), tag(a) + " term " + std::to_string(pos));
      }
    }
  }
  {
    CheckBuilder c(report, "sequence terms: [1,20n], doubled ranges used twice");
    std::vector<Label> all;
    for (const auto& s : seqs) all.insert(all.end(), s.begin(), s.end());
    std::string bad = multiset_mismatch(all, 20 * n, doubled_values_6x4n(n));
    c.expect(bad.empty(), bad);
  }
}

}  // namespace detail

inline ValidationReport validate_6x4n(const std::vector<Sequence>& seqs) {
  ValidationReport report;
  detail::check_sequences(report, seqs);
  return report;
}

/// Checks the grid itself (multiset law, equality with the sequence terms)
/// and the sequence identities; the row-by-row layout is informational.
inline ValidationReport validate_6x4n(const LabelMatrix& m) {
  using detail::CheckBuilder;
  ValidationReport report;
  {
    CheckBuilder c(report, "kind");
    c.expect(m.kind == MatrixKind::SixBy4n, "matrix is not 6x4n");
    c.expect(m.parameter >= 1, "n < 1");
    c.expect(m.rows == 6 && m.cols == 4 * static_cast<std::size_t>(m.parameter) &&
                 m.cells.size() == m.rows * m.cols &&
                 m.sequences.size() == 2 * static_cast<std::size_t>(m.parameter),
             "shape is not 6 x 4n with 2n sequences");
  }
  if (!report.ok()) return report;
  const Label n = m.parameter;
  {
    CheckBuilder c(report, "grid entries: [1,20n], doubled ranges used twice");
    std::string bad = detail::multiset_mismatch(m.cells, 20 * n, detail::doubled_values_6x4n(n));
    c.expect(bad.empty(), bad);
  }
  {
    CheckBuilder c(report, "grid and sequence terms are equal as multisets");
    std::vector<Label> terms;
    for (const auto& s : m.sequences) terms.insert(terms.end(), s.begin(), s.end());
    std::vector<Label> grid = m.cells;
    std::sort(terms.begin(), terms.end());
    std::sort(grid.begin(), grid.end());
    c.expect(terms == grid, "multisets differ");
  }
  {
    CheckBuilder c(report, "grid columns hold the sequence terms in place");
    const auto placed = detail::place_6x4n(m.sequences);
    for (std::size_t i = 0; i < placed.size(); ++i) {
      c.expect_eq(m.cells[i], placed[i],
                  "row " + std::to_string(i / m.cols + 1) + " column " + std::to_string(i % m.cols + 1));
    }
  }
  detail::check_sequences(report, m.sequences);
  {
    CheckBuilder c(report, "row layout R1..R6", true);
    const std::size_t h = 2 * static_cast<std::size_t>(n);
    for (std::size_t j = 1; j <= h; ++j) {
      const Label J = static_cast<Label>(j);
      std::string w = "column " + std::to_string(j);
      c.expect_eq(m(1, j), J, w);
      c.expect_eq(m(2, j), 16 * n + J, w);
      c.expect_eq(m(3, j), 14 * n + 1 - 2 * J, w);
      c.expect_eq(m(4, j), 14 * n + J, w);
      c.expect_eq(m(5, j), 2 * n + J, w);
      c.expect_eq(m(6, j), 14 * n + 2 - 2 * J, w);
      w = "column " + std::to_string(h + j);
      c.expect_eq(m(1, h + j), 6 * n + 2 * J, w);
      c.expect_eq(m(2, h + j), 18 * n + 1 - J, w);
      c.expect_eq(m(3, h + j), 6 * n + 1 - J, w);
      c.expect_eq(m(4, h + j), 6 * n - 1 + 2 * J, w);
      c.expect_eq(m(5, h + j), 4 * n + 1 - J, w);
      c.expect_eq(m(6, h + j), 20 * n + 1 - J, w);
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// k x 10

inline LabelMatrix matrix_kx10(int k) {
  detail::require_parameter("k", k);
  const Label K = k;
  LabelMatrix m{MatrixKind::KBy10, k, static_cast<std::size_t>(k), 10, {}, {}};
  m.cells.assign(m.rows * m.cols, 0);
  for (Label i = 1; i <= K; ++i) {
    const bool first = i == 1;
    const std::array<Label, 10> row{
        first ? 1 : K + i - 1,
        6 * K + i - 1,
        4 * K + 2 - i,
        2 * K + i,
        8 * K + 1 - i,
        first ? 2 * K : K + 2 - i,
        first ? 8 * K + 1 : 9 * K + i - 1,
        first ? 10 * K : 9 * K + 2 - i,
        first ? 7 * K : 6 * K + 3 - 2 * i,
        first ? 3 * K + 1 : 4 * K - 2 + 2 * i,
    };
    for (std::size_t c = 0; c < 10; ++c) m.at(static_cast<std::size_t>(i - 1), c) = row[c];
  }
  return m;
}

inline ValidationReport validate_kx10(const LabelMatrix& m) {
  using detail::CheckBuilder;
  ValidationReport report;
  {
    CheckBuilder c(report, "kind");
    c.expect(m.kind == MatrixKind::KBy10, "matrix is not kx10");
    c.expect(m.parameter >= 1, "k < 1");
    c.expect(m.rows == static_cast<std::size_t>(m.parameter) && m.cols == 10 &&
                 m.cells.size() == m.rows * m.cols,
             "shape is not k x 10");
  }
  if (!report.ok()) return report;
  const Label k = m.parameter;
  {
    CheckBuilder c(report, "bijection onto [1,10k]");
    std::string bad = detail::multiset_mismatch(m.cells, 10 * k, {});
    c.expect(bad.empty(), bad);
  }
  {
    CheckBuilder c(report, "column pairs (1,8) (2,3) (4,5) (6,7) (9,10) = 10k+1");
    constexpr std::array<std::pair<int, int>, 5> pairs{{{1, 8}, {2, 3}, {4, 5}, {6, 7}, {9, 10}}};
    for (std::size_t i = 1; i <= m.rows; ++i) {
      for (auto [x, y] : pairs) {
        c.expect_eq(m(i, x) + m(i, y), 10 * k + 1,
                    "row " + std::to_string(i) + " columns " + std::to_string(x) + "," +
                        std::to_string(y));
      }
    }
  }
  {
    CheckBuilder c(report, "column triples (1,2,9) (5,6,10) = 13k+1");
    for (std::size_t i = 1; i <= m.rows; ++i) {
      c.expect_eq(m(i, 1) + m(i, 2) + m(i, 9), 13 * k + 1, "row " + std::to_string(i) + " (1,2,9)");
      c.expect_eq(m(i, 5) + m(i, 6) + m(i, 10), 13 * k + 1, "row " + std::to_string(i) + " (5,6,10)");
    }
  }
  return report;
}

inline ValidationReport validate(const LabelMatrix& m) {
  switch (m.kind) {
    case MatrixKind::FiveBy2k: return validate_5x2k(m);
    case MatrixKind::SixBy4n: return validate_6x4n(m);
    case MatrixKind::KBy10: return validate_kx10(m);
  }
  return {};
}

}  // namespace lacolor
