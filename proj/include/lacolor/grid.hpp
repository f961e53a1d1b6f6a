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

/// \file grid.hpp
///
/// Default parameter points per family: every point satisfies the family's
/// hypotheses and builds at most 600 edges.

#include <vector>

#include "lacolor/families.hpp"

namespace lacolor {

inline std::vector<FamilySpec> default_grid(Family f) {
  std::vector<FamilySpec> out;
  auto k_range = [&](int lo, int hi) {
    for (int k = lo; k <= hi; ++k) out.push_back({f, {.k = k}});
  };
  auto n_range = [&](int lo, int hi) {
    for (int n = lo; n <= hi; ++n) out.push_back({f, {.n = n}});
  };
  auto rs = [&](std::initializer_list<std::pair<int, int>> pts) {
    for (auto [r, s] : pts) out.push_back({f, {.r = r, .s = s}});
  };

  switch (f) {
    case Family::FBUnits: k_range(1, 12); break;
    case Family::FB: k_range(1, 12); break;
    case Family::RFB:
    case Family::FB1:
    case Family::FB2:
      rs({{2, 2}, {3, 2}, {4, 2}, {5, 2}, {6, 2}, {2, 4}, {3, 4}, {5, 4}, {2, 6}, {3, 6},
          {7, 2}, {4, 6}, {2, 10}, {6, 4}});
      break;
    case Family::RDF:
      rs({{1, 2}, {2, 1}, {1, 3}, {2, 2}, {3, 2}, {3, 3}, {4, 2}, {1, 6}, {5, 3}, {2, 7},
          {6, 5}, {4, 1}});
      break;
    case Family::DFr:
      rs({{1, 2}, {1, 4}, {2, 2}, {3, 2}, {1, 6}, {2, 4}, {4, 2}, {3, 4}, {5, 2}, {2, 6},
          {1, 10}});
      break;
    case Family::DF1:  // s even, rs not 0 mod 4
      rs({{3, 2}, {5, 2}, {7, 2}, {9, 2}, {11, 2}, {13, 2}, {3, 6}, {5, 6}, {7, 6}, {9, 6},
          {15, 2}});
      break;
    case Family::DF2:  // s even, r not 0 mod 4
      rs({{2, 2}, {3, 2}, {5, 2}, {6, 2}, {7, 2}, {2, 4}, {3, 4}, {5, 4}, {6, 4}, {2, 6},
          {3, 6}, {9, 2}});
      break;
    case Family::DF3:
      rs({{2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 3}, {5, 2}, {2, 5}, {6, 4},
          {7, 3}});
      break;
    case Family::DF4:
      rs({{2, 1}, {2, 2}, {2, 3}, {4, 1}, {4, 2}, {4, 3}, {6, 1}, {6, 2}, {8, 3}, {2, 10},
          {10, 5}});
      break;
    case Family::NC482: n_range(1, 12); break;
    case Family::G1:
    case Family::G2:
      rs({{1, 2}, {2, 2}, {3, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 3}, {2, 5}, {5, 2}, {1, 6},
          {6, 5}, {10, 3}});
      break;
    case Family::H1:
    case Family::H2:
    case Family::H3:
      n_range(1, 12);
      break;
    case Family::HmRS:
      for (int m = 1; m <= 3; ++m) {
        for (auto [r, s] : {std::pair{1, 2}, {2, 2}, {3, 2}, {2, 3}, {5, 6}}) {
          out.push_back({f, {.r = r, .s = s, .m = m}});
        }
      }
      break;
    case Family::C8Units:
    case Family::Bk:
    case Family::KC82:
    case Family::KD82:
      k_range(1, 12);
      break;
    case Family::RG82:
      rs({{1, 2}, {2, 2}, {3, 2}, {1, 4}, {2, 4}, {4, 2}, {3, 4}, {1, 6}, {5, 2}, {2, 6},
          {6, 10}});
      break;
    case Family::OddKH:
      rs({{1, 3}, {3, 1}, {1, 5}, {5, 1}, {3, 3}, {1, 7}, {7, 1}, {1, 9}, {3, 5}, {5, 3},
          {3, 19}});
      break;
  }
  return out;
}

inline std::vector<FamilySpec> default_grid() {
  std::vector<FamilySpec> out;
  for (Family f : kAllFamilies) {
    auto pts = default_grid(f);
    out.insert(out.end(), pts.begin(), pts.end());
  }
  return out;
}

}  // namespace lacolor
