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

#include <cstddef>
#include <vector>

#include "lacolor/graph.hpp"

namespace lacolor {

/// One claimed color class: every vertex of `degree` in the class carries
/// `value`, and the class has exactly `size` vertices.
struct ExpectedClass {
  Label value = 0;
  std::size_t size = 0;
  std::size_t degree = 0;

  friend bool operator==(const ExpectedClass&, const ExpectedClass&) = default;
};

/// What a construction claims about its induced coloring.
struct ExpectedColors {
  std::vector<ExpectedClass> classes;
  std::size_t claimed_colors = 0;
  bool at_most = false;  // claim is "<= claimed_colors" rather than "exactly"

  friend bool operator==(const ExpectedColors&, const ExpectedColors&) = default;
};

}  // namespace lacolor
