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

// Reference tables typed in by hand.

#include <array>

#include "lacolor/graph.hpp"

namespace lacolor::golden {

// 5 x 12 labels of twelve fan units, rows uw, vw, xw, xu, xv.
inline constexpr std::array<std::array<Label, 12>, 5> kFan6{{
    {1, 7, 8, 9, 10, 11, 2, 3, 4, 5, 6, 12},
    {36, 37, 38, 39, 40, 41, 43, 44, 45, 46, 47, 48},
    {42, 35, 33, 31, 29, 27, 34, 32, 30, 28, 26, 19},
    {60, 54, 53, 52, 51, 50, 59, 58, 57, 56, 55, 49},
    {25, 24, 23, 22, 21, 20, 18, 17, 16, 15, 14, 13},
}};

// T_1 .. T_12 at n = 6.
inline constexpr std::array<std::array<Label, 12>, 12> kSeq6{{
    {1, 97, 83, 38, 108, 36, 85, 13, 84, 37, 24, 120},
    {2, 98, 81, 40, 107, 35, 86, 14, 82, 39, 23, 119},
    {3, 99, 79, 42, 106, 34, 87, 15, 80, 41, 22, 118},
    {4, 100, 77, 44, 105, 33, 88, 16, 78, 43, 21, 117},
    {5, 101, 75, 46, 104, 32, 89, 17, 76, 45, 20, 116},
    {6, 102, 73, 48, 103, 31, 90, 18, 74, 47, 19, 115},
    {25, 97, 60, 61, 108, 12, 109, 13, 59, 62, 24, 96},
    {26, 98, 58, 63, 107, 11, 110, 14, 57, 64, 23, 95},
    {27, 99, 56, 65, 106, 10, 111, 15, 55, 66, 22, 94},
    {28, 100, 54, 67, 105, 9, 112, 16, 53, 68, 21, 93},
    {29, 101, 52, 69, 104, 8, 113, 17, 51, 70, 20, 92},
    {30, 102, 50, 71, 103, 7, 114, 18, 49, 72, 19, 91},
}};

// 4 x 10 labels of four 8-cycle units.
inline constexpr std::array<std::array<Label, 10>, 4> kCycle4{{
    {1, 24, 17, 9, 32, 8, 33, 40, 28, 13},
    {5, 25, 16, 10, 31, 4, 37, 36, 23, 18},
    {6, 26, 15, 11, 30, 3, 38, 35, 21, 20},
    {7, 27, 14, 12, 29, 2, 39, 34, 19, 22},
}};

}  // namespace lacolor::golden
