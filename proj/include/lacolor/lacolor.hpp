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

#include "lacolor/expected_colors.hpp"
#include "lacolor/families.hpp"
#include "lacolor/graph.hpp"
#include "lacolor/grid.hpp"
#include "lacolor/io.hpp"
#include "lacolor/matrix.hpp"
#include "lacolor/search.hpp"
#include "lacolor/verifier.hpp"
