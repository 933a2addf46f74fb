// Copyright 2026 The qanneal Authors
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

// Four 12-spin problem Hamiltonians used as regression fixtures.

#include <array>
#include <string_view>

#include "qanneal/problem.hpp"

namespace qanneal {

inline constexpr std::array<int, 4> kFixtureLabels = {709, 950, 103, 99};

/// Tabular instance text for fixture `label`; throws ValidationError if unknown.
std::string_view fixture_text(int label);

/// Parsed fixture with its label set.
SpinProblem fixture_problem(int label);

}  // namespace qanneal
