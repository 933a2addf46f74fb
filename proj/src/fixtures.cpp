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

#include "qanneal/fixtures.hpp"

#include "qanneal/errors.hpp"
#include "qanneal/instance_io.hpp"

namespace qanneal {

namespace {

// Zero entries are kept as listed in the source table.
constexpr std::string_view kProblem709 = R"(n 12
h 1 0
h 2 1
h 3 0
h 4 0
h 5 -1
h 6 0
h 7 -4
h 8 -1
h 9 -1
h 10 -1
h 11 1
h 12 0
J 1 4 1
J 1 11 1
J 2 7 1
J 3 7 -1
J 3 11 -1
J 4 9 -1
J 5 7 -1
J 6 7 -1
J 6 10 1
J 7 8 -1
J 7 12 1
J 9 11 1
J 9 12 -1
)";

constexpr std::string_view kProblem950 = R"(n 12
h 1 1
h 2 4
h 3 -1
h 4 1
h 5 -1
h 6 -1
h 7 -1
h 8 -1
h 9 1
h 10 1
h 11 2
h 12 1
J 1 11 -1
J 2 4 -1
J 2 5 1
J 2 7 1
J 2 8 1
J 2 9 1
J 2 11 1
J 3 11 1
J 6 9 1
J 9 12 -1
J 10 11 -1
J 10 12 0
J 1 2 0
)";

constexpr std::string_view kProblem103 = R"(n 12
h 1 -1
h 2 1
h 3 -1
h 4 1
h 5 -1
h 6 -1
h 7 -1
h 8 0
h 9 1
h 10 -1
h 11 2
h 12 -1
J 1 4 1
J 1 10 -1
J 1 11 -1
J 2 8 1
J 3 7 -1
J 3 8 1
J 3 9 -1
J 5 11 1
J 6 11 1
J 9 11 1
J 9 12 1
J 1 2 0
J 1 3 0
)";

constexpr std::string_view kProblem99 = R"(n 12
h 1 1
h 2 1
h 3 -1
h 4 0
h 5 0
h 6 1
h 7 1
h 8 0
h 9 -2
h 10 -1
h 11 0
h 12 0
J 1 9 1
J 2 9 1
J 3 4 -1
J 4 11 1
J 5 6 1
J 5 8 -1
J 7 9 1
J 7 10 0
J 8 12 1
J 9 10 1
J 10 11 1
J 10 12 -1
J 1 2 0
)";

}  // namespace

std::string_view fixture_text(int label) {
  switch (label) {
    case 709: return kProblem709;
    case 950: return kProblem950;
    case 103: return kProblem103;
    case 99: return kProblem99;
    default: throw ValidationError("no fixture with label " + std::to_string(label));
  }
}

SpinProblem fixture_problem(int label) {
  SpinProblem problem = parse_tabular(fixture_text(label));
  problem.label = std::to_string(label);
  return problem;
}

}  // namespace qanneal
