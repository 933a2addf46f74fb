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

// Instance files.
//
// Tabular format (whitespace separated, '#' starts a comment line):
//   n <N>
//   h <i> <h_i>         one per spin, missing spins default to 0
//   J <i> <j> <J_ij>    i != j; written back with i < j
//
// Structured format: one JSON document
//   {"n": N, "h_z": [...], "z_couplings": [[i, j, J], ...],
//    "y_coupling_strength": y, "label": "...", "seed": 123}

#include <filesystem>
#include <string>
#include <string_view>

#include "qanneal/problem.hpp"

namespace qanneal {

enum class InstanceFormat { Tabular, Structured };

SpinProblem parse_tabular(std::string_view text);
std::string serialize_tabular(const SpinProblem& problem);

SpinProblem parse_structured(std::string_view text);
std::string serialize_structured(const SpinProblem& problem);

/// Detects the format from the first non-blank character.
InstanceFormat detect_format(std::string_view text);
SpinProblem parse_instance(std::string_view text);
std::string serialize_instance(const SpinProblem& problem, InstanceFormat format);

SpinProblem load_instance(const std::filesystem::path& path);
void save_instance(const std::filesystem::path& path, const SpinProblem& problem,
                   InstanceFormat format);

/// Shortest round-trip decimal form; "-0" is written as "0".
std::string format_number(double value);

}  // namespace qanneal
