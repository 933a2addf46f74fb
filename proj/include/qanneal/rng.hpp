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

// Reproducible random streams. The engine is std::mt19937_64 (its output
// sequence is fixed by the standard); the distributions below are written
// out so results do not depend on the standard library implementation.

#include <cstdint>
#include <random>

namespace qanneal {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

/// Seed of stream `index` under `master`; independent of evaluation order.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Uniform integer in [0, bound), bound > 0.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(Rng& rng);

/// Standard normal deviate (Box-Muller, one value per call).
double standard_normal(Rng& rng);

}  // namespace qanneal
