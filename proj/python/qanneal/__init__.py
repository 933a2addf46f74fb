# Copyright 2026 The qanneal Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python bindings for the qanneal simulator."""

from ._qanneal import (
    Coupling,
    Error,
    GroundTruth,
    NumericalError,
    SpinProblem,
    ValidationError,
    __version__,
    anneal,
    brute_force_solve,
    fixture,
    gap_profile,
    generate,
    load_instance,
    lowest,
    lz_fit,
    twospin_spectrum,
)

__all__ = [
    "Coupling",
    "Error",
    "GroundTruth",
    "NumericalError",
    "SpinProblem",
    "ValidationError",
    "__version__",
    "anneal",
    "brute_force_solve",
    "fixture",
    "gap_profile",
    "generate",
    "load_instance",
    "lowest",
    "lz_fit",
    "twospin_spectrum",
]
