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

import math

import pytest

import qanneal


def test_fixture_ground_state():
    p = qanneal.fixture(709)
    assert p.n == 12
    truth = qanneal.brute_force_solve(p)
    assert truth.degeneracy == 1
    assert truth.energy == pytest.approx(-13.0)


def test_generate_is_deterministic():
    a, ta = qanneal.generate(6, 11)
    b, tb = qanneal.generate(6, 11)
    assert [(c.i, c.j, c.value) for c in a.couplings] == [(c.i, c.j, c.value) for c in b.couplings]
    assert ta.bitstring == tb.bitstring
    assert ta.degeneracy == 1


def test_anneal_small_instance():
    p, _ = qanneal.generate(5, 3)
    slow = qanneal.anneal(p, t_anneal=200.0)
    fast = qanneal.anneal(p, t_anneal=1.0)
    assert abs(slow["final_norm"] - 1.0) < 1e-10
    assert 0.0 <= fast["p"] <= 1.0
    assert slow["p"] > fast["p"]


def test_lowest_at_start():
    p, _ = qanneal.generate(4, 1)
    e = qanneal.lowest(p, s=0.0, k=2)
    assert e[0] == pytest.approx(-4.0, abs=1e-9)


def test_gap_profile_shape():
    p, _ = qanneal.generate(5, 8)
    prof = qanneal.gap_profile(p, grid=101, refine=False)
    assert len(prof["s"]) == len(prof["gap"]) >= 101
    assert prof["delta_min"] == pytest.approx(min(prof["gap"]))
    assert prof["stretch_width"] >= 0.0


def test_lz_fit_recovers_model():
    delta = [0.02 * (k + 1) for k in range(12)]
    p = [1.0 - math.exp(-50.0 * d**2) for d in delta]
    fit = qanneal.lz_fit(delta, p)
    assert fit["converged"]
    assert fit["a"] == pytest.approx(50.0, rel=1e-6)
    assert fit["b"] == pytest.approx(2.0, rel=1e-6)


def test_twospin_endpoint():
    e = qanneal.twospin_spectrum(1.0, 1.0, 1.0, 1.0, 0.0)
    assert e == pytest.approx([-2.0, 0.0, 0.0, 2.0], abs=1e-12)


def test_errors_map_to_exceptions():
    with pytest.raises(qanneal.ValidationError):
        qanneal.generate(40, 1)
    with pytest.raises(qanneal.ValidationError):
        qanneal.anneal(qanneal.fixture(950), trigger="ferro", g=-1.0)
    with pytest.raises(qanneal.Error):
        qanneal.fixture(1)
