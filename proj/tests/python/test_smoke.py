# Copyright 2026 The werner-teleport Authors
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

import numpy as np
import pytest

import werner_teleport as wt


def test_closed_form_values():
    assert wt.masfi(1.0, 1.0) == 1.0
    assert wt.masfi(0.0, 0.3) == 0.5
    assert wt.masfi(0.5, 0.8) == pytest.approx(0.6, abs=1e-12)
    assert wt.f_max(0.5) == 0.75
    assert wt.f_av_max(1.0, 0.6) == pytest.approx(0.8, abs=1e-15)
    assert wt.fidelity_gap(1.0, 0.4) == 0.0
    t = wt.classical_threshold(1.0)
    assert t["favmax_epsilon"] == pytest.approx(1 / 3, abs=1e-15)
    assert t["masfi_attainable"]
    assert math.isinf(wt.classical_threshold(0.0)["masfi_epsilon"])


def test_states_are_numpy_arrays():
    w = wt.werner_state(0.5)
    assert isinstance(w, np.ndarray)
    assert w.shape == (4, 4)
    expected = np.array(
        [[0.375, 0, 0, 0.25], [0, 0.125, 0, 0], [0, 0, 0.125, 0], [0.25, 0, 0, 0.375]]
    )
    assert np.abs(w - expected).max() == 0.0
    rho = wt.information_state(wt.InformationState(alpha=math.pi / 2, beta=0.0, gamma=1.0))
    assert np.allclose(rho, 0.5 * np.ones((2, 2)), atol=1e-15)
    assert wt.wootters_concurrence(w) == pytest.approx(0.25, abs=1e-10)
    assert wt.purity(rho) == pytest.approx(1.0, abs=1e-14)


def test_run_protocol_matches_closed_form():
    info = wt.InformationState(alpha=0.9, beta=2.1, gamma=0.6)
    resource = wt.WernerResource(epsilon=0.7)
    angles = wt.UnitaryAngles(chi=0.4, theta=0.5, phi=1.2, psi=0.3)
    report = wt.run_protocol(info, resource, angles)
    assert len(report.per_outcome) == 4
    assert sum(rec.probability for rec in report.per_outcome) == pytest.approx(1.0, abs=1e-12)
    closed = wt.fidelity_closed_form(0.9, 2.1, 0.6, 0.7, 0.5, 1.2, 0.3)
    assert abs(report.fidelity - closed) < 1e-10
    assert report.per_outcome[0].bob_state.shape == (2, 2)


def test_out_of_range_raises_value_error():
    with pytest.raises(ValueError):
        wt.masfi(1.5, 0.5)
    with pytest.raises(wt.InvalidArgument):
        wt.werner_state(-0.1)
    with pytest.raises(ValueError):
        wt.sweep("bogus")


def test_sweep_rows():
    rows = wt.sweep("masfi", (0.0, 1.0, 2), (0.0, 1.0, 2))
    assert rows == [(0.0, 0.0, 0.5), (0.0, 1.0, 0.5), (1.0, 0.0, 0.5), (1.0, 1.0, 1.0)]
    assert len(wt.sweep("gap")) == 51 * 51


def test_numeric_searches():
    assert wt.average_fidelity_numeric(0.5, 0.8, wt.UnitaryAngles()) == pytest.approx(0.7, abs=1e-8)
    value, alpha, beta = wt.min_over_information(0.5, 0.8, wt.UnitaryAngles())
    assert value == pytest.approx(0.6, abs=1e-12)
    result = wt.minimax_search(0.7, 0.9, outer_grid=9)
    assert abs(result.value - wt.masfi(0.7, 0.9)) < 1e-6


def test_verify_passes():
    report = wt.verify(seed=5, samples=200)
    assert report
    for name, entry in report.items():
        assert entry["passed"], name
        assert entry["cases"] > 0
