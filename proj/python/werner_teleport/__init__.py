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

"""Teleportation of a mixed qubit over a Werner-like two-qubit resource."""

from ._core import (
    DegenerateOutcome,
    DensityError,
    FidelityReport,
    InformationState,
    InvalidArgument,
    MinimaxResult,
    OutcomeRecord,
    UnitaryAngles,
    WernerResource,
    average_fidelity_numeric,
    bell_projector,
    classical_threshold,
    concurrence_werner,
    correction_unitary,
    f_av_max,
    f_max,
    fidelity_closed_form,
    fidelity_gap,
    information_state,
    masfi,
    min_over_information,
    minimax_search,
    purity,
    run_protocol,
    sweep,
    verify,
    werner_state,
    wootters_concurrence,
)

__all__ = [name for name in dir() if not name.startswith("_")]
