# Copyright 2026 The mbeam Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http:#www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


"""Correlated-beam opportunistic beamforming: frames, channel simulation and extreme-value analysis."""

import json as _json

from mbeam._core import (
    ConvergenceError,
    InvalidArgument,
    SinrModel,
    __version__,
    extreme_cdf,
    extreme_pdf,
    frame_correlation,
    frame_label,
    frame_matrix,
    gumbel_params,
    kl_divergence,
    monte_carlo,
    optimal_row_search,
    registered_constructions,
    throughput_closed_form,
    throughput_exact_max_law,
    throughput_lower_numeric,
    throughput_upper_numeric,
    welch_lower_bound,
)
from mbeam._core import _run_criterion as _core_run_criterion
from mbeam._core import _run_experiment as _core_run_experiment


def run_experiment(spec, threads=0):
    """Run an experiment spec given as a dict; returns the JSON document as a dict."""
    return _json.loads(_core_run_experiment(_json.dumps(spec), threads))


def run_table1():
    """Rows of the correlation comparison table."""
    return run_experiment({"kind": "table1"})["rows"]


def verify(criterion, seed=42, slots=20000):
    """Verdict for one acceptance criterion (0 runs the invariant suite)."""
    return _json.loads(_core_run_criterion(criterion, seed, slots))

__all__ = [
    "ConvergenceError",
    "InvalidArgument",
    "SinrModel",
    "extreme_cdf",
    "extreme_pdf",
    "frame_correlation",
    "frame_label",
    "frame_matrix",
    "gumbel_params",
    "kl_divergence",
    "monte_carlo",
    "optimal_row_search",
    "registered_constructions",
    "run_experiment",
    "run_table1",
    "throughput_closed_form",
    "throughput_exact_max_law",
    "throughput_lower_numeric",
    "throughput_upper_numeric",
    "verify",
    "welch_lower_bound",
]
