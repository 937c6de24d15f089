# Copyright 2026 The trigsip Authors.
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
"""Python front end for the trigsip solvers."""

import json

from . import _core
from ._core import catalog, constraint_violation, dft_coefficients, fourier_table, reference_value, run

__all__ = [
    "catalog",
    "constraint_violation",
    "dft_coefficients",
    "fourier_table",
    "reference_value",
    "run",
    "solve",
]


def solve(instance, **kwargs):
    """Solve a built-in example id or a JSON instance string; returns the report dict."""
    return json.loads(_core.solve(instance, **kwargs))
