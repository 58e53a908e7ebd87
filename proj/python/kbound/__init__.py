# Copyright 2026 The kbound Authors.
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

"""Exact circuit imbalance, incidence, design and Graver computations.

Matrices, point sets and IP instances are the JSON documents used by the
command-line tool, passed as dicts (or JSON strings). Results are dicts.
"""

import json

from . import _kbound
from ._kbound import GuardExceeded, KboundError, PreconditionError

__all__ = [
    "GuardExceeded",
    "KboundError",
    "PreconditionError",
    "check_sg",
    "chibar",
    "delta",
    "deltamod",
    "design_build",
    "design_check",
    "design_rankcheck",
    "dowling",
    "graver",
    "grid",
    "half_circle",
    "incidence_complete",
    "integer_matrix",
    "ip_instance",
    "kappa",
    "lines",
    "longest_line",
    "maxlines",
    "minor_chain",
    "project_kernel",
    "proximity",
    "random_config",
    "random_integer_matrix",
    "scale",
    "suite_names",
    "verify",
]


def _doc(x):
    return x if isinstance(x, str) else json.dumps(x)


def _call(fn, *args, **kwargs):
    return json.loads(fn(*args, **kwargs))


def integer_matrix(rows):
    """Matrix document for a list of integer rows."""
    return {"field": "rational", "data": [[str(v) for v in row] for row in rows]}


def kappa(matrix, method="auto"):
    return _call(_kbound.kappa, _doc(matrix), method)


def delta(matrix):
    return _call(_kbound.delta, _doc(matrix))


def deltamod(matrix):
    return _call(_kbound.deltamod, _doc(matrix))


def chibar(matrix, trials=1000, seed=42):
    """Sampled lower estimate; not the supremum."""
    return _kbound.chibar(_doc(matrix), trials, seed)


def project_kernel(matrix, j):
    return _call(_kbound.project_kernel, _doc(matrix), list(j))


def lines(points):
    return _call(_kbound.lines, _doc(points))


def maxlines(points):
    return _call(_kbound.maxlines, _doc(points))


def check_sg(points):
    return _call(_kbound.check_sg, _doc(points))


def minor_chain(matroid_or_points):
    return _call(_kbound.minor_chain, _doc(matroid_or_points))


def longest_line(matroid_or_points):
    return _call(_kbound.longest_line, _doc(matroid_or_points))


def design_check(matrix):
    return _call(_kbound.design_check, _doc(matrix))


def design_build(points):
    return _call(_kbound.design_build, _doc(points))


def design_rankcheck(matrix):
    return _call(_kbound.design_rankcheck, _doc(matrix))


def scale(matrix, row_cap, eps=1e-9, max_iter=100000):
    return _call(_kbound.scale, _doc(matrix), str(row_cap), eps, max_iter)


def graver(matrix):
    return _call(_kbound.graver, _doc(matrix))


def proximity(ip):
    return _call(_kbound.proximity, _doc(ip))


def dowling(d, t):
    return _call(_kbound.dowling, d, t)


def half_circle(n):
    return _call(_kbound.half_circle, n)


def incidence_complete(v):
    return _call(_kbound.incidence_complete, v)


def grid(side):
    return _call(_kbound.grid, side)


def random_config(d, n, seed=42):
    return _call(_kbound.random_config, d, n, seed)


def random_integer_matrix(d, n, lo=-3, hi=3, seed=42):
    return _call(_kbound.random_integer_matrix, d, n, lo, hi, seed)


def ip_instance(d, n, seed=42, duplicate_column=False):
    return _call(_kbound.ip_instance, d, n, seed, duplicate_column)


def suite_names():
    return list(_kbound.suite_names())


def verify(suites=("all",), seed=42):
    if isinstance(suites, str):
        suites = [suites]
    return _call(_kbound.verify, list(suites), seed)
