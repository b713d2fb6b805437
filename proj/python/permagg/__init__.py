# Copyright 2026 The permagg Authors
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

"""Permutation-group neighbor aggregation and substructure counting."""

import json

from ._permagg import *  # noqa: F401,F403
from ._permagg import (
    __version__,
    _coverage_json,
    _distinguish_json,
    _estimate_json,
)


def coverage(n, variant="sigma"):
    """Coverage report for the arrangements generated on n neighbors."""
    return json.loads(_coverage_json(n, variant))


def estimate(g, node, r=100000, seeds=1, seed=0):
    """Random-walk incidence triangle estimate, averaged over seeds."""
    return json.loads(_estimate_json(g, node, r, seeds, seed))


def distinguish(a, b, channels=(), seed=0):
    return json.loads(_distinguish_json(a, b, list(channels), seed))
