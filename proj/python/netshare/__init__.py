# Copyright 2026 The netshare Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Exact engine for network cost-sharing games.

Instances, profiles and reports are plain dicts in the netshare JSON format.
Rationals are "p/q" strings.
"""

import json
from os import PathLike
from typing import Any, Dict, List, Optional, Union

from . import _core
from ._core import NetshareError

__all__ = [
    "NetshareError",
    "analyze",
    "classify",
    "digest",
    "error_kind",
    "family_names",
    "generate",
    "is_nash",
    "load_instance",
    "paths",
    "perturb",
    "save_instance",
    "verify",
]

Instance = Union[Dict[str, Any], str, PathLike]


def _text(instance: Instance) -> str:
    if isinstance(instance, dict):
        return json.dumps(instance)
    with open(instance, encoding="utf-8") as f:
        return f.read()


def error_kind(exc: NetshareError) -> str:
    """Kind name of a library error, e.g. "PathExplosion"."""
    return str(exc).split(":", 1)[0]


def load_instance(path: Union[str, PathLike]) -> Dict[str, Any]:
    return json.loads(_text(path))


def save_instance(instance: Dict[str, Any], path: Union[str, PathLike]) -> None:
    with open(path, "w", encoding="utf-8") as f:
        json.dump(instance, f, indent=2)
        f.write("\n")


def generate(family: str, **params: Any) -> Dict[str, Any]:
    if "c" in params:
        params["c"] = str(params["c"])
    return json.loads(_core.generate(family, **params))


def analyze(instance: Instance, protocol: str = "", **options: Any) -> Dict[str, Any]:
    """Equilibrium report. The result also carries "tie_detected" and
    "missing_equilibrium" flags (the CLI maps them to exit codes 5 and 4)."""
    if "strictify" in options and options["strictify"] is not None:
        options["strictify"] = str(options["strictify"])
    report, ties, missing = _core.analyze(_text(instance), protocol, **options)
    out = json.loads(report)
    out["tie_detected"] = ties
    out["missing_equilibrium"] = missing
    return out


def is_nash(instance: Instance, protocol: str, profile: List[List[int]],
            max_paths: Optional[int] = None) -> Dict[str, Any]:
    args = {} if max_paths is None else {"max_paths": max_paths}
    return json.loads(_core.nash_check(_text(instance), protocol, json.dumps(profile), **args))


def verify(suite: str, seed: int = 42, **options: Any) -> Dict[str, Any]:
    return json.loads(_core.verify(suite, seed, **options))


def paths(instance: Instance, source: int, sink: int, **options: Any) -> List[List[int]]:
    return _core.paths(_text(instance), source, sink, **options)


def perturb(instance: Instance, r: int = 3) -> Dict[str, Any]:
    return json.loads(_core.perturb(_text(instance), r))


def digest(instance: Instance) -> str:
    return _core.digest(_text(instance))


def classify(values: List[Any]) -> Dict[str, bool]:
    return _core.classify([str(v) for v in values])


def family_names() -> List[str]:
    return list(_core.family_names())
