"""JSON file formats for instances, extensions and explicit subset-sum
problems.

Permutations appear in cycle notation everywhere; points are 1-based.
"""

from __future__ import annotations

import json
import math
from typing import Any

from .extension import Extension, HomExtInstance
from .groups import Permutation, PermGroup, alt_group, parse_permutation
from .multiset import Multiset


def load_instance(path: str, *, mode_override: str | None = None,
                  index_bound_r: int | None = None,
                  brute_cap: int | None = None,
                  check_bounds: bool = True) -> HomExtInstance:
    """Read a homomorphism-extension instance file.

    Schema: {"n": int, "m": int,
             "G": {"alternating": true} | {"generators": [cycles...]},
             "gamma": [{"g": cycles, "image": cycles}, ...],
             "mode": "triangular"|"brute"}
    """
    with open(path) as fh:
        data = json.load(fh)
    return instance_from_dict(data, mode_override=mode_override,
                              index_bound_r=index_bound_r,
                              brute_cap=brute_cap, check_bounds=check_bounds)


def instance_from_dict(data: dict, *, mode_override: str | None = None,
                       index_bound_r: int | None = None,
                       brute_cap: int | None = None,
                       check_bounds: bool = True) -> HomExtInstance:
    n = int(data["n"])
    m = int(data["m"])
    gspec = data["G"]
    if gspec.get("alternating"):
        g_group = alt_group(range(1, n + 1), n)
    else:
        gens = [parse_permutation(s, n) for s in gspec["generators"]]
        g_group = PermGroup(gens, n)
    gamma = [(parse_permutation(e["g"], n), parse_permutation(e["image"], m))
             for e in data.get("gamma", [])]
    mode = mode_override or data.get("mode", "brute")
    kwargs: dict[str, Any] = {"check_bounds": check_bounds}
    if index_bound_r is not None:
        kwargs["index_bound_r"] = index_bound_r
    if brute_cap is not None:
        kwargs["brute_cap"] = brute_cap
    return HomExtInstance(n, m, g_group, gamma, mode, **kwargs)


def instance_to_dict(instance: HomExtInstance) -> dict:
    n = instance.n
    alt_order = math.factorial(n) // 2 if n >= 2 else 1
    is_alt = (instance.g_group.order() == alt_order
              and all(g.is_even for g in instance.g_group.generators))
    gspec = ({"alternating": True} if is_alt
             else {"generators": [str(g) for g in instance.g_group.generators]})
    return {
        "n": n,
        "m": instance.m,
        "G": gspec,
        "gamma": [{"g": str(a), "image": str(b)} for a, b in instance.gamma],
        "mode": instance.mode,
    }


def extension_to_dict(instance: HomExtInstance, ext: Extension) -> dict:
    return {
        "generators": [str(g) for g in instance.g_group.generators],
        "images": [str(p) for p in ext.images],
    }


def extension_from_dict(instance: HomExtInstance, data: dict) -> Extension:
    gens = [parse_permutation(s, instance.n) for s in data["generators"]]
    if [g.images for g in gens] != [g.images for g in instance.g_group.generators]:
        raise ValueError("extension file generators do not match the instance")
    images = [parse_permutation(s, instance.m) for s in data["images"]]
    if len(images) != len(gens):
        raise ValueError("one image per generator required")
    return Extension(tuple(images))


def solution_to_jsonable(solution: Multiset) -> list:
    """Solution multisets over subgroup-class keys, serialized as
    generator lists with multiplicities."""
    out = []
    for key, mult in solution:
        out.append({
            "subgroup_generators": [str(g) for g in key.rep.generators],
            "index": key.index,
            "multiplicity": mult,
        })
    return out


def load_multissr(path: str) -> dict:
    """Read an explicit subset-sum instance file.

    Schema: {"target": {name: mult}, "family": {index: {name: mult}},
             "ranks": {name: int}}     (ranks optional; enables the
    triangular solver with smaller rank meaning earlier removal).
    """
    with open(path) as fh:
        data = json.load(fh)
    target = Multiset({str(k): int(v) for k, v in data["target"].items()})
    family = {str(idx): Multiset({str(k): int(v) for k, v in ms.items()})
              for idx, ms in data.get("family", {}).items()}
    ranks = ({str(k): int(v) for k, v in data["ranks"].items()}
             if "ranks" in data else None)
    return {"target": target, "family": family, "ranks": ranks}
