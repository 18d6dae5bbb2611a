"""Subset sum with repetition over multisets, with oracle access.

The target multiset must be written as a non-negative integer combination
of family multisets.  The family may be given explicitly (brute-force
enumeration) or through an oracle bundle; with the triangular structure
(every family member has a unique minimal element under a total preorder,
and that assignment is injective) the solver peels one minimal support
element per iteration and the solution, when it exists, is unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional

from .multiset import Multiset


@dataclass(frozen=True)
class OracleBundle:
    """Oracle access to a subset-sum family.

    equiv      -- equivalence of key encodings (same universe element)
    f_oracle   -- index key -> family multiset
    precedes   -- total preorder on universe keys (triangular instances)
    tri_oracle -- universe key -> index key whose family member has it as
                  unique minimal element, or None for Error
    """

    equiv: Callable
    f_oracle: Callable
    precedes: Optional[Callable] = None
    tri_oracle: Optional[Callable] = None


@dataclass(frozen=True)
class SsrInstance:
    """A target multiset together with its oracle bundle."""

    target: Multiset
    oracles: OracleBundle


def consolidate(multisets: Iterable[Multiset], equiv) -> list[Multiset]:
    """Re-key multisets so at most one encoding per equivalence class
    appears across all supports.

    The representative of each class is the first encoding encountered in
    input order.  At most (total support)^2 equiv calls.
    """
    reps: list = []

    def rep_of(key):
        for r in reps:
            if r == key or equiv(r, key):
                return r
        reps.append(key)
        return key

    return [ms.map_keys(rep_of) for ms in multisets]


def remove(k: Multiset, f: Multiset, count: int, equiv) -> Multiset | None:
    """Consolidated k minus count copies of f; None when that would drive
    any multiplicity negative."""
    k2, f2 = consolidate([k, f], equiv)
    return k2.subtract(f2, count)


def tri_solve(k: Multiset, oracles: OracleBundle) -> Multiset | None:
    """Solve a triangular-oracle instance; the unique solution or None.

    Repeatedly: take a minimal element u of the remaining target under the
    preorder, look up the family member whose minimal element is u, remove
    the forced number of copies.  Fails (None) when the inverse lookup
    errors, the copy count is non-integral, or a removal would go negative.
    """
    if oracles.precedes is None or oracles.tri_oracle is None:
        raise ValueError("triangular solve requires precedes and tri_oracle")
    precedes = oracles.precedes
    (k,) = consolidate([k], oracles.equiv)
    solution = Multiset()
    while not k.is_empty:
        support = k.support()
        u = support[0]
        for w in support[1:]:
            if precedes(w, u) and not precedes(u, w):
                u = w
        v = oracles.tri_oracle(u)
        if v is None:
            return None
        f = oracles.f_oracle(v)
        k2, f2 = consolidate([k, f], oracles.equiv)
        fu = f2.mult(u)
        if fu == 0 or k2.mult(u) % fu != 0:
            return None
        count = k2.mult(u) // fu
        nxt = k2.subtract(f2, count)
        if nxt is None:
            return None
        solution = solution.add(Multiset({v: count}))
        k = nxt
    return solution


def brute_subsum(k: Multiset, family, limit: int | None = None) -> list[Multiset]:
    """All (up to ``limit``) solutions over an explicit family.

    ``family`` is a sequence of (index, Multiset) pairs sharing exact keys
    with ``k`` (consolidate first when encodings are non-unique).  Searches
    coefficient vectors depth-first in family order, coefficients
    ascending, so the output order is deterministic.
    """
    family = list(family)
    solutions: list[Multiset] = []

    def rec(i: int, remaining: Multiset, chosen: list):
        if limit is not None and len(solutions) >= limit:
            return
        if i == len(family):
            if remaining.is_empty:
                solutions.append(Multiset(
                    [(idx, c) for idx, c in chosen if c]))
            return
        idx, f = family[i]
        if f.is_empty:
            rec(i + 1, remaining, chosen + [(idx, 0)])
            return
        c = 0
        cur = remaining
        while cur is not None:
            rec(i + 1, cur, chosen + [(idx, c)])
            c += 1
            cur = cur.subtract(f)
    rec(0, k, [])
    return solutions


def threshold_enumerate(producer: Iterator, k: int):
    """Threshold-k enumeration: (count, all items) when at most k exist,
    else ("more", first k items).  Consumes at most k+1 items."""
    if k < 0:
        raise ValueError("k must be >= 0")
    out = []
    for item in producer:
        if len(out) == k:
            return "more", out
        out.append(item)
    return len(out), out
