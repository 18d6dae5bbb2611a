"""Immutable multisets over hashable keys.

Keys are opaque encodings: two distinct keys may encode the same universe
element, which is resolved by the consolidation pass in ``multissr`` using
an equivalence oracle.  Multiplicities are positive arbitrary-precision
integers; zero entries are never stored.
"""

from __future__ import annotations


class Multiset:
    """Mapping from keys to positive integer multiplicities."""

    __slots__ = ("_entries",)

    def __init__(self, entries=None):
        data: dict = {}
        if entries:
            items = entries.items() if isinstance(entries, dict) else entries
            for key, mult in items:
                if mult < 0:
                    raise ValueError(f"negative multiplicity for {key!r}")
                if mult:
                    data[key] = data.get(key, 0) + mult
        object.__setattr__(self, "_entries", data)

    def __setattr__(self, *a):
        raise AttributeError("Multiset is immutable")

    @staticmethod
    def from_elements(elements) -> "Multiset":
        return Multiset((e, 1) for e in elements)

    @property
    def entries(self) -> dict:
        return dict(self._entries)

    def support(self) -> list:
        """Keys with positive multiplicity, in insertion order."""
        return list(self._entries)

    def mult(self, key) -> int:
        return self._entries.get(key, 0)

    __getitem__ = mult

    def __contains__(self, key) -> bool:
        return key in self._entries

    @property
    def size(self) -> int:
        """The 1-norm: total multiplicity."""
        return sum(self._entries.values())

    @property
    def is_empty(self) -> bool:
        return not self._entries

    def add(self, other: "Multiset") -> "Multiset":
        out = dict(self._entries)
        for k, v in other._entries.items():
            out[k] = out.get(k, 0) + v
        return Multiset(out)

    def scaled(self, c: int) -> "Multiset":
        if c < 0:
            raise ValueError("negative scalar")
        if c == 0:
            return Multiset()
        return Multiset({k: v * c for k, v in self._entries.items()})

    def subtract(self, other: "Multiset", times: int = 1) -> "Multiset | None":
        """self - times*other, or None when any multiplicity would go
        negative.  Keys are compared exactly."""
        out = dict(self._entries)
        for k, v in other._entries.items():
            out[k] = out.get(k, 0) - times * v
            if out[k] < 0:
                return None
        return Multiset(out)

    def is_submultiset_of(self, other: "Multiset") -> bool:
        return all(other.mult(k) >= v for k, v in self._entries.items())

    def map_keys(self, f) -> "Multiset":
        """Re-key through f, merging multiplicities of collapsed keys."""
        return Multiset((f(k), v) for k, v in self._entries.items())

    def __eq__(self, other) -> bool:
        return isinstance(other, Multiset) and self._entries == other._entries

    def __hash__(self):
        return hash(frozenset(self._entries.items()))

    def __iter__(self):
        """Iterate over (key, multiplicity) pairs in insertion order."""
        return iter(self._entries.items())

    def __len__(self) -> int:
        """Support size."""
        return len(self._entries)

    def __repr__(self) -> str:
        inner = ", ".join(f"{k!r}: {v}" for k, v in self._entries.items())
        return "{{" + inner + "}}"
