"""Lightweight operation counters for audit reports.

Counters make the polynomial-cost claims observable: oracle calls,
conjugacy tests and BFS nodes are tallied wherever a function accepts a
``counters`` argument.  Passing None disables counting.
"""

from __future__ import annotations


class Counters:
    """A named tally of operation counts."""

    def __init__(self):
        self.counts: dict[str, int] = {}

    def bump(self, name: str, amount: int = 1):
        self.counts[name] = self.counts.get(name, 0) + amount

    def get(self, name: str) -> int:
        return self.counts.get(name, 0)

    def as_dict(self) -> dict[str, int]:
        return dict(sorted(self.counts.items()))

    def __repr__(self) -> str:
        return f"Counters({self.as_dict()})"
