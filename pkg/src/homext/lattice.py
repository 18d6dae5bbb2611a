"""Subgroup lattice enumeration up to conjugacy, bottom-up.

Every subgroup is reached by repeatedly adjoining one element to a smaller
subgroup, so seeding with the trivial group and extending class
representatives by double-coset representatives of new elements visits
every conjugacy class.  Candidates are deduplicated by their full element
sets; each new class is registered together with all its conjugates so
later hits are O(1).

Intended for desk scale (|G| up to a few thousand); the homext brute mode
and the test oracles both rely on it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import Permutation, PermGroup, _identity, _inv, _mul, reduce_generators_list


@dataclass(frozen=True)
class SubgroupClass:
    """One conjugacy class of subgroups: a representative plus its size."""

    rep: PermGroup
    order: int
    conjugate_count: int


def _closure(gens: list[tuple], degree: int) -> frozenset:
    elems = {_identity(degree)}
    frontier = [_identity(degree)]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = _mul(a, g)
                if b not in elems:
                    elems.add(b)
                    nxt.append(b)
        frontier = nxt
    return frozenset(elems)


_lattice_cache: dict = {}


def subgroup_classes(group: PermGroup, max_index: int | None = None) -> list[SubgroupClass]:
    """Conjugacy-class representatives of all subgroups of ``group``.

    ``max_index`` filters the returned classes; the full lattice is always
    explored.  Deterministic: classes appear in discovery order (ascending
    representative order within each extension layer).  Full lattices are
    memoized by group signature (groups are immutable).
    """
    sig = group.signature()
    cached = _lattice_cache.get(sig)
    if cached is not None:
        if max_index is None:
            return list(cached)
        order = group.order()
        return [c for c in cached if order // c.order <= max_index]
    degree = group.degree
    gen_tuples = [g.images for g in group.generators]
    gen_invs = [_inv(g) for g in gen_tuples]
    elements = sorted(_closure(gen_tuples, degree))
    order = len(elements)

    # class registry: every conjugate's element set maps to its class id
    seen: dict[frozenset, int] = {}
    class_gens: list[list[tuple]] = []
    class_sets: list[frozenset] = []
    class_conj_counts: list[int] = []

    def register(subset: frozenset, gens: list[tuple]) -> bool:
        """Register a subgroup's class; True when the class is new."""
        if subset in seen:
            return False
        cid = len(class_sets)
        orbit = {subset}
        queue = [subset]
        while queue:
            s = queue.pop()
            for g, gi in zip(gen_tuples, gen_invs):
                conj = frozenset(_mul(_mul(gi, x), g) for x in s)
                if conj not in orbit:
                    orbit.add(conj)
                    queue.append(conj)
        for s in orbit:
            seen[s] = cid
        class_gens.append(gens)
        class_sets.append(subset)
        class_conj_counts.append(len(orbit))
        return True

    identity = _identity(degree)
    register(frozenset([identity]), [])

    # cyclic subgroups seed the layers
    worklist = [0]
    for x in elements:
        if x == identity:
            continue
        cyc = [x]
        y = _mul(x, x)
        while y != identity:
            cyc.append(y)
            y = _mul(y, x)
        cyc.append(identity)
        if register(frozenset(cyc), [x]):
            worklist.append(len(class_sets) - 1)

    # extend each class rep by double-coset representatives of new elements
    idx = 0
    while idx < len(worklist):
        cid = worklist[idx]
        idx += 1
        h_set = class_sets[cid]
        h_gens = class_gens[cid]
        if len(h_set) == order:
            continue
        processed = set(h_set)
        for g in elements:
            if g in processed:
                continue
            # mark the whole double coset HgH; any member extends H equally
            hg = [_mul(h, g) for h in h_set]
            for a in hg:
                for h in h_set:
                    processed.add(_mul(a, h))
            new_gens = h_gens + [g]
            subset = _closure(new_gens, degree)
            if register(subset, new_gens):
                worklist.append(len(class_sets) - 1)

    full = []
    for cid in range(len(class_sets)):
        sz = len(class_sets[cid])
        gens = [Permutation(t) for t in class_gens[cid]]
        rep = PermGroup(reduce_generators_list(gens, degree), degree)
        full.append(SubgroupClass(rep, sz, class_conj_counts[cid]))
    _lattice_cache[sig] = full
    if max_index is None:
        return list(full)
    return [c for c in full if order // c.order <= max_index]


def low_index_classes(group: PermGroup, max_index: int) -> list[SubgroupClass]:
    """Classes of subgroups with index at most ``max_index``, largest first."""
    classes = subgroup_classes(group, max_index=max_index)
    return sorted(classes, key=lambda c: (group.order() // c.order,
                                          c.rep.signature()))


def subgroup_count(group: PermGroup) -> int:
    """Total number of subgroups (all conjugates counted)."""
    return sum(c.conjugate_count for c in subgroup_classes(group))
