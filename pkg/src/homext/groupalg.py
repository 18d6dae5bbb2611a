"""Subgroup-level algorithms over membership oracles.

Coset representatives for a recognizable subgroup (tower of groups),
normalizers, conjugacy tests, double cosets, centralizers in the full
symmetric group, and lex-first coset representative enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional

from .counters import Counters
from .errors import BoundExceededError, DegreeMismatchError, NotASubgroupError
from .groups import (
    Permutation,
    PermGroup,
    Subcoset,
    is_subgroup,
    reduce_generators,
    reduce_generators_list,
)


@dataclass(frozen=True)
class MembershipOracle:
    """A subgroup known only through a membership predicate."""

    degree: int
    test: Callable[[Permutation], bool]

    def __call__(self, p: Permutation) -> bool:
        return self.test(p)


@dataclass(frozen=True)
class CosetRepList:
    """Right-coset representatives of ``subgroup``, identity first."""

    subgroup: PermGroup
    reps: tuple

    def __len__(self) -> int:
        return len(self.reps)


def subgroup_from_membership(
    ambient: PermGroup,
    oracle: MembershipOracle | Callable[[Permutation], bool],
    index_bound: int,
    counters: Counters | None = None,
) -> tuple[PermGroup, CosetRepList]:
    """Generators and right-coset representatives of the subgroup M of
    ``ambient`` recognized by ``oracle``, provided [ambient : M] stays
    within ``index_bound``.

    Breadth-first search on the coset graph; Schreier's lemma turns the
    transversal into generators of M.
    """
    test = oracle.test if isinstance(oracle, MembershipOracle) else oracle
    gens = reduce_generators(ambient)
    identity = Permutation.identity(ambient.degree)
    reps: list[Permutation] = [identity]
    queue = [identity]
    edges: list[tuple[Permutation, Permutation, Permutation]] = []
    while queue:
        r = queue.pop(0)
        if counters is not None:
            counters.bump("coset_bfs_nodes")
        for g in gens:
            x = r * g
            target = None
            for r2 in reps:
                if test(x * r2.inverse()):
                    target = r2
                    break
            if target is None:
                if len(reps) >= index_bound:
                    raise BoundExceededError(
                        f"more than {index_bound} cosets found; wrong bound "
                        "or oracle is not a subgroup membership test")
                reps.append(x)
                queue.append(x)
                target = x
            edges.append((r, g, target))
    schreier = []
    seen = set()
    for r, g, target in edges:
        s = r * g * target.inverse()
        if not s.is_identity and s.images not in seen:
            seen.add(s.images)
            schreier.append(s)
    group = PermGroup(reduce_generators_list(schreier, ambient.degree),
                      ambient.degree)
    return group, CosetRepList(group, tuple(reps))


def normalizer(ambient: PermGroup, m: PermGroup,
               counters: Counters | None = None) -> PermGroup:
    """N_ambient(m), by filtering coset representatives g with
    g^-1 * S * g inside m for the generators S of m."""
    if not is_subgroup(m, ambient):
        raise NotASubgroupError("m is not a subgroup of ambient")
    index = ambient.order() // m.order()
    _, reps = subgroup_from_membership(ambient, m.contains, index, counters)
    keep = list(m.generators)
    for r in reps.reps:
        if all(m.contains(s.conj_by(r)) for s in m.generators):
            keep.append(r)
    return PermGroup(reduce_generators_list(keep, ambient.degree), ambient.degree)


def conjugacy_test(ambient: PermGroup, l: PermGroup, m: PermGroup,
                   counters: Counters | None = None) -> Optional[Permutation]:
    """A witness g in ambient with g^-1 * l * g = m, or None.

    The witness set, when non-empty, is a left coset of N_ambient(m), so
    inverses of right-coset representatives of the normalizer cover it.
    """
    if counters is not None:
        counters.bump("conjugacy_tests")
    if not is_subgroup(l, ambient) or not is_subgroup(m, ambient):
        raise NotASubgroupError("l and m must be subgroups of ambient")
    if l.order() != m.order():
        return None
    norm = normalizer(ambient, m, counters)
    index = ambient.order() // norm.order()
    _, reps = subgroup_from_membership(ambient, norm.contains, index, counters)
    for r in reps.reps:
        g = r.inverse()
        if all(m.contains(s.conj_by(g)) for s in l.generators):
            return g
    return None


def conjugate_count(ambient: PermGroup, m: PermGroup,
                    counters: Counters | None = None) -> int:
    """Number of conjugates of m in ambient: [ambient : N_ambient(m)]."""
    return ambient.order() // normalizer(ambient, m, counters).order()


def intersect_with_recognizable(
    a: PermGroup,
    oracle: MembershipOracle | Callable[[Permutation], bool],
    index_bound: int,
    counters: Counters | None = None,
) -> PermGroup:
    """Generators of the intersection of ``a`` with the oracle's subgroup."""
    group, _ = subgroup_from_membership(a, oracle, index_bound, counters)
    return group


def double_coset_membership(
    ambient: PermGroup,
    l: PermGroup,
    m: PermGroup,
    g: Permutation,
    h: Permutation,
    counters: Counters | None = None,
) -> bool:
    """True iff h lies in the double coset LgM.

    Uses h in LgM iff (g^-1 L g) meets M h^-1 g; the scan runs over coset
    representatives of L* cap M in L* = g^-1 L g.  When [ambient:L] is the
    smaller index the roles are swapped via h in LgM iff h^-1 in M g^-1 L.
    """
    if not ambient.contains(g):
        raise NotASubgroupError("g is not in the ambient group")
    if not ambient.contains(h):
        raise NotASubgroupError("h is not in the ambient group")
    index_m = ambient.order() // m.order()
    index_l = ambient.order() // l.order()
    if index_l < index_m:
        return double_coset_membership(ambient, m, l, g.inverse(), h.inverse(),
                                       counters)
    l_star = l.conjugated(g)
    g_star = h.inverse() * g
    _, reps = subgroup_from_membership(l_star, m.contains, index_m, counters)
    g_star_inv = g_star.inverse()
    for r in reps.reps:
        if m.contains(r * g_star_inv):
            return True
    return False


def double_coset_reps(ambient: PermGroup, l: PermGroup, m: PermGroup,
                      counters: Counters | None = None) -> list[Permutation]:
    """One representative per double coset of L\\ambient/M.

    Double cosets are the orbits of M acting by right multiplication on the
    right cosets of L (equivalently, of L acting on the left cosets of M),
    so the cheaper of the two coset spaces is enumerated and partitioned
    into orbits.  Within each double coset the lexicographically least
    coset representative encountered is kept; output in first-discovery
    order, so the identity's double coset comes first.
    """
    if not is_subgroup(l, ambient) or not is_subgroup(m, ambient):
        raise NotASubgroupError("l and m must be subgroups of ambient")
    index_l = ambient.order() // l.order()
    index_m = ambient.order() // m.order()
    if index_l <= index_m:
        # orbits of M on the right cosets L*r, acting by r -> r*a
        _, reps = subgroup_from_membership(ambient, l.contains, index_l,
                                           counters)
        cosets = list(reps.reps)

        def rep_of(x: Permutation) -> int:
            for i, r in enumerate(cosets):
                if l.contains(x * r.inverse()):
                    return i
            raise NotASubgroupError("coset scan failed")

        act = [lambda x, a=a: x * a for a in reduce_generators(m)]
    else:
        # orbits of L on the left cosets r^-1*M, acting by x -> a*x
        _, reps = subgroup_from_membership(ambient, m.contains, index_m,
                                           counters)
        cosets = [r.inverse() for r in reps.reps]

        def rep_of(x: Permutation) -> int:
            for i, r in enumerate(cosets):
                if m.contains(r.inverse() * x):
                    return i
            raise NotASubgroupError("coset scan failed")

        act = [lambda x, a=a: a * x for a in reduce_generators(l)]

    kept: list[Permutation] = []
    seen = [False] * len(cosets)
    for start in range(len(cosets)):
        if seen[start]:
            continue
        seen[start] = True
        best = cosets[start]
        queue = [cosets[start]]
        while queue:
            x = queue.pop(0)
            if counters is not None:
                counters.bump("double_coset_bfs_nodes")
            for move in act:
                y = move(x)
                j = rep_of(y)
                if not seen[j]:
                    seen[j] = True
                    if cosets[j] < best:
                        best = cosets[j]
                    queue.append(cosets[j])
        kept.append(best)
    return kept


# -- centralizers in the symmetric group -----------------------------------


def _propagate_isomorphism(gens: list[tuple], comp_a: list[int],
                           seed_a: int, seed_b: int) -> Optional[dict]:
    """Color-preserving isomorphism between the components of seed_a and
    seed_b in the permutation graph with one edge color per generator,
    grown from seed_a -> seed_b; None when the assignment breaks."""
    sigma = {seed_a: seed_b}
    used = {seed_b}
    queue = [seed_a]
    while queue:
        a = queue.pop(0)
        b = sigma[a]
        for g in gens:
            na, nb = g[a], g[b]
            if na in sigma:
                if sigma[na] != nb:
                    return None
            else:
                if nb in used:
                    return None
                sigma[na] = nb
                used.add(nb)
                queue.append(na)
    if len(sigma) != len(comp_a):
        return None
    return sigma


def centralizer_in_sym(g: PermGroup,
                       counters: Counters | None = None) -> PermGroup:
    """C_{S_m}(g) for the group's full symmetric group, via the colored
    permutation graph.

    Transitive components have semiregular automorphism groups found by
    seed-and-propagate; isomorphic components are glued by adjacent swap
    involutions, realizing the wreath-product automorphism group of the
    disconnected graph.
    """
    m = g.degree
    gens = [p.images for p in reduce_generators(g)]
    components = [[p - 1 for p in orb] for orb in g.orbits()]

    # group components by isomorphism type, keeping first-found order
    iso_classes: list[list[int]] = []
    iso_maps: dict[tuple[int, int], dict] = {}
    for ci, comp in enumerate(components):
        placed = False
        for cls in iso_classes:
            c0 = components[cls[0]]
            if len(c0) != len(comp):
                continue
            for target in components[ci]:
                sigma = _propagate_isomorphism(gens, c0, c0[0], target)
                if sigma is not None:
                    iso_maps[(cls[0], ci)] = sigma
                    cls.append(ci)
                    placed = True
                    break
            if placed:
                break
        if not placed:
            iso_classes.append([ci])

    out_gens: list[Permutation] = []
    for cls in iso_classes:
        # automorphisms of the first component of the class
        c0 = components[cls[0]]
        for target in c0:
            if counters is not None:
                counters.bump("centralizer_seeds")
            sigma = _propagate_isomorphism(gens, c0, c0[0], target)
            if sigma is None or all(a == b for a, b in sigma.items()):
                continue
            images = list(range(m))
            for a, b in sigma.items():
                images[a] = b
            out_gens.append(Permutation(images))
        # automorphisms of the other components, transported through the
        # fixed isomorphisms, plus one swap involution per adjacent pair
        for prev, ci in zip(cls, cls[1:]):
            phi = iso_maps[(cls[0], ci)]
            phi0 = iso_maps.get((cls[0], prev))
            images = list(range(m))
            for a, b in phi.items():
                src = a if phi0 is None else phi0[a]
                images[src] = b
                images[b] = src
            out_gens.append(Permutation(images))
        # the remaining components' own automorphism generators
        for ci in cls[1:]:
            comp = components[ci]
            for target in comp:
                sigma = _propagate_isomorphism(gens, comp, comp[0], target)
                if sigma is None or all(a == b for a, b in sigma.items()):
                    continue
                images = list(range(m))
                for a, b in sigma.items():
                    images[a] = b
                out_gens.append(Permutation(images))

    return PermGroup(reduce_generators_list(out_gens, m), m)


# -- lex-first coset representative enumeration -----------------------------


def move_coset(c: Subcoset, i: int, j: int) -> Optional[Permutation]:
    """Some pi in the subcoset with i^pi = j (1-based points), or None."""
    n = c.group.degree
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("points out of range")
    target = c.representative.inverse().image(j)
    trans = c.group.orbit_transversal(i)
    u = trans.get(target)
    if u is None:
        return None
    return u * c.representative


def lex_first(c: Subcoset) -> Permutation:
    """The element of the subcoset whose image string is lexicographically
    least.

    Fixes the smallest possible image point by point, restricting the
    subcoset to the stabilizer each time.
    """
    group = c.group
    rep = c.representative
    n = group.degree
    for s in range(1, n + 1):
        trans = group.orbit_transversal(s)
        best_t, best_u = None, None
        for p, u in trans.items():
            t = rep.image(p)
            if best_t is None or t < best_t:
                best_t, best_u = t, u
        rep = best_u * rep
        group = group.stabilizer(s)
        if group.is_trivial:
            break
    return rep


def enumerate_coset_reps(k: PermGroup, l: PermGroup,
                         counters: Counters | None = None) -> Iterator[Permutation]:
    """Yield the lex-first leader of every right coset of k in l.

    Breadth-first search over the Schreier graph of the coset space with
    respect to l's generators; each vertex is identified by its lex-first
    leader, so the marginal cost per item stays polynomial in the degree.
    The stream starts at the identity (the leader of k itself) and is
    single-consumer.
    """
    if k.degree != l.degree:
        raise DegreeMismatchError("degree mismatch")
    if not is_subgroup(k, l):
        raise NotASubgroupError("k is not a subgroup of l")
    gens = reduce_generators(l)
    start = lex_first(Subcoset(k, Permutation.identity(l.degree)))
    seen = {start}
    queue = [start]
    while queue:
        leader = queue.pop(0)
        if counters is not None:
            counters.bump("coset_bfs_nodes")
        yield leader
        for g in gens:
            neighbor = lex_first(Subcoset(k, leader * g))
            if neighbor not in seen:
                seen.add(neighbor)
                queue.append(neighbor)
