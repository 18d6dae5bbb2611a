"""Extending a partial homomorphism from a permutation group into S_m.

A partial map gamma on generators of M <= G <= S_n, already known to define
a homomorphism psi: M -> S_m, extends to G exactly when the multiset of
psi's orbit stabilizer classes is a non-negative integer combination of the
stabilizer profiles F_[L] of the coset actions of G, one profile per
conjugacy class [L] of subgroups of index <= m.  This module builds that
subset-sum instance, answers its oracles, reconstructs an extension from a
solution by relabeling orbits with cosets, and enumerates or counts whole
equivalence classes of extensions through centralizer coset
representatives.

Two solving modes: "brute" enumerates the subgroup classes of G explicitly
(bounded |G|); "triangular" works for G = A_n with M of small index and
m below 2^(n-1)/sqrt(n), where the profile of the longest orbit determines
the class [L] uniquely and the subset sum becomes triangular.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional

from .counters import Counters
from .errors import (
    BoundExceededError,
    InconsistentSolutionError,
    PartialMapError,
    TriangularStructureError,
)
from .groupalg import (
    centralizer_in_sym,
    conjugacy_test,
    double_coset_reps,
    enumerate_coset_reps,
    intersect_with_recognizable,
    subgroup_from_membership,
)
from .groups import (
    Permutation,
    PermGroup,
    alt_group,
    direct_product_on_disjoint_supports,
    embed_on_points,
    even_part,
    is_subgroup,
    restrict_action,
    sym_group,
)
from .lattice import low_index_classes
from .multiset import Multiset
from .multissr import (
    OracleBundle,
    SsrInstance,
    brute_subsum,
    consolidate,
    threshold_enumerate,
    tri_solve,
)
from .slp import failing_relator_for_group, first_failing_relator


class SubgroupClassKey:
    """A conjugacy class of subgroups, encoded by one representative.

    Encoding equality (hash/==) is exact representative equality; two keys
    encoding the same class compare equal only through the conjugacy
    oracle, which is what the consolidation machinery expects.
    """

    __slots__ = ("rep", "ambient", "_index")

    def __init__(self, rep: PermGroup, ambient: PermGroup):
        self.rep = rep
        self.ambient = ambient
        self._index = ambient.order() // rep.order()

    @property
    def index(self) -> int:
        return self._index

    def __eq__(self, other):
        return (isinstance(other, SubgroupClassKey)
                and self.rep.signature() == other.rep.signature()
                and self.ambient.signature() == other.ambient.signature())

    def __hash__(self):
        return hash((self.rep.signature(), self.ambient.signature()))

    def __repr__(self):
        gens = ",".join(str(g) for g in self.rep.generators) or "()"
        return f"[<{gens}>]"


def index_preorder(a: SubgroupClassKey, b: SubgroupClassKey) -> bool:
    """Total preorder on class keys: true iff index(a) <= index(b)."""
    return a.index <= b.index


@dataclass(frozen=True, eq=False)
class Extension:
    """A homomorphism G -> S_m given by images of G's generators."""

    images: tuple
    class_data: Optional[Multiset] = None

    def __eq__(self, other):
        return isinstance(other, Extension) and self.images == other.images

    def __hash__(self):
        return hash(self.images)


class HomExtInstance:
    """A partial-map extension instance.

    gamma is a sequence of (element of G, image in S_m) pairs; the derived
    subgroup M is generated by the domain.  Construction verifies that the
    domain lies in G and that gamma defines a homomorphism on M (the first
    failing relator is reported otherwise).  Instances are immutable and
    all operations on them are pure.
    """

    def __init__(self, n: int, m: int, g_group: PermGroup, gamma,
                 mode: str = "brute", *, index_bound_r: int = 2,
                 brute_cap: int = 5040, check_bounds: bool = True,
                 shared_caches: dict | None = None):
        if mode not in ("brute", "triangular"):
            raise ValueError(f"unknown mode {mode!r}")
        if g_group.degree != n:
            raise ValueError("G must have degree n")
        if m < 1:
            raise ValueError("m must be >= 1")
        gamma = tuple((a, b) for a, b in gamma)
        for a, b in gamma:
            if a.degree != n or b.degree != m:
                raise ValueError("gamma pairs must have degrees (n, m)")
            if not g_group.contains(a):
                raise ValueError(f"domain element {a} is not in G")
        self.n = n
        self.m = m
        self.g_group = g_group
        self.gamma = gamma
        self.mode = mode
        self.index_bound_r = index_bound_r
        self.brute_cap = brute_cap
        dom = [a for a, _ in gamma]
        values = [b for _, b in gamma]
        self.m_group = PermGroup(dom, n)
        bad = failing_relator_for_group(self.m_group, values) if gamma else None
        if bad is not None:
            raise PartialMapError(
                f"gamma does not define a homomorphism on <dom gamma>: "
                f"relator {bad} fails", relator_index=bad)
        self.psi_group = PermGroup(values, m)
        self.sigma: Optional[list[int]] = None
        if mode == "triangular":
            self._init_triangular(check_bounds)
        # caches keyed by full signatures, so one dict may be shared across
        # instances (results are pure functions of the keyed data)
        self._caches = shared_caches if shared_caches is not None else {}

    def _init_triangular(self, check_bounds: bool):
        n, m = self.n, self.m
        if check_bounds:
            alt_order = math.factorial(n) // 2 if n >= 2 else 1
            if (self.g_group.order() != alt_order
                    or not all(g.is_even for g in self.g_group.generators)):
                raise TriangularStructureError(
                    "triangular mode requires G to be the alternating group")
            index = self.g_group.order() // self.m_group.order()
            if index > math.comb(n, self.index_bound_r):
                raise TriangularStructureError(
                    f"[G:M] = {index} exceeds C({n},{self.index_bound_r})")
            # m < 2^(n-1)/sqrt(n), squared to stay in integers
            if m * m * n >= 1 << (2 * n - 2):
                raise TriangularStructureError(
                    f"m = {m} is not below 2^(n-1)/sqrt(n)")
        sigma = jordan_liebeck_support(self.m_group, self.index_bound_r + 1)
        if sigma is None:
            raise TriangularStructureError(
                "no invariant support set pins M between pointwise and "
                "setwise stabilizers; triangular oracles unavailable")
        self.sigma = sigma

    # -- oracle plumbing ----------------------------------------------------

    def conjugating_witness(self, ambient: PermGroup, a: PermGroup,
                            b: PermGroup,
                            counters: Counters | None = None):
        """Cached conjugacy witness w with w^-1 a w = b, or None."""
        if a.order() != b.order():
            return None
        cache_key = ("witness", ambient.signature(),
                     a.signature(), b.signature())
        hit = self._caches.get(cache_key, "miss")
        if hit == "miss":
            hit = conjugacy_test(ambient, a, b, counters)
            self._caches[cache_key] = hit
            self._caches[("witness", ambient.signature(),
                          b.signature(), a.signature())] = \
                None if hit is None else hit.inverse()
        elif counters is not None:
            counters.bump("conjugacy_cache_hits")
        return hit

    def class_equiv(self, a: SubgroupClassKey, b: SubgroupClassKey,
                    counters: Counters | None = None) -> bool:
        """Conjugacy of two class keys inside their common ambient group."""
        if a.ambient.signature() != b.ambient.signature():
            raise ValueError("keys live over different ambient groups")
        if counters is not None:
            counters.bump("equiv_calls")
        return self.conjugating_witness(a.ambient, a.rep, b.rep,
                                        counters) is not None


def stabilizer_under_hom(instance: HomExtInstance, x: int) -> PermGroup:
    """The subgroup of M whose psi-image fixes the point x of [m].

    Works in the diagonal embedding of M into S_{n+m}: generators act as
    themselves on the first n points and as their psi-images on the rest,
    so the point stabilizer of n+x projects onto the wanted subgroup.
    """
    n, m = instance.n, instance.m
    if not 1 <= x <= m:
        raise ValueError(f"point {x} out of range 1..{m}")
    diag = _diagonal_group(instance)
    stab = diag.stabilizer(n + x)
    return restrict_action(stab, range(1, n + 1))


def _orbit_profile(instance: HomExtInstance,
                   counters: Counters | None = None) -> list:
    """Per psi-orbit data, cached on the instance: (orbit, base point,
    stabilizer in M, witness map y -> a_y with base^psi(a_y) = y)."""
    cached = getattr(instance, "_orbit_data", None)
    if cached is not None:
        return cached
    n = instance.n
    diag = _diagonal_group(instance)
    out = []
    for orbit in instance.psi_group.orbits():
        x = orbit[0]
        stab = stabilizer_under_hom(instance, x)
        trans = diag.orbit_transversal(n + x)
        witnesses = {point - n: Permutation(d.images[:n])
                     for point, d in trans.items()}
        out.append((orbit, x, stab, witnesses))
    instance._orbit_data = out
    return out


def _diagonal_group(instance: HomExtInstance) -> PermGroup:
    cached = getattr(instance, "_diag", None)
    if cached is not None:
        return cached
    n, m = instance.n, instance.m
    gens = []
    for a, b in instance.gamma:
        gens.append(Permutation(a.images + tuple(n + i for i in b.images)))
    diag = PermGroup(gens, n + m)
    instance._diag = diag
    return diag


def compute_target_multiset(instance: HomExtInstance,
                            counters: Counters | None = None) -> Multiset:
    """One stabilizer class per orbit of psi on [m], consolidated under
    M-conjugacy.  Cached on the instance after the first call."""
    cached = getattr(instance, "_target", None)
    if cached is not None:
        return cached
    keys = [SubgroupClassKey(stab, instance.m_group)
            for _, _, stab, _ in _orbit_profile(instance, counters)]
    (target,) = consolidate(
        [Multiset.from_elements(keys)],
        lambda a, b: instance.class_equiv(a, b, counters))
    instance._target = target
    return target


def f_entries(instance: HomExtInstance, l_group: PermGroup,
              counters: Counters | None = None) -> list[tuple[Permutation, PermGroup]]:
    """(sigma_i, sigma_i^-1 L sigma_i intersect M) per double coset
    representative sigma_i of L\\G/M."""
    key = ("f_entries", instance.g_group.signature(),
           instance.m_group.signature(), l_group.signature())
    cached = instance._caches.get(key)
    if cached is not None:
        return cached
    g, m_grp = instance.g_group, instance.m_group
    index_m = g.order() // m_grp.order()
    sigmas = double_coset_reps(g, l_group, m_grp, counters)
    entries = []
    for s in sigmas:
        conj = l_group.conjugated(s)
        entries.append((s, intersect_with_recognizable(
            conj, m_grp.contains, index_m, counters)))
    instance._caches[key] = entries
    return entries


def f_oracle(instance: HomExtInstance, l_key: SubgroupClassKey,
             counters: Counters | None = None) -> Multiset:
    """The stabilizer profile of the M-action on L\\G, as a multiset of
    M-class keys consolidated under M-conjugacy."""
    if l_key.index > instance.m:
        raise BoundExceededError(
            f"[G:L] = {l_key.index} exceeds the universe bound m = {instance.m}")
    cache_key = ("f", instance.g_group.signature(),
                 instance.m_group.signature(), l_key.rep.signature())
    cached = instance._caches.get(cache_key)
    if cached is not None:
        if counters is not None:
            counters.bump("f_cache_hits")
        return cached
    if counters is not None:
        counters.bump("f_oracle_calls")
    keys = [SubgroupClassKey(grp, instance.m_group)
            for _, grp in f_entries(instance, l_key.rep, counters)]
    (out,) = consolidate(
        [Multiset.from_elements(keys)],
        lambda a, b: instance.class_equiv(a, b, counters))
    instance._caches[cache_key] = out
    return out


def jordan_liebeck_support(k: PermGroup, r: int) -> Optional[list[int]]:
    """The minimal K-invariant set S with |S| < r such that K contains the
    alternating group on the complement; None when no such set exists.

    Candidates are unions of K-orbits, smallest total size first (ties by
    point list); containment is tested on the 3-cycle generators of the
    complement's alternating group.
    """
    n = k.degree
    orbs = k.orbits()
    candidates = []

    def rec(i, chosen, size):
        if size < r:
            candidates.append((size, sorted(p for o in chosen for p in o)))
        if i == len(orbs):
            return
        for j in range(i, len(orbs)):
            if size + len(orbs[j]) < r:
                rec(j + 1, chosen + [orbs[j]], size + len(orbs[j]))

    rec(0, [], 0)
    seen = set()
    for size, pts in sorted(candidates, key=lambda c: (c[0], c[1])):
        key = tuple(pts)
        if key in seen:
            continue
        seen.add(key)
        complement = [p for p in range(1, n + 1) if p not in set(pts)]
        if len(complement) >= 3:
            a, b = complement[0], complement[1]
            ok = all(k.contains(Permutation.from_cycles([[a, b, c]], n))
                     for c in complement[2:])
            if not ok:
                continue
        return list(pts)
    return None


def triangle_oracle(instance: HomExtInstance, k_key: SubgroupClassKey,
                    counters: Counters | None = None) -> Optional[SubgroupClassKey]:
    """The G-class whose coset action restricts to M with k_key as the
    stabilizer class of the longest orbit; None plays the Error value.

    Finds the invariant support of K, splits off a part matching M's
    support action, and assembles the alternating (or even-part) product
    group on the rest.
    """
    if instance.sigma is None:
        raise TriangularStructureError("instance is not in triangular mode")
    if counters is not None:
        counters.bump("triangle_calls")
    n = instance.n
    K = k_key.rep
    gamma = jordan_liebeck_support(K, (n + 1) // 2)
    if gamma is None:
        return None
    sigma = instance.sigma
    s = len(sigma)
    gamma_set = set(gamma)
    k_orbits_in_gamma = [o for o in K.orbits() if set(o) <= gamma_set]

    matched: Optional[list[int]] = None
    subsets = []

    def rec(i, chosen, size):
        if size == s:
            subsets.append(sorted(p for o in chosen for p in o))
            return
        for j in range(i, len(k_orbits_in_gamma)):
            if size + len(k_orbits_in_gamma[j]) <= s:
                rec(j + 1, chosen + [k_orbits_in_gamma[j]],
                    size + len(k_orbits_in_gamma[j]))

    rec(0, [], 0)
    if s == 0:
        matched = []
    else:
        m_sigma = restrict_action(instance.m_group, sigma)
        for sigma0 in sorted(subsets):
            a = restrict_action(K, sigma0)
            if a.order() != m_sigma.order():
                continue
            for pi in _all_perms_of_degree(s):
                if _groups_equal(a.conjugated(pi), m_sigma):
                    matched = sigma0
                    break
            if matched is not None:
                break
    if matched is None:
        return None
    gamma_bar = [p for p in gamma if p not in set(matched)]
    outside = [p for p in range(1, n + 1) if p not in set(gamma_bar)]
    if gamma_bar:
        embedded = embed_on_points(restrict_action(K, gamma_bar), gamma_bar, n)
        k_bar = PermGroup(
            [g for g in embedded.generators if not g.is_identity], degree=n)
    else:
        k_bar = PermGroup([], degree=n)
    if all(g.is_even for g in k_bar.generators):
        result = direct_product_on_disjoint_supports(alt_group(outside, n), k_bar)
    else:
        result = even_part(
            direct_product_on_disjoint_supports(sym_group(outside, n), k_bar))
    if instance.g_group.order() % result.order() != 0:
        return None
    if instance.g_group.order() // result.order() > instance.m:
        return None
    return SubgroupClassKey(result, instance.g_group)


def _all_perms_of_degree(s: int):
    from itertools import permutations as iperm
    return [Permutation(p) for p in iperm(range(s))]


def _groups_equal(a: PermGroup, b: PermGroup) -> bool:
    return a.order() == b.order() and all(b.contains(g) for g in a.generators)


def reduce_instance(instance: HomExtInstance,
                    counters: Counters | None = None) -> SsrInstance:
    """The oracle subset-sum instance of this extension problem.

    In triangular mode the preorder puts the largest index first: the
    minimal element of the remaining target is the stabilizer class of a
    longest orbit, which is the one whose originating G-class is uniquely
    determined.
    """
    target = compute_target_multiset(instance, counters)
    equiv = lambda a, b: instance.class_equiv(a, b, counters)
    f = lambda key: f_oracle(instance, key, counters)
    if instance.mode == "triangular":
        precedes = lambda a, b: a.index >= b.index
        tri = lambda key: triangle_oracle(instance, key, counters)
    else:
        precedes = None
        tri = None
    return SsrInstance(target, OracleBundle(
        equiv=equiv, f_oracle=f, precedes=precedes, tri_oracle=tri))


def solve(instance: HomExtInstance,
          counters: Counters | None = None) -> list[Multiset]:
    """Solution multisets over G-class keys: at most one in triangular
    mode, all of them in brute mode."""
    ssr = reduce_instance(instance, counters)
    if instance.mode == "triangular":
        sol = tri_solve(ssr.target, ssr.oracles)
        return [] if sol is None else [sol]
    if instance.g_group.order() > instance.brute_cap:
        raise BoundExceededError(
            f"|G| = {instance.g_group.order()} exceeds the brute-mode cap "
            f"{instance.brute_cap}")
    keys = [SubgroupClassKey(c.rep, instance.g_group)
            for c in low_index_classes(instance.g_group, instance.m)]
    family = [ssr.oracles.f_oracle(k) for k in keys]
    cons = consolidate([ssr.target] + family, ssr.oracles.equiv)
    return brute_subsum(cons[0], list(zip(keys, cons[1:])))


def build_extension(instance: HomExtInstance, solution: Multiset,
                    counters: Counters | None = None) -> Extension:
    """A representative extension realizing a solution multiset.

    Orbits of psi are labeled by cosets of their stabilizers, matched by
    conjugacy against the stabilizer profiles of the solution's coset
    spaces, relabeled into cosets of the solution subgroups, and the
    natural right-multiplication action of G is read off pointwise.
    """
    n, m = instance.n, instance.m
    g_grp, m_grp = instance.g_group, instance.m_group
    equiv = lambda a, b: instance.class_equiv(a, b, counters)

    # defining equation check
    target = compute_target_multiset(instance, counters)
    total = Multiset()
    for key, count in solution:
        total = total.add(f_oracle(instance, key, counters).scaled(count))
    t2, s2 = consolidate([target, total], equiv)
    if t2 != s2:
        raise InconsistentSolutionError(
            "solution multiset does not sum to the stabilizer profile")

    # orbit data: representative point, stabilizer, and the witnesses a_y
    # with rep^(psi(a_y)) = y, read from the diagonal group's transversals
    orbit_data = _orbit_profile(instance, counters)

    # slots: one per copy of each solution class, one entry per double coset
    slots = []
    for key, count in solution:
        entries = f_entries(instance, key.rep, counters)
        index = key.index
        for copy in range(count):
            slots.append({"group": key.rep, "entries": list(entries),
                          "copy": copy, "index": index})
    if sum(s["index"] for s in slots) != m:
        raise InconsistentSolutionError(
            "solution coset spaces do not cover m points")

    # match each orbit to an unused profile entry by M-conjugacy
    used = set()
    assignments = []
    for orbit, x, stab, witnesses in orbit_data:
        found = None
        for si, slot in enumerate(slots):
            for ei, (sigma, f_group) in enumerate(slot["entries"]):
                if (si, ei) in used:
                    continue
                witness = instance.conjugating_witness(m_grp, stab, f_group,
                                                       counters)
                if witness is not None:
                    found = (si, ei, sigma, f_group, witness)
                    break
            if found:
                break
        if not found:
            raise InconsistentSolutionError(
                "orbit stabilizer matches no remaining profile entry")
        si, ei, sigma, f_group, witness = found
        used.add((si, ei))
        assignments.append((orbit, x, stab, witnesses, si, sigma, witness))

    # coset labeling: point y of orbit at x gets the element
    # sigma * c^-1 * a_y in its slot's coset space L\G
    slot_reps = [_coset_reps_cached(instance, slot["group"], slot["index"],
                                    counters) for slot in slots]
    point_label: dict[int, tuple[int, Permutation]] = {}
    rep_to_point: dict[tuple[int, int], int] = {}
    for orbit, x, stab, witnesses, si, sigma, witness in assignments:
        l_group = slots[si]["group"]
        c_inv = witness.inverse()
        for y in orbit:
            label = sigma * c_inv * witnesses[y]
            ri = _coset_index(l_group, slot_reps[si], label)
            if (si, ri) in rep_to_point:
                raise InconsistentSolutionError("coset labeling collided")
            rep_to_point[(si, ri)] = y
            point_label[y] = (si, label)

    # read off each generator's permutation of [m]
    images = []
    for g in g_grp.generators:
        out = [0] * m
        for y in range(1, m + 1):
            si, label = point_label[y]
            ri = _coset_index(slots[si]["group"], slot_reps[si], label * g)
            out[y - 1] = rep_to_point[(si, ri)] - 1
        images.append(Permutation(out))
    ext = Extension(tuple(images), class_data=solution)

    # soundness: a homomorphism extending gamma
    if failing_relator_for_group(g_grp, list(ext.images)) is not None:
        raise InconsistentSolutionError("built images are not a homomorphism")
    evaluator = g_grp.image_evaluator(list(ext.images))
    for a, b in instance.gamma:
        if evaluator(a) != b:
            raise InconsistentSolutionError("extension does not restrict to gamma")
    return ext


def _coset_reps_cached(instance: HomExtInstance, sub: PermGroup, index: int,
                       counters: Counters | None = None):
    key = ("cosets", instance.g_group.signature(), sub.signature())
    hit = instance._caches.get(key)
    if hit is None:
        _, reps = subgroup_from_membership(instance.g_group, sub.contains,
                                           index, counters)
        hit = reps.reps
        instance._caches[key] = hit
    return hit


def _coset_index(group: PermGroup, reps, element: Permutation) -> int:
    for i, r in enumerate(reps):
        if group.contains(element * r.inverse()):
            return i
    raise InconsistentSolutionError("element matches no coset representative")


def extension_restricts_to_gamma(instance: HomExtInstance,
                                 ext: Extension) -> bool:
    """Check that an extension is a homomorphism agreeing with gamma."""
    if failing_relator_for_group(instance.g_group,
                                 list(ext.images)) is not None:
        return False
    evaluator = instance.g_group.image_evaluator(list(ext.images))
    return all(evaluator(a) == b for a, b in instance.gamma)


def enumerate_equivalent(instance: HomExtInstance, phi: Extension,
                         counters: Counters | None = None) -> Iterator[Extension]:
    """All extensions equivalent to phi, complete and repetition-free.

    Conjugating elements run over coset representatives of the centralizer
    of phi's image inside the centralizer of psi's image.
    """
    if not extension_restricts_to_gamma(instance, phi):
        raise PartialMapError("phi does not extend gamma")
    m = instance.m
    c_psi = centralizer_in_sym(instance.psi_group, counters)
    c_phi = centralizer_in_sym(PermGroup(list(phi.images), m), counters)
    for lam in enumerate_coset_reps(c_phi, c_psi, counters):
        lam_inv = lam.inverse()
        yield Extension(tuple(lam_inv * img * lam for img in phi.images),
                        class_data=phi.class_data)


def count_extensions(instance: HomExtInstance,
                     counters: Counters | None = None) -> int:
    """Number of extensions: the centralizer index summed over solutions."""
    sols = solve(instance, counters)
    if not sols:
        return 0
    c_psi = centralizer_in_sym(instance.psi_group, counters)
    total = 0
    for sol in sols:
        phi = build_extension(instance, sol, counters)
        c_phi = centralizer_in_sym(PermGroup(list(phi.images), instance.m),
                                   counters)
        total += c_psi.order() // c_phi.order()
    return total


def homext_threshold(instance: HomExtInstance, k: int,
                     counters: Counters | None = None):
    """Threshold-k enumeration of extensions.

    k = 0 is the decision problem, k = 1 the search problem.  Streams one
    equivalence class per solution; distinct solutions yield inequivalent
    (hence distinct) extensions.
    """
    def producer():
        for sol in solve(instance, counters):
            phi = build_extension(instance, sol, counters)
            yield from enumerate_equivalent(instance, phi, counters)

    return threshold_enumerate(producer(), k)


def coset_action_images(group: PermGroup, subgroups,
                        counters: Counters | None = None) -> tuple[int, list]:
    """The natural action of ``group`` on the disjoint union of the coset
    spaces of the given subgroups: (number of points, one image per
    generator).  Used to produce actions with prescribed stabilizers."""
    rep_lists = []
    for sub in subgroups:
        if not is_subgroup(sub, group):
            raise ValueError("coset action requires subgroups of the group")
        index = group.order() // sub.order()
        _, reps = subgroup_from_membership(group, sub.contains, index, counters)
        rep_lists.append(reps.reps)
    m = sum(len(r) for r in rep_lists)
    offsets = []
    total = 0
    for r in rep_lists:
        offsets.append(total)
        total += len(r)
    images = []
    for g in group.generators:
        out = [0] * m
        for si, (sub, reps) in enumerate(zip(subgroups, rep_lists)):
            for i, r in enumerate(reps):
                moved = r * g
                j = next(j for j, r2 in enumerate(reps)
                         if sub.contains(moved * r2.inverse()))
                out[offsets[si] + i] = offsets[si] + j
        images.append(Permutation(out))
    return m, images
