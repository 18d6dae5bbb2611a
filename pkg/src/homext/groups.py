"""Permutations and permutation groups with a base and strong generating set.

Composition is fixed left-to-right throughout: the image of a point w under
g*h is (w^g)^h.  Points are 1-based in every public signature and in all text
formats; the image tuples stored internally are 0-based.

Groups are immutable: the Schreier-Sims structure is built at construction
and every operation afterwards is a pure function of it.  Construction is
deterministic given the generator order (base points are the smallest moved
points, orbits are explored in FIFO order), so canonical outputs are
bit-reproducible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DegreeMismatchError, NotASubgroupError


def _mul(a: tuple, b: tuple) -> tuple:
    # apply a, then b
    return tuple(b[x] for x in a)


def _inv(a: tuple) -> tuple:
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def _identity(n: int) -> tuple:
    return tuple(range(n))


class Permutation:
    """A bijection on {1..n}, stored as a 0-based image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images!r}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, *a):
        raise AttributeError("Permutation is immutable")

    @staticmethod
    def identity(degree: int) -> "Permutation":
        return Permutation(_identity(degree))

    @staticmethod
    def from_cycles(cycles, degree: int) -> "Permutation":
        """Build from 1-based disjoint cycles, e.g. [[1,2,3],[4,5]]."""
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            for p in cyc:
                if not 1 <= p <= degree:
                    raise ValueError(f"point {p} out of range 1..{degree}")
                if p in seen:
                    raise ValueError(f"point {p} repeated across cycles")
                seen.add(p)
            for a, b in zip(cyc, cyc[1:]):
                images[a - 1] = b - 1
            if len(cyc) > 1:
                images[cyc[-1] - 1] = cyc[0] - 1
        return Permutation(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def image(self, point: int) -> int:
        """Image of a 1-based point."""
        return self.images[point - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self.images) != len(other.images):
            raise DegreeMismatchError(
                f"degree {len(self.images)} vs {len(other.images)}")
        return Permutation(_mul(self.images, other.images))

    def inverse(self) -> "Permutation":
        return Permutation(_inv(self.images))

    def conj_by(self, g: "Permutation") -> "Permutation":
        """g^-1 * self * g."""
        return Permutation(_mul(_mul(_inv(g.images), self.images), g.images))

    def __pow__(self, k: int) -> "Permutation":
        n = len(self.images)
        if k < 0:
            return self.inverse() ** (-k)
        out = _identity(n)
        base = self.images
        while k:
            if k & 1:
                out = _mul(out, base)
            base = _mul(base, base)
            k >>= 1
        return Permutation(out)

    @property
    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    @property
    def sign(self) -> int:
        """+1 for even permutations, -1 for odd."""
        n_cyc = 0
        seen = [False] * len(self.images)
        for i in range(len(self.images)):
            if not seen[i]:
                n_cyc += 1
                j = i
                while not seen[j]:
                    seen[j] = True
                    j = self.images[j]
        return 1 if (len(self.images) - n_cyc) % 2 == 0 else -1

    @property
    def is_even(self) -> bool:
        return self.sign == 1

    def moved_points(self) -> list[int]:
        """1-based points not fixed by this permutation, ascending."""
        return [i + 1 for i, x in enumerate(self.images) if x != i]

    def cycles(self) -> list[list[int]]:
        """Nontrivial cycles, 1-based, each starting at its minimum,
        ordered by minimum element."""
        out = []
        seen = [False] * len(self.images)
        for i in range(len(self.images)):
            if seen[i] or self.images[i] == i:
                continue
            cyc = [i + 1]
            j = self.images[i]
            while j != i:
                seen[j] = True
                cyc.append(j + 1)
                j = self.images[j]
            out.append(cyc)
        return out

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def one_line_str(self) -> str:
        return "[" + ",".join(str(x + 1) for x in self.images) + "]"

    def __repr__(self) -> str:
        return f"Permutation({self})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        # lexicographic order on the image string pi(1)..pi(n)
        return self.images < other.images

    def __le__(self, other: "Permutation") -> bool:
        return self.images <= other.images

    def __hash__(self) -> int:
        return hash(self.images)


_CYCLE_RE = re.compile(r"\(\s*((?:\d+[\s,]*)*)\)")


def parse_permutation(text: str, degree: int | None = None) -> Permutation:
    """Parse disjoint-cycle notation "(1 2 3)(4 5)" or one-line "[2,3,1]".

    Whitespace-insensitive.  "()" is the identity.  When ``degree`` is given
    the permutation is padded with fixed points up to it; otherwise the
    degree is the largest point mentioned (at least 1).
    """
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise ValueError(f"unterminated one-line permutation: {text!r}")
        body = s[1:-1].strip()
        entries = [int(t) for t in re.split(r"[\s,]+", body) if t] if body else []
        if degree is not None:
            if len(entries) > degree:
                raise ValueError(f"one-line form longer than degree {degree}")
            entries += list(range(len(entries) + 1, degree + 1))
        return Permutation([e - 1 for e in entries])
    # cycle form: the string must be exactly a sequence of "(p p ...)" groups
    if s == "":
        raise ValueError("empty permutation string")
    normalized = re.sub(r"(?<=\d)[\s,]+(?=\d)", ",", re.sub(r"\s", " ", s)).replace(" ", "")
    if not re.fullmatch(r"(\((\d+(,\d+)*)?\))+", normalized):
        raise ValueError(f"cannot parse permutation: {text!r}")
    cycles = []
    maxpt = 0
    for m in _CYCLE_RE.finditer(s):
        body = m.group(1).strip()
        if not body:
            continue
        cyc = [int(t) for t in re.split(r"[\s,]+", body) if t]
        maxpt = max(maxpt, max(cyc))
        if len(cyc) > 1:
            cycles.append(cyc)
    n = degree if degree is not None else max(maxpt, 1)
    if maxpt > n:
        raise ValueError(f"point {maxpt} exceeds degree {n}")
    return Permutation.from_cycles(cycles, n)


def parse_permutation_list(text: str, degree: int | None = None) -> list[Permutation]:
    """Parse a comma-separated list of permutations in either text format.

    Commas inside parentheses or brackets do not split entries.  All parsed
    permutations are padded to a common degree.
    """
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur:
        parts.append("".join(cur))
    parts = [p for p in (q.strip() for q in parts) if p]
    perms = [parse_permutation(p, degree) for p in parts]
    if perms and degree is None:
        n = max(p.degree for p in perms)
        perms = [pad_to_degree(p, n) for p in perms]
    return perms


def pad_to_degree(p: Permutation, degree: int) -> Permutation:
    if degree < p.degree:
        raise DegreeMismatchError(f"cannot shrink degree {p.degree} to {degree}")
    return Permutation(p.images + tuple(range(p.degree, degree)))


class _Program:
    """Straight-line program over the group's input generators.

    Every strong generator and transversal element carries a node here, so a
    witness expressing it as a product of input generators is always
    available.  Node ``None`` stands for the identity and vanishes under
    composition.
    """

    __slots__ = ("steps", "values")

    def __init__(self):
        self.steps: list[tuple] = []    # ("load", i) | ("inv", j) | ("mul", j, k)
        self.values: list[tuple] = []   # image tuple per step

    def load(self, gen_index: int, images: tuple) -> int:
        self.steps.append(("load", gen_index))
        self.values.append(images)
        return len(self.steps) - 1

    def mul(self, j: int | None, k: int | None) -> int | None:
        if j is None:
            return k
        if k is None:
            return j
        self.steps.append(("mul", j, k))
        self.values.append(_mul(self.values[j], self.values[k]))
        return len(self.steps) - 1

    def inv(self, j: int | None) -> int | None:
        if j is None:
            return None
        self.steps.append(("inv", j))
        self.values.append(_inv(self.values[j]))
        return len(self.steps) - 1

    def value(self, j: int | None, degree: int) -> tuple:
        return _identity(degree) if j is None else self.values[j]

    def fork(self) -> "_Program":
        """Copy that can be extended without touching the original."""
        out = _Program()
        out.steps = list(self.steps)
        out.values = list(self.values)
        return out


class _Level:
    """One level of the stabilizer chain."""

    __slots__ = ("base", "gen_nodes", "orbit")

    def __init__(self, base: int):
        self.base = base
        self.gen_nodes: list[int] = []
        # orbit point -> node of a transversal element u with base^u = point
        self.orbit: dict[int, int | None] = {base: None}


class PermGroup:
    """Permutation group with Schreier-Sims data built at construction."""

    __slots__ = ("degree", "generators", "_prog", "_levels", "_order", "_sig",
                 "_presentation")

    def __init__(self, generators, degree: int | None = None):
        generators = tuple(generators)
        if degree is None:
            if not generators:
                raise ValueError("degree required for an empty generating set")
            degree = generators[0].degree
        if degree < 1:
            raise ValueError("degree must be >= 1")
        for g in generators:
            if g.degree != degree:
                raise DegreeMismatchError(
                    f"generator degree {g.degree} != {degree}")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "_prog", _Program())
        object.__setattr__(self, "_levels", [])
        object.__setattr__(self, "_order", None)
        object.__setattr__(self, "_sig", None)
        object.__setattr__(self, "_presentation", None)
        self._build()

    def __setattr__(self, *a):
        raise AttributeError("PermGroup is immutable")

    # -- construction -----------------------------------------------------

    def _build(self):
        prog, levels = self._prog, self._levels
        for i, g in enumerate(self.generators):
            node = prog.load(i, g.images)
            if not g.is_identity:
                self._place_gen(node)
        i = len(levels) - 1
        while i >= 0:
            stop = self._close_level(i)
            if stop is None:
                i -= 1
            else:
                i = stop

    def _place_gen(self, node: int):
        """Insert a strong generator at every level whose base prefix it
        fixes, creating a new bottom level if it fixes all bases."""
        prog, levels = self._prog, self._levels
        images = prog.values[node]
        l = 0
        while l < len(levels) and images[levels[l].base] == levels[l].base:
            levels[l].gen_nodes.append(node)
            self._rebuild_orbit(l)
            l += 1
        if l == len(levels):
            base = min(i for i, x in enumerate(images) if x != i)
            levels.append(_Level(base))
        levels[l].gen_nodes.append(node)
        self._rebuild_orbit(l)

    def _rebuild_orbit(self, l: int):
        prog, level = self._prog, self._levels[l]
        level.orbit = {level.base: None}
        queue = [level.base]
        values = prog.values
        while queue:
            p = queue.pop(0)
            u = level.orbit[p]
            for s in level.gen_nodes:
                q = values[s][p]
                if q not in level.orbit:
                    level.orbit[q] = prog.mul(u, s)
                    queue.append(q)

    def _sift_node(self, node: int, start: int) -> tuple[int | None, int]:
        """Sift from level ``start``; return (residue node, stop level).

        The residue is None exactly when the element sifts to the identity;
        otherwise ``stop`` is the level whose orbit test failed (equal to
        len(levels) when a new level is required).
        """
        prog, levels = self._prog, self._levels
        cur = node
        for j in range(start, len(levels)):
            images = prog.value(cur, self.degree)
            p = images[levels[j].base]
            if p == levels[j].base:
                continue
            if p not in levels[j].orbit:
                return cur, j
            cur = prog.mul(cur, prog.inv(levels[j].orbit[p]))
        images = prog.value(cur, self.degree)
        if all(i == x for i, x in enumerate(images)):
            return None, len(levels)
        return cur, len(levels)

    def _close_level(self, i: int) -> int | None:
        """Sift all Schreier generators of level i.  On failure insert the
        residue at the levels it belongs to and return the level to resume
        verification from; return None when level i is complete."""
        prog, levels = self._prog, self._levels
        level = levels[i]
        for p in sorted(level.orbit):
            u = level.orbit[p]
            for s in level.gen_nodes:
                q = prog.values[s][p]
                h = prog.mul(prog.mul(u, s), prog.inv(level.orbit[q]))
                if h is None:
                    continue
                if all(a == b for a, b in enumerate(prog.values[h])):
                    continue
                residue, stop = self._sift_node(h, i + 1)
                if residue is None:
                    continue
                if stop == len(levels):
                    images = prog.values[residue]
                    base = min(a for a, b in enumerate(images) if b != a)
                    levels.append(_Level(base))
                for j in range(i + 1, stop + 1):
                    levels[j].gen_nodes.append(residue)
                    self._rebuild_orbit(j)
                return stop
        return None

    # -- queries -----------------------------------------------------------

    def order(self) -> int:
        if self._order is None:
            n = 1
            for level in self._levels:
                n *= len(level.orbit)
            PermGroup._set(self, "_order", n)
        return self._order

    @staticmethod
    def _set(obj, name, value):
        object.__setattr__(obj, name, value)

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatchError(
                f"element degree {p.degree} != group degree {self.degree}")
        return self._strip(p.images) is None

    __contains__ = contains

    def _strip(self, images: tuple) -> tuple | None:
        """Sift a raw image tuple; None when it is a member, else the residue."""
        prog = self._prog
        for level in self._levels:
            p = images[level.base]
            if p == level.base:
                continue
            if p not in level.orbit:
                return images
            images = _mul(images, _inv(prog.value(level.orbit[p], self.degree)))
        return None if all(i == x for i, x in enumerate(images)) else images

    def base(self) -> list[int]:
        """Base points, 1-based."""
        return [level.base + 1 for level in self._levels]

    def strong_generators(self) -> list[Permutation]:
        seen, out = set(), []
        for level in self._levels:
            for node in level.gen_nodes:
                if node not in seen:
                    seen.add(node)
                    out.append(Permutation(self._prog.values[node]))
        return out

    @property
    def is_trivial(self) -> bool:
        return not self._levels

    def signature(self) -> tuple:
        """Exact encoding identity: degree plus input generator tuples."""
        if self._sig is None:
            PermGroup._set(self, "_sig",
                           (self.degree, tuple(g.images for g in self.generators)))
        return self._sig

    def orbits(self) -> list[list[int]]:
        """Orbit partition of {1..n}: each orbit ascending, orbits ordered by
        minimum element."""
        n = self.degree
        seen = [False] * n
        gens = [g.images for g in self.generators]
        out = []
        for i in range(n):
            if seen[i]:
                continue
            orb = [i]
            seen[i] = True
            queue = [i]
            while queue:
                p = queue.pop(0)
                for g in gens:
                    q = g[p]
                    if not seen[q]:
                        seen[q] = True
                        orb.append(q)
                        queue.append(q)
            out.append(sorted(x + 1 for x in orb))
        return out

    def orbit_transversal(self, point: int) -> dict[int, Permutation]:
        """Map q -> u with point^u = q over the orbit of a 1-based point."""
        p0 = point - 1
        if not 0 <= p0 < self.degree:
            raise ValueError(f"point {point} out of range 1..{self.degree}")
        gens = [g.images for g in self.generators]
        trans = {p0: _identity(self.degree)}
        queue = [p0]
        while queue:
            p = queue.pop(0)
            for g in gens:
                q = g[p]
                if q not in trans:
                    trans[q] = _mul(trans[p], g)
                    queue.append(q)
        return {q + 1: Permutation(t) for q, t in trans.items()}

    def stabilizer(self, point: int) -> "PermGroup":
        """Stabilizer of a 1-based point, via Schreier generators."""
        trans = {q - 1: u.images for q, u in self.orbit_transversal(point).items()}
        gens = []
        seen = set()
        for p in sorted(trans):
            u = trans[p]
            for g in self.generators:
                q = g.images[p]
                s = _mul(_mul(u, g.images), _inv(trans[q]))
                if s not in seen and any(i != x for i, x in enumerate(s)):
                    seen.add(s)
                    gens.append(Permutation(s))
        return PermGroup(reduce_generators_list(gens, self.degree), self.degree)

    def conjugated(self, g: Permutation) -> "PermGroup":
        """The group g^-1 * self * g."""
        return PermGroup([h.conj_by(g) for h in self.generators], self.degree)

    def elements(self):
        """Iterate over all elements (desk-scale groups only).

        Elements are the products of one transversal element per level of
        the stabilizer chain, deepest level first.
        """
        levels = self._levels
        prog = self._prog

        def rec(i, acc):
            if i < 0:
                yield Permutation(acc)
                return
            for p in sorted(levels[i].orbit):
                u = prog.value(levels[i].orbit[p], self.degree)
                yield from rec(i - 1, _mul(acc, u))

        if not levels:
            yield Permutation.identity(self.degree)
            return
        yield from rec(len(levels) - 1, _identity(self.degree))

    # -- membership witnesses ---------------------------------------------

    def express_nodes(self, p: Permutation) -> list[int]:
        """Transversal nodes u_k..u_1 with p = u_k * ... * u_1.

        Raises NotASubgroupError when p is not a member.
        """
        if p.degree != self.degree:
            raise DegreeMismatchError("degree mismatch")
        prog = self._prog
        images = p.images
        nodes = []
        for level in self._levels:
            q = images[level.base]
            if q == level.base and level.orbit[level.base] is None:
                continue
            if q not in level.orbit:
                raise NotASubgroupError(f"{p} is not a member")
            node = level.orbit[q]
            if node is not None:
                nodes.append(node)
                images = _mul(images, _inv(prog.values[node]))
        if any(i != x for i, x in enumerate(images)):
            raise NotASubgroupError(f"{p} is not a member")
        return list(reversed(nodes))

    def image_evaluator(self, images: list[Permutation]):
        """Callable evaluating members under generator -> image substitution.

        ``images`` lists one permutation (of any common degree) per input
        generator.  The returned callable maps any member of this group to
        its image under the homomorphism those images define (assuming one
        exists; combine with verify_partial_hom to check).
        """
        if len(images) != len(self.generators):
            raise ValueError("one image per generator required")
        m = images[0].degree if images else 1
        prog = self._prog
        cache: dict[int, tuple] = {}

        def node_value(node: int) -> tuple:
            if node in cache:
                return cache[node]
            op = prog.steps[node]
            if op[0] == "load":
                val = images[op[1]].images
            elif op[0] == "inv":
                val = _inv(node_value(op[1]))
            else:
                val = _mul(node_value(op[1]), node_value(op[2]))
            cache[node] = val
            return val

        def evaluate(p: Permutation) -> Permutation:
            out = _identity(m)
            for node in self.express_nodes(p):
                out = _mul(out, node_value(node))
            return Permutation(out)

        return evaluate


@dataclass(frozen=True)
class Subcoset:
    """A right coset M*a of a subgroup M."""

    group: PermGroup
    representative: Permutation

    def __post_init__(self):
        if self.group.degree != self.representative.degree:
            raise DegreeMismatchError("coset representative degree mismatch")

    def contains(self, p: Permutation) -> bool:
        return self.group.contains(p * self.representative.inverse())

    __contains__ = contains

    def elements(self):
        for h in self.group.elements():
            yield h * self.representative


# -- module-level operations ----------------------------------------------


def bsgs_build(generators, degree: int | None = None) -> PermGroup:
    """Build a PermGroup (deterministic Schreier-Sims) from generators."""
    return PermGroup(generators, degree)


def membership_test(group: PermGroup, p: Permutation) -> bool:
    return group.contains(p)


def group_order(group: PermGroup) -> int:
    return group.order()


def is_subgroup(sub: PermGroup, sup: PermGroup) -> bool:
    if sub.degree != sup.degree:
        raise DegreeMismatchError("degree mismatch")
    return all(sup.contains(g) for g in sub.generators)


def same_group(a: PermGroup, b: PermGroup) -> bool:
    return a.order() == b.order() and is_subgroup(a, b)


def subgroup_index(group: PermGroup, subgroup: PermGroup) -> int:
    if not is_subgroup(subgroup, group):
        raise NotASubgroupError("second argument is not a subgroup of the first")
    return group.order() // subgroup.order()


def orbits(group: PermGroup) -> list[list[int]]:
    return group.orbits()


def point_stabilizer(group: PermGroup, point: int) -> PermGroup:
    if not 1 <= point <= group.degree:
        raise ValueError(f"point {point} out of range 1..{group.degree}")
    return group.stabilizer(point)


def reduce_generators_list(gens, degree: int) -> list[Permutation]:
    """Greedily prune a generator list to a non-redundant one (<= 2n)."""
    kept: list[Permutation] = []
    current: PermGroup | None = None
    for g in gens:
        if g.is_identity:
            continue
        if current is None:
            kept.append(g)
            current = PermGroup(kept, degree)
        elif not current.contains(g):
            kept.append(g)
            current = PermGroup(kept, degree)
    return kept


def reduce_generators(group: PermGroup) -> list[Permutation]:
    """Non-redundant generator list for the same group, size <= 2n."""
    return reduce_generators_list(group.generators, group.degree)


def restrict_action(group: PermGroup, delta) -> PermGroup:
    """The induced action on an invariant set of 1-based points, re-indexed
    order-preservingly to degree |delta|."""
    pts = sorted(set(delta))
    if any(not 1 <= p <= group.degree for p in pts):
        raise ValueError("delta contains out-of-range points")
    pset = set(p - 1 for p in pts)
    for g in group.generators:
        if any(g.images[p] not in pset for p in pset):
            raise ValueError("delta is not invariant under the group")
    index = {p - 1: i for i, p in enumerate(pts)}
    gens = []
    for g in group.generators:
        gens.append(Permutation([index[g.images[p - 1]] for p in pts]))
    return PermGroup(gens, max(len(pts), 1))


def embed_on_points(group: PermGroup, points, degree: int) -> PermGroup:
    """Inverse of restrict_action: place a degree-|points| group on the given
    ascending 1-based points inside a larger degree, fixing the rest."""
    pts = sorted(set(points))
    if len(pts) != group.degree:
        raise DegreeMismatchError("points count must equal group degree")
    gens = []
    for g in group.generators:
        images = list(range(degree))
        for i, p in enumerate(pts):
            images[p - 1] = pts[g.images[i]] - 1
        gens.append(Permutation(images))
    return PermGroup(gens, degree)


def sym_group(points, degree: int) -> PermGroup:
    """Symmetric group on a set of 1-based points inside ambient degree,
    generated by adjacent transpositions."""
    pts = sorted(set(points))
    if any(not 1 <= p <= degree for p in pts):
        raise ValueError("points out of range")
    gens = []
    for a, b in zip(pts, pts[1:]):
        gens.append(Permutation.from_cycles([[a, b]], degree))
    return PermGroup(gens, degree)


def alt_group(points, degree: int) -> PermGroup:
    """Alternating group on a set of 1-based points inside ambient degree,
    generated by 3-cycles through the two smallest points."""
    pts = sorted(set(points))
    if any(not 1 <= p <= degree for p in pts):
        raise ValueError("points out of range")
    gens = []
    if len(pts) >= 3:
        a, b = pts[0], pts[1]
        for c in pts[2:]:
            gens.append(Permutation.from_cycles([[a, b, c]], degree))
    return PermGroup(gens, degree)


def even_part(group: PermGroup) -> PermGroup:
    """The subgroup of even permutations (index 1 or 2).

    Uses the Reidemeister-Schreier generators for the transversal {e, t}
    with t a fixed odd generator: even generators and their t-conjugates,
    plus t*g and g*t for each odd generator g.
    """
    odd = [g for g in group.generators if not g.is_even]
    if not odd:
        return group
    t = odd[0]
    gens = []
    for g in group.generators:
        if g.is_even:
            gens.append(g)
            gens.append(g.conj_by(t))
        else:
            gens.append(t * g)
            gens.append(g * t)
    return PermGroup(reduce_generators_list(gens, group.degree), group.degree)


def direct_product_on_disjoint_supports(a: PermGroup, b: PermGroup) -> PermGroup:
    """Group generated by both generator sets; supports must be disjoint."""
    if a.degree != b.degree:
        raise DegreeMismatchError("ambient degrees differ")
    sup_a = set()
    for g in a.generators:
        sup_a.update(g.moved_points())
    for g in b.generators:
        if sup_a.intersection(g.moved_points()):
            raise ValueError("supports overlap")
    return PermGroup(list(a.generators) + list(b.generators), a.degree)
