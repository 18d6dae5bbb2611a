"""Straight-line programs and generator-relator presentations.

A presentation is derived from the Schreier-Sims data of a group: for every
level of the stabilizer chain, every transversal element u and every level
generator s, the sifting identity expressing u*s as a product of transversal
elements becomes one relator.  A map on the input generators extends to a
homomorphism exactly when all relators evaluate to the identity on the
proposed images.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DegreeMismatchError
from .groups import Permutation, PermGroup, _identity, _inv, _mul


@dataclass(frozen=True)
class StraightLineProgram:
    """Steps over abstract generators plus designated output steps.

    Steps are ("load", gen_index), ("inv", step) or ("mul", step, step);
    step references are 0-based and point at earlier steps only.
    """

    steps: tuple = ()
    outputs: tuple = ()

    def __post_init__(self):
        for i, op in enumerate(self.steps):
            kind = op[0]
            if kind == "load":
                if op[1] < 0:
                    raise ValueError("negative generator index")
            elif kind == "inv":
                if not 0 <= op[1] < i:
                    raise ValueError(f"step {i} references invalid step {op[1]}")
            elif kind == "mul":
                if not (0 <= op[1] < i and 0 <= op[2] < i):
                    raise ValueError(f"step {i} references invalid steps")
            else:
                raise ValueError(f"unknown op {kind!r}")
        for o in self.outputs:
            if not 0 <= o < len(self.steps):
                raise ValueError(f"output {o} out of range")

    @property
    def generator_count(self) -> int:
        return 1 + max((op[1] for op in self.steps if op[0] == "load"), default=-1)


def slp_evaluate(slp: StraightLineProgram, images) -> list[Permutation]:
    """Outputs of the program under generator_i -> images[i]."""
    images = list(images)
    if images:
        m = images[0].degree
        if any(p.degree != m for p in images):
            raise DegreeMismatchError("images must share one degree")
    else:
        m = 1
    if slp.generator_count > len(images):
        raise IndexError(
            f"program references generator {slp.generator_count - 1}, "
            f"got {len(images)} images")
    needed = set()
    stack = list(slp.outputs)
    while stack:
        i = stack.pop()
        if i in needed:
            continue
        needed.add(i)
        op = slp.steps[i]
        if op[0] == "inv":
            stack.append(op[1])
        elif op[0] == "mul":
            stack.append(op[1])
            stack.append(op[2])
    values: dict[int, tuple] = {}
    for i in sorted(needed):
        op = slp.steps[i]
        if op[0] == "load":
            values[i] = images[op[1]].images
        elif op[0] == "inv":
            values[i] = _inv(values[op[1]])
        else:
            values[i] = _mul(values[op[1]], values[op[2]])
    return [Permutation(values[o]) for o in slp.outputs]


def slp_to_text(slp: StraightLineProgram) -> str:
    lines = []
    for op in slp.steps:
        if op[0] == "load":
            lines.append(f"L{op[1]}")
        elif op[0] == "inv":
            lines.append(f"I{op[1]}")
        else:
            lines.append(f"M{op[1]},{op[2]}")
    for o in slp.outputs:
        lines.append(f"O {o}")
    return "\n".join(lines) + ("\n" if lines else "")


def slp_from_text(text: str) -> StraightLineProgram:
    steps, outputs = [], []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("L"):
            steps.append(("load", int(line[1:])))
        elif line.startswith("I"):
            steps.append(("inv", int(line[1:])))
        elif line.startswith("M"):
            j, k = line[1:].split(",")
            steps.append(("mul", int(j), int(k)))
        elif line.startswith("O"):
            outputs.append(int(line[1:].strip()))
        else:
            raise ValueError(f"bad SLP line: {raw!r}")
    return StraightLineProgram(tuple(steps), tuple(outputs))


def slp_restrict(slp: StraightLineProgram, outputs) -> StraightLineProgram:
    """The subprogram computing only the given output steps, renumbered."""
    needed = set()
    stack = list(outputs)
    while stack:
        i = stack.pop()
        if i in needed:
            continue
        needed.add(i)
        op = slp.steps[i]
        if op[0] == "inv":
            stack.append(op[1])
        elif op[0] == "mul":
            stack.append(op[1])
            stack.append(op[2])
    order = sorted(needed)
    renum = {old: new for new, old in enumerate(order)}
    steps = []
    for old in order:
        op = slp.steps[old]
        if op[0] == "load":
            steps.append(op)
        elif op[0] == "inv":
            steps.append(("inv", renum[op[1]]))
        else:
            steps.append(("mul", renum[op[1]], renum[op[2]]))
    return StraightLineProgram(tuple(steps), tuple(renum[o] for o in outputs))


@dataclass(frozen=True)
class Presentation:
    """Relators for a group, as one straight-line program with many outputs.

    A map generator_i -> image_i extends to a homomorphism from the source
    group exactly when every output of ``relators`` evaluates to the
    identity on the images.
    """

    generator_count: int
    relators: StraightLineProgram = field(default_factory=StraightLineProgram)


_presentation_memo: dict = {}


def presentation_from_group(g: PermGroup) -> Presentation:
    """Presentation on g's input generators, from its Schreier-Sims data.

    Results are memoized by generator signature; groups stay immutable.
    """
    cached = getattr(g, "_presentation", None)
    if cached is not None:
        return cached
    memo_hit = _presentation_memo.get(g.signature())
    if memo_hit is not None:
        PermGroup._set(g, "_presentation", memo_hit)
        return memo_hit
    prog = g._prog.fork()
    relator_nodes: list[int] = []

    def node_is_identity(node: int | None) -> bool:
        if node is None:
            return True
        return all(i == x for i, x in enumerate(prog.values[node]))

    # identity input generators never enter a level; pin them with a bare
    # "x_i" relator so their images are forced to the identity
    for i, gen in enumerate(g.generators):
        if gen.is_identity:
            for node, op in enumerate(prog.steps):
                if op == ("load", i):
                    relator_nodes.append(node)
                    break

    for li, level in enumerate(g._levels):
        for p in sorted(level.orbit):
            u = level.orbit[p]
            for s in level.gen_nodes:
                w = prog.mul(u, s)
                # sift u*s from this level; the BSGS is complete, so the
                # residue is the identity and w equals the product of the
                # transversal elements collected along the way
                cur = w
                used: list[int | None] = []
                for lj in range(li, len(g._levels)):
                    lvl = g._levels[lj]
                    images = prog.value(cur, g.degree)
                    q = images[lvl.base]
                    if q == lvl.base:
                        continue
                    t = lvl.orbit[q]
                    used.append(t)
                    cur = prog.mul(cur, prog.inv(t))
                assert node_is_identity(cur), "BSGS sift failed during presentation"
                # relator: (u*s) * (u_k ... u_1)^-1, built as cur above
                if cur is not None:
                    relator_nodes.append(cur)

    # deduplicate while preserving order
    seen = set()
    uniq = []
    for n in relator_nodes:
        if n not in seen:
            seen.add(n)
            uniq.append(n)
    full = StraightLineProgram(tuple(prog.steps), tuple(uniq))
    pres = Presentation(len(g.generators), slp_restrict(full, uniq))
    PermGroup._set(g, "_presentation", pres)
    _presentation_memo[g.signature()] = pres
    return pres


def verify_partial_hom(source_gens, images) -> bool:
    """True iff source_gens[i] -> images[i] extends to a homomorphism
    from <source_gens> to the images' symmetric group."""
    return first_failing_relator(source_gens, images) is None


def first_failing_relator(source_gens, images) -> int | None:
    """Index of the first relator violated by the proposed images, or None.

    Raises on count mismatch or on non-uniform degrees; the relator index
    refers to the presentation of PermGroup(source_gens).
    """
    source_gens = list(source_gens)
    images = list(images)
    if len(source_gens) != len(images):
        raise ValueError(
            f"{len(source_gens)} generators but {len(images)} images")
    if not source_gens:
        return None
    n = source_gens[0].degree
    if any(p.degree != n for p in source_gens):
        raise DegreeMismatchError("source generators must share one degree")
    return failing_relator_for_group(PermGroup(source_gens, n), images)


def failing_relator_for_group(group: PermGroup, images) -> int | None:
    """first_failing_relator against an already-built source group."""
    if len(images) != len(group.generators):
        raise ValueError("one image per generator required")
    pres = presentation_from_group(group)
    results = slp_evaluate(pres.relators, images)
    for i, r in enumerate(results):
        if not r.is_identity:
            return i
    return None
