import pytest

import oracles
from homext.groups import PermGroup, parse_permutation_list
from homext.lattice import low_index_classes, subgroup_classes, subgroup_count


def exhaustive_subgroups(group):
    """All subgroups by closing every subset of elements (tiny groups)."""
    elems = sorted(oracles.closure([g.images for g in group.generators],
                                   group.degree))
    subs = set()
    # closing all subsets is exponential; closing all pairs suffices for
    # groups of order <= 24 up to 2-generated pieces, so close all pairs and
    # then all (subgroup, element) pairs to a fixpoint
    subs.add(frozenset(oracles.closure([], group.degree)))
    for x in elems:
        subs.add(frozenset(oracles.closure([x], group.degree)))
    changed = True
    while changed:
        changed = False
        for s in list(subs):
            for x in elems:
                if x in s:
                    continue
                t = frozenset(oracles.closure(list(s) + [x], group.degree))
                if t not in subs:
                    subs.add(t)
                    changed = True
    return subs


def classes_brute(group, subs):
    elems = sorted(oracles.closure([g.images for g in group.generators],
                                   group.degree))
    remaining = set(subs)
    classes = []
    while remaining:
        s = next(iter(remaining))
        orbit = {oracles.conjugate_set(s, x) for x in elems}
        classes.append(orbit)
        remaining -= orbit
    return classes


@pytest.mark.parametrize("gens,degree,n_subgroups,n_classes", [
    ("(1 2),(1 2 3)", 3, 6, 4),          # S3
    ("(1 2 3),(1 2)(3 4)", 4, 10, 5),    # A4
    ("(1 2),(1 2 3 4)", 4, 30, 11),      # S4
    ("(1 2 3 4),(1 3)", 4, 10, 8),       # D4
])
def test_known_counts(gens, degree, n_subgroups, n_classes):
    g = PermGroup(parse_permutation_list(gens, degree), degree)
    classes = subgroup_classes(g)
    assert len(classes) == n_classes
    assert sum(c.conjugate_count for c in classes) == n_subgroups


def test_known_counts_a5_s5():
    a5 = PermGroup(parse_permutation_list("(1 2 3),(1 2 3 4 5)", 5), 5)
    classes = subgroup_classes(a5)
    assert len(classes) == 9
    assert sum(c.conjugate_count for c in classes) == 59
    s5 = PermGroup(parse_permutation_list("(1 2),(1 2 3 4 5)", 5), 5)
    classes5 = subgroup_classes(s5)
    assert len(classes5) == 19
    assert sum(c.conjugate_count for c in classes5) == 156


@pytest.mark.parametrize("gens,degree", [
    ("(1 2),(1 2 3)", 3),
    ("(1 2 3),(1 2)(3 4)", 4),
    ("(1 2),(1 2 3 4)", 4),
    ("(1 2 3 4 5 6)", 6),
    ("(1 2)(3 4),(1 3)(2 4)", 4),
])
def test_complete_against_exhaustive(gens, degree):
    g = PermGroup(parse_permutation_list(gens, degree), degree)
    subs = exhaustive_subgroups(g)
    brute_classes = classes_brute(g, subs)
    classes = subgroup_classes(g)
    assert len(classes) == len(brute_classes)
    assert sum(c.conjugate_count for c in classes) == len(subs)
    # every returned rep is one of the brute subgroups and class sizes match
    lib_sets = {}
    for c in classes:
        s = frozenset(p.images for p in c.rep.elements())
        lib_sets[s] = c.conjugate_count
    for orbit in brute_classes:
        reps_in = [s for s in orbit if s in lib_sets]
        assert len(reps_in) == 1
        assert lib_sets[reps_in[0]] == len(orbit)


def test_low_index_filter():
    s4 = PermGroup(parse_permutation_list("(1 2),(1 2 3 4)", 4), 4)
    low = low_index_classes(s4, 4)
    indices = [24 // c.order for c in low]
    assert indices == sorted(indices)
    assert set(indices) == {1, 2, 3, 4}
    assert all(24 // c.order <= 4 for c in low)


def test_subgroup_count_c6():
    c6 = PermGroup(parse_permutation_list("(1 2 3 4 5 6)", 6), 6)
    assert subgroup_count(c6) == 4  # 1, C2, C3, C6
