import pytest

import oracles
from homext.errors import (
    BoundExceededError,
    PartialMapError,
    TriangularStructureError,
)
from homext.extension import (
    HomExtInstance,
    SubgroupClassKey,
    build_extension,
    compute_target_multiset,
    coset_action_images,
    count_extensions,
    enumerate_equivalent,
    extension_restricts_to_gamma,
    f_oracle,
    homext_threshold,
    index_preorder,
    jordan_liebeck_support,
    solve,
    stabilizer_under_hom,
    triangle_oracle,
)
from homext.groups import (
    Permutation,
    PermGroup,
    alt_group,
    parse_permutation,
    parse_permutation_list,
    point_stabilizer,
    same_group,
)
from homext.multissr import consolidate


def P(text, degree=None):
    return parse_permutation(text, degree)


def a3_regular_instance(mode="brute"):
    """G = S3, M = A3, psi the (right-)regular action of A3 on 3 points."""
    s3 = PermGroup(parse_permutation_list("(1 2),(1 2 3)", 3), 3)
    gamma = [(P("(1 2 3)", 3), P("(1 2 3)", 3))]
    return HomExtInstance(3, 3, s3, gamma, mode)


class TestInstanceValidation:
    def test_domain_must_lie_in_g(self):
        a4 = PermGroup(parse_permutation_list("(1 2 3),(1 2 4)", 4), 4)
        with pytest.raises(ValueError):
            HomExtInstance(4, 3, a4, [(P("(1 2)", 4), P("(1 2)", 3))])

    def test_gamma_must_define_homomorphism(self):
        s3 = PermGroup(parse_permutation_list("(1 2),(1 2 3)", 3), 3)
        with pytest.raises(PartialMapError):
            HomExtInstance(3, 2, s3, [(P("(1 2 3)", 3), P("(1 2)", 2))])

    def test_triangular_requires_alternating(self):
        s3 = PermGroup(parse_permutation_list("(1 2),(1 2 3)", 3), 3)
        with pytest.raises(TriangularStructureError):
            HomExtInstance(3, 1, s3, [(P("(1 2 3)", 3), P("()", 1))],
                           mode="triangular")

    def test_triangular_m_bound(self):
        a5 = PermGroup(parse_permutation_list("(1 2 3),(1 2 3 4 5)", 5), 5)
        gamma = [(g, Permutation.identity(8)) for g in a5.generators]
        with pytest.raises(TriangularStructureError):
            HomExtInstance(5, 8, a5, gamma, mode="triangular")
        # m = 7 < 2^4/sqrt(5) ~ 7.16 passes
        gamma7 = [(g, Permutation.identity(7)) for g in a5.generators]
        HomExtInstance(5, 7, a5, gamma7, mode="triangular")


class TestStabilizerUnderHom:
    def test_regular_action_trivial_stabilizer(self):
        inst = a3_regular_instance()
        assert stabilizer_under_hom(inst, 1).order() == 1

    def test_trivial_action_full_stabilizer(self):
        s3 = PermGroup(parse_permutation_list("(1 2),(1 2 3)", 3), 3)
        gamma = [(P("(1 2 3)", 3), Permutation.identity(2))]
        inst = HomExtInstance(3, 2, s3, gamma)
        for x in (1, 2):
            assert same_group(stabilizer_under_hom(inst, x), inst.m_group)

    def test_natural_action_point_stabilizer(self):
        s3 = PermGroup(parse_permutation_list("(1 2),(1 2 3)", 3), 3)
        gamma = [(g, g) for g in s3.generators]
        inst = HomExtInstance(3, 3, s3, gamma)
        stab = stabilizer_under_hom(inst, 3)
        assert stab.order() == 2 and stab.contains(P("(1 2)", 3))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            stabilizer_under_hom(a3_regular_instance(), 4)


class TestTargetMultiset:
    def test_regular_action(self):
        inst = a3_regular_instance()
        target = compute_target_multiset(inst)
        assert target.size == 1
        (key, mult), = list(target)
        assert mult == 1 and key.rep.order() == 1

    def test_trivial_psi_m2(self):
        s3 = PermGroup(parse_permutation_list("(1 2),(1 2 3)", 3), 3)
        gamma = [(P("(1 2 3)", 3), Permutation.identity(2))]
        inst = HomExtInstance(3, 2, s3, gamma)
        target = compute_target_multiset(inst)
        (key, mult), = list(target)
        assert mult == 2 and same_group(key.rep, inst.m_group)

    def test_natural_s3(self):
        s3 = PermGroup(parse_permutation_list("(1 2),(1 2 3)", 3), 3)
        gamma = [(g, g) for g in s3.generators]
        inst = HomExtInstance(3, 3, s3, gamma)
        target = compute_target_multiset(inst)
        (key, mult), = list(target)
        assert mult == 1 and key.rep.order() == 2


class TestFOracle:
    def test_spec_examples(self):
        inst = a3_regular_instance()
        s3, a3 = inst.g_group, inst.m_group
        c2 = PermGroup([P("(1 2)", 3)], 3)
        f = f_oracle(inst, SubgroupClassKey(c2, s3))
        (key, mult), = list(f)
        assert mult == 1 and key.rep.order() == 1
        f2 = f_oracle(inst, SubgroupClassKey(a3, s3))
        (key2, mult2), = list(f2)
        assert mult2 == 2 and same_group(key2.rep, a3)
        f3 = f_oracle(inst, SubgroupClassKey(s3, s3))
        (key3, mult3), = list(f3)
        assert mult3 == 1 and same_group(key3.rep, a3)

    def test_index_bound(self):
        inst = a3_regular_instance()
        triv = PermGroup([], degree=3)
        with pytest.raises(BoundExceededError):
            f_oracle(inst, SubgroupClassKey(triv, inst.g_group))

    def test_invariance_under_conjugated_l(self):
        inst = a3_regular_instance()
        s3 = inst.g_group
        c2 = PermGroup([P("(1 2)", 3)], 3)
        c2c = PermGroup([P("(1 3)", 3)], 3)
        f1 = f_oracle(inst, SubgroupClassKey(c2, s3))
        f2 = f_oracle(inst, SubgroupClassKey(c2c, s3))
        cons = list(zip(*[list(m) for m in (f1, f2)]))
        (k1, m1), (k2, m2) = list(f1)[0], list(f2)[0]
        assert m1 == m2
        assert inst.class_equiv(k1, k2)


class TestJordanLiebeck:
    def test_point_stabilizer_of_a7(self):
        a7 = alt_group(range(1, 8), 7)
        k = point_stabilizer(a7, 1)
        assert jordan_liebeck_support(k, 2) == [1]

    def test_whole_group(self):
        a6 = alt_group(range(1, 7), 6)
        assert jordan_liebeck_support(a6, 1) == []
        assert jordan_liebeck_support(a6, 3) == []

    def test_alt_subset_inside_a8(self):
        a8_on_tail = alt_group(range(3, 9), 8)
        assert jordan_liebeck_support(a8_on_tail, 3) == [1, 2]

    def test_not_found(self):
        # exotic transitive A5 inside A6: no small invariant support
        a5t = PermGroup(parse_permutation_list(
            "(1 2 3 4 5),(1 4)(5 6)", 6), 6)
        assert a5t.order() == 60
        assert jordan_liebeck_support(a5t, 3) is None


class TestIndexPreorder:
    def test_examples(self):
        s3 = PermGroup(parse_permutation_list("(1 2),(1 2 3)", 3), 3)
        a3 = PermGroup([P("(1 2 3)", 3)], 3)
        c2 = PermGroup([P("(1 2)", 3)], 3)
        ka, kc = SubgroupClassKey(a3, s3), SubgroupClassKey(c2, s3)
        assert index_preorder(ka, kc)
        assert not index_preorder(kc, ka)
        assert index_preorder(ka, ka)
        s4 = PermGroup(parse_permutation_list("(1 2),(1 2 3 4)", 4), 4)
        k1 = SubgroupClassKey(PermGroup([P("(1 2)", 4)], 4), s4)
        k2 = SubgroupClassKey(PermGroup([P("(1 2)(3 4)", 4)], 4), s4)
        assert index_preorder(k1, k2) and index_preorder(k2, k1)


class TestWorkedInstance:
    def test_solve_unique_solution(self):
        inst = a3_regular_instance()
        sols = solve(inst)
        assert len(sols) == 1
        (key, mult), = list(sols[0])
        assert mult == 1
        assert key.rep.order() == 2  # the transposition class

    def test_build_extension(self):
        inst = a3_regular_instance()
        sols = solve(inst)
        ext = build_extension(inst, sols[0])
        assert extension_restricts_to_gamma(inst, ext)
        # the extension is a faithful natural S3-action on 3 points
        img_group = PermGroup(list(ext.images), 3)
        assert img_group.order() == 6

    def test_enumerate_equivalent_three(self):
        inst = a3_regular_instance()
        ext = build_extension(inst, solve(inst)[0])
        all_ext = list(enumerate_equivalent(inst, ext))
        assert len(all_ext) == 3
        assert len(set(all_ext)) == 3
        for e in all_ext:
            assert extension_restricts_to_gamma(inst, e)

    def test_count(self):
        assert count_extensions(a3_regular_instance()) == 3

    def test_threshold(self):
        inst = a3_regular_instance()
        val, out = homext_threshold(inst, 2)
        assert val == "more" and len(out) == 2 and len(set(out)) == 2
        val5, out5 = homext_threshold(inst, 5)
        assert val5 == 3 and len(set(out5)) == 3
        val0, out0 = homext_threshold(inst, 0)
        assert val0 == "more" and out0 == []

    def test_brute_force_cross_check(self):
        inst = a3_regular_instance()
        _, out = homext_threshold(inst, 50)
        got = {tuple(p.images for p in e.images) for e in out}
        brute = set()
        gens = [g.images for g in inst.g_group.generators]
        for images in oracles.enumerate_homs(gens, 3):
            table = oracles.homomorphism_table(gens, list(images))
            if table[(1, 2, 0)] == (1, 2, 0):  # restricts to psi on (1 2 3)
                brute.add(images)
        assert got == brute
        assert len(brute) == 3


class TestPsiOnWholeGroup:
    def test_extension_is_psi_itself(self):
        s3 = PermGroup(parse_permutation_list("(1 2),(1 2 3)", 3), 3)
        gamma = [(g, g) for g in s3.generators]
        inst = HomExtInstance(3, 3, s3, gamma)
        sols = solve(inst)
        assert len(sols) == 1
        ext = build_extension(inst, sols[0])
        exts = list(enumerate_equivalent(inst, ext))
        assert len(exts) == 1
        assert count_extensions(inst) == 1

    def test_trivial_psi_m1(self):
        s3 = PermGroup(parse_permutation_list("(1 2),(1 2 3)", 3), 3)
        gamma = [(P("(1 2 3)", 3), Permutation.identity(1))]
        inst = HomExtInstance(3, 1, s3, gamma)
        sols = solve(inst)
        assert len(sols) == 1
        (key, mult), = list(sols[0])
        assert mult == 1 and same_group(key.rep, s3)
        assert count_extensions(inst) == 1


class TestNoSolution:
    def test_unmatchable_target(self):
        # G = A4: no subgroup of index 2, so psi = sign-like action of V4
        # on 2 points cannot extend... V4 has no index-2-image map visible
        # to A4: use M = V4 <= A4 with psi the action on cosets of C2.
        a4 = PermGroup(parse_permutation_list("(1 2 3),(1 2)(3 4)", 4), 4)
        v4 = PermGroup(parse_permutation_list("(1 2)(3 4),(1 3)(2 4)", 4), 4)
        c2 = PermGroup([P("(1 2)(3 4)", 4)], 4)
        m, images = coset_action_images(v4, [c2])
        assert m == 2
        gamma = list(zip(v4.generators, images))
        inst = HomExtInstance(4, 2, a4, gamma)
        assert solve(inst) == []
        assert count_extensions(inst) == 0
        val, out = homext_threshold(inst, 3)
        assert val == 0 and out == []
        # brute-force confirmation: no homomorphism A4 -> S2 extends gamma
        gens = [g.images for g in a4.generators]
        for images4 in oracles.enumerate_homs(gens, 2):
            table = oracles.homomorphism_table(gens, list(images4))
            assert any(table[a.images] != b.images for a, b in inst.gamma)


class TestTriangleOracle:
    def test_m_equals_g_point_stabilizer(self):
        a5 = alt_group(range(1, 6), 5)
        gamma = [(g, g) for g in a5.generators]
        inst = HomExtInstance(5, 5, a5, gamma, mode="triangular")
        assert inst.sigma == []
        k = point_stabilizer(a5, 1)
        key = SubgroupClassKey(k, inst.m_group)
        out = triangle_oracle(inst, key)
        assert out is not None
        assert same_group(out.rep, alt_group({2, 3, 4, 5}, 5))

    def test_m_itself_maps_to_g(self):
        a5 = alt_group(range(1, 6), 5)
        gamma = [(g, g) for g in a5.generators]
        inst = HomExtInstance(5, 5, a5, gamma, mode="triangular")
        key = SubgroupClassKey(inst.m_group, inst.m_group)
        out = triangle_oracle(inst, key)
        assert out is not None and same_group(out.rep, a5)

    def test_odd_restriction_gives_even_part(self):
        # K = stabilizer of {1,2} pointwise-ish with odd action on it:
        # inside M = A5 take K generated by (1 2)(3 4) and (3 4 5):
        # orbits {1,2}, {3,4,5}; K^{1,2} contains an odd permutation
        a5 = alt_group(range(1, 6), 5)
        gamma = [(g, g) for g in a5.generators]
        inst = HomExtInstance(5, 5, a5, gamma, mode="triangular")
        k = PermGroup(parse_permutation_list("(1 2)(3 4 5)", 5), 5)
        key = SubgroupClassKey(k, inst.m_group)
        out = triangle_oracle(inst, key)
        if out is not None:
            assert all(g.is_even for g in out.rep.generators)

    def test_triangular_solve_matches_brute(self):
        # M = A5 natural, psi = natural action on 5 points, G = A5
        a5 = alt_group(range(1, 6), 5)
        gamma = [(g, g) for g in a5.generators]
        tri = HomExtInstance(5, 5, a5, gamma, mode="triangular")
        bru = HomExtInstance(5, 5, a5, gamma, mode="brute")
        sols_t = solve(tri)
        sols_b = solve(bru)
        assert len(sols_t) == len(sols_b) == 1
        assert count_extensions(tri) == count_extensions(bru) == 1


class TestCosetActionImages:
    def test_regular_action_of_a3(self):
        a3 = PermGroup([P("(1 2 3)", 3)], 3)
        triv = PermGroup([], degree=3)
        m, images = coset_action_images(a3, [triv])
        assert m == 3
        assert images[0].cycles() == [[1, 2, 3]]

    def test_stabilizer_profile_round_trip(self):
        # action of S4 on cosets of D4 (index 3) has D4-class stabilizers
        s4 = PermGroup(parse_permutation_list("(1 2),(1 2 3 4)", 4), 4)
        d4 = PermGroup(parse_permutation_list("(1 2 3 4),(1 3)", 4), 4)
        m, images = coset_action_images(s4, [d4])
        assert m == 3
        gamma = list(zip(s4.generators, images))
        inst = HomExtInstance(4, 3, s4, gamma)
        target = compute_target_multiset(inst)
        (key, mult), = list(target)
        assert mult == 1
        assert inst.class_equiv(key, SubgroupClassKey(d4, inst.m_group))


class TestCompletenessAtDeskScale:
    @pytest.mark.parametrize("g_spec,degree,m,dom_spec", [
        ("(1 2),(1 2 3)", 3, 3, "(1 2 3)"),            # S3 over A3
        ("(1 2),(1 2 3)", 3, 4, "(1 2)"),              # S3 over C2
        ("(1 2 3),(1 2)(3 4)", 4, 4, "(1 2 3)"),       # A4 over C3
        ("(1 2),(1 2 3 4)", 4, 4, "(1 2 3),(1 2)(3 4)"),  # S4 over A4
        ("(1 2 3),(1 2 3 4 5)", 5, 5, "(1 2 3),(2 3)(4 5)"),  # A5 over A4-ish
    ])
    def test_threshold_enumeration_equals_brute_set(self, g_spec, degree, m,
                                                    dom_spec):
        g_grp = PermGroup(parse_permutation_list(g_spec, degree), degree)
        dom = parse_permutation_list(dom_spec, degree)
        g_gens = [p.images for p in g_grp.generators]
        # choose psi = restriction of some true homomorphism, so instances
        # are satisfiable; also run one unsatisfiable psi when available
        all_homs = oracles.enumerate_homs(g_gens, m)
        tables = [oracles.homomorphism_table(g_gens, list(h)) for h in all_homs]
        psi_images = [tuple(t[a.images] for a in dom) for t in tables]
        sample = {psi_images[0], psi_images[len(psi_images) // 2],
                  psi_images[-1]}
        for psi in sample:
            gamma = [(a, Permutation(b)) for a, b in zip(dom, psi)]
            inst = HomExtInstance(degree, m, g_grp, gamma, "brute")
            val, out = homext_threshold(inst, 10 ** 6)
            got = {tuple(p.images for p in e.images) for e in out}
            brute = {h for h, t in zip(all_homs, tables)
                     if all(t[a.images] == b for a, b in zip(dom, psi))}
            assert got == brute
            assert val == len(brute)


class TestRestrictionIdentity:
    def test_induced_action_profile_matches_f_oracle(self):
        # Cor: the M-action induced by the natural G-action on L\G has
        # stabilizer profile equivalent to F_L
        rng_cases = [
            ("(1 2),(1 2 3 4)", 4, "(1 2 3),(1 2)(3 4)", "(1 2 3 4),(1 3)"),
            ("(1 2),(1 2 3 4)", 4, "(1 2 3 4),(1 3)", "(1 2 3)"),
            ("(1 2 3),(1 2 3 4 5)", 5, "(1 2 3),(2 3)(4 5)", "(1 2 3 4 5)"),
        ]
        for g_spec, degree, m_spec, l_spec in rng_cases:
            g_grp = PermGroup(parse_permutation_list(g_spec, degree), degree)
            m_grp = PermGroup(parse_permutation_list(m_spec, degree), degree)
            l_grp = PermGroup(parse_permutation_list(l_spec, degree), degree)
            m = g_grp.order() // l_grp.order()
            # natural G-action on L\G, restricted to M's generators
            n_points, g_images = coset_action_images(g_grp, [l_grp])
            assert n_points == m
            evaluator = g_grp.image_evaluator(g_images)
            gamma = [(a, evaluator(a)) for a in m_grp.generators]
            inst = HomExtInstance(degree, m, g_grp, gamma, "brute")
            induced_profile = compute_target_multiset(inst)
            f_l = f_oracle(inst, SubgroupClassKey(l_grp, g_grp))
            ca, cb = consolidate([induced_profile, f_l],
                                 lambda a, b: inst.class_equiv(a, b))
            assert ca == cb
