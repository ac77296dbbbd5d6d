import pytest
from hypothesis import given, strategies as st

from wgraphs.laurent import ONE, X, X_INV, ZERO, LaurentPolynomial


def L(terms):
    return LaurentPolynomial(terms)


polys = st.dictionaries(
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=-9, max_value=9),
    max_size=6,
).map(LaurentPolynomial)


class TestAdd:
    def test_additive_inverse(self):
        assert X + (-X) == ZERO

    def test_cancellation(self):
        assert L({1: 1, -1: -1}) + X_INV == X

    def test_doubling(self):
        p = L({1: 1, -1: 1})
        assert p + p == L({1: 2, -1: 2})


class TestMul:
    def test_difference_of_squares(self):
        assert L({1: 1, -1: -1}) * L({1: 1, -1: 1}) == L({2: 1, -2: -1})

    def test_identity(self):
        p = L({3: 2, 0: -1})
        assert ONE * p == p

    def test_exponent_addition(self):
        assert X_INV * X_INV == L({-2: 1})


class TestBar:
    def test_x(self):
        assert X.bar() == X_INV

    def test_mixed(self):
        assert L({1: 1, -1: -1}).bar() == L({-1: 1, 1: -1})

    def test_constant_fixed(self):
        assert L(5).bar() == L(5)


class TestCoeff:
    def test_read_off(self):
        assert L({1: 1, -1: -1}).coeff(-1) == -1

    def test_zero_poly(self):
        assert ZERO.coeff(0) == 0

    def test_absent(self):
        assert L({2: 1, 0: 3}).coeff(2) == 1
        assert L({2: 1, 0: 3}).coeff(1) == 0


class TestEvalAtOne:
    @pytest.mark.parametrize(
        "poly,expected",
        [(L({1: 1, -1: -1}), 0), (L({1: 1, -1: 1}), 2), (L({-1: -1}), -1)],
    )
    def test_examples(self, poly, expected):
        assert poly.eval_at_one() == expected


class TestCanonicalForm:
    def test_no_zero_coefficients_stored(self):
        p = L({1: 1}) + L({1: -1})
        assert p._terms == {}
        assert p == 0

    def test_equal_values_equal_repr(self):
        a = L({2: 1, 0: -1})
        b = (X - ONE) * (X + ONE) * ONE
        assert a == b and hash(a) == hash(b) and a._terms == b._terms

    def test_int_coercion(self):
        assert X + 0 == X
        assert 2 * X == L({1: 2})
        assert X - 1 == L({1: 1, 0: -1})


class TestText:
    def test_descending_exponents(self):
        assert str(L({2: 1, -2: -1})) == "x^2 - x^-2"
        assert str(L({1: 2, -1: 2})) == "2*x + 2*x^-1"
        assert str(ZERO) == "0"
        assert str(L({-1: -1})) == "-x^-1"


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r


@given(polys, polys)
def test_bar_is_ring_involution(p, q):
    assert (p * q).bar() == p.bar() * q.bar()
    assert p.bar().bar() == p


@given(polys, polys)
def test_eval_at_one_is_ring_hom(p, q):
    assert (p + q).eval_at_one() == p.eval_at_one() + q.eval_at_one()
    assert (p * q).eval_at_one() == p.eval_at_one() * q.eval_at_one()
