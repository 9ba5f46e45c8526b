from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from verystable.polyfactor import (
    FactoredProduct,
    IntPoly,
    NotPolynomial,
    eval_at_one,
    expand_numerator_denominator,
    is_monic_leading_and_constant_one,
    is_palindromic,
    rational_equal,
    to_polynomial,
)

factor_maps = st.dictionaries(st.integers(1, 7), st.integers(-3, 3), max_size=4)


def test_expand_unit():
    assert expand_numerator_denominator(FactoredProduct.unit()) == (IntPoly([1]), IntPoly([1]))


def test_expand_simple_ratio():
    num, den = expand_numerator_denominator(FactoredProduct({2: 1, 1: -1}))
    assert num == IntPoly([1, 0, -1])
    assert den == IntPoly([1, -1])


@pytest.mark.parametrize("c", range(0, 9))
def test_expand_binomial(c):
    num, den = expand_numerator_denominator(FactoredProduct({1: c}))
    assert list(num.coeffs) == [(-1) ** k * comb(c, k) for k in range(c + 1)]
    assert den == IntPoly.one()


def test_to_polynomial_examples():
    assert to_polynomial(FactoredProduct({2: 1, 1: -1})) == IntPoly([1, 1])
    res = to_polynomial(FactoredProduct({1: 1, 2: -1}))
    assert isinstance(res, NotPolynomial)
    assert res.remainder_degree >= 0
    for k in range(1, 12):
        fp = FactoredProduct({k: 1}) * FactoredProduct({1: -1})
        assert to_polynomial(fp) == IntPoly.geometric(k)


def test_long_division_leaves_remainder():
    # (1 - t) / (1 - t^2) = 1 / (1 + t): remainder of (1 - t) by (1 - t^2) is nonzero
    q, r = divmod(IntPoly([1, -1]), IntPoly([1, 0, -1]))
    assert q == IntPoly() and r == IntPoly([1, -1])


def test_palindrome_and_value_at_one():
    p = IntPoly([1, 1, 1])
    assert is_palindromic(p) and eval_at_one(p) == 3
    assert not is_palindromic(IntPoly([1, 2]))
    q = IntPoly([1, 1]) * IntPoly([1, 0, 1])
    assert q == IntPoly([1, 1, 1, 1])
    assert is_palindromic(q) and eval_at_one(q) == 4
    assert is_monic_leading_and_constant_one(q)
    assert not is_monic_leading_and_constant_one(IntPoly([1, 2]))


def test_render():
    assert FactoredProduct({2: 3, 1: -1}).render() == "(1-t^2)^3 (1-t)^-1"
    assert FactoredProduct({}).render() == "1"
    assert FactoredProduct({1: 0, 3: 1}).render() == "(1-t^3)"


def test_zero_exponents_normalized():
    assert FactoredProduct({1: 0, 2: 0}) == FactoredProduct.unit()
    with pytest.raises(ValueError):
        FactoredProduct({0: 1})


@given(factor_maps, factor_maps)
def test_multiplicativity(a, b):
    fa, fb = FactoredProduct(a), FactoredProduct(b)
    pa, pb, pab = to_polynomial(fa), to_polynomial(fb), to_polynomial(fa * fb)
    if isinstance(pa, IntPoly) and isinstance(pb, IntPoly):
        assert pab == pa * pb


@given(factor_maps)
def test_round_trip_to_unit(a):
    fp = FactoredProduct(a)
    assert to_polynomial(fp * fp.inverse()) == IntPoly.one()
    assert rational_equal(fp / fp, FactoredProduct.unit())


@given(factor_maps, factor_maps)
def test_rational_equal_is_exact(a, b):
    fa, fb = FactoredProduct(a), FactoredProduct(b)
    # distinct normalized exponent maps give distinct rational functions
    assert rational_equal(fa, fb) == (fa == fb)


def test_big_exponents_stay_exact():
    p = to_polynomial(FactoredProduct({30: 40, 1: -40}))
    assert isinstance(p, IntPoly)
    assert eval_at_one(p) == 30**40
