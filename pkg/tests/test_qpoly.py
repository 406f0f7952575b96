from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cqsym.qpoly import (
    ANY_CENTER,
    ONE,
    Q,
    ZERO,
    InexactDivision,
    QPoly,
    add,
    exact_div,
    is_nonnegative,
    is_unimodal,
    mul,
    palindrome_center,
    qbinomial,
    qfact,
    qint,
    qmultinomial,
    scale_power,
)

polys = st.lists(st.integers(-50, 50), max_size=8).map(QPoly)
nonzero_polys = polys.filter(bool)


def P(*c):
    return QPoly(c)


def test_qint_examples():
    assert qint(3) == P(1, 1, 1)
    assert qint(0) == ZERO
    assert qint(1) == ONE


def test_qfact_examples():
    assert qfact(0) == ONE
    assert qfact(2) == P(1, 1)
    assert qfact(3) == P(1, 2, 2, 1)


@pytest.mark.parametrize("fn", [qint, qfact])
def test_negative_arguments_rejected(fn):
    with pytest.raises(ValueError):
        fn(-1)


def test_qmultinomial_examples():
    assert qmultinomial([2, 2]) == qint(3) * P(1, 0, 1) == P(1, 1, 2, 1, 1)
    assert qmultinomial([1, 2]) == qint(3)
    for n in range(6):
        assert qmultinomial([n]) == ONE
    with pytest.raises(ValueError):
        qmultinomial([2, -1])


def test_ring_examples():
    assert add(P(1, 1), Q) == P(1, 2)
    assert mul(P(1, 1), P(1, 1)) == P(1, 2, 1)
    assert scale_power(P(1, 1), 2) == P(0, 0, 1, 1)


def test_exact_div_examples():
    assert exact_div(P(1, 2, 1), P(1, 1)) == P(1, 1)
    assert exact_div(qint(6), qint(3)) == P(1, 0, 0, 1)
    with pytest.raises(InexactDivision):
        exact_div(P(1, 0, 1), P(1, 1))


def test_palindrome_center_examples():
    assert palindrome_center(qint(5)) == 2
    assert palindrome_center(Q * qint(2) ** 3) == Fraction(5, 2)
    assert palindrome_center(P(1, 2)) is None
    assert palindrome_center(ZERO) is ANY_CENTER


def test_shape_predicate_examples():
    assert is_unimodal(P(1, 3, 2)) and is_nonnegative(P(1, 3, 2))
    assert not is_unimodal(P(1, 0, 1)) and is_nonnegative(P(1, 0, 1))
    assert not is_nonnegative(P(1, -1))


def test_trimming_and_degree():
    p = QPoly([3, 0, 0])
    assert p.to_list() == [3] and p.degree == 0
    assert ZERO.to_list() == [] and ZERO.degree < -10**9
    assert Q.shift(3).low_degree == 4


def test_pretty():
    assert P(1, -2, 0, 1).pretty() == "1 - 2q + q^3"
    assert ZERO.pretty() == "0"


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(polys, nonzero_polys)
def test_exact_division_inverts_product(a, b):
    assert (a * b).exact_div(b) == a


@given(polys, nonzero_polys)
def test_divmod_reconstructs(a, b):
    if abs(b.coeffs[-1]) != 1:
        return  # integer long division needs a unit leading coefficient
    quo, rem = a.divmod(b)
    assert quo * b + rem == a
    assert not rem or rem.degree < b.degree


@given(st.integers(0, 12), st.integers(0, 12))
def test_qint_additivity(m, n):
    # [m+n] = [m] + q^m [n]
    assert qint(m + n) == qint(m) + qint(n).shift(m)


@given(st.integers(0, 10), st.integers(0, 10))
def test_qbinomial_pascal(n, k):
    if 1 <= k <= n:
        assert qbinomial(n, k) == qbinomial(n - 1, k - 1) + qbinomial(n - 1, k).shift(k)
    assert qbinomial(n, k)(1) == (_binom(n, k))


def _binom(n, k):
    from math import comb

    return comb(n, k) if 0 <= k <= n else 0


@given(st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_multinomials_are_palindromic_unimodal(parts):
    m = qmultinomial(parts)
    assert m.is_nonnegative() and m.is_unimodal()
    assert m.palindrome_center() == Fraction(m.degree, 2)


@given(st.lists(st.integers(0, 20), max_size=6))
def test_reversal_is_palindromic(c):
    p = QPoly(c + c[::-1])
    assert p.palindrome_center() is not None
