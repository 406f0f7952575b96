from __future__ import annotations

from collections import Counter

import pytest

from cqsym import nonabelian as na
from cqsym.nonabelian import HookFamily, StrictRing, UndefinedDisplay, evaluate
from cqsym.partition import Partition
from cqsym.qpoly import ONE, ZERO, QPoly, qfact, qint
from cqsym.report import COUNTEREXAMPLE, MATCH, NOT_APPLICABLE, PASS, NotApplicable


def strict_or_none(fn, f):
    try:
        return fn(f)
    except UndefinedDisplay:
        return None


# -- families and hypotheses -------------------------------------------------------


def test_family_basics():
    f = HookFamily(5, 2, 3, 7, (1, 1))
    assert f.partition() == Partition([5, 2, 2, 1, 1])
    assert f.p == 2 and f.constant_b and f.b_value == 1
    assert f.in_general_regime  # 2 <= 7 - 3 - 2
    assert f.params() == {"i": 5, "a": 2, "ell": 3, "n": 7, "b": [1, 1]}
    with pytest.raises(ValueError):
        HookFamily(5, 2, 3, 7, (0, 1))
    with pytest.raises(ValueError):
        HookFamily(5, 2, 3, 7, (2, 1)).b_value


def test_admissibility():
    assert na.admissible(HookFamily(4, 1, 2, 6), na.E_N11)
    assert not na.admissible(HookFamily(3, 1, 2, 6), na.E_N11)  # i < n - ell
    assert not na.admissible(HookFamily(5, 0, 2, 6), na.E_N11)  # a = 0 shortens the shape
    assert not na.admissible(HookFamily(5, 1, 1, 6), na.E_N11)  # ell >= 2
    assert na.admissible(HookFamily(5, 2, 3, 7, (1,)), na.CONJECTURE)
    assert not na.admissible(HookFamily(5, 2, 3, 7, (2, 1)), na.CONJECTURE)
    # the constant-b e_{n-1,1} form inherits a <= n - ell - p
    gap = HookFamily(5, 4, 3, 7, (1,))
    assert not gap.in_general_regime and not na.admissible(gap, na.E_N11)


def test_documented_example_is_outside_hypotheses():
    # i = 4 < n - ell = 5
    f = HookFamily(4, 2, 2, 7, (1,))
    assert not na.admissible(f, na.E_N11)
    with pytest.raises(NotApplicable):
        na.coeff_e_n11_general(f)
    assert na.closed_form_check("general-e-n11", f).status == NOT_APPLICABLE


# -- bracket conventions -----------------------------------------------------------------


def test_negative_bracket_is_laurent():
    R = StrictRing()
    # [-2] = -q^{-2}[2]; times q^2 gives -(1+q)
    assert R.result(R.br(-2) * R.qp(2)) == -qint(2)


def test_runs_are_factorial_ratios():
    R = StrictRing()
    assert R.result(R.span(4, 2)) == qint(4) * qint(3) * qint(2)
    assert R.result(R.span(2, 3)) == ONE
    assert R.result(R.span(2, 4) * R.br(3)) == ONE
    with pytest.raises(UndefinedDisplay):
        R.result(R.span(2, 4))  # 1/[3] is not a polynomial


def test_strict_pole_and_continuation():
    def display(R, f):
        n = R.nv(f.n)
        return R.fact(n - f.n - 1) * R.br(n - f.n)  # [-1]! [0] read through n -> n + delta

    f = HookFamily(4, 1, 2, 6)
    with pytest.raises(UndefinedDisplay):
        evaluate(display, f)
    assert evaluate(display, f, continued=True) == ONE


def test_continuation_agrees_where_strict_is_defined():
    def display(R, f):
        n = R.nv(f.n)
        return R.fact(n - 3) * R.br(n) * R.qp(2) + R.br(n - 5)

    f = HookFamily(4, 1, 2, 6)
    assert evaluate(display, f) == evaluate(display, f, continued=True) == qfact(3) * qint(6) * QPoly.monomial(2) + qint(1)


def test_divergent_continuation_is_reported():
    def display(R, f):
        n = R.nv(f.n)
        return R.fact(n - f.n - 2)  # two factors of 1/[delta]-type poles

    with pytest.raises(UndefinedDisplay):
        evaluate(display, HookFamily(4, 1, 2, 6), continued=True)


# -- the closed forms --------------------------------------------------------------------


def test_hook_e_n11_first_row_full():
    # i = n-1: [n-1][n-2-a]...[n-ell-a] [n-ell-1]!
    n, a, ell = 7, 1, 3
    f = HookFamily(n - 1, a, ell, n)
    want = qint(n - 1) * qint(n - 2 - a) * qint(n - 3 - a) * qfact(n - ell - 1)
    assert na.coeff_e_n11_hook(f) == want == na.oracle_coefficient(f, (n - 1, 1))


def test_hook_e_n11_example():
    f = HookFamily(4, 1, 2, 6)
    assert na.coeff_e_n11_hook(f) == na.oracle_coefficient(f, (5, 1))


def test_hook_e_n22_first_row_full():
    for n, a, ell in [(6, 1, 2), (7, 2, 3), (7, 1, 2)]:
        f = HookFamily(n - 1, a, ell, n)
        assert na.coeff_e_n22_hook(f) == ZERO == na.oracle_coefficient(f, (n - 2, 2))


def test_hook_e_n22_examples():
    for f in [HookFamily(5, 2, 3, 7), HookFamily(5, 1, 3, 7), HookFamily(4, 1, 2, 6)]:
        assert na.coeff_e_n22_hook(f) == na.oracle_coefficient(f, (f.n - 2, 2))


def test_hook_form_refuses_b_list():
    with pytest.raises(NotApplicable):
        na.coeff_e_n11_hook(HookFamily(5, 2, 2, 7, (1,)))


@pytest.mark.parametrize("n", range(4, 8))
def test_general_reduces_to_hook(n):
    # b = (a,...,a,0,...,0) is the hook family of length ell + p'
    checked = 0
    for f in na.instances("general-e-n11", n):
        pp = sum(1 for x in f.b if x == f.a)
        if any(x not in (0, f.a) for x in f.b):
            continue
        hook = HookFamily(f.i, f.a, f.ell + pp, n)
        if not na.admissible(hook, na.E_N11):
            continue
        got, want = strict_or_none(na.coeff_e_n11_general, f), strict_or_none(na.coeff_e_n11_hook, hook)
        if got is not None and want is not None:
            assert got == want
            checked += 1
    if n >= 6:
        assert checked


@pytest.mark.parametrize("n", range(4, 8))
def test_constant_agrees_with_general(n):
    for f in na.instances("constant-e-n11", n):
        got, want = strict_or_none(na.coeff_e_n11_constant, f), strict_or_none(na.coeff_e_n11_general, f)
        if got is not None and want is not None:
            assert got == want


def test_constant_form_fails_in_gap():
    # outside a <= n - ell - p the constant-b form does not give the coefficient
    bad = 0
    for n in range(5, 8):
        for f in na.gap_instances(n):
            try:
                got = na.coeff_e_n11_constant(f, enforce_regime=False)
            except UndefinedDisplay:
                continue
            bad += got != na.oracle_coefficient(f, (n - 1, 1))
    assert bad > 0
    with pytest.raises(NotApplicable):
        na.coeff_e_n11_constant(HookFamily(5, 4, 3, 7, (1,)))


@pytest.mark.parametrize("name", ["hook-e-n11", "hook-e-n22", "general-e-n11", "constant-e-n11"])
def test_closed_forms_match_oracle_where_defined(name):
    tally = Counter()
    for n in range(2, 7):
        for f in na.instances(name, n):
            rep = na.closed_form_check(name, f)
            tally[(rep.extra.get("evaluation"), rep.status)] += 1
            if rep.extra.get("evaluation") == "strict":
                assert rep.status == PASS, rep.line()
    assert tally[("strict", PASS)] > 0


# -- conjecture ----------------------------------------------------------------------------


def test_conjecture_smallest_instance_gets_verdict():
    first = next(f for n in range(4, 8) for f in na.instances("conjecture-e-n22", n))
    rep = na.conjecture_e_n22_check(first)
    assert rep.kind == "conjecture"
    assert rep.status in (MATCH, COUNTEREXAMPLE, na.UNDEFINED)
    assert "general_regime" in rep.extra


def _value(display_fn, f):
    ev = na.evaluate_with_fallback(display_fn, f)
    return ev.value


@pytest.mark.parametrize("n", range(5, 8))
def test_conjecture_degenerations(n):
    compared = 0
    for f in na.instances("hook-e-n22", n):
        for p in range(1, n - f.ell):
            zero = HookFamily(f.i, f.a, f.ell, n, (0,) * p)
            if na.admissible(zero, na.CONJECTURE):
                lhs, rhs = _value(na._d55, zero), _value(na._d52, f)
                if lhs is not None and rhs is not None:
                    assert lhs == rhs, zero
                    compared += 1
        for p in range(1, n - f.ell):
            full = HookFamily(f.i, f.a, f.ell, n, (f.a,) * p)
            longer = HookFamily(f.i, f.a, f.ell + p, n)
            if na.admissible(full, na.CONJECTURE) and na.admissible(longer, na.E_N22):
                lhs, rhs = _value(na._d55, full), _value(na._d52, longer)
                if lhs is not None and rhs is not None:
                    assert lhs == rhs, full
                    compared += 1
    assert compared > 0


def test_conjecture_requires_constant_b():
    with pytest.raises(NotApplicable):
        na.conjecture_e_n22(HookFamily(5, 2, 2, 7, (2, 1)))


def test_enumeration_respects_hypotheses():
    for name, which in [("hook-e-n11", na.E_N11), ("general-e-n11", na.E_N11), ("conjecture-e-n22", na.CONJECTURE)]:
        for f in na.instances(name, 6):
            assert na.admissible(f, which)
            assert (f.p == 0) == name.startswith("hook")
    assert set(na.display_names()) == {"hook-e-n11", "hook-e-n22", "general-e-n11", "constant-e-n11", "conjecture-e-n22"}


@pytest.mark.parametrize("n", range(4, 8))
def test_a_zero_degenerates_to_abelian_route(n):
    # a = 0 leaves the single row (i); both hook displays then agree with the abelian expansion
    from cqsym.rectlemma import e_expansion_abelian

    for ell in range(2, n):
        for i in range(n - ell, n):
            f = HookFamily(i, 0, ell, n)
            X = e_expansion_abelian(Partition([i]), 1, n)
            for display, r in ((na._d51, 1), (na._d52, 2)):
                assert na.evaluate_with_fallback(display, f).value == X[Partition([n - r, r])]
