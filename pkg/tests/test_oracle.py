from __future__ import annotations

from itertools import product
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from cqsym.oracle import (
    EExpansion,
    common_center,
    e_in_m,
    graph_e_expansion,
    monomial_coefficient,
    to_e_basis,
    x_lambda_oracle,
)
from cqsym.partition import Partition, complete_graph, empty_graph, inc_graph, partitions_in_staircase, path_graph, staircase
from cqsym.qpoly import ONE, Q, QPoly, qfact, qint, qmultinomial


def P(*parts):
    return Partition(parts)


def naive_monomial(G, content):
    """Direct enumeration over all color assignments."""
    n = G.n
    acc = {}
    for colors in product(range(len(content)), repeat=n):
        if [colors.count(c) for c in range(len(content))] != list(content):
            continue
        if any(colors[i - 1] == colors[j - 1] for i, j in G.edges):
            continue
        asc = sum(1 for i, j in G.edges if colors[i - 1] < colors[j - 1])
        acc[asc] = acc.get(asc, 0) + 1
    top = max(acc, default=-1)
    return QPoly([acc.get(k, 0) for k in range(top + 1)])


def test_monomial_examples():
    assert monomial_coefficient(complete_graph(3), (1, 1, 1)) == QPoly([1, 2, 2, 1])
    assert monomial_coefficient(path_graph(3), (2, 1)) == Q
    for mu in [(2, 1), (1, 1, 1), (3,)]:
        assert monomial_coefficient(empty_graph(3), mu) == qmultinomial([0] + list(mu))(1) * ONE


def test_e_in_m_examples():
    assert e_in_m(P(2)) == {P(1, 1): 1}
    assert e_in_m(P(1, 1)) == {P(2): 1, P(1, 1): 2}
    assert e_in_m(P(2, 1)) == {P(2, 1): 1, P(1, 1, 1): 3}


def test_to_e_basis_examples():
    assert to_e_basis({P(1, 1): Q}, 2) == EExpansion(2, {P(2): Q})
    path = {nu: monomial_coefficient(path_graph(3), nu.parts) for nu in [P(3), P(2, 1), P(1, 1, 1)]}
    assert to_e_basis(path, 3) == EExpansion(3, {P(3): qint(3), P(2, 1): Q})
    assert to_e_basis({P(1, 1, 1, 1): qfact(4)}, 4) == EExpansion(4, {P(4): qfact(4)})


def test_x_lambda_examples():
    assert x_lambda_oracle(P(), 3) == EExpansion(3, {P(3): qfact(3)})
    assert x_lambda_oracle(P(1), 3) == EExpansion(3, {P(3): qint(3), P(2, 1): Q})
    assert x_lambda_oracle(staircase(4), 4) == EExpansion(4, {P(1, 1, 1, 1): ONE})


def test_rejects_shape_outside_staircase():
    with pytest.raises(ValueError):
        x_lambda_oracle(P(3), 3)


def test_json_round_trip():
    X = x_lambda_oracle(P(2, 1), 5)
    assert EExpansion.from_json(X.to_json()) == X
    assert x_lambda_oracle(P(1), 3).to_json() == {"n": 3, "terms": [{"mu": [3], "coeffs": [1, 1, 1]}, {"mu": [2, 1], "coeffs": [0, 1]}]}


@st.composite
def small_graph_and_content(draw):
    n = draw(st.integers(1, 5))
    shapes = list(partitions_in_staircase(n))
    lam = draw(st.sampled_from(shapes))
    k = draw(st.integers(1, 3))
    cuts = sorted(draw(st.lists(st.integers(0, n), min_size=k - 1, max_size=k - 1)))
    bounds = [0] + cuts + [n]
    content = tuple(b - a for a, b in zip(bounds, bounds[1:]))
    return inc_graph(lam, n), content


@settings(max_examples=60, deadline=None)
@given(small_graph_and_content())
def test_walk_matches_naive_enumeration(case):
    G, content = case
    assert monomial_coefficient(G, content) == naive_monomial(G, content)


@pytest.mark.parametrize("n", range(1, 7))
def test_q_equals_one_counts_labelings(n):
    # coefficient of x_1...x_n: sum over e_mu of E[mu](1) * n!/prod(mu_i!) = n!
    for lam in partitions_in_staircase(n):
        X = x_lambda_oracle(lam, n)
        total = 0
        for mu, c in X.items():
            ways = factorial(n)
            for part in mu:
                ways //= factorial(part)
            total += c(1) * ways
        assert total == factorial(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_conjugate_shapes_agree(n):
    for lam in partitions_in_staircase(n):
        assert x_lambda_oracle(lam, n) == x_lambda_oracle(lam.conjugate(), n)


@pytest.mark.parametrize("n", range(2, 6))
def test_symmetry_spot_check_runs(n):
    # graph_e_expansion compares permuted contents; a full run must not raise
    for lam in partitions_in_staircase(n):
        graph_e_expansion(inc_graph(lam, n), check_symmetry=True)


def test_common_center():
    assert common_center(P(), 4) == 3
    assert common_center(P(2, 1), 4) == 3 - 1.5
