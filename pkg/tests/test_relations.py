from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from cqsym import relations
from cqsym.partition import Partition, partitions_in_staircase
from cqsym.relations import (
    COLUMN_BASIC,
    COLUMN_GENERAL,
    ROW_BASIC,
    ROW_GENERAL,
    RelationInstance,
    applicable,
    column_relation_check,
    conjugation_check,
    general_relation_check,
    palindromicity_check,
    row_relation_check,
)
from cqsym.report import NOT_APPLICABLE, NotApplicable


def P(*parts):
    return Partition(parts)


def test_row_example():
    inst = RelationInstance(ROW_BASIC, P(3), 2, 5)
    assert [inst.family(a) for a in range(3)] == [P(3), P(3, 1), P(3, 2)]
    assert applicable(P(3), 2, 5, 2)
    assert row_relation_check(inst).ok


def test_row_not_applicable():
    # lam_2 + 2 > lam_1: the family would leave the partitions
    rep = row_relation_check(RelationInstance(ROW_BASIC, P(3, 2), 2, 6))
    assert rep.status == NOT_APPLICABLE
    with pytest.raises(NotApplicable):
        row_relation_check(RelationInstance(ROW_GENERAL, P(3), 2, 5, 3, 1))


def test_general_reduces_to_basic():
    basic = row_relation_check(RelationInstance(ROW_BASIC, P(3), 2, 5))
    general = general_relation_check(RelationInstance(ROW_GENERAL, P(3), 2, 5, 2, 1))
    assert basic.status == general.status


@pytest.mark.parametrize("k", [0, 3])
def test_general_endpoints_are_trivial(k):
    inst = RelationInstance(ROW_GENERAL, P(4), 2, 6, 3, k)
    lhs, rhs = relations._general_sides(inst)
    assert lhs == rhs


def test_general_nontrivial_instance():
    inst = RelationInstance(ROW_GENERAL, P(4), 2, 6, 3, 1)
    assert applicable(P(4), 2, 6, 3)
    assert general_relation_check(inst).ok


def test_conjugation_examples():
    assert conjugation_check(P(2, 2), 5).ok
    assert conjugation_check(P(3, 1), 5).ok


def test_column_mirror_of_row_family():
    inst = RelationInstance(COLUMN_BASIC, P(3).conjugate(), 2, 5)
    assert [inst.family(a) for a in range(3)] == [P(1, 1, 1), P(2, 1, 1), P(2, 2, 1)]
    assert column_relation_check(inst).ok
    with pytest.raises(NotApplicable):
        column_relation_check(RelationInstance(ROW_BASIC, P(3), 2, 5))


def test_params_shape():
    assert RelationInstance(ROW_GENERAL, P(4), 2, 6, 3, 1).params() == {
        "kind": ROW_GENERAL, "lambda": [4], "i": 2, "n": 6, "l": 3, "k": 1,
    }


@pytest.mark.parametrize("n", range(2, 7))
def test_every_instance_passes(n):
    seen = set()
    for inst in relations.all_instances(n):
        rep = relations.check(inst)
        assert rep.ok, rep.line()
        seen.add(inst.kind)
    if n >= 4:
        assert seen == {ROW_BASIC, ROW_GENERAL, COLUMN_BASIC, COLUMN_GENERAL}


@pytest.mark.parametrize("n", range(1, 7))
def test_palindromicity(n):
    for lam in partitions_in_staircase(n):
        assert palindromicity_check(lam, n).ok


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 6), st.data())
def test_applicable_implies_family_inside_staircase(n, data):
    lam = data.draw(st.sampled_from(list(partitions_in_staircase(n))))
    i = data.draw(st.integers(2, n - 1))
    l = data.draw(st.integers(1, n - 1))
    if applicable(lam, i, n, l):
        inst = RelationInstance(ROW_GENERAL, lam, i, n, l, 0)
        for a in range(l + 1):
            fam = inst.family(a)
            assert all(x <= n - j for j, x in enumerate(fam, start=1))
