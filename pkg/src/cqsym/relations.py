"""Local linear relations among chromatic quasisymmetric functions.

Row relation (three-term)::

    X_{mu^0} + q X_{mu^2} = [2]_q X_{mu^1}

and its stretched form::

    [l-k]_q X_{nu^0} + q^{l-k} [k]_q X_{nu^l} = [l]_q X_{nu^k}

where ``nu^a`` is ``lam`` with part ``i`` raised by ``a``.  Column versions
come from ``X_lam = X_{lam'}``.  All checks run on oracle values.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .oracle import EExpansion, common_center, x_lambda_oracle
from .partition import Partition, fits_staircase, partitions_in_staircase
from .qpoly import ANY_CENTER, Q, qint
from .report import FAIL, NOT_APPLICABLE, PASS, NotApplicable, Report

ROW_BASIC = "row-basic"
ROW_GENERAL = "row-general"
COLUMN_BASIC = "column-basic"
COLUMN_GENERAL = "column-general"


@dataclass(frozen=True)
class RelationInstance:
    """``lam`` is the base shape; for column kinds it is the column-side shape.

    ``stretch`` is the ``l`` of the stretched relation (2 for the basic ones)
    and ``k`` the middle index (1 for the basic ones).
    """

    kind: str
    lam: Partition
    i: int
    n: int
    stretch: int = 2
    k: int = 1

    @property
    def is_column(self) -> bool:
        return self.kind in (COLUMN_BASIC, COLUMN_GENERAL)

    def row_base(self) -> Partition:
        return self.lam.conjugate() if self.is_column else self.lam

    def family(self, a: int) -> Partition:
        """``nu^a`` on the side the instance lives on."""
        base = self.row_base()
        row = base.with_part(self.i, base.part(self.i) + a)
        return row.conjugate() if self.is_column else row

    def params(self) -> dict:
        out = {"kind": self.kind, "lambda": list(self.lam), "i": self.i, "n": self.n}
        if self.kind in (ROW_GENERAL, COLUMN_GENERAL):
            out.update(l=self.stretch, k=self.k)
        return out


def applicable(lam: Partition, i: int, n: int, stretch: int) -> bool:
    """Row preconditions with ``lam`` zero-padded to length ``n-1``.

    ``lam_i + stretch <= lam_{i-1}``, ``i >= 2``, the parts
    ``lam_{n-lam_i-stretch+1} .. lam_{n-lam_i}`` all equal, and every
    ``nu^a`` fits the staircase.
    """
    if i < 2 or stretch < 1 or i > n - 1:
        return False
    li = lam.part(i)
    if li + stretch > lam.part(i - 1):
        return False
    idx = range(n - li - stretch + 1, n - li + 1)
    if any(j < 1 for j in idx):
        return False
    vals = {(lam.part(j) if j <= n - 1 else 0) for j in idx}
    if len(vals) != 1:
        return False
    try:
        top = lam.with_part(i, li + stretch)
    except ValueError:
        return False
    return fits_staircase(top, n)


def _values(inst: RelationInstance) -> dict[int, EExpansion]:
    return {a: x_lambda_oracle(inst.family(a), inst.n) for a in {0, inst.k, inst.stretch}}


def _general_sides(inst: RelationInstance) -> tuple[EExpansion, EExpansion]:
    X = _values(inst)
    l, k = inst.stretch, inst.k
    lhs = X[0].scale(qint(l - k)) + X[l].scale(qint(k).shift(l - k))
    rhs = X[k].scale(qint(l))
    return lhs, rhs


def row_relation_check(inst: RelationInstance) -> Report:
    if inst.stretch != 2 or inst.k != 1:
        raise NotApplicable("the three-term relation has stretch 2 and k = 1")
    base = inst.row_base()
    if not applicable(base, inst.i, inst.n, 2):
        return Report(inst.kind, inst.params(), NOT_APPLICABLE)
    X = _values(inst)
    lhs = X[0] + X[2].scale(Q)
    rhs = X[1].scale(qint(2))
    return Report.compare(inst.kind, inst.params(), lhs, rhs)


def general_relation_check(inst: RelationInstance) -> Report:
    base = inst.row_base()
    if not 0 <= inst.k <= inst.stretch or not applicable(base, inst.i, inst.n, inst.stretch):
        return Report(inst.kind, inst.params(), NOT_APPLICABLE)
    lhs, rhs = _general_sides(inst)
    return Report.compare(inst.kind, inst.params(), lhs, rhs)


def column_relation_check(inst: RelationInstance) -> Report:
    """Check a column instance and the conjugation symmetry it relies on."""
    if not inst.is_column:
        raise NotApplicable(f"{inst.kind} is not a column relation")
    for a in sorted({0, inst.k, inst.stretch}):
        col = inst.family(a)
        if not fits_staircase(col, inst.n):
            return Report(inst.kind, inst.params(), NOT_APPLICABLE)
        rep = conjugation_check(col, inst.n)
        if not rep.ok:
            return rep
    if inst.kind == COLUMN_BASIC:
        return row_relation_check(inst)
    return general_relation_check(inst)


def conjugation_check(lam: Partition, n: int) -> Report:
    return Report.compare(
        "conjugation", {"lambda": list(lam), "n": n}, x_lambda_oracle(lam, n), x_lambda_oracle(lam.conjugate(), n)
    )


def palindromicity_check(lam: Partition, n: int) -> Report:
    center = common_center(lam, n)
    X = x_lambda_oracle(lam, n)
    for mu, c in X.items():
        got = c.palindrome_center()
        if got is not ANY_CENTER and got != center:
            return Report("palindromic", {"lambda": list(lam), "n": n}, FAIL, got, center, mu)
    return Report("palindromic", {"lambda": list(lam), "n": n}, PASS, extra={"center": str(center)})


def row_instances(n: int, general: bool = False) -> Iterator[RelationInstance]:
    """Every applicable row instance with base inside the staircase."""
    for lam in partitions_in_staircase(n):
        for i in range(2, n):
            if general:
                for l in range(2, n):
                    if applicable(lam, i, n, l):
                        for k in range(l + 1):
                            yield RelationInstance(ROW_GENERAL, lam, i, n, l, k)
            elif applicable(lam, i, n, 2):
                yield RelationInstance(ROW_BASIC, lam, i, n)


def column_instances(n: int, general: bool = False) -> Iterator[RelationInstance]:
    for row in row_instances(n, general):
        kind = COLUMN_GENERAL if general else COLUMN_BASIC
        yield RelationInstance(kind, row.lam.conjugate(), row.i, n, row.stretch, row.k)


def all_instances(n: int) -> Iterator[RelationInstance]:
    yield from row_instances(n)
    yield from row_instances(n, general=True)
    yield from column_instances(n)
    yield from column_instances(n, general=True)


def check(inst: RelationInstance) -> Report:
    if inst.is_column:
        return column_relation_check(inst)
    if inst.kind == ROW_BASIC:
        return row_relation_check(inst)
    return general_relation_check(inst)
