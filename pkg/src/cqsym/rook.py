"""Rook placements, the lambda-weight and q-hit numbers.

Board convention (frozen by calibration against ``F_r == H_r``, see
``tests/test_rook.py``): rows are numbered 1..m1 from the top, columns
1..m2 from the left, and ``lam`` is right-justified against the top edge,
so row ``i`` contains the rightmost ``lam_i`` cells.  "Left of" means a
smaller column index and "below" a larger row index.  In a column holding
no rook the two column conditions are vacuously true.

Of the eight combinations of corner anchoring and rook-free-column reading,
this is the only one for which the hit numbers agree with the nesting-graph
coefficients on every small instance.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator

from .oracle import EExpansion, x_lambda_oracle
from .partition import Partition, rectangle
from .qpoly import ZERO, QPoly, qfact, qint
from .rectlemma import big_f, falling_qint
from .report import Report


@dataclass(frozen=True)
class RookPlacement:
    m1: int
    m2: int
    cols: tuple[int, ...]

    def __post_init__(self):
        if self.m1 > self.m2:
            raise ValueError("need m1 <= m2")
        if len(self.cols) != self.m1 or len(set(self.cols)) != self.m1:
            raise ValueError(f"{self.cols} is not an injective row->column map")
        if any(not 1 <= c <= self.m2 for c in self.cols):
            raise ValueError(f"column out of range in {self.cols}")


def in_shape(lam: Partition, m2: int, row: int, col: int) -> bool:
    return col > m2 - lam.part(row)


def _check_board(lam: Partition, m1: int, m2: int) -> None:
    if not lam.fits_rectangle(m1, m2):
        raise ValueError(f"{lam} does not fit a {m1} x {m2} board")


def lambda_weight(p: RookPlacement, lam: Partition) -> int:
    _check_board(lam, p.m1, p.m2)
    rook_row = {c: r for r, c in enumerate(p.cols, start=1)}
    w = 0
    for r in range(1, p.m1 + 1):
        rook_col = p.cols[r - 1]
        # cells strictly left of this row's rook
        for c in range(1, rook_col):
            below = rook_row.get(c)
            if below is None:
                w += 1
                continue
            rook_in = in_shape(lam, p.m2, below, c)
            if in_shape(lam, p.m2, r, c):
                w += rook_in and below > r
            else:
                w += rook_in or below > r
    return w


def placements(m1: int, m2: int) -> Iterator[RookPlacement]:
    for cols in permutations(range(1, m2 + 1), m1):
        yield RookPlacement(m1, m2, cols)


def rooks_inside(p: RookPlacement, lam: Partition) -> int:
    return sum(in_shape(lam, p.m2, r, c) for r, c in enumerate(p.cols, start=1))


def hit_numbers(lam: Partition, m1: int, m2: int) -> list[QPoly]:
    """``H_0 .. H_{m1}``: weighted placements by number of rooks inside ``lam``."""
    _check_board(lam, m1, m2)
    acc = [[0] for _ in range(m1 + 1)]
    for p in placements(m1, m2):
        j = rooks_inside(p, lam)
        w = lambda_weight(p, lam)
        row = acc[j]
        if len(row) <= w:
            row.extend([0] * (w + 1 - len(row)))
        row[w] += 1
    return [QPoly(c) for c in acc]


def hit_decompose_check(lam: Partition, ell: int, n: int, s: int) -> Report:
    if ell > s or ell > n - s or not lam.fits_rectangle(ell, n - s):
        raise ValueError(f"need {lam} inside {ell} x {n - s} with ell <= min(s, n-s)")
    H = hit_numbers(lam, ell, n - s)
    lhs = x_lambda_oracle(lam, n).scale(falling_qint(n - s, ell))
    rhs = EExpansion(n)
    for r, h in enumerate(H):
        if h:
            rhs = rhs + x_lambda_oracle(rectangle(r, n - s), n).scale(h)
    return Report.compare("qhit", {"lambda": list(lam), "ell": ell, "n": n, "s": s}, lhs, rhs)


def f_equals_h_check(lam: Partition, ell: int, n: int, s: int) -> Report:
    H = hit_numbers(lam, ell, n - s)
    F = [big_f(lam, ell, n, s, r) for r in range(ell + 1)]
    params = {"lambda": list(lam), "ell": ell, "n": n, "s": s}
    for r, (f, h) in enumerate(zip(F, H)):
        if f != h:
            return Report("f-equals-h", params, "fail", f, h, r)
    return Report("f-equals-h", params, "pass")


def abreu_nigro_expansion(lam: Partition, ell: int, n: int) -> EExpansion:
    """Two-row e-expansion from square-board hit numbers; needs ``len(lam) <= lam_1``."""
    if not lam.fits_rectangle(ell, n - ell):
        raise ValueError(f"{lam} does not fit in {ell} x {n - ell}")
    k = lam.length
    if k > lam.part(1):
        raise ValueError(f"need len(lam) <= lam_1, got {lam}; use the conjugate")
    terms = {Partition([n - k, k]): qfact(k) * hit_numbers(lam, n - k, n - k)[k]}
    for r in range(k):
        h = hit_numbers(lam, n - r - 1, n - r - 1)[r]
        c = qfact(r) * qint(n - 2 * r) * h
        terms[Partition([n - r, r])] = terms.get(Partition([n - r, r]), ZERO) + c.shift(r)
    return EExpansion(n, terms)


def abreu_nigro_check(lam: Partition, ell: int, n: int) -> Report:
    return Report.compare(
        "abreu-nigro", {"lambda": list(lam), "ell": ell, "n": n}, x_lambda_oracle(lam, n), abreu_nigro_expansion(lam, ell, n)
    )


def abreu_nigro_for(lam: Partition, ell: int, n: int) -> tuple[Partition, int]:
    """Shape and row count to feed the square-board expansion.

    The expansion needs ``len(lam) <= lam_1``; otherwise use the conjugate,
    which sits in ``(n-ell) x ell`` and has the same ``X``.
    """
    if lam.length <= lam.part(1):
        return lam, ell
    return lam.conjugate(), n - ell


def abreu_nigro_auto_check(lam: Partition, ell: int, n: int) -> Report:
    mu, rows = abreu_nigro_for(lam, ell, n)
    rep = Report.compare("abreu-nigro", {"lambda": list(lam), "ell": ell, "n": n}, x_lambda_oracle(lam, n), abreu_nigro_expansion(mu, rows, n))
    if mu != lam:
        rep.extra["via_conjugate"] = list(mu)
    return rep
