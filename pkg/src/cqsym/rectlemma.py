"""Nesting graphs, their coefficients, and the rectangle decomposition.

For ``I`` an ``r``-subset of ``{1..ell}`` the nesting graph ``G_I`` lives on
vertices ``0..ell+1``.  Its edges drive three quantities:

* ``f_poly``: a product of q-integers read off the shape ``lam`` along
  each edge,
* ``c_inductive`` / ``c_hook``: a q-multinomial-like coefficient that only
  depends on ``I``,
* ``d_exp``: an integer exponent depending on ``lam`` and ``I``.

``big_f`` sums ``q^d * c * f`` over all ``I`` and gives the coefficient of
``X_{(w^r)}`` when ``X_lam`` is expanded over rectangles of width ``w``;
``g_r`` is the variant that produces two-row e-coefficients directly.
"""
from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .oracle import EExpansion, x_lambda_oracle
from .partition import Partition, rectangle
from .qpoly import ONE, ZERO, QPoly, qfact, qint, qint_range, qmultinomial
from .report import FAIL, PASS, Report


class NegativeExponent(ArithmeticError):
    """A nonzero summand came with a negative power of q."""


class NegativeFactorWarning(UserWarning):
    """An ``f_poly`` factor had a negative argument and was treated as zero."""


@dataclass(frozen=True)
class NestGraph:
    """Edges ``(b, a)`` with ``0 <= b < a <= ell+1`` and their lengths.

    ``edges`` and ``lengths`` are parallel tuples; parallel ``(0, ell+1)``
    edges appear once per copy.
    """

    ell: int
    I: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    lengths: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not self.lengths:
            object.__setattr__(self, "lengths", edge_lengths(self.edges, self.ell))

    @property
    def r(self) -> int:
        return len(self.I)

    def sorted_edges(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(zip(self.edges, self.lengths))


def edge_lengths(edges: Sequence[tuple[int, int]], ell: int) -> tuple[int, ...]:
    """Length of each edge: edges nested under it, itself included.

    The ``x`` parallel copies of ``(0, ell+1)`` get lengths
    ``ell-x+1, ..., ell`` instead.
    """
    top = (0, ell + 1)
    out = []
    n_top = sum(1 for e in edges if e == top)
    next_top = ell - n_top + 1
    for b, a in edges:
        if (b, a) == top and n_top > 1:
            out.append(next_top)
            next_top += 1
        else:
            out.append(sum(1 for bb, aa in edges if b <= bb and aa <= a))
    return tuple(out)


@lru_cache(maxsize=None)
def build_nest_graph(ell: int, I: tuple[int, ...]) -> NestGraph:
    """Construct ``G_I``.

    Each ``a`` in ``I`` (increasing) joins the largest unused vertex below it
    among ``{0}`` and the complement of ``I``; vertex 0 may be reused.  The
    complement vertices left unmatched join ``ell+1`` and copies of
    ``(0, ell+1)`` pad the edge count up to ``ell``.  With ``I`` empty every
    vertex ``1..ell`` joins ``ell+1``.
    """
    I = tuple(sorted(I))
    if len(set(I)) != len(I) or any(not 1 <= a <= ell for a in I):
        raise ValueError(f"{I} is not a subset of [1..{ell}]")
    members = set(I)
    free = [v for v in range(1, ell + 1) if v not in members]
    used: set[int] = set()
    edges = []
    for a in I:
        b = max((v for v in free if v < a and v not in used), default=0)
        if b:
            used.add(b)
        edges.append((b, a))
    for v in free:
        if v not in used:
            edges.append((v, ell + 1))
    while len(edges) < ell:
        edges.append((0, ell + 1))
    G = NestGraph(ell, I, tuple(sorted(edges)))
    _check_nest_graph(G)
    return G


def _check_nest_graph(G: NestGraph) -> None:
    members = set(G.I)
    assert len(G.edges) == G.ell
    for (b, a), cnt in Counter(G.edges).items():
        assert cnt == 1 or (b, a) == (0, G.ell + 1)
        assert b == 0 or b not in members
        assert a == G.ell + 1 or a in members
    for (p1, q1), (p2, q2) in combinations(G.edges, 2):
        assert not (p1 < p2 < q1 < q2 or p2 < p1 < q2 < q1), "crossing edges"


def subsets_colex(ell: int, r: int) -> list[tuple[int, ...]]:
    return sorted(combinations(range(1, ell + 1), r), key=lambda s: s[::-1])


@dataclass(frozen=True)
class ExtendedShape:
    """``lam`` padded with zeros and with ``lam_0 = m``."""

    lam: Partition
    ell: int
    m: int

    def __getitem__(self, j: int) -> int:
        if j == 0:
            return self.m
        if j < 0:
            raise IndexError(j)
        return self.lam.part(j)


def f_args(ell: int, m, lam: Partition, I: Sequence[int]) -> list:
    """The bracket arguments of ``f``, one per edge of the nesting graph.

    ``m`` only enters through ``lam_0``, so anything supporting integer
    arithmetic works (the non-abelian formulas pass a shifted ``n``).
    """
    G = build_nest_graph(ell, tuple(sorted(I)))
    lam_hat = ExtendedShape(lam, ell, m)
    return [lam_hat[ell + 1 - a] - lam_hat[ell + 1 - b] - length + 1 for (b, a), length in zip(G.edges, G.lengths)]


def f_poly(ell: int, m: int, lam: Partition, I: Sequence[int], strict: bool = False) -> QPoly:
    """Product over edges ``(b, a)`` of ``[lam_{ell+1-a} - lam_{ell+1-b} - len + 1]_q``.

    A factor with argument 0 kills the product.  A negative argument also
    gives 0 (with a :class:`NegativeFactorWarning`, or ``ValueError`` when
    ``strict``); that only happens outside the ``m >= lam_1`` regime.
    """
    args = f_args(ell, m, lam, I)
    if any(x == 0 for x in args):
        return ZERO
    negative = [x for x in args if x < 0]
    if negative:
        msg = f"f({ell}, {m}, {lam}, {tuple(I)}) has negative factor arguments {negative}"
        if strict:
            raise ValueError(msg)
        warnings.warn(msg, NegativeFactorWarning, stacklevel=2)
        return ZERO
    out = ONE
    for x in args:
        out = out * qint(x)
    return out


def c_hook(G: NestGraph) -> QPoly:
    out = qfact(G.ell)
    for length in G.lengths:
        out = out.exact_div(qint(length))
    return out


def c_inductive(G: NestGraph) -> QPoly:
    """Recursive definition of the coefficient: peel the longest edge, split, recurse."""
    edges = {e for e in G.edges}  # collapses parallel top edges
    edges.add((0, G.ell + 1))
    return _c_rec(frozenset(edges))


@lru_cache(maxsize=None)
def _c_rec(edges: frozenset) -> QPoly:
    if len(edges) <= 1:
        return ONE
    longest = max(edges, key=lambda e: sum(1 for b, a in edges if e[0] <= b and a <= e[1]))
    rest = edges - {longest}
    blocks = _outer_blocks(rest)
    sizes = []
    value = ONE
    for lo, hi in blocks:
        sub = frozenset((b - lo, a - lo) for b, a in rest if lo <= b and a <= hi)
        sizes.append(len(sub))
        value = value * _c_rec(sub)
    return qmultinomial(sizes) * value


def _outer_blocks(edges: frozenset) -> list[tuple[int, int]]:
    """Maximal edges (those not nested under another), left to right."""
    outer = [e for e in edges if not any(o != e and o[0] <= e[0] and e[1] <= o[1] for o in edges)]
    return sorted(outer)


def index_identity_holds(G: NestGraph) -> bool:
    r = G.r
    return sum(G.I) - sum(G.lengths) == -((G.ell - r) * (G.ell - r + 1)) // 2


def d_exp(lam: Partition, I: Sequence[int], ell: int, width: int) -> int:
    """``r*width - sum_i (ell - r + i - a_i) - sum_i lam_{ell - a_i + 1}``."""
    I = sorted(I)
    r = len(I)
    return r * width - sum(ell - r + i - a for i, a in enumerate(I, start=1)) - sum(lam.part(ell - a + 1) for a in I)


def _term(lam: Partition, ell: int, I: tuple[int, ...], width: int, m: int) -> QPoly:
    f = f_poly(ell, m, lam, I)
    if not f:
        return ZERO
    d = d_exp(lam, I, ell, width)
    if d < 0:
        raise NegativeExponent(f"d = {d} < 0 for lam={lam}, I={I}, ell={ell}, width={width}")
    return c_hook(build_nest_graph(ell, I)) * f.shift(d)


def big_f_terms(lam: Partition, ell: int, n: int, s: int, r: int) -> list[tuple[tuple[int, ...], QPoly]]:
    """Nonzero summands ``q^d c_I f`` of ``big_f``, keyed by ``I`` in colex order."""
    _check_abelian(lam, ell, n - s)
    out = []
    for I in subsets_colex(ell, r):
        t = _term(lam, ell, I, n - s, n - s)
        if t:
            out.append((I, t))
    return out


def big_f(lam: Partition, ell: int, n: int, s: int, r: int) -> QPoly:
    """Coefficient of ``X_{((n-s)^r)}`` in ``[n-s]...[n-s-ell+1] X_lam``."""
    total = ZERO
    for _, t in big_f_terms(lam, ell, n, s, r):
        total = total + t
    return total


def term_center(lam: Partition, ell: int, n: int, s: int, r: int) -> Fraction:
    return Fraction((n - s) * (ell + r), 2) - Fraction(ell * (ell + 1), 4) - Fraction(lam.size, 2)


def center_check(lam: Partition, ell: int, n: int, s: int) -> Report:
    """Every nonzero ``F_r`` and every nonzero summand of it is palindromic about ``term_center``."""
    params = {"lambda": list(lam), "ell": ell, "n": n, "s": s}
    for r in range(ell + 1):
        want = term_center(lam, ell, n, s, r)
        pieces = big_f_terms(lam, ell, n, s, r)
        total = big_f(lam, ell, n, s, r)
        for label, poly in [(("F", r), total)] + [(("term", r, list(I)), t) for I, t in pieces]:
            if poly and poly.palindrome_center() != want:
                return Report("centers", params, FAIL, str(poly.palindrome_center()), str(want), label)
    return Report("centers", params, PASS)


def _check_abelian(lam: Partition, ell: int, width: int) -> None:
    if ell < 1:
        raise ValueError("ell must be >= 1")
    if not lam.fits_rectangle(ell, width):
        raise ValueError(f"{lam} does not fit in {ell} x {width}")
    if ell > width:
        raise ValueError(f"need ell <= width, got ell={ell}, width={width}")


def falling_qint(top: int, count: int) -> QPoly:
    """``[top]_q [top-1]_q ... [top-count+1]_q``."""
    return qint_range(top - count + 1, top) if count > 0 else ONE


def rect_decompose_check(lam: Partition, ell: int, n: int, s: int) -> Report:
    """Check ``[n-s]...[n-s-ell+1] X_lam == sum_r F_r X_{((n-s)^r)}`` on the oracle."""
    _check_abelian(lam, ell, n - s)
    if ell > s:
        raise ValueError(f"rectangles up to {ell} x {n - s} must fit delta_{n}; need ell <= s")
    lhs = x_lambda_oracle(lam, n).scale(falling_qint(n - s, ell))
    rhs = EExpansion(n)
    fs = {}
    for r in range(ell + 1):
        fs[r] = big_f(lam, ell, n, s, r)
        if fs[r]:
            rhs = rhs + x_lambda_oracle(rectangle(r, n - s), n).scale(fs[r])
    return Report.compare(
        "rect", {"lambda": list(lam), "ell": ell, "n": n, "s": s}, lhs, rhs, extra={"F": {r: p.to_list() for r, p in fs.items()}}
    )


def g_r(lam: Partition, ell: int, n: int, r: int) -> QPoly:
    _check_abelian(lam, ell, n - ell)
    if 2 * ell > n:
        raise ValueError(f"need ell <= n/2, got ell={ell}, n={n}")
    total = ZERO
    for I in subsets_colex(ell, r):
        total = total + _term(lam, ell, I, n - r, n - r - 1)
    return total


def two_row_prefactor(n: int, r: int, ell: int) -> QPoly:
    """``[n-2r]_q [n-r-ell-1]_q! [r]_q!``.

    When ``n = 2*ell`` and ``r = ell`` the first two factors read
    ``[0]_q [-1]_q!``, taken as ``[0]_q! = 1`` via ``[k]! = [k][k-1]!``.
    """
    if n - r - ell - 1 == -1 and n - 2 * r == 0:
        return qfact(r)
    return qint(n - 2 * r) * qfact(n - r - ell - 1) * qfact(r)


def e_expansion_abelian(lam: Partition, ell: int, n: int) -> EExpansion:
    terms = {}
    for r in range(ell + 1):
        g = g_r(lam, ell, n, r)
        if g:
            terms[Partition([n - r, r])] = two_row_prefactor(n, r, ell) * g
    return EExpansion(n, terms)


def e_expansion_check(lam: Partition, ell: int, n: int) -> Report:
    return Report.compare(
        "theorem-e", {"lambda": list(lam), "ell": ell, "n": n}, x_lambda_oracle(lam, n), e_expansion_abelian(lam, ell, n)
    )


# -- column-relation coefficient identity ----------------------------------

def column_move_sets(ell: int, I: tuple[int, ...], i: int):
    """Index sets reached from ``I`` by the two-edge swaps around ``(ell-i, ell-i+1)``.

    Requires ``ell-i`` not in ``I`` and ``ell-i+1`` in ``I`` (so that pair is
    an edge).  Returns ``(alphas, betas, delta_set)`` where ``alphas`` and
    ``betas`` are lists of ``(edge, new_I)`` in walking order away from the
    pair.
    """
    lo, hi = ell - i, ell - i + 1
    members = set(I)
    if lo in members or hi not in members or lo < 1:
        raise ValueError("pair condition fails")
    G = build_nest_graph(ell, I)
    edges = set(G.edges)
    assert (lo, hi) in edges
    enclosing = [(b, a) for b, a in edges if b < lo and hi < a]
    delta = min(enclosing, key=lambda e: e[1] - e[0])
    alphas = []
    end = lo - 1
    while end > delta[0]:
        e = next(e for e in edges if e[1] == end and e != delta)
        alphas.append(e)
        end = e[0] - 1
    betas = []
    start = hi + 1
    while start < delta[1]:
        e = next(e for e in edges if e[0] == start and e != delta)
        betas.append(e)
        start = e[1] + 1
    set_alpha = [tuple(sorted((members - {e[1]}) | {lo})) for e in alphas]
    set_beta = [tuple(sorted((members - {hi}) | {e[0]})) for e in betas]
    set_delta = tuple(sorted((members - {hi}) | {lo}))
    return G, alphas, betas, set_alpha, set_beta, set_delta


def column_coefficient_identity(ell: int, I: tuple[int, ...], i: int) -> tuple[QPoly, QPoly]:
    """Both sides of ``[2] c_I = sum_j q^{1+...} c_{alpha_j} + sum_j q^{1+...} c_{beta_j} + c_delta``."""
    G, alphas, betas, set_alpha, set_beta, set_delta = column_move_sets(ell, I, i)
    length = dict(zip(G.edges, G.lengths))
    lhs = qint(2) * c_hook(G)
    rhs = c_hook(build_nest_graph(ell, set_delta))
    run = 0
    for e, J in zip(alphas, set_alpha):
        rhs = rhs + c_hook(build_nest_graph(ell, J)).shift(1 + run)
        run += length[e]
    run = 0
    for e, J in zip(betas, set_beta):
        rhs = rhs + c_hook(build_nest_graph(ell, J)).shift(1 + run)
        run += length[e]
    return lhs, rhs
