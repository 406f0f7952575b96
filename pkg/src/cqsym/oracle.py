"""Brute-force chromatic quasisymmetric functions.

Everything in this module is computed straight from proper colorings and
the ascent statistic; it deliberately imports nothing from the formula
modules so that it can serve as an independent check on them.

The monomial coefficient of ``x_1^a_1 ... x_k^a_k`` is found by a
depth-first walk over vertices ``1..n`` that assigns colors subject to the
remaining color multiplicities and properness.  Subtrees are memoized on the
colors of the already-colored vertices that still have uncolored neighbors,
which is all the future of the walk can see.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .partition import IncGraph, Partition, fits_staircase, inc_graph, partitions_of
from .qpoly import ONE, ZERO, InexactDivision, QPoly


class SymmetryViolation(AssertionError):
    """Monomial coefficients disagreed under a permutation of exponents."""


class EExpansion:
    """A homogeneous symmetric function of degree ``n`` in the e-basis.

    ``terms`` maps partitions of ``n`` to their q-polynomial coefficient;
    zero coefficients are never stored.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Partition, QPoly] | None = None):
        self.n = n
        clean: dict[Partition, QPoly] = {}
        for mu, c in (terms or {}).items():
            mu = mu if isinstance(mu, Partition) else Partition(mu)
            if mu.size != n:
                raise ValueError(f"{mu} is not a partition of {n}")
            if c:
                clean[mu] = clean.get(mu, ZERO) + c
        self.terms = {mu: c for mu, c in clean.items() if c}

    def __getitem__(self, mu) -> QPoly:
        mu = mu if isinstance(mu, Partition) else Partition(mu)
        return self.terms.get(mu, ZERO)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].parts, reverse=True)

    def keys(self):
        return [mu for mu, _ in self.items()]

    def __eq__(self, other) -> bool:
        if not isinstance(other, EExpansion):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __add__(self, other: EExpansion) -> EExpansion:
        self._same_degree(other)
        out = dict(self.terms)
        for mu, c in other.terms.items():
            out[mu] = out.get(mu, ZERO) + c
        return EExpansion(self.n, out)

    def __sub__(self, other: EExpansion) -> EExpansion:
        return self + other.scale(QPoly([-1]))

    def scale(self, c: QPoly) -> EExpansion:
        return EExpansion(self.n, {mu: c * v for mu, v in self.terms.items()})

    def _same_degree(self, other: EExpansion) -> None:
        if self.n != other.n:
            raise ValueError(f"degree mismatch {self.n} != {other.n}")

    def first_difference(self, other: EExpansion):
        """First partition (reverse lex) where the two expansions differ, else None."""
        keys = sorted(set(self.terms) | set(other.terms), key=lambda p: p.parts, reverse=True)
        for mu in keys:
            if self[mu] != other[mu]:
                return mu
        return None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"mu": list(mu.parts), "coeffs": c.to_list()} for mu, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> EExpansion:
        return cls(
            data["n"],
            {Partition(t["mu"]): QPoly(t["coeffs"]) for t in data["terms"]},
        )

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        return "\n".join(f"e_({mu}): {c.pretty()}" for mu, c in self.items())

    def __repr__(self) -> str:
        inner = ", ".join(f"{tuple(mu.parts)}: {c.to_list()}" for mu, c in self.items())
        return f"EExpansion(n={self.n}, {{{inner}}})"


def monomial_coefficient(G: IncGraph, content: Sequence[int]) -> QPoly:
    """Sum of ``q**asc(k)`` over proper colorings using color ``c`` exactly ``content[c]`` times.

    ``content`` may be any composition of ``n`` (zeros allowed), not only a
    partition, so the same routine serves the symmetry spot checks.
    """
    n = G.n
    if sum(content) != n or any(c < 0 for c in content):
        raise ValueError(f"{list(content)} is not a composition of {n}")
    below = [()] + [G.neighbors_below(v) for v in range(1, n + 1)]
    last_nbr = [0] * (n + 1)
    for i, j in G.edges:
        last_nbr[i] = max(last_nbr[i], j)

    @lru_cache(maxsize=None)
    def walk(v: int, remaining: tuple[int, ...], frontier: tuple[tuple[int, int], ...]) -> tuple[int, ...]:
        if v > n:
            return (1,)
        seen = dict(frontier)
        nbr_colors = [seen[u] for u in below[v]]
        acc: list[int] = []
        for color, left in enumerate(remaining):
            if not left or color in nbr_colors:
                continue
            asc = sum(1 for c in nbr_colors if c < color)
            rem = remaining[:color] + (left - 1,) + remaining[color + 1 :]
            nxt = tuple((u, c) for u, c in frontier + ((v, color),) if last_nbr[u] > v)
            sub = walk(v + 1, rem, nxt)
            if len(acc) < len(sub) + asc:
                acc.extend([0] * (len(sub) + asc - len(acc)))
            for e, cnt in enumerate(sub):
                acc[e + asc] += cnt
        return tuple(acc)

    return QPoly(walk(1, tuple(content), ()))


@lru_cache(maxsize=None)
def _zero_one_matrices(rows: tuple[int, ...], cols: tuple[int, ...]) -> int:
    """Number of 0-1 matrices with the given row and column sums."""
    if not rows:
        return 1 if not any(cols) else 0
    first, rest = rows[0], rows[1:]
    k = len(cols)
    total = 0

    def choose(start: int, need: int, picked: list[int]):
        nonlocal total
        if need == 0:
            new = list(cols)
            for j in picked:
                new[j] -= 1
            total += _zero_one_matrices(rest, tuple(sorted((c for c in new if c), reverse=True)))
            return
        for j in range(start, k - need + 1):
            if cols[j] > 0:
                picked.append(j)
                choose(j + 1, need - 1, picked)
                picked.pop()

    choose(0, first, [])
    return total


@lru_cache(maxsize=None)
def e_in_m(mu: Partition) -> dict[Partition, int]:
    """Monomial expansion of ``e_mu``: ``{nu: #0-1 matrices with row sums mu, column sums nu}``."""
    out = {}
    for nu in partitions_of(mu.size):
        c = _zero_one_matrices(tuple(mu.parts), tuple(nu.parts))
        if c:
            out[nu] = c
    return out


def to_e_basis(mono: Mapping[Partition, QPoly], n: int) -> EExpansion:
    """Solve ``sum_mu E[mu] e_mu = sum_nu mono[nu] m_nu`` for ``E``.

    ``e_{nu'}`` is ``m_nu`` plus terms lower in dominance order, so walking the
    partitions of ``n`` from the top in reverse lexicographic order peels off
    one unknown at a time.  Any residue left at the end means the input was
    not symmetric.
    """
    residual = {Partition(nu) if not isinstance(nu, Partition) else nu: c for nu, c in mono.items() if c}
    for nu in residual:
        if nu.size != n:
            raise ValueError(f"{nu} is not a partition of {n}")
    out: dict[Partition, QPoly] = {}
    for nu in partitions_of(n):
        c = residual.pop(nu, ZERO)
        if not c:
            continue
        mu = nu.conjugate()
        leading = e_in_m(mu)[nu]
        if leading != 1:
            raise InexactDivision(f"transition matrix not unitriangular at {nu}")
        out[mu] = c
        for lower, k in e_in_m(mu).items():
            if lower == nu:
                continue
            if lower.parts > nu.parts:
                # strictly earlier in the walk, so it must already be settled
                raise InexactDivision(f"e_{mu} reaches {lower} above the pivot {nu}")
            residual[lower] = residual.get(lower, ZERO) - c * k
    leftover = {nu: c for nu, c in residual.items() if c}
    if leftover:
        raise InexactDivision(f"monomial data is not symmetric; residue at {sorted(leftover)}")
    return EExpansion(n, out)


def graph_e_expansion(G: IncGraph, check_symmetry: bool = True) -> EExpansion:
    n = G.n
    mono = {}
    for nu in partitions_of(n):
        c = monomial_coefficient(G, nu.parts)
        mono[nu] = c
        if check_symmetry and len(set(nu.parts)) > 1:
            flipped = monomial_coefficient(G, nu.parts[::-1])
            if flipped != c:
                raise SymmetryViolation(f"coefficient of x^{nu.parts[::-1]} differs from x^{nu.parts}")
    return to_e_basis(mono, n)


@lru_cache(maxsize=4096)
def x_lambda_oracle(lam: Partition, n: int) -> EExpansion:
    """e-expansion of the chromatic quasisymmetric function of ``inc(P_lam)``."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if not fits_staircase(lam, n):
        raise ValueError(f"{lam} does not fit in delta_{n}")
    return graph_e_expansion(inc_graph(lam, n))


def chromatic_quasisymmetric_monomials(lam: Partition, n: int) -> dict[Partition, QPoly]:
    G = inc_graph(lam, n)
    return {nu: monomial_coefficient(G, nu.parts) for nu in partitions_of(n)}


def common_center(lam: Partition, n: int):
    """Palindromic center shared by every e-coefficient: ``(C(n,2) - |lam|) / 2``."""
    from fractions import Fraction

    return Fraction(n * (n - 1) // 2 - lam.size, 2)
