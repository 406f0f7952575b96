"""Partitions, staircase containment and natural unit interval orders.

A partition ``lam`` inside the staircase ``(n-1, n-2, ..., 1)`` encodes the
poset on ``{1..n}`` in which ``i < j`` iff ``m_i < j`` where ``m_i = n - lam_i``.
Two elements are adjacent in the incomparability graph iff they are not
comparable.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from itertools import combinations
from typing import Iterable, Iterator, Sequence


@total_ordering
class Partition:
    """Immutable weakly decreasing tuple of positive parts.

    Trailing zeros are accepted and dropped.  Indexing is 1-based through
    :meth:`part`, which returns 0 beyond the last part; plain ``p[k]`` is the
    usual 0-based tuple access.
    """

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = [int(x) for x in parts]
        if any(x < 0 for x in ps):
            raise ValueError(f"negative part in {ps}")
        if any(ps[k] < ps[k + 1] for k in range(len(ps) - 1)):
            raise ValueError(f"parts not weakly decreasing: {ps}")
        while ps and ps[-1] == 0:
            ps.pop()
        self.parts: tuple[int, ...] = tuple(ps)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"2,2"``; ``""`` and ``"0"`` give the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        return cls(int(tok) for tok in text.split(","))

    def part(self, i: int) -> int:
        """``lam_i`` with 1-based ``i``; zero past the end."""
        if i < 1:
            raise IndexError(f"partition index {i} < 1")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def padded(self, length: int) -> tuple[int, ...]:
        if length < len(self.parts):
            raise ValueError(f"{self} has more than {length} parts")
        return self.parts + (0,) * (length - len(self.parts))

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, k):
        return self.parts[k]

    def __eq__(self, other) -> bool:
        if isinstance(other, Partition):
            return self.parts == other.parts
        if isinstance(other, (tuple, list)):
            return self.parts == Partition(other).parts
        return NotImplemented

    def __lt__(self, other: Partition) -> bool:
        return self.parts < other.parts

    def __hash__(self) -> int:
        return hash(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "0"

    def conjugate(self) -> Partition:
        if not self.parts:
            return Partition()
        return Partition(sum(1 for x in self.parts if x > j) for j in range(self.parts[0]))

    def contains(self, other: Partition) -> bool:
        return len(other) <= len(self) and all(b <= a for a, b in zip(self.parts, other.parts))

    def fits_rectangle(self, rows: int, cols: int) -> bool:
        return len(self.parts) <= rows and (not self.parts or self.parts[0] <= cols)

    def with_part(self, i: int, value: int) -> Partition:
        """Copy with ``lam_i`` (1-based) replaced; raises if no longer a partition."""
        ps = list(self.padded(max(i, len(self.parts))))
        ps[i - 1] = value
        return Partition(ps)


def rectangle(rows: int, cols: int) -> Partition:
    return Partition([cols] * rows if cols > 0 else [])


def staircase(n: int) -> Partition:
    return Partition(range(n - 1, 0, -1))


def fits_staircase(lam: Partition, n: int) -> bool:
    if n < 1:
        raise ValueError("n must be >= 1")
    return all(x <= n - i for i, x in enumerate(lam.parts, start=1))


def _require_staircase(lam: Partition, n: int) -> None:
    if not fits_staircase(lam, n):
        raise ValueError(f"{lam} does not fit in the staircase delta_{n}")


def m_sequence(lam: Partition, n: int) -> tuple[int, ...]:
    _require_staircase(lam, n)
    m = tuple(n - x for x in lam.padded(n - 1))
    assert all(i <= mi <= n for i, mi in enumerate(m, start=1))
    assert all(m[k] <= m[k + 1] for k in range(len(m) - 1))
    return m


def partition_from_m(m: Sequence[int], n: int) -> Partition:
    return Partition(n - mi for mi in m)


def area_sequence(lam: Partition, n: int) -> tuple[int, ...]:
    return tuple(mi - i for i, mi in enumerate(m_sequence(lam, n), start=1))


def conjugate(lam: Partition) -> Partition:
    return lam.conjugate()


@dataclass(frozen=True)
class IncGraph:
    """Simple graph on vertices ``1..n``; edges are pairs ``(i, j)`` with ``i < j``."""

    n: int
    edges: frozenset

    def __post_init__(self):
        for i, j in self.edges:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"bad edge {(i, j)} for n={self.n}")

    def neighbors_below(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(i for i, j in self.edges if j == v))

    def has_edge(self, i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        return (i, j) in self.edges


def inc_graph(lam: Partition, n: int) -> IncGraph:
    m = m_sequence(lam, n)
    edges = frozenset((i, j) for i, j in combinations(range(1, n + 1), 2) if j <= m[i - 1])
    return IncGraph(n, edges)


def complete_graph(n: int) -> IncGraph:
    return IncGraph(n, frozenset(combinations(range(1, n + 1), 2)))


def path_graph(n: int) -> IncGraph:
    return IncGraph(n, frozenset((i, i + 1) for i in range(1, n)))


def empty_graph(n: int) -> IncGraph:
    return IncGraph(n, frozenset())


# -- enumeration -----------------------------------------------------------


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order: ``(n)`` first."""
    if max_part is None:
        max_part = n

    def rec(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for ps in rec(n, max_part):
        yield Partition(ps)


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions fitting a ``rows x cols`` box (including the empty one)."""

    def rec(k: int, cap: int) -> Iterator[tuple[int, ...]]:
        if k == rows:
            yield ()
            return
        for x in range(cap, -1, -1):
            for tail in rec(k + 1, x):
                yield (x,) + tail

    for ps in rec(0, cols):
        yield Partition(ps)


def partitions_in_staircase(n: int) -> Iterator[Partition]:
    def rec(i: int, cap: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield ()
            return
        for x in range(min(cap, n - i), -1, -1):
            for tail in rec(i + 1, x):
                yield (x,) + tail

    for ps in rec(1, n - 1):
        yield Partition(ps)


def dominates(a: Partition, b: Partition) -> bool:
    sa = sb = 0
    for k in range(max(len(a), len(b))):
        sa += a.part(k + 1)
        sb += b.part(k + 1)
        if sa < sb:
            return False
    return True
