"""Dense polynomials in one variable q with exact integer coefficients.

A :class:`QPoly` stores its coefficients lowest degree first, with trailing
zeros trimmed, so ``QPoly([1, 1, 2, 1, 1])`` is ``1 + q + 2q^2 + q^3 + q^4``
and the zero polynomial has an empty coefficient tuple.  Python ints are
arbitrary precision, so nothing here can overflow.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union


class InexactDivision(ArithmeticError):
    """Raised when a polynomial is not divisible by another over Z[q]."""


class _AnyCenter:
    """Palindrome center of the zero polynomial: every center works."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ANY_CENTER"


ANY_CENTER = _AnyCenter()


class QPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> QPoly:
        if k < 0:
            raise ValueError(f"negative exponent {k}")
        return cls([0] * k + [coeff])

    @classmethod
    def const(cls, c: int) -> QPoly:
        return cls([c])

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> float | int:
        """Degree; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def low_degree(self) -> float | int:
        """Smallest exponent with a nonzero coefficient (``inf`` for zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return float("inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def at_one(self) -> int:
        return sum(self.coeffs)

    # -- ring operations -----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QPoly([other])
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: Union[QPoly, int]) -> QPoly:
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self) -> QPoly:
        return QPoly([-c for c in self.coeffs])

    def __sub__(self, other: Union[QPoly, int]) -> QPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: Union[QPoly, int]) -> QPoly:
        return _coerce(other) - self

    def __mul__(self, other: Union[QPoly, int]) -> QPoly:
        if isinstance(other, int):
            return QPoly([c * other for c in self.coeffs])
        if not isinstance(other, QPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QPoly:
        if k < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int) -> QPoly:
        """Multiply by ``q**k`` (``k >= 0``)."""
        if k < 0:
            raise ValueError(f"negative shift {k}")
        if not self.coeffs:
            return self
        return QPoly((0,) * k + self.coeffs)

    def divmod(self, other: QPoly) -> tuple[QPoly, QPoly]:
        """Long division from the top coefficient.

        Raises :class:`InexactDivision` as soon as a leading coefficient of the
        running remainder is not divisible by the divisor's leading coefficient.
        """
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lead = other.coeffs[-1]
        quot = [0] * max(len(rem) - db, 0)
        for k in range(len(rem) - 1 - db, -1, -1):
            top = rem[k + db]
            if top == 0:
                continue
            qk, r = divmod(top, lead)
            if r:
                raise InexactDivision(f"{self} / {other}: leading coefficient not divisible")
            quot[k] = qk
            for j, c in enumerate(other.coeffs):
                rem[k + j] -= qk * c
        return QPoly(quot), QPoly(rem)

    def exact_div(self, other: QPoly) -> QPoly:
        quot, rem = self.divmod(other)
        if rem:
            raise InexactDivision(f"{self} / {other} leaves remainder {rem}")
        return quot

    def __floordiv__(self, other: QPoly) -> QPoly:
        return self.exact_div(other)

    # -- shape predicates ----------------------------------------------

    def palindrome_center(self):
        """Center of symmetry of the nonzero coefficients, as a Fraction.

        Symmetry is taken between the lowest and highest nonzero exponents, so
        ``q*(1+q)**3 = q + 3q^2 + 3q^3 + q^4`` has center 5/2.  Returns ``None``
        if the coefficients are not symmetric and :data:`ANY_CENTER` for zero.
        """
        c = self.coeffs
        if not c:
            return ANY_CENTER
        lo = self.low_degree
        body = c[lo:]
        if body != body[::-1]:
            return None
        return Fraction(lo + len(c) - 1, 2)

    def is_nonnegative(self) -> bool:
        return all(x >= 0 for x in self.coeffs)

    def is_unimodal(self) -> bool:
        """Weakly rises then weakly falls over the whole range ``0..deg``."""
        c = self.coeffs
        i = 0
        while i + 1 < len(c) and c[i] <= c[i + 1]:
            i += 1
        while i + 1 < len(c) and c[i] >= c[i + 1]:
            i += 1
        return i + 1 >= len(c)

    # -- formatting ----------------------------------------------------

    def to_list(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_list(cls, coeffs: Sequence[int]) -> QPoly:
        return cls(coeffs)

    def pretty(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else "q" if i == 1 else f"q^{i}"
            mag = abs(c)
            body = str(mag) if (mag != 1 or not mono) else ""
            term = body + mono
            if not parts:
                parts.append(term if c > 0 else "-" + term)
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.pretty()

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)})"


def _coerce(x) -> QPoly:
    if isinstance(x, QPoly):
        return x
    if isinstance(x, int):
        return QPoly([x])
    raise TypeError(f"cannot use {type(x).__name__} as QPoly")


ZERO = QPoly()
ONE = QPoly([1])
Q = QPoly([0, 1])


def add(a: QPoly, b: QPoly) -> QPoly:
    return a + b


def mul(a: QPoly, b: QPoly) -> QPoly:
    return a * b


def scale_power(a: QPoly, k: int) -> QPoly:
    return a.shift(k)


def exact_div(a: QPoly, b: QPoly) -> QPoly:
    return a.exact_div(b)


def palindrome_center(p: QPoly):
    return p.palindrome_center()


def is_unimodal(p: QPoly) -> bool:
    return p.is_unimodal()


def is_nonnegative(p: QPoly) -> bool:
    return p.is_nonnegative()


@lru_cache(maxsize=None)
def qint(n: int) -> QPoly:
    """The q-integer ``1 + q + ... + q^(n-1)``; ``qint(0) == 0``."""
    if n < 0:
        raise ValueError(f"q-integer of negative argument {n}")
    return QPoly([1] * n)


@lru_cache(maxsize=None)
def qfact(n: int) -> QPoly:
    if n < 0:
        raise ValueError(f"q-factorial of negative argument {n}")
    if n == 0:
        return ONE
    return qfact(n - 1) * qint(n)


def qmultinomial(parts: Sequence[int]) -> QPoly:
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {list(parts)}")
    out = qfact(sum(parts))
    for p in parts:
        out = out.exact_div(qfact(p))
    return out


def qbinomial(n: int, k: int) -> QPoly:
    if k < 0 or k > n:
        return ZERO
    return qmultinomial([k, n - k])


def qprod(factors: Iterable[QPoly]) -> QPoly:
    out = ONE
    for f in factors:
        out = out * f
        if not out:
            return ZERO
    return out


def qint_range(lo: int, hi: int) -> QPoly:
    """``[lo]_q [lo+1]_q ... [hi]_q``; empty (``1``) when ``lo > hi``."""
    return qprod(qint(k) for k in range(lo, hi + 1))
