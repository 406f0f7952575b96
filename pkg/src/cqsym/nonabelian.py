"""Closed-form e-coefficients for hook-like non-abelian shapes.

The shapes are ``lam = (i, a^(ell-1), b_1, ..., b_p)``.  For ``p = 0`` there
are closed forms for the coefficients of ``e_{n-1,1}`` and ``e_{n-2,2}``;
for arbitrary ``b`` one for ``e_{n-1,1}`` built from the nesting-graph
polynomials of ``nu = (a, b_1, ..., b_p)``; and for constant ``b`` a
simplified ``e_{n-1,1}`` form plus a conjectured ``e_{n-2,2}`` form.

Bracket conventions used when reading the displays:

* ``[m]_q`` for ``m < 0`` is the Laurent polynomial ``-q^m [-m]_q``.
* A run ``[x]_q [x-1]_q ... [y]_q`` means ``[x]_q! / [y-1]_q!``: it is 1 when
  ``x = y - 1`` and ``1/[y-1]_q`` when ``x = y - 2``.
* ``[m]_q!`` has a pole for ``m < 0``.  Strict evaluation refuses such a
  display (:class:`UndefinedDisplay`).  Continued evaluation replaces ``n``
  by ``n + delta``, normalises ``[delta]_q! = 1`` (harmless, every factorial
  is an overall factor) and lets ``delta -> 0``.

Continued evaluation works numerically: at each integer ``q`` the display is
expanded as a Laurent series in ``eps = delta * ln(q) / (q - 1)`` modulo a
large prime, the constant term is read off, and the polynomial is
interpolated from enough points and cross-checked on two more.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .oracle import x_lambda_oracle
from .partition import Partition, fits_staircase
from .qpoly import ONE, ZERO, InexactDivision, QPoly, qfact, qint
from .rectlemma import d_exp, f_args
from .report import COUNTEREXAMPLE, FAIL, MATCH, NOT_APPLICABLE, PASS, NotApplicable, Report

E_N11 = "e-n11"
E_N22 = "e-n22"
CONJECTURE = "conjecture"
UNDEFINED = "undefined-display"


class UndefinedDisplay(ArithmeticError):
    """The display has no value at this instance under the chosen reading."""


@dataclass(frozen=True)
class HookFamily:
    i: int
    a: int
    ell: int
    n: int
    b: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(self.b))
        if self.ell < 1 or min((self.i, self.a) + self.b, default=0) < 0:
            raise ValueError(f"bad family {self}")
        if any(x < y for x, y in zip(self.b, self.b[1:])):
            raise ValueError(f"b must be weakly decreasing, got {self.b}")

    @property
    def p(self) -> int:
        return len(self.b)

    @property
    def constant_b(self) -> bool:
        return len(set(self.b)) <= 1

    @property
    def b_value(self) -> int:
        if not self.b or not self.constant_b:
            raise ValueError(f"{self.b} is not a constant b-list")
        return self.b[0]

    def partition(self) -> Partition:
        return Partition((self.i,) + (self.a,) * (self.ell - 1) + self.b)

    @property
    def in_general_regime(self) -> bool:
        """``a <= n - ell - p``, the hypothesis of the arbitrary-b formula."""
        return self.a <= self.n - self.ell - self.p

    def params(self) -> dict:
        out = {"i": self.i, "a": self.a, "ell": self.ell, "n": self.n}
        if self.b:
            out["b"] = list(self.b)
        return out


def _basic_ok(f: HookFamily) -> bool:
    return (
        f.ell >= 2
        and 1 <= f.a <= f.n - f.ell <= f.i <= f.n - 1
        and all(x <= f.a for x in f.b)
        and fits_staircase(f.partition(), f.n)
    )


def admissible(f: HookFamily, which: str) -> bool:
    """Hypotheses of each display, with ``l(lam) = ell`` forcing ``a >= 1``.

    The constant-b ``e_{n-1,1}`` form is derived from the arbitrary-b one, so
    it inherits ``a <= n - ell - p``; the conjecture keeps its own wider range.
    """
    if not _basic_ok(f):
        return False
    if which == E_N22:
        return f.p == 0 and f.n >= 4
    if which == E_N11:
        return f.p == 0 or f.in_general_regime
    if which == CONJECTURE:
        return f.p >= 1 and f.constant_b and f.n >= 4
    raise ValueError(f"unknown display {which!r}")


def require(f: HookFamily, which: str) -> None:
    if not admissible(f, which):
        raise NotApplicable(f"{f} is outside the hypotheses of the {which} display")


# -- evaluation rings ---------------------------------------------------------


@dataclass(frozen=True)
class Shifted:
    """``m + k*delta``; only ``n`` carries ``delta``."""

    m: int
    k: int = 0

    def _co(self, o):
        return o if isinstance(o, Shifted) else Shifted(o)

    def __add__(self, o):
        o = self._co(o)
        return Shifted(self.m + o.m, self.k + o.k)

    __radd__ = __add__

    def __sub__(self, o):
        o = self._co(o)
        return Shifted(self.m - o.m, self.k - o.k)

    def __rsub__(self, o):
        return self._co(o) - self

    def __mul__(self, c: int):
        return Shifted(self.m * c, self.k * c)

    __rmul__ = __mul__

    def __neg__(self):
        return Shifted(-self.m, -self.k)


def _split(x) -> tuple[int, int]:
    return (x.m, x.k) if isinstance(x, Shifted) else (x, 0)


@dataclass(frozen=True)
class Laurent:
    low: int
    poly: QPoly

    @classmethod
    def of(cls, poly: QPoly, low: int = 0) -> Laurent:
        if not poly:
            return cls(0, ZERO)
        k = poly.low_degree
        return cls(low + k, QPoly(poly.coeffs[k:]))

    def __mul__(self, o: Laurent) -> Laurent:
        return Laurent.of(self.poly * o.poly, self.low + o.low)

    def __add__(self, o: Laurent) -> Laurent:
        if not self.poly:
            return o
        if not o.poly:
            return self
        lo = min(self.low, o.low)
        return Laurent.of(self.poly.shift(self.low - lo) + o.poly.shift(o.low - lo), lo)

    def __bool__(self) -> bool:
        return bool(self.poly)


@dataclass(frozen=True)
class _Frac:
    num: Laurent
    den: Laurent

    def __mul__(self, o):
        return _Frac(self.num * o.num, self.den * o.den)

    def __add__(self, o):
        if self.den == o.den:
            return _Frac(self.num + o.num, self.den)
        return _Frac(self.num * o.den + o.num * self.den, self.den * o.den)


_L1 = Laurent(0, ONE)


class StrictRing:
    """Exact evaluation with integer ``n``; poles raise :class:`UndefinedDisplay`."""

    one = _Frac(_L1, _L1)

    def nv(self, n: int):
        return n

    def br(self, m: int) -> _Frac:
        if m >= 0:
            return _Frac(Laurent.of(qint(m)), _L1)
        return _Frac(Laurent.of(-qint(-m), m), _L1)

    def fact(self, m: int) -> _Frac:
        if m < 0:
            raise UndefinedDisplay(f"[{m}]_q! has a pole")
        return _Frac(Laurent.of(qfact(m)), _L1)

    def qp(self, m: int) -> _Frac:
        return _Frac(Laurent(m, ONE), _L1)

    def span(self, x: int, y: int) -> _Frac:
        out = self.one
        if x >= y - 1:
            for j in range(y, x + 1):
                out = out * self.br(j)
            return out
        for j in range(x + 1, y):
            b = self.br(j)
            out = out * _Frac(b.den, b.num)
        return out

    def result(self, v: _Frac) -> QPoly:
        if not v.den:
            raise UndefinedDisplay("division by [0]_q")
        if not v.num:
            return ZERO
        try:
            quot = v.num.poly.exact_div(v.den.poly)
        except InexactDivision as exc:
            raise UndefinedDisplay(f"display is not a polynomial here: {exc}") from None
        out = Laurent.of(quot, v.num.low - v.den.low)
        if out.low < 0:
            raise UndefinedDisplay("display has negative powers of q here")
        return out.poly.shift(out.low)


_P = (1 << 61) - 1
_PREC = 10


@dataclass(frozen=True)
class _Ser:
    """Coefficients of ``eps^v .. eps^(v+len-1)`` mod ``_P``, all known."""

    v: int
    c: tuple[int, ...]

    def __mul__(self, o):
        L = min(len(self.c), len(o.c))
        out = [0] * L
        for x in range(L):
            cx = self.c[x]
            if cx:
                for y in range(L - x):
                    out[x + y] = (out[x + y] + cx * o.c[y]) % _P
        return _Ser(self.v + o.v, tuple(out))

    def __add__(self, o):
        lo = min(self.v, o.v)
        hi = min(self.v + len(self.c), o.v + len(o.c))
        out = [0] * max(hi - lo, 0)
        for s in (self, o):
            for j, cj in enumerate(s.c):
                if s.v + j < hi:
                    out[s.v + j - lo] = (out[s.v + j - lo] + cj) % _P
        return _Ser(lo, tuple(out))

    def inverse(self):
        c = list(self.c)
        v = self.v
        while c and c[0] == 0:
            c.pop(0)
            v += 1
        if not c:
            raise UndefinedDisplay("division by a quantity that vanishes in the limit")
        inv0 = pow(c[0], -1, _P)
        out = [inv0]
        for j in range(1, len(c)):
            s = sum(c[t] * out[j - t] for t in range(1, j + 1)) % _P
            out.append(-s * inv0 % _P)
        return _Ser(-v, tuple(out))


class ContinuedRing:
    """Series evaluation at one integer ``q`` with ``n -> n + delta``."""

    def __init__(self, q0: int):
        self.q0 = q0
        inv_1mq = pow((1 - q0) % _P, -1, _P)
        self.inv_1mq = inv_1mq
        # exp((q0 - 1) eps)
        c, fact = [], 1
        for j in range(_PREC):
            if j:
                fact = fact * j % _P
            c.append(pow(q0 - 1, j, _P) * pow(fact, -1, _P) % _P)
        self._exp = {1: _Ser(0, tuple(c))}
        self.one = self.const(1)

    def const(self, x: int) -> _Ser:
        return _Ser(0, (x % _P,) + (0,) * (_PREC - 1))

    def _E(self, k: int) -> _Ser:
        if k not in self._exp:
            base = self._exp[1] if k > 0 else self._exp[1].inverse()
            out = self.one
            for _ in range(abs(k)):
                out = out * base
            self._exp[k] = out
        return self._exp[k]

    def nv(self, n: int):
        return Shifted(n, 1)

    def qp(self, x) -> _Ser:
        m, k = _split(x)
        out = self.const(pow(self.q0, m, _P))
        return out * self._E(k) if k else out

    def br(self, x) -> _Ser:
        m, k = _split(x)
        return (self.one + self.qp(x) * self.const(-1)) * self.const(self.inv_1mq)

    def fact(self, x) -> _Ser:
        m, k = _split(x)
        if m < 0 and k == 0:
            raise UndefinedDisplay(f"[{m}]_q! has a pole")
        out = self.one
        if m >= 0:
            for j in range(1, m + 1):
                out = out * self.br(Shifted(j, k))
            return out
        for j in range(m + 1, 1):
            out = out * self.br(Shifted(j, k))
        return out.inverse()

    def span(self, x, y) -> _Ser:
        (xm, k), (ym, _) = _split(x), _split(y)
        out = self.one
        if xm >= ym - 1:
            for j in range(ym, xm + 1):
                out = out * self.br(Shifted(j, k))
            return out
        for j in range(xm + 1, ym):
            out = out * self.br(Shifted(j, k))
        return out.inverse()

    def result(self, s: _Ser) -> int:
        for j, cj in enumerate(s.c):
            order = s.v + j
            if order < 0 and cj:
                raise UndefinedDisplay("the display diverges as n is continued")
            if order == 0:
                return cj
        if s.v > 0:
            return 0
        raise UndefinedDisplay("series precision exhausted")


def _interpolate(xs: list[int], ys: list[int]) -> list[int]:
    """Coefficients (mod ``_P``) of the interpolating polynomial, low degree first."""
    k = len(xs)
    coeffs = [0] * k
    for j in range(k):
        basis = [1]
        denom = 1
        for m in range(k):
            if m == j:
                continue
            basis = [(lo - xs[m] * hi) % _P for lo, hi in zip([0] + basis, basis + [0])]
            denom = denom * (xs[j] - xs[m]) % _P
        scale = ys[j] * pow(denom, -1, _P) % _P
        for d, bd in enumerate(basis):
            coeffs[d] = (coeffs[d] + scale * bd) % _P
    return coeffs


def _horner(coeffs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % _P
    return acc


def _continued(display, f: HookFamily) -> QPoly:
    deg = f.n * (f.n - 1) // 2
    xs = list(range(2, deg + 5))
    ys = [ContinuedRing(x).result(display(ContinuedRing(x), f)) for x in xs]
    coeffs = _interpolate(xs[:-2], ys[:-2])
    if any(_horner(coeffs, x) != y for x, y in zip(xs[-2:], ys[-2:])):
        raise UndefinedDisplay("continued value is not a polynomial of the expected degree")
    out = [c - _P if c > _P // 2 else c for c in coeffs]
    if any(abs(c) > 1 << 40 for c in out):
        raise UndefinedDisplay("continued value does not look integral")
    return QPoly(out)


def evaluate(display, f: HookFamily, continued: bool = False) -> QPoly:
    if continued:
        return _continued(display, f)
    R = StrictRing()
    return R.result(display(R, f))


# -- the displays ---------------------------------------------------------------


def _d51(R, f: HookFamily):
    n, i, a, l = R.nv(f.n), f.i, f.a, f.ell
    br = R.br
    return (
        R.span(n - 3 - a, n - l - a)
        * R.fact(n - l - 2)
        * (
            R.qp(n - l - a) * br(n - 1 - i) * br(n - 1) * br(a) * br(l - 2)
            + R.qp(n - 1 - i) * br(i) * br(n - 2 - a) * br(n - l - 1)
        )
    )


def _d52(R, f: HookFamily):
    n, i, a, l = R.nv(f.n), f.i, f.a, f.ell
    br = R.br
    return (
        br(n - 1 - i)
        * br(n - 4)
        * R.span(n - 4 - a, n - l - a)
        * R.fact(n - l - 3)
        * (
            R.qp(n - 2 - a) * br(2) * br(a) * br(n - l - a) * br(n - l - 2)
            + R.qp(2 * (n - l - a)) * br(l) * br(a) * br(a - 1) * br(l - 3)
        )
    )


def _d53(R, f: HookFamily):
    n, i, a, l, p = R.nv(f.n), f.i, f.a, f.ell, f.p
    br = R.br
    nu = Partition((a,) + f.b)
    part_a = R.qp(n - 1 - i) * br(i) * br(n - 2 - a) * br(n - l - p - 1)
    for j, bj in enumerate(f.b, start=1):
        part_a = part_a * br(n - l - j - bj)
    part_b = None
    for k in range(1, p + 2):
        term = R.qp(n - l - a + d_exp(nu, [k], p + 1, a)) * br(l + p - 1 - k)
        for x in f_args(p + 1, n - l - 1, nu, [k]):
            term = term * br(x)
        part_b = term if part_b is None else part_b + term
    return R.span(n - 3 - a, n - l - a) * R.fact(n - l - p - 2) * (part_a + br(n - 1 - i) * br(n - 1) * part_b)


def _d54(R, f: HookFamily):
    n, i, a, l, p, b = R.nv(f.n), f.i, f.a, f.ell, f.p, f.b_value
    br = R.br
    run2 = R.span(n - l - 2 - b, n - l - p - b)
    return (
        R.span(n - 3 - a, n - l - a)
        * R.fact(n - l - p - 2)
        * (
            R.qp(n - l - a) * br(n - 1 - i) * br(n - 1) * br(a - b) * run2 * br(n - l - p - 1) * br(l - 2)
            + R.qp(n - l - p - b) * br(n - 1 - i) * br(n - 1) * br(b) * br(n - l - 1 - a) * run2 * br(l + p - 2)
            + R.qp(n - 1 - i) * br(i) * br(n - 2 - a) * R.span(n - l - 1 - b, n - l - p - b) * br(n - l - p - 1)
        )
    )


def _d55(R, f: HookFamily):
    n, i, a, l, p, b = R.nv(f.n), f.i, f.a, f.ell, f.p, f.b_value
    br, qp = R.br, R.qp
    head = br(n - 1 - i) * br(n - 4) * R.span(n - 4 - a, n - l - a)
    if p == 1:
        return (
            head
            * R.fact(n - l - 4)
            * (
                qp(n - 2 - a) * br(2) * br(a - b) * br(n - l - a) * br(n - l - 2) * br(n - l - 3)
                + qp(n - 2 - b) * br(2) * br(b) * br(n - l - 1 - a) * br(n - l - 1 - a) * br(n - l - 3)
                + qp(2 * (n - l - a)) * br(a - b) * br(a - 1) * br(n - l - 3) * br(l) * br(l - 3)
                + qp(2 * n - 2 * l - a - b - 2) * br(b) * br(a - 1) * br(n - l - 1 - a) * br(l + 1) * br(l - 2)
            )
        )
    tail = br(l + p - 1) * br(l - 2) + qp(l - 1) * br(p - 2)
    return (
        head
        * R.span(n - l - 3 - b, n - l - p - b)
        * R.fact(n - l - p - 3)
        * (
            qp(n - 2 - a) * br(2) * br(a - b) * br(n - l - a) * br(n - l - 2 - b) * br(n - l - p - 1) * br(n - l - p - 2)
            + qp(n - 2 - b) * br(2) * br(b) * br(n - l - 1 - a) * br(n - l - 2 - b) * br(n - l - p - a) * br(n - l - p - 2)
            + qp(2 * (n - l - a)) * br(a - b) * br(a - b - 1) * br(n - l - p - 1) * br(n - l - p - 2) * br(l) * br(l - 3)
            + qp(2 * n - 2 * l - a - b - p - 1) * br(2) * br(b) * br(a - b) * br(n - l - 1 - a) * br(n - l - p - 2) * tail
            + qp(2 * (n - l - p - b)) * br(b) * br(b - 1) * br(n - l - 1 - a) * br(n - l - 2 - a) * br(l + p) * br(l + p - 3)
        )
    )


# -- public coefficient functions ------------------------------------------------


def coeff_e_n11_hook(f: HookFamily, continued: bool = False) -> QPoly:
    if f.p:
        raise NotApplicable("the hook form needs an empty b-list")
    require(f, E_N11)
    return evaluate(_d51, f, continued)


def coeff_e_n22_hook(f: HookFamily, continued: bool = False) -> QPoly:
    require(f, E_N22)
    return evaluate(_d52, f, continued)


def coeff_e_n11_general(f: HookFamily, continued: bool = False) -> QPoly:
    """Arbitrary ``b``; requires ``a <= n - ell - p``."""
    require(f, E_N11)
    return evaluate(_d53, f, continued)


def coeff_e_n11_constant(f: HookFamily, continued: bool = False, enforce_regime: bool = True) -> QPoly:
    """Constant ``b``.  ``enforce_regime=False`` evaluates outside ``a <= n - ell - p`` too."""
    if not f.b or not f.constant_b:
        raise NotApplicable("needs a nonempty constant b-list")
    if enforce_regime:
        require(f, E_N11)
    elif not _basic_ok(f):
        raise NotApplicable(f"{f} violates the basic family constraints")
    return evaluate(_d54, f, continued)


def conjecture_e_n22(f: HookFamily, continued: bool = False) -> QPoly:
    require(f, CONJECTURE)
    return evaluate(_d55, f, continued)


def oracle_coefficient(f: HookFamily, mu: tuple[int, int]) -> QPoly:
    return x_lambda_oracle(f.partition(), f.n)[Partition(mu)]


@dataclass
class Evaluation:
    value: QPoly | None
    how: str  # "strict", "continued" or the reason it is undefined


def evaluate_with_fallback(display, f: HookFamily) -> Evaluation:
    try:
        return Evaluation(evaluate(display, f), "strict")
    except UndefinedDisplay:
        pass
    try:
        return Evaluation(evaluate(display, f, continued=True), "continued")
    except UndefinedDisplay as exc:
        return Evaluation(None, str(exc))


_DISPLAYS = {
    "hook-e-n11": (_d51, E_N11, (1,)),
    "hook-e-n22": (_d52, E_N22, (2,)),
    "general-e-n11": (_d53, E_N11, (1,)),
    "constant-e-n11": (_d54, E_N11, (1,)),
    "conjecture-e-n22": (_d55, CONJECTURE, (2,)),
}


def display_names() -> list[str]:
    return list(_DISPLAYS)


def closed_form_check(name: str, f: HookFamily) -> Report:
    """Compare one display with the oracle.

    ``extra['evaluation']`` says whether the strict reading applied or the
    continuation in ``n`` was needed; ``status`` is ``undefined-display``
    when neither gives a value.
    """
    display, which, (r,) = _DISPLAYS[name]
    params = {"display": name, **f.params()}
    if not admissible(f, which) or (name.startswith("hook") and f.p) or (name == "constant-e-n11" and not (f.b and f.constant_b)):
        return Report(name, params, NOT_APPLICABLE)
    ev = evaluate_with_fallback(display, f)
    rhs = oracle_coefficient(f, (f.n - r, r))
    if ev.value is None:
        return Report(name, params, UNDEFINED, None, rhs, extra={"evaluation": ev.how})
    status = PASS if ev.value == rhs else FAIL
    return Report(name, params, status, ev.value, rhs, None if status == PASS else (f.n - r, r), {"evaluation": ev.how})


def conjecture_e_n22_check(f: HookFamily) -> Report:
    """Match / counterexample-candidate verdict for the conjectured e_{n-2,2} form.

    A mismatch is a finding about the conjecture, not an error here.
    """
    rep = closed_form_check("conjecture-e-n22", f)
    if rep.status == PASS:
        rep.status = MATCH
    elif rep.status == FAIL:
        rep.status = COUNTEREXAMPLE
    rep.kind = "conjecture"
    rep.extra["general_regime"] = f.in_general_regime
    return rep


# -- enumeration ------------------------------------------------------------------


def _b_lists(p: int, top: int) -> Iterator[tuple[int, ...]]:
    if p == 0:
        yield ()
        return
    for first in range(top, -1, -1):
        for rest in _b_lists(p - 1, first):
            yield (first,) + rest


def families(n: int, constant_only: bool = False, max_p: int | None = None) -> Iterator[HookFamily]:
    """Every family with ``ell >= 2`` and ``1 <= a <= n - ell <= i <= n - 1`` inside ``delta_n``."""
    for ell in range(2, n):
        for i in range(n - ell, n):
            for a in range(1, n - ell + 1):
                top_p = n - 1 - ell if max_p is None else min(max_p, n - 1 - ell)
                for p in range(top_p + 1):
                    blists = ([(b,) * p for b in range(a, -1, -1)] if p else [()]) if constant_only else _b_lists(p, a)
                    for bl in blists:
                        f = HookFamily(i, a, ell, n, bl)
                        if fits_staircase(f.partition(), n):
                            yield f


def instances(name: str, n: int) -> Iterator[HookFamily]:
    display, which, _ = _DISPLAYS[name]
    hook = name.startswith("hook")
    const = name in ("constant-e-n11", "conjecture-e-n22")
    for f in families(n, constant_only=const, max_p=0 if hook else None):
        if hook != (f.p == 0):
            continue
        if admissible(f, which):
            yield f


def gap_instances(n: int) -> Iterator[HookFamily]:
    """Constant-b families with ``n - ell - p < a <= n - ell``: the range claimed for the constant-b form minus that of the arbitrary-b form."""
    for f in families(n, constant_only=True):
        if f.p and not f.in_general_regime:
            yield f
