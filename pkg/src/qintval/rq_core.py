"""The ring R_q of quantum integer-valued polynomials.

Elements of Q(q)[x] are ``XPoly``; elements written in the q-binomial basis
qbinom(x, k) (or in its bar image) are ``QBinExpansion``.  Every operation
here is exact.  Shifting by negative amounts, dilation and re-expansion all
go through one generic path (substitute into an XPoly, then ``expand``); the
closed-form coefficient formulas are kept alongside as independent checks.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import BasisMismatch, PoleAtOne, PoleError
from .exactalg import (
    LaurentPoly,
    RatFunc,
    _normalize_polys,
    _padd,
    _pexquo,
    _pgcd,
    _pmul,
    parse_expr,
    parse_ratfunc,
)
from .qnum import binom, q_binomial, q_factorial, q_int

__all__ = [
    "XPoly",
    "Basis",
    "QBinExpansion",
    "Membership",
    "qbinom_poly",
    "qbinom_at_qint",
    "eval_at_qint",
    "expand",
    "expand_bar",
    "synthesize",
    "membership",
    "classify_by_coefficients",
    "in_rq_by_evaluation",
    "s_bar",
    "struct_const",
    "struct_const_by_factorials",
    "bar_struct_const",
    "classical_struct_const",
    "multiply",
    "shift",
    "shift_by_substitution",
    "shift_closed_form",
    "shift_bar_closed_form",
    "bar",
    "bar_in_standard",
    "standard_in_bar",
    "convert_basis",
    "dilate",
    "dilation_poly",
    "specialize_q1",
    "parse_xpoly",
    "parse_expansion",
]

_ONE = (1,)


def _xtrim(c: list) -> tuple:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _xadd(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, y in enumerate(b):
        r[i] = _padd(r[i], y)
    return _xtrim(r)


def _xmul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    r = [()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    r[i + j] = _padd(r[i + j], _pmul(x, y))
    return _xtrim(r)


def _xscale(a: tuple, c: tuple) -> tuple:
    return _xtrim([_pmul(x, c) for x in a])


def _plcm(a: tuple, b: tuple) -> tuple:
    if a == b or b == _ONE:
        return a
    if a == _ONE:
        return b
    return _pmul(a, _pexquo(b, _pgcd(a, b)))


class XPoly:
    """Polynomial in x with coefficients in Q(q); ``coeffs[i]`` multiplies x^i."""

    __slots__ = ("coeffs", "_cd", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _xtrim([RatFunc.coerce(c) for c in coeffs])
        self._cd = None
        self._hash = None

    @classmethod
    def x(cls) -> "XPoly":
        return cls((0, 1))

    @classmethod
    def coerce(cls, p) -> "XPoly":
        if isinstance(p, XPoly):
            return p
        return cls((p,))

    @classmethod
    def _from_cd(cls, nums: tuple, den: tuple) -> "XPoly":
        return cls(_normalize_polys(n, den) if n else 0 for n in nums)

    @property
    def degree(self) -> int | None:
        """Degree in x; None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def common_denominator(self) -> tuple[tuple, tuple]:
        """(numerators, D) with coeffs[i] = numerators[i] / D, D monic in q."""
        if self._cd is None:
            den = _ONE
            for c in self.coeffs:
                den = _plcm(den, c.den)
            nums = tuple(_pmul(c.num, _pexquo(den, c.den)) if c.num else () for c in self.coeffs)
            self._cd = (nums, den)
        return self._cd

    # -- arithmetic

    def __add__(self, other):
        o = _as_xpoly(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        r = list(a)
        for i, c in enumerate(b):
            r[i] = r[i] + c
        return XPoly(r)

    __radd__ = __add__

    def __neg__(self) -> "XPoly":
        return XPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = _as_xpoly(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _as_xpoly(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _as_xpoly(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return XPoly()
        if len(o.coeffs) == 1:
            c = o.coeffs[0]
            return XPoly(a * c for a in self.coeffs)
        if len(self.coeffs) == 1:
            return o * self
        na, da = self.common_denominator()
        nb, db = o.common_denominator()
        return XPoly._from_cd(_xmul(na, nb), _pmul(da, db))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = RatFunc.coerce(other) if not isinstance(other, XPoly) else None
        if c is None:
            if other.degree == 0:
                c = other.coeffs[0]
            else:
                return NotImplemented
        inv = c.inverse()
        return XPoly(a * inv for a in self.coeffs)

    def __pow__(self, n: int) -> "XPoly":
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = XPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def compose(self, inner: "XPoly") -> "XPoly":
        """Substitute x := inner."""
        inner = XPoly.coerce(inner)
        if not self.coeffs:
            return self
        nums, den = self.common_denominator()
        ni, di = inner.common_denominator()
        d = len(nums) - 1
        acc = (nums[d],)
        dpow = _ONE
        for i in range(d - 1, -1, -1):
            dpow = _pmul(dpow, di)
            acc = _xmul(acc, ni)
            if nums[i]:
                acc = _xadd(acc, (_pmul(nums[i], dpow),))
        total_den = den
        for _ in range(d):
            total_den = _pmul(total_den, di)
        return XPoly._from_cd(acc, total_den)

    def evaluate(self, value) -> RatFunc:
        """P(value) for value in Q(q) (LaurentPoly, RatFunc or rational)."""
        if not self.coeffs:
            return RatFunc._raw((), _ONE)
        nums, den = self.common_denominator()
        if isinstance(value, (int, Fraction)):
            value = LaurentPoly({0: value})
        if isinstance(value, LaurentPoly):
            acc = LaurentPoly._raw(0, ())
            for n in reversed(nums):
                acc = acc * value + LaurentPoly.from_coeffs(n)
            if not acc.coeffs:
                return RatFunc._raw((), _ONE)
            return _ratfunc_from_laurent_over(acc, den)
        value = RatFunc.coerce(value)
        acc = RatFunc._raw((), _ONE)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    __call__ = evaluate

    def bar(self) -> "XPoly":
        """The ring involution q -> q^-1, x -> -q x."""
        minus_q = RatFunc._raw((0, -1), _ONE)
        out = []
        power = RatFunc._raw(_ONE, _ONE)
        for c in self.coeffs:
            out.append(c.bar() * power)
            power = power * minus_q
        return XPoly(out)

    def specialize(self, q_value) -> list:
        """Coefficient list with q := q_value."""
        return [c(q_value) for c in self.coeffs]

    # -- comparison and text

    def __eq__(self, other):
        o = _as_xpoly(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            cs = str(c)
            if not mono:
                parts.append(f"({cs})" if (" " in cs or "/" in cs) else cs)
            elif cs == "1":
                parts.append(mono)
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"XPoly('{self}')"


def _ratfunc_from_laurent_over(num: LaurentPoly, den: tuple) -> RatFunc:
    if num.low >= 0:
        return _normalize_polys((0,) * num.low + num.coeffs, den)
    return _normalize_polys(num.coeffs, (0,) * (-num.low) + den)


def _as_xpoly(x):
    if isinstance(x, XPoly):
        return x
    if isinstance(x, (int, Fraction, LaurentPoly, RatFunc)):
        return XPoly((x,))
    return None


def parse_xpoly(text: str) -> XPoly:
    """Parse an expression in x and q, e.g. ``x^2/(q*(1+q)) - 1/2``."""
    return XPoly.coerce(parse_expr(text, {"q": RatFunc.q(), "x": XPoly.x()}))


# -- the q-binomial basis -----------------------------------------------------


@functools.lru_cache(maxsize=None)
def qbinom_poly(k: int) -> XPoly:
    """x (x - [1]_q) ... (x - [k-1]_q) / (q^C(k,2) [k]_q!)."""
    if k < 0:
        raise ValueError("qbinom_poly needs k >= 0")
    if k == 0:
        return XPoly((1,))
    # product of linear factors kept as integer q-polynomials, one division at the end
    nums: tuple = ((), _ONE)
    for i in range(1, k):
        qi = q_int(i).to_poly()
        nums = _xmul(nums, (tuple(-c for c in qi), _ONE))
    den = _pmul((0,) * (k * (k - 1) // 2) + _ONE, q_factorial(k).to_poly())
    return XPoly._from_cd(nums, den)


@functools.lru_cache(maxsize=None)
def qbinom_at_qint(n: int, k: int) -> LaurentPoly:
    """qbinom([n]_q, k) = [n][n-1]...[n-k+1] / [k]! for any integer n."""
    if k < 0:
        return LaurentPoly()
    if n >= 0:
        return q_binomial(n, k)
    num = LaurentPoly({0: 1})
    for i in range(k):
        num = num * q_int(n - i)
    f = (num / q_factorial(k)).to_laurent()
    assert f is not None
    return f


class Basis(str, Enum):
    STANDARD = "standard"
    BAR = "bar"


class QBinExpansion:
    """Finitely supported map k -> coefficient in Q(q) on a declared basis.

    In the standard basis this stands for sum_k c_k qbinom(x, k); in the bar
    basis for sum_k c_k bar(qbinom(x, k)).  Zero coefficients are dropped and
    keys are kept in ascending order.
    """

    __slots__ = ("basis", "coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | None = None, basis: Basis | str = Basis.STANDARD):
        self.basis = Basis(basis)
        items = []
        for k, c in sorted((coeffs or {}).items()):
            if int(k) < 0:
                raise ValueError("basis indices are natural numbers")
            c = RatFunc.coerce(c)
            if c:
                items.append((int(k), c))
        self.coeffs: dict[int, RatFunc] = dict(items)
        self._hash = None

    @classmethod
    def basis_element(cls, k: int, basis: Basis | str = Basis.STANDARD) -> "QBinExpansion":
        return cls({k: 1}, basis)

    def items(self):
        return self.coeffs.items()

    def get(self, k: int) -> RatFunc:
        return self.coeffs.get(k, RatFunc._raw((), _ONE))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int | None:
        return max(self.coeffs) if self.coeffs else None

    def laurent_coeffs(self) -> dict[int, LaurentPoly]:
        """Coefficients as Laurent polynomials (ValueError if one is not)."""
        return {k: LaurentPoly.coerce(c) for k, c in self.coeffs.items()}

    def is_integral(self) -> bool:
        return all(c.is_integral() for c in self.coeffs.values())

    def to_xpoly(self) -> XPoly:
        return synthesize(self)

    def map_coeffs(self, fn) -> "QBinExpansion":
        return QBinExpansion({k: fn(c) for k, c in self.coeffs.items()}, self.basis)

    def scale(self, c) -> "QBinExpansion":
        c = RatFunc.coerce(c)
        return self.map_coeffs(lambda a: a * c)

    def __add__(self, other):
        if not isinstance(other, QBinExpansion):
            return NotImplemented
        if other.basis != self.basis:
            raise BasisMismatch("cannot add expansions in different bases")
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return QBinExpansion(out, self.basis)

    def __neg__(self):
        return self.map_coeffs(lambda a: -a)

    def __sub__(self, other):
        if not isinstance(other, QBinExpansion):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QBinExpansion):
            return multiply(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, QBinExpansion):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.basis, tuple(self.coeffs.items())))
        return self._hash

    def to_json(self) -> dict:
        return {"basis": self.basis.value, "coeffs": {str(k): str(c) for k, c in self.coeffs.items()}}

    @classmethod
    def from_json(cls, data) -> "QBinExpansion":
        if isinstance(data, str):
            data = json.loads(data)
        coeffs = {int(k): parse_ratfunc(v) for k, v in data.get("coeffs", {}).items()}
        return cls(coeffs, data.get("basis", "standard"))

    def __str__(self):
        name = "qbinom" if self.basis is Basis.STANDARD else "bar_qbinom"
        if not self.coeffs:
            return "0"
        return " + ".join(f"({c})*{name}(x,{k})" for k, c in self.coeffs.items())

    def __repr__(self):
        body = ", ".join(f"{k}: '{c}'" for k, c in self.coeffs.items())
        return f"QBinExpansion({{{body}}}, basis='{self.basis.value}')"


def parse_expansion(text: str, basis: Basis | str = Basis.STANDARD) -> QBinExpansion:
    """Parse ``{"basis":..,"coeffs":..}`` JSON, a bare index ``k``, or ``k:c; k:c``."""
    text = text.strip()
    if text.startswith("{"):
        return QBinExpansion.from_json(text)
    if text.isdigit():
        return QBinExpansion.basis_element(int(text), basis)
    coeffs: dict[int, RatFunc] = {}
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        k, sep, c = chunk.partition(":")
        if not sep:
            raise ValueError(f"expected 'k: coefficient', got {chunk!r}")
        k = int(k)
        coeffs[k] = coeffs.get(k, RatFunc()) + parse_ratfunc(c)
    return QBinExpansion(coeffs, basis)


# -- evaluation, synthesis and expansion --------------------------------------


@functools.lru_cache(maxsize=None)
def _bar_basis_poly(k: int) -> XPoly:
    return qbinom_poly(k).bar()


def synthesize(E: QBinExpansion) -> XPoly:
    """The polynomial sum_k c_k qbinom(x, k) (or its bar-basis analogue)."""
    basis_poly = qbinom_poly if E.basis is Basis.STANDARD else _bar_basis_poly
    total = XPoly()
    for k, c in E.items():
        total = total + basis_poly(k) * c
    return total


def eval_at_qint(P, n: int) -> RatFunc:
    """P([n]_q) for an XPoly or a QBinExpansion.

    Expansions are evaluated through the basis values qbinom([n]_q, k), which
    is independent of the polynomial route.
    """
    if isinstance(P, QBinExpansion):
        total = RatFunc._raw((), _ONE)
        for k, c in P.items():
            if P.basis is Basis.STANDARD:
                v = qbinom_at_qint(n, k)
            else:
                v = qbinom_at_qint(-n, k).bar()
            total = total + c * v
        return total
    return XPoly.coerce(P).evaluate(q_int(n))


def expand(P) -> QBinExpansion:
    """Coefficients c_k with P = sum_k c_k qbinom(x, k), by interpolation at [0]_q, [1]_q, ...

    c_0 = P(0) and c_k = P([k]_q) - P_{k-1}([k]_q) where P_{k-1} is the
    partial sum; all work is done on numerators over a common denominator.
    """
    P = XPoly.coerce(P)
    if P.is_zero():
        return QBinExpansion()
    nums, den = P.common_denominator()
    numer_polys = [LaurentPoly.from_coeffs(n) for n in nums]
    scaled: list[LaurentPoly] = []
    for k in range(len(nums)):
        x = q_int(k)
        acc = LaurentPoly()
        for n in reversed(numer_polys):
            acc = acc * x + n
        for j, cj in enumerate(scaled):
            if cj:
                acc = acc - cj * q_binomial(k, j)
        scaled.append(acc)
    return QBinExpansion({k: _ratfunc_from_laurent_over(c, den) for k, c in enumerate(scaled) if c})


def expand_bar(P) -> QBinExpansion:
    """Coefficients in the bar basis: P = sum_k c_k bar(qbinom(x, k))."""
    E = expand(XPoly.coerce(P).bar())
    return QBinExpansion({k: c.bar() for k, c in E.items()}, Basis.BAR)


# -- membership ---------------------------------------------------------------


@dataclass(frozen=True)
class Membership:
    in_rq: bool
    in_plus_offset: dict = field(default_factory=dict)
    in_minus_offset: dict = field(default_factory=dict)

    @property
    def in_plus(self) -> bool:
        return self.in_plus_offset[0]

    @property
    def in_minus(self) -> bool:
        return self.in_minus_offset[0]


def membership(P, offsets: Iterable[int] = (0,)) -> Membership:
    """Classify P against R_q, R_q^{+,m} and R_q^{-,m} for each m in offsets.

    R_q membership reads the expansion coefficients.  R_q^{+,m} is decided by
    P([n]_q) in Z[q] for the deg+1 points n = m..m+deg, and R_q^{-,m} by
    P([n]_q) in Z[q^-1] for n = m-deg..m.
    """
    if isinstance(P, QBinExpansion):
        P = synthesize(P)
    P = XPoly.coerce(P)
    deg = P.degree or 0
    in_rq = all(c.is_integral() for c in expand(P).coeffs.values())
    plus, minus = {}, {}
    for m in offsets:
        plus[m] = all(P.evaluate(q_int(n)).in_zq() for n in range(m, m + deg + 1))
        minus[m] = all(P.evaluate(q_int(n)).in_zqinv() for n in range(m - deg, m + 1))
    return Membership(in_rq, plus, minus)


def in_rq_by_evaluation(P) -> bool:
    """P([n]_q) in Z[q, q^-1] for n = 0..deg, which already forces P in R_q."""
    P = XPoly.coerce(P)
    deg = P.degree or 0
    return all(P.evaluate(q_int(n)).is_integral() for n in range(deg + 1))


def classify_by_coefficients(P) -> dict[str, bool]:
    """R_q / R_q^+ / R_q^- membership read off basis coefficients alone."""
    P = XPoly.coerce(P)
    std = expand(P).coeffs.values()
    barc = expand_bar(P).coeffs.values()
    return {
        "in_rq": all(c.is_integral() for c in std),
        "in_plus": all(c.in_zq() for c in std),
        "in_minus": all(c.in_zqinv() for c in barc),
    }


# -- structure constants ------------------------------------------------------


@functools.lru_cache(maxsize=None)
def struct_const(i: int, j: int) -> dict[int, LaurentPoly]:
    """alpha_{i,j,k} = q^((k-i)(k-j)) [k choose i+j-k]_q [2k-i-j choose k-i]_q."""
    out = {}
    for k in range(max(i, j), i + j + 1):
        out[k] = (q_binomial(k, i + j - k) * q_binomial(2 * k - i - j, k - i)).mul_q((k - i) * (k - j))
    return out


def struct_const_by_factorials(i: int, j: int) -> dict[int, LaurentPoly]:
    out = {}
    for k in range(max(i, j), i + j + 1):
        r = q_factorial(k) / (q_factorial(k - i) * q_factorial(k - j) * q_factorial(i + j - k))
        out[k] = LaurentPoly.coerce(r).mul_q((k - i) * (k - j))
    return out


@functools.lru_cache(maxsize=None)
def bar_struct_const(i: int, j: int) -> dict[int, LaurentPoly]:
    """Constants for the bar basis: q^(i(i-k)+j(j-k)) [k]!/([k-i]![k-j]![i+j-k]!)."""
    out = {}
    for k in range(max(i, j), i + j + 1):
        t = q_binomial(k, i + j - k) * q_binomial(2 * k - i - j, k - i)
        out[k] = t.mul_q(i * (i - k) + j * (j - k))
    return out


def classical_struct_const(i: int, j: int) -> dict[int, int]:
    """k!/((k-i)!(k-j)!(i+j-k)!) for k in [max(i,j), i+j]."""
    return {k: binom(k, i + j - k) * binom(2 * k - i - j, k - i) for k in range(max(i, j), i + j + 1)}


def multiply(E1: QBinExpansion, E2: QBinExpansion) -> QBinExpansion:
    if E1.basis != E2.basis:
        raise BasisMismatch(f"{E1.basis.value} vs {E2.basis.value}")
    table = struct_const if E1.basis is Basis.STANDARD else bar_struct_const
    out: dict[int, RatFunc] = {}
    for i, a in E1.items():
        for j, b in E2.items():
            ab = a * b
            for k, c in table(i, j).items():
                term = ab * c
                out[k] = out[k] + term if k in out else term
    return QBinExpansion(out, E1.basis)


# -- shift ----------------------------------------------------------------------


def _shift_inner(m: int) -> XPoly:
    # S^m(x) = q^m x + [m]_q, valid for every integer m
    return XPoly((q_int(m), LaurentPoly.monomial(m)))


@functools.lru_cache(maxsize=None)
def shift_closed_form(k: int, m: int) -> dict[int, LaurentPoly]:
    """S^m qbinom(x,k) = sum_i q^((m-i)(k-i)) [m choose i]_q qbinom(x, k-i), m >= 0."""
    if m < 0:
        raise ValueError("closed form needs m >= 0")
    out = {}
    for i in range(0, min(m, k) + 1):
        out[k - i] = q_binomial(m, i).mul_q((m - i) * (k - i))
    return out


@functools.lru_cache(maxsize=None)
def shift_bar_closed_form(k: int, m: int) -> dict[int, LaurentPoly]:
    """S^-m bar(qbinom(x,k)) = sum_i q^((i-m)k) [m choose i]_q bar(qbinom(x, k-i)), m >= 0."""
    if m < 0:
        raise ValueError("closed form needs m >= 0")
    out = {}
    for i in range(0, min(m, k) + 1):
        out[k - i] = q_binomial(m, i).mul_q((i - m) * k)
    return out


def shift_by_substitution(E: QBinExpansion, m: int) -> QBinExpansion:
    P = synthesize(E).compose(_shift_inner(m))
    return expand(P) if E.basis is Basis.STANDARD else expand_bar(P)


def shift(E: QBinExpansion, m: int) -> QBinExpansion:
    """Apply S^m, where S(x) = qx + 1, keeping E's basis."""
    if m == 0 or E.is_zero():
        return E
    if E.basis is Basis.STANDARD and m > 0:
        out: dict[int, RatFunc] = {}
        for k, c in E.items():
            for kk, beta in shift_closed_form(k, m).items():
                term = c * beta
                out[kk] = out[kk] + term if kk in out else term
        return QBinExpansion(out)
    return shift_by_substitution(E, m)


# -- bar involution and change of basis ---------------------------------------


@functools.lru_cache(maxsize=None)
def bar_in_standard(k: int) -> dict[int, LaurentPoly]:
    """bar(qbinom(x,k)) = (-1)^k sum_i q^(C(k+1,2)+(k-1-i)(k-i)) [k-1 choose i]_q qbinom(x,k-i)."""
    if k == 0:
        return {0: LaurentPoly({0: 1})}
    sign = -1 if k % 2 else 1
    top = k * (k + 1) // 2
    return {k - i: q_binomial(k - 1, i).mul_q(top + (k - 1 - i) * (k - i)) * sign for i in range(k)}


@functools.lru_cache(maxsize=None)
def standard_in_bar(k: int) -> dict[int, LaurentPoly]:
    """qbinom(x,k) = (-1)^k sum_i q^(-C(k+1,2)+(i-k+1)k) [k-1 choose i]_q bar(qbinom(x,k-i))."""
    if k == 0:
        return {0: LaurentPoly({0: 1})}
    sign = -1 if k % 2 else 1
    top = k * (k + 1) // 2
    return {k - i: q_binomial(k - 1, i).mul_q(-top + (i - k + 1) * k) * sign for i in range(k)}


def _recombine(coeffs: Mapping[int, RatFunc], table, basis: Basis) -> QBinExpansion:
    out: dict[int, RatFunc] = {}
    for k, c in coeffs.items():
        for kk, g in table(k).items():
            term = c * g
            out[kk] = out[kk] + term if kk in out else term
    return QBinExpansion(out, basis)


def convert_basis(E: QBinExpansion) -> QBinExpansion:
    """Rewrite E in the other basis (standard <-> bar)."""
    if E.basis is Basis.STANDARD:
        return _recombine(E.coeffs, standard_in_bar, Basis.BAR)
    return _recombine(E.coeffs, bar_in_standard, Basis.STANDARD)


def bar(E: QBinExpansion) -> QBinExpansion:
    """Apply q -> q^-1, x -> -qx and re-expand in the same basis."""
    conj = {k: c.bar() for k, c in E.items()}
    if E.basis is Basis.STANDARD:
        return _recombine(conj, bar_in_standard, Basis.STANDARD)
    return _recombine(conj, standard_in_bar, Basis.BAR)


# -- dilation -------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def dilation_poly(m: int) -> XPoly:
    """D_m(x) = (((q-1)x + 1)^m - 1)/(q-1) = sum_{i=1}^m binom(m,i) (q-1)^(i-1) x^i."""
    if m < 1:
        raise ValueError("dilation needs m >= 1")
    qm1 = LaurentPoly({0: -1, 1: 1})
    return XPoly([0] + [qm1 ** (i - 1) * binom(m, i) for i in range(1, m + 1)])


def dilate(m: int, E: QBinExpansion) -> QBinExpansion:
    """D_m E, characterised by D_m P([n]_q) = P([mn]_q)."""
    if E.basis is not Basis.STANDARD:
        raise BasisMismatch("dilate works on the standard basis")
    if m == 1:
        return E
    return expand(synthesize(E).compose(dilation_poly(m)))


# -- q := 1 ---------------------------------------------------------------------


def specialize_q1(E: QBinExpansion) -> dict[int, int | Fraction]:
    """Set q := 1 in every coefficient, giving an expansion in binom(x, k)."""
    if E.basis is not Basis.STANDARD:
        raise BasisMismatch("specialize_q1 expects the standard basis")
    out = {}
    for k, c in E.items():
        try:
            v = c(1)
        except PoleError:
            raise PoleAtOne(f"coefficient of qbinom(x,{k}) has a pole at q = 1") from None
        if v:
            out[k] = v
    return out


def s_bar(E: QBinExpansion) -> QBinExpansion:
    """P -> S(bar(P)), the involution that commutes with both Frobenius maps."""
    return shift(bar(E), 1)
