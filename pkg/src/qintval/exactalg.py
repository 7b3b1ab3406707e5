"""Exact arithmetic in one variable q.

``LaurentPoly`` holds elements of Q[q, q^-1], ``RatFunc`` holds reduced
fractions in Q(q), and ``cyclotomic``/``reduce_mod_cyclotomic`` give the
quotients Q[q]/Phi_d(q).  Coefficients are Python ints or ``Fraction``;
nothing is ever rounded.

Dense polynomials in q are passed around internally as tuples of
coefficients, lowest degree first, with no trailing zeros (the zero
polynomial is the empty tuple).
"""

from __future__ import annotations

import ast
import functools
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Mapping, Union

from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dup_gcd

from .errors import PoleError, ZeroDenominator

Number = Union[int, Fraction]

__all__ = [
    "LaurentPoly",
    "RatFunc",
    "CyclotomicModulus",
    "cyclotomic",
    "bar_laurent",
    "reduce_mod_cyclotomic",
    "ratfunc_normalize",
    "parse_expr",
    "parse_laurent",
    "parse_ratfunc",
    "format_laurent",
    "divisors",
]


def _num(c) -> Number:
    """Canonical exact scalar: int when integral, else Fraction."""
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return int(c)
    if isinstance(c, Rational):
        return _num(Fraction(c.numerator, c.denominator))
    raise TypeError(f"not an exact rational: {c!r}")


def _div(c: Number, d: Number) -> Number:
    if d == 1:
        return c
    if d == -1:
        return -c
    return _num(Fraction(c) / d)


# -- dense polynomial helpers -------------------------------------------------


def _trim(c) -> tuple:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


def _padd(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, y in enumerate(b):
        r[i] += y
    return _trim(r)


def _pneg(a: tuple) -> tuple:
    return tuple(-c for c in a)


def _psub(a: tuple, b: tuple) -> tuple:
    return _padd(a, _pneg(b))


def _pmul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    if len(a) == 1:
        return _pscale(b, a[0])
    if len(b) == 1:
        return _pscale(a, b[0])
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return tuple(r)


def _pscale(a: tuple, c) -> tuple:
    if not c:
        return ()
    if c == 1:
        return a
    return tuple(x * c for x in a)


def _pdivmod(a: tuple, b: tuple) -> tuple[tuple, tuple]:
    if not b:
        raise ZeroDenominator("polynomial division by zero")
    db = len(b) - 1
    if len(a) <= db:
        return (), a
    lb = b[-1]
    r = list(a)
    quo = [0] * (len(a) - db)
    for s in range(len(a) - 1 - db, -1, -1):
        c = r[s + db]
        if c:
            c = _div(c, lb)
            quo[s] = c
            for t in range(db):
                if b[t]:
                    r[s + t] -= c * b[t]
        r[s + db] = 0
    return _trim(quo), _trim(r[:db])


def _pexquo(a: tuple, b: tuple) -> tuple:
    quo, rem = _pdivmod(a, b)
    if rem:
        raise ArithmeticError("inexact polynomial division")
    return quo


def _val(a: tuple) -> int:
    for i, c in enumerate(a):
        if c:
            return i
    return len(a)


def _monic(a: tuple) -> tuple:
    lc = a[-1]
    if lc == 1:
        return a
    return tuple(_div(c, lc) for c in a)


def _primitive_int(a: tuple) -> list[int]:
    den = 1
    for c in a:
        if type(c) is not int:
            den = den * c.denominator // _gcd_int(den, c.denominator)
    if den == 1:
        return list(a)
    return [int(c * den) for c in a]


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _pgcd(a: tuple, b: tuple) -> tuple:
    """Monic gcd over Q (the gcd of two zeros is the zero tuple)."""
    if not a:
        return _monic(b) if b else ()
    if not b:
        return _monic(a)
    if len(a) == 1 or len(b) == 1:
        return (1,)
    va, vb = _val(a), _val(b)
    v = min(va, vb)
    a, b = a[va:], b[vb:]
    if len(a) == 1 or len(b) == 1:
        g = (1,)
    elif a == b:
        g = _monic(a)
    else:
        ia = [ZZ(c) for c in reversed(_primitive_int(a))]
        ib = [ZZ(c) for c in reversed(_primitive_int(b))]
        g = _monic(tuple(int(c) for c in reversed(dup_gcd(ia, ib, ZZ))))
    return (0,) * v + g


def _peval(a: tuple, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _coerce_poly(p) -> tuple:
    if isinstance(p, (tuple, list)):
        return _trim([_num(c) for c in p])
    if isinstance(p, LaurentPoly):
        if p.low < 0:
            raise ValueError("negative exponents in a polynomial argument")
        return (0,) * p.low + p.coeffs if p.coeffs else ()
    return _trim([_num(p)])


# -- Laurent polynomials ------------------------------------------------------


class LaurentPoly:
    """Finitely supported map from integer exponents of q to exact rationals.

    Stored densely as ``(low, coeffs)`` meaning ``sum coeffs[i] q^(low+i)``;
    the zero polynomial has ``low == 0`` and ``coeffs == ()``.
    """

    __slots__ = ("low", "coeffs", "_hash")

    def __init__(self, terms: Union[Mapping[int, Number], Number, None] = None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, Mapping):
            terms = {0: terms}
        items = {int(e): _num(c) for e, c in terms.items() if c}
        if not items:
            self._set(0, ())
            return
        lo, hi = min(items), max(items)
        self._set(lo, tuple(items.get(e, 0) for e in range(lo, hi + 1)))

    def _set(self, low: int, coeffs: tuple) -> None:
        self.low = low
        self.coeffs = coeffs
        self._hash = None

    @classmethod
    def from_coeffs(cls, coeffs, low: int = 0) -> "LaurentPoly":
        c = [_num(x) for x in coeffs]
        start = _val(c)
        c = _trim(c[start:])
        obj = object.__new__(cls)
        obj._set(low + start if c else 0, c)
        return obj

    @classmethod
    def _raw(cls, low: int, coeffs: tuple) -> "LaurentPoly":
        # caller guarantees coeffs trimmed at both ends
        obj = object.__new__(cls)
        obj._set(low if coeffs else 0, coeffs)
        return obj

    @classmethod
    def monomial(cls, e: int = 1, c: Number = 1) -> "LaurentPoly":
        return cls({e: c})

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, RatFunc):
            f = x.to_laurent()
            if f is None:
                raise ValueError(f"{x} is not a Laurent polynomial")
            return f
        return cls({0: x})

    # -- structure

    @property
    def terms(self) -> dict[int, Number]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    def items(self):
        return sorted(self.terms.items())

    def coefficient(self, e: int) -> Number:
        i = e - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def valuation(self) -> int:
        """Lowest exponent; raises on the zero polynomial."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no valuation")
        return self.low

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return self.low + len(self.coeffs) - 1

    def is_integral(self) -> bool:
        """True if every coefficient is an integer (membership in Z[q, q^-1])."""
        return all(type(c) is int for c in self.coeffs)

    def is_polynomial(self) -> bool:
        return not self.coeffs or self.low >= 0

    def in_zq(self) -> bool:
        return self.is_integral() and self.is_polynomial()

    def in_zqinv(self) -> bool:
        return self.is_integral() and (not self.coeffs or self.degree <= 0)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def to_poly(self) -> tuple:
        """Dense coefficient tuple; requires no negative exponents."""
        return _coerce_poly(self)

    # -- arithmetic

    def __add__(self, other):
        o = _as_laurent(other)
        if o is None:
            return NotImplemented
        if not o.coeffs:
            return self
        if not self.coeffs:
            return o
        lo = min(self.low, o.low)
        a = (0,) * (self.low - lo) + self.coeffs
        b = (0,) * (o.low - lo) + o.coeffs
        return LaurentPoly.from_coeffs(_padd(a, b), lo)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.low, _pneg(self.coeffs))

    def __pos__(self) -> "LaurentPoly":
        return self

    def __sub__(self, other):
        o = _as_laurent(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _as_laurent(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _as_laurent(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return LaurentPoly._raw(0, ())
        return LaurentPoly._raw(self.low + o.low, _pmul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDenominator("division by zero")
            return LaurentPoly._raw(self.low, tuple(_div(c, other) for c in self.coeffs))
        o = _as_laurent(other)
        if o is None:
            return NotImplemented
        return RatFunc.coerce(self) / RatFunc.coerce(o)

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if len(self.coeffs) != 1:
                raise ValueError("negative power of a non-monomial")
            return LaurentPoly._raw(self.low * n, (_num(Fraction(1) / self.coeffs[0] ** -n),))
        result = LaurentPoly._raw(0, (1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def mul_q(self, e: int) -> "LaurentPoly":
        """Multiply by q^e."""
        return LaurentPoly._raw(self.low + e if self.coeffs else 0, self.coeffs)

    def bar(self) -> "LaurentPoly":
        """The involution q -> q^-1."""
        if not self.coeffs:
            return self
        return LaurentPoly._raw(-self.degree, self.coeffs[::-1])

    def __call__(self, value):
        """Substitute q := value (any object supporting ring operations)."""
        if not self.coeffs:
            return 0
        if isinstance(value, (int, Fraction)):
            value = Fraction(value)
            if self.low < 0 and not value:
                raise PoleError("negative power of q evaluated at q = 0")
        acc = _peval(self.coeffs, value)
        if self.low > 0:
            acc = acc * value**self.low
        elif self.low < 0:
            acc = acc / value ** (-self.low)
        return _num(acc) if isinstance(acc, (int, Fraction)) else acc

    # -- comparison

    def __eq__(self, other):
        o = _as_laurent(other)
        if o is None:
            if isinstance(other, RatFunc):
                return other == self
            return NotImplemented
        return self.low == o.low and self.coeffs == o.coeffs

    def __hash__(self):
        if self._hash is None:
            if not self.coeffs:
                self._hash = hash(0)
            elif self.low == 0 and len(self.coeffs) == 1:
                self._hash = hash(self.coeffs[0])
            else:
                self._hash = hash((self.low, self.coeffs))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return f"LaurentPoly('{format_laurent(self)}')"


def _as_laurent(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly._raw(0, (_num(x),)) if x else LaurentPoly._raw(0, ())
    return None


def _fmt_term(c: Number, e: int) -> str:
    mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
    if not mono:
        return str(c)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def format_laurent(f: LaurentPoly) -> str:
    """Canonical text: ascending exponents, ``c*q^e`` terms, ``1*`` elided."""
    parts = [_fmt_term(c, e) for e, c in f.items()]
    if not parts:
        return "0"
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def bar_laurent(f: LaurentPoly) -> LaurentPoly:
    return LaurentPoly.coerce(f).bar()


# -- rational functions -------------------------------------------------------

_ONE = (1,)


class RatFunc:
    """Reduced fraction num/den of polynomials in q over Q.

    The denominator is monic and coprime to the numerator, so equality is
    equality of the stored tuples.  Zero is ``0/1``.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        r = ratfunc_normalize(num, den)
        self.num, self.den, self._hash = r.num, r.den, None

    @classmethod
    def _raw(cls, num: tuple, den: tuple) -> "RatFunc":
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        r = _as_ratfunc(x)
        if r is None:
            raise TypeError(f"cannot interpret {x!r} as a rational function")
        return r

    @classmethod
    def q(cls) -> "RatFunc":
        return cls._raw((0, 1), _ONE)

    # -- predicates and conversions

    def is_zero(self) -> bool:
        return not self.num

    def is_laurent(self) -> bool:
        d = self.den
        return len(d) == 1 or _val(d) == len(d) - 1

    def to_laurent(self) -> LaurentPoly | None:
        """The Laurent polynomial equal to self, or None if there is none."""
        if not self.is_laurent():
            return None
        return LaurentPoly.from_coeffs(self.num, -(len(self.den) - 1))

    def is_integral(self) -> bool:
        """Membership in Z[q, q^-1]."""
        return self.is_laurent() and all(type(c) is int for c in self.num)

    def in_zq(self) -> bool:
        return self.den == _ONE and all(type(c) is int for c in self.num)

    def in_zqinv(self) -> bool:
        f = self.to_laurent()
        return f is not None and f.in_zqinv()

    # -- arithmetic

    def __add__(self, other):
        o = _as_ratfunc(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, o.num, o.den
        if not a:
            return o
        if not c:
            return self
        if b == d:
            if b == _ONE:
                return RatFunc._raw(_padd(a, c), _ONE)
            return ratfunc_normalize(_padd(a, c), b)
        if b == _ONE:
            return RatFunc._raw(_padd(_pmul(a, d), c), d)
        if d == _ONE:
            return RatFunc._raw(_padd(a, _pmul(c, b)), b)
        g = _pgcd(b, d)
        if g == _ONE:
            return RatFunc._raw(_padd(_pmul(a, d), _pmul(c, b)), _pmul(b, d))
        bg, dg = _pexquo(b, g), _pexquo(d, g)
        num = _padd(_pmul(a, dg), _pmul(c, bg))
        if not num:
            return RatFunc._raw((), _ONE)
        h = _pgcd(num, g)
        den = _pmul(b, dg)
        if h != _ONE:
            num, den = _pexquo(num, h), _pexquo(den, h)
        return RatFunc._raw(num, den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc._raw(_pneg(self.num), self.den)

    def __pos__(self) -> "RatFunc":
        return self

    def __sub__(self, other):
        o = _as_ratfunc(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _as_ratfunc(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _as_ratfunc(other)
        if o is None:
            return NotImplemented
        a, b, c, d = self.num, self.den, o.num, o.den
        if not a or not c:
            return RatFunc._raw((), _ONE)
        if b == _ONE and d == _ONE:
            return RatFunc._raw(_pmul(a, c), _ONE)
        g1 = _pgcd(a, d) if d != _ONE else _ONE
        g2 = _pgcd(c, b) if b != _ONE else _ONE
        if g1 != _ONE:
            a, d = _pexquo(a, g1), _pexquo(d, g1)
        if g2 != _ONE:
            c, b = _pexquo(c, g2), _pexquo(b, g2)
        return RatFunc._raw(_pmul(a, c), _pmul(b, d))

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if not self.num:
            raise ZeroDenominator("inverse of zero")
        lc = self.num[-1]
        if lc == 1:
            return RatFunc._raw(self.den, self.num)
        return RatFunc._raw(tuple(_div(c, lc) for c in self.den), tuple(_div(c, lc) for c in self.num))

    def __truediv__(self, other):
        o = _as_ratfunc(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _as_ratfunc(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> "RatFunc":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        num = den = _ONE
        bn, bd = self.num, self.den
        while n:
            if n & 1:
                num, den = _pmul(num, bn), _pmul(den, bd)
            bn, bd = _pmul(bn, bn), _pmul(bd, bd)
            n >>= 1
        # powers of coprime polynomials stay coprime
        return RatFunc._raw(num, den)

    def bar(self) -> "RatFunc":
        """The field involution q -> q^-1."""
        if not self.num:
            return self
        n = LaurentPoly.from_coeffs(self.num).bar()
        d = LaurentPoly.from_coeffs(self.den).bar()
        return ratfunc_normalize(n, d)

    def __call__(self, value):
        """Substitute q := value; raises PoleError where the denominator vanishes."""
        dv = _peval(self.den, value)
        if dv == 0:
            raise PoleError(f"{self} has a pole at q = {value}")
        nv = _peval(self.num, value)
        if isinstance(nv, (int, Fraction)) and isinstance(dv, (int, Fraction)):
            return _num(Fraction(nv) / dv)
        return nv / dv

    # -- comparison and text

    def __eq__(self, other):
        o = _as_ratfunc(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self._hash is None:
            f = self.to_laurent()
            self._hash = hash(f) if f is not None else hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    def __str__(self):
        f = self.to_laurent()
        if f is not None:
            return format_laurent(f)
        return f"({format_laurent(LaurentPoly.from_coeffs(self.num))})/({format_laurent(LaurentPoly.from_coeffs(self.den))})"

    def __repr__(self):
        return f"RatFunc('{self}')"


def _as_ratfunc(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, LaurentPoly):
        if not x.coeffs:
            return RatFunc._raw((), _ONE)
        if x.low >= 0:
            return RatFunc._raw((0,) * x.low + x.coeffs, _ONE)
        return RatFunc._raw(x.coeffs, (0,) * (-x.low) + _ONE)
    if isinstance(x, (int, Fraction)):
        return RatFunc._raw((_num(x),) if x else (), _ONE)
    return None


def ratfunc_normalize(num, den) -> RatFunc:
    """Reduce num/den to canonical form (coprime, monic denominator).

    Either argument may be a dense coefficient tuple, a LaurentPoly or a
    rational number.  Raises ZeroDenominator when den is zero.
    """
    a = b = 0
    if isinstance(num, LaurentPoly) and num.coeffs:
        a, num = num.low, num.mul_q(-num.low)
    if isinstance(den, LaurentPoly) and den.coeffs:
        b, den = den.low, den.mul_q(-den.low)
    n = _coerce_poly(num)
    d = _coerce_poly(den)
    if a > b:
        n = (0,) * (a - b) + n if n else n
    elif b > a:
        d = (0,) * (b - a) + d if d else d
    return _normalize_polys(n, d)


def _normalize_polys(n: tuple, d: tuple) -> RatFunc:
    if not d:
        raise ZeroDenominator("zero denominator")
    if not n:
        return RatFunc._raw((), _ONE)
    g = _pgcd(n, d)
    if g != _ONE:
        n, d = _pexquo(n, g), _pexquo(d, g)
    lc = d[-1]
    if lc != 1:
        n = tuple(_div(c, lc) for c in n)
        d = tuple(_div(c, lc) for c in d)
    return RatFunc._raw(n, d)


# -- cyclotomic polynomials ---------------------------------------------------


def divisors(n: int) -> list[int]:
    return [e for e in range(1, n + 1) if n % e == 0]


@dataclass(frozen=True)
class CyclotomicModulus:
    d: int
    phi: LaurentPoly

    @property
    def degree(self) -> int:
        return self.phi.degree


@functools.lru_cache(maxsize=None)
def cyclotomic(d: int) -> CyclotomicModulus:
    """Phi_d(q), by exact division of q^d - 1 by the Phi_e with e | d, e < d."""
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"cyclotomic index must be a positive integer, got {d!r}")
    poly = (-1,) + (0,) * (d - 1) + (1,)
    for e in divisors(d)[:-1]:
        poly = _pexquo(poly, cyclotomic(e).phi.coeffs)
    return CyclotomicModulus(d, LaurentPoly.from_coeffs(poly))


def _modulus(m) -> CyclotomicModulus:
    return m if isinstance(m, CyclotomicModulus) else cyclotomic(m)


def reduce_mod_cyclotomic(f, m) -> LaurentPoly:
    """Canonical representative of f in Q[q]/Phi_d(q), of degree < deg Phi_d.

    ``m`` is a CyclotomicModulus or the integer d.  Negative powers of q are
    first cleared with q^d = 1.
    """
    mod = _modulus(m)
    f = LaurentPoly.coerce(f)
    if not f.coeffs:
        return f
    if f.low < 0:
        f = f.mul_q(mod.d * (-(f.low // mod.d)))
    _, rem = _pdivmod((0,) * f.low + f.coeffs, mod.phi.coeffs)
    return LaurentPoly.from_coeffs(rem)


# -- parsing ------------------------------------------------------------------


def parse_expr(text: str, symbols: Mapping[str, object]):
    """Evaluate an arithmetic expression over the given symbols.

    Accepts integers, ``+ - * /``, ``^`` or ``**`` with integer exponents and
    parentheses.  Rational constants are kept exact.
    """
    src = text.replace("^", "**").replace("−", "-")
    try:
        tree = ast.parse(src.strip(), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse {text!r}: {exc.msg}") from None
    return _walk(tree.body, symbols, text)


def _walk(node, symbols, text):
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return node.value
    if isinstance(node, ast.Name):
        if node.id in symbols:
            return symbols[node.id]
        raise ValueError(f"unknown symbol {node.id!r} in {text!r}")
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _walk(node.operand, symbols, text)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        left = _walk(node.left, symbols, text)
        right = _walk(node.right, symbols, text)
        op = node.op
        if isinstance(op, ast.Add):
            return left + right
        if isinstance(op, ast.Sub):
            return left - right
        if isinstance(op, ast.Mult):
            return left * right
        if isinstance(op, ast.Div):
            if isinstance(left, (int, Fraction)) and isinstance(right, (int, Fraction)):
                if not right:
                    raise ZeroDenominator(f"division by zero in {text!r}")
                return _num(Fraction(left) / right)
            return left / right
        if isinstance(op, ast.Pow):
            if not isinstance(right, int):
                raise ValueError(f"exponent must be an integer in {text!r}")
            if isinstance(left, (int, Fraction)):
                return _num(Fraction(left) ** right)
            return left**right
    raise ValueError(f"unsupported syntax in {text!r}")


def parse_ratfunc(text: str) -> RatFunc:
    return RatFunc.coerce(parse_expr(text, {"q": RatFunc.q()}))


def parse_laurent(text: str) -> LaurentPoly:
    r = parse_ratfunc(text)
    f = r.to_laurent()
    if f is None:
        raise ValueError(f"{text!r} is not a Laurent polynomial")
    return f
