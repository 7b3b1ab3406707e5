"""Ring homomorphisms from R_q^+ (and R_q) into exactly representable fields.

Three families exist: q goes to 0 (only on R_q^+), q goes to a primitive d-th
root of unity, or q goes to some kappa that is neither.  Target fields are
Q, F_p, and simple extensions Q[w]/Phi_d(w) or F_p[w]/f(w) with f an
irreducible factor of Phi_d over F_p.
"""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence, Union

from .errors import (
    DivisionByZeroInField,
    DomainViolation,
    InsufficientPrecision,
    InvalidSpec,
    NotPrime,
)
from .exactalg import LaurentPoly, RatFunc, cyclotomic
from .qnum import base_digits, binom, falling_binom, is_prime, q_binomial
from .rq_core import Basis, QBinExpansion, eval_at_qint, qbinom_poly

__all__ = [
    "FieldKind",
    "FieldSpec",
    "FieldElement",
    "PAdicDigits",
    "lucas_eval_binom",
    "HomCase",
    "HomSpec",
    "Homomorphism",
    "build_hom",
    "apply_hom",
    "std_eval",
    "eval_laurent",
    "eval_ratfunc",
    "multiplicative_order",
    "denominator_vanishes",
    "ROOT_OF_UNITY_BOUND",
]

ROOT_OF_UNITY_BOUND = 200
_SEARCH_LIMIT = 10**6


# -- coefficient arithmetic: p = 0 means Q -------------------------------------------


def _c(x, p: int):
    if p:
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise DivisionByZeroInField(f"{x} has a denominator divisible by {p}")
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    return int(x)


def _cinv(x, p: int):
    if not x:
        raise DivisionByZeroInField("division by zero")
    if p:
        return pow(x, -1, p)
    r = Fraction(1) / x
    return r.numerator if r.denominator == 1 else r


def _ptrim(a: list) -> tuple:
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return tuple(a[:n])


def _padd(a, b, p):
    n = max(len(a), len(b))
    return _ptrim([_c((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0), p) for i in range(n)])


def _pscale(a, c, p):
    return _ptrim([_c(x * c, p) for x in a])


def _pmul(a, b, p):
    if not a or not b:
        return ()
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return _ptrim([_c(x, p) for x in r])


def _pdivmod(a, b, p):
    a = list(a)
    inv = _cinv(b[-1], p)
    db = len(b) - 1
    quo = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = _c(a[i] * inv, p)
        if c:
            quo[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = _c(a[i - db + j] - c * b[j], p)
    return _ptrim(quo), _ptrim(a[:db] if db else [])


def _pinv_mod(a, m, p):
    # extended Euclid: find s with s*a = 1 mod m
    r0, r1 = m, a
    s0, s1 = (), (1,)
    while r1:
        quo, rem = _pdivmod(r0, r1, p)
        r0, r1 = r1, rem
        s0, s1 = s1, _padd(s0, _pscale(_pmul(quo, s1, p), -1, p), p)
    if len(r0) != 1:
        raise DivisionByZeroInField("element is not invertible")
    return _pdivmod(_pscale(s0, _cinv(r0[0], p), p), m, p)[1]


# -- fields ------------------------------------------------------------------------------


class FieldKind(str, Enum):
    RATIONALS = "rationals"
    PRIME = "prime"
    CYCLOTOMIC_Q = "cyclotomic_q"
    CYCLOTOMIC_FP = "cyclotomic_fp"


def multiplicative_order(a: int, d: int) -> int:
    """Least r >= 1 with a^r = 1 mod d (requires gcd(a, d) = 1)."""
    if d == 1:
        return 1
    r, x = 1, a % d
    while x != 1:
        x = x * a % d
        r += 1
        if r > d:
            raise ValueError(f"{a} is not a unit mod {d}")
    return r


@functools.lru_cache(maxsize=None)
def _irreducible_factor(p: int, d: int) -> tuple:
    """First monic degree-r divisor of Phi_d over F_p (r = ord_d(p)), checked irreducible."""
    r = multiplicative_order(p, d)
    if p**r > _SEARCH_LIMIT:
        raise InvalidSpec(f"F_{p}^{r} is too large for the trial-division search")
    phi = tuple(_c(x, p) for x in cyclotomic(d).phi.to_poly())
    for tail in itertools.product(range(p), repeat=r):
        f = tail + (1,)
        if _pdivmod(phi, f, p)[1]:
            continue
        if _has_low_degree_factor(f, p):
            continue
        return f
    raise InvalidSpec(f"no degree-{r} factor of Phi_{d} mod {p} found")


def _has_low_degree_factor(f: tuple, p: int) -> bool:
    deg = len(f) - 1
    for e in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=e):
            if not _pdivmod(f, tail + (1,), p)[1]:
                return True
    return False


@dataclass(frozen=True)
class FieldSpec:
    """A target field: Q, F_p, Q(w) with Phi_d(w) = 0, or F_p(w) with w a primitive d-th root."""

    kind: FieldKind
    p: int = 0
    d: int = 0
    modulus: tuple = field(default=(0, 1), compare=False)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(FieldKind.RATIONALS)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        return cls(FieldKind.PRIME, p=p)

    @classmethod
    def cyclotomic_q(cls, d: int) -> "FieldSpec":
        if d < 1:
            raise InvalidSpec("d must be positive")
        return cls(FieldKind.CYCLOTOMIC_Q, d=d, modulus=tuple(cyclotomic(d).phi.to_poly()))

    @classmethod
    def cyclotomic_fp(cls, p: int, d: int) -> "FieldSpec":
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if d < 1 or d % p == 0:
            raise InvalidSpec(f"need p not dividing d (p={p}, d={d})")
        return cls(FieldKind.CYCLOTOMIC_FP, p=p, d=d, modulus=_irreducible_factor(p, d))

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    def __call__(self, value) -> "FieldElement":
        return FieldElement.make(self, value)

    def zero(self) -> "FieldElement":
        return FieldElement(self, ())

    def one(self) -> "FieldElement":
        return self(1)

    def generator(self) -> "FieldElement":
        """The adjoined primitive d-th root of unity."""
        if self.kind in (FieldKind.RATIONALS, FieldKind.PRIME):
            raise InvalidSpec("only cyclotomic fields have a distinguished root of unity")
        return FieldElement.make(self, [0, 1])

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind.value}
        if self.p:
            out["p"] = self.p
        if self.d:
            out["d"] = self.d
        return out

    @classmethod
    def from_json(cls, data: dict) -> "FieldSpec":
        try:
            kind = FieldKind(data["kind"])
            if kind is FieldKind.RATIONALS:
                return cls.rationals()
            if kind is FieldKind.PRIME:
                return cls.prime(int(data["p"]))
            if kind is FieldKind.CYCLOTOMIC_Q:
                return cls.cyclotomic_q(int(data["d"]))
            return cls.cyclotomic_fp(int(data["p"]), int(data["d"]))
        except (KeyError, ValueError, TypeError) as exc:
            if isinstance(exc, (InvalidSpec, NotPrime)):
                raise
            raise InvalidSpec(f"bad field description {data!r}: {exc}") from None

    def __str__(self):
        if self.kind is FieldKind.RATIONALS:
            return "Q"
        if self.kind is FieldKind.PRIME:
            return f"F_{self.p}"
        if self.kind is FieldKind.CYCLOTOMIC_Q:
            return f"Q(zeta_{self.d})"
        return f"F_{self.p}(zeta_{self.d})"


Scalar = Union[int, Fraction]


class FieldElement:
    """Element of a FieldSpec, stored as its reduced coefficient vector in powers of w."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field_: FieldSpec, coeffs: tuple):
        self.field = field_
        self.coeffs = coeffs

    @classmethod
    def make(cls, field_: FieldSpec, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != field_:
                raise InvalidSpec(f"element of {value.field} used in {field_}")
            return value
        p = field_.p
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, (int, Fraction)):
            coeffs: Sequence = [value]
        else:
            coeffs = list(value)
        poly = _ptrim([_c(Fraction(x) if isinstance(x, str) else x, p) for x in coeffs])
        if len(poly) >= len(field_.modulus):
            poly = _pdivmod(poly, field_.modulus, p)[1]
        return cls(field_, poly)

    def _wrap(self, other) -> "FieldElement | None":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise InvalidSpec(f"mixing {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement.make(self.field, other)
        return None

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, _padd(self.coeffs, o.coeffs, self.field.p))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, _pscale(self.coeffs, -1, self.field.p))

    def __sub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        prod = _pmul(self.coeffs, o.coeffs, self.field.p)
        if len(prod) >= len(self.field.modulus):
            prod = _pdivmod(prod, self.field.modulus, self.field.p)[1]
        return FieldElement(self.field, prod)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not self.coeffs:
            raise DivisionByZeroInField(f"division by zero in {self.field}")
        return FieldElement(self.field, _pinv_mod(self.coeffs, self.field.modulus, self.field.p))

    def __truediv__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FieldElement.make(self.field, other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def is_root_of_unity(self, bound: int = ROOT_OF_UNITY_BOUND) -> bool:
        """True if x^e = 1 for some 1 <= e <= bound."""
        x = self
        for _ in range(bound):
            if x == 1:
                return True
            x = x * self
        return False

    def order_divides(self, d: int) -> bool:
        return self**d == 1

    def is_primitive_root(self, d: int) -> bool:
        if self ** d != 1:
            return False
        return all(self**e != 1 for e in range(1, d) if d % e == 0)

    def to_json(self):
        if self.field.degree == 1:
            return str(self.coeffs[0]) if self.coeffs else "0"
        return [str(c) for c in self.coeffs]

    def __str__(self):
        if not self.coeffs:
            return "0"
        if self.field.degree == 1:
            return str(self.coeffs[0])
        terms = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if e == 0 else ("w" if e == 1 else f"w^{e}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms)

    def __repr__(self):
        return f"FieldElement({self.field}, {self})"


def eval_laurent(f: LaurentPoly, x: FieldElement) -> FieldElement:
    """Substitute q := x; negative powers need x != 0."""
    F = x.field
    if f.is_zero():
        return F.zero()
    acc = F.zero()
    for c in reversed(f.coeffs):
        acc = acc * x + FieldElement.make(F, c)
    if f.low:
        acc = acc * x**f.low
    return acc


def _eval_poly(coeffs: tuple, x: FieldElement) -> FieldElement:
    acc = x.field.zero()
    for c in reversed(coeffs):
        acc = acc * x + FieldElement.make(x.field, c)
    return acc


def eval_ratfunc(f: RatFunc, x: FieldElement) -> FieldElement:
    den = _eval_poly(f.den, x)
    if not den:
        raise DivisionByZeroInField(f"denominator of {f} vanishes at {x}")
    return _eval_poly(f.num, x) / den


def denominator_vanishes(m: int, kappa: FieldElement) -> bool:
    """Does q^C(m,2) [m]_q! vanish at q := kappa?"""
    den = qbinom_poly(m).common_denominator()[1] if m else (1,)
    return not _eval_poly(den, kappa)


# -- p-adic digits ---------------------------------------------------------------------


@dataclass(frozen=True)
class PAdicDigits:
    """Truncation t_0 + t_1 p + ... + t_K p^K of a p-adic integer."""

    p: int
    digits: tuple

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")
        object.__setattr__(self, "digits", tuple(int(x) for x in self.digits))
        if not self.digits:
            raise InvalidSpec("at least one p-adic digit is needed")
        if any(not 0 <= x < self.p for x in self.digits):
            raise InvalidSpec(f"digits must lie in [0, {self.p - 1}]")

    @classmethod
    def from_int(cls, t: int, p: int, precision: int = 32) -> "PAdicDigits":
        """Digits of t mod p^precision (negative t gives the p-adic expansion)."""
        return cls(p, _digits_of(t % p**precision, p, precision))

    @property
    def precision(self) -> int:
        return len(self.digits)

    def value(self) -> int:
        """The residue of t modulo p^precision, as an integer."""
        return sum(x * self.p**e for e, x in enumerate(self.digits))

    def shifted(self, n0: int, d: int) -> "PAdicDigits":
        """(t - n0)/d in Z_p, kept to the same precision."""
        if d % self.p == 0:
            raise InvalidSpec(f"{d} is not a unit in Z_{self.p}")
        mod = self.p**self.precision
        v = (self.value() - n0) * pow(d, -1, mod) % mod
        return PAdicDigits(self.p, _digits_of(v, self.p, self.precision))

    def __str__(self):
        return "[" + ",".join(map(str, self.digits)) + "]_" + str(self.p)


def _digits_of(v: int, p: int, n: int) -> tuple:
    digs = base_digits(v, p)
    return tuple(digs + [0] * (n - len(digs)))


def lucas_eval_binom(t: PAdicDigits, m: int) -> int:
    """binom(t, m) mod p as the digitwise product of binomials."""
    if m < 0:
        return 0
    md = base_digits(m, t.p)
    if len(md) > len(t.digits):
        raise InsufficientPrecision(f"m={m} needs {len(md)} digits, only {len(t.digits)} given")
    result = 1
    for ti, mi in zip(t.digits, md):
        result = result * binom(ti, mi) % t.p
    return result


# -- homomorphisms ------------------------------------------------------------------------


class HomCase(str, Enum):
    Q_ZERO = "q0"
    ROOT_OF_UNITY = "root"
    GENERIC = "generic"


@dataclass(frozen=True)
class HomSpec:
    """Parameters picking out one homomorphism R_q^+ -> target."""

    case: HomCase
    target: FieldSpec
    k: int | None = None  # q0 case; None stands for infinity
    d: int = 1
    n0: int = 0
    t: object = None
    omega: FieldElement | None = None
    kappa: FieldElement | None = None

    @classmethod
    def q_zero(cls, target: FieldSpec, k: int | None = None) -> "HomSpec":
        return cls(HomCase.Q_ZERO, target, k=k)

    @classmethod
    def root_of_unity(cls, target: FieldSpec, d: int, n0: int, t, omega=None) -> "HomSpec":
        if target.characteristic:
            if isinstance(t, int):
                t = PAdicDigits.from_int(t, target.p)
            elif isinstance(t, (list, tuple)):
                t = PAdicDigits(target.p, tuple(t))
        else:
            t = target(t)
        if omega is not None:
            omega = target(omega)
        return cls(HomCase.ROOT_OF_UNITY, target, d=d, n0=n0, t=t, omega=omega)

    @classmethod
    def generic(cls, target: FieldSpec, kappa, t) -> "HomSpec":
        return cls(HomCase.GENERIC, target, kappa=target(kappa), t=target(t))

    def to_json(self) -> dict:
        params: dict
        if self.case is HomCase.Q_ZERO:
            params = {"k": "inf" if self.k is None else self.k}
        elif self.case is HomCase.ROOT_OF_UNITY:
            t = list(self.t.digits) if isinstance(self.t, PAdicDigits) else self.t.to_json()
            params = {"d": self.d, "n0": self.n0, "t": t}
            if self.omega is not None:
                params["omega"] = self.omega.to_json()
        else:
            params = {"kappa": self.kappa.to_json(), "t": self.t.to_json()}
        return {"case": self.case.value, "target": self.target.to_json(), "params": params}

    @classmethod
    def from_json(cls, data) -> "HomSpec":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise InvalidSpec(f"HomSpec is not valid JSON: {exc}") from None
        try:
            case = HomCase(data["case"])
            target = FieldSpec.from_json(data["target"])
            params = data.get("params", {})
            if case is HomCase.Q_ZERO:
                k = params.get("k", "inf")
                return cls.q_zero(target, None if k in ("inf", None) else int(k))
            if case is HomCase.ROOT_OF_UNITY:
                t = params["t"]
                if isinstance(t, str) and target.characteristic:
                    t = int(t)
                return cls.root_of_unity(target, int(params["d"]), int(params.get("n0", 0)), t, params.get("omega"))
            return cls.generic(target, params["kappa"], params["t"])
        except (KeyError, TypeError) as exc:
            raise InvalidSpec(f"incomplete HomSpec: {exc}") from None


class Homomorphism:
    """An evaluation map built from a validated HomSpec."""

    def __init__(self, spec: HomSpec, q_image: FieldElement):
        self.spec = spec
        self.field = spec.target
        self.q_image = q_image
        self._cache: dict[int, FieldElement] = {}

    def basis_value(self, m: int) -> FieldElement:
        """Image of qbinom(x, m)."""
        if m not in self._cache:
            self._cache[m] = self._basis_value(m)
        return self._cache[m]

    def _basis_value(self, m: int) -> FieldElement:
        s, F = self.spec, self.field
        if s.case is HomCase.Q_ZERO:
            return F.one() if s.k is None or m <= s.k else F.zero()
        if s.case is HomCase.ROOT_OF_UNITY:
            m1, m0 = divmod(m, s.d)
            head = eval_laurent(q_binomial(s.n0, m0), self.q_image)
            if isinstance(s.t, PAdicDigits):
                tail = F(lucas_eval_binom(s.t.shifted(s.n0, s.d), m1))
            else:
                tail = falling_binom((s.t - s.n0) / s.d, m1)
                tail = F(tail) if not isinstance(tail, FieldElement) else tail
            return tail * head
        # generic: substitute q := kappa into qbinom_poly(m), then x := t
        poly = qbinom_poly(m)
        acc = F.zero()
        for c in reversed(poly.coeffs):
            acc = acc * s.t + eval_ratfunc(c, self.q_image)
        return acc

    def coefficient(self, c: RatFunc) -> FieldElement:
        f = c.to_laurent()
        if f is None:
            raise DomainViolation(f"coefficient {c} is not a Laurent polynomial")
        if self.spec.case is HomCase.Q_ZERO:
            if f.valuation < 0:
                raise DomainViolation("negative powers of q cannot be sent to 0")
            return self.field(f.coefficient(0))
        return eval_laurent(f, self.q_image)

    def __call__(self, E: QBinExpansion) -> FieldElement:
        return apply_hom(self, E)

    def __repr__(self):
        return f"Homomorphism({json.dumps(self.spec.to_json())})"


def build_hom(spec: HomSpec) -> Homomorphism:
    """Check the parameters of spec and return the corresponding map."""
    F = spec.target
    if spec.case is HomCase.Q_ZERO:
        if spec.k is not None and spec.k < 0:
            raise InvalidSpec("k must be a natural number or infinity")
        return Homomorphism(spec, F.zero())
    if spec.case is HomCase.ROOT_OF_UNITY:
        d, n0 = spec.d, spec.n0
        if d < 1:
            raise InvalidSpec("d must be positive")
        if not 0 <= n0 < d:
            raise InvalidSpec(f"n0={n0} is outside [0, {d - 1}]")
        if F.characteristic and d % F.p == 0:
            raise InvalidSpec(f"no primitive {d}-th roots of unity in characteristic {F.p}")
        omega = spec.omega if spec.omega is not None else _default_root(F, d)
        if not omega.is_primitive_root(d):
            raise InvalidSpec(f"{omega} is not a primitive {d}-th root of unity in {F}")
        if F.characteristic and not isinstance(spec.t, PAdicDigits):
            raise InvalidSpec("in characteristic p the parameter t must be a p-adic integer")
        if not F.characteristic and isinstance(spec.t, PAdicDigits):
            raise InvalidSpec("p-adic t only makes sense in characteristic p")
        if isinstance(spec.t, PAdicDigits) and spec.t.p != F.p:
            raise InvalidSpec("p-adic t must use the characteristic of the target")
        return Homomorphism(spec, omega)
    kappa = spec.kappa
    if F.characteristic:
        raise InvalidSpec("every nonzero element of a finite field is a root of unity")
    if not kappa:
        raise InvalidSpec("kappa must be nonzero")
    if F.degree == 1:
        if kappa.coeffs[0] in (1, -1):
            raise InvalidSpec("kappa must not be a root of unity")
    elif kappa.is_root_of_unity(ROOT_OF_UNITY_BOUND):
        raise InvalidSpec(f"kappa={kappa} is a root of unity")
    return Homomorphism(spec, kappa)


def _default_root(F: FieldSpec, d: int) -> FieldElement:
    if F.kind in (FieldKind.CYCLOTOMIC_Q, FieldKind.CYCLOTOMIC_FP) and F.d == d:
        return F.generator()
    if d == 1:
        return F.one()
    if d == 2 and F.p != 2:
        return F(-1)
    if F.kind is FieldKind.PRIME:
        for a in range(2, F.p):
            w = F(a)
            if w.is_primitive_root(d):
                return w
    raise InvalidSpec(f"give omega explicitly: no default primitive {d}-th root in {F}")


def apply_hom(h: Homomorphism, E: QBinExpansion) -> FieldElement:
    """sum_m h(c_m) h(qbinom(x, m))."""
    if E.basis is not Basis.STANDARD:
        raise DomainViolation("apply_hom expects a standard-basis expansion")
    total = h.field.zero()
    for m, c in E.items():
        total = total + h.coefficient(c) * h.basis_value(m)
    return total


def std_eval(n: int, kappa, E: QBinExpansion, field_: FieldSpec | None = None) -> FieldElement:
    """Evaluate E at x := [n]_q and then q := kappa."""
    if isinstance(kappa, FieldElement):
        F = kappa.field
    else:
        F = field_ or FieldSpec.rationals()
        kappa = F(kappa)
    value = eval_at_qint(E, n)
    lp = value.to_laurent()
    if lp is not None:
        if lp and lp.valuation < 0 and not kappa:
            raise DivisionByZeroInField("negative powers of q at q = 0")
        return eval_laurent(lp, kappa)
    return eval_ratfunc(value, kappa)
