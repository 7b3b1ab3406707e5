"""Classical Frobenius on R (x) F_p and quantum Frobenius R -> R_q / Phi_d(q)."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping

from .errors import BasisMismatch, NotPrime
from .exactalg import LaurentPoly, cyclotomic, parse_laurent, reduce_mod_cyclotomic
from .qnum import binom, is_prime
from .rq_core import Basis, QBinExpansion, classical_struct_const, s_bar, specialize_q1, struct_const

__all__ = [
    "ClassicalExpansionModP",
    "ExpansionModPhiD",
    "frob_p",
    "frob_p_inverse",
    "qfrob_d",
    "qfrob_d_inverse",
    "reduce_expansion_mod_phi",
    "classical_s_bar_mod_p",
    "sign_lemma_holds",
]


def _freeze(coeffs: dict) -> tuple:
    return tuple(sorted(coeffs.items()))


@dataclass(frozen=True)
class ClassicalExpansionModP:
    """sum_k c_k binom(x, k) with residues c_k in F_p; zero residues are dropped."""

    p: int
    terms: tuple

    def __init__(self, p: int, coeffs: Mapping[int, int] | None = None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        clean = {int(k): int(c) % p for k, c in (coeffs or {}).items()}
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "terms", _freeze({k: c for k, c in clean.items() if c}))

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self.terms)

    def __add__(self, other: "ClassicalExpansionModP") -> "ClassicalExpansionModP":
        self._check(other)
        out = self.coeffs
        for k, c in other.terms:
            out[k] = out.get(k, 0) + c
        return ClassicalExpansionModP(self.p, out)

    def __mul__(self, other: "ClassicalExpansionModP") -> "ClassicalExpansionModP":
        # classical structure constants, reduced mod p
        self._check(other)
        out: dict[int, int] = {}
        for i, a in self.terms:
            for j, b in other.terms:
                for k, c in classical_struct_const(i, j).items():
                    out[k] = (out.get(k, 0) + a * b * c) % self.p
        return ClassicalExpansionModP(self.p, out)

    def _check(self, other):
        if self.p != other.p:
            raise BasisMismatch(f"mod {self.p} vs mod {other.p}")

    def to_json(self) -> dict:
        return {"basis": "classical", "mod": f"p:{self.p}", "coeffs": {str(k): str(c) for k, c in self.terms}}


@dataclass(frozen=True)
class ExpansionModPhiD:
    """Expansion with coefficients in Z[q]/Phi_d(q), stored as canonical reduced representatives.

    ``classical`` says whether index k refers to binom(x, k) (the source side of
    the quantum Frobenius) or to qbinom(x, k).
    """

    d: int
    terms: tuple
    classical: bool = False

    def __init__(self, d: int, coeffs: Mapping[int, object] | None = None, classical: bool = False):
        if d < 1:
            raise ValueError("d must be positive")
        phi = cyclotomic(d)
        clean = {}
        for k, c in (coeffs or {}).items():
            r = reduce_mod_cyclotomic(LaurentPoly.coerce(c), phi)
            if r:
                clean[int(k)] = r
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "terms", _freeze(clean))
        object.__setattr__(self, "classical", classical)

    @property
    def coeffs(self) -> dict[int, LaurentPoly]:
        return dict(self.terms)

    def __add__(self, other: "ExpansionModPhiD") -> "ExpansionModPhiD":
        self._check(other)
        out = self.coeffs
        for k, c in other.terms:
            out[k] = out.get(k, LaurentPoly()) + c
        return ExpansionModPhiD(self.d, out, self.classical)

    def __mul__(self, other: "ExpansionModPhiD") -> "ExpansionModPhiD":
        self._check(other)
        table = classical_struct_const if self.classical else struct_const
        out: dict[int, LaurentPoly] = {}
        for i, a in self.terms:
            for j, b in other.terms:
                for k, c in table(i, j).items():
                    out[k] = out.get(k, LaurentPoly()) + a * b * c
        return ExpansionModPhiD(self.d, out, self.classical)

    def _check(self, other):
        if self.d != other.d or self.classical != other.classical:
            raise BasisMismatch("expansions live in different quotients or bases")

    def to_json(self) -> dict:
        return {
            "basis": "classical" if self.classical else "standard",
            "mod": f"phi:{self.d}",
            "coeffs": {str(k): str(c) for k, c in self.terms},
        }

    @classmethod
    def from_json(cls, data) -> "ExpansionModPhiD":
        if isinstance(data, str):
            data = json.loads(data)
        kind, _, d = data["mod"].partition(":")
        if kind != "phi":
            raise ValueError("expected a 'phi:<d>' modulus")
        coeffs = {int(k): parse_laurent(v) for k, v in data.get("coeffs", {}).items()}
        return cls(int(d), coeffs, data.get("basis") == "classical")


def frob_p(E: ClassicalExpansionModP) -> ClassicalExpansionModP:
    """binom(x, k) -> binom(x, pk), extended F_p-linearly."""
    return ClassicalExpansionModP(E.p, {E.p * k: c for k, c in E.terms})


def frob_p_inverse(E: ClassicalExpansionModP) -> ClassicalExpansionModP:
    """binom(x, k) -> binom(x, k/p) when p | k, else 0."""
    return ClassicalExpansionModP(E.p, {k // E.p: c for k, c in E.terms if k % E.p == 0})


def qfrob_d(E: Mapping[int, int], d: int) -> ExpansionModPhiD:
    """binom(x, k) -> qbinom(x, dk) with integer coefficients pushed into Z[q]/Phi_d."""
    if d < 1:
        raise ValueError("d must be positive")
    if isinstance(E, ExpansionModPhiD):
        if not E.classical or E.d != d:
            raise BasisMismatch("qfrob_d expects a classical expansion")
        items = E.terms
    else:
        items = E.items()
    return ExpansionModPhiD(d, {d * k: c for k, c in items})


def qfrob_d_inverse(E: ExpansionModPhiD) -> ExpansionModPhiD:
    """qbinom(x, k) -> binom(x, k/d) when d | k, else 0; scalars stay in Z[q]/Phi_d."""
    if E.classical:
        raise BasisMismatch("qfrob_d_inverse expects a q-binomial expansion")
    return ExpansionModPhiD(E.d, {k // E.d: c for k, c in E.terms if k % E.d == 0}, classical=True)


def reduce_expansion_mod_phi(E: QBinExpansion, d: int) -> ExpansionModPhiD:
    """Reduce a standard-basis expansion with Laurent coefficients mod Phi_d."""
    if E.basis is not Basis.STANDARD:
        raise BasisMismatch("reduce_expansion_mod_phi expects the standard basis")
    return ExpansionModPhiD(d, E.laurent_coeffs())


def classical_s_bar_mod_p(k: int, p: int) -> ClassicalExpansionModP:
    """S(bar(binom(x, k))) in R (x) F_p, via the q := 1 specialisation of rq_core."""
    spec = specialize_q1(s_bar(QBinExpansion.basis_element(k)))
    return ClassicalExpansionModP(p, {i: int(v) for i, v in spec.items()})


def sign_lemma_holds(d: int, k: int) -> bool:
    """(-1)^(dk) q^C(dk+1, 2) == (-1)^k modulo Phi_d(q)."""
    lhs = LaurentPoly.monomial(binom(d * k + 1, 2), (-1) ** (d * k))
    return reduce_mod_cyclotomic(lhs - (-1) ** k, cyclotomic(d)).is_zero()
