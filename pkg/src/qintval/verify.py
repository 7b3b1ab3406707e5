"""Named invariant suites, run by ``qintval verify <suite>``.

Each check returns True on success; an exception counts as a failure.
Sizes are kept small so that ``verify all`` finishes in a few seconds.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Callable

from . import combinat as cb
from . import evalmaps as ev
from . import frobenius as fr
from . import qnum as qn
from . import rq_core as rq
from .exactalg import LaurentPoly, RatFunc, cyclotomic, parse_laurent, ratfunc_normalize, reduce_mod_cyclotomic

Check = Callable[[], bool]


def _in_nq(f: LaurentPoly | None) -> bool:
    return f is not None and f.in_zq() and f.is_nonnegative()


def _exactalg() -> dict[str, Check]:
    def cyclotomic_degrees():
        def totient(d):
            return sum(1 for a in range(1, d + 1) if math.gcd(a, d) == 1)

        return all(cyclotomic(d).degree == totient(d) for d in range(1, 31))

    def cyclotomic_divides():
        for d in range(1, 25):
            r = RatFunc(LaurentPoly({d: 1, 0: -1}), cyclotomic(d).phi)
            if not r.is_laurent():
                return False
        return True

    def ratfunc_canonical():
        a = ratfunc_normalize(parse_laurent("1 - q^2"), parse_laurent("2 - 2*q"))
        return a == RatFunc(parse_laurent("1/2 + q/2")) and a.den == (1,)

    def bar_involution():
        rng = random.Random(1)
        for _ in range(30):
            f = LaurentPoly({rng.randint(-5, 5): rng.randint(-3, 3) for _ in range(4)})
            if f.bar().bar() != f:
                return False
        return True

    def reduction_congruent():
        for d in range(1, 9):
            for e in range(-6, 12):
                r = reduce_mod_cyclotomic(LaurentPoly.monomial(e), d)
                diff = RatFunc(LaurentPoly.monomial(e) - r, cyclotomic(d).phi)
                if not diff.is_laurent() or (r and r.degree >= cyclotomic(d).degree):
                    return False
        return True

    return {
        "cyclotomic degree is the totient": cyclotomic_degrees,
        "Phi_d divides q^d - 1": cyclotomic_divides,
        "rational functions are canonical": ratfunc_canonical,
        "bar is an involution on Laurent polynomials": bar_involution,
        "reduction mod Phi_d is a congruence": reduction_congruent,
    }


def _qnum() -> dict[str, Check]:
    def pascal_vs_factorials():
        return all(qn.q_binomial(n, k) == qn.q_binomial_by_factorials(n, k) for n in range(13) for k in range(n + 1))

    def q_equals_one():
        return all(qn.q_binomial(n, k)(1) == qn.binom(n, k) for n in range(15) for k in range(n + 1))

    def q_lucas_small():
        for d in range(1, 7):
            for n in range(16):
                for m in range(16):
                    _, v = qn.q_lucas(n, m, d)
                    if reduce_mod_cyclotomic(qn.q_binomial(n, m), d) != v:
                        return False
        return True

    def lucas_small():
        for p in (2, 3, 5, 7):
            for n in range(30):
                for m in range(30):
                    if qn.lucas_binom_mod_p(n, m, p) != qn.binom(n, m) % p:
                        return False
        return True

    def q_int_negative():
        return all(qn.q_int(-n) == -qn.q_int(n).mul_q(-n) for n in range(10))

    return {
        "q-Pascal rows match factorial quotients": pascal_vs_factorials,
        "q_binomial at q=1 is binom": q_equals_one,
        "q-Lucas theorem for n, m < 16, d <= 6": q_lucas_small,
        "Lucas theorem for p <= 7": lucas_small,
        "[-n]_q = -q^-n [n]_q": q_int_negative,
    }


def _rq_core() -> dict[str, Check]:
    E = rq.QBinExpansion

    def struct_consts():
        for i in range(6):
            for j in range(6):
                got = rq.expand(rq.qbinom_poly(i) * rq.qbinom_poly(j))
                if got != E(rq.struct_const(i, j)) or not all(c.is_nonnegative() for c in rq.struct_const(i, j).values()):
                    return False
        return True

    def round_trip():
        rng = random.Random(2)
        for _ in range(10):
            P = rq.XPoly(RatFunc(LaurentPoly({rng.randint(-2, 2): rng.randint(-3, 3)}), LaurentPoly({0: 1, rng.randint(1, 2): rng.randint(1, 2)})) for _ in range(rng.randint(1, 5)))
            if rq.synthesize(rq.expand(P)) != P:
                return False
        return True

    def shift_semantics():
        for k in range(4):
            for basis in rq.Basis:
                b = E.basis_element(k, basis)
                for m in range(-3, 4):
                    s = rq.shift(b, m)
                    if any(rq.eval_at_qint(s, n) != rq.eval_at_qint(b, n + m) for n in range(-3, 4)):
                        return False
        return True

    def bar_props():
        for k in range(8):
            for basis in rq.Basis:
                b = E.basis_element(k, basis)
                if rq.bar(rq.bar(b)) != b or rq.convert_basis(rq.convert_basis(b)) != b:
                    return False
                if rq.bar(rq.shift(b, 1)) != rq.shift(rq.bar(b), -1):
                    return False
        return True

    def sign_patterns():
        for k in range(9):
            sign = (-1) ** k
            fwd = rq.convert_basis(E.basis_element(k))
            back = rq.convert_basis(E.basis_element(k, rq.Basis.BAR))
            if not all(_in_nq((c * sign).to_laurent().bar()) for c in fwd.coeffs.values()):
                return False
            if not all(_in_nq((c * sign).to_laurent()) for c in back.coeffs.values()):
                return False
        return True

    def dilation():
        for m in (2, 3):
            for i in range(4):
                D = rq.dilate(m, E.basis_element(i))
                if any(rq.eval_at_qint(D, n) != rq.eval_at_qint(E.basis_element(i), m * n) for n in range(-2, 4)):
                    return False
        return True

    def membership_examples():
        ok = rq.membership(rq.qbinom_poly(2)).in_rq and not rq.membership(rq.XPoly((0, Fraction(1, 2)))).in_rq
        mb = rq.membership(rq.qbinom_poly(2).bar())
        return ok and mb.in_plus and mb.in_minus

    return {
        "expand(qbinom_i qbinom_j) = closed form, positive (i, j < 6)": struct_consts,
        "synthesis of expand is the identity": round_trip,
        "eval(shift(E, m), n) = eval(E, n + m)": shift_semantics,
        "bar and basis change are involutions; bar S = S^-1 bar": bar_props,
        "basis change sign pattern (-1)^k": sign_patterns,
        "D_m P([n]) = P([mn])": dilation,
        "membership examples": membership_examples,
    }


def _frobenius() -> dict[str, Check]:
    def frob_p_mult():
        for p in (2, 3, 5):
            for i in range(5):
                for j in range(5):
                    a, b = fr.ClassicalExpansionModP(p, {i: 1}), fr.ClassicalExpansionModP(p, {j: 1})
                    if fr.frob_p(a * b) != fr.frob_p(a) * fr.frob_p(b):
                        return False
        return True

    def qfrob_mult():
        for d in (2, 3, 4, 6):
            for i in range(4):
                for j in range(4):
                    if fr.qfrob_d(rq.classical_struct_const(i, j), d) != fr.qfrob_d({i: 1}, d) * fr.qfrob_d({j: 1}, d):
                        return False
        return True

    def inverses():
        for p in (2, 3):
            e = fr.ClassicalExpansionModP(p, {1: 1, 2: p - 1, 4: 1})
            if fr.frob_p_inverse(fr.frob_p(e)) != e:
                return False
        e = {1: 3, 2: -1}
        return fr.qfrob_d_inverse(fr.qfrob_d(e, 3)) == fr.ExpansionModPhiD(3, e, classical=True)

    def commutation():
        for p in (2, 3):
            for k in range(5):
                if fr.frob_p(fr.classical_s_bar_mod_p(k, p)) != fr.classical_s_bar_mod_p(p * k, p):
                    return False
        for d in (2, 3):
            for k in range(4):
                cl = {i: int(v) for i, v in rq.specialize_q1(rq.s_bar(rq.QBinExpansion.basis_element(k))).items()}
                rhs = fr.reduce_expansion_mod_phi(rq.s_bar(rq.QBinExpansion.basis_element(d * k)), d)
                if fr.qfrob_d(cl, d) != rhs:
                    return False
        return True

    def sign_lemma():
        return all(fr.sign_lemma_holds(d, k) for d in range(1, 9) for k in range(9))

    return {
        "Psi_p is multiplicative": frob_p_mult,
        "Psi_d is multiplicative mod Phi_d": qfrob_mult,
        "one-sided inverses": inverses,
        "Frobenius commutes with S composed with bar": commutation,
        "(-1)^(dk) q^C(dk+1,2) = (-1)^k mod Phi_d": sign_lemma,
    }


def _combinat() -> dict[str, Check]:
    def rectangles():
        return all(cb.enumerate_in_rectangle(n - k, k) == qn.q_binomial(n, k) for n in range(10) for k in range(n + 1))

    def subsets():
        for n in range(8):
            for k in range(n + 1):
                for lam in cb.partitions_in_rectangle(n - k, k):
                    S = cb.partition_to_subset(lam, n, k)
                    if lam.size != sum(S) - k * (k + 1) // 2 or cb.subset_to_partition(S, n, k) != lam:
                        return False
        return True

    def worked_bijection():
        w = cb.qbinommult_bijection(14, 7, 6, (7, 6, 5, 5, 2, 2, 1), (8, 7, 6, 4, 2, 1))
        return (
            w.k == 10
            and w.alpha == (4, 4, 4, 3, 3, 3, 2, 2, 2, 1)
            and w.beta == (3, 2, 2, 2)
            and w.gamma == (3, 2, 1, 1)
            and w.c == (1, 4, 4)
            and cb.qbinommult_inverse(14, 7, 6, w) == ((7, 6, 5, 5, 2, 2, 1), (8, 7, 6, 4, 2, 1))
        )

    def bijection_small():
        for n in range(6):
            for i in range(min(n, 3) + 1):
                for j in range(i + 1):
                    seen = set()
                    for lam in cb.partitions_in_rectangle(n - i, i):
                        for mu in cb.partitions_in_rectangle(n - j, j):
                            w = cb.qbinommult_bijection(n, i, j, lam, mu)
                            if w.weight(i, j) != lam.size + mu.size or cb.qbinommult_inverse(n, i, j, w) != (lam, mu):
                                return False
                            seen.add(w)
                    if len(seen) != qn.binom(n, i) * qn.binom(n, j):
                        return False
        return True

    def subspaces():
        return all(cb.count_subspaces(p, n, k) == qn.q_binomial(n, k)(p) for p in (2, 3) for n in range(4) for k in range(n + 1))

    def matrices():
        # binom(xy, i) = sum_{j,k} d^i_{j,k} binom(x, j) binom(y, k)
        for x in range(4):
            for y in range(4):
                for i in range(4):
                    rhs = sum(cb.count_matrices(j, k, i) * qn.binom(x, j) * qn.binom(y, k) for j in range(i + 1) for k in range(i + 1))
                    if rhs != qn.binom(x * y, i):
                        return False
        return True

    return {
        "partitions in a rectangle give q_binomial": rectangles,
        "north-step subsets": subsets,
        "worked product-bijection example": worked_bijection,
        "product bijection for n <= 5": bijection_small,
        "subspace counts over F_2, F_3": subspaces,
        "0-1 matrix counts split binom(xy, i)": matrices,
    }


def _evalmaps() -> dict[str, Check]:
    Q = ev.FieldSpec.rationals()
    E = rq.QBinExpansion

    def specs():
        F7 = ev.FieldSpec.prime(7)
        return [
            ev.HomSpec.q_zero(Q, 2),
            ev.HomSpec.q_zero(F7, None),
            ev.HomSpec.root_of_unity(ev.FieldSpec.cyclotomic_q(3), 3, 1, Fraction(5, 2)),
            ev.HomSpec.root_of_unity(F7, 3, 2, [4, 1, 3]),
            ev.HomSpec.root_of_unity(ev.FieldSpec.cyclotomic_fp(2, 3), 3, 0, [1, 1, 0, 1]),
            ev.HomSpec.generic(Q, Fraction(1, 2), 2),
        ]

    def multiplicative():
        rng = random.Random(3)
        for spec in specs():
            h = ev.build_hom(spec)
            for _ in range(8):
                a = E({rng.randint(0, 5): LaurentPoly({rng.randint(0, 2): rng.randint(-2, 2)}) for _ in range(3)})
                b = E({rng.randint(0, 5): LaurentPoly({rng.randint(0, 2): rng.randint(-2, 2)}) for _ in range(3)})
                if ev.apply_hom(h, rq.multiply(a, b)) != ev.apply_hom(h, a) * ev.apply_hom(h, b):
                    return False
        return True

    def case2_std():
        F = ev.FieldSpec.cyclotomic_q(4)
        w = F.generator()
        h = ev.build_hom(ev.HomSpec.root_of_unity(F, 4, 3, 11))
        return all(ev.apply_hom(h, E.basis_element(m)) == ev.std_eval(11, w, E.basis_element(m)) for m in range(10))

    def surjectivity_value():
        h = ev.build_hom(ev.HomSpec.generic(Q, Fraction(1, 2), 2))
        return ev.apply_hom(h, E({3: LaurentPoly.monomial(6)})) == Fraction(1, 21)

    def lucas_digits():
        t = ev.PAdicDigits(3, (1, 0, 1))
        return ev.lucas_eval_binom(t, 5) == 0 and ev.lucas_eval_binom(t, 0) == 1

    return {
        "homomorphisms are multiplicative": multiplicative,
        "root-of-unity case agrees with standard evaluation": case2_std,
        "q -> 1/2, x -> 2 sends q^6 qbinom(x,3) to 1/21": surjectivity_value,
        "Lucas on p-adic digits": lucas_digits,
    }


SUITES: dict[str, Callable[[], dict[str, Check]]] = {
    "exactalg": _exactalg,
    "qnum": _qnum,
    "rq_core": _rq_core,
    "frobenius": _frobenius,
    "combinat": _combinat,
    "evalmaps": _evalmaps,
}


def run_suite(name: str) -> list[tuple[str, str, bool, str]]:
    """Run one suite (or "all"); returns (suite, check, passed, error) rows."""
    names = list(SUITES) if name == "all" else [name]
    rows = []
    for suite in names:
        if suite not in SUITES:
            raise KeyError(suite)
        for label, check in SUITES[suite]().items():
            try:
                ok, err = bool(check()), ""
            except Exception as exc:  # a crashing check is a failed check
                ok, err = False, f"{type(exc).__name__}: {exc}"
            rows.append((suite, label, ok, err))
    return rows
