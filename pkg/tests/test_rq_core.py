from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qintval.errors import BasisMismatch, PoleAtOne
from qintval.exactalg import LaurentPoly, RatFunc, parse_laurent, parse_ratfunc
from qintval.qnum import binom, q_binomial, q_int
from qintval.rq_core import (
    Basis,
    QBinExpansion,
    XPoly,
    bar,
    bar_in_standard,
    bar_struct_const,
    classical_struct_const,
    classify_by_coefficients,
    convert_basis,
    dilate,
    eval_at_qint,
    expand,
    expand_bar,
    in_rq_by_evaluation,
    membership,
    multiply,
    parse_expansion,
    parse_xpoly,
    qbinom_at_qint,
    qbinom_poly,
    shift,
    shift_bar_closed_form,
    shift_by_substitution,
    shift_closed_form,
    specialize_q1,
    standard_in_bar,
    struct_const,
    struct_const_by_factorials,
    synthesize,
)

L = parse_laurent
E = QBinExpansion
STD, BAR = Basis.STANDARD, Basis.BAR

small_laurent = st.dictionaries(st.integers(-2, 3), st.integers(-3, 3), max_size=3).map(LaurentPoly)
expansions = st.dictionaries(st.integers(0, 4), small_laurent, max_size=3).map(E)
bar_expansions = st.dictionaries(st.integers(0, 4), small_laurent, max_size=3).map(lambda d: E(d, BAR))


def ratfuncs():
    num = st.dictionaries(st.integers(0, 3), st.integers(-3, 3), max_size=3).map(LaurentPoly)
    den = st.sampled_from(["1", "q", "1 + q", "2", "q^2 + q + 1", "1 - q"]).map(L)
    return st.builds(RatFunc, num, den)


xpolys = st.lists(ratfuncs(), max_size=6).map(XPoly)


# -- basis polynomials and evaluation


def test_qbinom_poly_examples():
    assert qbinom_poly(0) == XPoly((1,))
    assert qbinom_poly(1) == XPoly.x()
    x = XPoly.x()
    assert qbinom_poly(2) == x * (x - 1) / parse_ratfunc("q*(1 + q)")


def test_qbinom_poly_against_sympy_values():
    q, x = sympy.symbols("q x")
    for k in range(5):
        expr = sympy.prod([x - sum(q**e for e in range(i)) for i in range(k)]) / (
            q ** comb(k, 2) * sympy.prod([sum(q**e for e in range(i)) for i in range(1, k + 1)])
        )
        for n in range(-2, 5):
            val = sympy.cancel(expr.subs(x, sum(q**e for e in range(n)) if n >= 0 else -sum(q**-e for e in range(1, -n + 1))))
            ours = eval_at_qint(qbinom_poly(k), n)
            num = sum((sympy.Rational(c) * q**i for i, c in enumerate(ours.num)), sympy.Integer(0))
            den = sum((sympy.Rational(c) * q**i for i, c in enumerate(ours.den)), sympy.Integer(0))
            assert sympy.simplify(val - num / den) == 0


def test_eval_examples():
    assert eval_at_qint(qbinom_poly(2), 4) == L("1 + q + 2*q^2 + q^3 + q^4")
    for k in range(1, 6):
        assert eval_at_qint(qbinom_poly(k), 0) == 0
    assert eval_at_qint(qbinom_poly(2), -1) == L("q^-3")


@pytest.mark.parametrize("k", range(0, 7))
def test_qbinom_at_natural_qints(k):
    for n in range(0, 9):
        assert eval_at_qint(qbinom_poly(k), n) == q_binomial(n, k)


@pytest.mark.parametrize("k", range(0, 6))
def test_expansion_evaluation_paths_agree(k):
    for basis in Basis:
        b = E.basis_element(k, basis)
        for n in range(-5, 6):
            assert eval_at_qint(b, n) == eval_at_qint(synthesize(b), n)


def test_qbinom_at_negative_qint_is_laurent():
    assert qbinom_at_qint(-1, 2) == L("q^-3")
    for n in range(-5, 0):
        for k in range(6):
            assert qbinom_at_qint(n, k).is_integral()


# -- expansion


def test_expand_examples():
    assert expand(parse_xpoly("x^2")) == E({1: 1, 2: L("q + q^2")})
    assert expand(qbinom_poly(5)) == E({5: 1})
    assert expand(XPoly((parse_ratfunc("1/(1+q)"),))) == E({0: parse_ratfunc("1/(1+q)")})
    assert expand(XPoly()) == E()


@settings(max_examples=40, deadline=None)
@given(xpolys)
def test_expand_round_trip(P):
    assert synthesize(expand(P)) == P


def test_expand_round_trip_degree_ten():
    P = parse_xpoly("x^10/(1 + q^3) - (q - 2)*x^7 + x/3 - q^-2")
    assert synthesize(expand(P)) == P


@settings(max_examples=30, deadline=None)
@given(xpolys)
def test_expand_bar_round_trip(P):
    Eb = expand_bar(P)
    assert Eb.basis is BAR
    assert synthesize(Eb) == P


def test_json_round_trip():
    e = E({0: L("q^-1"), 3: parse_ratfunc("1/(1 + q)")}, BAR)
    assert E.from_json(e.to_json()) == e
    assert list(e.to_json()["coeffs"]) == ["0", "3"]


def test_parse_expansion_forms():
    assert parse_expansion("3") == E({3: 1})
    assert parse_expansion("1: q; 1: 1; 4: -1/2") == E({1: L("1 + q"), 4: Fraction(-1, 2)})
    assert parse_expansion('{"basis": "bar", "coeffs": {"2": "q"}}') == E({2: L("q")}, BAR)


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        E({-1: 1})


# -- membership


def test_membership_examples():
    m = membership(qbinom_poly(2))
    assert m.in_rq and m.in_plus
    assert not membership(parse_xpoly("x/2")).in_rq
    mb = membership(qbinom_poly(2).bar())
    assert mb.in_plus and mb.in_minus


def test_zero_polynomial_is_in_everything():
    m = membership(XPoly(), offsets=(-2, 0, 3))
    assert m.in_rq and all(m.in_plus_offset.values()) and all(m.in_minus_offset.values())
    assert expand(XPoly()).coeffs == {}


def test_offset_membership_is_monotone():
    # S^-2 qbinom(x, 3) only takes Z[q]-values from n = 2 on
    P = synthesize(shift(E({3: 1}), -2))
    m = membership(P, offsets=range(-3, 6))
    flags = [m.in_plus_offset[k] for k in range(-3, 6)]
    assert flags == sorted(flags)
    assert not m.in_plus and m.in_plus_offset[2]


def test_shifted_binomial_membership():
    # S^-1 qbinom(x,2) lives in R^{+,1} but not R^+
    P = synthesize(shift(E({2: 1}), -1))
    m = membership(P, offsets=(0, 1))
    assert m.in_rq and not m.in_plus_offset[0] and m.in_plus_offset[1]


def test_classify_by_coefficients():
    c = classify_by_coefficients(qbinom_poly(3) * LaurentPoly.monomial(-1))
    assert c == {"in_rq": True, "in_plus": False, "in_minus": c["in_minus"]}
    assert classify_by_coefficients(parse_xpoly("x/(1+q)"))["in_rq"] is False


@settings(max_examples=40, deadline=None)
@given(xpolys)
def test_finite_check_matches_coefficients(P):
    c = classify_by_coefficients(P)
    m = membership(P)
    assert m.in_rq == c["in_rq"] == in_rq_by_evaluation(P)
    assert m.in_plus == c["in_plus"]
    assert m.in_minus == c["in_minus"]


# -- structure constants


def test_struct_const_examples():
    assert struct_const(1, 1) == {1: 1, 2: L("q + q^2")}
    assert struct_const(4, 0) == {4: 1}
    assert classical_struct_const(1, 1) == {1: 1, 2: 2}
    assert specialize_q1(E(struct_const(1, 1))) == {1: 1, 2: 2}


@pytest.mark.parametrize("i", range(0, 6))
def test_struct_const_closed_forms_agree(i):
    for j in range(6):
        sc = struct_const(i, j)
        assert sc == struct_const_by_factorials(i, j)
        assert all(c.is_nonnegative() and c.in_zq() for c in sc.values())
        assert {k: c(1) for k, c in sc.items()} == classical_struct_const(i, j)
        assert bar_struct_const(i, j) == {k: c.bar() for k, c in sc.items()}


def test_multiply_examples():
    one = E({1: 1})
    assert multiply(one, one) == E({1: 1, 2: L("q + q^2")})
    assert multiply(E({1: 1}, BAR), E({1: 1}, BAR)) == E({1: 1, 2: L("q^-1 + q^-2")}, BAR)
    e = E({2: L("q"), 5: 3})
    assert multiply(e, E({0: 1})) == e
    with pytest.raises(BasisMismatch):
        multiply(one, E({1: 1}, BAR))


@settings(max_examples=25, deadline=None)
@given(expansions, expansions)
def test_multiply_matches_polynomial_product(a, b):
    assert multiply(a, b) == expand(synthesize(a) * synthesize(b))


@settings(max_examples=20, deadline=None)
@given(bar_expansions, bar_expansions)
def test_bar_multiply_matches_polynomial_product(a, b):
    assert multiply(a, b) == expand_bar(synthesize(a) * synthesize(b))


# -- shift


def test_shift_examples():
    assert shift(E({1: 1}), 1) == E({0: 1, 1: L("q")})
    e = E({3: L("q^-2")})
    assert shift(e, 0) == e
    assert shift(E({2: 1}), 1) == E({1: 1, 2: L("q^2")})


@pytest.mark.parametrize("k", range(0, 6))
def test_shift_closed_forms(k):
    for m in range(0, 5):
        assert E(shift_closed_form(k, m)) == shift_by_substitution(E({k: 1}), m)
        assert all(c.is_nonnegative() and c.in_zq() for c in shift_closed_form(k, m).values())
        bar_side = shift_bar_closed_form(k, m)
        assert E(bar_side, BAR) == shift_by_substitution(E({k: 1}, BAR), -m)
        assert all(c.is_nonnegative() and c.bar().in_zq() for c in bar_side.values())


@settings(max_examples=25, deadline=None)
@given(st.one_of(expansions, bar_expansions), st.integers(-4, 4))
def test_shift_semantics(e, m):
    s = shift(e, m)
    assert s.basis is e.basis
    for n in range(-3, 4):
        assert eval_at_qint(s, n) == eval_at_qint(e, n + m)


def test_shift_composes():
    e = E({3: 1, 1: L("q^-1")})
    assert shift(shift(e, 2), -3) == shift(e, -1)


# -- bar and basis change


def test_bar_examples():
    assert bar(E({1: 1})) == E({1: L("-q")})
    assert bar(E({0: L("1 + 2*q")})) == E({0: L("1 + 2*q^-1")})
    assert bar(E({2: 1})) == E({1: L("q^3"), 2: L("q^5")})


def test_bar_basis_value_identity():
    # bar(qbinom([-n]_q, 2)) equals the value of bar(qbinom(x,2)) at [n]_q
    b = bar(E({2: 1}))
    for n in range(0, 5):
        assert eval_at_qint(b, n) == qbinom_at_qint(-n, 2).bar()


def test_convert_examples():
    assert convert_basis(E({0: 1})) == E({0: 1}, BAR)
    assert convert_basis(E({1: 1}, BAR)) == E({1: L("-q")})
    assert convert_basis(E({1: 1})) == E({1: L("-q^-1")}, BAR)


@pytest.mark.parametrize("k", range(0, 11))
def test_basis_change_signs_and_round_trip(k):
    sign = (-1) ** k
    for c in bar_in_standard(k).values():
        f = c * sign
        assert f.is_nonnegative() and f.in_zq()
    for c in standard_in_bar(k).values():
        f = c * sign
        assert f.is_nonnegative() and f.in_zqinv()
    assert convert_basis(convert_basis(E({k: 1}))) == E({k: 1})
    assert convert_basis(convert_basis(E({k: 1}, BAR))) == E({k: 1}, BAR)


@settings(max_examples=25, deadline=None)
@given(st.one_of(expansions, bar_expansions))
def test_bar_properties(e):
    assert bar(bar(e)) == e
    assert synthesize(bar(e)) == synthesize(e).bar()
    # bar S = S^-1 bar
    assert bar(shift(e, 1)) == shift(bar(e), -1)
    for m in range(-2, 3):
        assert shift(bar(shift(bar(e), m)), m) == e


@settings(max_examples=15, deadline=None)
@given(expansions, expansions)
def test_bar_is_multiplicative(a, b):
    assert bar(multiply(a, b)) == multiply(bar(a), bar(b))


@pytest.mark.parametrize("k", range(0, 9))
def test_reciprocity_at_q_equals_one(k):
    spec = specialize_q1(bar(E({k: 1})))
    for n in range(0, 9):
        value = sum(c * comb(n, j) for j, c in spec.items())
        assert value == (-1) ** k * binom(n + k - 1, k)


# -- dilation


def test_dilate_examples():
    e = E({2: L("q"), 4: 1})
    assert dilate(1, e) == e
    d = dilate(2, E({1: 1}))
    assert d == E({1: L("1 + q"), 2: L("q^3 - q")})
    assert eval_at_qint(d, 3) == q_int(6)
    assert specialize_q1(d) == {1: 2}


def test_dilate_needs_positive_factor():
    with pytest.raises(ValueError):
        dilate(0, E({1: 1}))


@pytest.mark.parametrize("m", [2, 3])
def test_dilation_semantics_and_divisibility(m):
    qm1 = L("q - 1")
    for i in range(1, 4):
        d = dilate(m, E({i: 1}))
        for n in range(-3, 4):
            assert eval_at_qint(d, n) == eval_at_qint(E({i: 1}), m * n)
        for k, c in d.items():
            power = qm1 ** ((k - 1) // i)
            assert (c / power).is_laurent()


def test_specialize_pole_at_one():
    with pytest.raises(PoleAtOne):
        specialize_q1(E({1: parse_ratfunc("1/(1 - q)")}))
