import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qintval.errors import BasisMismatch, NotPrime
from qintval.exactalg import cyclotomic, parse_laurent, reduce_mod_cyclotomic
from qintval.frobenius import (
    ClassicalExpansionModP,
    ExpansionModPhiD,
    classical_s_bar_mod_p,
    frob_p,
    frob_p_inverse,
    qfrob_d,
    qfrob_d_inverse,
    reduce_expansion_mod_phi,
    sign_lemma_holds,
)
from qintval.rq_core import QBinExpansion, classical_struct_const, s_bar, specialize_q1, struct_const

CP = ClassicalExpansionModP


def test_frob_p_examples():
    assert frob_p(CP(2, {1: 1})) == CP(2, {2: 1})
    assert frob_p(CP(5, {0: 1})) == CP(5, {0: 1})
    assert frob_p(CP(3, {1: 1, 2: 2})) == CP(3, {3: 1, 6: 2})


def test_frob_p_inverse_examples():
    assert frob_p_inverse(CP(2, {4: 1})) == CP(2, {2: 1})
    assert frob_p_inverse(CP(2, {3: 1})) == CP(2, {})
    assert frob_p_inverse(CP(3, {3: 1, 5: 2})) == CP(3, {1: 1})


def test_residues_are_canonical():
    e = CP(3, {1: 4, 2: 3, 5: -1})
    assert e.coeffs == {1: 1, 5: 2}
    with pytest.raises(NotPrime):
        CP(4, {1: 1})
    with pytest.raises(BasisMismatch):
        CP(2, {1: 1}) + CP(3, {1: 1})


@pytest.mark.parametrize("p", [2, 3, 5])
def test_frob_p_is_multiplicative(p):
    for i in range(6):
        for j in range(6):
            a, b = CP(p, {i: 1}), CP(p, {j: 1})
            assert frob_p(a * b) == frob_p(a) * frob_p(b)


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from([2, 3, 5]),
    st.dictionaries(st.integers(0, 4), st.integers(0, 4), max_size=3),
    st.dictionaries(st.integers(0, 4), st.integers(0, 4), max_size=3),
)
def test_frob_p_ring_hom_and_section(p, a, b):
    x, y = CP(p, a), CP(p, b)
    assert frob_p(x * y) == frob_p(x) * frob_p(y)
    assert frob_p(x + y) == frob_p(x) + frob_p(y)
    assert frob_p_inverse(frob_p(x)) == x


@pytest.mark.parametrize("p", [2, 3, 5])
def test_prime_to_p_span_is_an_ideal(p):
    for i in range(1, 8):
        if i % p == 0:
            continue
        for j in range(8):
            prod = CP(p, {i: 1}) * CP(p, {j: 1})
            assert all(k % p for k in prod.coeffs)


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("k", range(0, 6))
def test_frob_p_commutes_with_s_bar(p, k):
    assert frob_p(classical_s_bar_mod_p(k, p)) == classical_s_bar_mod_p(p * k, p)


# -- quantum Frobenius


def test_qfrob_d_examples():
    assert qfrob_d({1: 1}, 2) == ExpansionModPhiD(2, {2: 1})
    for d in (1, 2, 5):
        assert qfrob_d({0: 1}, d) == ExpansionModPhiD(d, {0: 1})


def test_qfrob_d_homomorphism_instance():
    # binom(x,1)^2 = binom(x,1) + 2 binom(x,2)
    assert classical_struct_const(1, 1) == {1: 1, 2: 2}
    image = qfrob_d({1: 1, 2: 2}, 2)
    assert image == ExpansionModPhiD(2, {2: 1, 4: 2})
    sq = ExpansionModPhiD(2, {2: 1}) * ExpansionModPhiD(2, {2: 1})
    assert sq == image
    # the k=3 constant q(1+q)(1+q+q^2) dies mod Phi_2
    assert struct_const(2, 2)[3] == parse_laurent("q") * parse_laurent("1 + q") * parse_laurent("1 + q + q^2")


def test_qfrob_d_inverse_examples():
    assert qfrob_d_inverse(ExpansionModPhiD(2, {4: 1})) == ExpansionModPhiD(2, {2: 1}, classical=True)
    assert qfrob_d_inverse(ExpansionModPhiD(3, {4: 1})) == ExpansionModPhiD(3, {}, classical=True)
    assert qfrob_d_inverse(ExpansionModPhiD(2, {2: 1, 3: 5})) == ExpansionModPhiD(2, {1: 1}, classical=True)


def test_coefficients_are_reduced_eagerly():
    e = ExpansionModPhiD(3, {1: parse_laurent("q^2"), 2: parse_laurent("1 + q + q^2")})
    assert e.coeffs == {1: parse_laurent("-1 - q")}
    phi = cyclotomic(3)
    for c in e.coeffs.values():
        assert c.degree < phi.degree and c.valuation >= 0


def test_json_round_trip_keeps_modulus():
    e = ExpansionModPhiD(4, {1: parse_laurent("q"), 3: 2})
    data = e.to_json()
    assert data["mod"] == "phi:4"
    assert ExpansionModPhiD.from_json(data) == e
    c = qfrob_d_inverse(ExpansionModPhiD(2, {2: 1}))
    assert ExpansionModPhiD.from_json(c.to_json()) == c
    assert CP(3, {2: 1}).to_json()["mod"] == "p:3"


@pytest.mark.parametrize("d", [2, 3, 4, 6])
def test_qfrob_d_is_multiplicative(d):
    for i in range(5):
        for j in range(5):
            lhs = qfrob_d(classical_struct_const(i, j), d)
            rhs = qfrob_d({i: 1}, d) * qfrob_d({j: 1}, d)
            assert lhs == rhs


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), st.dictionaries(st.integers(0, 5), st.integers(-5, 5), max_size=4))
def test_qfrob_d_inverse_is_a_section(d, coeffs):
    e = ExpansionModPhiD(d, coeffs, classical=True)
    assert qfrob_d_inverse(qfrob_d(e, d)) == e


def test_qfrob_rejects_wrong_side():
    with pytest.raises(BasisMismatch):
        qfrob_d_inverse(ExpansionModPhiD(2, {1: 1}, classical=True))
    with pytest.raises(BasisMismatch):
        qfrob_d(ExpansionModPhiD(2, {1: 1}), 2)


@pytest.mark.parametrize("d", [2, 3, 4])
@pytest.mark.parametrize("k", range(0, 5))
def test_qfrob_d_commutes_with_s_bar(d, k):
    classical = specialize_q1(s_bar(QBinExpansion.basis_element(k)))
    lhs = qfrob_d({i: int(c) for i, c in classical.items()}, d)
    rhs = reduce_expansion_mod_phi(s_bar(QBinExpansion.basis_element(d * k)), d)
    assert lhs == rhs


@pytest.mark.parametrize("d", range(1, 9))
def test_sign_lemma(d):
    for k in range(0, 9):
        assert sign_lemma_holds(d, k)


def test_sign_lemma_by_direct_reduction():
    # spot check against reduce_mod_cyclotomic without the helper
    for d, k in [(2, 3), (5, 2), (6, 4)]:
        n = d * k
        lhs = parse_laurent(f"q^{n * (n + 1) // 2}") * (-1) ** n
        assert reduce_mod_cyclotomic(lhs, d) == (-1) ** k
