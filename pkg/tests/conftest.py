import random

from qintval.evalmaps import FieldSpec, HomSpec
from qintval.exactalg import LaurentPoly
from qintval.rq_core import QBinExpansion

# criterion number -> "PASS ..." / "FAIL ..." line, filled by test_acceptance
ACCEPTANCE_RESULTS: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(ACCEPTANCE_RESULTS[number])


def hom_spec_matrix() -> list[HomSpec]:
    """Evaluation maps covering the three cases and the four kinds of target field."""
    Q = FieldSpec.rationals()
    F5, F7 = FieldSpec.prime(5), FieldSpec.prime(7)
    Q3, Q4 = FieldSpec.cyclotomic_q(3), FieldSpec.cyclotomic_q(4)
    F2_3, F3_4 = FieldSpec.cyclotomic_fp(2, 3), FieldSpec.cyclotomic_fp(3, 4)
    return [
        HomSpec.q_zero(Q, 2),
        HomSpec.q_zero(Q, None),
        HomSpec.q_zero(F5, 3),
        HomSpec.q_zero(Q3, 1),
        HomSpec.q_zero(F2_3, None),
        HomSpec.root_of_unity(Q, 2, 1, 5),
        HomSpec.root_of_unity(Q, 1, 0, "1/3"),
        HomSpec.root_of_unity(Q3, 3, 2, ["1/2", 1]),
        HomSpec.root_of_unity(Q4, 4, 3, 7),
        HomSpec.root_of_unity(F7, 3, 1, [3, 1, 4, 6]),
        HomSpec.root_of_unity(F5, 1, 0, 17),
        HomSpec.root_of_unity(F2_3, 3, 2, [1, 1, 0, 1, 1]),
        HomSpec.root_of_unity(F3_4, 4, 1, 9),
        HomSpec.generic(Q, 2, 3),
        HomSpec.generic(Q, "1/2", 2),
        HomSpec.generic(Q, -3, "1/5"),
        HomSpec.generic(Q3, [0, 2], [1, 1]),
    ]


def random_expansion(rng: random.Random, support: int = 5, top: int = 6) -> QBinExpansion:
    """A standard-basis expansion with Z[q] coefficients."""
    coeffs = {}
    for k in rng.sample(range(top + 1), rng.randint(0, support)):
        terms = {e: rng.randint(-3, 3) for e in rng.sample(range(4), rng.randint(1, 3))}
        coeffs[k] = LaurentPoly(terms)
    return QBinExpansion(coeffs)
