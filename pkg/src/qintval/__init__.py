"""Exact computation in the ring of quantum integer-valued polynomials.

The main entry points are re-exported here; see the submodules for the rest.
"""

from .errors import *  # noqa: F401,F403
from .exactalg import LaurentPoly, RatFunc, cyclotomic, parse_laurent, parse_ratfunc, reduce_mod_cyclotomic
from .qnum import binom, q_binomial, q_factorial, q_int, q_lucas, lucas_binom_mod_p
from .rq_core import (
    Basis,
    QBinExpansion,
    XPoly,
    bar,
    convert_basis,
    dilate,
    eval_at_qint,
    expand,
    expand_bar,
    membership,
    multiply,
    parse_xpoly,
    qbinom_poly,
    shift,
    specialize_q1,
    struct_const,
)

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "RatFunc",
    "cyclotomic",
    "parse_laurent",
    "parse_ratfunc",
    "reduce_mod_cyclotomic",
    "binom",
    "q_binomial",
    "q_factorial",
    "q_int",
    "q_lucas",
    "lucas_binom_mod_p",
    "Basis",
    "QBinExpansion",
    "XPoly",
    "bar",
    "convert_basis",
    "dilate",
    "eval_at_qint",
    "expand",
    "expand_bar",
    "membership",
    "multiply",
    "parse_xpoly",
    "qbinom_poly",
    "shift",
    "specialize_q1",
    "struct_const",
]
