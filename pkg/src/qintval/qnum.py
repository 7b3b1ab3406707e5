"""q-integers, q-factorials, Gaussian binomials and the (q-)Lucas theorems."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotPrime
from .exactalg import LaurentPoly, cyclotomic, reduce_mod_cyclotomic

__all__ = [
    "q_int",
    "q_factorial",
    "q_binomial",
    "q_binomial_by_factorials",
    "binom",
    "falling_binom",
    "QLucasDecomposition",
    "q_lucas",
    "lucas_binom_mod_p",
    "is_prime",
    "base_digits",
]


def q_int(n: int) -> LaurentPoly:
    """[n]_q for any integer n; negative n gives -q^-1 - ... - q^n."""
    if n > 0:
        return LaurentPoly._raw(0, (1,) * n)
    if n == 0:
        return LaurentPoly._raw(0, ())
    return LaurentPoly._raw(n, (-1,) * (-n))


@functools.lru_cache(maxsize=None)
def q_factorial(n: int) -> LaurentPoly:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    if n == 0:
        return LaurentPoly._raw(0, (1,))
    return q_factorial(n - 1) * q_int(n)


@functools.lru_cache(maxsize=None)
def _qbinom_row(n: int) -> tuple[LaurentPoly, ...]:
    # row n of the q-Pascal triangle: [n choose k]_q = q^k [n-1 choose k]_q + [n-1 choose k-1]_q
    if n == 0:
        return (LaurentPoly._raw(0, (1,)),)
    prev = _qbinom_row(n - 1)
    row = [prev[0]]
    for k in range(1, n):
        row.append(prev[k].mul_q(k) + prev[k - 1])
    row.append(prev[n - 1])
    return tuple(row)


def q_binomial(n: int, m: int) -> LaurentPoly:
    """Gaussian binomial [n choose m]_q for n >= 0; zero outside 0 <= m <= n."""
    if n < 0:
        raise ValueError("q_binomial needs n >= 0; use rq_core.qbinom_at_qint for negative n")
    if m < 0 or m > n:
        return LaurentPoly._raw(0, ())
    if n > _ROW_LIMIT:
        return _qbinom_product(n, min(m, n - m))
    return _qbinom_row(n)[m]


_ROW_LIMIT = 64


@functools.lru_cache(maxsize=None)
def _qbinom_product(n: int, m: int) -> LaurentPoly:
    # prod_{k=1}^m (1 - q^(n-k+1)) / (1 - q^k), dividing exactly at every step
    c = [1]
    for k in range(1, m + 1):
        e = n - k + 1
        c = c + [0] * e
        for i in range(len(c) - 1, e - 1, -1):
            c[i] -= c[i - e]
        # g = f / (1 - q^k)  <=>  g_i = f_i + g_(i-k)
        for i in range(k, len(c)):
            c[i] += c[i - k]
        while c and c[-1] == 0:
            c.pop()
    return LaurentPoly._raw(0, tuple(c))


def q_binomial_by_factorials(n: int, m: int) -> LaurentPoly:
    """Same value as q_binomial, via [n]!/([m]![n-m]!) and exact division."""
    if m < 0 or m > n:
        return LaurentPoly._raw(0, ())
    r = q_factorial(n) / (q_factorial(m) * q_factorial(n - m))
    f = r.to_laurent()
    assert f is not None
    return f


def falling_binom(t, m: int):
    """binom(t, m) = t(t-1)...(t-m+1)/m! for t in any Q-algebra (ints, Fractions, field elements)."""
    if m < 0:
        return 0
    acc = 1
    for i in range(m):
        acc = acc * (t - i)
    fact = 1
    for i in range(2, m + 1):
        fact *= i
    if isinstance(acc, int):
        r = Fraction(acc, fact)
        return r.numerator if r.denominator == 1 else r
    return acc / fact


def binom(n: int, m: int) -> int:
    """Classical binomial for any integer n (negative n allowed), m >= 0."""
    if m < 0:
        return 0
    num = 1
    den = 1
    for i in range(m):
        num *= n - i
        den *= i + 1
    return num // den


@dataclass(frozen=True)
class QLucasDecomposition:
    n_prime: int
    n0: int
    m_prime: int
    m0: int
    d: int


def q_lucas(n: int, m: int, d: int) -> tuple[QLucasDecomposition, LaurentPoly]:
    """Split n, m by d and return binom(n', m') [n0 choose m0]_q reduced mod Phi_d."""
    if d < 1:
        raise ValueError("d must be a positive integer")
    if n < 0 or m < 0:
        raise ValueError("q_lucas needs natural n and m")
    n_prime, n0 = divmod(n, d)
    m_prime, m0 = divmod(m, d)
    dec = QLucasDecomposition(n_prime, n0, m_prime, m0, d)
    value = reduce_mod_cyclotomic(q_binomial(n0, m0) * binom(n_prime, m_prime), cyclotomic(d))
    return dec, value


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def base_digits(n: int, p: int) -> list[int]:
    """Little-endian base-p digits of n >= 0 (empty for n = 0)."""
    digits = []
    while n:
        n, r = divmod(n, p)
        digits.append(r)
    return digits


def lucas_binom_mod_p(n: int, m: int, p: int) -> int:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 0 or m < 0:
        raise ValueError("lucas_binom_mod_p needs natural n and m")
    nd, md = base_digits(n, p), base_digits(m, p)
    if len(md) > len(nd):
        return 0
    result = 1
    for i, mi in enumerate(md):
        result = result * binom(nd[i], mi) % p
        if not result:
            return 0
    return result % p
