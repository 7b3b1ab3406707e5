"""Partitions, the bijections behind the q-binomial identities, and brute-force counting oracles."""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import NotInRectangle, NotPrime, PreconditionViolation, TooLarge
from .exactalg import LaurentPoly
from .qnum import is_prime

__all__ = [
    "Partition",
    "conjugate",
    "partitions_in_rectangle",
    "enumerate_in_rectangle",
    "pascal_bijection",
    "pascal_bijection_inverse",
    "partition_to_subset",
    "subset_to_partition",
    "BijectionWitness",
    "qbinommult_bijection",
    "qbinommult_inverse",
    "bijection_trace",
    "count_matrices",
    "count_subspaces",
    "count_subspaces_by_span",
    "enumeration_budget",
    "MAX_MATRIX_CELLS",
]

MAX_MATRIX_CELLS = 20


def enumeration_budget() -> int:
    """Cap on enumerated objects, read from QINTVAL_MAX_ENUM (default 10^6)."""
    raw = os.environ.get("QINTVAL_MAX_ENUM", "")
    try:
        return int(raw) if raw.strip() else 10**6
    except ValueError:
        return 10**6


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; trailing zeros are dropped."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def rectangle(cls, width: int, height: int) -> "Partition":
        """width^height, i.e. `height` rows of length `width`."""
        if width <= 0 or height <= 0:
            return cls()
        return cls([width] * height)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        body = text.strip().strip("()[]").strip()
        if not body:
            return cls()
        return cls(int(x) for x in body.replace(" ", ",").split(",") if x)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, r: int) -> int:
        """1-based row length, 0 past the last row."""
        return self[r - 1] if 1 <= r <= len(self) else 0

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p >= c) for c in range(1, self[0] + 1))

    def fits_in(self, width: int, height: int) -> bool:
        """Is self contained in width^height?"""
        if not self:
            return True
        return len(self) <= height and self[0] <= width

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(self[r] >= p for r, p in enumerate(other))

    def padded(self, n: int) -> list[int]:
        return list(self) + [0] * (n - len(self))

    def __str__(self):
        return "(" + ",".join(map(str, self)) + ")"

    def __repr__(self):
        return f"Partition({str(self)})"


def conjugate(lam: Iterable[int]) -> Partition:
    return Partition(lam).conjugate()


def partitions_in_rectangle(width: int, height: int) -> Iterator[Partition]:
    """Every partition with at most `height` rows and parts at most `width`."""

    def rec(rows_left: int, cap: int, acc: list[int]):
        yield Partition(acc)
        if rows_left == 0:
            return
        for p in range(1, cap + 1):
            acc.append(p)
            yield from rec(rows_left - 1, p, acc)
            acc.pop()

    if width <= 0 or height <= 0:
        yield Partition()
        return
    yield from rec(height, width, [])


def enumerate_in_rectangle(width: int, height: int) -> LaurentPoly:
    """sum of q^|lambda| over lambda in width^height, by listing them."""
    counts: dict[int, int] = {}
    for lam in partitions_in_rectangle(width, height):
        counts[lam.size] = counts.get(lam.size, 0) + 1
    return LaurentPoly(counts)


def _require_in(lam: Partition, width: int, height: int, name: str = "partition"):
    if width < 0 or height < 0 or not lam.fits_in(width, height):
        raise NotInRectangle(f"{name} {lam} is not inside {width}^{height}")


# -- Pascal recursion and subsets -------------------------------------------------


def pascal_bijection(lam, n: int, k: int) -> tuple[int, Partition]:
    """Split lambda in (n-k)^k according to whether it has k rows; |lambda| = k(1-i) + |mu|."""
    lam = Partition(lam)
    _require_in(lam, n - k, k)
    if len(lam) == k:
        return 0, Partition(p - 1 for p in lam)
    return 1, lam


def pascal_bijection_inverse(i: int, mu, n: int, k: int) -> Partition:
    mu = Partition(mu)
    if i == 0:
        _require_in(mu, n - k - 1, k)
        return Partition(p + 1 for p in mu.padded(k))
    if i == 1:
        _require_in(mu, n - k, k - 1)
        return mu
    raise ValueError("i must be 0 or 1")


def partition_to_subset(lam, n: int, k: int) -> frozenset[int]:
    """Indices of the north steps of the border path of lambda inside (n-k)^k."""
    lam = Partition(lam)
    _require_in(lam, n - k, k)
    # going from the southwest corner, row r (counted from the top) is climbed
    # after lam_r east steps and k - r earlier north steps
    return frozenset(lam.part(r) + (k - r + 1) for r in range(1, k + 1))


def subset_to_partition(S: Iterable[int], n: int, k: int) -> Partition:
    s = sorted(S)
    if len(s) != k or len(set(s)) != k or (s and (s[0] < 1 or s[-1] > n)):
        raise NotInRectangle(f"{sorted(S)} is not a {k}-subset of 1..{n}")
    # the t-th smallest north step climbs row k - t + 1
    return Partition(s[k - r] - (k - r + 1) for r in range(1, k + 1))


# -- the product bijection -------------------------------------------------------


@dataclass(frozen=True)
class BijectionWitness:
    k: int
    alpha: Partition
    beta: Partition
    gamma: Partition
    c: tuple[int, ...]

    def weight(self, i: int, j: int) -> int:
        return (self.k - i) * (self.k - j) + self.alpha.size + self.beta.size + self.gamma.size


def _check_bijection_input(n: int, i: int, j: int, lam: Partition, mu: Partition):
    if i < j:
        raise PreconditionViolation("the product bijection needs i >= j")
    if min(n, i, j) < 0 or i > n:
        raise PreconditionViolation("need 0 <= j <= i <= n")
    if not lam.fits_in(n - i, i):
        raise PreconditionViolation(f"lambda {lam} is not inside {n - i}^{i}")
    if not mu.fits_in(n - j, j):
        raise PreconditionViolation(f"mu {mu} is not inside {n - j}^{j}")


def _forward(n: int, i: int, j: int, lam: Partition, mu: Partition):
    k = max(m for m in range(i, i + j + 1) if mu.contains(Partition.rectangle(m - j, m - i)))
    gamma = conjugate(mu.padded(j)[k - i:])
    c = []
    for s in range(1, k - i + 1):
        bound = mu.part(s) - (i - j + s)
        c.append(next(t for t in range(0, i + 1) if lam.part(t + 1) <= bound))
    beta = conjugate(reversed(c))
    alpha: list[int] = []
    prev = 0
    for s, cs in enumerate(c, start=1):
        alpha.extend(lam.part(r) - (k - i - s + 1) for r in range(prev + 1, cs + 1))
        alpha.append(mu.part(s) - (k - j))
        prev = cs
    alpha.extend(lam.part(r) for r in range(prev + 1, i + 1))
    return k, alpha, beta, gamma, tuple(c)


def qbinommult_bijection(n: int, i: int, j: int, lam, mu) -> BijectionWitness:
    """(lambda, mu) with lambda in (n-i)^i, mu in (n-j)^j  ->  (k, alpha, beta, gamma).

    Weight law: |lambda| + |mu| = (k-i)(k-j) + |alpha| + |beta| + |gamma|.
    """
    lam, mu = Partition(lam), Partition(mu)
    _check_bijection_input(n, i, j, lam, mu)
    k, alpha, beta, gamma, c = _forward(n, i, j, lam, mu)
    return BijectionWitness(k, Partition(alpha), beta, gamma, c)


def qbinommult_inverse(n: int, i: int, j: int, w: BijectionWitness) -> tuple[Partition, Partition]:
    """Recover (lambda, mu) from a witness."""
    k = w.k
    if i < j or not (i <= k <= i + j):
        raise PreconditionViolation("need i >= j and k in [i, i+j]")
    if not (w.alpha.fits_in(n - k, k) and w.beta.fits_in(k - i, i) and w.gamma.fits_in(i + j - k, k - j)):
        raise NotInRectangle("witness partitions are outside their rectangles")
    c = list(reversed(w.beta.conjugate().padded(k - i)))
    alpha = w.alpha.padded(k)
    mu_head = [0] * (k - i)
    lam: list[int] = []
    pos = 0
    for s, cs in enumerate(c, start=1):
        while len(lam) < cs:
            lam.append(alpha[pos] + (k - i - s + 1))
            pos += 1
        mu_head[s - 1] = alpha[pos] + (k - j)
        pos += 1
    lam.extend(alpha[pos:])
    mu = mu_head + w.gamma.conjugate().padded(i + j - k)
    return Partition(lam), Partition(mu)


def bijection_trace(n: int, i: int, j: int, lam, mu) -> list[str]:
    """Human readable steps of the product bijection, one per line."""
    w = qbinommult_bijection(n, i, j, lam, mu)
    lines = [f"n={n} i={i} j={j} lambda={Partition(lam)} mu={Partition(mu)}", f"k={w.k}", f"gamma={w.gamma}"]
    lines += [f"c_{s}={cs}" for s, cs in enumerate(w.c, start=1)]
    lines += [f"beta={w.beta}", f"alpha={w.alpha}"]
    return lines


# -- counting oracles ---------------------------------------------------------------


def count_matrices(j: int, k: int, i: int) -> int:
    """Number of j x k 0-1 matrices with i ones and no zero row or column."""
    if min(j, k, i) < 0:
        return 0
    # i ones cover at most i rows and i columns
    if i < max(j, k) or i > j * k:
        return 0
    if j * k > MAX_MATRIX_CELLS:
        raise TooLarge(f"{j}x{k} matrices exceed the {MAX_MATRIX_CELLS}-cell bound")
    total = 0
    for ones in itertools.combinations(range(j * k), i):
        rows = {c // k for c in ones} if k else set()
        cols = {c % k for c in ones} if k else set()
        if len(rows) == j and len(cols) == k:
            total += 1
    return total


def _rref_mod_p(rows: list[list[int]], p: int) -> tuple[tuple[int, ...], ...]:
    m = [r[:] for r in rows]
    ncols = len(m[0]) if m else 0
    pivot_row = 0
    for col in range(ncols):
        sel = next((r for r in range(pivot_row, len(m)) if m[r][col] % p), None)
        if sel is None:
            continue
        m[pivot_row], m[sel] = m[sel], m[pivot_row]
        inv = pow(m[pivot_row][col], -1, p)
        m[pivot_row] = [(v * inv) % p for v in m[pivot_row]]
        for r in range(len(m)):
            if r != pivot_row and m[r][col] % p:
                f = m[r][col]
                m[r] = [(a - f * b) % p for a, b in zip(m[r], m[pivot_row])]
        pivot_row += 1
    return tuple(tuple(r) for r in m[:pivot_row])


def count_subspaces(p: int, n: int, k: int) -> int:
    """k-dimensional subspaces of F_p^n, counted by listing their reduced row-echelon bases.

    Each candidate (pivot columns plus free entries) is row-reduced again and
    kept only if it is its own echelon form of rank k, so no formula for the
    count is assumed.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 0 or k > n:
        return 0
    if k == 0:
        return 1
    budget = enumeration_budget()
    found: set = set()
    work = 0
    for pivots in itertools.combinations(range(n), k):
        # free slots: right of the row's pivot, outside any pivot column
        slots = [(r, c) for r in range(k) for c in range(pivots[r] + 1, n) if c not in pivots]
        work += p ** len(slots)
        if work > budget:
            raise TooLarge(f"more than {budget} echelon forms for p={p}, n={n}, k={k}")
        for values in itertools.product(range(p), repeat=len(slots)):
            rows = [[0] * n for _ in range(k)]
            for r, c in enumerate(pivots):
                rows[r][c] = 1
            for (r, c), v in zip(slots, values):
                rows[r][c] = v
            form = _rref_mod_p(rows, p)
            if len(form) == k and form == tuple(map(tuple, rows)):
                found.add(form)
    return len(found)


def count_subspaces_by_span(p: int, n: int, k: int) -> int:
    """Same count, built by growing spans one vector at a time (no echelon forms)."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 0 or k > n:
        return 0
    if p**n > enumeration_budget():
        raise TooLarge(f"F_{p}^{n} has more than {enumeration_budget()} vectors")
    vectors = list(itertools.product(range(p), repeat=n))
    layer = {frozenset([(0,) * n])}
    for _ in range(k):
        nxt = set()
        for space in layer:
            for v in vectors:
                if v in space:
                    continue
                grown = {tuple((a + c * b) % p for a, b in zip(w, v)) for w in space for c in range(p)}
                nxt.add(frozenset(grown))
        layer = nxt
    return len(layer)
