"""Exact polynomial arithmetic: Gaussian binomials, the q-Bell numbers,
and the joint area/bounce distribution tables.

Univariate polynomials are tuples of arbitrary-precision integer
coefficients in the variable q, constant term first, no trailing zeros.
The empty tuple is the zero polynomial.

The width function here drives everything downstream: width(n) is both the
degree of the q-Bell polynomial and the length of the interval of realized
area + bounce totals on paths of semilength n, so width(n) + 1 counts the
distinct totals as well as the nonzero q-Bell coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .paths import iter_area_bounce


# Reference values for the distinct-total count at n = 0..19.
DISTINCT_AB_FIRST_TWENTY = (
    1, 1, 1, 2, 3, 5, 8, 11, 15, 20,
    26, 32, 39, 47, 56, 66, 76, 87, 99, 112,
)


def poly_add(a, b) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_mul(a, b) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def poly_eval(a, q):
    out = 0
    for c in reversed(a):
        out = out * q + c
    return out


def poly_to_string(a, var="q") -> str:
    if not a:
        return "0"
    terms = []
    for d, c in enumerate(a):
        if not c:
            continue
        if d == 0:
            terms.append(str(c))
        elif d == 1:
            terms.append(f"{var}" if c == 1 else f"{c}*{var}")
        else:
            terms.append(f"{var}^{d}" if c == 1 else f"{c}*{var}^{d}")
    return " + ".join(terms)


@lru_cache(maxsize=None)
def q_binomial(m: int, k: int) -> tuple:
    """Gaussian polynomial, by the Pascal-type recurrence in integer
    arithmetic.  Out-of-range k gives the zero polynomial.  Degree is
    k(m - k) and every coefficient in between is positive."""
    if k < 0 or k > m:
        return ()
    if k == 0 or k == m:
        return (1,)
    left = q_binomial(m - 1, k - 1)
    right = q_binomial(m - 1, k)
    return poly_add(left, (0,) * k + right)


@lru_cache(maxsize=None)
def q_bell(n: int) -> tuple:
    """Johnson's q-analog of the Bell numbers: the weight-1 specialization
    is the Bell number, and the nonzero coefficients sit in degrees
    0..width(n) with no gaps."""
    if n == 0:
        return (1,)
    total = ()
    for k in range(n):
        total = poly_add(total, poly_mul(q_binomial(n - 1, k), q_bell(k)))
    return total


def bell_number(n: int) -> int:
    """Classical Bell number by the binomial recursion; kept independent
    of q_bell as its cross-check."""
    values = [1]
    for m in range(1, n + 1):
        values.append(sum(math.comb(m - 1, k) * values[k] for k in range(m)))
    return values[n]


@lru_cache(maxsize=None)
def ab_interval_width(n: int) -> int:
    """max over splits n = k + rest of (k-1)(n-k) + width(rest)."""
    if n == 0:
        return 0
    return max(
        (k - 1) * (n - k) + ab_interval_width(n - k) for k in range(1, n + 1)
    )


@lru_cache(maxsize=None)
def minimizing_composition(n: int) -> tuple:
    """A composition attaining ab_interval_width(n); smallest leading part
    on ties, so the result is deterministic."""
    if n == 0:
        return ()
    best_k, best_v = None, None
    for k in range(1, n + 1):
        v = (k - 1) * (n - k) + ab_interval_width(n - k)
        if best_v is None or v > best_v:
            best_k, best_v = k, v
    return (best_k,) + minimizing_composition(n - best_k)


def distinct_ab_count(n: int) -> int:
    """Number of distinct area + bounce totals on paths of semilength n;
    equals the nonzero coefficient count of the q-Bell polynomial."""
    return ab_interval_width(n) + 1


# -- bivariate tables ------------------------------------------------------


@dataclass(frozen=True)
class BivariateTable:
    """Dense square table of counts, rows indexed by area, columns by
    bounce, both 0..C(n,2)."""

    n: int
    rows: tuple  # tuple of tuples of ints

    @staticmethod
    def from_pairs(n: int, pairs) -> "BivariateTable":
        size = math.comb(n, 2) + 1
        grid = [[0] * size for _ in range(size)]
        for a, b in pairs:
            grid[a][b] += 1
        return BivariateTable(n, tuple(tuple(row) for row in grid))

    def at(self, a: int, b: int) -> int:
        return self.rows[a][b]

    def total(self) -> int:
        return sum(map(sum, self.rows))

    def is_symmetric(self) -> bool:
        size = len(self.rows)
        return all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(size)
            for j in range(i + 1, size)
        )

    def transpose(self) -> "BivariateTable":
        return BivariateTable(self.n, tuple(zip(*self.rows)))

    def support_totals(self):
        """(min, max) of a + b over nonzero entries; None when empty."""
        totals = [
            i + j
            for i, row in enumerate(self.rows)
            for j, v in enumerate(row)
            if v
        ]
        if not totals:
            return None
        return min(totals), max(totals)

    def evaluate(self, q, t):
        return sum(
            v * q**i * t**j
            for i, row in enumerate(self.rows)
            for j, v in enumerate(row)
            if v
        )

    def to_csv(self) -> str:
        size = len(self.rows)
        lines = ["area\\bounce," + ",".join(str(j) for j in range(size))]
        for i, row in enumerate(self.rows):
            lines.append(f"{i}," + ",".join(str(v) for v in row))
        return "\n".join(lines) + "\n"


def qt_catalan(n: int) -> BivariateTable:
    """Joint distribution of (area, bounce) over all paths of semilength n."""
    return BivariateTable.from_pairs(n, iter_area_bounce(n))


def qt_flip_closure(n: int) -> BivariateTable:
    """Joint distribution over the union of both flip sides; symmetric by
    the flip bijection."""
    from .bijection import flip_sets

    area_side, bounce_side = flip_sets(n)
    union = set(area_side) | set(bounce_side)
    return BivariateTable.from_pairs(n, ((p.area(), p.bounce()) for p in union))
