"""Chebyshev polynomials and the Möbius values μ(a^i, c^j) in Λ*."""

from __future__ import annotations

from dataclasses import dataclass

from .incidence import IntervalCache
from .poset import make_lambda
from .ratfn import Polynomial


def chebyshev_T(n):
    """T_n with T_0 = 1, T_1 = x, T_n = 2x T_{n-1} - T_{n-2}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    prev, cur = Polynomial([1]), Polynomial([0, 1])
    if n == 0:
        return prev
    two_x = Polynomial([0, 2])
    for _ in range(n - 1):
        prev, cur = cur, two_x * cur - prev
    return cur


@dataclass(frozen=True)
class LambdaCheck:
    i: int
    j: int
    mu: int
    coeff: int

    @property
    def agree(self):
        return self.mu == self.coeff

    def cell(self):
        return f"{self.mu}/{self.coeff}/{'OK' if self.agree else 'MISMATCH'}"


def check_lambda_conjecture(i, j, cache=None):
    """Compare brute-force μ(a^i, c^j) in Λ* with [x^{j-i}] T_{i+j}."""
    if not 0 <= i <= j:
        raise ValueError("need 0 <= i <= j")
    cache = cache or IntervalCache(make_lambda())
    P = cache.poset
    a, c = P.element("a"), P.element("c")
    mu = cache.mobius((a,) * i, (c,) * j)
    return LambdaCheck(i, j, mu, chebyshev_T(i + j)[j - i])


def lambda_table(max_j):
    cache = IntervalCache(make_lambda())
    return [[check_lambda_conjecture(i, j, cache) for j in range(i, max_j + 1)] for i in range(max_j + 1)]


def format_lambda_table(table, max_j):
    width = 14
    lines = ["i\\j".ljust(4) + "".join(str(j).rjust(width) for j in range(max_j + 1))]
    for i, row in enumerate(table):
        cells = [""] * i + [r.cell() for r in row]
        lines.append(str(i).ljust(4) + "".join(c.rjust(width) for c in cells))
    return lines
