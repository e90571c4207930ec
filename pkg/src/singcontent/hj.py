"""Hirzebruch-Jung continued fractions and the degree correction term."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from singcontent.cones import QuotientSingularityType
from singcontent.lattice import gcd


@dataclass(frozen=True)
class HJExpansion:
    """Numerical data of the minimal resolution of ``1/r(1, q)``.

    ``b`` are the negated self-intersections of the exceptional chain,
    ``alpha`` and ``beta`` the two recursions started from either end, and
    ``d`` the discrepancies ``-1 + (alpha_i + beta_i) / r``.
    """

    sigma: QuotientSingularityType
    b: tuple[int, ...]
    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    d: tuple[Fraction, ...]

    @property
    def k(self) -> int:
        return len(self.b)


def hj_expand(r: int, q: int) -> list[int]:
    """Expand ``r/q = b1 - 1/(b2 - 1/(... - 1/bk))`` with every ``bi >= 2``."""
    if not 0 < q < r or gcd(r, q) != 1:
        raise ValueError(f"need 0 < q < r with gcd(r, q) = 1, got r={r}, q={q}")
    b = []
    while q:
        c = -(-r // q)
        b.append(c)
        r, q = q, c * q - r
    return b


def hj_evaluate(b) -> Fraction:
    """Evaluate ``[b1, ..., bk]`` back to a fraction."""
    value = Fraction(b[-1])
    for c in reversed(b[:-1]):
        value = c - 1 / value
    return value


def hj_data(sigma: QuotientSingularityType) -> HJExpansion:
    r = sigma.r
    if r == 1:
        raise ValueError("smooth point has no exceptional curves")
    b = hj_expand(r, sigma.q)
    k = len(b)
    # alpha_{i+1} = b_i alpha_i - alpha_{i-1}, alpha_0 = 0, alpha_1 = 1
    alpha = [0, 1]
    for i in range(k - 1):
        alpha.append(b[i] * alpha[-1] - alpha[-2])
    alpha = alpha[1:]
    beta = [1, 0]
    for i in range(k - 1, 0, -1):
        beta.insert(0, b[i] * beta[0] - beta[1])
    beta = beta[:-1]
    d = tuple(Fraction(-1) + Fraction(x + y, r) for x, y in zip(alpha, beta))
    return HJExpansion(sigma, tuple(b), tuple(alpha), tuple(beta), d)


def a_correction(sigma: QuotientSingularityType) -> Fraction:
    """Contribution of a basket point to ``12 - n - K^2``."""
    data = hj_data(sigma)
    b, d, k = data.b, data.d, data.k
    total = Fraction(k + 1)
    total -= sum(di * di * bi for di, bi in zip(d, b))
    total += 2 * sum(d[i] * d[i + 1] for i in range(k - 1))
    return total
