"""Dedekind sums of cyclic quotient singularities and the periodic
Hilbert series corrections they feed.

The sums are computed exactly, without cyclotomic arithmetic. For an r-th
root of unity ``z != 1``::

    1/(1 - z) = -(1/r) * sum(k * z**k for k in range(r))

so each summand becomes a double polynomial sum in ``eps``, and sums of
``eps**t`` over the admissible roots follow from inclusion-exclusion over
the subgroups ``{eps**a == 1}`` and ``{eps**b == 1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from singcontent.cones import QuotientSingularityType
from singcontent.lattice import gcd

# The anticanonical sheaf is locally the character of weight -(a+b), so the
# correction reads delta at -(a+b)*i. Checked against lattice point counts
# on P(1,1,3): the opposite sign puts the -1/3 on t^2 instead of t^1.
INDEX_SIGN = -1


@dataclass(frozen=True)
class DedekindTable:
    sigma: QuotientSingularityType
    weights: tuple[int, int]
    delta: tuple[Fraction, ...]

    def __getitem__(self, m: int) -> Fraction:
        return self.delta[m % len(self.delta)]


@dataclass(frozen=True)
class PeriodicCorrection:
    """``Q(t) = (sum c_i t^i) / (1 - t^r)`` for one basket point."""

    sigma: QuotientSingularityType
    numerator: tuple[Fraction, ...]

    @property
    def period(self) -> int:
        return len(self.numerator)

    def coefficient(self, m: int) -> Fraction:
        return self.numerator[m % self.period]

    def expand(self, terms: int) -> list[Fraction]:
        return [self.coefficient(m) for m in range(terms)]


def _root_sum(r: int, subgroups: tuple[tuple[int, int], ...], t: int) -> int:
    # sum of eps**t over admissible eps, via signed subgroup sizes
    total = 0
    for size, sign in subgroups:
        if t % size == 0:
            total += sign * size
    return total


@lru_cache(maxsize=None)
def _delta_table(r: int, a: int, b: int) -> tuple[Fraction, ...]:
    ga, gb = gcd(r, a), gcd(r, b)
    gab = gcd(ga, b)
    subgroups = ((r, 1), (ga, -1), (gb, -1), (gab, 1))

    k_by_residue = [0] * r
    for k in range(r):
        k_by_residue[(b * k) % r] += k
    weight = [0] * r
    for j in range(1, r):
        aj = a * j
        for s in range(r):
            kb = k_by_residue[(s - aj) % r]
            if kb:
                weight[s] += j * kb

    root_sums = [_root_sum(r, subgroups, t) for t in range(r)]
    denom = r**3
    table = []
    for m in range(r):
        num = 0
        for s in range(r):
            if weight[s]:
                num += weight[s] * root_sums[(m + s) % r]
        table.append(Fraction(num, denom))
    return tuple(table)


def dedekind_sums(sigma: QuotientSingularityType, weights: tuple[int, int] | None = None) -> DedekindTable:
    """Exact ``delta_m`` for ``0 <= m < r``.

    `weights` selects the representative ``1/r(a, b)``; it defaults to the
    canonical ``(1, q)``. Any representative of the same singularity gives
    the same correction series.
    """
    a, b = weights if weights is not None else sigma.weights
    r = sigma.r
    if QuotientSingularityType.of(r, a, b) != sigma:
        raise ValueError(f"1/{r}({a},{b}) is not a representative of {sigma}")
    return DedekindTable(sigma, (a, b), _delta_table(r, a % r, b % r))


def periodic_correction(
    sigma: QuotientSingularityType,
    weights: tuple[int, int] | None = None,
    sign: int = INDEX_SIGN,
) -> PeriodicCorrection:
    table = dedekind_sums(sigma, weights)
    a, b = table.weights
    step = sign * (a + b)
    d0 = table[0]
    return PeriodicCorrection(sigma, tuple(table[step * i] - d0 for i in range(sigma.r)))
