"""Brute-force and floating-point oracles, independent of the library paths
they check."""

from fractions import Fraction
from itertools import product

import gmpy2
from gmpy2 import mpc, mpfr

from singcontent.cones import QuotientSingularityType
from singcontent.lattice import det

DEDEKIND_PREC = 200
RECONSTRUCTION_TOL = 1e-30


def segment_lattice_points(u, v):
    """Lattice points on the closed segment uv, by scanning its bounding box."""
    count = 0
    for x in range(min(u[0], v[0]), max(u[0], v[0]) + 1):
        for y in range(min(u[1], v[1]), max(u[1], v[1]) + 1):
            if (x - u[0]) * (v[1] - u[1]) == (y - u[1]) * (v[0] - u[0]):
                count += 1
    return count


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def explicit_height(u, v):
    """Height via a searched-for primitive normal of v - u."""
    dx, dy = v[0] - u[0], v[1] - u[1]
    for a, b in product(range(-abs(dy), abs(dy) + 1), range(-abs(dx), abs(dx) + 1)):
        if (a, b) != (0, 0) and a * dx + b * dy == 0 and _gcd(a, b) == 1:
            return abs(a * u[0] + b * u[1])
    raise AssertionError("no normal found")


def parallelepiped_type(u, v):
    """Read the group action off the lattice points of the half-open
    parallelogram spanned by u and v."""
    r = abs(det(u, v))
    xs = [0, u[0], v[0], u[0] + v[0]]
    ys = [0, u[1], v[1], u[1] + v[1]]
    points = []
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            s = Fraction(det((x, y), v), det(u, v))
            t = Fraction(det(u, (x, y)), det(u, v))
            if 0 <= s < 1 and 0 <= t < 1:
                points.append((s, t))
    assert len(points) == r
    if r == 1:
        return QuotientSingularityType(1, 0)
    s, _ = next(p for p in points if p[1] == Fraction(1, r))
    return QuotientSingularityType.of(r, int(s * r), 1)


def dedekind_float(r, a, b):
    """delta_m for 0 <= m < r at DEDEKIND_PREC bits, as complex numbers."""
    with gmpy2.context(gmpy2.get_context(), precision=DEDEKIND_PREC):
        two_pi = 2 * gmpy2.const_pi()
        tol = mpfr(2) ** (-DEDEKIND_PREC // 2)
        terms = []
        for k in range(r):
            e = gmpy2.exp(mpc(0, two_pi * k / r))
            ea, eb = e**a, e**b
            if abs(ea - 1) > tol and abs(eb - 1) > tol:
                terms.append((e, 1 / ((1 - ea) * (1 - eb))))
        out = []
        powers = [mpc(1)] * len(terms)
        for _ in range(r):
            total = mpc(0)
            for p, (_, c) in zip(powers, terms):
                total += p * c
            out.append(total / r)
            powers = [p * e for p, (e, _) in zip(powers, terms)]
        return out


def rationalize(x, max_denominator):
    """Closest fraction with bounded denominator (continued fractions)."""
    num, den = mpfr(x).as_integer_ratio()
    return Fraction(int(num), int(den)).limit_denominator(max_denominator)


def dedekind_oracle(sigma, weights=None):
    """Float route. Returns (rational table, max |imag|, max reconstruction error)."""
    a, b = weights or sigma.weights
    r = sigma.r
    values = dedekind_float(r, a, b)
    with gmpy2.context(gmpy2.get_context(), precision=DEDEKIND_PREC):
        table = [rationalize(v.real, 4 * r * r) for v in values]
        imag = max(abs(v.imag) for v in values)
        resid = max(abs(v.real - mpfr(q.numerator) / q.denominator) for v, q in zip(values, table))
    return table, float(imag), float(resid)


def weighted_monomials(weights, m):
    """Monomials of weighted degree m * sum(weights) in three variables."""
    l1, l2, l3 = weights
    total = m * (l1 + l2 + l3)
    count = 0
    for i in range(total // l1 + 1):
        for j in range((total - i * l1) // l2 + 1):
            if (total - i * l1 - j * l2) % l3 == 0:
                count += 1
    return count


def markov_triples(depth):
    """Sorted Markov triples within `depth` involution moves of (1, 1, 1)."""
    seen = {(1, 1, 1)}
    frontier = [(1, 1, 1)]
    for _ in range(depth):
        nxt = []
        for x, y, z in frontier:
            for t in ((3 * y * z - x, y, z), (x, 3 * x * z - y, z), (x, y, 3 * x * y - z)):
                key = tuple(sorted(t))
                if key not in seen:
                    seen.add(key)
                    nxt.append(key)
        frontier = nxt
    return seen


def evaluate_continued_fraction(b):
    value = Fraction(b[-1])
    for c in reversed(b[:-1]):
        value = c - 1 / value
    return value
