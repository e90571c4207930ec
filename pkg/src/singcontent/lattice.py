"""Exact two-dimensional lattice geometry.

Everything here works on Python integers (arbitrary precision) and
:class:`fractions.Fraction`; nothing ever touches floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

Rational = Fraction


class LatticePoint(NamedTuple):
    x: int
    y: int


class DualVector(NamedTuple):
    """An element of M = Hom(N, Z)."""

    x: int
    y: int

    def __call__(self, v) -> int:
        return self.x * v[0] + self.y * v[1]


class UnimodularMap(NamedTuple):
    """A linear automorphism of the lattice, as a 2x2 integer matrix."""

    a11: int
    a12: int
    a21: int
    a22: int

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "UnimodularMap":
        m = cls(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
        if m.det() not in (1, -1):
            raise ValueError(f"matrix {rows!r} is not unimodular")
        return m

    @classmethod
    def identity(cls) -> "UnimodularMap":
        return cls(1, 0, 0, 1)

    def det(self) -> int:
        return self.a11 * self.a22 - self.a12 * self.a21

    def __matmul__(self, other: "UnimodularMap") -> "UnimodularMap":
        return UnimodularMap(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def inverse(self) -> "UnimodularMap":
        d = self.det()
        return UnimodularMap(d * self.a22, -d * self.a12, -d * self.a21, d * self.a11)


def gcd(a: int, b: int) -> int:
    """Non-negative gcd, with ``gcd(0, 0) == 0``."""
    return math.gcd(a, b)


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def det(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


def is_primitive(v) -> bool:
    return gcd(v[0], v[1]) == 1


def primitive_part(v) -> LatticePoint:
    g = gcd(v[0], v[1])
    if g == 0:
        raise ValueError("the zero vector has no primitive part")
    return LatticePoint(v[0] // g, v[1] // g)


def lattice_length(u, v) -> int:
    """Lattice length of the segment from `u` to `v` (0 if they coincide)."""
    return gcd(v[0] - u[0], v[1] - u[1])


def lattice_height(u, v) -> int:
    """Lattice height of the segment `uv` above the origin.

    Computed as ``|det(u, v)| / lattice_length(u, v)``.
    """
    d = det(u, v)
    if d == 0:
        raise ValueError(f"{tuple(u)} and {tuple(v)} are linearly dependent")
    return abs(d) // lattice_length(u, v)


def primitive_normal(u, v) -> DualVector:
    """Primitive dual vector annihilating ``v - u``, positive on `u`.

    Requires the line through `u` and `v` to miss the origin.
    """
    dx, dy = v[0] - u[0], v[1] - u[1]
    g = gcd(dx, dy)
    if g == 0:
        raise ValueError("degenerate segment")
    h = DualVector(-dy // g, dx // g)
    value = h(u)
    if value == 0:
        raise ValueError("segment passes through the origin")
    return h if value > 0 else DualVector(-h.x, -h.y)


def apply_map(m: UnimodularMap, v) -> LatticePoint:
    return LatticePoint(m.a11 * v[0] + m.a12 * v[1], m.a21 * v[0] + m.a22 * v[1])


def map_to_e2(u) -> UnimodularMap:
    """A unimodular map sending the primitive vector `u` to (0, 1)."""
    g, s, t = xgcd(u[0], u[1])
    if g != 1:
        raise ValueError(f"{tuple(u)} is not primitive")
    # rows (u1, -u0) and (s, t) have determinant s*u0 + t*u1 = 1
    return UnimodularMap(u[1], -u[0], s, t)


def convex_hull(points: Iterable[Sequence]) -> list:
    """Vertices of the convex hull, counterclockwise, collinear points dropped.

    Works for any exact number type (ints, Fractions). Starts at the
    lexicographically smallest point.
    """
    pts = sorted(set((p[0], p[1]) for p in points))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def polygon_area(vertices: Sequence[Sequence]) -> Fraction:
    """Euclidean area of a polygon (shoelace), exact."""
    total = 0
    n = len(vertices)
    for i in range(n):
        total += det(vertices[i], vertices[(i + 1) % n])
    return abs(Fraction(total)) / 2


def format_rational(q) -> str:
    """Render as ``p/q`` in lowest terms (``q`` omitted when it is 1)."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def rational_to_json(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text)
