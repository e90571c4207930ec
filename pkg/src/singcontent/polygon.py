"""Fano polygons and the invariants of their toric surfaces.

Two independent routes are provided for the degree and the Hilbert series:
the singularity-content formulas, and direct geometry of the dual polygon
(area and lattice point counts of its dilations).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, NamedTuple, Optional, Sequence

from singcontent.cones import (
    Cone2,
    QuotientSingularityType,
    cone_to_type,
    is_T_singularity,
    milnor_number,
    residue,
    profile,
)
from singcontent.dedekind import PeriodicCorrection, periodic_correction
from singcontent.hj import a_correction
from singcontent.lattice import (
    LatticePoint,
    UnimodularMap,
    apply_map,
    convex_hull,
    det,
    gcd,
    is_primitive,
    polygon_area,
    xgcd,
)

BASKET_MODES = ("rotation", "dihedral", "multiset")


class PolygonError(ValueError):
    """Base class for invalid polygon input."""


class NotConvex(PolygonError):
    pass


class OriginNotInterior(PolygonError):
    pass


class NonPrimitiveVertex(PolygonError):
    pass


@dataclass(frozen=True)
class FanoPolygon:
    """Vertices listed counterclockwise. Use :func:`validate` to build one."""

    vertices: tuple[LatticePoint, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[LatticePoint, LatticePoint]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def transform(self, m: UnimodularMap) -> "FanoPolygon":
        return validate([apply_map(m, v) for v in self.vertices])

    def to_dict(self) -> dict:
        return {"vertices": [[v.x, v.y] for v in self.vertices]}


@dataclass(frozen=True)
class RationalPolygon:
    vertices: tuple[tuple[Fraction, Fraction], ...]

    def area(self) -> Fraction:
        return polygon_area(self.vertices)


@dataclass(frozen=True)
class PolygonSingularityContent:
    n: int
    basket: tuple[QuotientSingularityType, ...]

    def matches(self, other: "PolygonSingularityContent", mode: str = "rotation") -> bool:
        return self.n == other.n and baskets_equal(self.basket, other.basket, mode)

    def __str__(self) -> str:
        return f"({self.n}, {{{', '.join(str(s) for s in self.basket)}}})"


@dataclass(frozen=True)
class HilbertSeries:
    """``(1 + (K^2 - 2) t + t^2) / (1 - t)^3`` plus one periodic term per
    basket point, together with its first few coefficients."""

    degree: Fraction
    corrections: tuple[PeriodicCorrection, ...]
    expanded: tuple[int, ...] = field(default=())

    @property
    def leading_numerator(self) -> tuple[Fraction, Fraction, Fraction]:
        return (Fraction(1), self.degree - 2, Fraction(1))


class WPSWeights(NamedTuple):
    weights: tuple[int, int, int]
    index: int


def baskets_equal(b1: Sequence, b2: Sequence, mode: str = "rotation") -> bool:
    """Compare cyclic lists of residues.

    ``rotation``: equal up to cyclic shift. ``dihedral``: also allows
    reversal (orientation-reversing lattice maps). ``multiset``: ignores order.
    """
    if mode not in BASKET_MODES:
        raise ValueError(f"unknown basket comparison mode {mode!r}")
    b1, b2 = list(b1), list(b2)
    if len(b1) != len(b2):
        return False
    if mode == "multiset":
        return sorted(b1) == sorted(b2)
    if not b1:
        return True
    candidates = [b2, b2[::-1]] if mode == "dihedral" else [b2]
    k = len(b1)
    return any(b1 == c[i:] + c[:i] for c in candidates for i in range(k))


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def validate(points: Iterable[Sequence[int]]) -> FanoPolygon:
    """Build a :class:`FanoPolygon` from its vertices in any cyclic order.

    Points lying on an edge are dropped; a point strictly inside the hull
    means the input is not a vertex list of a convex polygon.
    """
    pts = [LatticePoint(int(p[0]), int(p[1])) for p in points]
    if len(pts) < 3:
        raise NotConvex(f"need at least 3 vertices, got {len(pts)}")
    hull = [LatticePoint(*p) for p in convex_hull(pts)]
    if len(hull) < 3:
        raise NotConvex("points are collinear")
    k = len(hull)
    for p in pts:
        if all(_cross(hull[i], hull[(i + 1) % k], p) > 0 for i in range(k)):
            raise NotConvex(f"{tuple(p)} lies strictly inside the convex hull")
    if not all(_cross(hull[i], hull[(i + 1) % k], (0, 0)) > 0 for i in range(k)):
        raise OriginNotInterior("origin is not in the strict interior")
    for v in hull:
        if not is_primitive(v):
            raise NonPrimitiveVertex(f"vertex {tuple(v)} is not primitive")
    # start at the first input point that survived as a vertex
    start = next(hull.index(p) for p in pts if p in hull)
    return FanoPolygon(tuple(hull[start:] + hull[:start]))


def edge_cones(p: FanoPolygon) -> list[Cone2]:
    return [Cone2(u, v) for u, v in p.edges()]


def singularity_content(p: FanoPolygon) -> PolygonSingularityContent:
    n = 0
    basket = []
    for c in edge_cones(p):
        sigma = cone_to_type(c)
        n += profile(sigma).n
        res = residue(sigma)
        if res is not None:
            basket.append(res)
    return PolygonSingularityContent(n, tuple(basket))


def degree(p: FanoPolygon) -> Fraction:
    sc = singularity_content(p)
    return 12 - sc.n - sum((a_correction(s) for s in sc.basket), Fraction(0))


def dual(p: FanoPolygon) -> RationalPolygon:
    """Polar polygon ``{u : u(v) >= -1 for all v in p}``, one vertex per edge."""
    out = []
    for (a, b), (c, d) in p.edges():
        D = a * d - b * c
        out.append((Fraction(b - d, D), Fraction(c - a, D)))
    return RationalPolygon(tuple(out))


def degree_oracle(p: FanoPolygon) -> Fraction:
    return 2 * dual(p).area()


def _count_dilation(vertices: Sequence[LatticePoint], box: Sequence, m: int) -> int:
    # lattice points u with u(v) >= -m for every vertex v, column by column
    xs = [m * q[0] for q in box]
    x_lo = -((-min(xs).numerator) // min(xs).denominator)
    x_hi = max(xs).numerator // max(xs).denominator
    total = 0
    for x in range(x_lo, x_hi + 1):
        lo, hi = None, None
        ok = True
        for vx, vy in vertices:
            rhs = -m - vx * x
            if vy > 0:
                bound = -(-rhs // vy)
                lo = bound if lo is None else max(lo, bound)
            elif vy < 0:
                bound = rhs // vy
                hi = bound if hi is None else min(hi, bound)
            elif rhs > 0:
                ok = False
                break
        if ok and lo is not None and hi is not None and hi >= lo:
            total += hi - lo + 1
    return total


def ehrhart_hilbert_oracle(p: FanoPolygon, terms: int) -> list[int]:
    """Number of lattice points in ``m * dual(p)`` for ``m = 0 .. terms-1``."""
    box = dual(p).vertices
    return [_count_dilation(p.vertices, box, m) for m in range(terms)]


def hilbert_series(p: FanoPolygon, terms: int = 12) -> HilbertSeries:
    k2 = degree(p)
    corrections = tuple(periodic_correction(s) for s in singularity_content(p).basket)
    coeffs = []
    for m in range(terms):
        value = comb(m + 2, 2) + (k2 - 2) * comb(m + 1, 2) + comb(m, 2)
        value += sum((c.coefficient(m) for c in corrections), Fraction(0))
        if value.denominator != 1:
            raise ArithmeticError(f"coefficient {m} of the Hilbert series is {value}")
        coeffs.append(int(value))
    return HilbertSeries(k2, corrections, tuple(coeffs))


def picard_rank(p: FanoPolygon) -> int:
    return len(p.vertices) - 2


def picard_bound(p: FanoPolygon) -> int:
    sc = singularity_content(p)
    return sc.n + len(sc.basket) - 2


def wps_weights(p: FanoPolygon) -> Optional[WPSWeights]:
    """Weights of the (fake) weighted projective plane of a triangle.

    ``index`` is the index of the sublattice spanned by the vertices; it is 1
    exactly for a genuine weighted projective plane.
    """
    if len(p.vertices) != 3:
        return None
    v1, v2, v3 = p.vertices
    minors = [det(v2, v3), det(v3, v1), det(v1, v2)]
    index = gcd(gcd(minors[0], minors[1]), minors[2])
    weights = tuple(sorted(abs(x) // index for x in minors))
    return WPSWeights(weights, index)  # type: ignore[arg-type]


def weighted_projective_polygon(weights: Sequence[int]) -> FanoPolygon:
    """Triangle of ``P(l1, l2, l3)`` whose vertices span the whole lattice."""
    lam = [int(x) for x in weights]
    if len(lam) != 3 or min(lam) < 1:
        raise ValueError("need three positive weights")
    if gcd(gcd(lam[0], lam[1]), lam[2]) != 1:
        raise ValueError(f"weights {lam} are not coprime")
    # column operations reduce lam to (0, 0, 1); U tracks them
    U = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    row = lam[:]

    def combine(i, j):
        # replace columns i, j so that row[i] = 0 and row[j] = gcd
        g, s, t = xgcd(row[j], row[i])
        ai, aj = row[i] // g, row[j] // g
        for r in U:
            ci, cj = r[i], r[j]
            r[j] = s * cj + t * ci
            r[i] = aj * ci - ai * cj
        row[j], row[i] = g, 0

    combine(0, 2)
    combine(1, 2)
    return validate([(U[i][0], U[i][1]) for i in range(3)])


def noether_terms(p: FanoPolygon) -> tuple[Fraction, int, int]:
    """``(K^2, rho, sum of Milnor numbers)`` for a polygon with empty basket."""
    sc = singularity_content(p)
    if sc.basket:
        raise ValueError("Noether identity needs an empty residual basket")
    mu = sum(milnor_number(cone_to_type(c)) for c in edge_cones(p))
    return degree(p), picard_rank(p), mu


def noether_check(p: FanoPolygon) -> bool:
    k2, rho, mu = noether_terms(p)
    return k2 + rho + mu == 10


def is_T_fan(p: FanoPolygon) -> bool:
    return all(is_T_singularity(cone_to_type(c)) for c in edge_cones(p))


def polygon_from_json(text: str) -> FanoPolygon:
    """Parse ``{"vertices": [[x, y], ...]}`` and validate."""
    data = json.loads(text)
    if not isinstance(data, dict) or "vertices" not in data:
        raise PolygonError('expected an object with a "vertices" list')
    verts = data["vertices"]
    if not isinstance(verts, list):
        raise PolygonError('"vertices" must be a list')
    pts = []
    for v in verts:
        if (
            not isinstance(v, list)
            or len(v) != 2
            or not all(isinstance(c, int) and not isinstance(c, bool) for c in v)
        ):
            raise PolygonError(f"vertex {v!r} is not a pair of integers")
        pts.append(v)
    return validate(pts)


def polygon_to_json(p: FanoPolygon) -> str:
    return json.dumps(p.to_dict())
