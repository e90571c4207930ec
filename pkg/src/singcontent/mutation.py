"""Combinatorial mutations of Fano polygons and mutation-orbit exploration.

A mutation is given by a primitive grading ``h`` in the dual lattice and a
primitive factor segment ``conv{0, f}`` with ``h(f) = 0``. Slices at
negative height shrink by ``-k`` copies of the factor, slices at
non-negative height grow by ``k`` copies.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from singcontent.lattice import (
    DualVector,
    LatticePoint,
    convex_hull,
    gcd,
    is_primitive,
    xgcd,
)
from singcontent.polygon import (
    FanoPolygon,
    PolygonError,
    PolygonSingularityContent,
    degree,
    singularity_content,
    validate,
)

log = logging.getLogger(__name__)


class InvariantViolation(RuntimeError):
    """A mutation changed singularity content or degree; this is a bug."""


@dataclass(frozen=True)
class Factor:
    h: DualVector
    f: LatticePoint

    def __post_init__(self):
        object.__setattr__(self, "h", DualVector(*self.h))
        object.__setattr__(self, "f", LatticePoint(*self.f))
        if not is_primitive(self.h) or not is_primitive(self.f):
            raise ValueError(f"factor data {self.h}, {self.f} must be primitive")
        if self.h(self.f) != 0:
            raise ValueError(f"h={tuple(self.h)} does not vanish on f={tuple(self.f)}")

    @classmethod
    def for_grading(cls, h) -> "Factor":
        return cls(DualVector(*h), LatticePoint(-h[1], h[0]))

    def inverse(self) -> "Factor":
        return Factor(DualVector(-self.h.x, -self.h.y), self.f)


def _slice_interval(p: FanoPolygon, base, f, k):
    """Rational parameter range ``{lam : base + lam*f in p}`` or None."""
    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None
    for a, b in p.edges():
        nx, ny = a[1] - b[1], b[0] - a[0]  # inner normal for ccw order
        c = nx * a[0] + ny * a[1]
        const = nx * base[0] + ny * base[1] - c
        slope = nx * f[0] + ny * f[1]
        # const + lam * slope >= 0
        if slope > 0:
            bound = Fraction(-const, slope)
            lo = bound if lo is None or bound > lo else lo
        elif slope < 0:
            bound = Fraction(-const, slope)
            hi = bound if hi is None or bound < hi else hi
        elif const < 0:
            return None
    if lo is None or hi is None or lo > hi:
        return None
    return lo, hi


def mutate(p: FanoPolygon, fac: Factor) -> Optional[FanoPolygon]:
    """``mut_h(p, conv{0, f})``, or None when the mutation does not exist."""
    h, f = fac.h, fac.f
    heights = [h(v) for v in p.vertices]
    h_min = min(heights)
    g, s, t = xgcd(h.x, h.y)
    points: list[tuple] = []

    for k in range(h_min, 0):
        base = (k * s, k * t)
        has_vertex = k in heights
        interval = _slice_interval(p, base, f, k)
        if interval is None:
            if has_vertex:
                raise ArithmeticError("vertex missing from its own slice")
            continue
        lo, hi = interval
        first = -((-lo.numerator) // lo.denominator)
        last = hi.numerator // hi.denominator
        if last - first < -k:
            if has_vertex:
                return None
            continue
        for lam in (first, last + k):
            points.append((base[0] + lam * f[0], base[1] + lam * f[1]))

    upper = [v for v, hv in zip(p.vertices, heights) if hv >= 0]
    for (a, b), ha, hb in zip(p.edges(), heights, heights[1:] + heights[:1]):
        if (ha < 0 < hb) or (hb < 0 < ha):
            lam = Fraction(-ha, hb - ha)
            upper.append((a[0] + lam * (b[0] - a[0]), a[1] + lam * (b[1] - a[1])))
    for x in upper:
        hx = h(x)
        points.append(tuple(x))
        points.append((x[0] + hx * f[0], x[1] + hx * f[1]))

    hull = convex_hull(points)
    if any(Fraction(c).denominator != 1 for v in hull for c in v):
        raise ArithmeticError(f"mutation of {p.vertices} by {fac} has a non-lattice vertex")
    try:
        return validate([(int(x), int(y)) for x, y in hull])
    except PolygonError as exc:
        raise ArithmeticError(f"mutation of {p.vertices} by {fac} is not Fano: {exc}") from exc


def candidate_factors(p: FanoPolygon) -> list[Factor]:
    """Primitive factors, one per edge inner normal, whose mutation exists."""
    out = []
    for a, b in p.edges():
        nx, ny = a[1] - b[1], b[0] - a[0]
        g = gcd(nx, ny)
        fac = Factor.for_grading((nx // g, ny // g))
        if mutate(p, fac) is not None:
            out.append(fac)
    return out


@dataclass(frozen=True, order=True)
class NormalForm:
    """Canonical vertex list of a polygon's GL(2, Z) class."""

    key: tuple[int, ...]
    vertices: tuple[LatticePoint, ...] = field(compare=False)

    def polygon(self) -> FanoPolygon:
        return validate(self.vertices)


def _hnf_rows(cols) -> tuple[LatticePoint, ...]:
    # row-style Hermite normal form of the 2 x n matrix with these columns
    r1 = [c[0] for c in cols]
    r2 = [c[1] for c in cols]
    g, s, t = xgcd(r1[0], r2[0])
    a, b = r1[0] // g, r2[0] // g
    r1, r2 = [s * x + t * y for x, y in zip(r1, r2)], [-b * x + a * y for x, y in zip(r1, r2)]
    k = next(i for i, y in enumerate(r2) if y)
    if r2[k] < 0:
        r2 = [-y for y in r2]
    q = r1[k] // r2[k]
    r1 = [x - q * y for x, y in zip(r1, r2)]
    return tuple(LatticePoint(x, y) for x, y in zip(r1, r2))


def normal_form(p: FanoPolygon) -> NormalForm:
    vs = list(p.vertices)
    n = len(vs)
    best = None
    for start in range(n):
        for step in (1, -1):
            cols = [vs[(start + step * i) % n] for i in range(n)]
            cand = _hnf_rows(cols)
            key = tuple(c for v in cand for c in v)
            if best is None or key < best[0]:
                best = (key, cand)
    assert best is not None
    return NormalForm(best[0], best[1])


def same_content(p: FanoPolygon, q: FanoPolygon, mode: str = "dihedral") -> bool:
    """True iff the singularity contents agree; False certifies that `p`
    and `q` are not mutation equivalent."""
    return singularity_content(p).matches(singularity_content(q), mode)


@dataclass
class OrbitNode:
    polygon: FanoPolygon
    normal_form: NormalForm
    depth: int


@dataclass
class OrbitEdge:
    source: tuple[int, ...]
    target: tuple[int, ...]
    factor: Factor


@dataclass
class MutationGraph:
    root: tuple[int, ...]
    content: PolygonSingularityContent
    degree: Fraction
    nodes: dict[tuple[int, ...], OrbitNode] = field(default_factory=dict)
    edges: list[OrbitEdge] = field(default_factory=list)
    max_depth: int = 0
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.nodes)


def explore_orbit(p: FanoPolygon, max_depth: int, max_nodes: int = 10_000) -> MutationGraph:
    """Breadth-first mutation orbit of `p`, up to `max_depth` steps.

    Every edge is checked to preserve singularity content (up to rotation of
    the basket) and degree; a violation raises :class:`InvariantViolation`.
    Hitting `max_nodes` is not an error: the graph is flagged truncated.
    """
    if max_depth < 0 or max_nodes < 1:
        raise ValueError("max_depth must be >= 0 and max_nodes >= 1")
    root_nf = normal_form(p)
    sc = singularity_content(p)
    k2 = degree(p)
    graph = MutationGraph(root_nf.key, sc, k2, max_depth=max_depth)
    graph.nodes[root_nf.key] = OrbitNode(p, root_nf, 0)
    seen_edges: set = set()
    frontier = [root_nf.key]
    for depth in range(max_depth):
        next_frontier = []
        for key in sorted(frontier):
            node = graph.nodes[key]
            src_sc = singularity_content(node.polygon)
            for fac in candidate_factors(node.polygon):
                q = mutate(node.polygon, fac)
                assert q is not None
                q_sc = singularity_content(q)
                if not q_sc.matches(src_sc, "rotation") or degree(q) != k2:
                    raise InvariantViolation(
                        f"mutation of {node.polygon.vertices} by h={tuple(fac.h)}, "
                        f"f={tuple(fac.f)} gives {q.vertices} with content {q_sc} "
                        f"and degree {degree(q)}; expected {src_sc} and {k2}"
                    )
                if not q_sc.matches(sc, "dihedral"):
                    raise InvariantViolation(f"{q.vertices} left the content class {sc}")
                nf = normal_form(q)
                if nf.key not in graph.nodes:
                    if len(graph.nodes) >= max_nodes:
                        graph.truncated = True
                        continue
                    graph.nodes[nf.key] = OrbitNode(q, nf, depth + 1)
                    next_frontier.append(nf.key)
                pair = tuple(sorted((key, nf.key)))
                if pair not in seen_edges:
                    seen_edges.add(pair)
                    graph.edges.append(OrbitEdge(key, nf.key, fac))
        frontier = next_frontier
        if not frontier:
            break
    if graph.truncated:
        log.info("orbit exploration truncated at %d nodes", max_nodes)
    return graph
