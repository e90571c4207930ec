"""Polygon corpus shared by the property and acceptance tests."""

import random
from functools import lru_cache

from singcontent.cones import QuotientSingularityType
from singcontent.lattice import convex_hull, gcd
from singcontent.polygon import PolygonError, validate

SEED = 20140601
RANDOM_COUNT = 500

P1 = [(0, 1), (5, 4), (-7, -8)]
P2 = [(0, 1), (3, 1), (-112, -79)]
PROJECTIVE_PLANE = [(1, 0), (0, 1), (-1, -1)]
P113 = [(1, 0), (0, 1), (-1, -3)]
P112 = [(1, 0), (0, 1), (-1, -2)]
P114 = [(1, 0), (0, 1), (-1, -4)]
SQUARE = [(1, 0), (0, 1), (-1, 0), (0, -1)]


def canonical_types(max_r):
    out = []
    for r in range(1, max_r + 1):
        for q in range(r):
            if gcd(r, q) == 1 or r == 1:
                sigma = QuotientSingularityType.of(r, 1, q)
                if sigma.q == (q if r > 1 else 0):
                    out.append(sigma)
    return out


@lru_cache(maxsize=None)
def standard_triangles(max_r=30):
    """Each canonical 1/r(1,q) in standard position, closed off by a third
    vertex in the opposite cone."""
    polys = []
    for sigma in canonical_types(max_r):
        u, v = (0, 1), (sigma.r, -sigma.q)
        for i, j in ((1, 1), (1, 2), (2, 1)):
            w = (-(i * u[0] + j * v[0]), -(i * u[1] + j * v[1]))
            g = gcd(*w)
            polys.append(validate([u, v, (w[0] // g, w[1] // g)]))
    return tuple(polys)


@lru_cache(maxsize=None)
def random_polygons(count=RANDOM_COUNT, seed=SEED):
    rng = random.Random(seed)
    polys = []
    while len(polys) < count:
        k = rng.randint(3, 6)
        pts = set()
        while len(pts) < k:
            x, y = rng.randint(-10, 10), rng.randint(-10, 10)
            if gcd(x, y) == 1:
                pts.add((x, y))
        try:
            polys.append(validate(convex_hull(pts)))
        except PolygonError:
            continue
    return tuple(polys)


def full_corpus():
    return standard_triangles() + random_polygons()
