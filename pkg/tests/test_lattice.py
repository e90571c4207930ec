from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import explicit_height, segment_lattice_points
from singcontent.lattice import (
    LatticePoint,
    UnimodularMap,
    apply_map,
    convex_hull,
    det,
    gcd,
    is_primitive,
    lattice_height,
    lattice_length,
    map_to_e2,
    primitive_normal,
    xgcd,
)


@pytest.mark.parametrize("a, b, expected", [(60, 24, 12), (0, 7, 7), (-12, 18, 6), (0, 0, 0)])
def test_gcd(a, b, expected):
    assert gcd(a, b) == expected


@pytest.mark.parametrize("v, expected", [((5, 4), True), ((0, 0), False), ((2, 4), False), ((-1, 0), True)])
def test_is_primitive(v, expected):
    assert is_primitive(LatticePoint(*v)) is expected


def test_lattice_length_examples():
    # 1/60(1,23) in standard position
    u, v = (0, 1), (60, -23)
    assert segment_lattice_points(u, v) - 1 == 12
    assert lattice_length(u, v) == 12
    assert lattice_length((0, 0), (0, 0)) == 0
    assert lattice_length((1, 0), (0, 1)) == 1


def test_lattice_height_examples():
    assert lattice_height((0, 1), (60, -23)) == 5
    assert explicit_height((0, 1), (60, -23)) == 5
    assert lattice_height((1, 0), (0, 1)) == 1
    assert lattice_height((0, 1), (3, -2)) == explicit_height((0, 1), (3, -2)) == 1


def test_lattice_height_rejects_dependent_vectors():
    with pytest.raises(ValueError):
        lattice_height((1, 2), (-2, -4))


def test_apply_map_examples():
    assert apply_map(UnimodularMap.identity(), (7, -3)) == (7, -3)
    assert apply_map(UnimodularMap.from_rows([[0, 1], [1, 0]]), (2, 5)) == (5, 2)
    assert apply_map(UnimodularMap.from_rows([[1, 1], [0, 1]]), (1, 0)) == (1, 0)
    with pytest.raises(ValueError):
        UnimodularMap.from_rows([[2, 0], [0, 1]])


def test_no_overflow():
    big = 10**40 + 1
    assert lattice_length((0, 1), (big * 3, 1 - big * 6)) == 3 * big


small = st.integers(-30, 30)
primitive = st.tuples(small, small).filter(lambda v: gcd(*v) == 1)


@st.composite
def unimodular(draw):
    # product of random elementary moves
    m = UnimodularMap.identity()
    for _ in range(draw(st.integers(0, 6))):
        k = draw(st.integers(-4, 4))
        move = draw(st.sampled_from([(1, k, 0, 1), (1, 0, k, 1), (0, 1, 1, 0), (-1, 0, 0, 1)]))
        m = UnimodularMap(*move) @ m
    return m


@given(primitive, primitive, unimodular())
def test_length_height_unimodular_invariant(u, v, m):
    if det(u, v) == 0:
        return
    mu, mv = apply_map(m, u), apply_map(m, v)
    assert lattice_length(mu, mv) == lattice_length(u, v)
    assert lattice_height(mu, mv) == lattice_height(u, v)


@given(primitive, primitive)
def test_det_is_width_times_height(u, v):
    if det(u, v) == 0:
        return
    assert abs(det(u, v)) == lattice_length(u, v) * lattice_height(u, v)
    # the |det|/length definition agrees with the explicit normal
    assert lattice_height(u, v) == abs(primitive_normal(u, v)(u))


@given(st.fractions(), st.fractions())
def test_rational_arithmetic_is_exact(x, y):
    assert (x + y) - y == x
    assert isinstance(x + y, Fraction)


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_xgcd(a, b):
    g, s, t = xgcd(a, b)
    assert g == gcd(a, b) and s * a + t * b == g


@given(primitive)
def test_map_to_e2(u):
    m = map_to_e2(u)
    assert abs(m.det()) == 1
    assert apply_map(m, u) == (0, 1)


def test_convex_hull_drops_collinear_and_interior():
    pts = [(0, 0), (2, 0), (1, 0), (2, 2), (0, 2), (1, 1)]
    assert convex_hull(pts) == [(0, 0), (2, 0), (2, 2), (0, 2)]
