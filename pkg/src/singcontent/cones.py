"""Cyclic quotient surface singularities and two-dimensional cones.

A cone with primitive generators ``u``, ``v`` splits along the segment
``uv`` into ``n`` elementary T-cones (width = local index) plus at most one
leftover cone of width ``rho``, the residue. The residue depends only on the
cone, not on where the leftover slot is placed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple, Optional

from singcontent.lattice import (
    LatticePoint,
    apply_map,
    det,
    gcd,
    is_primitive,
    map_to_e2,
)

EMPTY_SYMBOL = "∅"

_TYPE_RE = re.compile(r"\s*1\s*/\s*(-?\d+)\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$")


class TypeParseError(ValueError):
    """Raised for malformed singularity type strings."""

    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"cannot parse {text!r} at position {position}: {reason}")


def _canonical_q(r: int, q: int) -> int:
    if r == 1:
        return 0
    q %= r
    return min(q, pow(q, -1, r))


@dataclass(frozen=True, order=True)
class QuotientSingularityType:
    """The cyclic quotient singularity ``1/r(1, q)`` in canonical form.

    Build instances with :meth:`of` (any weights) or :meth:`parse`; the
    constructor itself expects an already canonical ``q``.
    """

    r: int
    q: int

    def __post_init__(self):
        if self.r < 1:
            raise ValueError(f"group order must be positive, got {self.r}")
        if self.q != _canonical_q(self.r, self.q):
            raise ValueError(f"1/{self.r}(1,{self.q}) is not in canonical form")

    @classmethod
    def of(cls, r: int, a: int, b: int) -> "QuotientSingularityType":
        if r < 1:
            raise ValueError(f"group order must be positive, got {r}")
        if gcd(r, a) != 1 or gcd(r, b) != 1:
            raise ValueError(f"1/{r}({a},{b}) is not an isolated cyclic quotient singularity")
        if r == 1:
            return cls(1, 0)
        return cls(r, _canonical_q(r, b * pow(a, -1, r)))

    @classmethod
    def parse(cls, text: str) -> "QuotientSingularityType":
        m = _TYPE_RE.match(text)
        if m is None:
            raise TypeParseError(text, _first_bad_position(text), "expected 1/r(a,b)")
        r, a, b = (int(g) for g in m.groups())
        if r < 1:
            raise TypeParseError(text, m.start(1), f"group order {r} must be positive")
        try:
            return cls.of(r, a, b)
        except ValueError as exc:
            raise TypeParseError(text, m.start(2), str(exc)) from None

    @property
    def a(self) -> int:
        return 1

    @property
    def b(self) -> int:
        return self.q

    @property
    def weights(self) -> tuple[int, int]:
        return (1, self.q)

    def is_smooth(self) -> bool:
        return self.r == 1

    def __str__(self) -> str:
        return f"1/{self.r}(1,{self.q})"


def _first_bad_position(text: str) -> int:
    # longest prefix of the grammar that still matches
    pattern = ["1", "/", "d", "(", "d", ",", "d", ")"]
    i = 0
    n = len(text)

    def skip_ws(i):
        while i < n and text[i].isspace():
            i += 1
        return i

    for tok in pattern:
        i = skip_ws(i)
        if tok == "d":
            j = i + 1 if i < n and text[i] == "-" else i
            k = j
            while k < n and text[k].isdigit():
                k += 1
            if k == j:
                return i
            i = k
        else:
            if i >= n or text[i] != tok:
                return i
            i += 1
    return skip_ws(i)


# Empty residue is represented by ``None``.
Residue = Optional[QuotientSingularityType]


def format_residue(res: Residue) -> str:
    return EMPTY_SYMBOL if res is None else str(res)


@dataclass(frozen=True)
class Cone2:
    """Strictly convex cone spanned by primitive generators `u` and `v`.

    Either orientation is accepted; `u` is the generator from which
    :func:`decompose` starts walking along the segment ``uv``.
    """

    u: LatticePoint
    v: LatticePoint

    def __post_init__(self):
        object.__setattr__(self, "u", LatticePoint(*self.u))
        object.__setattr__(self, "v", LatticePoint(*self.v))
        if not (is_primitive(self.u) and is_primitive(self.v)):
            raise ValueError(f"cone generators {self.u}, {self.v} must be primitive")
        if det(self.u, self.v) == 0:
            raise ValueError(f"cone on {self.u}, {self.v} is not strictly convex")

    @property
    def order(self) -> int:
        return abs(det(self.u, self.v))


class ConeProfile(NamedTuple):
    w: int
    l: int
    n: int
    rho: int


class ConeSingularityContent(NamedTuple):
    n: int
    residue: Residue

    def __str__(self) -> str:
        return f"({self.n}, {format_residue(self.residue)})"


def cone_to_type(c: Cone2) -> QuotientSingularityType:
    m = map_to_e2(c.u)
    x, y = apply_map(m, c.v)
    # reflecting the first coordinate fixes (0, 1)
    return QuotientSingularityType.of(abs(x), 1, -y)


def type_to_cone(sigma: QuotientSingularityType) -> Cone2:
    """Standard position: ``u = (0, 1)``, ``v = (r, -q)``."""
    return Cone2(LatticePoint(0, 1), LatticePoint(sigma.r, -sigma.q))


def profile(sigma: QuotientSingularityType) -> ConeProfile:
    w = gcd(sigma.r, 1 + sigma.q)
    l = sigma.r // w
    n, rho = divmod(w, l)
    return ConeProfile(w, l, n, rho)


def residue(sigma: QuotientSingularityType) -> Residue:
    w, l, _, rho = profile(sigma)
    if rho == 0:
        return None
    a = sigma.q + 1
    top = rho * a
    if top % w:
        raise ArithmeticError(f"rho*a/w = {top}/{w} is not integral for {sigma}")
    return QuotientSingularityType.of(rho * l, 1, top // w - 1)


def singularity_content(sigma: QuotientSingularityType) -> ConeSingularityContent:
    return ConeSingularityContent(profile(sigma).n, residue(sigma))


def is_T_singularity(sigma: QuotientSingularityType) -> bool:
    return profile(sigma).rho == 0


def t_singularity_parameters(sigma: QuotientSingularityType) -> Optional[tuple[int, int, int]]:
    """Search for ``(n, d, c)`` with ``sigma = 1/(n d^2)(1, n d c - 1)``.

    Independent of :func:`profile`: a direct scan over square divisors of
    ``r`` and residues ``c`` coprime to ``d``.
    """
    r = sigma.r
    targets = {sigma.q % r}
    if r > 1:
        targets.add(pow(sigma.q, -1, r))
    d = 1
    while d * d <= r:
        if r % (d * d) == 0:
            n = r // (d * d)
            for c in range(d):
                if gcd(d, c) == 1 and (n * d * c - 1) % r in targets:
                    return n, d, c
        d += 1
    return None


def milnor_number(sigma: QuotientSingularityType) -> int:
    if not is_T_singularity(sigma):
        raise ValueError(f"{sigma} is not a T-singularity")
    return profile(sigma).n - 1


def decompose(c: Cone2, m: int = 0) -> list[tuple[Cone2, QuotientSingularityType]]:
    """Split `c` into elementary T-cones and (if any) one residual cone.

    Walking from ``c.u`` to ``c.v``, every step has lattice length ``l``
    except step `m`, which has length ``rho``. Without a residue `m` is
    ignored.
    """
    sigma = cone_to_type(c)
    w, l, n, rho = profile(sigma)
    if rho:
        if not 0 <= m <= n:
            raise ValueError(f"residual slot {m} out of range 0..{n}")
        lengths = [l] * m + [rho] + [l] * (n - m)
    else:
        lengths = [l] * n
    u, v = c.u, c.v
    step = ((v[0] - u[0]) // w, (v[1] - u[1]) // w)
    points = [u]
    for length in lengths:
        p = points[-1]
        points.append(LatticePoint(p[0] + length * step[0], p[1] + length * step[1]))
    if points[-1] != v:
        raise ArithmeticError("decomposition does not end at the second generator")
    pieces = []
    for p, q in zip(points, points[1:]):
        if not is_primitive(p) or not is_primitive(q):
            raise ArithmeticError(f"non-primitive subdivision point in {c}")
        sub = Cone2(p, q)
        pieces.append((sub, cone_to_type(sub)))
    return pieces
