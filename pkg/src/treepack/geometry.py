"""Exact planar geometry on rational coordinates.

Scalars are :class:`fractions.Fraction`. Predicates never touch floating point.
Hot loops move to an integer grid (all coordinates multiplied by the common
denominator) and, where useful, to numpy integer arrays; arrays fall back to
``dtype=object`` (Python ints) once magnitudes could overflow int64.

Halfplane clipping works on homogeneous integer points ``(X, Y, W)`` with
``W > 0`` and lines ``(a, b, c)`` meaning ``a*x + b*y + c >= 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

import numpy as np

Scalar = Fraction

# |coordinate| bound under which cross products of differences fit in int64
_INT64_SAFE = 1 << 29


def scalar(value) -> Fraction:
    """Exact rational from an int, a Fraction, or text like ``"-1.25"`` / ``"3/4"``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass a string, int or Fraction")
    if isinstance(value, str):
        return Fraction(value.strip())
    return Fraction(value)


class Point2(NamedTuple):
    x: Fraction
    y: Fraction

    def __str__(self) -> str:
        return f"({self.x}, {self.y})"


def point(x, y) -> Point2:
    return Point2(scalar(x), scalar(y))


def points(coords: Iterable[Sequence]) -> list[Point2]:
    return [point(x, y) for x, y in coords]


class Orientation(IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


class Side(IntEnum):
    RIGHT = -1
    ON = 0
    LEFT = 1


def cross(a, b, c):
    """Twice the signed area of triangle abc; works on ints and Fractions alike."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def orientation(a, b, c) -> Orientation:
    d = cross(a, b, c)
    return Orientation((d > 0) - (d < 0))


@dataclass(frozen=True)
class DirectedLine:
    """Line through ``anchor`` oriented toward ``target``."""

    anchor: Point2
    target: Point2

    def __post_init__(self):
        if self.anchor == self.target:
            raise ValueError("directed line needs two distinct points")


@dataclass(frozen=True)
class Halfplane:
    """Closed halfplane to the left of ``boundary`` (boundary included)."""

    boundary: DirectedLine

    @classmethod
    def left_of(cls, anchor: Point2, target: Point2) -> Halfplane:
        return cls(DirectedLine(anchor, target))

    def contains(self, q) -> bool:
        return side_of_line(self.boundary, q) != Side.RIGHT


@dataclass(frozen=True)
class Segment:
    a: Point2
    b: Point2

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError("degenerate segment")


def side_of_line(line: DirectedLine, q) -> Side:
    return Side(orientation(line.anchor, line.target, q))


def segments_cross_properly(s: Segment, t: Segment) -> bool:
    """True when s and t meet in one point interior to both, or overlap collinearly.

    Touching at a shared endpoint is not a crossing.
    """
    return _cross_properly(s.a, s.b, t.a, t.b)


def _cross_properly(a, b, c, d) -> bool:
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    if o1 == 0 and o2 == 0:
        lo1, hi1 = sorted((a, b))
        lo2, hi2 = sorted((c, d))
        return max(lo1, lo2) < min(hi1, hi2)
    if o1 * o2 >= 0:
        return False
    return orientation(c, d, a) * orientation(c, d, b) < 0


# --- integer grid -----------------------------------------------------------

def to_grid(pts: Sequence[Point2]) -> tuple[list[tuple[int, int]], int]:
    """Scale rational points onto a common integer grid.

    Returns the integer coordinates and the positive scale factor; orientation
    signs are unchanged by the scaling.
    """
    scale = math.lcm(1, *(p.x.denominator for p in pts), *(p.y.denominator for p in pts))
    grid = [(int(p.x * scale), int(p.y * scale)) for p in pts]
    return grid, scale


def exact_array(values: Sequence[int]) -> np.ndarray:
    """Integer array that cannot overflow in a cross product of differences."""
    vals = list(values)
    if all(-_INT64_SAFE < v < _INT64_SAFE for v in vals):
        return np.array(vals, dtype=np.int64)
    return np.array(vals, dtype=object)


def grid_arrays(grid: Sequence[tuple[int, int]]) -> tuple[np.ndarray, np.ndarray]:
    xs = [g[0] for g in grid]
    ys = [g[1] for g in grid]
    if all(-_INT64_SAFE < v < _INT64_SAFE for v in xs + ys):
        return np.array(xs, dtype=np.int64), np.array(ys, dtype=np.int64)
    return np.array(xs, dtype=object), np.array(ys, dtype=object)


# --- general position -------------------------------------------------------

@dataclass(frozen=True)
class PositionCheck:
    """Outcome of :func:`is_general_position`; truthy iff the set is in general position."""

    ok: bool
    kind: str = ""
    witness: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def is_general_position(pts: Sequence[Point2]) -> PositionCheck:
    """Check for duplicates, then for collinear triples, reporting the first in index order."""
    groups: dict[Point2, list[int]] = {}
    for idx, p in enumerate(pts):
        groups.setdefault(p, []).append(idx)
    dups = [(g[0], g[1]) for g in groups.values() if len(g) > 1]
    if dups:
        return PositionCheck(False, "duplicate", min(dups))

    n = len(pts)
    if n < 3:
        return PositionCheck(True)
    X, Y = grid_arrays(to_grid(pts)[0])
    for i in range(n - 2):
        dx = X[i + 1:] - X[i]
        dy = Y[i + 1:] - Y[i]
        m = np.outer(dx, dy) - np.outer(dy, dx)
        hits = np.argwhere(np.triu(m == 0, k=1))
        if len(hits):
            j, k = hits[0]
            return PositionCheck(False, "collinear", (i, i + 1 + int(j), i + 1 + int(k)))
    return PositionCheck(True)


def require_general_position(pts: Sequence[Point2]) -> None:
    from .errors import GeneralPositionError

    check = is_general_position(pts)
    if not check:
        raise GeneralPositionError(check.kind, check.witness)


# --- homogeneous integer clipping ------------------------------------------

HPoint = tuple[int, int, int]
HLine = tuple[int, int, int]


def _reduce(X: int, Y: int, W: int) -> HPoint:
    if W < 0:
        X, Y, W = -X, -Y, -W
    g = math.gcd(math.gcd(X, Y), W)
    if g > 1:
        X, Y, W = X // g, Y // g, W // g
    return X, Y, W


def to_hpoint(p: Point2) -> HPoint:
    x, y = p
    return _reduce(x.numerator * y.denominator, y.numerator * x.denominator,
                   x.denominator * y.denominator)


def from_hpoint(h: HPoint, scale: int = 1) -> Point2:
    X, Y, W = h
    return Point2(Fraction(X, W * scale), Fraction(Y, W * scale))


def hline_through(a, b) -> HLine:
    """Integer coefficients of the closed left side of a->b (ints or Fractions)."""
    A = a[1] - b[1]
    B = b[0] - a[0]
    C = a[0] * b[1] - a[1] * b[0]
    if not all(isinstance(v, int) for v in (A, B, C)):
        A, B, C = Fraction(A), Fraction(B), Fraction(C)
        den = math.lcm(A.denominator, B.denominator, C.denominator)
        A, B, C = int(A * den), int(B * den), int(C * den)
    g = math.gcd(math.gcd(A, B), C)
    if g > 1:
        A, B, C = A // g, B // g, C // g
    return A, B, C


def _orient_h(p: HPoint, q: HPoint, r: HPoint) -> int:
    d = (p[0] * (q[1] * r[2] - q[2] * r[1])
         - p[1] * (q[0] * r[2] - q[2] * r[0])
         + p[2] * (q[0] * r[1] - q[1] * r[0]))
    return (d > 0) - (d < 0)


def _lex_key(h: HPoint) -> tuple[Fraction, Fraction]:
    return Fraction(h[0], h[2]), Fraction(h[1], h[2])


def clip_h(poly: list[HPoint], line: HLine) -> list[HPoint]:
    """One Sutherland-Hodgman step against a closed halfplane.

    ``poly`` is a CCW convex polygon, a segment ``[a, b]``, a point ``[a]`` or
    empty. The output may contain consecutive duplicates; see :func:`canonical_h`.
    """
    if not poly:
        return []
    a, b, c = line
    vals = [a * X + b * Y + c * W for X, Y, W in poly]
    if min(vals) >= 0:
        return poly
    if max(vals) < 0:
        return []
    out: list[HPoint] = []
    for idx, cur in enumerate(poly):
        fc = vals[idx]
        prev, fp = poly[idx - 1], vals[idx - 1]
        if fc >= 0:
            if fp < 0 < fc:
                out.append(_between(prev, fp, cur, fc))
            out.append(cur)
        elif fp > 0:
            out.append(_between(prev, fp, cur, fc))
    return out


def _between(p: HPoint, fp: int, q: HPoint, fq: int) -> HPoint:
    return _reduce(fq * p[0] - fp * q[0], fq * p[1] - fp * q[1], fq * p[2] - fp * q[2])


def canonical_h(poly: list[HPoint]) -> list[HPoint]:
    """CCW, collinear vertices merged, lexicographically smallest vertex first.

    Degenerate inputs collapse to ``[lo, hi]`` (segment) or ``[p]`` (point).
    """
    pts: list[HPoint] = []
    for v in poly:
        if not pts or pts[-1] != v:
            pts.append(v)
    while len(pts) > 1 and pts[0] == pts[-1]:
        pts.pop()
    if len(pts) <= 2:
        return sorted(pts, key=_lex_key)

    base = pts[0]
    other = next(v for v in pts if v != base)
    turns = [_orient_h(base, other, v) for v in pts]
    if not any(turns):
        ordered = sorted(pts, key=_lex_key)
        return [ordered[0], ordered[-1]]
    if _area2_h(pts) < 0:
        pts.reverse()

    changed = True
    while changed and len(pts) > 3:
        changed = False
        for i in range(len(pts)):
            if _orient_h(pts[i - 1], pts[i], pts[(i + 1) % len(pts)]) == 0:
                del pts[i]
                changed = True
                break
    start = min(range(len(pts)), key=lambda i: _lex_key(pts[i]))
    return pts[start:] + pts[:start]


def _area2_h(pts: list[HPoint]) -> Fraction:
    return polygon_area2([from_hpoint(h) for h in pts])


def polygon_area2(poly: Sequence[Point2]) -> Fraction:
    """Twice the signed (shoelace) area; positive for CCW."""
    total = Fraction(0)
    for i in range(len(poly)):
        x0, y0 = poly[i - 1]
        x1, y1 = poly[i]
        total += x0 * y1 - x1 * y0
    return total


def canonical_polygon(poly: Sequence[Point2]) -> tuple[Point2, ...]:
    """Canonical vertex tuple, so that equal point sets compare equal."""
    return tuple(from_hpoint(h) for h in canonical_h([to_hpoint(p) for p in poly]))


def clip_polygon_with_halfplane(poly: Sequence[Point2], h: Halfplane) -> tuple[Point2, ...]:
    """Exact intersection of a convex polygon (or segment/point) with a closed halfplane.

    The result is canonical; its length tells the shape: 0 empty, 1 point,
    2 segment, 3+ polygon.
    """
    line = hline_through(h.boundary.anchor, h.boundary.target)
    clipped = clip_h([to_hpoint(p) for p in poly], line)
    return tuple(from_hpoint(v) for v in canonical_h(clipped))


def convex_hull(pts: Sequence) -> list[int]:
    """Indices of the strict convex hull, CCW (monotone chain, exact)."""
    order = sorted(range(len(pts)), key=lambda i: pts[i])
    if len(order) <= 2:
        return order

    def chain(seq):
        out: list[int] = []
        for i in seq:
            while len(out) >= 2 and cross(pts[out[-2]], pts[out[-1]], pts[i]) <= 0:
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(reversed(order))
    return lower[:-1] + upper[:-1]
