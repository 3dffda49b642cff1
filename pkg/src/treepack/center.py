"""The center of a planar point set: every closed halfplane meeting it holds >= ceil(n/3) points.

The center is cut out of the bounding box of the points by the closed
halfplanes bounded by lines through two input points whose open complement
holds at most ``alpha - 1`` points.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import DimensionError
from .geometry import (
    Halfplane,
    HPoint,
    Point2,
    canonical_h,
    clip_h,
    from_hpoint,
    grid_arrays,
    hline_through,
    is_general_position,
    polygon_area2,
    require_general_position,
    to_grid,
)
from .rng import Lcg64

log = logging.getLogger(__name__)

_KINDS = {0: "empty", 1: "point", 2: "segment"}
_DIMENSIONS = {"empty": -1, "point": 0, "segment": 1, "polygon": 2}


def depth_threshold(n: int) -> int:
    """ceil(n / 3)."""
    return -(-n // 3)


@dataclass(frozen=True)
class CenterRegion:
    vertices: tuple[Point2, ...]
    alpha: int
    defining_halfplanes: tuple[Halfplane, ...] = field(default=(), repr=False)

    @property
    def kind(self) -> str:
        return _KINDS.get(len(self.vertices), "polygon")

    @property
    def dimension(self) -> int:
        return _DIMENSIONS[self.kind]

    def vertex_average(self) -> Point2:
        m = len(self.vertices)
        return Point2(sum((v.x for v in self.vertices), Fraction(0)) / m,
                      sum((v.y for v in self.vertices), Fraction(0)) / m)


@dataclass(frozen=True)
class Centerpoint:
    c: Point2
    in_P: bool
    index: int | None = None


@dataclass(frozen=True)
class DimensionReport:
    dimension: int
    n: int
    alpha: int
    general_position: bool
    point_in_P: bool | None = None
    point_index: int | None = None
    n_mod_3: int = 0
    dimension_rule_checked: bool = False


def _qualifying_pairs(grid: Sequence[tuple[int, int]], alpha: int) -> list[tuple[int, int]]:
    """Ordered pairs (a, b) whose open right side holds at most alpha - 1 points."""
    X, Y = grid_arrays(grid)
    pairs = []
    for a in range(len(grid)):
        dx = X - X[a]
        dy = Y - Y[a]
        right = (np.outer(dx, dy) - np.outer(dy, dx) < 0).sum(axis=1)
        for b in np.flatnonzero(right <= alpha - 1):
            if b != a:
                pairs.append((a, int(b)))
    return pairs


def enumerate_center_halfplanes(pts: Sequence[Point2]) -> list[Halfplane]:
    """All closed pair-line halfplanes whose open complement holds <= alpha - 1 points.

    Ordered by (anchor index, target index).
    """
    require_general_position(pts)
    grid, _ = to_grid(pts)
    return [Halfplane.left_of(pts[a], pts[b])
            for a, b in _qualifying_pairs(grid, depth_threshold(len(pts)))]


def compute_center_region(pts: Sequence[Point2]) -> CenterRegion:
    require_general_position(pts)
    if len(pts) < 3:
        raise ValueError("need at least 3 points")
    n = len(pts)
    alpha = depth_threshold(n)
    grid, scale = to_grid(pts)
    pairs = _qualifying_pairs(grid, alpha)

    xs = [g[0] for g in grid]
    ys = [g[1] for g in grid]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    poly: list[HPoint] = [(lo_x, lo_y, 1), (hi_x, lo_y, 1), (hi_x, hi_y, 1), (lo_x, hi_y, 1)]
    for a, b in pairs:
        clipped = clip_h(poly, hline_through(grid[a], grid[b]))
        if clipped is not poly:
            poly = [v for i, v in enumerate(clipped) if v != clipped[i - 1]] or clipped[:1]
    poly = canonical_h(poly)
    if not poly:
        raise AssertionError("center came out empty; centerpoints always exist")
    region = CenterRegion(
        vertices=tuple(from_hpoint(v, scale) for v in poly),
        alpha=alpha,
        defining_halfplanes=tuple(Halfplane.left_of(pts[a], pts[b]) for a, b in pairs),
    )
    log.debug("center of %d points: %s with %d vertices from %d halfplanes",
              n, region.kind, len(region.vertices), len(pairs))
    return region


def classify_dimension(region: CenterRegion, pts: Sequence[Point2]) -> DimensionReport:
    """Dimension of the center, checked against the 0-or-2 dimension rule.

    For points in general position with n >= 6 the center is a polygon, or a
    single input point with n = 1 (mod 3); anything else raises
    :class:`DimensionError`.
    """
    n = len(pts)
    dim = region.dimension
    if dim == 2 and polygon_area2(region.vertices) <= 0:
        raise DimensionError("polygon center has non-positive area")
    general = bool(is_general_position(pts))
    in_p = index = None
    if dim == 0:
        p = region.vertices[0]
        index = next((i for i, q in enumerate(pts) if q == p), None)
        in_p = index is not None
    checked = general and n >= 6
    if checked:
        if dim not in (0, 2):
            raise DimensionError(f"center of {n} points in general position has dimension {dim}")
        if dim == 0 and not (in_p and n % 3 == 1):
            raise DimensionError(
                f"0-dimensional center with point in P={in_p} and n mod 3 = {n % 3}")
    return DimensionReport(dim, n, region.alpha, general, in_p, index, n % 3, checked)


def on_pair_line(c: Point2, pts: Sequence[Point2]) -> bool:
    """True if c coincides with an input point or lies on a line through two of them."""
    grid, _ = to_grid(list(pts) + [c])
    X, Y = grid_arrays(grid)
    cx, cy = X[-1], Y[-1]
    X, Y = X[:-1], Y[:-1]
    if np.any((X == cx) & (Y == cy)):
        return True
    for a in range(len(X) - 1):
        dx = X[a + 1:] - X[a]
        dy = Y[a + 1:] - Y[a]
        if np.any(dx * (cy - Y[a]) - dy * (cx - X[a]) == 0):
            return True
    return False


def select_centerpoint(region: CenterRegion, pts: Sequence[Point2], seed: int = 0,
                       max_attempts: int = 10_000) -> Centerpoint:
    """Pick the centerpoint that drives the radial construction.

    A point center is returned as is. Inside a polygon center the vertex
    average is tried first, then seeded positive convex combinations of the
    vertices, until the candidate avoids every input point and pair-line.
    """
    if region.dimension == 0:
        p = region.vertices[0]
        index = next((i for i, q in enumerate(pts) if q == p), None)
        return Centerpoint(p, index is not None, index)
    if region.dimension != 2:
        raise DimensionError(f"cannot select a centerpoint in a {region.kind} center")

    candidate = region.vertex_average()
    rng = Lcg64(seed)
    for _ in range(max_attempts):
        if not on_pair_line(candidate, pts):
            return Centerpoint(candidate, False, None)
        weights = [1 + rng.below(1024) for _ in region.vertices]
        total = sum(weights)
        candidate = Point2(
            sum((w * v.x for w, v in zip(weights, region.vertices)), Fraction(0)) / total,
            sum((w * v.y for w, v in zip(weights, region.vertices)), Fraction(0)) / total,
        )
    raise RuntimeError(f"no clean centerpoint after {max_attempts} attempts")
