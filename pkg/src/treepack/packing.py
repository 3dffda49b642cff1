"""floor(n/3) pairwise edge-disjoint plane spanning trees on a point set in general position.

Points are sorted counter-clockwise around a centerpoint c, giving p_1..p_n.
Tree T_i uses three tails (p_i and two later points); each tail connects to
the points that follow it in the radial order, which keeps all of its edges
inside a convex wedge at c. The resulting graph has one directed cycle
through the tails, and dropping the edge that returns to p_i leaves a tree.

==========  =================================================  ===========
n           tails of G_i and their out-degrees                 k = n // 3
==========  =================================================  ===========
3k          p_i: k,    p_{i+k}: k,      p_{i+2k}: k
3k + 1      p_i: k+1,  p_{i+k+1}: k,    p_{i+2k+1}: k
3k + 2      p_i: k+1,  p_{i+k+1}: k+1,  p_{i+2k+2}: k
==========  =================================================  ===========

When the center is a single input point p (only possible for n = 3k + 1),
the 3k-point construction runs on the other points around p and T_i gets
the extra edge p -> p_i.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cmp_to_key
from typing import NamedTuple, Sequence

from .center import (
    CenterRegion,
    Centerpoint,
    classify_dimension,
    compute_center_region,
    select_centerpoint,
)
from .errors import RadialTieError, VerificationError
from .geometry import Point2, require_general_position, to_grid
from .verification import VerificationSummary, angle_compare, verify_packing

log = logging.getLogger(__name__)

RESIDUE_LABELS = {0: "3k", 1: "3k+1", 2: "3k+2"}


class DirectedEdge(NamedTuple):
    tail: int
    head: int


@dataclass(frozen=True)
class RadialOrder:
    """Point indices sorted counter-clockwise around ``center``, starting from the +x direction."""

    center: Point2
    order: tuple[int, ...]
    excluded: int | None = None

    def __len__(self) -> int:
        return len(self.order)

    def at(self, position: int) -> int:
        """Point index of p_position (1-based, taken modulo the length)."""
        return self.order[(position - 1) % len(self.order)]


@dataclass(frozen=True)
class SpanningTree:
    edges: tuple[DirectedEdge, ...]
    start_index: int
    residue: str
    removed_edge: DirectedEdge | None = None


@dataclass(frozen=True)
class Packing:
    trees: tuple[SpanningTree, ...]
    centerpoint: Centerpoint
    radial_order: RadialOrder
    region: CenterRegion | None = None
    verification: VerificationSummary | None = None


def radial_order(pts: Sequence[Point2], center: Centerpoint | Point2) -> RadialOrder:
    c = center.c if isinstance(center, Centerpoint) else center
    grid, _ = to_grid(list(pts) + [c])
    cx, cy = grid[-1]
    excluded = None
    dirs = {}
    for idx, (x, y) in enumerate(grid[:-1]):
        if (x, y) == (cx, cy):
            excluded = idx
            continue
        dirs[idx] = (x - cx, y - cy)
    order = sorted(dirs, key=cmp_to_key(lambda a, b: angle_compare(dirs[a], dirs[b])))
    for a, b in zip(order, order[1:]):
        if angle_compare(dirs[a], dirs[b]) == 0:
            raise RadialTieError(f"points {a} and {b} lie on one ray from {c}")
    return RadialOrder(c, tuple(order), excluded)


def tail_schedule(i: int, k: int, residue: int) -> list[tuple[int, int]]:
    """(radial position, out-degree) of the three tails of G_i."""
    if residue == 0:
        return [(i, k), (i + k, k), (i + 2 * k, k)]
    if residue == 1:
        return [(i, k + 1), (i + k + 1, k), (i + 2 * k + 1, k)]
    if residue == 2:
        return [(i, k + 1), (i + k + 1, k + 1), (i + 2 * k + 2, k)]
    raise ValueError(f"residue must be 0, 1 or 2, got {residue}")


def build_graph(order: RadialOrder, i: int, k: int, residue: int) -> list[DirectedEdge]:
    """The n edges of G_i, grouped by tail starting with p_i."""
    if k < 1 or not 1 <= i <= k:
        raise ValueError(f"need 1 <= i <= k, got i={i}, k={k}")
    schedule = tail_schedule(i, k, residue)
    if len(order) != 3 * k + residue:
        raise ValueError(f"radial order has {len(order)} points, expected {3 * k + residue}")
    return [DirectedEdge(order.at(t), order.at(t + s))
            for t, degree in schedule for s in range(1, degree + 1)]


def extract_tree(edges: Sequence[DirectedEdge], i: int) -> SpanningTree:
    """Drop the cycle edge returning to p_i (the tail of the first edge)."""
    root = edges[0].tail
    closing = [e for e in edges if e.head == root]
    if len(closing) != 1:
        raise RuntimeError(f"expected one edge into p_{i}, found {len(closing)}")
    removed = closing[0]
    return SpanningTree(
        edges=tuple(e for e in edges if e != removed),
        start_index=i,
        residue=RESIDUE_LABELS[len(edges) % 3],
        removed_edge=removed,
    )


def _star(n: int) -> SpanningTree:
    return SpanningTree(tuple(DirectedEdge(0, j) for j in range(1, n)), 1, "star")


def pack_spanning_trees(pts: Sequence[Point2], seed: int = 0, verify: bool = True) -> Packing:
    """Pack floor(n/3) edge-disjoint plane spanning trees on ``pts``.

    With ``verify`` the result is checked before it is returned and
    :class:`VerificationError` is raised on any failed certificate.
    """
    pts = list(pts)
    n = len(pts)
    if n < 3:
        raise ValueError("need at least 3 points")
    require_general_position(pts)
    region = compute_center_region(pts)
    report = classify_dimension(region, pts)
    center = select_centerpoint(region, pts, seed)
    order = radial_order(pts, center)
    k = n // 3

    if n < 6:
        trees: tuple[SpanningTree, ...] = (_star(n),)
    elif report.dimension == 2:
        trees = tuple(extract_tree(build_graph(order, i, k, n % 3), i) for i in range(1, k + 1))
    else:
        p = center.index
        trees = []
        for i in range(1, k + 1):
            base = extract_tree(build_graph(order, i, k, 0), i)
            trees.append(SpanningTree(base.edges + (DirectedEdge(p, order.at(i)),),
                                      i, "0-dim", base.removed_edge))
        trees = tuple(trees)
    log.debug("n=%d: %d trees around %s (center dimension %d)",
              n, len(trees), center.c, report.dimension)

    packing = Packing(trees, center, order, region)
    if not verify:
        return packing
    summary = verify_packing(packing, pts)
    if not summary.ok:
        raise VerificationError(summary)
    return Packing(trees, center, order, region, summary)
