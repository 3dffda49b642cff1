"""Certificates for a packing: planeness, spanning trees, disjointness, depth of the centerpoint."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key
from typing import TYPE_CHECKING, Sequence

import numpy as np

from .center import depth_threshold
from .geometry import Point2, cross, grid_arrays, to_grid

if TYPE_CHECKING:
    from .packing import Packing, SpanningTree


@dataclass(frozen=True)
class Finding:
    """Result of a single check; truthy iff the check passed."""

    ok: bool
    reason: str = ""
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


OK = Finding(True)


def _quadrant(dx, dy) -> int:
    if dx > 0 and dy >= 0:
        return 0
    if dx <= 0 and dy > 0:
        return 1
    if dx < 0 and dy <= 0:
        return 2
    return 3


def angle_compare(u, v) -> int:
    """Compare direction vectors by angle in [0, 2*pi) measured from +x."""
    qu, qv = _quadrant(*u), _quadrant(*v)
    if qu != qv:
        return -1 if qu < qv else 1
    c = u[0] * v[1] - u[1] * v[0]
    return (c < 0) - (c > 0)


def min_halfplane_count(q: Point2, pts: Sequence[Point2]) -> int:
    """Fewest points of ``pts`` in any closed halfplane containing ``q`` (Tukey depth).

    Angular sweep: sort the other points around q and slide a closed
    half-turn window that starts just past each direction. q itself counts
    when it belongs to ``pts``.
    """
    grid, _ = to_grid(list(pts) + [q])
    qx, qy = grid[-1]
    dirs = [(x - qx, y - qy) for x, y in grid[:-1] if (x, y) != (qx, qy)]
    own = len(pts) - len(dirs)
    m = len(dirs)
    if m == 0:
        return own
    dirs.sort(key=cmp_to_key(angle_compare))

    def same_ray(d, e):
        return d[0] * e[1] == d[1] * e[0] and d[0] * e[0] + d[1] * e[1] > 0

    def within_half_turn(d, e):
        c = d[0] * e[1] - d[1] * e[0]
        return c > 0 or (c == 0 and d[0] * e[0] + d[1] * e[1] < 0)

    best = m
    end = 0
    for j in range(m):
        d = dirs[j]
        start = j + 1
        while start < j + m and same_ray(d, dirs[start % m]):
            start += 1
        end = max(end, start)
        while end < j + m and within_half_turn(d, dirs[end % m]):
            end += 1
        best = min(best, end - start)
    return best + own


def is_centerpoint(q: Point2, pts: Sequence[Point2]) -> bool:
    return min_halfplane_count(q, pts) >= depth_threshold(len(pts))


def check_lemma1(c, pts: Sequence[Point2]) -> Finding:
    """Both closed sides of every line through c and an input point hold >= ceil(n/3) + 1 points.

    ``c`` is a Centerpoint or a bare point. The witness is ``(index, side, count)``
    with side ``"left"`` or ``"right"``.
    """
    q = getattr(c, "c", c)
    need = depth_threshold(len(pts)) + 1
    grid, _ = to_grid(list(pts) + [q])
    X, Y = grid_arrays(grid)
    cx, cy = X[-1], Y[-1]
    X, Y = X[:-1], Y[:-1]
    dx, dy = X - cx, Y - cy
    for p in range(len(pts)):
        if dx[p] == 0 and dy[p] == 0:
            continue
        turn = dx[p] * dy - dy[p] * dx
        left = int((turn >= 0).sum())
        right = int((turn <= 0).sum())
        if left < need:
            return Finding(False, f"closed left side of line through c and point {p} "
                                  f"holds {left} < {need}", (p, "left", left))
        if right < need:
            return Finding(False, f"closed right side of line through c and point {p} "
                                  f"holds {right} < {need}", (p, "right", right))
    return OK


def is_plane(tree: SpanningTree, pts: Sequence[Point2]) -> Finding:
    """All-pairs exact crossing test; the witness is the first crossing edge pair."""
    edges = list(tree.edges)
    m = len(edges)
    if m < 2:
        return OK
    grid, _ = to_grid(pts)
    X, Y = grid_arrays(grid)
    t = np.array([e[0] for e in edges])
    h = np.array([e[1] for e in edges])
    ax, ay, bx, by = X[t], Y[t], X[h], Y[h]
    ex, ey = bx - ax, by - ay

    def orient(px, py):
        # [i, j] -> orientation of point j w.r.t. edge i
        s = np.outer(ex, py) - np.outer(ey, px) - (ex * ay - ey * ax)[:, None]
        return (s > 0).astype(np.int8) - (s < 0).astype(np.int8)

    o_tail = orient(ax, ay)
    o_head = orient(bx, by)
    straddle = o_tail * o_head < 0
    crossing = straddle & straddle.T
    collinear = (o_tail == 0) & (o_head == 0)
    for i, j in np.argwhere(np.triu(collinear, k=1)):
        a, b = sorted((grid[edges[i][0]], grid[edges[i][1]]))
        c, d = sorted((grid[edges[j][0]], grid[edges[j][1]]))
        if max(a, c) < min(b, d):
            crossing[i, j] = True
    hits = np.argwhere(np.triu(crossing, k=1))
    if len(hits):
        i, j = (int(v) for v in hits[0])
        return Finding(False, f"edges {tuple(edges[i])} and {tuple(edges[j])} cross",
                       (tuple(edges[i]), tuple(edges[j])))
    return OK


def is_spanning_tree(tree: SpanningTree, pts: Sequence[Point2]) -> Finding:
    n = len(pts)
    edges = list(tree.edges)
    if len(edges) != n - 1:
        return Finding(False, f"edge count {len(edges)} != {n - 1}", ("edge count",))
    seen = set()
    parent = list(range(n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for tail, head in edges:
        if not (0 <= tail < n and 0 <= head < n) or tail == head:
            return Finding(False, f"invalid edge {(tail, head)}", ("invalid edge", (tail, head)))
        key = frozenset((tail, head))
        if key in seen:
            return Finding(False, f"duplicate edge {(tail, head)}", ("duplicate", (tail, head)))
        seen.add(key)
        parent[find(tail)] = find(head)
    roots = {find(v) for v in range(n)}
    if len(roots) > 1:
        return Finding(False, f"disconnected: {len(roots)} components", ("disconnected",))
    return OK


def are_pairwise_edge_disjoint(trees: Sequence[SpanningTree]) -> Finding:
    """Undirected edge sets pairwise disjoint; witness ``(i, j, edge)`` with 0-based tree indices."""
    sets = [[frozenset(e) for e in t.edges] for t in trees]
    for i in range(len(sets)):
        mine = set(sets[i])
        for j in range(i + 1, len(sets)):
            for e in sets[j]:
                if e in mine:
                    edge = tuple(sorted(e))
                    return Finding(False, f"trees {i} and {j} share edge {edge}", (i, j, edge))
    return OK


@dataclass
class VerificationSummary:
    count: bool = False
    plane: bool = False
    spanning: bool = False
    disjoint: bool = False
    centerpoint: bool = False
    split_depth: bool = False
    findings: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all((self.count, self.plane, self.spanning, self.disjoint,
                    self.centerpoint, self.split_depth))

    def as_dict(self) -> dict:
        return {
            "status": "passed" if self.ok else "failed",
            "count": self.count,
            "plane": self.plane,
            "spanning": self.spanning,
            "disjoint": self.disjoint,
            "centerpoint": self.centerpoint,
            "split_depth": self.split_depth,
        }


def verify_trees(trees, center: Point2, pts: Sequence[Point2]) -> VerificationSummary:
    n = len(pts)
    summary = VerificationSummary()
    summary.count = len(trees) == n // 3
    if not summary.count:
        summary.findings.append(f"{len(trees)} trees, expected {n // 3}")

    summary.plane = summary.spanning = True
    for idx, tree in enumerate(trees):
        for name, check in (("plane", is_plane), ("spanning", is_spanning_tree)):
            result = check(tree, pts)
            if not result:
                setattr(summary, name, False)
                summary.findings.append(f"tree {idx}: {result.reason}")

    disjoint = are_pairwise_edge_disjoint(trees)
    summary.disjoint = disjoint.ok
    if not disjoint:
        summary.findings.append(disjoint.reason)

    summary.centerpoint = is_centerpoint(center, pts)
    if not summary.centerpoint:
        summary.findings.append(f"{center} is not a centerpoint")
    split = check_lemma1(center, pts)
    summary.split_depth = split.ok
    if not split:
        summary.findings.append(split.reason)
    return summary


def verify_packing(packing: Packing, pts: Sequence[Point2]) -> VerificationSummary:
    return verify_trees(packing.trees, packing.centerpoint.c, pts)
