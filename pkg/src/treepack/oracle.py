"""Brute-force cross-checks for small instances.

Nothing here reuses the sweep, the clipper or the packing verifier; only the
raw orientation predicate and the integer grid are shared.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .geometry import Point2, Segment, cross, segments_cross_properly, to_grid


def _alpha(n: int) -> int:
    return (n + 2) // 3


def oracle_min_count(q: Point2, pts: Sequence[Point2]) -> int:
    """Fewest points in a closed halfplane containing q, by enumerating candidate halfplanes.

    Candidates: for every line through q and an input point, both sides, each
    rotated by +/- an infinitesimal angle about q (decided symbolically); plus
    both closed sides of every line through two input points that contain q.
    """
    grid, _ = to_grid(list(pts) + [q])
    g = grid[:-1]
    qg = grid[-1]
    own = sum(1 for p in g if p == qg)
    others = [p for p in g if p != qg]
    best = len(g)
    if not others:
        return own

    for p in others:
        d = (p[0] - qg[0], p[1] - qg[1])
        for sign in (1, -1):              # boundary direction d or -d
            for tilt in (1, -1):          # rotate boundary ccw / cw
                count = own
                for r in others:
                    turn = sign * cross(qg, p, r)
                    if turn > 0:
                        count += 1
                    elif turn == 0:
                        ahead = sign * ((r[0] - qg[0]) * d[0] + (r[1] - qg[1]) * d[1]) > 0
                        # a ccw tilt drops the forward ray and picks up the backward one
                        if ahead != (tilt == 1):
                            count += 1
                best = min(best, count)

    for a in range(len(g)):
        for b in range(len(g)):
            if a == b:
                continue
            if cross(g[a], g[b], qg) >= 0:
                best = min(best, sum(1 for r in g if cross(g[a], g[b], r) >= 0))
    return best


def oracle_center_membership(q: Point2, pts: Sequence[Point2]) -> bool:
    return oracle_min_count(q, pts) >= _alpha(len(pts))


@dataclass
class AgreementReport:
    probes: int = 0
    disagreements: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements


@dataclass(frozen=True)
class Probe:
    label: str
    q: Point2
    inside: bool


def _diameter(pts: Sequence[Point2]) -> Fraction:
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    return max(max(xs) - min(xs), max(ys) - min(ys))


def region_probes(pts: Sequence[Point2], region) -> list[Probe]:
    """Points that must be inside (vertices, interior samples) or outside a claimed center.

    Outside probes sit at 1/1024 of the region's bounding-box extent (the point
    set's extent for a single-point region) beyond each edge midpoint along
    the outward normal, or along the axes around a point region.
    """
    verts = list(region.vertices)
    probes = [Probe(f"vertex {i}", v, True) for i, v in enumerate(verts)]
    if not verts:
        return probes
    m = len(verts)
    avg = Point2(sum((v.x for v in verts), Fraction(0)) / m,
                 sum((v.y for v in verts), Fraction(0)) / m)
    probes.append(Probe("vertex average", avg, True))
    for i, v in enumerate(verts):
        probes.append(Probe(f"interior toward vertex {i}",
                            Point2((avg.x + v.x) / 2, (avg.y + v.y) / 2), True))

    if m == 1:
        step = _diameter(pts) / 1024
        p = verts[0]
        for dx, dy in ((1, 0), (0, 1), (-1, 0), (0, -1)):
            probes.append(Probe(f"axis ({dx},{dy})", Point2(p.x + dx * step, p.y + dy * step),
                                False))
        return probes

    step = _diameter(verts) / 1024
    edges = [(verts[i], verts[(i + 1) % m]) for i in range(m if m > 2 else 1)]
    for i, (a, b) in enumerate(edges):
        nx, ny = b.y - a.y, a.x - b.x          # right of a->b, outward for ccw
        norms = [(nx, ny)] if m > 2 else [(nx, ny), (-nx, -ny)]
        for nx, ny in norms:
            t = step / max(abs(nx), abs(ny))
            mid = Point2((a.x + b.x) / 2 + t * nx, (a.y + b.y) / 2 + t * ny)
            probes.append(Probe(f"outside edge {i}", mid, False))
    return probes


def oracle_region_agreement(pts: Sequence[Point2], region) -> AgreementReport:
    report = AgreementReport()
    for probe in region_probes(pts, region):
        report.probes += 1
        member = oracle_center_membership(probe.q, pts)
        if member != probe.inside:
            expect = "inside" if probe.inside else "outside"
            report.disagreements.append(f"{probe.label} {probe.q} should be {expect}")
    return report


@dataclass
class RecheckReport:
    crossings: list[tuple[int, tuple[int, int], tuple[int, int]]] = field(default_factory=list)
    duplicates: list[tuple[int, int, tuple[int, int]]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.crossings and not self.duplicates


def oracle_packing_recheck(packing, pts: Sequence[Point2]) -> RecheckReport:
    """Every crossing inside a tree and every undirected edge repeated across trees."""
    report = RecheckReport()
    edge_lists = [[(e[0], e[1]) for e in tree.edges] for tree in packing.trees]
    for t, edges in enumerate(edge_lists):
        for x in range(len(edges)):
            for y in range(x + 1, len(edges)):
                s = Segment(pts[edges[x][0]], pts[edges[x][1]])
                u = Segment(pts[edges[y][0]], pts[edges[y][1]])
                if segments_cross_properly(s, u):
                    report.crossings.append((t, edges[x], edges[y]))
    for t1 in range(len(edge_lists)):
        for t2 in range(t1 + 1, len(edge_lists)):
            for a, b in edge_lists[t1]:
                for c, d in edge_lists[t2]:
                    if (a, b) == (c, d) or (a, b) == (d, c):
                        report.duplicates.append((t1, t2, (min(a, b), max(a, b))))
    return report
