"""Command line: ``treepack {pack,center,gen,verify,render}``.

Exit status: 0 success, 1 bad input (unreadable file, points not in general
position), 2 a failed verification (a bug, for valid input).
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .center import (
    Centerpoint,
    classify_dimension,
    compute_center_region,
    depth_threshold,
)
from .errors import DimensionError, GeneralPositionError, VerificationError
from .formats import PackingDocument, PointFileError, format_points, read_points
from .generate import generate_points
from .oracle import oracle_region_agreement
from .packing import DirectedEdge, Packing, RadialOrder, SpanningTree, pack_spanning_trees
from .svg import render_svg
from .verification import verify_trees

log = logging.getLogger("treepack")


class InputError(Exception):
    pass


def _load(path: str):
    try:
        return read_points(path)
    except (OSError, PointFileError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _describe_violation(exc: GeneralPositionError, pts) -> str:
    where = ", ".join(f"{i}:{pts[i]}" for i in exc.witness)
    return f"not in general position: {exc} [{where}]"


def packing_from_document(doc: PackingDocument) -> Packing:
    trees = tuple(
        SpanningTree(tuple(DirectedEdge(*e) for e in t.edges), t.start, t.residue,
                     DirectedEdge(*t.removed) if t.removed else None)
        for t in doc.trees)
    center = Centerpoint(doc.centerpoint, doc.center_in_P, doc.center_index)
    return Packing(trees, center, RadialOrder(doc.centerpoint, doc.radial_order, doc.center_index))


def cmd_pack(args) -> int:
    pts = _load(args.points)
    try:
        packing = pack_spanning_trees(pts, seed=args.seed, verify=not args.no_verify)
    except GeneralPositionError as exc:
        raise InputError(_describe_violation(exc, pts)) from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    except (VerificationError, DimensionError) as exc:
        print(f"treepack: verification failed: {exc}", file=sys.stderr)
        return 2
    doc = PackingDocument.from_packing(packing, len(pts), args.seed)
    sys.stdout.write(doc.to_json())
    if args.svg:
        Path(args.svg).write_text(render_svg(pts, packing=packing), encoding="utf-8")
    return 0


def cmd_center(args) -> int:
    pts = _load(args.points)
    try:
        region = compute_center_region(pts)
    except GeneralPositionError as exc:
        raise InputError(_describe_violation(exc, pts)) from None
    except ValueError as exc:
        raise InputError(str(exc)) from None
    status = 0
    lines = [f"n: {len(pts)}", f"alpha: {region.alpha}",
             f"halfplanes: {len(region.defining_halfplanes)}"]
    try:
        report = classify_dimension(region, pts)
        lines.append(f"dimension: {report.dimension}")
    except DimensionError as exc:
        lines.append(f"dimension: {region.dimension} (INVALID: {exc})")
        report = None
        status = 2
    if region.dimension == 0:
        p = region.vertices[0]
        lines.append(f"point: {p.x} {p.y}")
        if report is not None:
            lines.append("point in P: " + (f"yes (index {report.point_index})"
                                           if report.point_in_P else "no"))
        lines.append(f"n ≡ 1 (mod 3): {'yes' if len(pts) % 3 == 1 else 'no'}")
    else:
        lines.append(f"vertices: {len(region.vertices)}")
        lines += [f"  {v.x} {v.y}" for v in region.vertices]
    if args.oracle:
        agreement = oracle_region_agreement(pts, region)
        verdict = "yes" if agreement.ok else "NO"
        lines.append(f"oracle agreement: {verdict} ({agreement.probes} probes)")
        lines += [f"  {d}" for d in agreement.disagreements]
        if not agreement.ok:
            status = 2
    print("\n".join(lines))
    if args.svg:
        Path(args.svg).write_text(render_svg(pts, region=region), encoding="utf-8")
    return status


def cmd_gen(args) -> int:
    try:
        pts = generate_points(args.n, args.seed, args.span)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    span = args.span if args.span is not None else max(10_000, args.n * args.n)
    sys.stdout.write(format_points(pts, [f"treepack gen n={args.n} seed={args.seed} span={span}"]))
    return 0


def cmd_verify(args) -> int:
    pts = _load(args.points)
    try:
        doc = PackingDocument.from_json(Path(args.document).read_text(encoding="utf-8"))
    except (OSError, ValueError, KeyError) as exc:
        raise InputError(f"{args.document}: {exc}") from None
    if doc.n != len(pts):
        raise InputError(f"document is for n={doc.n}, point file has {len(pts)} points")
    packing = packing_from_document(doc)
    summary = verify_trees(packing.trees, doc.centerpoint, pts)
    for key, value in summary.as_dict().items():
        print(f"{key}: {value}")
    for finding in summary.findings:
        print(f"  {finding}")
    return 0 if summary.ok else 2


def cmd_render(args) -> int:
    pts = _load(args.points)
    packing = region = None
    if args.packing:
        doc = PackingDocument.from_json(Path(args.packing).read_text(encoding="utf-8"))
        packing = packing_from_document(doc)
    if args.center or not args.packing:
        try:
            region = compute_center_region(pts)
        except GeneralPositionError as exc:
            raise InputError(_describe_violation(exc, pts)) from None
    svg = render_svg(pts, packing=packing, region=region)
    if args.output:
        Path(args.output).write_text(svg, encoding="utf-8")
    else:
        sys.stdout.write(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treepack",
        description="Exact centers and floor(n/3) edge-disjoint plane spanning trees.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pack", help="pack plane spanning trees, print a JSON document")
    p.add_argument("points")
    p.add_argument("--seed", type=int, default=0, help="centerpoint selection seed")
    p.add_argument("--no-verify", action="store_true")
    p.add_argument("--svg", metavar="PATH")
    p.set_defaults(func=cmd_pack)

    p = sub.add_parser("center", help="report the center region and its dimension")
    p.add_argument("points")
    p.add_argument("--oracle", action="store_true", help="cross-check with brute force")
    p.add_argument("--svg", metavar="PATH")
    p.set_defaults(func=cmd_center)

    p = sub.add_parser("gen", help="random integer points in general position")
    p.add_argument("n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--span", type=int, default=None,
                   help="coordinates in [0, span]; default max(10000, n^2)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="re-check a packing document against its point file")
    p.add_argument("document")
    p.add_argument("points")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw points with a packing and/or the center")
    p.add_argument("points")
    p.add_argument("--packing", metavar="DOC")
    p.add_argument("--center", action="store_true")
    p.add_argument("-o", "--output", metavar="PATH")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"treepack: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
