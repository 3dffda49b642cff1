"""Text formats: point files and packing documents.

Point file: one point per line, ``x y``, each coordinate an integer, a
decimal literal (``-1.25``) or a fraction (``3/4``). ``#`` starts a comment.
Decimals are read exactly (``0.1`` is 1/10). Point indices in every other
document are 0-based positions among the non-comment lines.

Packing document: UTF-8 JSON, two-space indent, keys in this fixed order::

    format, n, seed, centerpoint{x, y, in_P, index}, center_dimension,
    radial_order, trees[{start, residue, removed, edges}], verification

Rationals are strings (``"-937/1624"``), edges are ``[tail, head]`` pairs.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .geometry import Point2, scalar

FORMAT_TAG = "treepack-packing/1"

_FLAT_ARRAY = re.compile(r"\[[-\d,\s]*\]")


class PointFileError(ValueError):
    pass


def parse_points(text: str) -> list[Point2]:
    pts: list[Point2] = []
    seen: dict[Point2, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise PointFileError(f"line {lineno}: expected 'x y', got {raw.strip()!r}")
        try:
            p = Point2(scalar(fields[0]), scalar(fields[1]))
        except (ValueError, ZeroDivisionError) as exc:
            raise PointFileError(f"line {lineno}: {exc}") from None
        if p in seen:
            raise PointFileError(f"line {lineno}: duplicate of point {seen[p]} {p}")
        seen[p] = len(pts)
        pts.append(p)
    return pts


def read_points(path: str | Path) -> list[Point2]:
    return parse_points(Path(path).read_text(encoding="utf-8"))


def format_points(pts: Iterable[Point2], comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines += [f"{p.x} {p.y}" for p in pts]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class TreeRecord:
    start: int
    residue: str
    removed: tuple[int, int] | None
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class PackingDocument:
    n: int
    seed: int
    centerpoint: Point2
    center_in_P: bool
    center_index: int | None
    center_dimension: int
    radial_order: tuple[int, ...]
    trees: tuple[TreeRecord, ...]
    verification: dict = field(default_factory=lambda: {"status": "skipped"})

    @classmethod
    def from_packing(cls, packing, n: int, seed: int) -> PackingDocument:
        cp = packing.centerpoint
        trees = tuple(
            TreeRecord(t.start_index, t.residue,
                       tuple(t.removed_edge) if t.removed_edge else None,
                       tuple(tuple(e) for e in t.edges))
            for t in packing.trees)
        verification = (packing.verification.as_dict() if packing.verification
                        else {"status": "skipped"})
        dimension = packing.region.dimension if packing.region else (0 if cp.in_P else 2)
        return cls(n, seed, cp.c, cp.in_P, cp.index, dimension,
                   tuple(packing.radial_order.order), trees, verification)

    def to_json(self) -> str:
        doc = {
            "format": FORMAT_TAG,
            "n": self.n,
            "seed": self.seed,
            "centerpoint": {
                "x": str(self.centerpoint.x),
                "y": str(self.centerpoint.y),
                "in_P": self.center_in_P,
                "index": self.center_index,
            },
            "center_dimension": self.center_dimension,
            "radial_order": list(self.radial_order),
            "trees": [
                {
                    "start": t.start,
                    "residue": t.residue,
                    "removed": list(t.removed) if t.removed else None,
                    "edges": [list(e) for e in t.edges],
                }
                for t in self.trees
            ],
            "verification": self.verification,
        }
        text = json.dumps(doc, indent=2)
        return _FLAT_ARRAY.sub(lambda m: json.dumps(json.loads(m.group())), text) + "\n"

    @classmethod
    def from_json(cls, text: str) -> PackingDocument:
        doc = json.loads(text)
        if doc.get("format") != FORMAT_TAG:
            raise ValueError(f"not a {FORMAT_TAG} document")
        cp = doc["centerpoint"]
        trees = tuple(
            TreeRecord(t["start"], t["residue"],
                       tuple(t["removed"]) if t["removed"] else None,
                       tuple(tuple(e) for e in t["edges"]))
            for t in doc["trees"])
        return cls(doc["n"], doc["seed"], Point2(Fraction(cp["x"]), Fraction(cp["y"])),
                   cp["in_P"], cp["index"], doc["center_dimension"],
                   tuple(doc["radial_order"]), trees, doc["verification"])
