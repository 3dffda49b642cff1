"""Reproducible random integer point sets in general position."""

from __future__ import annotations

from .geometry import Point2, cross, point
from .rng import Lcg64

MAX_ATTEMPTS = 1_000_000


def generate_points(n: int, seed: int = 0, span: int | None = None) -> list[Point2]:
    """n integer points in [0, span]^2, no duplicates and no three collinear.

    Candidates come from :class:`Lcg64` as (x, y) = (below(span+1), below(span+1)).
    A candidate equal to, or collinear with two of, the points accepted so far
    is discarded and the next one drawn.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    if span is None:
        span = max(10_000, n * n)
    if span < n * n:
        raise ValueError(f"span must be at least n^2 = {n * n}")
    if span >= 1 << 32:
        raise ValueError("span must be below 2^32")
    rng = Lcg64(seed)
    accepted: list[tuple[int, int]] = []
    taken: set[tuple[int, int]] = set()
    for _ in range(MAX_ATTEMPTS):
        if len(accepted) == n:
            break
        q = (rng.below(span + 1), rng.below(span + 1))
        if q in taken:
            continue
        if any(cross(accepted[a], accepted[b], q) == 0
               for a in range(len(accepted)) for b in range(a + 1, len(accepted))):
            continue
        accepted.append(q)
        taken.add(q)
    else:
        if len(accepted) < n:
            raise RuntimeError(f"gave up after {MAX_ATTEMPTS} candidates")
    return [point(x, y) for x, y in accepted]
