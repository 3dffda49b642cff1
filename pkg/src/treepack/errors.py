"""Exception types shared across the package."""

from __future__ import annotations


class GeneralPositionError(ValueError):
    """Input has a duplicate point or three collinear points."""

    def __init__(self, kind: str, witness: tuple[int, ...]):
        self.kind = kind
        self.witness = witness
        if kind == "duplicate":
            msg = f"duplicate points at indices {witness[0]} and {witness[1]}"
        else:
            msg = "collinear points at indices {} {} {}".format(*witness)
        super().__init__(msg)


class RadialTieError(ValueError):
    """Two points lie on the same ray from the center of a radial sort."""


class DimensionError(RuntimeError):
    """The computed center is neither 2-dimensional nor a single input point."""


class VerificationError(RuntimeError):
    """A constructed packing failed one of its certificate checks."""

    def __init__(self, summary):
        self.summary = summary
        super().__init__("; ".join(summary.findings) or "verification failed")
