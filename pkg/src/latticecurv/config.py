"""Particle configurations: representation, file I/O and generators.

Lengths are in units of the optimal bond length.
"""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass
from functools import cached_property
from typing import IO

import numpy as np
from scipy.spatial import cKDTree

from . import lattice
from .errors import (
    BondRangeError,
    DuplicatePointError,
    ParseError,
    SamplingBudgetError,
    UndefinedDistanceError,
)

DEFAULT_TOL = 1e-9

Point = tuple[float, float]


@dataclass(frozen=True, eq=False)
class Configuration:
    """Ordered, pairwise distinct points in the plane.

    Immutable; the point order is the vertex numbering used everywhere
    downstream.
    """

    points: tuple[Point, ...]
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        pts = tuple((float(x), float(y)) for x, y in self.points)
        object.__setattr__(self, "points", pts)
        if not all(math.isfinite(c) for p in pts for c in p):
            raise ParseError("non-finite coordinate")
        if len(pts) >= 2:
            close = cKDTree(self.array).query_pairs(self.tol, output_type="ndarray")
            if len(close):
                i, j = (int(v) for v in close[0])
                raise DuplicatePointError(
                    f"points {i} and {j} coincide within tol={self.tol}",
                    indices=[i, j],
                )

    def __len__(self) -> int:
        return len(self.points)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Configuration):
            return NotImplemented
        return self.points == other.points and self.tol == other.tol

    def __hash__(self) -> int:
        return hash((self.points, self.tol))

    @cached_property
    def array(self) -> np.ndarray:
        return np.asarray(self.points, dtype=float).reshape(-1, 2)

    def subset(self, indices) -> Configuration:
        """Sub-configuration in the given (order-preserving) index sequence."""
        return Configuration(tuple(self.points[i] for i in indices), self.tol)

    def translated(self, dx: float, dy: float) -> Configuration:
        return Configuration(tuple((x + dx, y + dy) for x, y in self.points), self.tol)

    def rotated(self, angle: float) -> Configuration:
        c, s = math.cos(angle), math.sin(angle)
        return Configuration(
            tuple((c * x - s * y, s * x + c * y) for x, y in self.points), self.tol
        )


@dataclass(frozen=True)
class BondRange:
    alpha: float = 1.0
    beta: float = 1.0

    def __post_init__(self):
        if not (0 < self.alpha <= 1 <= self.beta):
            raise BondRangeError(
                "bond range needs 0 < alpha <= 1 <= beta",
                alpha=self.alpha,
                beta=self.beta,
            )

    def contains(self, r: float, tol: float = DEFAULT_TOL) -> bool:
        return self.alpha - tol <= r <= self.beta + tol


UNIT_RANGE = BondRange(1.0, 1.0)


# ---------------------------------------------------------------- file I/O


def _read_text(source) -> str:
    if isinstance(source, bytes):
        return source.decode("utf-8")
    if isinstance(source, str):
        return source
    data = source.read()
    return data.decode("utf-8") if isinstance(data, bytes) else data


def load_configuration(
    source: bytes | str | IO, format: str = "json", tol: float | None = None
) -> Configuration:
    """Parse ``xy-text`` or ``json`` input.

    ``source`` is the document itself (bytes/str) or a readable stream.
    An explicit ``tol`` overrides the one stored in a json document.
    """
    text = _read_text(source)
    if format == "json":
        try:
            doc = json.loads(text)
            pts = [(float(p[0]), float(p[1])) for p in doc["points"]]
            if any(len(p) != 2 for p in doc["points"]):
                raise ValueError("points must be pairs")
        except (ValueError, KeyError, TypeError, IndexError) as exc:
            raise ParseError(f"malformed json configuration: {exc}") from None
        if tol is None:
            tol = float(doc.get("tol", DEFAULT_TOL))
    elif format in ("xy-text", "xy", "text"):
        pts = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) != 2:
                raise ParseError(f"line {lineno}: expected 'x y'", line=lineno)
            try:
                pts.append((float(fields[0]), float(fields[1])))
            except ValueError:
                raise ParseError(f"line {lineno}: not a number", line=lineno) from None
    else:
        raise ParseError(f"unknown format {format!r}")
    return Configuration(tuple(pts), DEFAULT_TOL if tol is None else tol)


def dump_configuration(X: Configuration, format: str = "json") -> str:
    if format == "json":
        return json.dumps({"points": [list(p) for p in X.points], "tol": X.tol})
    buf = io.StringIO()
    for x, y in X.points:
        buf.write(f"{x!r} {y!r}\n")
    return buf.getvalue()


def save_configuration(X: Configuration, path, format: str | None = None) -> None:
    if format is None:
        format = "json" if str(path).endswith(".json") else "xy-text"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_configuration(X, format))


def read_configuration(path, format: str | None = None, tol: float | None = None):
    if format is None:
        format = "json" if str(path).endswith(".json") else "xy-text"
    with open(path, "rb") as fh:
        return load_configuration(fh.read(), format, tol)


# ---------------------------------------------------------------- geometry


def min_pairwise_distance(X: Configuration) -> float:
    if len(X) < 2:
        raise UndefinedDistanceError("minimum distance needs at least two points", n=len(X))
    dist, _ = cKDTree(X.array).query(X.array, k=2)
    return float(dist[:, 1].min())


# ---------------------------------------------------------------- generators


def generate_lattice_patch(shells: int, tol: float = DEFAULT_TOL) -> Configuration:
    """Hexagonal patch H_m: lattice points within graph distance ``shells``."""
    if shells < 0:
        raise ValueError("shells must be >= 0")
    return Configuration(tuple(lattice.to_xy(c) for c in lattice.hex_patch(shells)), tol)


def lattice_configuration(cells, tol: float = DEFAULT_TOL) -> Configuration:
    return Configuration(tuple(lattice.to_xy(c) for c in cells), tol)


class SplitMix64:
    """64-bit splitmix generator; cheap and reproducible across languages."""

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def uniform(self) -> float:
        """Float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def randrange(self, n: int) -> int:
        return self.next_u64() % n


def generate_random_config(
    n: int,
    seed: int,
    dmin: float = 0.75,
    max_attempts: int | None = None,
    tol: float = DEFAULT_TOL,
) -> Configuration:
    """Rejection-sample ``n`` points in a square of side 2*sqrt(n), pairwise >= dmin."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if dmin <= 1 / math.sqrt(2):
        raise ValueError("dmin must exceed 1/sqrt(2) for the bond graph to be planar")
    side = 2.0 * math.sqrt(n)
    rng = SplitMix64(seed)
    budget = max_attempts if max_attempts is not None else 1000 * n
    pts = np.empty((n, 2))
    count = 0
    attempts = 0
    while count < n:
        if attempts >= budget:
            raise SamplingBudgetError(
                f"placed {count} of {n} points in {attempts} attempts",
                attempts=attempts,
                placed=count,
            )
        attempts += 1
        p = (side * rng.uniform(), side * rng.uniform())
        if count and np.min(np.hypot(pts[:count, 0] - p[0], pts[:count, 1] - p[1])) < dmin:
            continue
        pts[count] = p
        count += 1
    return Configuration(tuple(map(tuple, pts.tolist())), tol)
