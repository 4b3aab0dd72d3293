"""Cartesian 3-vectors and points in space.

``Vec3`` carries the full vector algebra and is used for displacement,
velocity, acceleration, force, and field values alike; SI units are a
documentation convention, not part of the type. ``Position`` is a point
in space and deliberately not a vector: adding two points is meaningless,
so ``Position`` supports only differencing (which yields a ``Vec3``) and
shifting by one. The origin is an arbitrary fixed reference; all physics
in this package depends only on displacements between points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple

__all__ = [
    "Vec3",
    "Position",
    "ZERO",
    "X_HAT",
    "Y_HAT",
    "Z_HAT",
    "ORIGIN",
    "vec_sum",
    "displacement",
    "format_scalar",
    "parse_triple",
]


class Vec3(NamedTuple):
    """Immutable 3D vector with componentwise algebra.

    Scalar multiplication works from both sides, ``/`` divides by a
    scalar, and ``dot``/``cross``/``magnitude`` round out the algebra.
    Tuple concatenation and repetition are overridden by the vector
    operators, which is the point.
    """

    x: float
    y: float
    z: float

    def __add__(self, other: "Vec3") -> "Vec3":  # type: ignore[override]
        return Vec3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Vec3") -> "Vec3":
        return Vec3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Vec3":
        return Vec3(-self.x, -self.y, -self.z)

    def __mul__(self, scalar: float) -> "Vec3":  # type: ignore[override]
        if not isinstance(scalar, (int, float)):
            return NotImplemented
        return Vec3(self.x * scalar, self.y * scalar, self.z * scalar)

    __rmul__ = __mul__  # type: ignore[assignment]

    def __truediv__(self, scalar: float) -> "Vec3":
        return Vec3(self.x / scalar, self.y / scalar, self.z / scalar)

    def dot(self, other: "Vec3") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "Vec3") -> "Vec3":
        """Right-handed cross product."""
        return Vec3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def magnitude(self) -> float:
        """Euclidean length, sqrt(v . v)."""
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)


ZERO = Vec3(0.0, 0.0, 0.0)
X_HAT = Vec3(1.0, 0.0, 0.0)
Y_HAT = Vec3(0.0, 1.0, 0.0)
Z_HAT = Vec3(0.0, 0.0, 1.0)


def vec_sum(vectors: Iterable[Vec3]) -> Vec3:
    """Sum of a collection of vectors; the empty sum is the zero vector."""
    total = ZERO
    for v in vectors:
        total = total + v
    return total


@dataclass(frozen=True, slots=True)
class Position:
    """A point in space, in meters, relative to a fixed Cartesian origin.

    Not a vector: there is intentionally no addition of two positions
    anywhere in this API. Difference two points with :func:`displacement`
    or translate one with :meth:`shifted`.
    """

    x: float
    y: float
    z: float

    def shifted(self, d: Vec3) -> "Position":
        """The point reached by translating this one through ``d``."""
        return Position(self.x + d.x, self.y + d.y, self.z + d.z)


ORIGIN = Position(0.0, 0.0, 0.0)


def displacement(start: Position, end: Position) -> Vec3:
    """Vector pointing from ``start`` to ``end``.

    ``start.shifted(displacement(start, end))`` recovers ``end``.
    """
    return Vec3(end.x - start.x, end.y - start.y, end.z - start.z)


def format_scalar(value: float) -> str:
    """Shortest decimal string that parses back to the same double.

    Integral values drop the trailing ``.0`` so CSV output reads
    ``0,1,0`` rather than ``0.0,1.0,0.0``.
    """
    text = repr(float(value))
    if text.endswith(".0"):
        return text[:-2]
    return text


def parse_triple(text: str) -> tuple[float, float, float]:
    """Parse the ``x,y,z`` text form used on the CLI and in CSV files.

    Raises ValueError for anything but three comma-separated finite numbers.
    """
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"expected 'x,y,z', got {text!r}")
    values = tuple(float(p) for p in parts)
    if not all(math.isfinite(v) for v in values):
        raise ValueError(f"components must be finite, got {text!r}")
    return values
