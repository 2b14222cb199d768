"""The Farey tessellation, its dual tree, and flip distances between triangles.

A theta-curve on the torus is represented only by its Farey triangle: the
three slopes of the simple closed curves it contains.  Flips of theta-curves
are exactly moves to an adjacent triangle, so the flip distance is the
distance in the dual tree.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterator

from . import kernels

__all__ = [
    "CapExceededError",
    "DegenerateSlopeError",
    "Slope",
    "INFINITY",
    "FareyTriangle",
    "FlipPath",
    "base_triangle",
    "unimodular",
    "neighbor",
    "flip",
    "bfs_distance",
    "bfs_ball",
    "geodesic_distance",
    "flip_path",
    "closest_triangle_with_vertex",
    "parse_triangle",
    "DEFAULT_RADIUS_CAP",
]

DEFAULT_RADIUS_CAP = 15

_SLOPE = re.compile(r"^(-?\d+)(?:/(-?\d+))?$")


class CapExceededError(RuntimeError):
    """The BFS oracle gave up before reaching its target."""


class DegenerateSlopeError(ValueError):
    """The slope already lies on the base triangle."""


@dataclass(frozen=True)
class Slope:
    """A point ``a/b`` of Q u {1/0}; infinity is ``Slope(1, 0)``."""

    a: int
    b: int

    def __post_init__(self):
        if self.b < 0:
            raise ValueError(f"slope denominator must be >= 0, got {self.a}/{self.b}")
        if self.b == 0:
            if self.a != 1:
                raise ValueError("infinity must be written 1/0")
        elif math.gcd(self.a, self.b) != 1:
            raise ValueError(f"{self.a}/{self.b} is not reduced")

    @classmethod
    def of(cls, a: int, b: int = 1) -> "Slope":
        """Normalize any nonzero pair to its canonical slope."""
        if a == 0 and b == 0:
            raise ValueError("0/0 is not a slope")
        g = math.gcd(a, b)
        a, b = a // g, b // g
        if b < 0 or (b == 0 and a < 0):
            a, b = -a, -b
        return cls(a, b)

    @classmethod
    def parse(cls, text: str) -> "Slope":
        s = text.strip()
        if s.lower() in ("inf", "infinity", "oo"):
            return INFINITY
        m = _SLOPE.match(s)
        if not m:
            raise ValueError(f"cannot parse slope {text!r}")
        b = int(m.group(2)) if m.group(2) is not None else 1
        return cls.of(int(m.group(1)), b)

    @property
    def is_infinite(self) -> bool:
        return self.b == 0

    def __str__(self):
        if self.b == 0:
            return "inf"
        if self.b == 1:
            return str(self.a)
        return f"{self.a}/{self.b}"

    def __lt__(self, other: "Slope") -> bool:
        return kernels.cmp_slope(self.a, self.b, other.a, other.b) < 0


INFINITY = Slope(1, 0)


def unimodular(s1: Slope, s2: Slope) -> bool:
    return abs(s1.a * s2.b - s1.b * s2.a) == 1


@dataclass(frozen=True)
class FareyTriangle:
    """Three pairwise unimodular slopes, kept in circular order (infinity last)."""

    vertices: tuple[Slope, Slope, Slope]

    def __post_init__(self):
        vs = tuple(self.vertices)
        if len(vs) != 3:
            raise ValueError("a Farey triangle has exactly three vertices")
        x, y, z = vs
        if x == y or y == z or x == z:
            raise ValueError(f"repeated vertex in {[str(v) for v in vs]}")
        for u, w in ((x, y), (y, z), (x, z)):
            if not unimodular(u, w):
                raise ValueError(f"{u} and {w} are not joined by a Farey edge")
        object.__setattr__(self, "vertices", tuple(sorted(vs)))

    @classmethod
    def of(cls, *slopes: Slope) -> "FareyTriangle":
        return cls(tuple(slopes))

    @classmethod
    def _from_key(cls, key: tuple[int, ...]) -> "FareyTriangle":
        # trusted path: key is canonical output of a kernel
        t = object.__new__(cls)
        object.__setattr__(
            t,
            "vertices",
            (Slope(key[0], key[1]), Slope(key[2], key[3]), Slope(key[4], key[5])),
        )
        return t

    @property
    def key(self) -> tuple[int, ...]:
        x, y, z = self.vertices
        return (x.a, x.b, y.a, y.b, z.a, z.b)

    def __contains__(self, s: Slope) -> bool:
        return s in self.vertices

    def edges(self) -> Iterator[tuple[Slope, Slope]]:
        x, y, z = self.vertices
        yield (x, y)
        yield (y, z)
        yield (x, z)

    def shared_vertices(self, other: "FareyTriangle") -> int:
        return len(set(self.vertices) & set(other.vertices))

    def __str__(self):
        return ",".join(str(v) for v in self.vertices)


@dataclass(frozen=True)
class FlipPath:
    """A geodesic run of triangles, each one flip from the last."""

    triangles: tuple[FareyTriangle, ...]

    def __post_init__(self):
        ts = self.triangles
        if not ts:
            raise ValueError("empty flip path")
        for s, t in zip(ts, ts[1:]):
            if s.shared_vertices(t) != 2:
                raise ValueError(f"{s} and {t} are not one flip apart")
        if len(set(ts)) != len(ts):
            raise ValueError("flip path revisits a triangle")

    def __len__(self):
        return len(self.triangles) - 1

    def __iter__(self):
        return iter(self.triangles)


def base_triangle(i: int) -> FareyTriangle:
    """The triangle with vertices ``i``, ``i+1`` and infinity."""
    return FareyTriangle._from_key((i, 1, i + 1, 1, 1, 0))


def neighbor(t: FareyTriangle, opposite: Slope) -> FareyTriangle:
    """Cross the edge of ``t`` that does not contain ``opposite``."""
    try:
        k = t.vertices.index(opposite)
    except ValueError:
        raise ValueError(f"{opposite} is not a vertex of {t}") from None
    return FareyTriangle._from_key(kernels.neighbor(t.key, k))


def flip(t: FareyTriangle, keep_edge: tuple[Slope, Slope]) -> FareyTriangle:
    u, w = keep_edge
    if u == w or u not in t or w not in t:
        raise ValueError(f"{u},{w} is not an edge of {t}")
    (opposite,) = [v for v in t.vertices if v != u and v != w]
    return neighbor(t, opposite)


def bfs_distance(
    t1: FareyTriangle, t2: FareyTriangle, radius_cap: int = DEFAULT_RADIUS_CAP
) -> int:
    """Flip distance by breadth-first search; the trusted oracle.

    Raises CapExceededError if ``t2`` is farther than ``radius_cap``.
    """
    if radius_cap < 0:
        raise ValueError("radius_cap must be >= 0")
    d = kernels.bfs_distance(t1.key, t2.key, radius_cap)
    if d < 0:
        raise CapExceededError(f"cap exceeded: {t2} is more than {radius_cap} flips from {t1}")
    return d


def bfs_ball(center: FareyTriangle, radius: int) -> dict[FareyTriangle, int]:
    """Every triangle within ``radius`` flips of ``center``, with its BFS depth."""
    return {
        FareyTriangle._from_key(k): d for k, d in kernels.bfs_ball(center.key, radius).items()
    }


def geodesic_distance(t1: FareyTriangle, t2: FareyTriangle) -> int:
    """Exact dual-tree distance via the separation walk (no search)."""
    return kernels.geodesic_distance(t1.key, t2.key)


def flip_path(t1: FareyTriangle, t2: FareyTriangle) -> FlipPath:
    return FlipPath(
        tuple(FareyTriangle._from_key(k) for k in kernels.geodesic_path(t1.key, t2.key))
    )


def closest_triangle_with_vertex(v: Slope, base: FareyTriangle) -> FareyTriangle:
    """The triangle through which the geodesic from ``base`` enters the fan of ``v``."""
    if v in base:
        raise DegenerateSlopeError(f"degenerate: slope {v} on base triangle {base}")
    _, key = kernels.walk_to_slope(base.key, v.a, v.b)
    return FareyTriangle._from_key(key)


def parse_triangle(text: str) -> FareyTriangle:
    """Parse ``"a/b,c/d,e/f"`` (``inf`` allowed); rejects non-Farey triples."""
    parts = text.strip().split(",")
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated slopes, got {text!r}")
    return FareyTriangle(tuple(Slope.parse(p) for p in parts))
