"""Blocks with theta-curve boundary patterns, and assembling them.

A block stands for a manifold whose boundary tori each carry a theta-curve,
together with a simple relative spine of known interior true-vertex count.
Gluing two blocks along tori whose theta classes sit ``d`` flips apart costs
``d`` extra vertices on top of the two blocks' own counts.

Theta classes of glued tori must already be expressed in one coordinate
frame; the gluing homeomorphism itself is never materialized.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .farey import (
    FareyTriangle,
    Slope,
    base_triangle,
    closest_triangle_with_vertex,
    geodesic_distance,
    neighbor,
)

__all__ = [
    "BoundaryTorus",
    "Block",
    "AssemblyResult",
    "KNOT_EXTERIOR_VERTICES",
    "solid_torus_triangles",
    "solid_torus_block",
    "flip_block",
    "knot_exterior_block",
    "assemble",
]

# interior true vertices of each relative spine of the figure-eight exterior
KNOT_EXTERIOR_VERTICES = 10
KNOT_EXTERIOR_INDICES = (0, 1, 2, 3)


@dataclass(frozen=True)
class BoundaryTorus:
    label: str
    theta: FareyTriangle


@dataclass(frozen=True)
class Block:
    name: str
    boundaries: tuple[BoundaryTorus, ...]
    interior_vertices: int

    def __post_init__(self):
        if self.interior_vertices < 0:
            raise ValueError("interior vertex count must be >= 0")
        labels = [b.label for b in self.boundaries]
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate boundary labels in {self.name}: {labels}")

    def boundary(self, label: str) -> BoundaryTorus:
        for b in self.boundaries:
            if b.label == label:
                return b
        raise KeyError(f"block {self.name!r} has no boundary torus {label!r}")


@dataclass(frozen=True)
class AssemblyResult:
    block: Block
    cost_breakdown: tuple[tuple[str, int], ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "block": self.block.name,
            "interior_vertices": self.block.interior_vertices,
            "boundaries": [
                {"label": b.label, "theta": str(b.theta)} for b in self.block.boundaries
            ],
            "cost_breakdown": [
                {"step": step, "vertices": v} for step, v in self.cost_breakdown
            ],
        }


def solid_torus_triangles(
    meridian: Slope, base: FareyTriangle
) -> tuple[FareyTriangle, FareyTriangle]:
    """Return ``(meridian triangle, spine triangle)`` for a solid torus.

    The meridian triangle is the one nearest ``base`` among those having the
    meridian as a vertex; the spine triangle is its neighbour across the edge
    opposite the meridian, so it is one flip away and avoids the meridian.
    """
    if meridian in base:
        raise ValueError(f"meridian on base triangle: {meridian} is a vertex of {base}")
    t_m = closest_triangle_with_vertex(meridian, base)
    t_v = neighbor(t_m, meridian)
    assert meridian not in t_v and t_v.shared_vertices(t_m) == 2
    return t_m, t_v


def solid_torus_block(meridian: Slope, base: FareyTriangle) -> Block:
    _, t_v = solid_torus_triangles(meridian, base)
    return Block(
        name=f"V({meridian})",
        boundaries=(BoundaryTorus("boundary", t_v),),
        interior_vertices=0,
    )


def flip_block(theta_from: FareyTriangle, theta_to: FareyTriangle) -> Block:
    """The product ``T x [0, 1]`` realizing one flip, with a single vertex."""
    if theta_from.shared_vertices(theta_to) != 2:
        raise ValueError(f"{theta_from} and {theta_to} are not one flip apart")
    return Block(
        name=f"flip({theta_from} -> {theta_to})",
        boundaries=(BoundaryTorus("bottom", theta_from), BoundaryTorus("top", theta_to)),
        interior_vertices=1,
    )


def knot_exterior_block(i: int) -> Block:
    if i not in KNOT_EXTERIOR_INDICES:
        raise ValueError(f"no spine constant available for i={i}; only 0..3 are known")
    return Block(
        name=f"E(4_1)[{i}]",
        boundaries=(BoundaryTorus("boundary", base_triangle(i)),),
        interior_vertices=KNOT_EXTERIOR_VERTICES,
    )


def assemble(b1: Block, t1_label: str, b2: Block, t2_label: str) -> AssemblyResult:
    """Glue ``b1`` and ``b2`` along the named tori.

    The result keeps every other boundary torus; labels that would collide
    are qualified with their block's name.
    """
    if b1 is b2 and t1_label == t2_label:
        raise ValueError("cannot glue a boundary torus to itself")
    theta1 = b1.boundary(t1_label).theta
    theta2 = b2.boundary(t2_label).theta
    d = geodesic_distance(theta1, theta2)

    rest1 = [b for b in b1.boundaries if b.label != t1_label]
    rest2 = [b for b in b2.boundaries if b.label != t2_label]
    clash = {b.label for b in rest1} & {b.label for b in rest2}
    if clash:
        rest1 = [BoundaryTorus(f"{b1.name}.{b.label}", b.theta) for b in rest1]
        rest2 = [BoundaryTorus(f"{b2.name}.{b.label}", b.theta) for b in rest2]

    block = Block(
        name=f"({b1.name} + {b2.name})",
        boundaries=tuple(rest1 + rest2),
        interior_vertices=b1.interior_vertices + b2.interior_vertices + d,
    )
    breakdown = (
        (b1.name, b1.interior_vertices),
        (b2.name, b2.interior_vertices),
        (f"flip distance {theta1} -> {theta2}", d),
    )
    return AssemblyResult(block, breakdown)
