"""Exact complexity bounds for Dehn surgeries on the figure-eight knot.

The bound omega(p/q) is computed from its closed formula and, independently,
by assembling relative spines along flip paths in the Farey tessellation.
"""

from .kernels import BACKEND
from .rationals import (
    ContinuedFraction,
    InfiniteSlopeError,
    SurgeryCoefficient,
    expand_cf,
    normalize,
    parse_coefficient,
    s_sum,
)
from .farey import (
    INFINITY,
    CapExceededError,
    DegenerateSlopeError,
    FareyTriangle,
    FlipPath,
    Slope,
    base_triangle,
    bfs_distance,
    closest_triangle_with_vertex,
    flip,
    flip_path,
    geodesic_distance,
    neighbor,
    parse_triangle,
    unimodular,
)
from .assembly import (
    AssemblyResult,
    Block,
    BoundaryTorus,
    assemble,
    flip_block,
    knot_exterior_block,
    solid_torus_block,
)
from .surgery import (
    Hyperbolicity,
    OmegaReport,
    a_value,
    classify,
    distance_identities,
    enumerate_omega_le,
    omega,
    pipeline,
)

__version__ = "0.1.0"
