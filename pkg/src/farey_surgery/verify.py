"""Batch cross-checks: walk vs. BFS oracle, flip paths, and the slope sweeps."""

from __future__ import annotations

import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .farey import (
    FareyTriangle,
    Slope,
    base_triangle,
    bfs_ball,
    bfs_distance,
    closest_triangle_with_vertex,
    flip_path,
    geodesic_distance,
    neighbor,
)
from .assembly import assemble, knot_exterior_block, solid_torus_block, solid_torus_triangles
from .rationals import SurgeryCoefficient, coefficients_with_sum_at_most, s_sum
from .surgery import Hyperbolicity, classify, omega

__all__ = [
    "CheckResult",
    "max_workers",
    "random_walk",
    "check_oracle_ball",
    "check_random_pairs",
    "check_flip_paths",
    "check_distance_law",
    "check_slope_identities",
    "run_all",
]

THREADS_ENV = "FAREY_SURGERY_THREADS"
MAX_FAILURES_KEPT = 20


@dataclass
class CheckResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        if len(self.failures) < MAX_FAILURES_KEPT:
            self.failures.append(msg)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.checks} checks, {len(self.failures)} failures"


def max_workers() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return min(8, os.cpu_count() or 1)


def _map(fn, items):
    workers = max_workers()
    if workers == 1 or len(items) < 256:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (4 * workers))
    with ThreadPoolExecutor(workers) as pool:
        # ordered results keep output deterministic
        return list(pool.map(fn, items, chunksize=chunk))


class _Fault:
    """Shifts exactly one measured distance by +1 (harness self-test)."""

    def __init__(self, enabled: bool):
        self.armed = enabled

    def __call__(self, d: int) -> int:
        if self.armed:
            self.armed = False
            return d + 1
        return d


def random_walk(rng: random.Random, start: FareyTriangle, steps: int) -> FareyTriangle:
    t = start
    for _ in range(steps):
        t = neighbor(t, t.vertices[rng.randrange(3)])
    return t


def check_oracle_ball(radius: int, fault: bool = False) -> CheckResult:
    """Walk distance from the base triangle vs. BFS depth, for the whole ball."""
    res = CheckResult(f"oracle ball radius {radius}")
    bump = _Fault(fault)
    base = base_triangle(0)
    for t, depth in sorted(bfs_ball(base, radius).items(), key=lambda kv: (kv[1], kv[0].key)):
        d = bump(geodesic_distance(base, t))
        res.checks += 1
        if d != depth:
            res.fail(f"{t}: walk {d} vs bfs {depth}")
    return res


def check_random_pairs(count: int, radius: int, seed: int, fault: bool = False) -> CheckResult:
    """Random pairs at most ``radius`` flips apart: walk vs. ``bfs_distance``."""
    res = CheckResult(f"oracle random pairs ({count}, radius {radius}, seed {seed})")
    bump = _Fault(fault)
    rng = random.Random(seed)
    base = base_triangle(0)
    for _ in range(count):
        t1 = random_walk(rng, base, rng.randint(0, 2 * radius))
        t2 = random_walk(rng, t1, rng.randint(0, radius))
        d = bump(geodesic_distance(t1, t2))
        res.checks += 1
        try:
            oracle = bfs_distance(t1, t2, radius)
        except RuntimeError as exc:
            res.fail(f"{t1} | {t2}: {exc}")
            continue
        if d != oracle:
            res.fail(f"{t1} | {t2}: walk {d} vs bfs {oracle}")
    return res


def check_flip_paths(count: int, radius: int, seed: int) -> CheckResult:
    res = CheckResult(f"flip paths ({count}, seed {seed})")
    rng = random.Random(seed)
    base = base_triangle(0)
    for _ in range(count):
        t1 = random_walk(rng, base, rng.randint(0, 2 * radius))
        t2 = random_walk(rng, t1, rng.randint(0, radius))
        res.checks += 1
        try:
            path = flip_path(t1, t2)
        except ValueError as exc:
            res.fail(f"{t1} | {t2}: invalid path: {exc}")
            continue
        tris = path.triangles
        if tris[0] != t1 or tris[-1] != t2:
            res.fail(f"{t1} | {t2}: wrong endpoints")
        elif len(path) != geodesic_distance(t1, t2):
            res.fail(f"{t1} | {t2}: length {len(path)} != distance")
    return res


def _distance_law(x: SurgeryCoefficient) -> str | None:
    base = base_triangle(0)
    t_m = closest_triangle_with_vertex(Slope(x.p, x.q), base)
    d = geodesic_distance(t_m, base)
    s = s_sum(x)
    if d != s - 1:
        return f"{x}: d(m, 0) = {d}, S - 1 = {s - 1}"
    return None


def check_distance_law(max_sum: int) -> CheckResult:
    """``d(meridian triangle, base) = S - 1`` for all ``p/q`` with ``S <= max_sum``."""
    res = CheckResult(f"distance law S <= {max_sum}")
    slopes = [
        x for x in coefficients_with_sum_at_most(max_sum) if not (x.q == 1 and x.p in (0, 1))
    ]
    for x, err in zip(slopes, _map(_distance_law, slopes)):
        res.checks += 1
        if err:
            res.fail(err)
    return res


def _slope_record(x: SurgeryCoefficient) -> tuple[int, int, int, int, int]:
    base = base_triangle(0)
    z = min(x.integer_part, 3)
    meridian = Slope(x.p, x.q)
    t_m, t_v = solid_torus_triangles(meridian, base)
    glued = assemble(knot_exterior_block(z), "boundary", solid_torus_block(meridian, base), "boundary")
    return (
        geodesic_distance(t_m, base),
        geodesic_distance(t_v, base),
        geodesic_distance(t_v, base_triangle(z)),
        glued.block.interior_vertices,
        z,
    )


def check_slope_identities(max_sum: int, fault: bool = False) -> CheckResult:
    """Farey identities and formula/pipeline agreement for hyperbolic ``S <= max_sum``."""
    res = CheckResult(f"identities + pipeline S <= {max_sum}")
    bump = _Fault(fault)
    slopes = [
        x
        for x in coefficients_with_sum_at_most(max_sum)
        if classify(x) is Hyperbolicity.HYPERBOLIC
    ]
    for x, (d_m, d_v, d_vz, verts, z) in zip(slopes, _map(_slope_record, slopes)):
        d_v = bump(d_v)
        s = s_sum(x)
        res.checks += 4
        if d_m != s - 1:
            res.fail(f"{x}: d(m, 0) = {d_m} != S - 1 = {s - 1}")
        if d_v != s - 2:
            res.fail(f"{x}: d(V, 0) = {d_v} != S - 2 = {s - 2}")
        if d_vz != d_v - z:
            res.fail(f"{x}: d(V, {z}) = {d_vz} != d(V, 0) - z = {d_v - z}")
        correction = 1 if x.q == 1 else 0
        if verts - correction != omega(x):
            res.fail(f"{x}: pipeline {verts} - {correction} != omega {omega(x)}")
    return res


def run_all(radius: int, pairs: int = 1000, seed: int = 0, fault: bool = False) -> list[CheckResult]:
    """The sweeps behind ``verify``; BFS work is capped at radius 12 and 10."""
    ball = min(radius, 12)
    pair_radius = min(radius, 10)
    return [
        check_oracle_ball(ball, fault=fault),
        check_random_pairs(pairs, pair_radius, seed),
        check_flip_paths(pairs, pair_radius, seed),
        check_distance_law(radius),
        check_slope_identities(radius),
    ]
