import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from farey_surgery import _pycore, kernels

from .conftest import BACKENDS, BASE


def walk(core, rng, t, n):
    for _ in range(n):
        t = core.neighbor(t, rng.randrange(3))
    return t


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize(
    "p,q,expected",
    [(0, 1, 0), (1, 1, 1), (1, 2, 2), (3, 5, 4), (13, 3, 7), (2**40 + 1, 2**20, 2**21)],
)
def test_quotient_sum(core, p, q, expected):
    if core is not _pycore and p >= 2**63:
        pytest.skip("beyond 64-bit")
    assert core.quotient_sum(p, q) == expected


def test_canonical_orders_infinity_last(core):
    assert core.canonical(1, 0, 1, 1, 0, 1) == BASE
    assert core.canonical(-1, 1, 1, 0, 0, 1) == (-1, 1, 0, 1, 1, 0)
    assert core.canonical(1, 2, 1, 3, 0, 1) == (0, 1, 1, 3, 1, 2)


def test_neighbor_examples(core):
    assert core.neighbor(BASE, 2) == (0, 1, 1, 2, 1, 1)
    assert core.neighbor(BASE, 0) == (1, 1, 2, 1, 1, 0)
    assert core.neighbor(BASE, 1) == (-1, 1, 0, 1, 1, 0)


def test_backends_agree_on_random_walks():
    if len(BACKENDS) < 2:
        pytest.skip("compiled core not built")
    py, fast = BACKENDS
    rng = random.Random(7)
    for _ in range(2000):
        t1 = walk(py, rng, BASE, rng.randint(0, 25))
        t2 = walk(py, rng, t1, rng.randint(0, 12))
        assert py.geodesic_distance(t1, t2) == fast.geodesic_distance(t1, t2)
        assert py.geodesic_path(t1, t2) == fast.geodesic_path(t1, t2)
        k = rng.randrange(3)
        assert py.neighbor(t1, k) == fast.neighbor(t1, k)
    for _ in range(200):
        t1 = walk(py, rng, BASE, rng.randint(0, 10))
        t2 = walk(py, rng, t1, rng.randint(0, 8))
        assert py.bfs_distance(t1, t2, 8) == fast.bfs_distance(t1, t2, 8)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 10**6))
def test_walk_to_slope_agrees(p, q):
    if gcd(p, q) != 1 or (q == 1 and p in (0, 1)):
        return
    expected = _pycore.walk_to_slope(BASE, p, q) if _pycore.quotient_sum(p, q) < 5000 else None
    got = kernels.walk_to_slope(BASE, p, q)
    assert _pycore.has_vertex(got[1], p, q)
    if expected is not None:
        assert got == expected


def test_overflow_falls_back_to_python():
    big = 2**70
    t = (big, 1, big + 1, 1, 1, 0)
    u = (big + 3, 1, big + 4, 1, 1, 0)
    assert kernels.geodesic_distance(t, u) == 3
    assert kernels.quotient_sum(3 * 2**70 + 1, 2**70) == 3 + 2**70
    assert kernels.bfs_distance(t, u, 5) == 3


def test_compiled_core_rejects_out_of_range():
    if len(BACKENDS) < 2:
        pytest.skip("compiled core not built")
    fast = BACKENDS[1]
    with pytest.raises(OverflowError):
        fast.geodesic_distance((2**40, 1, 2**40 + 1, 1, 1, 0), BASE)


def test_bfs_cap(core):
    far = (5, 1, 6, 1, 1, 0)
    assert core.bfs_distance(BASE, far, 4) == -1
    assert core.bfs_distance(BASE, far, 5) == 5


def test_ball_sizes(core):
    # 1 + 3 * (2**r - 1) triangles within r flips in a 3-regular tree
    for r in range(7):
        assert len(core.bfs_ball(BASE, r)) == 1 + 3 * (2**r - 1)


def test_pure_backend_forced_by_env():
    import os
    import subprocess
    import sys

    env = dict(os.environ, FAREY_SURGERY_PURE="1")
    out = subprocess.run(
        [sys.executable, "-c", "from farey_surgery import kernels; print(kernels.BACKEND)"],
        capture_output=True, text=True, env=env, check=True,
    ).stdout.strip()
    assert out == "python"
