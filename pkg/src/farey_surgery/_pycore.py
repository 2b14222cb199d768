"""Pure-Python kernels, used when the compiled ``_core`` extension is absent.

Triangles are flat 6-tuples ``(a1, b1, a2, b2, a3, b3)`` of slopes ``a/b``
with ``b >= 0`` and infinity stored as ``(1, 0)``, the three vertices sorted
by the circular order of the boundary circle with infinity greatest.
Every function here has a twin with the same signature in ``_core.pyx``.
"""

from collections import deque

BACKEND = "python"


def quotient_sum(p, q):
    """Sum of the partial quotients of ``p/q`` (``p >= 0``, ``q >= 1``)."""
    total = 0
    while q:
        total += p // q
        p, q = q, p % q
    return total


def cmp_slope(a1, b1, a2, b2):
    if b1 == 0:
        return 0 if b2 == 0 else 1
    if b2 == 0:
        return -1
    d = a1 * b2 - a2 * b1
    return (d > 0) - (d < 0)


def canonical(a1, b1, a2, b2, a3, b3):
    if cmp_slope(a1, b1, a2, b2) > 0:
        a1, b1, a2, b2 = a2, b2, a1, b1
    if cmp_slope(a2, b2, a3, b3) > 0:
        a2, b2, a3, b3 = a3, b3, a2, b2
        if cmp_slope(a1, b1, a2, b2) > 0:
            a1, b1, a2, b2 = a2, b2, a1, b1
    return (a1, b1, a2, b2, a3, b3)


def _norm(a, b):
    if b < 0:
        return -a, -b
    if b == 0:
        return 1, 0
    return a, b


def neighbor(tri, k):
    """Flip across the edge of ``tri`` that avoids vertex number ``k``."""
    i, j = [m for m in range(3) if m != k]
    a, b = tri[2 * i], tri[2 * i + 1]
    c, d = tri[2 * j], tri[2 * j + 1]
    old = (tri[2 * k], tri[2 * k + 1])
    new = _norm(a + c, b + d)
    if new == old:
        new = _norm(a - c, b - d)
    return canonical(a, b, c, d, new[0], new[1])


def has_vertex(tri, a, b):
    return (tri[0] == a and tri[1] == b) or (tri[2] == a and tri[3] == b) or (
        tri[4] == a and tri[5] == b
    )


def _toward(tri, a, b):
    # index of the vertex opposite the edge whose open arc holds a/b
    x0, x1, y0, y1, z0, z1 = tri
    if cmp_slope(x0, x1, a, b) < 0 and cmp_slope(a, b, y0, y1) < 0:
        return 2
    if cmp_slope(y0, y1, a, b) < 0 and cmp_slope(a, b, z0, z1) < 0:
        return 0
    return 1


def _outside_vertex(tri, target):
    for m in range(3):
        a, b = target[2 * m], target[2 * m + 1]
        if not has_vertex(tri, a, b):
            return a, b
    raise AssertionError("unreachable: distinct triangles share all vertices")


def geodesic_distance(t1, t2):
    t = t1
    steps = 0
    while t != t2:
        a, b = _outside_vertex(t, t2)
        t = neighbor(t, _toward(t, a, b))
        steps += 1
    return steps


def geodesic_path(t1, t2):
    t = t1
    path = [t]
    while t != t2:
        a, b = _outside_vertex(t, t2)
        t = neighbor(t, _toward(t, a, b))
        path.append(t)
    return path


def walk_to_slope(tri, a, b):
    """Walk from ``tri`` toward ``a/b``; return (steps, first triangle holding it)."""
    t = tri
    steps = 0
    while not has_vertex(t, a, b):
        t = neighbor(t, _toward(t, a, b))
        steps += 1
    return steps, t


def bfs_distance(t1, t2, cap):
    """Breadth-first flip count from ``t1`` to ``t2``; -1 when beyond ``cap``."""
    if t1 == t2:
        return 0
    seen = {t1}
    frontier = [t1]
    for depth in range(1, cap + 1):
        nxt = []
        for t in frontier:
            for k in range(3):
                u = neighbor(t, k)
                if u in seen:
                    continue
                if u == t2:
                    return depth
                seen.add(u)
                nxt.append(u)
        frontier = nxt
    return -1


def bfs_ball(t0, radius):
    """Map every triangle within ``radius`` flips of ``t0`` to its BFS depth."""
    depth = {t0: 0}
    queue = deque([t0])
    while queue:
        t = queue.popleft()
        d = depth[t]
        if d == radius:
            continue
        for k in range(3):
            u = neighbor(t, k)
            if u not in depth:
                depth[u] = d + 1
                queue.append(u)
    return depth
