# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled kernels for Farey walks, the BFS oracle and quotient sums.

Same signatures and triangle layout as ``_pycore``.  Slope entries are held
in 64-bit integers and must stay below 2**31 in absolute value so that every
2x2 determinant fits; larger inputs raise ``OverflowError`` and the caller
falls back to the pure-Python kernel.
"""

from libcpp.set cimport set as cppset
from libcpp.vector cimport vector

ctypedef long long ll

BACKEND = "cython"

cdef ll LIMIT = 2147483648


def quotient_sum(p, q):
    cdef unsigned long long cp, cq, t, total = 0
    if p < 0 or q < 0:
        raise ValueError("quotient_sum expects p >= 0, q >= 1")
    cp = p
    cq = q
    with nogil:
        while cq:
            total += cp // cq
            t = cp % cq
            cp = cq
            cq = t
    return total


cdef inline int cmp_s(ll a1, ll b1, ll a2, ll b2) noexcept nogil:
    cdef ll d
    if b1 == 0:
        return 0 if b2 == 0 else 1
    if b2 == 0:
        return -1
    d = a1 * b2 - a2 * b1
    return (d > 0) - (d < 0)


cdef inline void swap_v(ll* t, int i, int j) noexcept nogil:
    cdef ll a = t[2 * i], b = t[2 * i + 1]
    t[2 * i] = t[2 * j]
    t[2 * i + 1] = t[2 * j + 1]
    t[2 * j] = a
    t[2 * j + 1] = b


cdef inline void canon(ll* t) noexcept nogil:
    if cmp_s(t[0], t[1], t[2], t[3]) > 0:
        swap_v(t, 0, 1)
    if cmp_s(t[2], t[3], t[4], t[5]) > 0:
        swap_v(t, 1, 2)
        if cmp_s(t[0], t[1], t[2], t[3]) > 0:
            swap_v(t, 0, 1)


cdef inline bint same(const ll* s, const ll* t) noexcept nogil:
    cdef int m
    for m in range(6):
        if s[m] != t[m]:
            return False
    return True


cdef inline bint has_v(const ll* t, ll a, ll b) noexcept nogil:
    return ((t[0] == a and t[1] == b) or (t[2] == a and t[3] == b)
            or (t[4] == a and t[5] == b))


cdef inline int nbr(const ll* t, int k, ll* out) noexcept nogil:
    # out <- triangle across the edge avoiding vertex k; returns 1 on overflow
    cdef int i = 1 if k == 0 else 0
    cdef int j = 1 if k == 2 else 2
    cdef ll a = t[2 * i], b = t[2 * i + 1], c = t[2 * j], d = t[2 * j + 1]
    cdef ll na = a + c, nb = b + d
    if nb < 0:
        na = -na
        nb = -nb
    elif nb == 0:
        na = 1
    if na == t[2 * k] and nb == t[2 * k + 1]:
        na = a - c
        nb = b - d
        if nb < 0:
            na = -na
            nb = -nb
        elif nb == 0:
            na = 1
    if na >= LIMIT or na <= -LIMIT or nb >= LIMIT:
        return 1
    out[0] = a
    out[1] = b
    out[2] = c
    out[3] = d
    out[4] = na
    out[5] = nb
    canon(out)
    return 0


cdef inline int toward(const ll* t, ll a, ll b) noexcept nogil:
    if cmp_s(t[0], t[1], a, b) < 0 and cmp_s(a, b, t[2], t[3]) < 0:
        return 2
    if cmp_s(t[2], t[3], a, b) < 0 and cmp_s(a, b, t[4], t[5]) < 0:
        return 0
    return 1


cdef inline int outside(const ll* t, const ll* target) noexcept nogil:
    cdef int m
    for m in range(3):
        if not has_v(t, target[2 * m], target[2 * m + 1]):
            return m
    return -1


cdef int load(object tri, ll* out) except -1:
    cdef int m
    cdef ll x
    for m in range(6):
        x = tri[m]
        if x >= LIMIT or x <= -LIMIT:
            raise OverflowError("slope entry too large for the compiled kernel")
        out[m] = x
    return 0


cdef inline tuple dump(const ll* t):
    return (t[0], t[1], t[2], t[3], t[4], t[5])


def cmp_slope(a1, b1, a2, b2):
    return cmp_s(a1, b1, a2, b2)


def canonical(a1, b1, a2, b2, a3, b3):
    cdef ll t[6]
    load((a1, b1, a2, b2, a3, b3), t)
    canon(t)
    return dump(t)


def has_vertex(tri, a, b):
    return (tri[0] == a and tri[1] == b) or (tri[2] == a and tri[3] == b) or (
        tri[4] == a and tri[5] == b)


def neighbor(tri, int k):
    cdef ll t[6]
    cdef ll u[6]
    load(tri, t)
    if nbr(t, k, u):
        raise OverflowError("neighbor leaves the compiled kernel's range")
    return dump(u)


def geodesic_distance(t1, t2):
    cdef ll t[6]
    cdef ll goal[6]
    cdef ll u[6]
    cdef ll steps = 0
    cdef int m, overflow = 0
    load(t1, t)
    load(t2, goal)
    with nogil:
        while not same(t, goal):
            m = outside(t, goal)
            if nbr(t, toward(t, goal[2 * m], goal[2 * m + 1]), u):
                overflow = 1
                break
            t[:] = u
            steps += 1
    if overflow:
        raise OverflowError("walk leaves the compiled kernel's range")
    return steps


def geodesic_path(t1, t2):
    cdef ll t[6]
    cdef ll goal[6]
    cdef ll u[6]
    cdef int m
    load(t1, t)
    load(t2, goal)
    path = [dump(t)]
    while not same(t, goal):
        m = outside(t, goal)
        if nbr(t, toward(t, goal[2 * m], goal[2 * m + 1]), u):
            raise OverflowError("walk leaves the compiled kernel's range")
        t[:] = u
        path.append(dump(t))
    return path


def walk_to_slope(tri, a, b):
    cdef ll t[6]
    cdef ll u[6]
    cdef ll ca, cb, steps = 0
    cdef int overflow = 0
    load(tri, t)
    if a >= LIMIT or a <= -LIMIT or b >= LIMIT:
        raise OverflowError("slope entry too large for the compiled kernel")
    ca = a
    cb = b
    with nogil:
        while not has_v(t, ca, cb):
            if nbr(t, toward(t, ca, cb), u):
                overflow = 1
                break
            t[:] = u
            steps += 1
    if overflow:
        raise OverflowError("walk leaves the compiled kernel's range")
    return steps, dump(t)


def bfs_distance(t1, t2, int cap):
    cdef ll s[6]
    cdef ll goal[6]
    cdef ll u[6]
    cdef int depth, k, m
    cdef size_t i
    cdef vector[ll] key = vector[ll](6)
    cdef cppset[vector[ll]] seen
    cdef vector[ll] frontier
    cdef vector[ll] nxt
    load(t1, s)
    load(t2, goal)
    if same(s, goal):
        return 0
    for m in range(6):
        key[m] = s[m]
        frontier.push_back(s[m])
    seen.insert(key)
    for depth in range(1, cap + 1):
        nxt.clear()
        i = 0
        while i < frontier.size():
            for k in range(3):
                if nbr(&frontier[i], k, u):
                    raise OverflowError("search leaves the compiled kernel's range")
                for m in range(6):
                    key[m] = u[m]
                if seen.count(key):
                    continue
                if same(u, goal):
                    return depth
                seen.insert(key)
                for m in range(6):
                    nxt.push_back(u[m])
            i += 6
        frontier.swap(nxt)
    return -1


def bfs_ball(t0, int radius):
    cdef ll t[6]
    cdef ll u[6]
    cdef int k, d
    load(t0, t)
    depth = {dump(t): 0}
    layer = [dump(t)]
    for d in range(1, radius + 1):
        nxt = []
        for tri in layer:
            load(tri, t)
            for k in range(3):
                if nbr(t, k, u):
                    raise OverflowError("search leaves the compiled kernel's range")
                key = dump(u)
                if key not in depth:
                    depth[key] = d
                    nxt.append(key)
        layer = nxt
    return depth
