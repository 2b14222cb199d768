"""Backend selection for the hot loops.

The compiled ``_core`` extension is used when it imports; otherwise, or when
``FAREY_SURGERY_PURE=1`` is set, the pure-Python ``_pycore`` is used.  Inputs
whose entries exceed the compiled kernel's 64-bit range are always retried
on the Python path, which uses arbitrary-precision integers.
"""

import os

from . import _pycore

_fast = None
if os.environ.get("FAREY_SURGERY_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _core as _fast
    except ImportError:  # extension not built
        _fast = None

BACKEND = _fast.BACKEND if _fast is not None else _pycore.BACKEND


def _dispatch(name):
    slow = getattr(_pycore, name)
    if _fast is None:
        return slow
    fast = getattr(_fast, name)

    def call(*args):
        try:
            return fast(*args)
        except OverflowError:
            return slow(*args)

    call.__name__ = name
    call.__doc__ = slow.__doc__
    return call


quotient_sum = _dispatch("quotient_sum")
canonical = _dispatch("canonical")
neighbor = _dispatch("neighbor")
geodesic_distance = _dispatch("geodesic_distance")
geodesic_path = _dispatch("geodesic_path")
walk_to_slope = _dispatch("walk_to_slope")
bfs_distance = _dispatch("bfs_distance")
bfs_ball = _dispatch("bfs_ball")
cmp_slope = _pycore.cmp_slope
has_vertex = _pycore.has_vertex
