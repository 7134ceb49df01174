"""Hot kernels: compiled Cython core with a numpy fallback.

The compiled module is used when it imports; set ``PFNN_BACKEND=python`` to
force the fallback.  Both expose the same functions:

``resnet_value``, ``resnet_forward``, ``resnet_backward``,
``points_in_polygon``, ``ray_triangle_crossings``, ``imq_kernel``,
``imq_combine``.
"""
from __future__ import annotations

import os

from . import _fallback

fallback = _fallback
compiled = None
try:  # pragma: no cover - depends on the build
    from . import _core as compiled
except ImportError:
    compiled = None

if compiled is not None and os.environ.get("PFNN_BACKEND", "").lower() not in ("python", "fallback"):
    active = compiled
else:
    active = _fallback

BACKEND = active.BACKEND
resnet_value = active.resnet_value
resnet_forward = active.resnet_forward
resnet_backward = active.resnet_backward
points_in_polygon = active.points_in_polygon
ray_triangle_crossings = active.ray_triangle_crossings
imq_kernel = active.imq_kernel
imq_combine = active.imq_combine


def backends():
    """Available kernel modules keyed by name."""
    out = {"python": _fallback}
    if compiled is not None:
        out["compiled"] = compiled
    return out
