"""Kernel selection: compiled extension when present, pure Python otherwise.

Set ``NCSURF_PURE=1`` to force the pure-Python implementations (used by the
benchmark to compare both).
"""

import os

if os.environ.get("NCSURF_PURE"):
    from ncsurf import _kernels_py as _impl

    COMPILED = False
else:
    try:
        from ncsurf import _kernels_cy as _impl  # type: ignore[attr-defined]

        COMPILED = True
    except ImportError:
        from ncsurf import _kernels_py as _impl

        COMPILED = False

bareiss_rank = _impl.bareiss_rank
modp_rank = _impl.modp_rank
count_points_p2 = _impl.count_points_p2
count_points_p1p1 = _impl.count_points_p1p1
