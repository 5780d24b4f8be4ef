"""Kernel backend selection.

Imports the compiled extension when it is available, falling back to the
pure-Python implementation. Set WEYLCHAR_PURE=1 to force the fallback.
"""

import os

if os.environ.get("WEYLCHAR_PURE"):
    from . import pure as _impl

    BACKEND = "pure"
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import pure as _impl

        BACKEND = "pure"

reflect = _impl.reflect
dominant_rep = _impl.dominant_rep
regularize_shifted = _impl.regularize_shifted
weyl_orbit = _impl.weyl_orbit
orbit_parity = _impl.orbit_parity
dominant_below = _impl.dominant_below
freudenthal = _impl.freudenthal
orbit_expand = _impl.orbit_expand
convolve = _impl.convolve
klimyk = _impl.klimyk
sub_scaled = _impl.sub_scaled
