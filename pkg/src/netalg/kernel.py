"""Kernel dispatch: compiled extension when available, pure python otherwise.

Set NETALG_PURE=1 in the environment to force the fallback (used by the
benchmark and by tests that compare the two implementations).
"""

from __future__ import annotations

import os

if os.environ.get("NETALG_PURE") == "1":
    from . import kernel_py as _impl

    HAVE_COMPILED = False
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]

        HAVE_COMPILED = True
    except ImportError:
        from . import kernel_py as _impl

        HAVE_COMPILED = False

rref_mod_p = _impl.rref_mod_p
pgl3_elements = _impl.pgl3_elements
induced2 = _impl.induced2
encode_net = _impl.encode_net
net_canonical = _impl.net_canonical
net_orbit_find = _impl.net_orbit_find
net_orbit_find_all = _impl.net_orbit_find_all
net_orbit_codes = _impl.net_orbit_codes
subspace_filter = _impl.subspace_filter

_pgl_cache: dict = {}


def pgl3(p: int):
    """Cached PGL(3, p) element table."""
    if p not in _pgl_cache:
        _pgl_cache[p] = pgl3_elements(p)
    return _pgl_cache[p]
