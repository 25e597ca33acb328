"""Bulk order kernels, compiled when available.

The Cython extension ``_ckernels`` is used if it imports; otherwise the
numpy implementation in ``_pykernels`` takes over.  Setting the environment
variable ``TOPOARITH_PURE=1`` forces the fallback.  Kernels work on signed
64-bit values; callers route larger numbers through the scalar Python code.
"""

from __future__ import annotations

import os

from . import _pykernels

FD, VARIANT, SIGNED = 0, 1, 2
INT64_MAX = (1 << 63) - 1

_impl = _pykernels
if os.environ.get("TOPOARITH_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:  # extension not built
        _impl = _pykernels

IMPLEMENTATION: str = _impl.IMPLEMENTATION

cmp_pairs = _impl.cmp_pairs
cmp_many = _impl.cmp_many
candidate = _impl.candidate
scan_between = _impl.scan_between
oracle_disagreements = _impl.oracle_disagreements
antisymmetry_failures = _impl.antisymmetry_failures
transitivity_failures = _impl.transitivity_failures
sort_values = _impl.sort_values


def fits(*values: int) -> bool:
    """True when every value can be handed to a kernel."""
    return all(-INT64_MAX <= int(v) <= INT64_MAX for v in values)


def backends() -> dict[str, object]:
    """Every importable kernel module keyed by implementation name."""
    found: dict[str, object] = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        found["cython"] = _ckernels
    return found
