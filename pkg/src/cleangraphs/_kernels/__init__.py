"""Scan kernels for exhaustive modular arithmetic.

The verification sweeps spend nearly all their time in three O(n) scans
(counting units, counting and listing square roots of 1).  A compiled
extension covers them when available; otherwise the pure-Python versions
in ``_pykernels`` take over with identical semantics.
"""

try:
    from . import _ckernels as _impl

    BACKEND = "c"
except ImportError:  # extension not built
    from . import _pykernels as _impl

    BACKEND = "python"

from . import _pykernels

count_square_roots_of_one = _impl.count_square_roots_of_one
square_roots_of_one = _impl.square_roots_of_one
count_units = _impl.count_units


def backend() -> str:
    """Name of the active kernel backend: ``"c"`` or ``"python"``."""
    return BACKEND


__all__ = [
    "BACKEND",
    "backend",
    "count_square_roots_of_one",
    "square_roots_of_one",
    "count_units",
    "_pykernels",
]
