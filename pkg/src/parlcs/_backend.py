"""Kernel backend selection.

``PARLCS_BACKEND`` may be ``auto`` (default), ``cython`` or ``python``.
``active`` is looked up at call time, so tests can swap it.
"""
import os

from . import _pykernels

try:
    from . import _kernels
except ImportError:
    _kernels = None

BACKENDS = {"python": _pykernels}
if _kernels is not None:
    BACKENDS["cython"] = _kernels


def _select(choice):
    if choice == "auto":
        return "cython" if "cython" in BACKENDS else "python"
    if choice not in BACKENDS:
        raise ImportError(f"parlcs backend {choice!r} is not available "
                          f"(have: {', '.join(sorted(BACKENDS))})")
    return choice


name = _select(os.environ.get("PARLCS_BACKEND", "auto").lower())
active = BACKENDS[name]


def use(choice):
    """Switch the active backend; returns the previous backend name."""
    global name, active
    previous = name
    name = _select(choice)
    active = BACKENDS[name]
    return previous
