"""Kernel backend selection.

The compiled extension is preferred when built; otherwise the numpy fallback
in ``trineq._pykernels`` is used.  Set ``TRINEQ_KERNELS=python`` or
``TRINEQ_KERNELS=compiled`` to force a backend (the latter raises if the
extension is missing).
"""

import os

from . import _pykernels

_requested = os.environ.get("TRINEQ_KERNELS", "auto").strip().lower()

if _requested in ("auto", ""):
    try:
        from . import _fastkernels as _active

        BACKEND = "compiled"
    except ImportError:
        _active = _pykernels
        BACKEND = "python"
elif _requested in ("compiled", "cython", "c"):
    from . import _fastkernels as _active

    BACKEND = "compiled"
elif _requested == "python":
    _active = _pykernels
    BACKEND = "python"
else:
    raise ValueError(
        f"unrecognized TRINEQ_KERNELS value {_requested!r}; "
        "expected 'auto', 'compiled' or 'python'"
    )

jacobi_eigh = _active.jacobi_eigh
sym2_singular_values = _active.sym2_singular_values
pure_concurrence_sq = _active.pure_concurrence_sq


def available_backends() -> tuple[str, ...]:
    try:
        from . import _fastkernels  # noqa: F401

        return ("python", "compiled")
    except ImportError:
        return ("python",)


def get_backend(name: str):
    """Return the kernel module for ``name`` (tests and benchmarks)."""
    if name == "python":
        return _pykernels
    if name == "compiled":
        from . import _fastkernels

        return _fastkernels
    raise ValueError(f"unknown backend {name!r}")
