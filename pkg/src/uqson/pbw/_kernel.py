"""Kernel selection: compiled extension when available, pure Python otherwise.

Set UQSON_PURE_PYTHON=1 in the environment to force the fallback; tests and
the benchmark switch kernels at runtime through use_kernel().
"""

import os
import warnings

from . import _straighten_py

_IMPLS = {"python": _straighten_py}

if not os.environ.get("UQSON_PURE_PYTHON"):
    try:
        from . import _straighten_cy

        _IMPLS["cython"] = _straighten_cy
    except ImportError:
        warnings.warn(
            "compiled straightening kernel not available; using the pure-Python fallback",
            stacklevel=1,
        )

_active = _IMPLS.get("cython", _straighten_py)


def available_kernels():
    return tuple(sorted(_IMPLS))


def active_kernel():
    return _active.KERNEL


def use_kernel(name):
    """Select the kernel by name ('python' or 'cython'); returns the old name."""
    global _active
    if name not in _IMPLS:
        raise ValueError(f"kernel {name!r} not available; have {available_kernels()}")
    old = _active.KERNEL
    _active = _IMPLS[name]
    return old


def get():
    return _active
