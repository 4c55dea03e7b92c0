"""Backend selection for the hot loops.

The compiled extension is used when it imports; otherwise, or when the
environment variable ``HSG_PURE_PYTHON`` is set to a non-empty value other
than ``0``, the numpy fallback in :mod:`hypersg._pure` is used.
"""

import os

import numpy as np

from . import _pure

if os.environ.get("HSG_PURE_PYTHON", "") not in ("", "0"):
    _impl = _pure
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        _impl = _pure

BACKEND = "compiled" if _impl is not _pure else "pure"


def compiled_available():
    try:
        from . import _kernels  # noqa: F401
    except ImportError:
        return False
    return True


def backend_module(name=None):
    """Return the kernel module for ``name`` ('compiled' or 'pure'), default active."""
    if name is None:
        return _impl
    if name == "pure":
        return _pure
    if name == "compiled":
        from . import _kernels
        return _kernels
    raise ValueError(f"unknown backend {name!r}")


def _c32(a):
    return np.ascontiguousarray(a, dtype=np.int32)


def find_nonassociative(table):
    return _impl.find_nonassociative(_c32(table))


def sampled_nonassociative(table, triples):
    return _impl.sampled_nonassociative(_c32(table), _c32(triples))


def power_table(group):
    return _impl.power_table(_c32(group))


def find_nonhomomorphic(src, dst, mapping):
    return _impl.find_nonhomomorphic(_c32(src), _c32(dst), _c32(mapping))
