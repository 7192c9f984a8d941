"""Coefficient kernels with overflow promotion.

Arrays are either int64 (every entry strictly inside ``±2**62``) or
``object`` arrays of Python integers. The fast path runs the int64 kernel;
when it reports that a value would leave the safe band, the operation is
redone on Python integers, so results are always exact.

The int64 kernels come from numba when it is importable. Set
``QMOCK_KERNELS=numpy`` to force the pure-numpy implementations; results
are bit-identical either way, only speed differs.
"""
import os

import numpy as np

from . import _numpy

LIMIT = _numpy.LIMIT

_requested = os.environ.get("QMOCK_KERNELS", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ImportError(f"QMOCK_KERNELS must be 'numba' or 'numpy', got {_requested!r}")

if _requested == "numba":
    try:
        from . import _numba as _fast
    except ImportError:  # pragma: no cover - numba missing
        _fast = _numpy
else:
    _fast = _numpy

BACKEND = "numba" if _fast is not _numpy else "numpy"


def as_coeff_array(values):
    """Pack integers into the narrowest exact array (int64 or object)."""
    if isinstance(values, np.ndarray) and values.dtype != object:
        if values.dtype.kind not in "iu":
            raise TypeError(f"non-integer coefficient dtype {values.dtype}")
        arr = values.astype(np.int64)
    else:
        arr = np.array(values, dtype=object)
        flat = arr.reshape(-1)
        for i, v in enumerate(flat):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise TypeError(f"coefficients must be integers, got {type(v).__name__}")
            flat[i] = int(v)
        if all(-LIMIT < v < LIMIT for v in flat):
            arr = arr.astype(np.int64)
    if arr.dtype != object and _absmax(arr) >= LIMIT:
        arr = arr.astype(object)
    return arr


def to_object(arr):
    return arr if arr.dtype == object else arr.astype(object)


def _absmax(arr):
    if arr.size == 0:
        return 0
    return max(int(np.abs(arr).max()), 0)


def _run(name, arrays, *args):
    """Run kernel ``name`` on int64 if possible, else on Python ints."""
    if all(a.dtype != object for a in arrays):
        out, ok = getattr(_fast, name)(*arrays, *args)
        if ok:
            return out
    return getattr(_numpy, name)(*(to_object(a) for a in arrays), *args)[0]


def convolve(a, b, n):
    """First ``n + 1`` coefficients of the product of ``a`` and ``b``."""
    if a.dtype != object and b.dtype != object:
        if _absmax(a[: n + 1]) * _absmax(b[: n + 1]) * (min(a.size, b.size, n + 1) or 1) >= LIMIT:
            a = to_object(a)
    return _run("convolve", (a, b), n)


def inverse(a, n):
    """First ``n + 1`` coefficients of ``1/a``; ``a[0]`` must be ±1."""
    if a.size == 0 or a[0] not in (1, -1):
        raise ValueError("constant term must be +1 or -1")
    return _run("inverse", (a,), n)


def mul_binomial(arr, c0, a0, b0, c1, a1, b1):
    """``arr * (c0 z^a0 q^b0 + c1 z^a1 q^b1)`` truncated to ``arr.shape``.

    Coefficients ``c0`` and ``c1`` must lie in {-1, 0, 1}.
    """
    if c0 not in (-1, 0, 1) or c1 not in (-1, 0, 1):
        raise ValueError("binomial coefficients must be in {-1, 0, 1}")
    return _run("mul_binomial", (arr,), c0, a0, b0, c1, a1, b1)


def divide_binomial(arr, s, a, b):
    """``arr / (1 - s z^a q^b)`` truncated to ``arr.shape``; ``s`` is ±1."""
    if s not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if a == 0 and b == 0:
        raise ValueError("cannot divide by a constant binomial")
    return _run("divide_binomial", (arr,), s, a, b)


def convolve2d(a, b, rows, cols):
    """Product of two (z, q) coefficient grids truncated to ``rows x cols``."""
    if a.dtype != object and b.dtype != object:
        depth = min(a.shape[0], b.shape[0], rows) * min(a.shape[1], b.shape[1], cols)
        if _absmax(a) * _absmax(b) * (depth or 1) >= LIMIT:
            a = to_object(a)
    return _run("convolve2d", (a, b), rows, cols)
