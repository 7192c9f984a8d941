"""Truncated series in two variables z and q.

A :class:`ZQSeries` is a rectangular grid: row ``m`` holds the coefficient
of ``z**m`` as a power series in q, all rows sharing one q-order.
"""
from __future__ import annotations

from typing import Optional, Tuple

import numpy as np

from . import kernels
from .series import MonomialSpec, QSeries, qs_invert, qs_mul


class ZQSeries:
    """Grid of exact coefficients of ``z**m q**e`` for ``m <= z_order``, ``e <= q_order``.

    ``row_valuation`` is a declared lower bound ``v``: row ``m`` is claimed
    to vanish below ``q**(v*m)``. It is what makes substituting ``z = ±q**k``
    well defined at a finite z-order; :func:`zq_specialize` checks it.
    """

    __slots__ = ("_g", "row_valuation")

    def __init__(self, grid, row_valuation: int = 0):
        arr = kernels.as_coeff_array(np.asarray(grid, dtype=object) if not isinstance(grid, np.ndarray) else grid)
        if arr.ndim != 2 or 0 in arr.shape:
            raise ValueError("grid must be a nonempty 2-d array")
        arr.flags.writeable = False
        self._g = arr
        self.row_valuation = row_valuation

    @classmethod
    def _wrap(cls, arr, row_valuation=0):
        obj = cls.__new__(cls)
        if arr.dtype != object and arr.size and int(np.abs(arr).max()) >= kernels.LIMIT:
            arr = arr.astype(object)
        arr.flags.writeable = False
        obj._g = arr
        obj.row_valuation = row_valuation
        return obj

    @classmethod
    def zero(cls, z_order: int, q_order: int) -> "ZQSeries":
        return cls._wrap(np.zeros((z_order + 1, q_order + 1), np.int64))

    @classmethod
    def from_terms(cls, terms: dict, z_order: int, q_order: int, row_valuation: int = 0) -> "ZQSeries":
        """Build from ``{(m, e): coeff}``; out-of-range terms are dropped."""
        g = np.zeros((z_order + 1, q_order + 1), dtype=object)
        g[...] = 0
        for (m, e), c in terms.items():
            if m <= z_order and e <= q_order:
                g[m, e] += c
        return cls(g, row_valuation)

    @classmethod
    def from_qseries(cls, s: QSeries, z_order: int = 0) -> "ZQSeries":
        g = np.zeros((z_order + 1, s.order + 1), dtype=s.coeffs.dtype)
        g[0] = s.coeffs
        return cls._wrap(g)

    @property
    def z_order(self) -> int:
        return self._g.shape[0] - 1

    @property
    def q_order(self) -> int:
        return self._g.shape[1] - 1

    @property
    def grid(self) -> np.ndarray:
        return self._g

    def row(self, m: int) -> QSeries:
        if not 0 <= m <= self.z_order:
            raise IndexError(f"z-degree {m} outside 0..{self.z_order}")
        return QSeries._wrap(self._g[m].copy())

    def truncate(self, z_order: int, q_order: int) -> "ZQSeries":
        if z_order > self.z_order or q_order > self.q_order:
            raise ValueError("truncation cannot raise an order")
        return ZQSeries._wrap(self._g[: z_order + 1, : q_order + 1].copy(), self.row_valuation)

    def __add__(self, other: "ZQSeries") -> "ZQSeries":
        return zq_add(self, other)

    def __mul__(self, other: "ZQSeries") -> "ZQSeries":
        return zq_mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, ZQSeries):
            return NotImplemented
        return self._g.shape == other._g.shape and self.first_mismatch(other) is None

    __hash__ = None

    def first_mismatch(self, other: "ZQSeries") -> Optional[Tuple[int, int, int, int]]:
        """First ``(z_degree, q_exponent, self_coeff, other_coeff)`` differing on the overlap.

        Cells are scanned row by row (lowest z-degree first).
        """
        zr = min(self.z_order, other.z_order) + 1
        qr = min(self.q_order, other.q_order) + 1
        a = self._g[:zr, :qr]
        b = other._g[:zr, :qr]
        if a.dtype == object or b.dtype == object:
            neq = np.array([[int(x) != int(y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)],
                           dtype=bool).reshape(a.shape)
        else:
            neq = a != b
        hits = np.argwhere(neq)
        if not hits.size:
            return None
        m, e = (int(v) for v in hits[0])
        return m, e, int(a[m, e]), int(b[m, e])

    def __repr__(self):
        return f"ZQSeries(z_order={self.z_order}, q_order={self.q_order})"


def zq_add(a: ZQSeries, b: ZQSeries) -> ZQSeries:
    zr = min(a.z_order, b.z_order) + 1
    qr = min(a.q_order, b.q_order) + 1
    x, y = a.grid[:zr, :qr], b.grid[:zr, :qr]
    if x.dtype == object or y.dtype == object:
        x, y = kernels.to_object(x), kernels.to_object(y)
    return ZQSeries._wrap(x + y, min(a.row_valuation, b.row_valuation))


def zq_mul(a: ZQSeries, b: ZQSeries) -> ZQSeries:
    rows = min(a.z_order, b.z_order) + 1
    cols = min(a.q_order, b.q_order) + 1
    out = kernels.convolve2d(a.grid, b.grid, rows, cols)
    return ZQSeries._wrap(out, min(a.row_valuation, b.row_valuation))


def zq_invert(a: ZQSeries) -> ZQSeries:
    """Multiplicative inverse, solved one z-degree at a time."""
    lead = a.row(0)
    if lead[0] not in (1, -1):
        raise ValueError("the z^0 row must have constant term +1 or -1")
    inv0 = qs_invert(lead)
    rows = [inv0]
    for m in range(1, a.z_order + 1):
        acc = QSeries.zero(a.q_order)
        for j in range(1, m + 1):
            acc = acc + qs_mul(a.row(j), rows[m - j])
        rows.append(-qs_mul(inv0, acc))
    g = np.stack([kernels.to_object(r.coeffs) for r in rows])
    return ZQSeries._wrap(kernels.as_coeff_array(g), a.row_valuation)


def zq_coeff(a: ZQSeries, m: int, e: int) -> int:
    if not (0 <= m <= a.z_order and 0 <= e <= a.q_order):
        raise IndexError(f"(z^{m}, q^{e}) outside the {a.z_order}x{a.q_order} grid")
    return int(a.grid[m, e])


def required_z_order(q_order: int, row_valuation: int, k: int) -> int:
    """Smallest z-order that fixes every q-coefficient through ``q_order`` after ``z -> ±q**k``."""
    slope = row_valuation + k
    return q_order if slope == 0 else q_order // slope


def zq_specialize(a: ZQSeries, c: MonomialSpec) -> QSeries:
    """Substitute ``z = c.sign * q**c.exponent`` and collapse to a series in q."""
    need = required_z_order(a.q_order, a.row_valuation, c.exponent)
    if a.z_order < need:
        raise ValueError(
            f"z_order {a.z_order} too small: specializing to q-order {a.q_order} "
            f"needs z_order >= {need}")
    v = a.row_valuation
    if v:
        for m in range(1, min(a.z_order, a.q_order // v + 1) + 1):
            low = a.grid[m, : min(v * m, a.q_order + 1)]
            if low.any():
                raise ValueError(f"row {m} violates the declared valuation bound {v}*m")
    g = a.grid
    if g.dtype != object and kernels._absmax(g) * (a.z_order + 1) < kernels.LIMIT:
        out = np.zeros(a.q_order + 1, np.int64)
    else:
        g = kernels.to_object(g)
        out = np.zeros(a.q_order + 1, np.int64).astype(object)
    for m in range(a.z_order + 1):
        shift = c.exponent * m
        if shift > a.q_order:
            break
        row = g[m, : a.q_order + 1 - shift]
        if c.sign == -1 and m % 2:
            row = -row
        out[shift:] += row
    return QSeries._wrap(kernels.as_coeff_array(out))
