"""Truncated power series in q with exact integer coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Tuple

import numpy as np

from . import kernels


class QSeries:
    """A power series in q known exactly through ``q**order``.

    Coefficients live in a read-only numpy array (int64 while small, Python
    integers otherwise). Binary operations truncate to the smaller order.
    ``==`` demands identical order; use :meth:`agrees_with` for comparison
    on the overlap.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs):
        arr = kernels.as_coeff_array(coeffs)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("a QSeries needs at least one coefficient")
        arr.flags.writeable = False
        self._c = arr

    @classmethod
    def _wrap(cls, arr):
        obj = cls.__new__(cls)
        if arr.dtype != object and arr.size and int(np.abs(arr).max()) >= kernels.LIMIT:
            arr = arr.astype(object)
        arr.flags.writeable = False
        obj._c = arr
        return obj

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls._wrap(np.zeros(order + 1, np.int64))

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls.monomial(0, order)

    @classmethod
    def monomial(cls, k: int, order: int, coeff: int = 1) -> "QSeries":
        """``coeff * q**k``; zero if ``k > order``."""
        if k < 0 or order < 0:
            raise ValueError("exponent and order must be nonnegative")
        if k > order:
            return cls.zero(order)
        c = [0] * (order + 1)
        c[k] = coeff
        return cls(c)

    @classmethod
    def from_dict(cls, terms: dict, order: int) -> "QSeries":
        c = [0] * (order + 1)
        for e, v in terms.items():
            if e <= order:
                c[e] += v
        return cls(c)

    @property
    def order(self) -> int:
        return self._c.size - 1

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    def __len__(self):
        return self._c.size

    def __getitem__(self, e: int) -> int:
        if not 0 <= e <= self.order:
            raise IndexError(f"exponent {e} outside 0..{self.order}")
        return int(self._c[e])

    def to_list(self) -> list:
        return [int(v) for v in self._c]

    def nonzero(self) -> list:
        """``(exponent, coefficient)`` pairs with nonzero coefficient."""
        return [(int(e), int(self._c[e])) for e in np.flatnonzero(self._c)]

    def valuation(self) -> Optional[int]:
        nz = np.flatnonzero(self._c)
        return int(nz[0]) if nz.size else None

    def degree(self) -> Optional[int]:
        nz = np.flatnonzero(self._c)
        return int(nz[-1]) if nz.size else None

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order} by truncation")
        return QSeries._wrap(self._c[: order + 1].copy())

    def padded(self, order: int) -> "QSeries":
        """Reinterpret as a polynomial and re-express at a higher order.

        Only valid when the series is known to be a polynomial whose degree
        is at most its current order.
        """
        if order <= self.order:
            return self.truncate(order)
        out = np.zeros(order + 1, dtype=self._c.dtype)
        out[: self._c.size] = self._c
        return QSeries._wrap(out)

    def negate_q(self) -> "QSeries":
        """Substitute q -> -q."""
        c = self._c.copy()
        c[1::2] = -c[1::2]
        return QSeries._wrap(c)

    def __add__(self, other):
        return qs_add(self, other)

    def __sub__(self, other):
        return qs_add(self, -other)

    def __neg__(self):
        return QSeries._wrap(-self._c)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            c = int(other)
            if abs(c) <= 1:
                return QSeries._wrap(self._c * c)
            return QSeries._wrap(kernels.as_coeff_array(kernels.to_object(self._c) * c))
        return qs_mul(self, other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.first_mismatch(other) is None

    def __hash__(self):
        return hash(tuple(self.to_list()))

    def agrees_with(self, other: "QSeries") -> bool:
        return self.first_mismatch(other) is None

    def first_mismatch(self, other: "QSeries") -> Optional[Tuple[int, int, int]]:
        """First ``(exponent, self_coeff, other_coeff)`` that differs on the overlap."""
        n = min(self.order, other.order) + 1
        a, b = self._c[:n], other._c[:n]
        if a.dtype == object or b.dtype == object:
            diff = [i for i in range(n) if int(a[i]) != int(b[i])]
            if not diff:
                return None
            i = diff[0]
        else:
            nz = np.flatnonzero(a != b)
            if not nz.size:
                return None
            i = int(nz[0])
        return i, int(a[i]), int(b[i])

    def __repr__(self):
        terms = self.nonzero()
        if not terms:
            body = "0"
        else:
            body = " + ".join(f"{c}*q^{e}" for e, c in terms[:8])
            if len(terms) > 8:
                body += " + ..."
        return f"QSeries({body}, order={self.order})"


@dataclass(frozen=True)
class MonomialSpec:
    """The monomial ``sign * q**exponent``, used as a Pochhammer argument."""

    sign: int
    exponent: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.exponent < 0:
            raise ValueError("exponent must be nonnegative")


def qs_add(a: QSeries, b: QSeries) -> QSeries:
    n = min(a.order, b.order) + 1
    x, y = a.coeffs[:n], b.coeffs[:n]
    if x.dtype != object and y.dtype != object:
        # both strictly inside ±2**62, so the int64 sum cannot wrap
        return QSeries._wrap(x + y)
    return QSeries._wrap(kernels.to_object(x) + kernels.to_object(y))


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    n = min(a.order, b.order)
    return QSeries._wrap(kernels.convolve(a.coeffs, b.coeffs, n))


def qs_invert(a: QSeries) -> QSeries:
    if a.coeffs[0] not in (1, -1):
        raise ValueError(f"constant term {a[0]} is not a unit over the integers")
    return QSeries._wrap(kernels.inverse(a.coeffs, a.order))


def qs_shift(a: QSeries, k: int) -> QSeries:
    """Multiply by ``q**k``, keeping the order."""
    if k < 0:
        raise ValueError("shift must be nonnegative")
    out = np.zeros_like(a.coeffs)
    if k <= a.order:
        out[k:] = a.coeffs[: a.order + 1 - k]
    return QSeries._wrap(out)


def _binomial_factors(a: MonomialSpec, step: int, count: Optional[int], order: int):
    k = 0
    while count is None or k < count:
        e = a.exponent + k * step
        if e > order:
            break
        yield e
        k += 1


def _apply_factors(exponents: Iterable[int], sign: int, order: int) -> QSeries:
    row = np.zeros((1, order + 1), np.int64)
    row[0, 0] = 1
    for e in exponents:
        row = kernels.mul_binomial(row, 1, 0, 0, -sign, 0, e)
    return QSeries._wrap(row[0].copy())


def poch_finite(a: MonomialSpec, step: int, n: int, order: int) -> QSeries:
    """``(a; q^step)_n`` truncated at ``order``."""
    if step < 1:
        raise ValueError("step must be positive")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _apply_factors(_binomial_factors(a, step, n, order), a.sign, order)


def poch_infinite(a: MonomialSpec, step: int, order: int) -> QSeries:
    """``(a; q^step)_inf`` truncated at ``order``."""
    if a.exponent < 1:
        raise ValueError("(a;q)_inf needs a positive exponent to converge coefficientwise")
    if step < 1:
        raise ValueError("step must be positive")
    return _apply_factors(_binomial_factors(a, step, None, order), a.sign, order)


def divide_exact_binomial(p: QSeries, k: int, sign: int = 1) -> QSeries:
    """Exact quotient of the polynomial ``p`` by ``1 - sign*q**k``.

    ``p`` is read as a polynomial of degree <= ``p.order``. Raises
    ``ArithmeticError`` if the remainder is nonzero.
    """
    if k < 1:
        raise ValueError("k must be positive")
    d = p.order
    quot = kernels.divide_binomial(p.coeffs.reshape(1, -1), sign, 0, k)[0]
    # the series quotient is a polynomial iff it vanishes above d - k
    tail = quot[max(d - k + 1, 0):]
    if tail.any():
        raise ArithmeticError(f"1 - ({sign})q^{k} does not divide the polynomial")
    if d < k:
        return QSeries.zero(0)
    return QSeries._wrap(quot[: d - k + 1].copy())


def poly_divmod(num: QSeries, den: QSeries) -> Tuple[QSeries, QSeries]:
    """Schoolbook division of polynomials; ``den`` must have a ±1 leading coefficient."""
    n = [int(v) for v in num.coeffs]
    dd = den.degree()
    if dd is None:
        raise ZeroDivisionError("division by the zero polynomial")
    d = [int(v) for v in den.coeffs[: dd + 1]]
    lead = d[-1]
    if lead not in (1, -1):
        raise ValueError("leading coefficient of the divisor must be +1 or -1")
    nd = len(n) - 1
    if nd < dd:
        return QSeries.zero(0), QSeries(n)
    quot = [0] * (nd - dd + 1)
    for i in range(nd - dd, -1, -1):
        c = n[i + dd] * lead
        quot[i] = c
        if c:
            for j, dj in enumerate(d):
                n[i + j] -= c * dj
    rem = n[:dd] if dd else [0]
    return QSeries(quot), QSeries(rem)


def qbinom(n: int, m: int, step: int = 1, order: Optional[int] = None) -> QSeries:
    """Gaussian binomial coefficient ``[n, m]`` in the base ``q**step``.

    Zero outside ``0 <= m <= n``. Without ``order`` the result carries its
    exact degree ``step*m*(n-m)``.
    """
    if step < 1:
        raise ValueError("step must be positive")
    if not 0 <= m <= n:
        return QSeries.zero(0 if order is None else order)
    m = min(m, n - m)
    deg = m * (n - m)
    # prod_{i=1..m} (1 - q^(n-m+i)) / (1 - q^i), dividing as we go so every
    # intermediate stays a polynomial
    p = QSeries.one(0)
    for i in range(1, m + 1):
        top = p.order + (n - m + i)
        p = qs_mul(p.padded(top), QSeries.one(top) - QSeries.monomial(n - m + i, top))
        p = p.truncate(p.degree())
        p = divide_exact_binomial(p, i)
    p = p.padded(deg)
    if step > 1:
        spread = np.zeros(deg * step + 1, dtype=p.coeffs.dtype)
        spread[::step] = p.coeffs
        p = QSeries._wrap(spread)
    if order is not None:
        p = p.padded(order) if order >= p.order else p.truncate(order)
    return p
