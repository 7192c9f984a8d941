"""Exact polynomials S_n(i) and per-instance checks of the identities built on them.

    S_n(i) = sum_{j=0}^{n} q^(i*j) (q;q)_{n+j} / (q^2;q^2)_j

Every term is an honest polynomial: it is formed by dividing (q;q)_{n+j} by
(1 - q^2), (1 - q^4), ..., (1 - q^(2j)) in turn, and each division must
leave no remainder.

Polynomials are carried as :class:`QSeries` whose order equals their degree
bound; ``padded`` lifts them to a common order before comparison.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

from .series import (MonomialSpec, QSeries, divide_exact_binomial, poch_finite, qs_invert,
                     qs_mul, qs_shift)

CHAIN_VARIANTS = ("geom", "eq111", "eq12", "eq13", "eq16", "eq17", "eq18")

Q = MonomialSpec(1, 1)
Q2 = MonomialSpec(1, 2)


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    # (q-exponent, lhs coefficient, rhs coefficient) of the first difference
    witness: Optional[Tuple[int, int, int]] = None

    def __bool__(self):
        return self.passed


@dataclass(frozen=True)
class SnPolynomial:
    n: int
    i: int
    poly: QSeries


# --- polynomial helpers ------------------------------------------------------


def _poly(p: QSeries) -> QSeries:
    """Trim to the exact degree (zero polynomial -> order 0)."""
    d = p.degree()
    return p.truncate(d if d is not None else 0)


def padd(*ps: QSeries) -> QSeries:
    order = max(p.order for p in ps)
    out = ps[0].padded(order)
    for p in ps[1:]:
        out = out + p.padded(order)
    return out


def pmul(a: QSeries, b: QSeries) -> QSeries:
    order = a.order + b.order
    return qs_mul(a.padded(order), b.padded(order))


def pshift(a: QSeries, k: int) -> QSeries:
    """Multiply the polynomial by ``q**k``, growing the order."""
    return qs_shift(a.padded(a.order + k), k)


def monomial(k: int, coeff: int = 1) -> QSeries:
    return QSeries.monomial(k, k, coeff)


def compare(lhs: QSeries, rhs: QSeries) -> CheckResult:
    order = max(lhs.order, rhs.order)
    miss = lhs.padded(order).first_mismatch(rhs.padded(order))
    return CheckResult(miss is None, miss)


def compare_series(lhs: QSeries, rhs: QSeries) -> CheckResult:
    miss = lhs.first_mismatch(rhs)
    return CheckResult(miss is None, miss)


def poch_poly(a: MonomialSpec, step: int, n: int) -> QSeries:
    """``(a; q^step)_n`` as an exact polynomial."""
    deg = sum(a.exponent + k * step for k in range(n))
    return poch_finite(a, step, n, deg)


def reverse_poly(p: QSeries, d: int) -> QSeries:
    """``q**d * p(1/q)``: coefficient of q^e becomes that of q^(d-e)."""
    deg = p.degree()
    if deg is not None and deg > d:
        raise ValueError(f"degree {deg} exceeds reversal degree {d}")
    return QSeries(p.padded(d).to_list()[::-1])


# --- S_n(i) --------------------------------------------------------------------


@lru_cache(maxsize=None)
def term_poly(n: int, j: int) -> QSeries:
    """(q;q)_{n+j} / (q^2;q^2)_j, divided one factor at a time with remainder checks."""
    if not 0 <= j <= n:
        raise ValueError("need 0 <= j <= n")
    p = poch_poly(Q, 1, n + j)
    for k in range(1, j + 1):
        p = divide_exact_binomial(p, 2 * k)
    return _poly(p)


def s_poly(n: int, i: int) -> SnPolynomial:
    if n < 0 or i < 0:
        raise ValueError("n and i must be nonnegative")
    return SnPolynomial(n, i, _s(n, i))


@lru_cache(maxsize=None)
def _s(n: int, i: int) -> QSeries:
    return _poly(padd(*(pshift(term_poly(n, j), i * j) for j in range(n + 1))))


def _odd_poch(n: int) -> QSeries:
    return poch_poly(Q, 2, n)


def _even_poch(n: int) -> QSeries:
    return poch_poly(Q2, 2, n)


# --- identities on S_n(i) ---------------------------------------------------------


def check_lemma2(n: int, i: int) -> CheckResult:
    """S_n(i) = S_{n-1}(i) - q^n S_{n-1}(i+1) + q^(in) (q;q^2)_n"""
    if n < 1:
        raise ValueError("n must be at least 1")
    rhs = padd(_s(n - 1, i), -pshift(_s(n - 1, i + 1), n), pshift(_odd_poch(n), i * n))
    return compare(_s(n, i), rhs)


def check_lemma3(n: int, i: int) -> CheckResult:
    """S_n(i+2) = S_n(i) - q^i S_{n+1}(i) + q^(i(n+1)) (1+q^i) (q;q^2)_{n+1}"""
    if n < 0 or i < 0:
        raise ValueError("n and i must be nonnegative")
    tail = pmul(padd(monomial(0), monomial(i)), _odd_poch(n + 1))
    rhs = padd(_s(n, i), -pshift(_s(n + 1, i), i), pshift(tail, i * (n + 1)))
    return compare(_s(n, i + 2), rhs)


def check_lemma4(n: int) -> CheckResult:
    """S_n(1) = (q^2;q^2)_n"""
    return compare(_s(n, 1), _even_poch(n))


def _lemma5_sides(n: int):
    return _s(n, 2), padd(_odd_poch(n + 1), pshift(_even_poch(n), n + 1))


def check_lemma5(n: int) -> CheckResult:
    """S_n(2) = (q;q^2)_{n+1} + q^(n+1) (q^2;q^2)_n"""
    return compare(*_lemma5_sides(n))


def check_recurrence(n: int) -> CheckResult:
    """S_n(1) = (1 + q - q^(2n)) S_{n-1}(1) - q (1 - q^(2n-2)) S_{n-2}(1)"""
    if n < 2:
        raise ValueError("n must be at least 2")
    a = padd(monomial(0), monomial(1), monomial(2 * n, -1))
    b = padd(monomial(1), monomial(2 * n - 1, -1))
    rhs = padd(pmul(a, _s(n - 1, 1)), -pmul(b, _s(n - 2, 1)))
    return compare(_s(n, 1), rhs)


def check_s2_from_lemma2(n: int) -> CheckResult:
    """q^n S_{n-1}(2) = S_{n-1}(1) - S_n(1) + q^n (q;q^2)_n, with S(1) from the closed form."""
    if n < 1:
        raise ValueError("n must be at least 1")
    lhs = pshift(_s(n - 1, 2), n)
    rhs = padd(_even_poch(n - 1), -_even_poch(n), pshift(_odd_poch(n), n))
    return compare(lhs, rhs)


# --- coefficient identities for fixed N ---------------------------------------------


def _series_order(N: int) -> int:
    return 4 * N + 4


def _inv(p: QSeries, order: int) -> QSeries:
    return qs_invert(p.padded(order) if p.order <= order else p.truncate(order))


def _trunc(p: QSeries, order: int) -> QSeries:
    return p.padded(order) if p.order <= order else p.truncate(order)


def _block(N: int, s: int, order: int) -> QSeries:
    """(q^{1+N+s}; q)_{N-s+1}, truncated."""
    return poch_finite(MonomialSpec(1, 1 + N + s), 1, N - s + 1, order)


def _chain_geom(N):
    D = _series_order(N)
    lhs = QSeries.zero(D)
    for s in range(N + 1):
        lhs = lhs + qs_shift(_inv(_even_poch(s), D), 2 * s)
    return compare_series(lhs, _inv(_even_poch(N), D))


def _chain_eq111(N):
    D = _series_order(N)
    lhs = QSeries.zero(D)
    for s in range(N + 1):
        inner = qs_invert(_block(N, s, D)) - QSeries.one(D)
        lhs = lhs + qs_shift(qs_mul(_inv(_even_poch(s), D), inner), 2 * s)
    rhs = qs_shift(_inv(_odd_poch(N + 1), D), N + 1)
    return compare_series(lhs, rhs)


def _chain_eq12(N):
    D = _series_order(N)
    lhs = QSeries.zero(D)
    for s in range(N + 1):
        den = qs_mul(_trunc(_even_poch(s), D), _block(N, s, D))
        lhs = lhs + qs_shift(qs_invert(den), 2 * s)
    rhs = _inv(_even_poch(N), D) + qs_shift(_inv(_odd_poch(N + 1), D), N + 1)
    return compare_series(lhs, rhs)


def _chain_eq13(N):
    lhs = _poly(padd(*(pshift(term_poly(N, s), 2 * s) for s in range(N + 1))))
    return compare(lhs, _lemma5_sides(N)[1])


def _tri(k: int) -> int:
    return k * (k + 1) // 2


def _chain_eq16(N):
    D = _series_order(N)
    lhs = QSeries.zero(D)
    for s in range(N + 1):
        if _tri(N - s) > D:
            continue
        den = qs_mul(_trunc(_even_poch(s), D), _block(N, s, D))
        lhs = lhs + qs_shift(qs_invert(den), _tri(N - s))
    return compare_series(lhs, _inv(_odd_poch(N + 1), D))


def _eq17_terms(N):
    return [pshift(term_poly(N, s), _tri(N - s)) for s in range(N + 1)]


def _eq18_terms(N):
    return [pshift(term_poly(N, s), s) for s in range(N + 1)]


def _chain_eq17(N):
    return compare(padd(*_eq17_terms(N)), _even_poch(N))


def _chain_eq18(N):
    direct = compare(padd(*_eq18_terms(N)), _even_poch(N))
    if not direct:
        return direct
    # q -> 1/q then multiply by q^(N^2+N), term by term; each term picks up (-1)^N
    d = N * N + N
    sign = -1 if N % 2 else 1
    for t17, t18 in zip(_eq17_terms(N), _eq18_terms(N)):
        res = compare(reverse_poly(t17, d), t18 * sign)
        if not res:
            return res
    return compare(reverse_poly(_even_poch(N), d), _even_poch(N) * sign)


_CHAIN = {
    "geom": _chain_geom,
    "eq111": _chain_eq111,
    "eq12": _chain_eq12,
    "eq13": _chain_eq13,
    "eq16": _chain_eq16,
    "eq17": _chain_eq17,
    "eq18": _chain_eq18,
}


def check_chain(N: int, which: str) -> CheckResult:
    if N < 0:
        raise ValueError("N must be nonnegative")
    try:
        fn = _CHAIN[which]
    except KeyError:
        raise ValueError(f"unknown chain step {which!r}; expected one of {CHAIN_VARIANTS}") from None
    return fn(N)
