"""Series builders for both sides of every identity in the catalog.

Each builder sums an outer series term by term. A term is a signed
monomial ``±z^a q^b`` times a finite list of binomial factors, and it is
evaluated on the sub-grid it can actually reach, then added in place. The
outer index stops once the term's minimum q-exponent passes ``q_order``.

Two keyword arguments exist for testing:

``extra_terms``
    keep summing that many terms past the cutoff (the result must not change).
``drop_term``
    skip the term with this outer index (fault injection).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

import numpy as np

from . import kernels
from .bivariate import ZQSeries
from .series import QSeries

# every builder here attaches at least one power of q to each power of z
ROW_VALUATION = 1

Monomial = Tuple[int, int, int]  # (coeff, z-degree, q-degree)


@dataclass
class _Term:
    coeff: int
    z: int
    q: int
    # factors 1/(1 - sign z^a q^b)
    divs: List[Tuple[int, int, int]] = field(default_factory=list)
    # factors (c0 z^a0 q^b0 + c1 z^a1 q^b1)
    muls: List[Tuple[Monomial, Monomial]] = field(default_factory=list)


def _one_minus(sign: int, a: int, b: int) -> Tuple[Monomial, Monomial]:
    return (1, 0, 0), (-sign, a, b)


def _row_cap(term: _Term, rows: int, cols: int) -> int:
    """Rows of the term's block that can be nonzero."""
    ratios = []
    zdeg_bound = 0
    for _, a, b in term.divs:
        if a:
            ratios.append(b // a)
    if term.divs and any(a for _, a, _ in term.divs):
        zdeg_bound = None
    for m0, m1 in term.muls:
        for _, a, b in (m0, m1):
            if a:
                ratios.append(b // a)
        if zdeg_bound is not None:
            zdeg_bound += max(m0[1], m1[1])
    cap = rows
    if zdeg_bound is not None:
        cap = min(cap, zdeg_bound + 1)
    if ratios and min(ratios) >= 1:
        cap = min(cap, (cols - 1) // min(ratios) + 1)
    return cap


def _evaluate(term: _Term, rows: int, cols: int) -> np.ndarray:
    block = np.zeros((rows, cols), np.int64)
    block[0, 0] = term.coeff
    for (c0, a0, b0), (c1, a1, b1) in term.muls:
        block = kernels.mul_binomial(block, c0, a0, b0, c1, a1, b1)
    for s, a, b in term.divs:
        if a < rows and b < cols:
            block = kernels.divide_binomial(block, s, a, b)
    return block


def assemble(z_order: int, q_order: int, start: int, valuation: Callable[[int], int],
             term: Callable[[int], _Term], *, extra_terms: int = 0,
             drop_term: Optional[int] = None, row_valuation: int = ROW_VALUATION) -> ZQSeries:
    """Sum ``term(n)`` for ``n = start, start+1, ...`` while ``valuation(n) <= q_order``."""
    acc = np.zeros((z_order + 1, q_order + 1), np.int64)
    n = start
    past = 0
    while True:
        if valuation(n) > q_order:
            if past >= extra_terms:
                break
            past += 1
        if n != drop_term:
            t = term(n)
            rows = z_order + 1 - t.z
            cols = q_order + 1 - t.q
            if rows > 0 and cols > 0:
                rows = _row_cap(t, rows, cols)
                block = _evaluate(t, rows, cols)
                acc = _add_block(acc, block, t.z, t.q)
        n += 1
    return ZQSeries._wrap(acc, row_valuation)


def _add_block(acc, block, z0, q0):
    rows, cols = block.shape
    if acc.dtype == object or block.dtype == object:
        acc = kernels.to_object(acc)
        block = kernels.to_object(block)
    elif (kernels._absmax(acc) + kernels._absmax(block)) >= kernels.LIMIT:
        acc = kernels.to_object(acc)
        block = kernels.to_object(block)
    acc[z0:z0 + rows, q0:q0 + cols] += block
    return acc


def _odd_run(count: int, sign: int, zdeg: int):
    """Divisors for ``(±z^zdeg q; q^2)_count``: ``1 - sign z^zdeg q^(2k+1)``."""
    return [(sign, zdeg, 2 * k + 1) for k in range(count)]


# ---------------------------------------------------------------------------
# two-variable builders


def build_omega_z_eulerian(z_order, q_order, **kw) -> ZQSeries:
    """sum z^n q^(2n^2+2n) / ((q;q^2)_{n+1} (zq;q^2)_{n+1})"""
    return assemble(z_order, q_order, 0, lambda n: 2 * n * n + 2 * n,
                    lambda n: _Term(1, n, 2 * n * n + 2 * n,
                                    divs=_odd_run(n + 1, 1, 0) + _odd_run(n + 1, 1, 1)), **kw)


def build_omega_z_simple(z_order, q_order, **kw) -> ZQSeries:
    """sum z^n q^n / (q;q^2)_{n+1}"""
    return assemble(z_order, q_order, 0, lambda n: n,
                    lambda n: _Term(1, n, n, divs=_odd_run(n + 1, 1, 0)), **kw)


def build_omega_z_slashed(z_order, q_order, **kw) -> ZQSeries:
    """sum q^n / (zq;q^2)_{n+1}"""
    return assemble(z_order, q_order, 0, lambda n: n,
                    lambda n: _Term(1, 0, n, divs=_odd_run(n + 1, 1, 1)), **kw)


def build_nu_z_eulerian(z_order, q_order, **kw) -> ZQSeries:
    """sum q^(n^2+n) / (-zq;q^2)_{n+1}"""
    return assemble(z_order, q_order, 0, lambda n: n * n + n,
                    lambda n: _Term(1, 0, n * n + n, divs=_odd_run(n + 1, -1, 1)), **kw)


def build_nu_z_product(z_order, q_order, **kw) -> ZQSeries:
    """sum (q/z;q^2)_n (-zq)^n, taken as (-q)^n prod_{k<n} (z - q^(2k+1))"""
    return assemble(z_order, q_order, 0, lambda n: n,
                    lambda n: _Term((-1) ** n, 0, n,
                                    muls=[((1, 1, 0), (-1, 0, 2 * k + 1)) for k in range(n)]), **kw)


def build_nu1_z_eulerian(z_order, q_order, **kw) -> ZQSeries:
    """sum z^n q^(n^2+n) / (-q;q^2)_{n+1}"""
    return assemble(z_order, q_order, 0, lambda n: n * n + n,
                    lambda n: _Term(1, n, n * n + n, divs=_odd_run(n + 1, -1, 0)), **kw)


def build_nu1_z_product(z_order, q_order, **kw) -> ZQSeries:
    """sum (zq;q^2)_n (-q)^n"""
    return assemble(z_order, q_order, 0, lambda n: n,
                    lambda n: _Term((-1) ** n, 0, n,
                                    muls=[_one_minus(1, 1, 2 * k + 1) for k in range(n)]), **kw)


def _tail_run(first: int, limit: int, sign: int, zdeg: int):
    """Factors ``1 - sign z^zdeg q^e`` for e = first, first+2, ... up to ``limit``."""
    return [(sign, zdeg, e) for e in range(first, limit + 1, 2)]


def build_thm1_omega_lhs(z_order, q_order, **kw) -> ZQSeries:
    """sum_{n>=1} q^n / ((zq^n;q)_{n+1} (zq^{2n+2};q^2)_inf)"""
    def term(n):
        divs = [(1, 1, n + k) for k in range(n + 1)]
        divs += _tail_run(2 * n + 2, q_order - n, 1, 1)
        return _Term(1, 0, n, divs=divs)
    return assemble(z_order, q_order, 1, lambda n: n, term, **kw)


def build_thm1_omega_rhs(z_order, q_order, **kw) -> ZQSeries:
    """sum z^n q^(2n^2+2n+1) / ((q;q^2)_{n+1} (zq;q^2)_{n+1})"""
    return assemble(z_order, q_order, 0, lambda n: 2 * n * n + 2 * n + 1,
                    lambda n: _Term(1, n, 2 * n * n + 2 * n + 1,
                                    divs=_odd_run(n + 1, 1, 0) + _odd_run(n + 1, 1, 1)), **kw)


def build_thm1_nu_lhs(z_order, q_order, **kw) -> ZQSeries:
    """sum q^n (-zq^{n+1};q)_n (-zq^{2n+2};q^2)_inf"""
    def term(n):
        muls = [_one_minus(-1, 1, n + 1 + k) for k in range(n)]
        muls += [_one_minus(-1, 1, e) for e in range(2 * n + 2, q_order - n + 1, 2)]
        return _Term(1, 0, n, muls=muls)
    return assemble(z_order, q_order, 0, lambda n: n, term, **kw)


def build_thm1_nu_rhs(z_order, q_order, **kw) -> ZQSeries:
    """sum z^n q^(n^2+n) / (q;q^2)_{n+1}"""
    return assemble(z_order, q_order, 0, lambda n: n * n + n,
                    lambda n: _Term(1, n, n * n + n, divs=_odd_run(n + 1, 1, 0)), **kw)


def build_thm2omega_rhs(z_order, q_order, **kw) -> ZQSeries:
    """sum_{n>=1} z^(n-1) q^n / (q;q^2)_n"""
    return assemble(z_order, q_order, 1, lambda n: n,
                    lambda n: _Term(1, n - 1, n, divs=_odd_run(n, 1, 0)), **kw)


# ---------------------------------------------------------------------------
# one-variable builders (a single z-row)


def _univariate(q_order, start, valuation, term, **kw) -> QSeries:
    return assemble(0, q_order, start, valuation, term, **kw).row(0)


def build_omega(q_order, **kw) -> QSeries:
    """omega(q) = sum q^(2n^2+2n) / (q;q^2)_{n+1}^2"""
    return _univariate(q_order, 0, lambda n: 2 * n * n + 2 * n,
                       lambda n: _Term(1, 0, 2 * n * n + 2 * n,
                                       divs=_odd_run(n + 1, 1, 0) * 2), **kw)


def build_q_omega(q_order, **kw) -> QSeries:
    """q * omega(q)"""
    om = build_omega(max(q_order - 1, 0), **kw)
    return QSeries([0] + om.to_list()[:q_order])


def build_nu(q_order, **kw) -> QSeries:
    """nu(q) = sum q^(n^2+n) / (-q;q^2)_{n+1}"""
    return _univariate(q_order, 0, lambda n: n * n + n,
                       lambda n: _Term(1, 0, n * n + n, divs=_odd_run(n + 1, -1, 0)), **kw)


def build_nu_neg(q_order, **kw) -> QSeries:
    """nu(-q), by substitution."""
    return build_nu(q_order, **kw).negate_q()


def build_ady_omega_lhs(q_order, **kw) -> QSeries:
    """sum_{n>=1} q^n / ((q^n;q)_{n+1} (q^{2n+2};q^2)_inf)"""
    def term(n):
        divs = [(1, 0, n + k) for k in range(n + 1)]
        divs += _tail_run(2 * n + 2, q_order - n, 1, 0)
        return _Term(1, 0, n, divs=divs)
    return _univariate(q_order, 1, lambda n: n, term, **kw)


def build_ady_nu_lhs(q_order, **kw) -> QSeries:
    """sum q^n (-q^{n+1};q)_n (-q^{2n+2};q^2)_inf"""
    def term(n):
        muls = [_one_minus(-1, 0, n + 1 + k) for k in range(n)]
        muls += [_one_minus(-1, 0, e) for e in range(2 * n + 2, q_order - n + 1, 2)]
        return _Term(1, 0, n, muls=muls)
    return _univariate(q_order, 0, lambda n: n, term, **kw)


def build_ady_nu_rhs(q_order, **kw) -> QSeries:
    """sum q^(n^2+n) / (q;q^2)_{n+1}"""
    return _univariate(q_order, 0, lambda n: n * n + n,
                       lambda n: _Term(1, 0, n * n + n, divs=_odd_run(n + 1, 1, 0)), **kw)


def build_pnt_omega_lhs(q_order, **kw) -> QSeries:
    """sum_{n>=1} q^n / ((-q^n;q)_{n+1} (-q^{2n+2};q^2)_inf)"""
    def term(n):
        divs = [(-1, 0, n + k) for k in range(n + 1)]
        divs += _tail_run(2 * n + 2, q_order - n, -1, 0)
        return _Term(1, 0, n, divs=divs)
    return _univariate(q_order, 1, lambda n: n, term, **kw)


def build_pnt_nu_lhs(q_order, **kw) -> QSeries:
    """sum q^n (q^{n+1};q)_n (q^{2n+2};q^2)_inf"""
    def term(n):
        muls = [_one_minus(1, 0, n + 1 + k) for k in range(n)]
        muls += [_one_minus(1, 0, e) for e in range(2 * n + 2, q_order - n + 1, 2)]
        return _Term(1, 0, n, muls=muls)
    return _univariate(q_order, 0, lambda n: n, term, **kw)


def _theta_like(q_order, base: Callable[[int], int], gap: Callable[[int], int], **kw) -> QSeries:
    """sum_j (-1)^j q^base(j) (1 + q^gap(j))"""
    return _univariate(q_order, 0, base,
                       lambda j: _Term((-1) ** j, 0, base(j),
                                       muls=[((1, 0, 0), (1, 0, gap(j)))]), **kw)


def build_pnt_omega_rhs(q_order, **kw) -> QSeries:
    """sum_j (-1)^j q^(6j^2+4j+1) (1 + q^(4j+2))"""
    return _theta_like(q_order, lambda j: 6 * j * j + 4 * j + 1, lambda j: 4 * j + 2, **kw)


def build_pnt_nu_rhs(q_order, **kw) -> QSeries:
    """sum_j (-1)^j q^(3j^2+2j) (1 + q^(2j+1))"""
    return _theta_like(q_order, lambda j: 3 * j * j + 2 * j, lambda j: 2 * j + 1, **kw)


def build_entry953_lhs(q_order, **kw) -> QSeries:
    """sum q^n / (-q;q^2)_{n+1}"""
    return _univariate(q_order, 0, lambda n: n,
                       lambda n: _Term(1, 0, n, divs=_odd_run(n + 1, -1, 0)), **kw)


def build_entry953_rhs(q_order, **kw) -> QSeries:
    """sum_j (-1)^j q^(6j^2+4j) (1 + q^(4j+2))"""
    return _theta_like(q_order, lambda j: 6 * j * j + 4 * j, lambda j: 4 * j + 2, **kw)


def build_entry952_lhs(q_order, **kw) -> QSeries:
    """sum (q;q^2)_n q^n"""
    return _univariate(q_order, 0, lambda n: n,
                       lambda n: _Term(1, 0, n, muls=[_one_minus(1, 0, 2 * k + 1) for k in range(n)]),
                       **kw)


def build_eq11_rhs(q_order, **kw) -> QSeries:
    """sum q^(n+1) / (-q;q^2)_{n+1}"""
    return _univariate(q_order, 0, lambda n: n + 1,
                       lambda n: _Term(1, 0, n + 1, divs=_odd_run(n + 1, -1, 0)), **kw)

