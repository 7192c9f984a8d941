import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from qmock.series import (MonomialSpec, QSeries, divide_exact_binomial, poch_finite, poch_infinite,
                          poly_divmod, qbinom, qs_add, qs_invert, qs_mul, qs_shift)


def S(*c):
    return QSeries(list(c))


# --- examples ----------------------------------------------------------------


def test_add_examples():
    assert qs_add(S(1, 1), S(1, -1)) == S(2, 0)
    a = S(3, -1, 4)
    assert qs_add(a, QSeries.zero(2)) == a
    assert qs_add(S(1, 1, 1), S(0, 0, 0, 1)) == S(1, 1, 1)


def test_mul_examples():
    assert qs_mul(S(1, -1, 0, 0), S(1, 1, 1, 1)) == S(1, 0, 0, 0)
    a = S(5, 0, -2)
    assert qs_mul(a, QSeries.one(2)) == a
    assert qs_mul(S(1, 1, 0), S(1, 1, 0)) == S(1, 2, 1)


def test_invert_examples():
    assert qs_invert(S(1, -1, 0, 0, 0)) == S(1, 1, 1, 1, 1)
    assert qs_invert(QSeries.one(6)) == QSeries.one(6)
    # partitions into parts 1 and 3
    den = qs_mul(S(1, -1, 0, 0, 0), S(1, 0, 0, -1, 0))
    assert qs_invert(den) == S(1, 1, 1, 2, 2)


def test_invert_rejects_non_unit():
    with pytest.raises(ValueError):
        qs_invert(S(2, 1))
    with pytest.raises(ValueError):
        qs_invert(S(0, 1))


def test_shift_examples():
    assert qs_shift(S(1, 1, 0, 0), 2) == S(0, 0, 1, 1)
    a = S(1, 2, 3)
    assert qs_shift(a, 0) == a
    for k in range(5):
        assert qs_shift(QSeries.one(4), k) == QSeries.monomial(k, 4)


def test_poch_finite_examples():
    q = MonomialSpec(1, 1)
    assert poch_finite(q, 1, 0, 5) == QSeries.one(5)
    assert poch_finite(q, 2, 2, 4) == S(1, -1, 0, -1, 1)
    assert poch_finite(MonomialSpec(-1, 2), 2, 2, 6) == S(1, 0, 1, 0, 1, 0, 1)


def test_poch_infinite_examples():
    euler = poch_infinite(MonomialSpec(1, 1), 1, 12)
    assert euler.nonzero() == [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1)]
    assert poch_infinite(MonomialSpec(-1, 2), 2, 8) == S(1, 0, 1, 0, 1, 0, 2, 0, 2)
    assert poch_infinite(MonomialSpec(1, 3), 2, 0) == QSeries.one(0)


def test_poch_infinite_rejects_exponent_zero():
    with pytest.raises(ValueError):
        poch_infinite(MonomialSpec(1, 0), 1, 5)


def test_monomial_spec_validation():
    with pytest.raises(ValueError):
        MonomialSpec(2, 1)
    with pytest.raises(ValueError):
        MonomialSpec(1, -1)


def test_qbinom_examples():
    assert qbinom(2, 1) == S(1, 1)
    assert qbinom(4, 2) == S(1, 1, 2, 1, 1)
    assert qbinom(2, 3).nonzero() == []
    assert qbinom(3, -1).nonzero() == []


def test_equality_needs_same_order_but_overlap_compare_does_not():
    a, b = S(1, 2, 3), S(1, 2)
    assert a != b
    assert a.agrees_with(b)
    assert a.first_mismatch(S(1, 5, 3)) == (1, 2, 5)


# --- properties --------------------------------------------------------------

coeffs = st.integers(min_value=-10**6, max_value=10**6)


@st.composite
def series(draw, order=None):
    n = draw(st.integers(0, 12)) if order is None else order
    return QSeries(draw(st.lists(coeffs, min_size=n + 1, max_size=n + 1)))


@st.composite
def same_order(draw, k):
    n = draw(st.integers(0, 12))
    return [draw(series(order=n)) for _ in range(k)]


@settings(max_examples=60, deadline=None)
@given(same_order(3))
def test_ring_axioms(abc):
    a, b, c = abc
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(series(), series())
def test_mul_matches_naive(a, b):
    order = min(a.order, b.order)
    assert qs_mul(a, b).to_list() == oracle.mul(a.to_list(), b.to_list(), order)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([1, -1]), st.lists(coeffs, min_size=0, max_size=15))
def test_invert_is_inverse(c0, rest):
    a = QSeries([c0] + rest)
    inv = qs_invert(a)
    assert qs_mul(a, inv) == QSeries.one(a.order)
    assert inv.to_list() == oracle.inv(a.to_list(), a.order)


@pytest.mark.parametrize("sign", [1, -1])
@pytest.mark.parametrize("exponent,step", [(0, 1), (1, 1), (1, 2), (2, 2), (3, 1)])
def test_poch_finite_recurrence(sign, exponent, step):
    a = MonomialSpec(sign, exponent)
    order = 40
    for n in range(10):
        nxt = poch_finite(a, step, n + 1, order)
        factor = QSeries.one(order) - QSeries.monomial(exponent + n * step, order) * sign
        assert nxt == qs_mul(poch_finite(a, step, n, order), factor)
        assert nxt.to_list() == oracle.poch(sign, exponent, step, n + 1, order)


@pytest.mark.parametrize("sign", [1, -1])
@pytest.mark.parametrize("exponent,step", [(1, 1), (1, 2), (2, 2), (3, 5)])
def test_poch_infinite_equals_long_finite(sign, exponent, step):
    order = 60
    n = (order - exponent) // step + 1
    assert exponent + n * step > order
    a = MonomialSpec(sign, exponent)
    assert poch_infinite(a, step, order) == poch_finite(a, step, n, order)


@pytest.mark.parametrize("n", range(0, 13))
def test_qbinom_symmetry_and_pascal(n):
    for m in range(n + 1):
        g = qbinom(n, m)
        assert g == qbinom(n, n - m)
        assert g.to_list() == oracle.pascal_qbinom(n, m)


def test_qbinom_in_base_q_power():
    g = qbinom(5, 2, step=3)
    base = qbinom(5, 2)
    assert g.order == 3 * base.order
    for e, c in base.nonzero():
        assert g[3 * e] == c
    assert sum(1 for e, _ in g.nonzero() if e % 3) == 0


@pytest.mark.parametrize("m", range(0, 11))
@pytest.mark.parametrize("a", range(1, 5))
def test_q_binomial_theorem(m, a):
    # 1/(q^a;q)_{m+1} = sum_k q^(ak) [k+m, m]
    order = 40
    lhs = qs_invert(poch_finite(MonomialSpec(1, a), 1, m + 1, order))
    rhs = QSeries.zero(order)
    for k in range(order // a + 1):
        rhs = rhs + qs_shift(qbinom(k + m, m, order=order), a * k)
    assert lhs == rhs


def test_divide_exact_binomial():
    p = poch_finite(MonomialSpec(1, 1), 1, 4, 10)  # degree 10
    q = divide_exact_binomial(p, 2)
    assert q.order == 8
    assert qs_mul(q.padded(10), S(1, 0, -1, *([0] * 8))) == p
    with pytest.raises(ArithmeticError):
        divide_exact_binomial(S(1, 1, 0), 2)


def test_poly_divmod_against_mul():
    num = QSeries(oracle.poch(1, 1, 1, 5, 15))
    den = QSeries(oracle.poch(1, 2, 2, 2, 6))
    quo, rem = poly_divmod(num, den)
    assert rem.nonzero() == []
    order = 15
    assert qs_mul(quo.padded(order), den.padded(order)) == num


def test_overflow_promotes_to_python_ints():
    big = 2 ** 61
    a = QSeries([1, big, big])
    sq = a * a
    assert sq.coeffs.dtype == object
    assert sq[2] == 2 * big + big * big
    assert (a * 3)[1] == 3 * big
    # the inverse of 1 - 2^40 q grows past int64 quickly
    inv = qs_invert(QSeries([1, -(2 ** 40), 0, 0, 0]))
    assert inv.to_list() == [2 ** (40 * k) for k in range(5)]


def test_series_is_immutable():
    a = S(1, 2)
    with pytest.raises(ValueError):
        a.coeffs[0] = 5
    with pytest.raises(TypeError):
        QSeries([1.5])
