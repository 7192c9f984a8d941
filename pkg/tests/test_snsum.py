import pytest

import oracle
from qmock import snsum
from qmock.series import QSeries
from qmock.snsum import (CHAIN_VARIANTS, check_chain, check_lemma2, check_lemma3, check_lemma4,
                         check_lemma5, check_recurrence, check_s2_from_lemma2, reverse_poly, s_poly,
                         term_poly)


def naive_s(n, i):
    """S_n(i) by naive list arithmetic and schoolbook division."""
    total = [0]
    for j in range(n + 1):
        deg = (n + j) * (n + j + 1) // 2
        num = oracle.poch(1, 1, 1, n + j, deg)
        den = oracle.poch(1, 2, 2, j, j * (j + 1))
        quo = _divide(num, den)
        total = oracle.add(total, [0] * (i * j) + quo)
    return oracle.trim(total)


def _divide(num, den):
    num = oracle.trim(num)
    den = oracle.trim(den)
    quo = [0] * (len(num) - len(den) + 1)
    num = list(num)
    for k in range(len(quo) - 1, -1, -1):
        c = num[k + len(den) - 1] // den[-1]
        quo[k] = c
        for t, d in enumerate(den):
            num[k + t] -= c * d
    assert not any(num), "nonzero remainder"
    return quo


def test_s_poly_examples():
    assert s_poly(0, 1).poly.to_list() == [1]
    assert s_poly(1, 1).poly.to_list() == [1, 0, -1]
    assert s_poly(1, 2).poly.to_list() == [1, -1, 1, -1]


@pytest.mark.parametrize("n", range(0, 8))
@pytest.mark.parametrize("i", range(0, 4))
def test_s_poly_matches_naive(n, i):
    assert s_poly(n, i).poly.to_list() == naive_s(n, i)


def test_term_poly_rejects_bad_index():
    with pytest.raises(ValueError):
        term_poly(2, 3)
    with pytest.raises(ValueError):
        s_poly(-1, 0)


def test_first_identity_examples_and_batch():
    assert check_lemma2(1, 1)
    assert check_lemma2(1, 0)
    for n in range(1, 31):
        for i in range(7):
            assert check_lemma2(n, i), (n, i)
    with pytest.raises(ValueError):
        check_lemma2(0, 1)


def test_second_identity_examples_and_batch():
    assert check_lemma3(0, 0)
    assert check_lemma3(0, 1)
    for n in range(31):
        for i in range(7):
            assert check_lemma3(n, i), (n, i)


def test_closed_forms():
    assert check_lemma4(0) and check_lemma4(5)
    assert check_lemma5(0) and check_lemma5(1)
    for n in range(51):
        assert check_lemma4(n), n
        assert check_lemma5(n), n


def test_recurrence():
    assert check_recurrence(2) and check_recurrence(3)
    for n in range(2, 51):
        assert check_recurrence(n), n
    with pytest.raises(ValueError):
        check_recurrence(1)


def test_s2_follows_from_step_and_closed_form():
    for n in range(1, 31):
        assert check_s2_from_lemma2(n), n


def test_degree_and_leading_coefficient_of_s1():
    for n in range(0, 30):
        p = s_poly(n, 1).poly
        assert p.degree() == n * (n + 1)
        assert abs(p[p.degree()]) == 1


def test_chain_examples():
    assert check_chain(0, "geom")
    assert check_chain(1, "eq13")
    for N in range(26):
        for which in CHAIN_VARIANTS:
            assert check_chain(N, which), (N, which)


def test_chain_rejects_bad_input():
    with pytest.raises(ValueError):
        check_chain(-1, "geom")
    with pytest.raises(ValueError):
        check_chain(3, "eq99")


def test_eq13_is_bit_identical_to_closed_form_check():
    for N in range(26):
        assert check_chain(N, "eq13") == check_lemma5(N)


def test_reverse_poly():
    assert reverse_poly(QSeries([1, -1]), 1).to_list() == [-1, 1]
    p = QSeries([3, 0, -2, 5])
    assert reverse_poly(reverse_poly(p, 6), 6).padded(6) == p.padded(6)
    with pytest.raises(ValueError):
        reverse_poly(p, 2)


def test_reversal_links_the_two_nu_sums_at_n2():
    N = 2
    d = N * N + N
    lhs17 = snsum.padd(*snsum._eq17_terms(N))
    lhs18 = snsum.padd(*snsum._eq18_terms(N))
    assert reverse_poly(lhs17, d).padded(d) == lhs18.padded(d)


def test_check_result_witness_on_failure():
    res = snsum.compare(QSeries([1, 2, 3]), QSeries([1, 2, 4]))
    assert not res
    assert res.witness == (2, 3, 4)
