import pytest

from schreier import closed_form as cf
from schreier.core import Family, IntPolynomial, SequenceId, poly_add
from schreier.oracle import count_maximal, count_schreier
from schreier.polyengine import build_p, build_q, corollary_polynomial
from schreier.recurrence import (LinearRecurrence, NegativeTermDetected,
                                 corollary_coefficients, gen_max_padovan_like,
                                 gen_padovan_like, gen_s_by_corollary,
                                 gen_s_by_extraction, gen_sm_by_corollary,
                                 gen_sm_by_extraction, gen_sm_from_s, satisfies,
                                 s_by_extraction, sequence_terms, sm_by_extraction,
                                 sm_from_s)


def test_gen_padovan_like():
    assert gen_padovan_like(4, 17) == [1, 1, 2, 2, 2, 2, 3, 4, 4, 4, 5, 7, 8, 8, 9, 12, 15]
    assert gen_padovan_like(2, 14)[13] == 37
    assert gen_padovan_like(1, 8) == [1, 1, 2, 3, 5, 8, 13, 21]


def test_gen_max_padovan_like():
    assert gen_max_padovan_like(3, 18) == [0, 0, 1, 0, 0, 1, 1, 0, 1, 2, 1, 1, 3, 3, 2, 4, 6, 5]
    assert gen_max_padovan_like(4, 12)[11] == 2
    assert gen_max_padovan_like(1, 7) == [1, 0, 1, 1, 2, 3, 5]


def test_short_prefixes():
    assert gen_padovan_like(5, 1) == [1]
    assert gen_max_padovan_like(5, 0) == []
    assert gen_s_by_extraction(3, 0) == []


def test_extraction():
    assert s_by_extraction(3, 7) == 38
    assert s_by_extraction(2, 1) == 1
    assert sm_by_extraction(4, 10) == 35


def test_gen_s_by_corollary():
    assert gen_s_by_corollary(4, 9) == [1, 2, 4, 8, 15, 27, 48, 86, 157]
    assert gen_s_by_corollary(2, 7) == [1, 2, 3, 5, 9, 16, 28]
    assert gen_s_by_corollary(1, 6) == [1, 1, 2, 3, 5, 8]


def test_gen_sm_by_corollary():
    assert gen_sm_by_corollary(4, 10) == [0, 0, 0, 1, 3, 6, 10, 15, 22, 35]
    assert gen_sm_by_corollary(3, 4) == [0, 0, 1, 2]
    assert gen_sm_by_corollary(2, 15)[14] == 616
    assert gen_sm_by_corollary(1, 4) == [1, 0, 1, 1]


def test_corollary_coefficients():
    # s_n = 2 s_{n-1} - s_{n-2} + s_{n-3} for k = 2
    assert corollary_coefficients(2) == (2, -1, 1)
    assert corollary_coefficients(1) == (1, 1)
    assert corollary_coefficients(3) == (3, -3, 1, 1)


@pytest.mark.parametrize("k,n,expected", [(1, 7, 5), (3, 9, 22), (4, 14, 529)])
def test_sm_from_s(k, n, expected):
    assert sm_from_s(k, n) == expected
    assert sm_from_s(k, n, s=cf.schreier_count_closed) == expected


def test_sm_from_s_flags_inconsistent_backend():
    with pytest.raises(NegativeTermDetected):
        sm_from_s(2, 3, s=lambda k, n: 3 ** n)


def test_negative_term_detection():
    with pytest.raises(NegativeTermDetected):
        LinearRecurrence((1, 1), (1, -3)).terms(5)
    assert LinearRecurrence((1, 1), (1, -3), nonnegative=False).terms(3) == [1, 1, -2]


def test_recurrence_needs_enough_initial_terms():
    with pytest.raises(ValueError):
        LinearRecurrence((1,), (1, 1))


def test_three_way_agreement():
    for k in range(1, 7):
        ext, cor = gen_s_by_extraction(k, 60), gen_s_by_corollary(k, 60)
        mext, mcor = gen_sm_by_extraction(k, 60), gen_sm_by_corollary(k, 60)
        for n in range(1, 61):
            assert ext[n - 1] == cor[n - 1] == cf.schreier_count_closed(k, n)
            assert mext[n - 1] == mcor[n - 1] == cf.max_schreier_count_closed(k, n)


def test_oracle_agreement():
    for k in range(1, 6):
        s, sm = gen_s_by_corollary(k, 20), gen_sm_by_extraction(k, 20)
        for n in range(1, 21):
            assert s[n - 1] == count_schreier(k, n)
            assert sm[n - 1] == count_maximal(k, n)


def test_theorem3_long_range():
    for k in range(1, 7):
        assert gen_sm_from_s(k, 300) == gen_sm_by_corollary(k, 300) == gen_sm_by_extraction(k, 300)


def test_satisfies_examples():
    a2 = gen_padovan_like(2, 300)
    assert satisfies(a2, IntPolynomial((1, 0, -1, -1)), 299)
    s2 = gen_s_by_corollary(2, 100)
    assert satisfies(s2, IntPolynomial((1, -2, 1, -1)), 99)
    fib = sequence_terms(SequenceId(Family.FIBONACCI), 0, 51)
    assert not satisfies(fib, IntPolynomial((1, -1, 0, -1)), 50)
    assert satisfies(fib, IntPolynomial((1, -1, -1)))


def test_satisfies_zero_polynomial_and_guards():
    assert satisfies([5, -3], IntPolynomial())
    with pytest.raises(ValueError):
        satisfies([1, 2], IntPolynomial((1, 0, -1)))
    with pytest.raises(ValueError):
        satisfies([1, 2, 3], IntPolynomial((1, -1)), up_to=3)


def test_satisfaction_closure():
    for k in range(1, 5):
        p = build_p(k)
        a = gen_padovan_like(k, 300)
        assert satisfies(a, p)
        for ell in range(6):
            assert satisfies(a, p.shift(ell))
            assert satisfies(a, poly_add(p, p.shift(ell)))
        assert satisfies(a, poly_add(build_q(k), p.shift(2)))


def test_q_and_corollary_polynomial_annihilate():
    for k in range(1, 9):
        q = build_q(k)
        assert satisfies(gen_padovan_like(k, 600), q)
        assert satisfies(gen_max_padovan_like(k, 600), q)
        cor = corollary_polynomial(k)
        assert satisfies(gen_s_by_extraction(k, 200), cor)
        assert satisfies(gen_sm_by_extraction(k, 200), cor)


def test_sequence_terms():
    assert sequence_terms(SequenceId(Family.FIBONACCI), -1, 3) == [1, 0, 1]
    assert sequence_terms(SequenceId.parse("s", 2), 3, 3) == [3, 5, 9]
    assert sequence_terms(SequenceId.parse("am", 2), 0, 5) == [0, 0, 1, 0, 1]
    assert sequence_terms(SequenceId.parse("sm", 3), 1, 4) == [0, 0, 1, 2]
    with pytest.raises(ValueError):
        sequence_terms(SequenceId.parse("s", 2), 0, 3)
