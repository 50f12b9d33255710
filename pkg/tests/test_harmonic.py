from fractions import Fraction
from math import factorial

import pytest

from polydomain.comb import stirling2
from polydomain.harmonic import (
    HarmonicTable,
    dom_witness,
    dom_witness_series,
    harmonic_matrix,
    hsum,
    hsum_oracle,
    li_coeffs,
    li_over_1mz_coeffs,
    preimage_by_shuffle_powers,
    preimage_from_taylor,
    summability_diagnostic,
)
from polydomain.ncalg import NCPolynomial, shuffle, stuffle
from polydomain.parsing import parse_expression as P
from polydomain.taylor import TaylorSeries
from polydomain.words import X, AlphabetError, DomainError, Word, pi_x, pi_y, y_words_up_to


def test_hsum_examples():
    assert hsum(Word.y(1), 3) == Fraction(11, 6)
    assert hsum(Word.y(2, 1), 4) == Fraction(17, 32)
    for w in y_words_up_to(3)[1:]:
        assert hsum(w, 0) == 0
    assert hsum(Word.y(), 5) == 1


def test_hsum_oracle_examples():
    assert hsum_oracle(Word.y(1), 3) == Fraction(11, 6)
    assert hsum_oracle(Word.y(1, 1), 3) == 1


def test_hsum_matches_oracle_exhaustively():
    for w in y_words_up_to(5):
        if len(w) > 4:
            continue
        for N in (0, 1, 2, 7, 23, 40):
            assert hsum(w, N) == hsum_oracle(w, N), (w, N)


def test_oracle_guard():
    with pytest.raises(ValueError):
        hsum_oracle(Word.y(1, 1, 1, 1, 1), 5)


def test_hsum_rejects_x_words():
    with pytest.raises(AlphabetError):
        hsum(Word.x(1), 3)


def test_harmonic_table_csv():
    csv = HarmonicTable.build(Word.y(1), 3).to_csv()
    assert csv == "N,value\n0,0\n1,1\n2,3/2\n3,11/6\n"


def test_li_coeffs_examples():
    assert li_coeffs(P("x0 x1"), 4) == TaylorSeries.from_list([0, 1, Fraction(1, 4), Fraction(1, 9), Fraction(1, 16)])
    assert li_coeffs(P("x1"), 3) == TaylorSeries.from_list([0, 1, Fraction(1, 2), Fraction(1, 3)])
    assert li_coeffs(P("1", X), 2) == TaylorSeries.from_list([1, 0, 0])


def test_li_over_1mz_examples():
    assert li_over_1mz_coeffs(P("x0 x1"), 3) == TaylorSeries.from_list([0, 1, Fraction(5, 4), Fraction(49, 36)])
    assert li_over_1mz_coeffs(P("1", X), 2) == TaylorSeries.from_list([1, 1, 1])


def test_li_over_1mz_of_shuffle_and_stuffle_square():
    # x1 shuffle x1 = 2 x1 x1 gives 2 H_{1,1}(N); the square H_1(N)^2 belongs to
    # pi_X(y1 stuffle y1) = 2 x1 x1 + x0 x1
    sh = shuffle(P("x1"), P("x1"))
    assert li_over_1mz_coeffs(sh, 3) == TaylorSeries.from_list([0, 0, 1, 2])
    st = stuffle(P("y1"), P("y1")).map_words(pi_x, X)
    assert li_over_1mz_coeffs(st, 3) == TaylorSeries.from_list([0, 1, Fraction(9, 4), Fraction(121, 36)])


def test_li_outside_image_of_pi_x():
    with pytest.raises(DomainError):
        li_coeffs(P("x1 x0"), 3)


def test_theorem_one_consistency():
    S = P("x0 x1 - 3*x1 x1 + 1/2*x0 x0 x1 + 2*1")
    a = li_over_1mz_coeffs(S, 15)
    Y = S.map_words(pi_y, "Y")
    for N in range(16):
        assert a[N] == hsum(Y, N)


def test_li_shuffle_morphism_order_25():
    words = [Word(X, tuple(int(b) for b in format(i, f"0{n - 1}b")) + (1,)) if n > 1 else Word(X, (1,)) for n in range(1, 4) for i in range(2 ** (n - 1))]
    for u in words:
        for v in words:
            pu, pv = NCPolynomial.from_word(u), NCPolynomial.from_word(v)
            assert li_coeffs(shuffle(pu, pv), 25) == li_coeffs(pu, 25) * li_coeffs(pv, 25)


def test_hadamard_examples():
    g = TaylorSeries.from_list([3, Fraction(1, 2), -1, 7])
    assert TaylorSeries.geometric(3).hadamard(g) == g
    assert TaylorSeries.from_list([0, 1, 1, 0]).hadamard(TaylorSeries.from_list([0, 2, 0, 3])) == TaylorSeries.from_list([0, 2, 0, 0])


def test_preimage_examples():
    S = preimage_from_taylor(TaylorSeries.from_list([0, 1]), 4)
    assert S.polynomial() == P("x1 - x1 x1 + x1 x1 x1 - x1 x1 x1 x1")
    assert li_coeffs(S, 4) == TaylorSeries.from_list([0, 1, 0, 0, 0])
    one = preimage_from_taylor(TaylorSeries.from_list([1]), 5)
    assert one.polynomial() == P("1", X)
    geo = preimage_from_taylor(TaylorSeries.from_list([0, 1, 1, 1, 1, 1]), 5)
    assert geo.polynomial() == P("x1 + x1 x1 + x1 x1 x1 + x1 x1 x1 x1 + x1 x1 x1 x1 x1")
    assert li_coeffs(geo, 5) == TaylorSeries.from_list([0, 1, 1, 1, 1, 1])


def test_preimage_two_routes_agree():
    T = TaylorSeries.from_list([2, -1, Fraction(1, 3), 0, 5])
    assert preimage_from_taylor(T, 8) == preimage_by_shuffle_powers(T, 8)


def test_summability_examples():
    zero = summability_diagnostic([[0] * 5] * 5, 0.5)
    assert zero.partial_sum == 0 and not zero.growth_flag
    geo = summability_diagnostic([[2.0**-N for N in range(60)]], 1.0)
    assert abs(geo.partial_sum - 2) < 1e-12 and not geo.growth_flag
    assert geo.heuristic


def test_summability_flags_alternating_log_series():
    # T = sum (-1)^(n-1) y_n / n: the rows decay only like 1/n
    T = NCPolynomial({Word.y(n): Fraction((-1) ** (n - 1), n) for n in range(1, 41)})
    rep = summability_diagnostic(harmonic_matrix(T, 40, 30), 0.5)
    assert rep.growth_flag
    assert rep.row_tail_ratio > 0.05


def test_dom_witness_examples():
    w0 = dom_witness(0, 6, 6)
    assert w0.series.polynomial() == P("1", X)
    assert w0.closed_form_coeffs == TaylorSeries.from_list([1, 0, 0, 0, 0, 0, 0])
    w1 = dom_witness(1, 3, 3)
    assert w1.closed_form_coeffs == TaylorSeries.from_list([1, 1, 2, 4])


@pytest.mark.parametrize("t", [Fraction(1, 2), Fraction(1), Fraction(3)])
def test_dom_witness_coefficients_are_stirling_sums(t):
    S = dom_witness_series(t, 8)
    for n in range(9):
        expected = sum(t**m * factorial(m) * stirling2(n, m) for m in range(n + 1))
        assert S.coefficient(Word(X, (1,) * n)) == expected
