import json
from fractions import Fraction
from math import comb

import mpmath
import pytest
import sympy

from polydomain.ncalg import NCPolynomial, conc_star, stuffle
from polydomain.parsing import parse_expression as P
from polydomain.rings import PolynomialRing, PrecisionContext, PrecisionError
from polydomain.taylor import TaylorSeries
from polydomain.words import Y, DomainError, Word, is_convergent, y_words_up_to
from polydomain.zeta import (
    RegularizedValue,
    bernoulli,
    ell,
    ell_coefficients,
    euler_gamma,
    gamma_char,
    gamma_char_hat,
    inv_gamma_yk,
    mzv,
    predicted_zeros,
    reflection_check,
    stuffle_regularize,
    symmetrize,
    symmetrize_numeric,
    zeta_int,
)

CTX = PrecisionContext(50)
ORACLE = mpmath.MPContext()
ORACLE.dps = 70


def bernoulli_recurrence(n):
    """sum_{k<=m} C(m+1, k) B_k = 0 for m >= 1."""
    B = [Fraction(1)]
    for m in range(1, n + 1):
        B.append(-sum(comb(m + 1, k) * B[k] for k in range(m)) / Fraction(m + 1))
    return B


def test_bernoulli_examples():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_bernoulli_against_recurrence_and_sympy():
    B = bernoulli_recurrence(60)
    for n in range(61):
        assert bernoulli(n) == B[n]
    for n in (2, 30, 100, 250):
        assert bernoulli(n) == Fraction(str(sympy.bernoulli(n)))


def test_precision_context_guards():
    with pytest.raises(PrecisionError):
        PrecisionContext(10)
    with pytest.raises(PrecisionError):
        PrecisionContext(30, 1e-25)
    assert PrecisionContext(30).tolerance == pytest.approx(1e-20)


def test_contexts_are_isolated():
    before = mpmath.mp.dps
    zeta_int(7, PrecisionContext(80))
    assert mpmath.mp.dps == before


@pytest.mark.parametrize("n", [2, 3, 4, 5, 7, 8, 11, 20, 31, 64])
def test_zeta_int_against_oracle(n):
    v = zeta_int(n, CTX)
    assert abs(v.value - ORACLE.zeta(n)) < 1e-45
    assert v.error <= 1e-45


def test_zeta_examples():
    mp = CTX.mp
    assert abs(zeta_int(2, CTX).value - mp.pi**2 / 6) < 1e-45
    assert abs(zeta_int(4, CTX).value - mp.pi**4 / 90) < 1e-45
    # odd value by direct summation plus Euler-Maclaurin tail
    M = 2000
    direct = mp.fsum(mp.mpf(k) ** -3 for k in range(1, M)) + mp.mpf(M) ** -2 / 2 + mp.mpf(M) ** -3 / 2 + mp.mpf(M) ** -4 / 4
    assert abs(zeta_int(3, CTX).value - direct) < 1e-18
    with pytest.raises(DomainError):
        zeta_int(1, CTX)


def test_euler_gamma():
    for digits in (20, 50, 120):
        ctx = PrecisionContext(digits)
        ORACLE.dps = digits + 20
        assert abs(euler_gamma(ctx) - ORACLE.euler) < 10 ** (-digits + 2)
    ORACLE.dps = 70
    # the defining limit, corrected to O(N^-4)
    N = 10**4
    h = sum(Fraction(1, k) for k in range(1, N + 1))
    mp = CTX.mp
    approx = mp.mpf(h.numerator) / h.denominator - mp.log(N) - mp.mpf(1) / (2 * N) + mp.mpf(1) / (12 * N**2)
    assert abs(euler_gamma(CTX) - approx) < 1e-15


@pytest.mark.parametrize(
    "letters, exact",
    [
        ((2,), lambda m: m.pi**2 / 6),
        ((2, 1), lambda m: m.zeta(3)),
        ((3, 1), lambda m: m.pi**4 / 360),
        ((2, 2), lambda m: m.pi**4 / 120),
        ((2, 1, 1), lambda m: m.zeta(4)),
        ((4, 2), lambda m: m.zeta(3) ** 2 - m.pi**6 * 4 / 2835),
        ((2, 2, 2), lambda m: m.pi**6 / 5040),
    ],
)
def test_mzv_against_closed_forms(letters, exact):
    v = mzv(Word(Y, letters), CTX, 1e-9)
    diff = abs(v.value - exact(ORACLE))
    assert diff < 1e-8
    assert diff <= max(v.error, 1e-40) * 10


def test_mzv_rejects_divergent():
    with pytest.raises(DomainError):
        mzv(Word.y(1, 2), CTX)


def test_regularization_examples():
    assert stuffle_regularize(Word.y(2)) == RegularizedValue.from_polynomial(P("y2"))
    assert stuffle_regularize(Word.y(1)) == RegularizedValue.g()
    reg = stuffle_regularize(Word.y(1, 1))
    assert reg == RegularizedValue.g(2).scale(Fraction(1, 2)) - RegularizedValue.from_polynomial(P("1/2*y2"))
    assert str(reg) == "1/2*g^2 - 1/2*y2"


def test_regularization_degree_bound():
    for w in y_words_up_to(6):
        k = 0
        while k < len(w) and w.letters[k] == 1:
            k += 1
        reg = stuffle_regularize(w)
        assert reg.degree() <= k
        for Q in reg.parts.values():
            assert all(is_convergent(u) for u in Q.words())


def test_regularization_is_a_morphism():
    words = y_words_up_to(5)
    for u in words:
        for v in words:
            if u.weight + v.weight <= 5:
                prod = stuffle(NCPolynomial.from_word(u), NCPolynomial.from_word(v))
                assert stuffle_regularize(prod) == stuffle_regularize(u) * stuffle_regularize(v)


def test_gamma_char_examples():
    assert abs(gamma_char(Word.y(1), CTX).value - ORACLE.euler) < 1e-45
    assert abs(gamma_char(Word.y(2), CTX).value - ORACLE.zeta(2)) < 1e-45
    g = gamma_char(Word.y(1, 1), CTX)
    assert abs(g.value - (ORACLE.euler**2 - ORACLE.zeta(2)) / 2) < 1e-45


def test_gamma_char_multiplicative():
    words = [w for w in y_words_up_to(3) if w.letters]
    for u in words:
        for v in words:
            if u.weight + v.weight > 5:
                continue
            a, b = gamma_char(u, CTX), gamma_char(v, CTX)
            c = gamma_char(stuffle(NCPolynomial.from_word(u), NCPolynomial.from_word(v)), CTX)
            bound = c.error + abs(a.value) * b.error + abs(b.value) * a.error + 1e-40
            assert abs(c.value - a.value * b.value) <= bound


def test_gamma_char_hat_examples():
    R = PolynomialRing("z")
    z = R.gen()
    S = conc_star(NCPolynomial({Word.y(2): z}, Y, R), 8)
    assert abs(gamma_char_hat(S, 0, CTX).value - 1) < 1e-45
    S = conc_star(NCPolynomial({Word.y(2): -(z**2)}, Y, R), 16)
    v = gamma_char_hat(S, 0.5, CTX)
    assert abs(v.value - 2 / ORACLE.pi) < 1e-10
    assert abs(v.value - 2 / ORACLE.pi) <= v.error
    with pytest.raises(DomainError):
        gamma_char_hat(S, 1, CTX)


def test_gamma_char_hat_multiplicative():
    R = PolynomialRing("z")
    z = R.gen()
    S = NCPolynomial({Word.y(): 1, Word.y(2): z, Word.y(1): -z * Fraction(1, 2), Word.y(3, 1): z**2}, Y, R)
    T = NCPolynomial({Word.y(): 1, Word.y(1): z * 3, Word.y(2, 1): -(z**2)}, Y, R)
    x = Fraction(1, 3)
    a, b = gamma_char_hat(S, x, CTX), gamma_char_hat(T, x, CTX)
    c = gamma_char_hat(stuffle(S, T), x, CTX)
    assert abs(c.value - a.value * b.value) < 1e-8


@pytest.mark.parametrize("k, z", [(1, 0.3), (1, -0.4 + 0.2j), (2, 0.5j), (2, 0.45)])
def test_wik_through_the_character(k, z):
    # gamma_hat((z y_k)^*) = exp(ell_k(z)) up to the truncation tail
    R = PolynomialRing("z")
    zz = R.gen()
    W = 12 if k == 1 else 24
    S = conc_star(NCPolynomial({Word.y(k): zz}, Y, R), W)
    lhs = gamma_char_hat(S, z**k, CTX)
    rhs = CTX.mp.exp(ell(k, z, CTX).value)
    assert abs(lhs.value - rhs) <= lhs.error + 1e-30
    assert abs(lhs.value - rhs) < 1e-4


def test_ell_examples():
    for k in (1, 2, 3):
        assert ell(k, 0, CTX).value == 0
    c = ell_coefficients(1, 4, CTX)
    mp = CTX.mp
    assert abs(c[1] - ORACLE.euler) < 1e-45
    assert abs(c[2] + ORACLE.zeta(2) / 2) < 1e-45
    assert abs(c[3] - ORACLE.zeta(3) / 3) < 1e-45
    c2 = ell_coefficients(2, 12, CTX)
    assert all(c2[n] == 0 for n in range(1, 13, 2))
    assert all(c2[n] != 0 for n in range(2, 13, 2))
    with pytest.raises(DomainError):
        ell(1, 1.2, CTX)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_ell_symmetry(r):
    c = ell_coefficients(r, 24, CTX)
    assert all(c[n] == 0 for n in range(25) if n % r)
    mp = CTX.mp
    z = mp.mpc(0.31, 0.22)
    for j in range(r):
        chi = mp.expjpi(mp.mpf(2 * j) / r)
        assert abs(ell(r, chi * z, CTX).value - ell(r, z, CTX).value) < 1e-40


def test_ell_matches_log_gamma():
    for z in (0.3, -0.5 + 0.25j, 0.7j):
        assert abs(ell(1, z, CTX).value + ORACLE.loggamma(1 + ORACLE.mpc(z))) < 1e-38


def test_inv_gamma_examples():
    one = inv_gamma_yk(1, 1, CTX)
    assert abs(one.value - 1) <= one.error + CTX.tolerance
    assert abs(inv_gamma_yk(2, 1j, CTX).value) < CTX.tolerance
    a = inv_gamma_yk(2, 0.4 + 0.2j, CTX, "series")
    b = inv_gamma_yk(2, 0.4 + 0.2j, CTX, "product")
    assert abs(a.value - b.value) < 1e-25


@pytest.mark.parametrize("z", [2.5 + 1j, -3.7, 0.1 - 4j, 7.25])
def test_inv_gamma_one_is_reciprocal_gamma(z):
    v = inv_gamma_yk(1, z, CTX)
    diff = abs(v.value - ORACLE.rgamma(1 + ORACLE.mpc(z)))
    assert diff < CTX.tolerance
    assert diff <= v.error


def test_inv_gamma_two_is_sinh_ratio():
    # prod (1 + z^2/n^2) = sinh(pi z) / (pi z)
    for z in (0.5, 1.7 + 0.3j, -2.2j + 0.1):
        zz = ORACLE.mpc(z)
        assert abs(inv_gamma_yk(2, z, CTX).value - ORACLE.sinh(ORACLE.pi * zz) / (ORACLE.pi * zz)) < 1e-40


def test_mode_agreement_grid():
    mp = CTX.mp
    for r in (1, 2, 3):
        for rad in (0.2, 0.5, 0.8):
            for j in range(6):
                z = rad * mp.expjpi(mp.mpf(j) / 3)
                a = inv_gamma_yk(r, z, CTX, "series").value
                b = inv_gamma_yk(r, z, CTX, "product").value
                assert abs(a - b) < 1e-20


def test_predicted_zero_examples():
    z1 = predicted_zeros(1, 3.5, CTX)
    assert [complex(p) for p in z1] == [-1, -2, -3]
    z2 = {complex(p) for p in predicted_zeros(2, 2.5, CTX)}
    assert z2 == {1j, -1j, 2j, -2j}
    z3 = predicted_zeros(3, 1.5, CTX)
    mp = CTX.mp
    expected = [-1, -mp.expjpi(mp.mpf(2) / 3), -mp.expjpi(mp.mpf(4) / 3)]
    assert len(z3) == 3
    for e in expected:
        assert min(abs(p - e) for p in z3) < 1e-40


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_zeros_vanish(r):
    for p in predicted_zeros(r, 3.2, CTX):
        assert abs(inv_gamma_yk(r, p, CTX).value) < CTX.tolerance
        assert abs(inv_gamma_yk(r, p + 0.3, CTX).value) > 0.01


def test_symmetrize_examples():
    e = TaylorSeries.exp_series(8)
    cosh2 = TaylorSeries.from_list([2 * c if n % 2 == 0 else 0 for n, c in enumerate(e.coeffs)])
    assert symmetrize(e, 2) == cosh2
    assert symmetrize(e, 1) == e
    assert symmetrize(TaylorSeries.from_list([0, 1, 0, 1]), 3) == TaylorSeries.from_list([0, 0, 0, 3])


@pytest.mark.parametrize("r", [2, 3, 5])
def test_symmetrize_matches_root_sum(r):
    f = TaylorSeries.from_list([Fraction(k * k - 3, k + 1) for k in range(12)])
    s = symmetrize(f, r)
    z = 0.3 + 0.4j
    direct = symmetrize_numeric(f, r, z, CTX)
    mp = CTX.mp
    via_coeffs = mp.fsum(mp.mpf(c.numerator) / c.denominator * mp.mpc(z) ** n for n, c in enumerate(s.coeffs))
    assert abs(direct - via_coeffs) < 1e-40


def test_reflection_examples():
    res = reflection_check(1, 0, CTX)
    assert abs(res.lhs - 1) < 1e-45 and abs(res.rhs - 1) < 1e-45
    res = reflection_check(1, 0.5, CTX)
    x = ORACLE.mpc(0, 0.5)
    assert res.difference < 1e-20
    assert abs(res.lhs - ORACLE.pi * x / ORACLE.sin(ORACLE.pi * x)) < 1e-20
    assert reflection_check(2, 0.3 + 0.1j, CTX).difference < 1e-15


def test_reflection_reports_poles():
    res = reflection_check(1, 1j, CTX)
    assert res.pole is not None and "pole" in res.pole
    assert res.lhs is None


def test_json_record_schema():
    rec = zeta_int(3, CTX).to_record("zeta", {"n": 3})
    assert set(rec) == {"operation", "inputs", "value", "error_bound", "precision_digits"}
    assert set(rec["value"]) == {"re", "im"}
    json.dumps(rec)
    assert rec["precision_digits"] == 50
