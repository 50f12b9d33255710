"""Named identity-verification suites.

Each suite returns a :class:`SuiteResult` whose ``lines`` are a per-item
report; ``passed`` is the conjunction of the items.  Suites are
deterministic (fixed seeds) so their output can be compared across runs.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian

import numpy as np

from . import comb, harmonic, ncalg, zeta
from .ncalg import GradedSeries, NCPolynomial, PlaneSeries
from .rings import PolynomialRing, PrecisionContext, QQ
from .taylor import TaylorSeries
from .words import X, Y, Word, is_convergent, pi_x, pi_y, y_words_up_to


@dataclass
class Options:
    prec: int = 50
    kmax: int = 6
    tol: float | None = None
    seed: int = 0
    trunc: int | None = None

    @property
    def ctx(self) -> PrecisionContext:
        return PrecisionContext(self.prec)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    lines: list[str] = field(default_factory=list)
    seconds: float = 0.0
    data: dict = field(default_factory=dict)

    def to_record(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "seconds": round(self.seconds, 3), "report": self.lines, **self.data}


class _Report:
    def __init__(self):
        self.lines: list[str] = []
        self.ok = True
        self.data: dict = {}

    def check(self, cond: bool, text: str) -> bool:
        self.lines.append(("ok    " if cond else "FAIL  ") + text)
        self.ok = self.ok and bool(cond)
        return cond

    def note(self, text: str):
        self.lines.append("info  " + text)


def _fmt(x) -> str:
    return f"{float(x):.3e}"


# --------------------------------------------------------------------------
# random fixtures


def _random_x_poly(rng: random.Random, max_len: int = 3, terms: int = 3) -> NCPolynomial:
    """Random rational combination of X-words ending in ``x1`` (or empty)."""
    out = {}
    for _ in range(terms):
        n = rng.randint(0, max_len)
        letters = tuple(rng.randint(0, 1) for _ in range(n - 1)) + ((1,) if n else ())
        out[Word(X, letters)] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    return NCPolynomial(out, X, QQ)


def _random_y_word(rng: random.Random, wt: int) -> Word:
    letters = []
    while wt:
        s = rng.randint(1, wt)
        letters.append(s)
        wt -= s
    return Word(Y, tuple(letters))


def _pi_x_poly(P: NCPolynomial) -> NCPolynomial:
    return P.map_words(pi_x, X)


def _pi_y_poly(P: NCPolynomial) -> NCPolynomial:
    return P.map_words(pi_y, Y)


# --------------------------------------------------------------------------
# suites


def surjection_lemma(opts: Options) -> _Report:
    rep = _Report()
    bad = [(m, n) for m in range(9) for n in range(9) if comb.shuffle_power_coeff(m, n) != comb.surjections(n, m)]
    rep.check(not bad, f"<(x1^+)^(shuffle m) | x1^n> = m! S2(n,m) for 0 <= n,m <= 8 ({81 - len(bad)}/81)")
    egf = [m for m in range(9) if not comb.egf_check(m, 20)]
    rep.check(not egf, f"EGF (e^x - 1)^m to order 20 for m <= 8 (failures: {egf or 'none'})")
    return rep


def quasi_shuffle(opts: Options) -> _Report:
    rep = _Report()
    N = 40
    words = y_words_up_to(6)
    count = bad = 0
    for u in words:
        for v in words:
            if u.weight + v.weight > 6:
                continue
            count += 1
            lhs = harmonic.hsum_values(ncalg.stuffle(NCPolynomial.from_word(u), NCPolynomial.from_word(v)), N)
            hu, hv = harmonic.hsum_values(u, N), harmonic.hsum_values(v, N)
            if any(lhs[n] != hu[n] * hv[n] for n in range(N + 1)):
                bad += 1
    rep.check(bad == 0, f"H_(u stuffle v)(N) = H_u(N) H_v(N), all pairs with weight <= 6, N <= {N} ({count - bad}/{count} pairs)")
    rng = random.Random(opts.seed)
    bad = 0
    for _ in range(200):
        u = _random_y_word(rng, rng.randint(3, 6))
        v = _random_y_word(rng, rng.randint(3, 6))
        lhs = harmonic.hsum(ncalg.stuffle(NCPolynomial.from_word(u), NCPolynomial.from_word(v)), N)
        if lhs != harmonic.hsum(u, N) * harmonic.hsum(v, N):
            bad += 1
    rep.check(bad == 0, f"200 random heavier pairs (weights 6..12) at N = {N} ({200 - bad}/200)")
    return rep


def shuffle_li(opts: Options) -> _Report:
    rep = _Report()
    rng = random.Random(opts.seed + 1)
    D = 20
    bad = 0
    for _ in range(10):
        P, Q = _random_x_poly(rng), _random_x_poly(rng)
        lhs = harmonic.li_coeffs(ncalg.shuffle(P, Q), D)
        rhs = harmonic.li_coeffs(P, D) * harmonic.li_coeffs(Q, D)
        bad += lhs != rhs
    rep.check(bad == 0, f"Li_(P shuffle Q) = Li_P Li_Q to order {D}, 10 random pairs ({10 - bad}/10)")
    return rep


def hadamard_eq3(opts: Options) -> _Report:
    rep = _Report()
    rng = random.Random(opts.seed + 2)
    D = 20
    bad = 0
    for _ in range(10):
        S, T = _random_x_poly(rng), _random_x_poly(rng)
        lhs = harmonic.li_over_1mz_coeffs(S, D).hadamard(harmonic.li_over_1mz_coeffs(T, D))
        st = _pi_x_poly(ncalg.stuffle(_pi_y_poly(S), _pi_y_poly(T)))
        bad += lhs != harmonic.li_over_1mz_coeffs(st, D)
    rep.check(bad == 0, f"Li_S/(1-z) (.) Li_T/(1-z) = Li_(pi_X(pi_Y S stuffle pi_Y T))/(1-z) to order {D} ({10 - bad}/10)")
    return rep


def _random_plane(rng: random.Random, W: int, ring: PolynomialRing) -> PlaneSeries:
    z = ring.gen()
    return PlaneSeries([ring(Fraction(rng.randint(-3, 3), rng.randint(1, 3))) * z ** rng.randint(0, 2) for _ in range(W)], ring)


def wi_star(opts: Options) -> _Report:
    rep = _Report()
    W = 8
    R = PolynomialRing("z")
    rng = random.Random(opts.seed + 3)
    for i in range(3):
        A, B = _random_plane(rng, W, R), _random_plane(rng, W, R)
        lhs = ncalg.stuffle(A.star(W), B.star(W))
        rhs = ncalg.char_stuffle_product(A, B).star(W)
        rep.check(lhs == rhs, f"A* stuffle B* = (A + B + A.B umbral)* at weight {W}, pair {i + 1}, coefficients in Q[z]")
    A = _random_plane(rng, W, R)
    inv = ncalg.char_stuffle_inverse(A)
    one = GradedSeries({Word.empty(Y): 1}, Y, R, W)
    rep.check(ncalg.stuffle(A.star(W), inv.star(W)) == one, f"A* stuffle (A^-1)* = 1 at weight {W}")
    return rep


def wik_series(k: int, W: int, R: PolynomialRing):
    """``((z y_k)^*, exp_stuffle(-sum y_nk (-z)^n / n))`` at weight ``W``."""
    z = R.gen()
    star = ncalg.conc_star(NCPolynomial({Word(Y, (k,)): z}, Y, R), W)
    expo = NCPolynomial({Word(Y, (n * k,)): -((-z) ** n) * Fraction(1, n) for n in range(1, W // k + 1)}, Y, R)
    return star, ncalg.stuffle_exp(expo, W)


def wik_exp(opts: Options) -> _Report:
    rep = _Report()
    W = 8
    R = PolynomialRing("z")
    z = R.gen()
    for k in (1, 2, 3):
        # the z^k y_k form: substitute z -> z^k in (z y_k)^* = exp(-sum y_nk (-z)^n / n)
        star = ncalg.conc_star(NCPolynomial({Word(Y, (k,)): z**k}, Y, R), W)
        expo = NCPolynomial({Word(Y, (n * k,)): -((-(z**k)) ** n) * Fraction(1, n) for n in range(1, W // k + 1)}, Y, R)
        rep.check(star == ncalg.stuffle_exp(expo, W), f"k={k}: (z^k y_k)* = exp_stuffle(-sum_n y_nk (-z^k)^n / n) at weight {W}")
        literal = NCPolynomial({Word(Y, (n * k,)): -((-z) ** (n * k)) * Fraction(1, n) for n in range(1, W // k + 1)}, Y, R)
        same = star == ncalg.stuffle_exp(literal, W)
        rep.check(same, f"k={k}: (z^k y_k)* = exp_stuffle(-sum_n y_nk (-z)^(nk) / n) at weight {W}")
        if not same:
            rep.note(f"k={k}: the (-z)^(nk) exponent differs from (-z^k)^n by the sign (-1)^(n(k-1)); it cannot hold for even k")
    return rep


def group_law(opts: Options) -> _Report:
    rep = _Report()
    W = 6
    z1, z2 = Fraction(1, 3), Fraction(1, 5)
    rng = random.Random(opts.seed + 4)
    gens = {
        "log(1+q)": TaylorSeries.from_list([0] + [Fraction((-1) ** (n - 1), n) for n in range(1, W + 1)]),
        "random": TaylorSeries.from_list([0] + [Fraction(rng.randint(-4, 4), rng.randint(1, 5)) for _ in range(W)]),
    }
    for name, T in gens.items():
        lhs = ncalg.stuffle(ncalg.one_param_group(T, z1, W), ncalg.one_param_group(T, z2, W))
        rhs = ncalg.one_param_group(T, z1 + z2, W)
        rep.check(lhs == rhs, f"G(1/3) stuffle G(1/5) = G(8/15) at weight {W}, generator {name}")
    return rep


def preimage(opts: Options) -> _Report:
    rep = _Report()
    rng = random.Random(opts.seed + 5)
    bad = 0
    for i in range(10):
        deg = rng.randint(0, 10)
        T = TaylorSeries.from_list([Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(deg + 1)], 10)
        S = harmonic.preimage_from_taylor(T, 12)
        bad += harmonic.li_coeffs(S, 10) != T
        if i < 3:
            rep.check(S == harmonic.preimage_by_shuffle_powers(T, 12), f"Stirling formula agrees with shuffle powers, polynomial {i + 1}")
    rep.check(bad == 0, f"Li(preimage(T)) = T to order 10 for 10 random T of degree <= 10 ({10 - bad}/10)")
    return rep


def zeta_2k(opts: Options) -> _Report:
    rep = _Report()
    ctx = opts.ctx
    mp = ctx.mp
    tol = opts.tol or 1e-30
    K = opts.kmax
    W = 2 * K
    R = PolynomialRing("z")
    z = R.gen()
    star = ncalg.conc_star(NCPolynomial({Word(Y, (2,)): -(z**2)}, Y, R), W)
    expo = NCPolynomial({Word(Y, (2 * n,)): -(z ** (2 * n)) * Fraction(1, n) for n in range(1, K + 1)}, Y, R)
    rep.check(star == ncalg.stuffle_exp(expo, W), f"(-z^2 y2)* = exp_stuffle(-sum z^2n y_2n / n) exactly at weight {W}")
    # the character sends the exponent to -sum zeta(2n) z^2n / n, a scalar series
    c = [mp.mpf(0)] * (W + 1)
    for n in range(1, K + 1):
        c[2 * n] = -zeta.zeta_int(2 * n, ctx).value.real / n
    field_ = zeta.ComplexField(ctx)
    E = TaylorSeries(tuple(c), field_, "z").exp()
    worst = 0.0
    for k in range(1, K + 1):
        z2k = (-1) ** k * E[2 * k].real  # zeta({2}^k)
        ratio = z2k / mp.pi ** (2 * k)
        diff = abs(ratio - mp.mpf(1) / mp.factorial(2 * k + 1))
        worst = max(worst, float(diff))
        rep.check(diff < tol, f"k={k}: zeta({{2}}^{k})/pi^{2 * k} = 1/{2 * k + 1}!  |diff| = {_fmt(diff)}")
        if k <= 3:
            direct = zeta.mzv(Word(Y, (2,) * k), ctx, 1e-9)
            rep.check(abs(direct.value - z2k) < max(10 * direct.error, 1e-8), f"k={k}: nested-sum value agrees within {_fmt(max(10 * direct.error, 1e-8))}")
    rep.data["max_abs_diff"] = worst
    return rep


def zeta_31(opts: Options) -> _Report:
    rep = _Report()
    ctx = opts.ctx
    mp = ctx.mp
    z31 = zeta.mzv(Word(Y, (3, 1)), ctx, 1e-9)
    target = mp.pi**4 / 360
    rep.check(abs(z31.value - target) < 1e-6, f"zeta(3,1) = pi^4/360 = 2/6! pi^4  |diff| = {_fmt(abs(z31.value - target))}")
    z4 = zeta.zeta_int(4, ctx).value
    minus = abs(z31.value - z4 / 4)
    plus = abs(z31.value - 4 * z4)
    rep.check(minus < 1e-6 and plus > 1e-3, f"exponent sign: |zeta(3,1) - 4^-1 zeta(4)| = {_fmt(minus)}, |zeta(3,1) - 4^+1 zeta(4)| = {_fmt(plus)}")
    # k = 2: zeta(3,1,3,1) against 2 pi^8 / 10! and 4^-2 zeta(4,4)
    z3131 = zeta.mzv(Word(Y, (3, 1, 3, 1)), ctx, 1e-9)
    z8 = zeta.zeta_int(8, ctx).value
    z44 = (z4**2 - z8) / 2  # stuffle: y4 * y4 = 2 y4 y4 + y8
    t2 = 2 * mp.pi**8 / mp.factorial(10)
    rep.check(abs(z3131.value - t2) < 1e-6, f"zeta(3,1,3,1) = 2 pi^8/10!  |diff| = {_fmt(abs(z3131.value - t2))}")
    m2, p2 = abs(z3131.value - z44 / 16), abs(z3131.value - 16 * z44)
    rep.check(m2 < 1e-6 and p2 > 1e-3, f"k=2: |zeta(3,1,3,1) - 4^-2 zeta(4,4)| = {_fmt(m2)}, with 4^+2: {_fmt(p2)}")
    rep.note("consistent form: zeta({3,1}^k) = 4^(-k) zeta({4}^k) = 2 pi^(4k)/(4k+2)!")
    rep.data["resolution"] = "4^-k"
    rep.data["zeta31_diff"] = float(abs(z31.value - target))
    rep.data["sign_gaps"] = {"4^-1": float(minus), "4^+1": float(plus), "4^-2": float(m2), "4^+2": float(p2)}
    return rep


def sin_formula(opts: Options) -> _Report:
    rep = _Report()
    ctx = PrecisionContext(max(opts.prec, 50))
    mp = ctx.mp
    tol = opts.tol or 1e-20
    worst = mp.mpf(0)
    for i in range(50):
        x = mp.mpf(-9) / 10 + mp.mpf(18) * i / (10 * 49)
        v = mp.exp(zeta.ell(2, mp.mpc(0, x), ctx).value)
        worst = max(worst, abs(v - mp.sin(mp.pi * x) / (mp.pi * x)))
    rep.check(worst < tol, f"sup over 50 points |x| <= 0.9 of |exp(ell_2(ix)) - sin(pi x)/(pi x)| = {_fmt(worst)}")
    rep.data["sup_error"] = float(worst)
    return rep


def _random_disc_points(rng: random.Random, n: int, radius: float) -> list[complex]:
    out = []
    while len(out) < n:
        z = complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))
        if abs(z) < radius:
            out.append(z)
    return out


def reflection(opts: Options) -> _Report:
    rep = _Report()
    ctx = opts.ctx
    mp = ctx.mp
    tol = opts.tol or 1e-15
    pts = _random_disc_points(random.Random(opts.seed + 6), 20, 0.8)
    rep.data["max_diff"] = {}
    for r in (1, 2, 3):
        worst = max(zeta.reflection_check(r, z, ctx).difference for z in pts)
        rep.data["max_diff"][r] = float(worst)
        rep.check(worst < tol, f"r={r}: max |LHS - RHS| over 20 points |z| < 0.8 = {_fmt(worst)}")
    worst = 0.0
    for z in pts:
        res = zeta.reflection_check(1, z, ctx)
        x = mp.mpc(0, 1) * mp.mpc(z)
        classical = mp.pi * x / mp.sin(mp.pi * x)  # Gamma(1+x) Gamma(1-x)
        worst = max(worst, float(abs(res.lhs - classical)), float(abs(res.rhs - classical)))
    rep.data["classical_diff"] = worst
    rep.check(worst < tol, f"r=1 against pi x / sin(pi x), x = iz: max diff = {_fmt(worst)}")
    for r in (1, 2):
        worst = 0.0
        rhos = [mp.expjpi(mp.mpf(2 * j + 1) / (2 * r)) for j in range(2 * r)]
        xis = [mp.expjpi(mp.mpf(j) / r) for j in range(1, 2 * r) if math.gcd(j, 2 * r) == 1]
        for rho, xi in cartesian(rhos, xis):
            for z in pts[:5]:
                worst = max(worst, zeta.reflection_check(r, z, ctx, rho, xi).difference)
        rep.check(worst < tol, f"r={r}: all {len(rhos) * len(xis)} (rho, xi) choices, max diff = {_fmt(worst)}")
    return rep


def zeros(opts: Options) -> _Report:
    rep = _Report()
    ctx = opts.ctx
    tol = opts.tol or 1e-20
    for r in (1, 2, 3):
        pts = zeta.predicted_zeros(r, 3.2, ctx)
        at = max(float(abs(zeta.inv_gamma_yk(r, p, ctx).value)) for p in pts)
        off = min(float(abs(zeta.inv_gamma_yk(r, p + 0.3, ctx).value)) for p in pts)
        rep.data[r] = {"zeros": len(pts), "max_at_zero": at, "min_at_control": off}
        rep.check(at < tol, f"r={r}: {len(pts)} predicted zeros, max |1/Gamma_y{r}(1+p)| = {_fmt(at)}")
        rep.check(off >= 0.01, f"r={r}: controls p + 0.3, min |1/Gamma_y{r}| = {off:.4f}")
    return rep


def h11_asymptotic_constant(n_max: int = 10**5) -> float:
    """Constant term of the expansion of ``H_{1,1}(N)`` in powers of ``log N``.

    Fits ``H_{1,1}(N) - log(N)^2 / 2 - gamma log N`` by least squares.

    Independent of the regularization code: direct nested sums in floating
    point, ``gamma`` from mpmath, and a fit in ``1, log N / N, 1/N,
    log N / N^2, 1/N^2`` over ``N`` in ``[n_max/10, n_max]``.
    """
    import mpmath

    n = np.arange(1, n_max + 1, dtype=np.float64)
    h1 = np.cumsum(1.0 / n)
    h11 = np.concatenate(([0.0], np.cumsum(h1[:-1] / n[1:])))  # sum_{n1 > n2} 1/(n1 n2)
    Ns = np.unique(np.geomspace(n_max // 10, n_max, 40).astype(int))
    g = float(mpmath.euler)
    L = np.log(Ns)
    y = h11[Ns - 1] - L**2 / 2 - g * L
    A = np.stack([np.ones_like(L), L / Ns, 1 / Ns, L / Ns**2, 1 / Ns**2], axis=1)
    coef, *_ = np.linalg.lstsq(A, y, rcond=None)
    return float(coef[0])


def regularization(opts: Options) -> _Report:
    rep = _Report()
    ctx = opts.ctx
    words = y_words_up_to(5)
    count = bad = 0
    for u in words:
        for v in words:
            if u.weight + v.weight > 5:
                continue
            count += 1
            lhs = zeta.stuffle_regularize(ncalg.stuffle(NCPolynomial.from_word(u), NCPolynomial.from_word(v)))
            bad += lhs != zeta.stuffle_regularize(u) * zeta.stuffle_regularize(v)
    rep.check(bad == 0, f"reg(u stuffle v) = reg(u) reg(v) for weight <= 5 ({count - bad}/{count} pairs)")
    fixed = all(zeta.stuffle_regularize(w) == zeta.RegularizedValue.from_polynomial(NCPolynomial.from_word(w)) for w in words if is_convergent(w))
    rep.check(fixed, "convergent words are fixed")
    powers = all(zeta.stuffle_regularize(zeta._y1_stuffle_power(k)) == zeta.RegularizedValue.g(k) for k in range(6))
    rep.check(powers, "y1^(stuffle k) -> g^k for k <= 5")
    g = zeta.gamma_char(Word(Y, (1, 1)), ctx)
    mp = ctx.mp
    closed = (zeta.euler_gamma(ctx) ** 2 - zeta.zeta_int(2, ctx).value) / 2
    rep.check(abs(g.value - closed) < 1e-30, f"gamma_(y1 y1) = (gamma^2 - zeta(2))/2  |diff| = {_fmt(abs(g.value - closed))}")
    fit = h11_asymptotic_constant(10**5)
    diff = abs(g.value.real - fit)
    rep.data["fit_diff"] = float(diff)
    rep.data["morphism_pairs"] = (count, bad)
    rep.check(diff < 1e-8, f"asymptotic fit of H_(1,1)(N), N <= 10^5: {fit:.12f}, |diff| = {_fmt(diff)}")
    return rep


def dom_witness(opts: Options) -> _Report:
    rep = _Report()
    for t in (Fraction(1, 2), Fraction(1), Fraction(2)):
        w = harmonic.dom_witness(t, 12, 12)
        ok = harmonic.li_coeffs(w.series, 12) == w.closed_form_coeffs
        rep.check(ok, f"t={t}: Li_S(t) = (1-z)/(1-(t+1)z) to order 12")
    return rep


SUITES = {
    "surjection-lemma": surjection_lemma,
    "quasi-shuffle": quasi_shuffle,
    "shuffle-li": shuffle_li,
    "hadamard-eq3": hadamard_eq3,
    "wi-star": wi_star,
    "wik-exp": wik_exp,
    "group-law": group_law,
    "preimage": preimage,
    "zeta-2k": zeta_2k,
    "zeta-31": zeta_31,
    "sin-formula": sin_formula,
    "reflection": reflection,
    "zeros": zeros,
    "regularization": regularization,
    "dom-witness": dom_witness,
}


def run_suite(name: str, opts: Options | None = None) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    opts = opts or Options()
    t0 = time.perf_counter()
    rep = SUITES[name](opts)
    return SuiteResult(name, rep.ok, rep.lines, time.perf_counter() - t0, rep.data)
