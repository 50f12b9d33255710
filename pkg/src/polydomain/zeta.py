"""Numeric and regularized characters on ``(Q<Y>, stuffle)``.

* exact Bernoulli numbers, ``zeta(n)`` at working precision, Euler's gamma;
* multiple zeta values by truncated nested sums with a tail estimate;
* stuffle regularization: every word is a polynomial in ``y1`` (symbol ``g``)
  over convergent words, which yields the character ``gamma_.`` with
  ``gamma_{y1} = gamma`` and ``gamma_{y_n} = zeta(n)``;
* the exponents ``ell_k``, the entire functions ``1/Gamma_{y_k}(1+z) =
  exp(ell_k(z))``, their zeros and the generalized reflection formula.

All functions take a :class:`~polydomain.rings.PrecisionContext`; nothing
touches global ``mpmath`` state.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import numpy as np

from .ncalg import GradedSeries, NCPolynomial, stuffle, stuffle_words
from .rings import ComplexField, PolynomialRing, PrecisionContext, QQ
from .taylor import TaylorSeries
from .words import Y, DomainError, Word, is_convergent, weight, y_words_of_weight

DEFAULT = PrecisionContext(50)


def _mpc(mp, x):
    if isinstance(x, Fraction):
        return mp.mpc(mp.mpf(x.numerator) / x.denominator)
    return mp.mpc(x)


@dataclass(frozen=True)
class CharacterValue:
    """A complex value together with an estimate of its absolute error."""

    value: object
    error: float = 0.0
    digits: int = 50

    def __abs__(self):
        return abs(self.value)

    def __complex__(self):
        return complex(self.value)

    def to_record(self, operation: str, inputs: dict) -> dict:
        return {
            "operation": operation,
            "inputs": inputs,
            "value": {"re": str(self.value.real), "im": str(self.value.imag)},
            "error_bound": float(self.error),
            "precision_digits": self.digits,
        }


def _eps(ctx: PrecisionContext) -> float:
    return 10.0 ** (-ctx.digits)


# --------------------------------------------------------------------------
# Bernoulli numbers, zeta(n), Euler's constant

_TANGENT: list[int] = [0, 1]
_TANGENT_LOCK = threading.Lock()


def _tangent_numbers(n: int) -> list[int]:
    """Tangent numbers ``T_1..T_n`` (``tan x = sum T_k x^(2k-1)/(2k-1)!``).

    Integer-only in-place recurrence; the table is recomputed (at least
    doubling) when it must grow, which keeps the update formula simple.
    """
    with _TANGENT_LOCK:
        if len(_TANGENT) > n:
            return _TANGENT
        n = max(n, 2 * len(_TANGENT))  # grow geometrically
        T = [0] * (n + 1)
        T[1] = 1
        for k in range(2, n + 1):
            T[k] = (k - 1) * T[k - 1]
        for k in range(2, n + 1):
            for j in range(k, n + 1):
                T[j] = (j - k) * T[j - 1] + (j - k + 2) * T[j]
        _TANGENT[:] = T
        return _TANGENT


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """``B_n`` with the convention ``B_1 = -1/2``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2:
        return Fraction(0)
    k = n // 2
    T = _tangent_numbers(k)[k]
    return Fraction((-1) ** (k - 1) * n * T, 4**k * (4**k - 1))


_ZETA_CACHE: dict[tuple[int, int], object] = {}
_ZETA_LOCK = threading.Lock()


def _borwein_eta(s: int, ctx: PrecisionContext):
    """Alternating zeta ``eta(s)`` by Borwein's acceleration (real ``s``)."""
    mp = ctx.mp
    n = int(math.ceil((ctx.digits + 5) * math.log(10) / math.log(3 + math.sqrt(8)))) + 2
    d = []
    acc = 0
    for i in range(n + 1):
        acc += Fraction(factorial(n + i - 1) * 4**i, factorial(n - i) * factorial(2 * i))
        d.append(n * acc)
    dn = d[n]
    total = mp.mpf(0)
    for k in range(n):
        c = d[k] - dn
        term = mp.mpf(c.numerator) / c.denominator / mp.mpf(k + 1) ** s
        total += term if k % 2 == 0 else -term
    return -total / (mp.mpf(dn.numerator) / dn.denominator)


def zeta_int(n: int, ctx: PrecisionContext = DEFAULT) -> CharacterValue:
    """``zeta(n)`` for an integer ``n >= 2``."""
    if n < 2:
        raise DomainError("zeta_int needs n >= 2")
    key = (n, ctx.digits)
    with _ZETA_LOCK:
        if key in _ZETA_CACHE:
            return _ZETA_CACHE[key]
    mp = ctx.mp
    if n % 2 == 0:
        b = bernoulli(n)
        val = (-1) ** (n // 2 + 1) * (mp.mpf(b.numerator) / b.denominator) * (2 * mp.pi) ** n / (2 * mp.factorial(n))
        err = 10 * _eps(ctx)
    else:
        val = _borwein_eta(n, ctx) / (1 - mp.mpf(2) ** (1 - n))
        err = 100 * _eps(ctx)
    out = CharacterValue(mp.mpc(val), err, ctx.digits)
    with _ZETA_LOCK:
        _ZETA_CACHE[key] = out
    return out


_GAMMA_CACHE: dict[int, object] = {}


def euler_gamma(ctx: PrecisionContext = DEFAULT):
    """Euler's constant by the Brent-McMillan formula ``gamma = U/V``."""
    if ctx.digits in _GAMMA_CACHE:
        return _GAMMA_CACHE[ctx.digits]
    mp = ctx.mp
    with mp.workdps(ctx.digits + 15):
        n = int(math.ceil((ctx.digits + 10) * math.log(10) / 4)) + 1
        n2 = mp.mpf(n) ** 2
        A = -mp.log(n)
        B = mp.mpf(1)
        U, V = A, B
        eps = mp.mpf(10) ** (-(ctx.digits + 12))
        k = 1
        while True:
            B = B * n2 / (k * k)
            A = (A * n2 / k + B) / k
            U += A
            V += B
            if abs(A) < eps * abs(U) and B < eps * V:
                break
            k += 1
        g = U / V
    g = +g
    _GAMMA_CACHE[ctx.digits] = g
    return g


# --------------------------------------------------------------------------
# multiple zeta values


MZV_MAX_SUMMANDS = 10**7


def _suffix_sums(letters: tuple[int, ...], M: int) -> list[float]:
    """``[H_{letters[j:]}(M) for j in 0..r]`` in extended precision floats."""
    r = len(letters)
    out = [0.0] * (r + 1)
    out[r] = 1.0
    n = np.arange(1, M + 1, dtype=np.longdouble)
    h = np.ones(M + 1, dtype=np.longdouble)  # H_empty(n) = 1
    for j in range(r - 1, -1, -1):
        inc = n ** (-letters[j]) * h[:-1]
        h = np.concatenate(([np.longdouble(0)], np.cumsum(inc)))
        out[j] = h[M]
    return out


def _tail_approx(prefix: tuple[int, ...], M: int) -> tuple[float, float]:
    """Continuous approximation of ``sum_{n1>...>nj>M} prod n_i^-s_i``.

    Integral over the simplex ``t1 > ... > tj > M + 1/2``; returns
    (approximation, error estimate).
    """
    j = len(prefix)
    denom = 1.0
    sigma = 0
    for i, s in enumerate(prefix, start=1):
        sigma += s
        denom *= sigma - i
    a = (M + 0.5) ** (j - sigma) / denom
    return a, a * 2.0 * j * sigma / M


@lru_cache(maxsize=4096)
def _mzv_cached(letters: tuple[int, ...], digits: int, tol: float):
    ctx = PrecisionContext(digits)
    mp = ctx.mp
    r = len(letters)
    M = 1 << 12
    while True:
        H = _suffix_sums(letters, M)
        val = mp.mpf(float(H[0]))
        err = float(M) * float(np.finfo(np.longdouble).eps) * float(H[0]) * r
        # j = 1: exact Hurwitz tail
        val += mp.zeta(letters[0], M + 1) * mp.mpf(float(H[1]))
        for j in range(2, r + 1):
            a, e = _tail_approx(letters[:j], M)
            val += mp.mpf(a) * float(H[j])
            err += e * float(H[j])
        if err < tol or r * M * 2 > MZV_MAX_SUMMANDS:
            return mp.mpc(val), err
        M *= 2


def mzv(w: Word, ctx: PrecisionContext = DEFAULT, tol: float = 1e-9) -> CharacterValue:
    """``zeta(s1,...,sr)`` for a convergent word ``y_s1 ... y_sr``.

    Depth one goes through :func:`zeta_int`.  Deeper words use the exact
    split ``zeta(w) = sum_j T_{s1..sj}(M) H_{s_{j+1}..sr}(M)`` where the
    finite sums ``H`` are accumulated in extended precision, the depth-one
    tail is a Hurwitz zeta value and deeper tails are integral
    approximations whose error is folded into the bound.  Oracle grade.
    """
    if w.alphabet != Y:
        raise DomainError("mzv needs a Y-word")
    if not is_convergent(w):
        raise DomainError(f"{w} is divergent (starts with y1)")
    if not w.letters:
        return CharacterValue(ctx.mp.mpc(1), 0.0, ctx.digits)
    if len(w) == 1:
        return zeta_int(w.letters[0], ctx)
    val, err = _mzv_cached(w.letters, ctx.digits, tol)
    return CharacterValue(val, err, ctx.digits)


# --------------------------------------------------------------------------
# stuffle regularization


class RegularizedValue:
    """``sum_k g^k P_k`` with every ``P_k`` a rational combination of
    convergent Y-words.  Products use stuffle on the word parts."""

    __slots__ = ("parts",)

    def __init__(self, parts: dict[int, NCPolynomial] | None = None):
        parts = parts or {}
        for P in parts.values():
            bad = [w for w in P.words() if not is_convergent(w)]
            if bad:
                raise DomainError(f"{bad[0]} is not convergent")
        self.parts = {k: P for k, P in parts.items() if not P.is_zero()}

    @classmethod
    def from_polynomial(cls, P: NCPolynomial) -> "RegularizedValue":
        return cls({0: P})

    @classmethod
    def g(cls, power: int = 1) -> "RegularizedValue":
        return cls({power: NCPolynomial.one(Y)})

    def degree(self) -> int:
        return max(self.parts, default=0)

    def coefficient(self, k: int) -> NCPolynomial:
        return self.parts.get(k, NCPolynomial.zero(Y))

    def __add__(self, other: "RegularizedValue") -> "RegularizedValue":
        out = dict(self.parts)
        for k, P in other.parts.items():
            out[k] = out[k] + P if k in out else P
        return RegularizedValue(out)

    def __neg__(self):
        return RegularizedValue({k: -P for k, P in self.parts.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "RegularizedValue":
        return RegularizedValue({k: P * c for k, P in self.parts.items()})

    def __mul__(self, other: "RegularizedValue") -> "RegularizedValue":
        out: dict[int, NCPolynomial] = {}
        for a, P in self.parts.items():
            for b, Q in other.parts.items():
                R = stuffle(P, Q)
                out[a + b] = out[a + b] + R if a + b in out else R
        return RegularizedValue(out)

    def __eq__(self, other):
        if not isinstance(other, RegularizedValue):
            return NotImplemented
        keys = set(self.parts) | set(other.parts)
        return all(self.coefficient(k) == other.coefficient(k) for k in keys)

    def __repr__(self):
        return f"RegularizedValue({self})"

    def __str__(self):
        terms = []
        for k in sorted(self.parts, reverse=True):
            for w, c in self.parts[k].items():
                gk = "" if k == 0 else ("g" if k == 1 else f"g^{k}")
                body = " ".join(b for b in (gk, "" if w.is_empty() else str(w)) if b) or "1"
                mag = abs(c)
                terms.append(("-" if c < 0 else "+", body if mag == 1 else f"{mag}*{body}"))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _leading_ones(letters: tuple[int, ...]) -> int:
    k = 0
    while k < len(letters) and letters[k] == 1:
        k += 1
    return k


@lru_cache(maxsize=None)
def _y1_stuffle_power(k: int) -> NCPolynomial:
    out = NCPolynomial.one(Y)
    y1 = NCPolynomial.from_word(Word(Y, (1,)))
    for _ in range(k):
        out = stuffle(out, y1)
    return out


@lru_cache(maxsize=None)
def _column(pivot: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """Column ``y1^{stuffle k} stuffle u`` of the weight-``n`` system, keyed by
    its pivot word ``y1^k u`` (``u`` convergent).

    Ordering words by their number of leading ``y1`` makes the system block
    triangular: this column only meets words with at most ``k`` leading
    ``y1`` and, at exactly ``k``, only its pivot (coefficient ``k!``).
    Columns are built on demand, so only the part of the system that a
    given word reaches is ever materialized.
    """
    k = _leading_ones(pivot)
    col = stuffle(_y1_stuffle_power(k), NCPolynomial.from_word(Word(Y, pivot[k:])))
    out = {v.letters: int(c) for v, c in col.items()}
    if out.get(pivot) != factorial(k):
        raise AssertionError(f"singular regularization system at {pivot}")
    return out


def stuffle_regularize(P) -> RegularizedValue:
    """Write a Y-word (or rational Y-polynomial) in the basis
    ``y1^{stuffle k} stuffle u`` and send ``y1 -> g``."""
    if isinstance(P, Word):
        P = NCPolynomial.from_word(P)
    if P.alphabet != Y:
        raise DomainError("regularization acts on Y-polynomials")
    parts: dict[int, dict[Word, Fraction]] = {}
    for n in range(P.max_weight() + 1):
        residual = {w.letters: c for w, c in P.homogeneous(n).items()}
        if not residual:
            continue
        for k in range(n, -1, -1):
            pivots = [w for w in residual if _leading_ones(w) == k and residual[w] != 0]
            for w in sorted(pivots):
                c = Fraction(residual[w]) / factorial(k)
                u = Word(Y, w[k:])
                parts.setdefault(k, {})
                parts[k][u] = parts[k].get(u, 0) + c
                for v, m in _column(w).items():
                    residual[v] = residual.get(v, 0) - c * m
        if any(v != 0 for v in residual.values()):
            raise AssertionError("regularization did not terminate with zero residual")
    return RegularizedValue({k: NCPolynomial(d, Y, QQ) for k, d in parts.items()})


# --------------------------------------------------------------------------
# the character gamma_. and its extension to series


def gamma_char(P, ctx: PrecisionContext = DEFAULT, tol: float = 1e-9) -> CharacterValue:
    """``gamma_P``: regularize, then ``g -> gamma`` and convergent words -> MZVs."""
    if isinstance(P, Word):
        P = NCPolynomial.from_word(P)
    reg = stuffle_regularize(P)
    mp = ctx.mp
    g = euler_gamma(ctx)
    total = mp.mpc(0)
    err = 0.0
    for k, Q in reg.parts.items():
        gk = g**k
        for w, c in Q.items():
            z = mzv(w, ctx, tol)
            cf = mp.mpf(c.numerator) / c.denominator
            total += cf * gk * z.value
            err += abs(float(cf * gk)) * z.error
    return CharacterValue(total, err + _eps(ctx) * 10, ctx.digits)


def gamma_char_hat(S: NCPolynomial, z0, ctx: PrecisionContext = DEFAULT, param: str | None = None, tol: float = 1e-12) -> CharacterValue:
    """``sum_{n <= W} gamma_([S]_n)`` with coefficients evaluated at ``z = z0``.

    The error bound adds a geometric estimate of the components beyond the
    truncation weight.
    """
    mp = ctx.mp
    z0 = _mpc(mp, z0)
    if abs(z0) >= 1:
        raise DomainError("gamma_char_hat needs |z0| < 1")
    field_ = ComplexField(ctx)
    ring = S.ring
    W = S.trunc if isinstance(S, GradedSeries) else S.max_weight()
    name = param or (ring.names[0] if isinstance(ring, PolynomialRing) else None)
    components = []
    err = 0.0
    for n in range(W + 1):
        comp = mp.mpc(0)
        for w, c in S.homogeneous(n).items():
            if isinstance(ring, PolynomialRing):
                cv = ring.substitute(c, {name: z0}, field_)
            else:
                cv = field_(c)
            if cv == 0:
                continue
            ch = gamma_char(w, ctx, tol)
            comp += cv * ch.value
            err += abs(cv) * ch.error
        components.append(comp)
    total = mp.fsum(components)
    if getattr(S, "lossy", False) and W >= 1:
        q = float(abs(z0))
        last = max(float(abs(components[-1])), float(abs(components[-2])) if W >= 2 else 0.0)
        err += last * q / (1 - q)
    return CharacterValue(total, err, ctx.digits)


# --------------------------------------------------------------------------
# exponents ell_k and the functions 1/Gamma_{y_k}(1+z)


def ell_coefficients(k: int, order: int, ctx: PrecisionContext = DEFAULT) -> TaylorSeries:
    """Taylor coefficients of ``ell_k`` up to ``z^order``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    field_ = ComplexField(ctx)
    c = [field_.zero] * (order + 1)
    if k == 1:
        if order >= 1:
            c[1] = field_(euler_gamma(ctx))
        for n in range(2, order + 1):
            c[n] = -zeta_int(n, ctx).value * (-1) ** n / n
    else:
        n = 1
        while n * k <= order:
            # -zeta(nk) (-z^k)^n / n
            c[n * k] = -zeta_int(n * k, ctx).value * (-1) ** n / n
            n += 1
    return TaylorSeries(tuple(c), field_, "z", radius=1.0)


def ell(k: int, z, ctx: PrecisionContext = DEFAULT, terms: int | None = None) -> CharacterValue:
    """``ell_k(z)`` for ``|z| < 1``; adaptive number of terms unless given."""
    if k < 1:
        raise ValueError("k must be >= 1")
    mp = ctx.mp
    z = _mpc(mp, z)
    q = float(abs(z))
    if q >= 1:
        raise DomainError("ell needs |z| < 1")
    zeta2 = math.pi**2 / 6
    tol = ctx.tolerance / 10
    total = mp.mpc(0)
    if k == 1:
        total += euler_gamma(ctx) * z
        n = 2
        while True:
            total -= zeta_int(n, ctx).value * (-z) ** n / n
            bound = zeta2 * q ** (n + 1) / ((n + 1) * (1 - q)) if q else 0.0
            if (terms is not None and n >= terms) or (terms is None and bound < tol):
                break
            n += 1
    else:
        zk = z**k
        qk = q**k
        n = 1
        while True:
            total -= zeta_int(n * k, ctx).value * (-zk) ** n / n
            bound = zeta2 * qk ** (n + 1) / ((n + 1) * (1 - qk)) if qk else 0.0
            if (terms is not None and n >= terms) or (terms is None and bound < tol):
                break
            n += 1
    return CharacterValue(total, bound + 100 * _eps(ctx), ctx.digits)


def _product_inv_gamma(k: int, z, ctx: PrecisionContext):
    """``prod_{n<=N} (1 + z^k/n^k)`` (with Weierstrass factors for k = 1)
    times the exponential of the Hurwitz-zeta expansion of the log-tail."""
    mp = ctx.mp
    z = _mpc(mp, z)
    q = float(abs(z))
    N = max(32, int(4 * q) + 1)
    tol = ctx.tolerance / 100
    zk = z**k
    prod = mp.mpc(1)
    if k == 1:
        for n in range(1, N + 1):
            prod *= (1 + z / n) * mp.exp(-z / n)
        prod *= mp.exp(euler_gamma(ctx) * z)
        m0 = 2
    else:
        for n in range(1, N + 1):
            prod *= 1 + zk / mp.mpf(n) ** k
        m0 = 1
    # sum_{n>N} log(1 + z^k/n^k) [- z/n]  =  sum_m (-1)^(m-1) z^(km) zeta(km, N+1) / m
    tail = mp.mpc(0)
    m = m0
    while True:
        s = k * m
        # mpmath's Hurwitz zeta loses about s*log10(a) digits, so pad the precision
        with mp.workdps(ctx.digits + int(s * math.log10(N + 1)) + 10):
            hz = mp.zeta(s, N + 1)
        term = (-1) ** (m - 1) * zk**m * (+hz) / m
        tail += term
        # remaining terms: geometric with ratio (q/N)^k
        rest = float(abs(term)) * (q / N) ** k / (1 - (q / N) ** k)
        if rest < tol:
            break
        m += 1
    return prod * mp.exp(tail), rest * float(abs(prod)) * 2 + 1000 * _eps(ctx) * float(abs(prod))


def inv_gamma_yk(k: int, z, ctx: PrecisionContext = DEFAULT, mode: str = "product") -> CharacterValue:
    """``1/Gamma_{y_k}(1+z) = exp(ell_k(z))``.

    ``mode='series'`` exponentiates :func:`ell` (needs ``|z| < 1``);
    ``mode='product'`` uses the Weierstrass product, valid on the whole plane.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    mp = ctx.mp
    if mode == "series":
        e = ell(k, z, ctx)
        v = mp.exp(e.value)
        return CharacterValue(v, float(abs(v)) * e.error * 2, ctx.digits)
    if mode == "product":
        v, err = _product_inv_gamma(k, z, ctx)
        return CharacterValue(v, err, ctx.digits)
    raise ValueError(f"unknown mode {mode!r}")


def orbit(r: int, ctx: PrecisionContext = DEFAULT) -> list:
    """``G_r``: the ``r`` solutions of ``chi^r = (-1)^(r-1)``."""
    mp = ctx.mp
    return [mp.expjpi(mp.mpf(r - 1 + 2 * j) / r) for j in range(r)]


def roots_of_unity(r: int, ctx: PrecisionContext = DEFAULT) -> list:
    mp = ctx.mp
    return [mp.expjpi(mp.mpf(2 * j) / r) for j in range(r)]


def predicted_zeros(r: int, bound: float, ctx: PrecisionContext = DEFAULT) -> list:
    """Points ``chi * m`` (``chi`` in ``G_r``, ``m <= -1``) with modulus <= bound."""
    if r < 1:
        raise ValueError("r must be >= 1")
    mp = ctx.mp
    out = []
    for m in range(1, int(math.floor(bound)) + 1):
        for chi in orbit(r, ctx):
            p = -m * chi
            # clean the roundoff in exactly real/imaginary points
            re = p.real if abs(p.real) > ctx.tolerance else mp.mpf(0)
            im = p.imag if abs(p.imag) > ctx.tolerance else mp.mpf(0)
            p = mp.mpc(re, im)
            if abs(p) <= bound and all(abs(p - q) > ctx.tolerance for q in out):
                out.append(p)
    out.sort(key=lambda p: (float(abs(p)), float(mp.arg(p))))
    return out


def symmetrize(f: TaylorSeries, r: int) -> TaylorSeries:
    """``sum_{chi^r = 1} f(chi z) = r * sum_k a_{rk} z^{rk}`` by coefficient selection."""
    if r < 1:
        raise ValueError("r must be >= 1")
    ring = f.ring
    coeffs = [c * r if n % r == 0 else ring.zero for n, c in enumerate(f.coeffs)]
    return TaylorSeries(tuple(coeffs), ring, f.var)


def symmetrize_numeric(f: TaylorSeries, r: int, z, ctx: PrecisionContext = DEFAULT):
    """Explicit ``sum_{chi^r=1} f(chi z)`` for the polynomial ``f`` (cross-check)."""
    mp = ctx.mp
    field_ = ComplexField(ctx)
    total = mp.mpc(0)
    for chi in roots_of_unity(r, ctx):
        x = chi * _mpc(mp, z)
        total += mp.fsum(field_(c) * x**n for n, c in enumerate(f.coeffs))
    return total


@dataclass
class ReflectionResult:
    lhs: object
    rhs: object
    difference: float
    pole: str | None = None
    error: float = 0.0


def reflection_check(r: int, z, ctx: PrecisionContext = DEFAULT, rho=None, xi=None) -> ReflectionResult:
    """Compare ``Gamma_{y_2r}(1+z)`` with ``Gamma_{y_r}(1+rho z) Gamma_{y_r}(1+rho xi z)``.

    Defaults: ``rho = exp(i pi / 2r)``, ``xi = exp(i pi / r)``.  Poles are
    reported in the result rather than raised.
    """
    mp = ctx.mp
    z = _mpc(mp, z)
    rho = mp.expjpi(mp.mpf(1) / (2 * r)) if rho is None else _mpc(mp, rho)
    xi = mp.expjpi(mp.mpf(1) / r) if xi is None else _mpc(mp, xi)
    inv_l = inv_gamma_yk(2 * r, z, ctx)
    inv_a = inv_gamma_yk(r, rho * z, ctx)
    inv_b = inv_gamma_yk(r, rho * xi * z, ctx)
    tiny = mp.mpf(10) ** (-(ctx.digits // 2))
    for name, v, at in (("lhs", inv_l, z), ("rhs", inv_a, rho * z), ("rhs", inv_b, rho * xi * z)):
        if abs(v.value) < tiny:
            return ReflectionResult(None, None, float("nan"), pole=f"{name} pole at 1+{mp.nstr(at, 15)}")
    lhs = 1 / inv_l.value
    rhs = 1 / (inv_a.value * inv_b.value)
    err = (inv_l.error / float(abs(inv_l.value)) + inv_a.error / float(abs(inv_a.value)) + inv_b.error / float(abs(inv_b.value))) * float(abs(lhs))
    return ReflectionResult(lhs, rhs, float(abs(lhs - rhs)), None, err)
