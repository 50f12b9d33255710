"""Harmonic sums and Taylor coefficients of polylogarithms at zero.

``H_{s1...sr}(N) = sum_{N >= n1 > ... > nr > 0} 1/(n1^s1 ... nr^sr)`` and, for
``w`` in ``X* x1``, ``Li_w(z)/(1-z) = sum_N H_{pi_Y(w)}(N) z^N``.  Everything
here is exact rational arithmetic.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Sequence

from .comb import stirling2, x1_plus
from .ncalg import GradedSeries, NCPolynomial, power, shuffle
from .rings import QQ
from .taylor import TaylorSeries
from .words import X, Y, AlphabetError, Word, pi_y, weight

# letters -> [H_w(0), H_w(1), ...]; only ever extended, values never change
_H_CACHE: dict[tuple[int, ...], list[Fraction]] = {(): []}
_H_LOCK = threading.RLock()


def _table(letters: tuple[int, ...], N: int) -> list[Fraction]:
    if not letters:
        return [Fraction(1)] * (N + 1)
    with _H_LOCK:
        vals = _H_CACHE.setdefault(letters, [Fraction(0)])
        if len(vals) <= N:
            inner = _table(letters[1:], N)
            s = letters[0]
            for n in range(len(vals), N + 1):
                vals.append(vals[n - 1] + inner[n - 1] / n**s)
        return vals


def hsum(w, N: int):
    """``H_w(N)`` for a Y-word, or its linear extension to a Y-polynomial."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    if isinstance(w, Word):
        if w.alphabet != Y:
            raise AlphabetError("harmonic sums are indexed by Y-words")
        return _table(w.letters, N)[N]
    if w.alphabet != Y:
        raise AlphabetError("harmonic sums are indexed by Y-polynomials")
    total = w.ring.zero
    for u, c in w.items():
        total = total + c * _table(u.letters, N)[N]
    return total


def hsum_values(w, N: int) -> list:
    """``[H_w(0), ..., H_w(N)]``."""
    if isinstance(w, Word):
        return list(_table(w.letters, N)[: N + 1])
    out = [w.ring.zero] * (N + 1)
    for u, c in w.items():
        t = _table(u.letters, N)
        for n in range(N + 1):
            out[n] = out[n] + c * t[n]
    return out


ORACLE_MAX_DEPTH = 4
ORACLE_MAX_N = 60


def hsum_oracle(w: Word, N: int) -> Fraction:
    """Brute-force nested loop over ``N >= n1 > ... > nr > 0``."""
    r = len(w)
    if r > ORACLE_MAX_DEPTH or N > ORACLE_MAX_N:
        raise ValueError(f"oracle limited to depth <= {ORACLE_MAX_DEPTH}, N <= {ORACLE_MAX_N}")
    total = Fraction(0)
    # strictly decreasing tuples = reversed increasing combinations
    for idx in combinations(range(1, N + 1), r):
        term = Fraction(1)
        for n, s in zip(reversed(idx), w.letters):
            term /= n**s
        total += term
    return total


@dataclass(frozen=True)
class HarmonicTable:
    word: Word
    values: tuple[Fraction, ...]

    @classmethod
    def build(cls, w: Word, N: int) -> "HarmonicTable":
        return cls(w, tuple(hsum_values(w, N)))

    def to_csv(self) -> str:
        lines = ["N,value"] + [f"{n},{v}" for n, v in enumerate(self.values)]
        return "\n".join(lines) + "\n"


def _x_terms(P: NCPolynomial):
    if P.alphabet != X:
        raise AlphabetError("polylogarithms are indexed by X-polynomials")
    return [(pi_y(w), c) for w, c in P.items()]


def li_over_1mz_coeffs(S: NCPolynomial, D: int) -> TaylorSeries:
    """Coefficients ``a_N = sum_n H_{pi_Y([S]_n)}(N)`` of ``Li_S(z)/(1-z)``."""
    terms = _x_terms(S)
    coeffs = [S.ring.zero] * (D + 1)
    for v, c in terms:
        t = _table(v.letters, D)
        for N in range(D + 1):
            coeffs[N] = coeffs[N] + c * t[N]
    return TaylorSeries(tuple(coeffs), S.ring, "z", lossy=getattr(S, "lossy", False))


def li_coeffs(P: NCPolynomial, D: int) -> TaylorSeries:
    """Taylor coefficients of ``Li_P`` at 0, via ``H(N) - H(N-1)``."""
    a = li_over_1mz_coeffs(P, D)
    coeffs = [a[0]] + [a[N] - a[N - 1] for N in range(1, D + 1)]
    return TaylorSeries(tuple(coeffs), P.ring, "z", lossy=a.lossy)


def hadamard(f: TaylorSeries, g: TaylorSeries) -> TaylorSeries:
    return f.hadamard(g)


def preimage_from_taylor(T: TaylorSeries, L: int) -> GradedSeries:
    """Series ``S`` over ``{x1}`` with ``Li_S = T``, truncated at length ``L``.

    ``S = sum_N a_N (-(-x1)^+)^{ш N}``; its ``x1^n`` coefficient is
    ``sum_N (-1)^(N+n) a_N N! S2(n, N)``.  Coefficients of ``T`` beyond its
    order are taken as zero.
    """
    terms = {}
    for n in range(L + 1):
        c = T.ring.zero
        for N in range(min(n, T.order) + 1):
            if T.ring.is_zero(T[N]):
                continue
            c = c + T[N] * ((-1) ** (N + n) * factorial(N) * stirling2(n, N))
        terms[Word(X, (1,) * n)] = c
    return GradedSeries(terms, X, T.ring, L, lossy=True)


def preimage_by_shuffle_powers(T: TaylorSeries, L: int) -> GradedSeries:
    """Same series as :func:`preimage_from_taylor`, built from shuffle powers."""
    minus_plus = GradedSeries({Word(X, (1,) * k): (-1) ** (k + 1) for k in range(1, L + 1)}, X, QQ, L)
    total = GradedSeries({}, X, T.ring, L)
    for N in range(min(L, T.order) + 1):
        if T.ring.is_zero(T[N]):
            continue
        total = total + power(minus_plus, N, shuffle) * T[N]
    return total


@dataclass(frozen=True)
class SummabilityReport:
    """Finite-truncation look at ``sum_{n,N} |a_{n,N}| r^N``.

    This is a heuristic: it inspects a finite corner of the double sequence
    and cannot prove or disprove convergence.
    """

    partial_sum: float
    growth_flag: bool
    row_tail_ratio: float
    column_tail_ratio: float
    heuristic: bool = True


def summability_diagnostic(tau: Sequence[Sequence], r: float, threshold: float = 0.05) -> SummabilityReport:
    """Compare the last half of the row sums (and of each row) with the total.

    ``tau[n][N]`` holds ``a_{n,N}``.  The flag is raised when the second half
    of the rows, or the second half of the columns, still carries more than
    ``threshold`` of the mass.
    """
    if r <= 0:
        raise ValueError("r must be positive")
    rows = [[abs(float(a)) * r**N for N, a in enumerate(row)] for row in tau]
    row_sums = [sum(row) for row in rows]
    total = sum(row_sums)
    if total == 0:
        return SummabilityReport(0.0, False, 0.0, 0.0)
    half = len(row_sums) // 2
    row_tail = sum(row_sums[half + 1 :]) / total if len(row_sums) > 1 else 0.0
    ncols = max(len(row) for row in rows)
    col_sums = [sum(row[N] for row in rows if N < len(row)) for N in range(ncols)]
    col_tail = sum(col_sums[ncols // 2 + 1 :]) / total if ncols > 1 else 0.0
    flag = row_tail > threshold or col_tail > threshold
    return SummabilityReport(total, flag, row_tail, col_tail)


def harmonic_matrix(Q: NCPolynomial, n_max: int, N_max: int) -> list[list[Fraction]]:
    """``a_{n,N} = H_{Q_n}(N)`` where ``Q_n`` is the weight-``n`` part of ``Q``."""
    return [hsum_values(Q.homogeneous(n), N_max) for n in range(n_max + 1)]


@dataclass(frozen=True)
class DomWitness:
    t: Fraction
    series: GradedSeries
    closed_form_coeffs: TaylorSeries


def dom_witness_series(t, W: int) -> GradedSeries:
    """``S(t) = sum_m t^m (x1^+)^{ш m}`` truncated at length ``W``."""
    t = Fraction(t)
    plus = x1_plus(W)
    total = GradedSeries({Word(X, ()): 1}, X, QQ, W)
    p = total
    for m in range(1, W + 1):
        p = shuffle(p, plus)
        total = total + p * t**m
    return GradedSeries(total.polynomial().items(), X, QQ, W, lossy=t != 0)


def dom_witness(t, W: int, D: int) -> DomWitness:
    """Witness series for the strict decrease of ``R -> Dom_R(Li)``.

    Returns ``S(t)`` and the coefficients of ``(1-z)/(1-(t+1)z)``.
    """
    t = Fraction(t)
    if t < 0:
        raise ValueError("t must be nonnegative")
    one_minus_z = TaylorSeries.from_list([1, -1], D)
    denom = TaylorSeries.from_list([1, -(t + 1)], D)
    closed = one_minus_z * denom.inverse()
    return DomWitness(t, dom_witness_series(t, W), closed)


