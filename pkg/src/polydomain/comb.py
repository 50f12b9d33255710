"""Stirling numbers of the second kind and shuffle powers of ``x1^+``."""

from __future__ import annotations

import threading
from fractions import Fraction
from math import factorial

from .ncalg import GradedSeries, NCPolynomial, power, shuffle
from .rings import QQ
from .taylor import TaylorSeries
from .words import X, Word

_S2: list[list[int]] = [[1]]
_S2_LOCK = threading.Lock()


def _extend_table(n: int) -> None:
    with _S2_LOCK:
        while len(_S2) <= n:
            prev = _S2[-1]
            k = len(_S2)
            row = [0] * (k + 1)
            for m in range(1, k + 1):
                row[m] = (m * prev[m] if m < len(prev) else 0) + prev[m - 1]
            _S2.append(row)


def stirling2(n: int, m: int) -> int:
    """Number of partitions of an ``n``-set into ``m`` nonempty blocks."""
    if n < 0 or m < 0:
        raise ValueError("stirling2 needs nonnegative arguments")
    if m > n:
        return 0
    _extend_table(n)
    return _S2[n][m]


def surjections(n: int, m: int) -> int:
    """Number of onto maps ``[n] -> [m]``."""
    return factorial(m) * stirling2(n, m)


def x1_plus(length: int) -> GradedSeries:
    """``x1^+ = x1 + x1^2 + ...`` truncated at ``length``."""
    return GradedSeries({Word(X, (1,) * k): 1 for k in range(1, length + 1)}, X, QQ, length)


SHUFFLE_POWER_CAP = 10


def shuffle_power_coeff(m: int, n: int) -> int:
    """``<(x1^+)^{ш m} | x1^n>`` computed through actual shuffle products."""
    if not (0 <= m <= SHUFFLE_POWER_CAP and 0 <= n <= SHUFFLE_POWER_CAP):
        raise ValueError(f"shuffle_power_coeff is capped at m, n <= {SHUFFLE_POWER_CAP}")
    P = power(x1_plus(n), m, shuffle)
    c = P.coefficient(Word(X, (1,) * n))
    return int(c)


def egf_check(m: int, D: int) -> bool:
    """Check ``sum_n m! S2(n,m) x^n/n! == (e^x - 1)^m`` up to order ``D``."""
    if m > 8 or D > 20:
        raise ValueError("egf_check is meant for m <= 8, D <= 20")
    lhs = TaylorSeries.from_list([Fraction(surjections(n, m), factorial(n)) for n in range(D + 1)])
    rhs = (TaylorSeries.exp_series(D) - 1) ** m
    return lhs == rhs
