"""Truncated univariate power series over a coefficient ring."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .rings import QQ


@dataclass(frozen=True)
class TaylorSeries:
    """``a_0 + a_1 z + ... + a_D z^D  (+ O(z^(D+1)))``.

    ``coeffs`` always has exactly ``order + 1`` entries.
    """

    coeffs: tuple
    ring: object = QQ
    var: str = "z"
    radius: float | None = field(default=None, compare=False)
    # set when the coefficients come from a truncated (lossy) series
    lossy: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.ring(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a Taylor series needs at least the constant term")

    @classmethod
    def from_list(cls, coeffs: Sequence, order: int | None = None, ring=QQ, var="z"):
        coeffs = list(coeffs)
        if order is not None:
            coeffs = (coeffs + [ring.zero] * (order + 1))[: order + 1]
        return cls(tuple(coeffs), ring, var)

    @classmethod
    def zero(cls, order: int, ring=QQ, var="z"):
        return cls((ring.zero,) * (order + 1), ring, var)

    @classmethod
    def one(cls, order: int, ring=QQ, var="z"):
        return cls((ring.one,) + (ring.zero,) * order, ring, var)

    @classmethod
    def geometric(cls, order: int, ring=QQ, var="z"):
        """``1/(1-z)``."""
        return cls((ring.one,) * (order + 1), ring, var)

    @classmethod
    def exp_series(cls, order: int, ring=QQ, var="z"):
        coeffs, f = [], Fraction(1)
        for n in range(order + 1):
            if n:
                f /= n
            coeffs.append(ring(f))
        return cls(tuple(coeffs), ring, var)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def truncate(self, order: int) -> "TaylorSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TaylorSeries(self.coeffs[: order + 1], self.ring, self.var)

    def _check(self, other: "TaylorSeries") -> int:
        if other.var != self.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
        return min(self.order, other.order)

    def __add__(self, other):
        if not isinstance(other, TaylorSeries):
            other = TaylorSeries.one(self.order, self.ring, self.var) * other
        d = self._check(other)
        return TaylorSeries(tuple(self[i] + other[i] for i in range(d + 1)), self.ring, self.var)

    __radd__ = __add__

    def __neg__(self):
        return TaylorSeries(tuple(-c for c in self.coeffs), self.ring, self.var)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TaylorSeries):
            c = self.ring(other) if isinstance(other, (int, Fraction)) else other
            return TaylorSeries(tuple(a * c for a in self.coeffs), self.ring, self.var)
        return self.cauchy(other)

    __rmul__ = __mul__

    def cauchy(self, other: "TaylorSeries") -> "TaylorSeries":
        d = self._check(other)
        out = []
        for n in range(d + 1):
            acc = self.ring.zero
            for k in range(n + 1):
                acc = acc + self[k] * other[n - k]
            out.append(acc)
        return TaylorSeries(tuple(out), self.ring, self.var)

    def hadamard(self, other: "TaylorSeries") -> "TaylorSeries":
        d = self._check(other)
        return TaylorSeries(tuple(self[i] * other[i] for i in range(d + 1)), self.ring, self.var)

    def __pow__(self, m: int):
        out = TaylorSeries.one(self.order, self.ring, self.var)
        for _ in range(m):
            out = out * self
        return out

    def inverse(self) -> "TaylorSeries":
        """Multiplicative inverse; the constant term must be invertible."""
        a0 = self[0]
        if self.ring.is_zero(a0):
            raise ZeroDivisionError("constant term is zero")
        # over QQ[z] this raises unless a0 is a nonzero constant
        inv0 = self.ring.one / a0
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = self.ring.zero
            for k in range(1, n + 1):
                acc = acc + self[k] * out[n - k]
            out.append(-acc * inv0)
        return TaylorSeries(tuple(out), self.ring, self.var)

    def exp(self) -> "TaylorSeries":
        """``exp`` of a series with zero constant term.

        Uses ``n f_n = sum_{k=1}^n k g_k f_{n-k}``, so only division by
        integers is needed.
        """
        if not self.ring.is_zero(self[0]):
            raise ValueError("exp needs a zero constant term")
        out = [self.ring.one]
        for n in range(1, self.order + 1):
            acc = self.ring.zero
            for k in range(1, n + 1):
                if not self.ring.is_zero(self[k]):
                    acc = acc + self[k] * out[n - k] * k
            out.append(acc * Fraction(1, n))
        return TaylorSeries(tuple(out), self.ring, self.var)

    def log1p(self) -> "TaylorSeries":
        """``log(1 + self)`` for a series with zero constant term."""
        if not self.ring.is_zero(self[0]):
            raise ValueError("log1p needs a zero constant term")
        out = TaylorSeries.zero(self.order, self.ring, self.var)
        power = TaylorSeries.one(self.order, self.ring, self.var)
        for m in range(1, self.order + 1):
            power = power * self
            out = out + power * Fraction((-1) ** (m - 1), m)
        return out

    def map(self, f) -> "TaylorSeries":
        return TaylorSeries(tuple(f(c) for c in self.coeffs), self.ring, self.var)

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(c) for c in self.coeffs)

    def to_csv(self) -> str:
        lines = ["order,coefficient"]
        lines += [f"{n},{self.ring.format(c)}" for n, c in enumerate(self.coeffs)]
        return "\n".join(lines) + "\n"

    def __str__(self):
        terms = []
        for n, c in enumerate(self.coeffs):
            if self.ring.is_zero(c):
                continue
            mono = "" if n == 0 else (self.var if n == 1 else f"{self.var}^{n}")
            cs = self.ring.format(c)
            terms.append(cs if not mono else (mono if cs == "1" else f"{cs}*{mono}"))
        return (" + ".join(terms) or "0") + f" + O({self.var}^{self.order + 1})"
