"""Coefficient rings.

The noncommutative algebra is generic over a commutative coefficient ring.
Three concrete rings are provided:

* :data:`QQ` -- exact rationals (:class:`fractions.Fraction`);
* :class:`PolynomialRing` -- polynomials over the rationals in named formal
  parameters (backed by ``sympy.polys.rings``);
* :class:`ComplexField` -- arbitrary precision complex floats, each instance
  owning a private ``mpmath`` context so that no global precision is touched.

Ring elements are plain Python objects supporting ``+``, ``-``, ``*`` and
multiplication by :class:`~fractions.Fraction`; the ring object only knows
how to build and inspect them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from numbers import Rational

import mpmath
from sympy import QQ as SYMPY_QQ
from sympy.polys.rings import ring as sympy_ring


class RationalField:
    name = "QQ"
    exact = True

    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, x) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, Rational)):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def is_zero(self, a) -> bool:
        return a == 0

    def format(self, a) -> str:
        return str(a)

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PolynomialRing:
    """``QQ[names...]``; elements are sympy ``PolyElement`` objects."""

    exact = True

    def __init__(self, *names: str):
        if not names:
            raise ValueError("at least one parameter name is required")
        self.names = tuple(names)
        self._ring, *gens = sympy_ring(",".join(names), SYMPY_QQ)
        self.gens = tuple(gens)
        self.zero = self._ring.zero
        self.one = self._ring.one

    @property
    def name(self):
        return "QQ[" + ",".join(self.names) + "]"

    def gen(self, name: str | None = None):
        if name is None:
            return self.gens[0]
        return self.gens[self.names.index(name)]

    def __call__(self, x):
        if isinstance(x, Fraction):
            return self._ring(SYMPY_QQ(x.numerator, x.denominator))
        if hasattr(x, "ring") and x.ring == self._ring:
            return x
        return self._ring(x)

    def is_zero(self, a) -> bool:
        return not a

    def format(self, a) -> str:
        s = str(a)
        return s if len(a.terms()) <= 1 else f"({s})"

    def coefficients(self, a):
        """Iterate ``(exponent-tuple, Fraction)`` pairs."""
        for monom, c in a.terms():
            yield monom, Fraction(int(c.numerator), int(c.denominator))

    def substitute(self, a, values: dict, field_: "ComplexField"):
        """Evaluate ``a`` with ``values[name]`` in ``field_``."""
        ctx = field_.mp
        point = [field_(values.get(n, 0)) for n in self.names]
        total = field_.zero
        for monom, c in self.coefficients(a):
            term = ctx.mpf(c.numerator) / c.denominator
            for v, e in zip(point, monom):
                if e:
                    term = term * v**e
            total += term
        return total

    def rational_substitute(self, a, values: dict) -> Fraction:
        """Exact evaluation at rational parameter values."""
        total = Fraction(0)
        for monom, c in self.coefficients(a):
            term = c
            for n, e in zip(self.names, monom):
                if e:
                    term *= Fraction(values[n]) ** e
            total += term
        return total

    def degree(self, a, name: str | None = None) -> int:
        i = 0 if name is None else self.names.index(name)
        return max((m[i] for m, _ in a.terms()), default=0)

    def coefficient(self, a, exponent: int, name: str | None = None):
        """Coefficient of ``name**exponent`` (univariate extraction)."""
        i = 0 if name is None else self.names.index(name)
        out = self.zero
        for monom, c in a.terms():
            if monom[i] == exponent:
                rest = list(monom)
                rest[i] = 0
                out += self._ring({tuple(rest): c})
        return out

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and other.names == self.names

    def __hash__(self):
        return hash(("PolynomialRing", self.names))

    def __repr__(self):
        return self.name


class PrecisionError(ValueError):
    """Requested precision or tolerance cannot be honoured."""


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision (decimal digits) plus a comparison tolerance."""

    digits: int = 50
    tolerance: float | None = None

    def __post_init__(self):
        if self.digits < 15:
            raise PrecisionError("precision must be at least 15 digits")
        if self.tolerance is None:
            object.__setattr__(self, "tolerance", 10.0 ** (-(self.digits - 10)))
        elif self.tolerance < 10.0 ** (-(self.digits - 10)):
            raise PrecisionError("tolerance finer than precision minus 10 guard digits")

    @cached_property
    def mp(self) -> mpmath.ctx_mp.MPContext:
        ctx = mpmath.MPContext()
        ctx.dps = self.digits
        return ctx


class ComplexField:
    """Arbitrary precision complex numbers at a fixed number of digits."""

    exact = False

    def __init__(self, prec: PrecisionContext | int = 50):
        if isinstance(prec, int):
            prec = PrecisionContext(prec)
        self.prec = prec
        self.mp = prec.mp
        self.zero = self.mp.mpc(0)
        self.one = self.mp.mpc(1)

    @property
    def name(self):
        return f"CC[{self.prec.digits}]"

    def __call__(self, x):
        if isinstance(x, Fraction):
            return self.mp.mpc(self.mp.mpf(x.numerator) / x.denominator)
        return self.mp.mpc(x)

    def is_zero(self, a) -> bool:
        return a == 0

    def format(self, a) -> str:
        return self.mp.nstr(a, 20)

    def __repr__(self):
        return self.name

