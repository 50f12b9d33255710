"""Noncommutative polynomials and weight-truncated series.

Products: concatenation, shuffle (any alphabet) and stuffle (alphabet Y).
Series are truncated at a weight ``W``; all three products are graded for
the weight, so truncated products are exact below ``W``.

Stars of plane series ``(a1 y1 + a2 y2 + ...)^*`` are the concatenation
characters.  Their stuffle products are handled in closed form through the
umbral coding ``sum a_n q^n <-> sum a_n y_n``.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .rings import QQ
from .taylor import TaylorSeries
from .words import X, Y, AlphabetError, DomainError, Word, check_same_alphabet, weight


class NCPolynomial:
    """Finitely supported map ``Word -> scalar`` over one alphabet.

    Zero coefficients are never stored.  Iteration follows the canonical
    word order (weight first, then letter indices).
    """

    __slots__ = ("alphabet", "ring", "_terms")

    def __init__(self, terms: Mapping[Word, object] | Iterable = (), alphabet: str = Y, ring=QQ):
        self.alphabet = alphabet
        self.ring = ring
        clean: dict[Word, object] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            if w.alphabet != alphabet:
                raise AlphabetError(f"word {w} is not over {alphabet}")
            c = ring(c) if isinstance(c, (int, Fraction)) else c
            if w in clean:
                c = clean[w] + c
            clean[w] = c
        self._terms = {w: c for w, c in clean.items() if not ring.is_zero(c)}

    # construction ------------------------------------------------------
    @classmethod
    def from_word(cls, w: Word, coeff=1, ring=QQ):
        return cls({w: coeff}, w.alphabet, ring)

    @classmethod
    def one(cls, alphabet: str = Y, ring=QQ):
        return cls({Word.empty(alphabet): ring.one}, alphabet, ring)

    @classmethod
    def zero(cls, alphabet: str = Y, ring=QQ):
        return cls({}, alphabet, ring)

    def _new(self, terms, like=None):
        return NCPolynomial(terms, self.alphabet, self.ring)

    # mapping protocol --------------------------------------------------
    def coefficient(self, w: Word):
        if w.alphabet != self.alphabet:
            raise AlphabetError(f"word {w} is not over {self.alphabet}")
        return self._terms.get(w, self.ring.zero)

    __getitem__ = coefficient

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def words(self):
        return [w for w, _ in self.items()]

    def __iter__(self):
        return iter(self.words())

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def max_weight(self) -> int:
        return max((weight(w) for w in self._terms), default=0)

    def constant_term(self):
        return self.coefficient(Word.empty(self.alphabet))

    def homogeneous(self, n: int) -> "NCPolynomial":
        return NCPolynomial({w: c for w, c in self._terms.items() if weight(w) == n}, self.alphabet, self.ring)

    def map_coefficients(self, f, ring=None) -> "NCPolynomial":
        ring = ring or self.ring
        return NCPolynomial({w: f(c) for w, c in self._terms.items()}, self.alphabet, ring)

    def map_words(self, f, alphabet: str) -> "NCPolynomial":
        out = defaultdict(lambda: self.ring.zero)
        for w, c in self._terms.items():
            out[f(w)] = out[f(w)] + c
        return NCPolynomial(out, alphabet, self.ring)

    # linear structure --------------------------------------------------
    def _coerce(self, other) -> "NCPolynomial":
        if isinstance(other, NCPolynomial):
            check_same_alphabet(self, other)
            return other
        return NCPolynomial({Word.empty(self.alphabet): other}, self.alphabet, self.ring)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self._terms)
        for w, c in other._terms.items():
            terms[w] = terms[w] + c if w in terms else c
        return self._result(terms, other)

    __radd__ = __add__

    def __neg__(self):
        return self._result({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, NCPolynomial):
            return conc(self, other)
        c = self.ring(other) if isinstance(other, (int, Fraction)) else other
        return self._result({w: a * c for w, a in self._terms.items()})

    def __rmul__(self, other):
        if isinstance(other, NCPolynomial):
            return conc(other, self)
        return self * other

    def _result(self, terms, other=None):
        return NCPolynomial(terms, self.alphabet, self.ring)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self._coerce(other)
        if not isinstance(other, NCPolynomial) or other.alphabet != self.alphabet:
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.alphabet, frozenset(self._terms.items())))

    def __repr__(self):
        return f"NCPolynomial({self})"

    def __str__(self):
        return format_polynomial(self)


class GradedSeries(NCPolynomial):
    """Series known exactly up to weight ``trunc``.

    ``lossy`` records whether terms of weight > ``trunc`` were discarded
    somewhere along the computation (so the series is genuinely infinite or
    at least not fully represented).
    """

    __slots__ = ("trunc", "lossy")

    def __init__(self, terms=(), alphabet: str = Y, ring=QQ, trunc: int = 0, lossy: bool = False):
        if trunc < 0:
            raise ValueError("truncation weight must be nonnegative")
        kept, dropped = {}, False
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            if weight(w) <= trunc:
                kept[w] = kept[w] + c if w in kept else c
            elif not (ring.is_zero(c) if not isinstance(c, int) else c == 0):
                dropped = True
        super().__init__(kept, alphabet, ring)
        self.trunc = trunc
        self.lossy = lossy or dropped

    @classmethod
    def from_polynomial(cls, P: NCPolynomial, trunc: int | None = None):
        if trunc is None:
            trunc = P.max_weight()
        return cls(P._terms, P.alphabet, P.ring, trunc)

    def _result(self, terms, other=None):
        trunc, lossy = self.trunc, self.lossy
        if isinstance(other, GradedSeries):
            trunc = min(trunc, other.trunc)
            lossy = lossy or other.lossy
        return GradedSeries(terms, self.alphabet, self.ring, trunc, lossy)

    def component(self, n: int) -> NCPolynomial:
        return homogeneous_component(self, n)

    def polynomial(self) -> NCPolynomial:
        return NCPolynomial(self._terms, self.alphabet, self.ring)

    def truncate(self, trunc: int) -> "GradedSeries":
        if trunc > self.trunc:
            raise ValueError("cannot raise the truncation weight")
        return GradedSeries(self._terms, self.alphabet, self.ring, trunc, self.lossy)

    def __eq__(self, other):
        # compare below the common truncation
        if isinstance(other, NCPolynomial) and other.alphabet == self.alphabet:
            W = min(self.trunc, other.trunc) if isinstance(other, GradedSeries) else self.trunc
            diff = NCPolynomial(self._terms, self.alphabet, self.ring) - NCPolynomial(
                other._terms, other.alphabet, other.ring
            )
            return all(weight(w) > W for w in diff._terms)
        return super().__eq__(other)

    __hash__ = NCPolynomial.__hash__

    def __repr__(self):
        return f"GradedSeries({self}; W={self.trunc})"

    def __str__(self):
        body = format_polynomial(self)
        return f"{body} + O(w>{self.trunc})" if self.lossy else body


# --------------------------------------------------------------------------
# word-level products (integer structure constants, memoized)


@lru_cache(maxsize=None)
def _shuffle_words(u: tuple, v: tuple) -> tuple:
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    out: dict[tuple, int] = defaultdict(int)
    for w, c in _shuffle_words(u[1:], v):
        out[(u[0],) + w] += c
    for w, c in _shuffle_words(u, v[1:]):
        out[(v[0],) + w] += c
    return tuple(out.items())


@lru_cache(maxsize=None)
def _stuffle_words(u: tuple, v: tuple) -> tuple:
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    out: dict[tuple, int] = defaultdict(int)
    s, t = u[0], v[0]
    for w, c in _stuffle_words(u[1:], v):
        out[(s,) + w] += c
    for w, c in _stuffle_words(u, v[1:]):
        out[(t,) + w] += c
    for w, c in _stuffle_words(u[1:], v[1:]):
        out[(s + t,) + w] += c
    return tuple(out.items())


def shuffle_words(u: Word, v: Word) -> dict[Word, int]:
    a = check_same_alphabet(u, v)
    return {Word(a, w): c for w, c in _shuffle_words(u.letters, v.letters)}


def stuffle_words(u: Word, v: Word) -> dict[Word, int]:
    if check_same_alphabet(u, v) != Y:
        raise AlphabetError("stuffle is defined on the alphabet Y only")
    return {Word(Y, w): c for w, c in _stuffle_words(u.letters, v.letters)}


# --------------------------------------------------------------------------
# bilinear products


def _bilinear(P: NCPolynomial, Q: NCPolynomial, word_product, trunc: int | None):
    alphabet = check_same_alphabet(P, Q)
    ring = P.ring
    out: dict[Word, object] = {}
    dropped = False
    for u, a in P._terms.items():
        wu = weight(u)
        for v, b in Q._terms.items():
            if trunc is not None and wu + weight(v) > trunc:
                dropped = True
                continue
            ab = a * b
            for w, c in word_product(u.letters, v.letters):
                term = ab * c if c != 1 else ab
                w = Word(alphabet, w)
                out[w] = out[w] + term if w in out else term
    return out, dropped


def _product(P, Q, word_product):
    trunc = None
    lossy = False
    if isinstance(P, GradedSeries) or isinstance(Q, GradedSeries):
        trunc = min(S.trunc for S in (P, Q) if isinstance(S, GradedSeries))
        lossy = any(getattr(S, "lossy", False) for S in (P, Q))
    terms, dropped = _bilinear(P, Q, word_product, trunc)
    if trunc is None:
        return NCPolynomial(terms, P.alphabet, P.ring)
    return GradedSeries(terms, P.alphabet, P.ring, trunc, lossy or dropped)


def _conc_words(u: tuple, v: tuple):
    return ((u + v, 1),)


def conc(P: NCPolynomial, Q: NCPolynomial) -> NCPolynomial:
    """Concatenation product."""
    return _product(P, Q, _conc_words)


def shuffle(P: NCPolynomial, Q: NCPolynomial) -> NCPolynomial:
    """Shuffle product ``au ш bv = a(u ш bv) + b(au ш v)``."""
    return _product(P, Q, _shuffle_words)


def stuffle(P: NCPolynomial, Q: NCPolynomial) -> NCPolynomial:
    """Quasi-shuffle ``y_s u * y_t v = y_s(u*y_t v) + y_t(y_s u*v) + y_{s+t}(u*v)``."""
    if check_same_alphabet(P, Q) != Y:
        raise AlphabetError("stuffle is defined on the alphabet Y only")
    return _product(P, Q, _stuffle_words)


def power(P: NCPolynomial, m: int, product=stuffle) -> NCPolynomial:
    out = P.one(P.alphabet, P.ring)
    if isinstance(P, GradedSeries):
        out = GradedSeries.from_polynomial(out, P.trunc)
    for _ in range(m):
        out = product(out, P)
    return out


def pairing(S: NCPolynomial, P: NCPolynomial):
    """``<S|P> = sum_w <S|w><P|w>``."""
    check_same_alphabet(S, P)
    if isinstance(S, GradedSeries):
        too_heavy = [w for w in P._terms if weight(w) > S.trunc]
        if too_heavy:
            raise DomainError(f"{too_heavy[0]} lies beyond the truncation weight {S.trunc}")
    total = S.ring.zero
    for w, c in P._terms.items():
        if w in S._terms:
            total = total + S._terms[w] * c
    return total


def homogeneous_component(S: NCPolynomial, n: int) -> NCPolynomial:
    if isinstance(S, GradedSeries) and n > S.trunc:
        raise DomainError(f"component {n} lies beyond the truncation weight {S.trunc}")
    return S.homogeneous(n)


def _check_proper(S: NCPolynomial):
    if not S.ring.is_zero(S.constant_term()):
        raise DomainError("series must be proper (zero constant term)")


def _as_series(S: NCPolynomial, W: int) -> GradedSeries:
    if isinstance(S, GradedSeries):
        if S.trunc < W:
            raise ValueError(f"series is only known up to weight {S.trunc} < {W}")
        return S.truncate(W) if S.trunc > W else S
    return GradedSeries(S._terms, S.alphabet, S.ring, W)


def conc_star(S: NCPolynomial, W: int) -> GradedSeries:
    """Kleene star ``sum_m S^m`` of a proper series, truncated at weight ``W``."""
    _check_proper(S)
    S = _as_series(S, W)
    one = GradedSeries({Word.empty(S.alphabet): S.ring.one}, S.alphabet, S.ring, W)
    total, p = one, one
    for _ in range(W):
        p = conc(p, S)
        if p.is_zero():
            break
        total = total + p
    return GradedSeries(total._terms, S.alphabet, S.ring, W, lossy=not S.is_zero() or S.lossy)


def stuffle_exp(S: NCPolynomial, W: int) -> GradedSeries:
    """``1 + S + S*S/2! + ...`` (stuffle powers), truncated at weight ``W``."""
    if S.alphabet != Y:
        raise AlphabetError("the stuffle exponential lives on the alphabet Y")
    _check_proper(S)
    S = _as_series(S, W)
    one = GradedSeries({Word.empty(Y): S.ring.one}, Y, S.ring, W)
    total, p = one, one
    for m in range(1, W + 1):
        p = stuffle(p, S) * Fraction(1, m)
        if p.is_zero():
            break
        total = total + p
    return GradedSeries(total._terms, Y, S.ring, W, lossy=p.lossy or S.lossy)


def stuffle_log(S: NCPolynomial, W: int) -> GradedSeries:
    """Inverse of :func:`stuffle_exp` on series with constant term 1."""
    if S.constant_term() != S.ring.one:
        raise DomainError("stuffle_log needs constant term 1")
    T = _as_series(S, W) - 1
    total = GradedSeries({}, Y, S.ring, W)
    p = GradedSeries({Word.empty(Y): S.ring.one}, Y, S.ring, W)
    for m in range(1, W + 1):
        p = stuffle(p, T)
        if p.is_zero():
            break
        total = total + p * Fraction((-1) ** (m - 1), m)
    return total


# --------------------------------------------------------------------------
# plane series and the umbral group law


class PlaneSeries:
    """``sum_{i=1}^{W} alpha_i y_i`` -- a homogeneous degree-one series."""

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs, ring=QQ):
        self.ring = ring
        self.coeffs = tuple(ring(c) if isinstance(c, (int, Fraction)) else c for c in coeffs)

    @classmethod
    def from_polynomial(cls, P: NCPolynomial, W: int) -> "PlaneSeries":
        coeffs = [P.ring.zero] * W
        for w, c in P.items():
            if len(w) != 1:
                raise DomainError(f"{w} is not a letter: not a plane series")
            if w.letters[0] <= W:
                coeffs[w.letters[0] - 1] = c
        return cls(coeffs, P.ring)

    @property
    def trunc(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int):
        """``alpha_i`` (1-based, zero beyond the truncation)."""
        if i < 1:
            raise IndexError("plane series are indexed from 1")
        return self.coeffs[i - 1] if i <= len(self.coeffs) else self.ring.zero

    def as_series(self, W: int | None = None) -> GradedSeries:
        W = self.trunc if W is None else W
        terms = {Word(Y, (i,)): self[i] for i in range(1, W + 1)}
        return GradedSeries(terms, Y, self.ring, W)

    def star(self, W: int | None = None) -> GradedSeries:
        W = self.trunc if W is None else W
        return conc_star(self.as_series(W), W)

    def __eq__(self, other):
        if not isinstance(other, PlaneSeries):
            return NotImplemented
        n = max(self.trunc, other.trunc)
        return all(self[i] == other[i] for i in range(1, n + 1))

    def __repr__(self):
        return f"PlaneSeries({format_polynomial(self.as_series().polynomial())})"


def umbral_encode(P: PlaneSeries, var: str = "q") -> TaylorSeries:
    """``sum a_n y_n  ->  sum a_n q^n``."""
    return TaylorSeries((P.ring.zero,) + P.coeffs, P.ring, var)


def umbral_decode(T: TaylorSeries) -> PlaneSeries:
    """``sum a_n q^n  ->  sum a_n y_n``; the constant term must vanish."""
    if not T.ring.is_zero(T[0]):
        raise DomainError("umbral decoding needs a zero constant term")
    return PlaneSeries(T.coeffs[1:], T.ring)


def char_stuffle_product(A: PlaneSeries, B: PlaneSeries) -> PlaneSeries:
    """``C`` with ``A^* stuffle B^* = C^*``, i.e. ``1+C = (1+A)(1+B)`` umbrally."""
    W = min(A.trunc, B.trunc)
    a = umbral_encode(PlaneSeries(A.coeffs[:W], A.ring))
    b = umbral_encode(PlaneSeries(B.coeffs[:W], B.ring))
    return umbral_decode((1 + a) * (1 + b) - 1)


def char_stuffle_inverse(A: PlaneSeries) -> PlaneSeries:
    a = umbral_encode(A)
    return umbral_decode((1 + a).inverse() - 1)


def one_param_group(T: TaylorSeries, z, W: int, ring=None) -> GradedSeries:
    """``G(z) = (decode(exp(z T) - 1))^*`` truncated at weight ``W``.

    ``z`` may be a rational or an element of a polynomial ring (pass that
    ring as ``ring``); ``G(z1) stuffle G(z2) = G(z1 + z2)``.
    """
    ring = ring or T.ring
    if not T.ring.is_zero(T[0]):
        raise DomainError("the generator must have zero constant term")
    if T.order < W:
        raise ValueError(f"generator known to order {T.order} < {W}")
    T = TaylorSeries(tuple(ring(c) if isinstance(c, (int, Fraction)) else c for c in T.coeffs[: W + 1]), ring, T.var)
    zc = ring(z) if isinstance(z, (int, Fraction)) else z
    E = (T * zc).exp() - 1
    return umbral_decode(E).star(W)


# --------------------------------------------------------------------------
# printing


def _format_coeff(ring, c) -> tuple[str, str]:
    """Return (sign, magnitude-string or '') for a coefficient."""
    if isinstance(c, Fraction):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        return sign, "" if mag == 1 else str(mag)
    s = ring.format(c)
    if s.startswith("-") and not s.startswith("(") and " " not in s:
        return "-", "" if s == "-1" else s[1:]
    return "+", "" if s == "1" else s


def format_polynomial(P: NCPolynomial) -> str:
    parts = []
    for w, c in P.items():
        sign, mag = _format_coeff(P.ring, c)
        word = str(w)
        if mag and w.is_empty():
            body = f"{mag}*1" if isinstance(c, Fraction) else f"{mag}"
        elif mag:
            body = f"{mag}*{word}"
        else:
            body = word
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def letter(i: int, alphabet: str = Y, ring=QQ, coeff=1) -> NCPolynomial:
    return NCPolynomial({Word(alphabet, (i,)): coeff}, alphabet, ring)


def word_poly(w: Word, ring=QQ, coeff=1) -> NCPolynomial:
    return NCPolynomial({w: coeff}, w.alphabet, ring)
