"""Words over the two alphabets ``X = {x0, x1}`` and ``Y = {y1, y2, ...}``.

A word is an immutable tuple of letter indices tagged with its alphabet.
The empty word is spelled ``1``.  ``pi_x`` / ``pi_y`` are the only bridges
between the two alphabets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

X = "X"
Y = "Y"


class DomainError(ValueError):
    """Raised when an argument lies outside the domain of a map."""


class AlphabetError(TypeError):
    """Raised when words (or polynomials) over different alphabets are mixed."""


@dataclass(frozen=True)
class Letter:
    alphabet: str
    index: int

    def __post_init__(self):
        if self.alphabet == X:
            if self.index not in (0, 1):
                raise DomainError(f"X-letter index must be 0 or 1, got {self.index}")
        elif self.alphabet == Y:
            if self.index < 1:
                raise DomainError(f"Y-letter index must be >= 1, got {self.index}")
        else:
            raise AlphabetError(f"unknown alphabet {self.alphabet!r}")

    def __str__(self):
        return ("x" if self.alphabet == X else "y") + str(self.index)


@dataclass(frozen=True)
class Word:
    """A word ``letters`` over ``alphabet`` ('X' or 'Y')."""

    alphabet: str
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(int(i) for i in self.letters)
        object.__setattr__(self, "letters", letters)
        for i in letters:
            Letter(self.alphabet, i)

    @classmethod
    def empty(cls, alphabet: str) -> "Word":
        return cls(alphabet, ())

    @classmethod
    def x(cls, *letters: int) -> "Word":
        return cls(X, letters)

    @classmethod
    def y(cls, *letters: int) -> "Word":
        return cls(Y, letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return (Letter(self.alphabet, i) for i in self.letters)

    def __bool__(self):
        # the empty word is a perfectly good value; truthiness would be a trap
        return True

    def is_empty(self) -> bool:
        return not self.letters

    @property
    def weight(self) -> int:
        return weight(self)

    def __add__(self, other: "Word") -> "Word":
        check_same_alphabet(self, other)
        return Word(self.alphabet, self.letters + other.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.alphabet, self.letters[item])
        return self.letters[item]

    def sort_key(self):
        """Canonical order: by weight, then lexicographically on indices."""
        return (weight(self), self.letters)

    def __lt__(self, other: "Word"):
        check_same_alphabet(self, other)
        return self.sort_key() < other.sort_key()

    def __str__(self):
        if not self.letters:
            return "1"
        prefix = "x" if self.alphabet == X else "y"
        return " ".join(f"{prefix}{i}" for i in self.letters)

    def __repr__(self):
        return f"Word({self.alphabet}, {str(self)!r})"


def check_same_alphabet(*items) -> str:
    tags = {item.alphabet for item in items}
    if len(tags) != 1:
        raise AlphabetError(f"cannot mix alphabets {sorted(tags)}")
    return tags.pop()


def weight(w: Word) -> int:
    """Sum of indices over Y, length over X."""
    if w.alphabet == Y:
        return sum(w.letters)
    return len(w.letters)


def pi_x(w: Word) -> Word:
    """Substitute ``y_n -> x0^(n-1) x1`` letterwise."""
    if w.alphabet != Y:
        raise AlphabetError("pi_x expects a Y-word")
    out: list[int] = []
    for s in w.letters:
        out.extend([0] * (s - 1))
        out.append(1)
    return Word(X, tuple(out))


def pi_y(w: Word) -> Word:
    """Inverse of :func:`pi_x`, defined on ``X* x1`` and the empty word."""
    if w.alphabet != X:
        raise AlphabetError("pi_y expects an X-word")
    if w.letters and w.letters[-1] != 1:
        raise DomainError(f"{w} does not end in x1: outside the image of pi_x")
    out: list[int] = []
    run = 0
    for a in w.letters:
        if a == 0:
            run += 1
        else:
            out.append(run + 1)
            run = 0
    return Word(Y, tuple(out))


def is_convergent(w: Word) -> bool:
    """True iff ``w`` is empty or does not start with ``y1``."""
    if w.alphabet != Y:
        raise AlphabetError("is_convergent expects a Y-word")
    return not w.letters or w.letters[0] >= 2


def parse_word(text: str, alphabet: str | None = None) -> Word:
    """Parse ``"y2 y1"`` / ``"x0 x1"``; ``"1"`` is the empty word.

    The alphabet is inferred from the letters unless given (it must be given
    for the empty word to be anything other than Y).
    """
    from .parsing import parse_word_literal

    return parse_word_literal(text, alphabet)


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """All compositions of ``n`` (ordered tuples of positive parts)."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def y_words_of_weight(n: int) -> list[Word]:
    return sorted(Word(Y, c) for c in compositions(n))


def y_words_up_to(n: int) -> list[Word]:
    return [w for m in range(n + 1) for w in y_words_of_weight(m)]


def x_words_of_length(n: int) -> list[Word]:
    from itertools import product

    return [Word(X, t) for t in product((0, 1), repeat=n)]


def all_letters(words: Iterable[Word]) -> set[int]:
    return {i for w in words for i in w.letters}
