"""Words over an ordered alphabet and the Higman ordering of the free monoid.

A word is a finite sequence of letters; the empty word is the neutral
element and the least element of the order.  ``w <= x`` holds exactly when
some subword of x dominates w letter by letter in the alphabet order; over
an unordered alphabet this is the usual subword (divisibility) ordering.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from . import kernels
from .errors import AlphabetMismatch
from .poset import Alphabet


class Word:
    """An immutable word; ``data`` holds letter indices as bytes."""

    __slots__ = ("alphabet", "data")

    def __init__(self, alphabet: Alphabet, data: bytes):
        self.alphabet = alphabet
        self.data = data

    @classmethod
    def from_letters(cls, alphabet: Alphabet, names: Iterable[str]) -> "Word":
        return cls(alphabet, bytes(alphabet.index(n) for n in names))

    @classmethod
    def parse(cls, alphabet: Alphabet, literal: str) -> "Word":
        """Parse the canonical literal: letter names joined without separator
        when all names are single characters, else dot-separated; "" is the
        empty word."""
        if literal == "":
            return cls(alphabet, b"")
        if alphabet.single_char and "." not in literal:
            return cls.from_letters(alphabet, literal)
        return cls.from_letters(alphabet, literal.split("."))

    @property
    def letters(self) -> tuple[str, ...]:
        names = self.alphabet.letters
        return tuple(names[i] for i in self.data)

    def literal(self) -> str:
        if self.alphabet.single_char:
            return "".join(self.letters)
        return ".".join(self.letters)

    def __len__(self) -> int:
        return len(self.data)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Word)
            and self.data == other.data
            and self.alphabet == other.alphabet
        )

    def __hash__(self) -> int:
        return hash((self.data, self.alphabet.letters))

    def __repr__(self) -> str:
        return f"Word({self.literal()!r})"

    def sort_key(self) -> tuple[int, bytes]:
        """Canonical enumeration order: length, then letter-index lex."""
        return (len(self.data), self.data)


def _require_same_alphabet(x: Word, y: Word) -> Alphabet:
    if x.alphabet != y.alphabet:
        raise AlphabetMismatch(f"{x!r} and {y!r} live over different alphabets")
    return x.alphabet


def concat(x: Word, y: Word) -> Word:
    """Juxtaposition xy; the empty word is two-sided neutral."""
    _require_same_alphabet(x, y)
    return Word(x.alphabet, x.data + y.data)


def higman_leq(w: Word, x: Word) -> bool:
    """Whether w embeds into x (a subword of x dominates w letterwise).

    Greedy leftmost matching; agreement with the exhaustive embedding
    search is a tested property, not an assumption.
    """
    alphabet = _require_same_alphabet(w, x)
    return kernels.higman_leq(w.data, x.data, alphabet.leq_flat, alphabet.k)


def strictly_less(w: Word, x: Word) -> bool:
    _require_same_alphabet(w, x)
    return w.data != x.data and higman_leq(w, x)


def enumerate_words(alphabet: Alphabet, max_len: int) -> Iterator[Word]:
    """Every word of length <= max_len exactly once, in canonical order
    (length first, then lexicographic by declared letter order)."""
    k = alphabet.k
    if max_len < 0:
        return
    yield Word(alphabet, b"")
    level = [b""]
    for _ in range(max_len):
        nxt = []
        for u in level:
            for c in range(k):
                v = u + bytes((c,))
                nxt.append(v)
                yield Word(alphabet, v)
        level = nxt


def sort_words(ws: Iterable[Word]) -> list[Word]:
    return sorted(ws, key=Word.sort_key)
