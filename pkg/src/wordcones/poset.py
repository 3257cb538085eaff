"""Finite ordered alphabets: order queries, meets, compatibility, classification.

An alphabet is a finite poset of letters.  The order is entered as cover
pairs ``(a, b)`` meaning ``a < b``; the stored relation is the
reflexive-transitive closure of the input.  Letter indices follow the
declared order of the letter list, which fixes the canonical enumeration
order used everywhere else in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CycleError, DuplicateLetterError, UnknownLetter


@dataclass(frozen=True)
class AlphabetClass:
    """Structural flags of an alphabet, from exhaustive pairwise checks.

    ``compatible_pairs_meet_and_bounded`` holds when every pair of letters
    bounded below has a meet and an upper bound; it gates deciding
    closedness of upper sets by syntactic rules alone.
    ``compatible_pairs_bounded_above`` gates closedness of finitely
    generated lower sets.
    """

    is_antichain: bool
    is_chain: bool
    is_disjoint_union_of_chains: bool
    is_dual_forest: bool
    is_lattice: bool
    is_conditional_meet_semilattice: bool
    compatible_pairs_meet_and_bounded: bool
    compatible_pairs_bounded_above: bool

    def to_json(self) -> dict:
        return {
            "is_antichain": self.is_antichain,
            "is_chain": self.is_chain,
            "is_disjoint_union_of_chains": self.is_disjoint_union_of_chains,
            "is_dual_forest": self.is_dual_forest,
            "is_lattice": self.is_lattice,
            "is_conditional_meet_semilattice": self.is_conditional_meet_semilattice,
            "compatible_pairs_meet_and_bounded": self.compatible_pairs_meet_and_bounded,
            "compatible_pairs_bounded_above": self.compatible_pairs_bounded_above,
        }


class Alphabet:
    """An immutable finite poset of letters.

    ``leq_flat`` is the row-major k*k closure matrix as bytes
    (``leq_flat[a*k + b] == 1`` iff letter ``a`` is below-or-equal letter
    ``b``); it is the representation the kernels consume.
    """

    __slots__ = (
        "letters",
        "covers",
        "k",
        "leq_flat",
        "single_char",
        "_index",
        "_meet",
        "_join",
        "_mub",
        "_class",
    )

    def __init__(self, letters: Sequence[str], covers: Iterable[tuple[str, str]]):
        letters = tuple(str(x) for x in letters)
        if len(set(letters)) != len(letters):
            raise DuplicateLetterError(f"duplicate letter names in {letters!r}")
        if not letters:
            raise DuplicateLetterError("alphabet must contain at least one letter")
        index = {name: i for i, name in enumerate(letters)}
        k = len(letters)

        rel = bytearray(k * k)
        for i in range(k):
            rel[i * k + i] = 1
        cover_list = []
        for a, b in covers:
            if a not in index:
                raise UnknownLetter(f"unknown letter {a!r} in cover pair")
            if b not in index:
                raise UnknownLetter(f"unknown letter {b!r} in cover pair")
            cover_list.append((a, b))
            rel[index[a] * k + index[b]] = 1
        # Warshall closure; k is small everywhere this package is used.
        for m in range(k):
            for i in range(k):
                if rel[i * k + m]:
                    row_m = m * k
                    row_i = i * k
                    for j in range(k):
                        if rel[row_m + j]:
                            rel[row_i + j] = 1
        for i in range(k):
            for j in range(i + 1, k):
                if rel[i * k + j] and rel[j * k + i]:
                    raise CycleError(
                        f"letters {letters[i]!r} and {letters[j]!r} are mutually below each other"
                    )

        self.letters = letters
        self.covers = tuple(cover_list)
        self.k = k
        self.leq_flat = bytes(rel)
        self.single_char = all(len(name) == 1 for name in letters)
        self._index = index
        self._meet = None
        self._join = None
        self._mub = None
        self._class = None

    # -- basic queries ---------------------------------------------------

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownLetter(f"letter {name!r} not in alphabet {self.letters!r}") from None

    def leq_idx(self, a: int, b: int) -> bool:
        return bool(self.leq_flat[a * self.k + b])

    def lower_bounds_idx(self, a: int, b: int) -> list[int]:
        k = self.k
        rel = self.leq_flat
        return [c for c in range(k) if rel[c * k + a] and rel[c * k + b]]

    def upper_bounds_idx(self, a: int, b: int) -> list[int]:
        k = self.k
        rel = self.leq_flat
        return [c for c in range(k) if rel[a * k + c] and rel[b * k + c]]

    def _meet_table(self) -> list[int]:
        if self._meet is None:
            k = self.k
            table = []
            for a in range(k):
                for b in range(k):
                    lbs = self.lower_bounds_idx(a, b)
                    greatest = -1
                    for c in lbs:
                        if all(self.leq_idx(d, c) for d in lbs):
                            greatest = c
                            break
                    table.append(greatest)
            self._meet = table
        return self._meet

    def _join_table(self) -> list[int]:
        if self._join is None:
            k = self.k
            table = []
            for a in range(k):
                for b in range(k):
                    ubs = self.upper_bounds_idx(a, b)
                    least = -1
                    for c in ubs:
                        if all(self.leq_idx(c, d) for d in ubs):
                            least = c
                            break
                    table.append(least)
            self._join = table
        return self._join

    def meet_idx(self, a: int, b: int) -> int:
        """Greatest common lower bound as a letter index, or -1."""
        return self._meet_table()[a * self.k + b]

    def join_idx(self, a: int, b: int) -> int:
        return self._join_table()[a * self.k + b]

    def mub_idx(self, a: int, b: int) -> tuple[int, ...]:
        """Minimal common upper bounds of two letters (letter indices)."""
        if self._mub is None:
            self._mub = {}
        key = (a, b) if a <= b else (b, a)
        if key not in self._mub:
            ubs = self.upper_bounds_idx(a, b)
            self._mub[key] = tuple(
                c for c in ubs if not any(d != c and self.leq_idx(d, c) for d in ubs)
            )
        return self._mub[key]

    def compatible_idx(self, a: int, b: int) -> bool:
        return bool(self.lower_bounds_idx(a, b))

    def down_letters_idx(self, idxs: Iterable[int]) -> tuple[int, ...]:
        """All letters below-or-equal some letter of ``idxs``, ascending."""
        k = self.k
        rel = self.leq_flat
        wanted = set(idxs)
        return tuple(c for c in range(k) if any(rel[c * k + a] for a in wanted))

    # -- value semantics -------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Alphabet)
            and self.letters == other.letters
            and self.leq_flat == other.leq_flat
        )

    def __hash__(self) -> int:
        return hash((self.letters, self.leq_flat))

    def __repr__(self) -> str:
        return f"Alphabet({list(self.letters)!r}, covers={list(self.covers)!r})"

    def to_json(self) -> dict:
        return {"letters": list(self.letters), "covers": [list(c) for c in self.covers]}


def validate_alphabet(letters: Sequence[str], cover_pairs: Iterable[tuple[str, str]] = ()) -> Alphabet:
    """Build an alphabet from letter names and cover pairs ``(a, b)`` meaning a < b.

    Any consistent pair list is accepted (the closure is taken); cyclic
    input raises :class:`CycleError`, duplicate names
    :class:`DuplicateLetterError`.
    """
    return Alphabet(letters, cover_pairs)


def alphabet_from_json(doc: dict) -> Alphabet:
    return validate_alphabet(doc["letters"], [tuple(p) for p in doc.get("covers", [])])


def leq_letter(alphabet: Alphabet, a: str, b: str) -> bool:
    """Whether letter ``a`` is below-or-equal letter ``b``."""
    return alphabet.leq_idx(alphabet.index(a), alphabet.index(b))


def meet_letter(alphabet: Alphabet, a: str, b: str) -> str | None:
    """Greatest common lower bound of two letters, or None.

    None covers both "no common lower bound" and "lower bounds exist but
    no greatest one"; use :func:`compatible` to tell the cases apart.
    """
    m = alphabet.meet_idx(alphabet.index(a), alphabet.index(b))
    return None if m < 0 else alphabet.letters[m]


def join_letter(alphabet: Alphabet, a: str, b: str) -> str | None:
    j = alphabet.join_idx(alphabet.index(a), alphabet.index(b))
    return None if j < 0 else alphabet.letters[j]


def upper_bounds(alphabet: Alphabet, a: str, b: str) -> set[str]:
    """All common upper bounds of two letters."""
    return {alphabet.letters[c] for c in alphabet.upper_bounds_idx(alphabet.index(a), alphabet.index(b))}


def compatible(alphabet: Alphabet, a: str, b: str) -> bool:
    """Whether two letters have a common lower bound."""
    return alphabet.compatible_idx(alphabet.index(a), alphabet.index(b))


def _comparable(alphabet: Alphabet, a: int, b: int) -> bool:
    return alphabet.leq_idx(a, b) or alphabet.leq_idx(b, a)


def classify(alphabet: Alphabet) -> AlphabetClass:
    """Compute all structural flags by brute force over letter pairs."""
    if alphabet._class is not None:
        return alphabet._class
    k = alphabet.k
    pairs = [(a, b) for a in range(k) for b in range(a + 1, k)]

    is_antichain = not any(_comparable(alphabet, a, b) for a, b in pairs)
    is_chain = all(_comparable(alphabet, a, b) for a, b in pairs)

    # Connected components of the comparability graph; a disjoint union of
    # chains means every component is totally ordered.
    comp = list(range(k))

    def find(x):
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    for a, b in pairs:
        if _comparable(alphabet, a, b):
            comp[find(a)] = find(b)
    is_disjoint_union_of_chains = all(
        _comparable(alphabet, a, b) for a, b in pairs if find(a) == find(b)
    )

    is_dual_forest = all(
        alphabet.compatible_idx(a, b) <= _comparable(alphabet, a, b) for a, b in pairs
    )
    is_lattice = all(
        alphabet.meet_idx(a, b) >= 0 and alphabet.join_idx(a, b) >= 0 for a, b in pairs
    )
    compatible_pairs = [(a, b) for a, b in pairs if alphabet.compatible_idx(a, b)]
    is_cms = all(alphabet.meet_idx(a, b) >= 0 for a, b in compatible_pairs)
    bounded_above = all(alphabet.upper_bounds_idx(a, b) for a, b in compatible_pairs)
    meet_and_bounded = is_cms and bounded_above

    result = AlphabetClass(
        is_antichain=is_antichain,
        is_chain=is_chain,
        is_disjoint_union_of_chains=is_disjoint_union_of_chains,
        is_dual_forest=is_dual_forest,
        is_lattice=is_lattice,
        is_conditional_meet_semilattice=is_cms,
        compatible_pairs_meet_and_bounded=meet_and_bounded,
        compatible_pairs_bounded_above=bounded_above,
    )
    alphabet._class = result
    return result


def is_conditional_lattice(alphabet: Alphabet) -> bool:
    """Every bounded-below pair has a meet and every bounded-above pair a join."""
    k = alphabet.k
    for a in range(k):
        for b in range(a + 1, k):
            if alphabet.compatible_idx(a, b) and alphabet.meet_idx(a, b) < 0:
                return False
            if alphabet.upper_bounds_idx(a, b) and alphabet.join_idx(a, b) < 0:
                return False
    return True
