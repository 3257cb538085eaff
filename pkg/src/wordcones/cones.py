"""Antichain-represented upper/lower sets, cone operators, Galois closures.

Every set is kept canonical: an upper set is its antichain of minimal
elements, a lower set its antichain of maximal elements (or the marker
ALL for the whole monoid, which is not finitely generated as a lower set
over a nonempty alphabet).  Canonical representation makes set equality
plain list equality.

Conventions for the degenerate cases follow the cone calculus: the lower
and upper cones of the empty set are the whole monoid; the upper cone of
the whole monoid is empty, its lower cone is the empty word alone.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import automata, kernels
from .errors import AlphabetMismatch
from .poset import Alphabet
from .words import Word, sort_words


class Antichain:
    """A canonically sorted tuple of pairwise incomparable words."""

    __slots__ = ("alphabet", "words")

    def __init__(self, alphabet: Alphabet, ws: Sequence[Word], _trusted: bool = False):
        ws = tuple(sort_words(ws))
        if not _trusted:
            for w in ws:
                if w.alphabet != alphabet:
                    raise AlphabetMismatch("antichain member over a different alphabet")
            leq, k = alphabet.leq_flat, alphabet.k
            for i, w in enumerate(ws):
                for v in ws[i + 1:]:
                    if kernels.higman_leq(w.data, v.data, leq, k) or kernels.higman_leq(
                        v.data, w.data, leq, k
                    ):
                        raise ValueError(f"{w!r} and {v!r} are comparable")
        self.alphabet = alphabet
        self.words = ws

    def __iter__(self):
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Antichain)
            and self.alphabet == other.alphabet
            and tuple(w.data for w in self.words) == tuple(w.data for w in other.words)
        )

    def __hash__(self) -> int:
        return hash(tuple(w.data for w in self.words))

    def literals(self) -> list[str]:
        return [w.literal() for w in self.words]

    def __repr__(self) -> str:
        return f"Antichain({self.literals()!r})"


def _collect(ws: Iterable[Word]) -> tuple[Alphabet | None, list[bytes]]:
    alphabet = None
    data = []
    for w in ws:
        if alphabet is None:
            alphabet = w.alphabet
        elif w.alphabet != alphabet:
            raise AlphabetMismatch("mixed alphabets in word set")
        data.append(w.data)
    return alphabet, data


def min_antichain(ws: Iterable[Word], alphabet: Alphabet | None = None) -> Antichain:
    """Minimal elements of a finite word set; idempotent."""
    found, data = _collect(ws)
    alphabet = found or alphabet
    if alphabet is None:
        raise ValueError("empty word set needs an explicit alphabet")
    keep = kernels.minimal_elements(data, alphabet.leq_flat, alphabet.k)
    return Antichain(alphabet, [Word(alphabet, b) for b in keep], _trusted=True)


def max_antichain(ws: Iterable[Word], alphabet: Alphabet | None = None) -> Antichain:
    """Maximal elements of a finite word set; idempotent."""
    found, data = _collect(ws)
    alphabet = found or alphabet
    if alphabet is None:
        raise ValueError("empty word set needs an explicit alphabet")
    keep = kernels.maximal_elements(data, alphabet.leq_flat, alphabet.k)
    return Antichain(alphabet, [Word(alphabet, b) for b in keep], _trusted=True)


class UpperSet:
    """An upward-closed set, canonically its antichain of minimal elements.

    The empty antichain denotes the empty set; the antichain of the empty
    word alone denotes the whole monoid.
    """

    __slots__ = ("alphabet", "gens")

    def __init__(self, alphabet: Alphabet, gens: Antichain | Iterable[Word]):
        if not isinstance(gens, Antichain):
            gens = min_antichain(gens, alphabet=alphabet)
        if gens.alphabet != alphabet:
            raise AlphabetMismatch("generators over a different alphabet")
        self.alphabet = alphabet
        self.gens = gens

    @property
    def is_empty(self) -> bool:
        return len(self.gens) == 0

    @property
    def is_universe(self) -> bool:
        return len(self.gens) == 1 and len(self.gens.words[0]) == 0

    def member(self, w: Word) -> bool:
        if w.alphabet != self.alphabet:
            raise AlphabetMismatch("membership query over a different alphabet")
        leq, k = self.alphabet.leq_flat, self.alphabet.k
        return any(kernels.higman_leq(g.data, w.data, leq, k) for g in self.gens)

    def __eq__(self, other) -> bool:
        return isinstance(other, UpperSet) and self.gens == other.gens

    def __hash__(self) -> int:
        return hash(("up", self.gens))

    def literals(self) -> list[str]:
        return self.gens.literals()

    def __repr__(self) -> str:
        return f"UpperSet(↑{self.literals()!r})"


class LowerSet:
    """A downward-closed set: either ALL (the whole monoid) or the antichain
    of maximal elements; the empty antichain denotes the empty set."""

    __slots__ = ("alphabet", "gens", "is_all")

    def __init__(self, alphabet: Alphabet, gens: Antichain | Iterable[Word] | None,
                 is_all: bool = False):
        self.alphabet = alphabet
        self.is_all = is_all
        if is_all:
            self.gens = None
        else:
            if not isinstance(gens, Antichain):
                gens = max_antichain(gens, alphabet=alphabet)
            if gens.alphabet != alphabet:
                raise AlphabetMismatch("generators over a different alphabet")
            self.gens = gens

    @classmethod
    def all_words(cls, alphabet: Alphabet) -> "LowerSet":
        return cls(alphabet, None, is_all=True)

    @property
    def is_empty(self) -> bool:
        return not self.is_all and len(self.gens) == 0

    def member(self, w: Word) -> bool:
        if w.alphabet != self.alphabet:
            raise AlphabetMismatch("membership query over a different alphabet")
        if self.is_all:
            return True
        leq, k = self.alphabet.leq_flat, self.alphabet.k
        return any(kernels.higman_leq(w.data, g.data, leq, k) for g in self.gens)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LowerSet):
            return False
        if self.is_all or other.is_all:
            return self.is_all == other.is_all and self.alphabet == other.alphabet
        return self.gens == other.gens

    def __hash__(self) -> int:
        return hash(("down", "ALL" if self.is_all else self.gens))

    def literals(self) -> list[str] | None:
        return None if self.is_all else self.gens.literals()

    def __repr__(self) -> str:
        return "LowerSet(ALL)" if self.is_all else f"LowerSet(↓{self.literals()!r})"


# -- cone operators ---------------------------------------------------------


def _pair_lower_bounds(alphabet: Alphabet, a: bytes, b: bytes) -> list[bytes]:
    """All common lower bounds of two words.

    Exact: a common lower bound embeds into both words, so its length is
    at most the shorter one's and its letters lie below letters occurring
    in both words.
    """
    k, leq = alphabet.k, alphabet.leq_flat
    down_a = set(alphabet.down_letters_idx(set(a)))
    down_b = set(alphabet.down_letters_idx(set(b)))
    cand = bytes(sorted(down_a & down_b))
    maxlen = min(len(a), len(b))
    return kernels.common_lower_bounds(a, b, cand, maxlen, leq, k)


def lower_cone(ws: Iterable[Word], alphabet: Alphabet | None = None) -> LowerSet:
    """The words below every member of a finite set (its lower cone).

    The empty set's lower cone is the whole monoid.  Otherwise the cone is
    a fold of exact pairwise intersections of principal lower sets.
    """
    found, data = _collect(ws)
    alphabet = found or alphabet
    if alphabet is None:
        raise ValueError("empty word set needs an explicit alphabet")
    if not data:
        return LowerSet.all_words(alphabet)
    data = sorted(set(data), key=lambda b: (len(b), b))
    k, leq = alphabet.k, alphabet.leq_flat
    cur = kernels.maximal_elements([data[0]], leq, k)
    for y in data[1:]:
        pool: set[bytes] = set()
        for g in cur:
            pool.update(_pair_lower_bounds(alphabet, g, y))
        cur = kernels.maximal_elements(list(pool), leq, k)
    return LowerSet(alphabet, Antichain(alphabet, [Word(alphabet, b) for b in cur], _trusted=True))


def upper_cone(ws: Iterable[Word], alphabet: Alphabet | None = None) -> UpperSet:
    """The words above every member of a finite set (its upper cone),
    computed from the intersection product of the per-word automata."""
    found, data = _collect(ws)
    alphabet = found or alphabet
    if alphabet is None:
        raise ValueError("empty word set needs an explicit alphabet")
    if not data:
        return UpperSet(alphabet, [Word(alphabet, b"")])
    # dominated members do not change the intersection of principal cones
    keep = kernels.maximal_elements(data, alphabet.leq_flat, alphabet.k)
    dfa = automata.cone_dfa(alphabet, [Word(alphabet, b) for b in keep])
    return UpperSet(alphabet, automata.minimal_words(dfa))


def closure_up(ws: Iterable[Word], alphabet: Alphabet | None = None) -> UpperSet:
    """Galois closure of a finite set inside the upper-set completion."""
    ws = list(ws)
    found, _ = _collect(ws)
    alphabet = found or alphabet
    if alphabet is None:
        raise ValueError("empty word set needs an explicit alphabet")
    low = lower_cone(ws, alphabet=alphabet)
    if low.is_all:
        return UpperSet(alphabet, ())
    return upper_cone(low.gens.words, alphabet=alphabet)


def closure_down(ws: Iterable[Word], alphabet: Alphabet | None = None) -> LowerSet:
    """Dual Galois closure inside the lower-set completion."""
    ws = list(ws)
    found, _ = _collect(ws)
    alphabet = found or alphabet
    if alphabet is None:
        raise ValueError("empty word set needs an explicit alphabet")
    up = upper_cone(ws, alphabet=alphabet)
    if up.is_empty:
        return LowerSet.all_words(alphabet)
    return lower_cone(up.gens.words, alphabet=alphabet)


def is_closed_upper(z: UpperSet) -> bool:
    return closure_up(z.gens.words, alphabet=z.alphabet) == z


def is_closed_lower(x: LowerSet) -> bool:
    """ALL counts as closed: the whole monoid belongs to the completion even
    though the raw operators send it to the principal lower set of the
    empty word."""
    if x.is_all:
        return True
    return closure_down(x.gens.words, alphabet=x.alphabet) == x


# -- algebra -----------------------------------------------------------------


def product(x, y):
    """Concatenation of two upper sets or two lower sets.

    For upper sets the product of the generator antichains generates the
    product set; same for lower sets, where ALL times a nonempty set is
    ALL again (every word is below its own extension by a member)."""
    if isinstance(x, UpperSet) and isinstance(y, UpperSet):
        if x.alphabet != y.alphabet:
            raise AlphabetMismatch("product over different alphabets")
        alphabet = x.alphabet
        if x.is_empty or y.is_empty:
            return UpperSet(alphabet, ())
        pairs = [Word(alphabet, a.data + b.data) for a in x.gens for b in y.gens]
        return UpperSet(alphabet, min_antichain(pairs, alphabet=alphabet))
    if isinstance(x, LowerSet) and isinstance(y, LowerSet):
        if x.alphabet != y.alphabet:
            raise AlphabetMismatch("product over different alphabets")
        alphabet = x.alphabet
        if x.is_empty or y.is_empty:
            return LowerSet(alphabet, ())
        if x.is_all or y.is_all:
            return LowerSet.all_words(alphabet)
        pairs = [Word(alphabet, a.data + b.data) for a in x.gens for b in y.gens]
        return LowerSet(alphabet, max_antichain(pairs, alphabet=alphabet))
    raise TypeError("product expects two upper sets or two lower sets")


def closed_union(zs: Sequence[UpperSet], alphabet: Alphabet | None = None) -> UpperSet:
    """Join in the completion: the closure of the set-theoretic union."""
    if zs:
        alphabet = zs[0].alphabet
    if alphabet is None:
        raise ValueError("empty family needs an explicit alphabet")
    gens: list[Word] = []
    for z in zs:
        if z.alphabet != alphabet:
            raise AlphabetMismatch("closed_union over different alphabets")
        gens.extend(z.gens.words)
    return closure_up(gens, alphabet=alphabet)


def intersect_upper(x: UpperSet, y: UpperSet) -> UpperSet:
    """Set-theoretic intersection (the completion's supremum), via pairwise
    upper cones of generators."""
    if x.alphabet != y.alphabet:
        raise AlphabetMismatch("intersection over different alphabets")
    alphabet = x.alphabet
    if x.is_empty or y.is_empty:
        return UpperSet(alphabet, ())
    acc: list[Word] = []
    for a in x.gens:
        for b in y.gens:
            acc.extend(upper_cone([a, b], alphabet=alphabet).gens.words)
    return UpperSet(alphabet, min_antichain(acc, alphabet=alphabet))


# -- JSON ---------------------------------------------------------------------


def set_to_json(s) -> dict:
    if isinstance(s, UpperSet):
        return {"kind": "upper", "gens": s.literals()}
    if isinstance(s, LowerSet):
        if s.is_all:
            return {"kind": "all", "gens": []}
        return {"kind": "lower", "gens": s.literals()}
    raise TypeError(f"not a word set: {s!r}")


def set_from_json(alphabet: Alphabet, doc: dict):
    kind = doc.get("kind")
    gens = [Word.parse(alphabet, lit) for lit in doc.get("gens", [])]
    if kind == "upper":
        return UpperSet(alphabet, gens)
    if kind == "lower":
        return LowerSet(alphabet, gens)
    if kind == "all":
        return LowerSet.all_words(alphabet)
    raise ValueError(f"unknown set kind {kind!r}")
