import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wordcones import (
    AlphabetMismatch,
    Word,
    concat,
    enumerate_words,
    higman_leq,
    strictly_less,
    validate_alphabet,
)

import bruteforce


def W(alphabet, s):
    return Word.parse(alphabet, s)


def test_concat(antichain2):
    assert concat(W(antichain2, "+-"), W(antichain2, "+")) == W(antichain2, "+-+")
    assert concat(W(antichain2, "+++"), W(antichain2, "--")) == W(antichain2, "+++--")


def test_concat_neutral(antichain2):
    w = W(antichain2, "-+-")
    empty = W(antichain2, "")
    assert concat(empty, w) == w
    assert concat(w, empty) == w


def test_concat_mismatch(antichain2, chain3):
    with pytest.raises(AlphabetMismatch):
        concat(W(antichain2, "+"), W(chain3, "a"))


def test_higman_subword_example(antichain2):
    assert higman_leq(W(antichain2, "--+"), W(antichain2, "-+-+-"))


def test_empty_word_least(antichain2):
    for w in enumerate_words(antichain2, 3):
        assert higman_leq(W(antichain2, ""), w)


def test_higman_with_letter_order(sharp3):
    # each # matches a dominating letter in order
    assert higman_leq(W(sharp3, "##"), W(sharp3, "+-"))
    assert not higman_leq(W(sharp3, "+"), W(sharp3, "#"))


def test_strictly_less(antichain2):
    assert strictly_less(W(antichain2, "+"), W(antichain2, "++"))
    assert not strictly_less(W(antichain2, "+-"), W(antichain2, "+-"))
    assert not strictly_less(W(antichain2, "-+"), W(antichain2, "+-"))
    assert not strictly_less(W(antichain2, "+-"), W(antichain2, "-+"))


def test_enumerate_words_order(antichain2):
    got = [w.literal() for w in enumerate_words(antichain2, 2)]
    assert got == ["", "+", "-", "++", "+-", "-+", "--"]


def test_enumerate_words_count(chain3):
    for max_len in range(5):
        count = sum(1 for _ in enumerate_words(chain3, max_len))
        k = chain3.k
        assert count == (k ** (max_len + 1) - 1) // (k - 1)


def test_literal_round_trip(sharp3):
    for w in enumerate_words(sharp3, 3):
        assert Word.parse(sharp3, w.literal()) == w


def test_multichar_names_dot_separated():
    a = validate_alphabet(["lo", "hi"], [("lo", "hi")])
    w = Word.from_letters(a, ["lo", "hi", "lo"])
    assert w.literal() == "lo.hi.lo"
    assert Word.parse(a, "lo.hi.lo") == w
    assert Word.parse(a, "") == Word(a, b"")


def _poset_samples():
    return [
        validate_alphabet(["+", "-"], []),
        validate_alphabet(["a", "b", "c"], [("a", "b"), ("b", "c")]),
        validate_alphabet(["n", "l", "m"], [("n", "l"), ("n", "m")]),
    ]


def test_partial_order_axioms():
    """Reflexive, transitive, antisymmetric on all pairs up to length 4."""
    for alphabet in _poset_samples()[:2]:
        ws = list(enumerate_words(alphabet, 4))
        for w in ws:
            assert higman_leq(w, w)
        rel = {}
        for w in ws:
            for x in ws:
                rel[(w.data, x.data)] = higman_leq(w, x)
        for w in ws:
            for x in ws:
                if rel[(w.data, x.data)] and w.data != x.data:
                    assert not rel[(x.data, w.data)]
        leq_pairs = [(w, x) for w in ws for x in ws if rel[(w.data, x.data)]]
        for w, x in leq_pairs:
            for y in ws:
                if rel[(x.data, y.data)]:
                    assert rel[(w.data, y.data)]


def test_ordered_monoid_compatibility():
    """w <= x implies wz <= xz and zw <= zx, exhaustively at small lengths."""
    for alphabet in _poset_samples():
        ws = list(enumerate_words(alphabet, 2))
        for w in ws:
            for x in ws:
                if higman_leq(w, x):
                    for z in ws:
                        assert higman_leq(concat(w, z), concat(x, z))
                        assert higman_leq(concat(z, w), concat(z, x))


def test_greedy_matches_bruteforce_exhaustive():
    for alphabet in _poset_samples():
        k, leq = alphabet.k, alphabet.leq_flat
        ws = bruteforce.words_upto(k, 4 if k == 2 else 3)
        for wd in ws:
            for xd in ws:
                assert kernels_agree(alphabet, wd, xd)


def kernels_agree(alphabet, wd, xd):
    w, x = Word(alphabet, wd), Word(alphabet, xd)
    return higman_leq(w, x) == bruteforce.embeds(
        wd, xd, alphabet.leq_flat, alphabet.k
    )


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_greedy_matches_bruteforce_random(data):
    alphabet = data.draw(st.sampled_from(_poset_samples()))
    k = alphabet.k
    wd = bytes(data.draw(st.lists(st.integers(0, k - 1), max_size=5)))
    xd = bytes(data.draw(st.lists(st.integers(0, k - 1), max_size=7)))
    assert kernels_agree(alphabet, wd, xd)


def test_letter_monotonicity():
    """Replacing a letter by a smaller one yields a smaller word."""
    for alphabet in _poset_samples():
        k = alphabet.k
        smaller = {
            c: [d for d in range(k) if d != c and alphabet.leq_idx(d, c)]
            for c in range(k)
        }
        for w in enumerate_words(alphabet, 3):
            for i, c in enumerate(w.data):
                for d in smaller[c]:
                    v = Word(alphabet, w.data[:i] + bytes((d,)) + w.data[i + 1:])
                    assert strictly_less(v, w)


def test_higman_mismatch(antichain2, chain3):
    with pytest.raises(AlphabetMismatch):
        higman_leq(W(antichain2, "+"), W(chain3, "a"))
