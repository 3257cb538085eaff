import random
from itertools import combinations

import pytest

from wordcones import (
    AlphabetMismatch,
    LowerSet,
    UpperSet,
    Word,
    closed_union,
    closure_down,
    closure_up,
    enumerate_words,
    intersect_upper,
    is_closed_lower,
    is_closed_upper,
    lower_cone,
    max_antichain,
    min_antichain,
    product,
    set_from_json,
    set_to_json,
    upper_cone,
)

import bruteforce


def W(alphabet, s):
    return Word.parse(alphabet, s)


def words(alphabet, *lits):
    return [W(alphabet, s) for s in lits]


# -- antichains ----------------------------------------------------------------


def test_min_antichain(antichain2):
    got = min_antichain(words(antichain2, "+", "++", "-"))
    assert got.literals() == ["+", "-"]


def test_max_antichain(antichain2):
    got = max_antichain(words(antichain2, "+", "++", "-"))
    assert got.literals() == ["-", "++"]


def test_empty_antichain(antichain2):
    assert min_antichain([], alphabet=antichain2).literals() == []
    assert max_antichain([], alphabet=antichain2).literals() == []


def test_antichain_idempotent(antichain2):
    once = min_antichain(words(antichain2, "+", "++", "-", "-+-"))
    again = min_antichain(once.words)
    assert once == again


def test_antichain_rejects_comparable(antichain2):
    with pytest.raises(ValueError):
        from wordcones import Antichain

        Antichain(antichain2, words(antichain2, "+", "++"))


# -- cones -----------------------------------------------------------------------


def test_lower_cone_worked_example(antichain2):
    cone = lower_cone(words(antichain2, "-+-+-", "+-+-+", "+--+-"))
    assert cone.literals() == ["--+", "+-+-"]


def test_lower_cone_empty_word(antichain2):
    assert lower_cone(words(antichain2, "")).literals() == [""]


def test_lower_cone_incompatible_letters(antichain2):
    assert lower_cone(words(antichain2, "+", "-")).literals() == [""]


def test_lower_cone_of_nothing_is_everything(antichain2):
    assert lower_cone([], alphabet=antichain2).is_all


def test_upper_cone_worked_example(antichain2):
    cone = upper_cone(words(antichain2, "--+", "+-+-"))
    assert cone.literals() == ["+-+-+", "+--+-", "-+-+-"]


def test_upper_cone_unbounded_letters(antichain2):
    cone = upper_cone(words(antichain2, "+", "-"))
    assert cone.literals() == ["+-", "-+"]


def test_upper_cone_empty_word(antichain2):
    assert upper_cone(words(antichain2, "")).literals() == [""]


def test_upper_cone_of_nothing(antichain2):
    assert upper_cone([], alphabet=antichain2).literals() == [""]


def test_closure_up_examples(antichain2, vshape):
    from wordcones import validate_alphabet

    assert closure_up(words(antichain2, "+", "-")).literals() == [""]
    chain2 = validate_alphabet(["a", "b"], [("a", "b")])
    assert closure_up(words(chain2, "aa", "b")).literals() == ["a"]
    got = closure_up(words(vshape, "ab", "t"))
    assert got.literals() == ["t", "ab", "ba"]


def test_closure_down_examples(antichain2, wedge):
    got = closure_down(words(wedge, "l", "m"))
    assert got.literals() == ["l", "m", "nn"]
    assert got.member(W(wedge, "nn"))
    assert closure_down(words(antichain2, "")).literals() == [""]
    assert closure_down([], alphabet=antichain2).literals() == [""]


def test_is_closed_upper_examples(antichain2):
    closed = UpperSet(antichain2, words(antichain2, "-+-+-", "+-+-+", "+--+-"))
    assert is_closed_upper(closed)
    assert not is_closed_upper(UpperSet(antichain2, words(antichain2, "+", "-")))


def test_is_closed_lower_examples(antichain2, wedge):
    assert not is_closed_lower(LowerSet(wedge, words(wedge, "l", "m")))
    assert is_closed_lower(LowerSet.all_words(antichain2))
    assert is_closed_lower(LowerSet(antichain2, words(antichain2, "+-")))
    # the empty lower set closes to the empty word alone, so it is not closed
    assert not is_closed_lower(LowerSet(antichain2, []))


def test_empty_upper_set_is_closed(antichain2):
    assert is_closed_upper(UpperSet(antichain2, []))


# -- algebra -----------------------------------------------------------------------


def test_product_upper(antichain2):
    up = lambda *lits: UpperSet(antichain2, words(antichain2, *lits))
    assert product(up("+"), up("-")) == up("+-")
    assert product(up(""), up("")) == up("")
    empty = UpperSet(antichain2, [])
    assert product(empty, up("+")) == empty
    assert product(up("+"), empty) == empty


def test_product_lower(antichain2):
    down = lambda *lits: LowerSet(antichain2, words(antichain2, *lits))
    assert product(down("+"), down("-")) == down("+-")
    allw = LowerSet.all_words(antichain2)
    assert product(allw, down("+")) == allw
    assert product(allw, LowerSet(antichain2, [])) == LowerSet(antichain2, [])


def test_closed_union(antichain2, sharp3):
    up2 = lambda *lits: UpperSet(antichain2, words(antichain2, *lits))
    assert closed_union([up2("+"), up2("-")]) == up2("")
    closed = closure_up(words(antichain2, "-+", "+-"))
    assert closed_union([closed]) == closed
    up3 = lambda *lits: UpperSet(sharp3, words(sharp3, *lits))
    assert closed_union([up3("+"), up3("-")]) == up3("#")


def test_intersect_upper(antichain2):
    up = lambda *lits: UpperSet(antichain2, words(antichain2, *lits))
    assert intersect_upper(up("+"), up("-")) == up("+-", "-+")
    z = up("+-", "--")
    assert intersect_upper(z, up("")) == z
    assert intersect_upper(up("+"), up("++")) == up("++")


def test_alphabet_mismatch(antichain2, chain3):
    with pytest.raises(AlphabetMismatch):
        product(
            UpperSet(antichain2, words(antichain2, "+")),
            UpperSet(chain3, words(chain3, "a")),
        )


# -- property suites -----------------------------------------------------------------


def _upto(alphabet, n):
    return list(enumerate_words(alphabet, n))


def test_galois_axioms_exhaustive_pairs(antichain2):
    """Extensive + idempotent composites over every generator pair."""
    pool = _upto(antichain2, 3)
    for pair in combinations(pool, 2):
        ys = list(pair)
        closed = closure_up(ys)
        for y in ys:
            assert closed.member(y)
        low = lower_cone(ys)
        low_again = lower_cone(closed.gens.words)
        assert low == low_again  # nabla . delta . nabla = nabla
    for y in pool:
        down = closure_down([y])
        assert upper_cone(down.gens.words) == upper_cone([y])  # delta . nabla . delta = delta


def test_galois_antitone(chain3, wedge):
    rng = random.Random(11)
    for alphabet in (chain3, wedge):
        pool = _upto(alphabet, 3)
        for _ in range(40):
            xs = rng.sample(pool, 2)
            ys = xs + [rng.choice(pool)]
            small, big = lower_cone(ys), lower_cone(xs)
            # X subset Y implies Y-nabla subset X-nabla
            if small.is_all:
                assert big.is_all
            else:
                for g in small.gens:
                    assert big.member(g)


def test_principal_sets_closed(antichain2, chain3, wedge, diamond):
    for alphabet in (antichain2, chain3, wedge, diamond):
        for x in _upto(alphabet, 3):
            assert is_closed_upper(UpperSet(alphabet, [x]))
            assert is_closed_lower(LowerSet(alphabet, [x]))


def test_cones_respect_concatenation(antichain2, wedge):
    """Cone of a product equals the product of the cones, on random pairs."""
    rng = random.Random(23)
    for alphabet in (antichain2, wedge):
        pool = _upto(alphabet, 3)
        for _ in range(60):
            xs = rng.sample(pool, rng.randint(1, 2))
            ys = rng.sample(pool, rng.randint(1, 2))
            xy = [Word(alphabet, a.data + b.data) for a in xs for b in ys]
            assert lower_cone(xy) == product(lower_cone(xs), lower_cone(ys))
            assert upper_cone(xy) == product(upper_cone(xs), upper_cone(ys))


def test_cone_of_empty_set_conventions(antichain2):
    # empty-set cones are the whole monoid; product with the empty SET is empty
    assert lower_cone([], alphabet=antichain2).is_all
    assert upper_cone([], alphabet=antichain2).literals() == [""]
    empty_up = UpperSet(antichain2, [])
    z = UpperSet(antichain2, words(antichain2, "+-"))
    assert product(empty_up, z) == empty_up


def test_product_distributes_over_meet_and_join(antichain2):
    """Multiplication distributes over intersection and closed union for
    closed operands, on random closed triples."""
    rng = random.Random(5)
    pool = _upto(antichain2, 3)

    def random_closed():
        return closure_up(rng.sample(pool, rng.randint(1, 2)))

    for _ in range(40):
        y, z1, z2 = random_closed(), random_closed(), random_closed()
        lhs = product(y, intersect_upper(z1, z2))
        rhs = intersect_upper(product(y, z1), product(y, z2))
        assert lhs == rhs
        lhs = product(y, closed_union([z1, z2]))
        rhs = closed_union([product(y, z1), product(y, z2)])
        assert lhs == rhs
        # right-hand versions
        assert product(intersect_upper(z1, z2), y) == intersect_upper(
            product(z1, y), product(z2, y)
        )
        assert product(closed_union([z1, z2]), y) == closed_union(
            [product(z1, y), product(z2, y)]
        )


def test_lower_sets_closed_when_pairs_bounded_above(antichain2, chain3, vshape, diamond):
    """Finitely generated lower sets are closed when bounded-below pairs of
    letters are bounded above."""
    rng = random.Random(17)
    for alphabet in (antichain2, chain3, vshape, diamond):
        pool = _upto(alphabet, 3)
        for _ in range(25):
            gens = rng.sample(pool, rng.randint(1, 3))
            assert is_closed_lower(LowerSet(alphabet, gens))


def test_wedge_lower_set_counterexample(wedge):
    low = LowerSet(wedge, words(wedge, "l", "m"))
    assert not is_closed_lower(low)
    closed = closure_down(low.gens.words)
    witness = W(wedge, "nn")
    assert closed.member(witness) and not low.member(witness)


def test_minimal_superword_length_bound(antichain2, wedge):
    rng = random.Random(3)
    for alphabet in (antichain2, wedge):
        pool = [w for w in _upto(alphabet, 3) if len(w) > 0]
        for _ in range(30):
            xs = rng.sample(pool, rng.randint(1, 3))
            cone = upper_cone(xs)
            total = sum(len(x) for x in xs)
            assert all(len(g) <= total for g in cone.gens)
        # bounded enumeration recomputes the same antichain (small instances)
        for _ in range(12):
            xs = rng.sample(pool, 2)
            total = sum(len(x) for x in xs)
            if total > 6:
                continue
            cone = upper_cone(xs)
            got = {g.data for g in cone.gens}
            members = bruteforce.upper_cone_members(
                alphabet, [x.data for x in xs], total
            )
            assert got == bruteforce.minimal_of(alphabet, list(members))


def test_closure_membership_matches_bruteforce(antichain2):
    """Truncated brute-force Galois closure agrees with the antichain path
    on every word up to length 6."""
    rng = random.Random(41)
    pool = _upto(antichain2, 3)
    universe = bruteforce.words_upto(antichain2.k, 6)
    for _ in range(15):
        ys = rng.sample(pool, rng.randint(1, 3))
        closed = closure_up(ys)
        oracle = bruteforce.closure_up_members(
            antichain2, [y.data for y in ys], 6
        )
        for wd in universe:
            assert closed.member(Word(antichain2, wd)) == (wd in oracle)


def test_set_json_round_trip(antichain2):
    z = UpperSet(antichain2, words(antichain2, "+-", "--"))
    assert set_from_json(antichain2, set_to_json(z)) == z
    low = LowerSet.all_words(antichain2)
    assert set_from_json(antichain2, set_to_json(low)) == low
