import pytest

from wordcones import validate_alphabet


@pytest.fixture(scope="session")
def antichain2():
    """Two incomparable letters; the zigzag-coding alphabet."""
    return validate_alphabet(["+", "-"], [])


@pytest.fixture(scope="session")
def chain3():
    return validate_alphabet(["a", "b", "c"], [("a", "b"), ("b", "c")])


@pytest.fixture(scope="session")
def wedge():
    """n below both l and m; l, m incomparable with no upper bound.

    The smallest conditional lattice on which stability under the four
    rules fails to characterize closedness (the search harness exhibits
    stable-but-not-closed sets here).
    """
    return validate_alphabet(["n", "l", "m"], [("n", "l"), ("n", "m")])


@pytest.fixture(scope="session")
def sharp3():
    """The directed-graph coding alphabet: # below + and -."""
    return validate_alphabet(["#", "+", "-"], [("#", "+"), ("#", "-")])


@pytest.fixture(scope="session")
def vshape():
    """a, b incomparable (and incompatible) below a common top t."""
    return validate_alphabet(["a", "b", "t"], [("a", "t"), ("b", "t")])


@pytest.fixture(scope="session")
def diamond():
    return validate_alphabet(
        ["o", "a", "b", "i"], [("o", "a"), ("o", "b"), ("a", "i"), ("b", "i")]
    )


@pytest.fixture(scope="session")
def twoplustwo():
    """Disjoint union of two 2-chains."""
    return validate_alphabet(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])


@pytest.fixture(scope="session")
def dualforest4():
    """a, b incompatible below c, which sits below d; not a lattice."""
    return validate_alphabet(["a", "b", "c", "d"], [("a", "c"), ("b", "c"), ("c", "d")])
