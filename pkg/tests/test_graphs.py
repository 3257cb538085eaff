import pytest

from wordcones import (
    DoubleArcError,
    LoopError,
    UnknownVertex,
    Word,
    ZIGZAG_ALPHABET,
    build_distance_table,
    code_zigzag,
    concat,
    distance_antichain,
    distance_dfa,
    distance_lower_cone,
    embeddable_verdict,
    enumerate_words,
    graph_from_json,
    is_distance_closed,
    reverse_code,
    validate_graph,
)

import bruteforce

FIG1_CODE = "+++--+--"
FIG1_REVERSE = "++-++---"


def W(s):
    return Word.parse(ZIGZAG_ALPHABET, s)


def zigzag_graph():
    """The eight-arc zigzag: three up, two down, one up, two down."""
    vs = [f"v{i}" for i in range(9)]
    arcs = [
        ("v0", "v1"), ("v1", "v2"), ("v2", "v3"),
        ("v4", "v3"), ("v5", "v4"),
        ("v5", "v6"),
        ("v7", "v6"), ("v8", "v7"),
    ]
    return validate_graph(vs, arcs)


def cycle3():
    return validate_graph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])


def test_validate_graph_examples():
    assert len(cycle3().arcs) == 3
    assert validate_graph(["a", "b"], [("a", "b")]).arcs == frozenset({("a", "b")})
    with pytest.raises(DoubleArcError):
        validate_graph(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(LoopError):
        validate_graph(["a"], [("a", "a")])
    with pytest.raises(UnknownVertex):
        validate_graph(["a"], [("a", "b")])


def test_code_zigzag_figure():
    assert code_zigzag(FIG1_CODE) == W(FIG1_CODE)
    assert code_zigzag(["forward", "backward"]) == W("+-")
    assert code_zigzag("") == W("")


def test_reverse_code():
    assert reverse_code(W(FIG1_CODE)) == W(FIG1_REVERSE)
    assert reverse_code(W("")) == W("")
    assert reverse_code(reverse_code(W("+--+"))) == W("+--+")


def test_single_arc_distances():
    g = validate_graph(["a", "b"], [("a", "b")])
    assert distance_antichain(g, "a", "b").literals() == ["+"]
    assert distance_antichain(g, "b", "a").literals() == ["-"]
    assert distance_antichain(g, "a", "a").literals() == [""]
    assert distance_antichain(g, "b", "b").literals() == [""]


def test_cycle_distance():
    g = cycle3()
    assert distance_antichain(g, "a", "b").literals() == ["+", "--"]
    assert distance_antichain(g, "a", "a").literals() == [""]


def test_distance_lower_cones():
    g = validate_graph(["a", "b"], [("a", "b")])
    assert distance_lower_cone(g, "a", "b").literals() == ["+"]
    assert distance_lower_cone(g, "a", "a").literals() == [""]
    assert distance_lower_cone(cycle3(), "a", "b").literals() == [""]


def test_unknown_vertex():
    g = cycle3()
    with pytest.raises(UnknownVertex):
        distance_dfa(g, "a", "z")


def test_is_distance_closed():
    g = validate_graph(["a", "b"], [("a", "b")])
    assert is_distance_closed(g, "a", "b") is True
    res = is_distance_closed(cycle3(), "a", "b")
    assert res == W("-")


def test_zigzag_graph_all_pairs_closed():
    g = zigzag_graph()
    report = embeddable_verdict(g)
    assert report.embeddable
    assert len(report.table.entries) == 81
    assert all(entry.closed for entry in report.table.entries.values())


def test_cycle_not_embeddable():
    report = embeddable_verdict(cycle3())
    assert not report.embeddable
    failing = {(a, b): w.literal() for a, b, w in report.failing}
    assert failing[("a", "b")] == "-"


def test_single_vertex_embeddable():
    report = embeddable_verdict(validate_graph(["a"], []))
    assert report.embeddable
    assert report.table.entries[("a", "a")].distance.is_universe


def test_zigzag_code_in_own_distance():
    g = zigzag_graph()
    d = distance_antichain(g, "v0", "v8")
    assert d.member(W(FIG1_CODE))
    assert distance_antichain(g, "v8", "v0").member(W(FIG1_REVERSE))


def test_distances_upward_closed():
    g = cycle3()
    d = distance_dfa(g, "a", "b")
    leq, k = ZIGZAG_ALPHABET.leq_flat, ZIGZAG_ALPHABET.k
    members = [w for w in enumerate_words(ZIGZAG_ALPHABET, 6) if d.accepts(w)]
    for w in members:
        for x in enumerate_words(ZIGZAG_ALPHABET, 6):
            if bruteforce.embeds(w.data, x.data, leq, k):
                assert d.accepts(x)


def test_triangle_composition():
    """Concatenating lazy walks composes distances: d(a,b) d(b,c) stays
    inside d(a,c)."""
    for g in (cycle3(), zigzag_graph()):
        verts = g.vertices[:4]
        for a in verts:
            for b in verts:
                for c in verts:
                    dab = distance_antichain(g, a, b)
                    dbc = distance_antichain(g, b, c)
                    dac = distance_dfa(g, a, c)
                    for u in dab.gens:
                        for v in dbc.gens:
                            assert dac.accepts(concat(u, v))


def test_reversal_symmetry():
    g = cycle3()
    for a in g.vertices:
        for b in g.vertices:
            d = distance_dfa(g, a, b)
            rd = distance_dfa(g, b, a)
            for w in enumerate_words(ZIGZAG_ALPHABET, 5):
                assert d.accepts(w) == rd.accepts(reverse_code(w))


def test_lazy_walk_matches_homomorphism_oracle():
    """The lazy-walk automaton recognizes exactly the codes of zigzags that
    map into the graph, per the direct assignment-enumeration oracle."""
    graphs = [
        validate_graph(["a", "b"], [("a", "b")]),
        cycle3(),
        validate_graph(["a", "b", "c", "d"], [("a", "b"), ("c", "b"), ("c", "d")]),
    ]
    for g in graphs:
        for a in g.vertices:
            for b in g.vertices:
                dfa = distance_dfa(g, a, b)
                for w in enumerate_words(ZIGZAG_ALPHABET, 4):
                    assert dfa.accepts(w) == bruteforce.zigzag_maps_into(
                        g, a, b, w.literal()
                    )


def test_no_distance_is_all_nonempty_words():
    """Both single letters in an off-diagonal distance would mean a double
    arc; valid graphs never produce that entry."""
    for g in (cycle3(), zigzag_graph()):
        table = build_distance_table(g)
        for (a, b), entry in table.entries.items():
            if a != b:
                assert entry.distance.literals() != ["+", "-"]


def test_table_diagonal_and_json():
    g = validate_graph(["a", "b"], [("a", "b")])
    table = build_distance_table(g)
    assert table.entries[("a", "a")].distance.is_universe
    doc = table.to_json()
    assert {row["from"] for row in doc["distances"]} == {"a", "b"}
    report = embeddable_verdict(g).to_json()
    assert report["embeddable"] is True
    assert report["failing"] == []


def test_graph_json_round_trip():
    g = cycle3()
    assert graph_from_json(g.to_json()) == g
