"""Oriented graphs, zigzag coding, word-valued distances, embeddability.

An oriented graph is a reflexive antisymmetric digraph: every vertex
carries an implicit loop (never stored) and at most one arc links any
vertex pair.  Zigzags (oriented paths) are coded as words over the
two-letter antichain {+, -}; the distance d(a, b) is the upward-closed
set of codes of zigzags admitting a lazy walk from a to b, where any
zigzag arc may collapse onto a loop.  A graph embeds isometrically into
a product of zigzags exactly when all its distances are closed, which
over this alphabet the cancellation rule alone decides.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from . import automata
from .cones import LowerSet, UpperSet, lower_cone
from .errors import DoubleArcError, LoopError, UnknownVertex
from .poset import Alphabet, validate_alphabet
from .words import Word

ZIGZAG_ALPHABET: Alphabet = validate_alphabet(["+", "-"], [])

_FORWARD = ZIGZAG_ALPHABET.index("+")
_BACKWARD = ZIGZAG_ALPHABET.index("-")


class OrientedGraph:
    __slots__ = ("vertices", "arcs")

    def __init__(self, vertices: Sequence[str], arcs: Iterable[tuple[str, str]]):
        self.vertices = tuple(str(v) for v in vertices)
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise UnknownVertex("duplicate vertex names")
        arc_set = set()
        for u, v in arcs:
            if u not in vset:
                raise UnknownVertex(f"arc endpoint {u!r} is not a vertex")
            if v not in vset:
                raise UnknownVertex(f"arc endpoint {v!r} is not a vertex")
            if u == v:
                raise LoopError(f"explicit loop at {u!r}; loops are implicit")
            if (v, u) in arc_set:
                raise DoubleArcError(f"both arcs between {u!r} and {v!r}")
            arc_set.add((u, v))
        self.arcs = frozenset(arc_set)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrientedGraph)
            and self.vertices == other.vertices
            and self.arcs == other.arcs
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.arcs))

    def __repr__(self) -> str:
        return f"OrientedGraph({list(self.vertices)!r}, {sorted(self.arcs)!r})"

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "arcs": [list(a) for a in sorted(self.arcs)]}


def validate_graph(vertices: Sequence[str], arcs: Iterable[tuple[str, str]]) -> OrientedGraph:
    return OrientedGraph(vertices, arcs)


def graph_from_json(doc: dict) -> OrientedGraph:
    return OrientedGraph(doc["vertices"], [tuple(a) for a in doc.get("arcs", [])])


# -- zigzag codes --------------------------------------------------------------


def code_zigzag(arc_directions: Iterable[str] | str) -> Word:
    """Code a zigzag: '+' per forward arc, '-' per backward arc.

    Accepts a string of +/- characters or an iterable of direction tokens
    ('+', '-', 'forward', 'backward').  The empty zigzag (the loop) is the
    empty word.
    """
    data = bytearray()
    for tok in arc_directions:
        t = tok.strip().lower()
        if t in ("+", "forward", "f"):
            data.append(_FORWARD)
        elif t in ("-", "backward", "b"):
            data.append(_BACKWARD)
        else:
            raise ValueError(f"unknown arc direction {tok!r}")
    return Word(ZIGZAG_ALPHABET, bytes(data))


def reverse_code(c: Word) -> Word:
    """The same zigzag walked from the far end: reversed with signs flipped."""
    flip = {_FORWARD: _BACKWARD, _BACKWARD: _FORWARD}
    return Word(ZIGZAG_ALPHABET, bytes(flip[x] for x in reversed(c.data)))


# -- distances ------------------------------------------------------------------


@lru_cache(maxsize=256)
def _walk_dfa(graph: OrientedGraph, source: str):
    """Determinized lazy-walk automaton from one source vertex.

    Nondeterministic moves per letter: stay in place (collapse the zigzag
    arc onto the loop), or cross an arc forwards on '+' / backwards on '-'.
    Staying is always possible, so subsets only grow along a run.  Returns
    the subset list (BFS order) and flat transition rows.
    """
    verts = graph.vertices
    fwd = {v: [v] for v in verts}
    bwd = {v: [v] for v in verts}
    for u, v in graph.arcs:
        fwd[u].append(v)
        bwd[v].append(u)

    start = frozenset([source])
    index = {start: 0}
    order = [start]
    rows = []
    pos = 0
    while pos < len(order):
        cur = order[pos]
        pos += 1
        row = []
        for table in (fwd, bwd):  # canonical letter order: + then -
            nxt = frozenset(w for v in cur for w in table[v])
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            row.append(index[nxt])
        rows.append(row)
    return order, rows


def distance_dfa(graph: OrientedGraph, a: str, b: str) -> automata.Dfa:
    """Automaton of d(a, b): codes of zigzags with a lazy walk from a to b."""
    for v in (a, b):
        if v not in graph.vertices:
            raise UnknownVertex(f"{v!r} is not a vertex")
    order, rows = _walk_dfa(graph, a)
    accepting = frozenset(i for i, s in enumerate(order) if b in s)
    delta = array("i", [q for row in rows for q in row])
    dfa = automata.Dfa(ZIGZAG_ALPHABET, len(order), 0, accepting, delta, closure_kind="upward")
    return automata.minimize(dfa)


def distance_antichain(graph: OrientedGraph, a: str, b: str) -> UpperSet:
    gens = automata.minimal_words(distance_dfa(graph, a, b))
    return UpperSet(ZIGZAG_ALPHABET, gens)


def distance_lower_cone(graph: OrientedGraph, a: str, b: str) -> LowerSet:
    """Codes of zigzags the graph maps onto with a at the start and b at the
    end: the lower cone of the distance, taken over its generators."""
    d = distance_antichain(graph, a, b)
    return lower_cone(d.gens.words, alphabet=ZIGZAG_ALPHABET)


def is_distance_closed(graph: OrientedGraph, a: str, b: str):
    """True, or the cancellation witness showing d(a, b) is not closed."""
    w = automata.rule_violation(distance_dfa(graph, a, b), "cancellation")
    return True if w is None else w


# -- verdicts ---------------------------------------------------------------------


@dataclass(frozen=True)
class DistanceEntry:
    distance: UpperSet
    closed: bool
    witness: Word | None

    def to_json(self) -> dict:
        doc = {"gens": self.distance.literals(), "closed": self.closed}
        if self.witness is not None:
            doc["witness"] = self.witness.literal()
        return doc


@dataclass(frozen=True)
class DistanceTable:
    graph: OrientedGraph
    entries: dict

    def to_json(self) -> dict:
        return {
            "vertices": list(self.graph.vertices),
            "distances": [
                {"from": a, "to": b, **entry.to_json()}
                for (a, b), entry in sorted(self.entries.items())
            ],
        }


_ALL_NONEMPTY_GENS = ("+", "-")


def build_distance_table(graph: OrientedGraph) -> DistanceTable:
    """All ordered-pair distances with their closedness verdicts.

    Sanity invariants of valid oriented graphs are enforced: the diagonal
    is the zero distance (all words), and no off-diagonal distance is the
    set of all nonempty words, which would mean a double arc slipped in.
    """
    entries = {}
    for a in graph.vertices:
        for b in graph.vertices:
            d = distance_antichain(graph, a, b)
            if a == b and not d.is_universe:
                raise RuntimeError(f"zero distance broken at {a!r}")
            if a != b and tuple(d.literals()) == _ALL_NONEMPTY_GENS:
                raise RuntimeError(
                    f"distance from {a!r} to {b!r} is every nonempty word; "
                    "the graph cannot be antisymmetric"
                )
            res = is_distance_closed(graph, a, b)
            if res is True:
                entries[(a, b)] = DistanceEntry(d, True, None)
            else:
                entries[(a, b)] = DistanceEntry(d, False, res)
    return DistanceTable(graph, entries)


@dataclass(frozen=True)
class EmbeddabilityReport:
    embeddable: bool
    failing: tuple[tuple[str, str, Word], ...]
    table: DistanceTable

    def to_json(self) -> dict:
        return {
            "embeddable": self.embeddable,
            "failing": [
                {"from": a, "to": b, "witness": w.literal()} for a, b, w in self.failing
            ],
            "table": self.table.to_json(),
        }


def embeddable_verdict(graph: OrientedGraph) -> EmbeddabilityReport:
    """A graph embeds isometrically into a product of zigzags exactly when
    every ordered-pair distance is closed; failing pairs come with their
    cancellation witnesses."""
    table = build_distance_table(graph)
    failing = tuple(
        (a, b, entry.witness)
        for (a, b), entry in sorted(table.entries.items())
        if not entry.closed
    )
    return EmbeddabilityReport(not failing, failing, table)
