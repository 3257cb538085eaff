"""Exact finite representations of upward-closed languages and decisions.

Upward-closed languages over a finite ordered alphabet are regular; this
module gives them a dedicated deterministic representation (products of
greedy chain automata), plus inclusion with witness, minimal-word
extraction, and the per-rule stability scans used by the rules engine.
"""

from __future__ import annotations

from array import array
from typing import Iterable

from . import kernels
from .errors import AlphabetMismatch, NotUpwardClosed, RuleInapplicable
from .poset import Alphabet
from .words import Word


class Dfa:
    """A total DFA over an alphabet's letters; states are 0..n-1, start is 0
    after canonicalization.  ``closure_kind`` is a semantic annotation
    (None, "upward" or "downward") validated by sampling, not a proof."""

    __slots__ = ("alphabet", "n", "start", "accepting", "delta", "closure_kind", "_acc_bytes")

    def __init__(self, alphabet: Alphabet, n: int, start: int,
                 accepting: frozenset[int], delta: array, closure_kind: str | None = None):
        if len(delta) != n * alphabet.k:
            raise ValueError("transition table size mismatch")
        self.alphabet = alphabet
        self.n = n
        self.start = start
        self.accepting = frozenset(accepting)
        self.delta = delta
        self.closure_kind = closure_kind
        self._acc_bytes = bytes(1 if q in self.accepting else 0 for q in range(n))

    @property
    def accept_bytes(self) -> bytes:
        return self._acc_bytes

    def step(self, state: int, letter_idx: int) -> int:
        return self.delta[state * self.alphabet.k + letter_idx]

    def run(self, state: int, data: bytes) -> int:
        return kernels.dfa_run(self.delta, self.alphabet.k, state, data)

    def accepts_data(self, data: bytes) -> bool:
        return kernels.dfa_accepts(self.delta, self.alphabet.k, self.start, self._acc_bytes, data)

    def accepts(self, w: Word) -> bool:
        if w.alphabet != self.alphabet:
            raise AlphabetMismatch("word and automaton alphabets differ")
        return self.accepts_data(w.data)

    def to_json(self) -> dict:
        k = self.alphabet.k
        names = self.alphabet.letters
        return {
            "states": self.n,
            "start": self.start,
            "accepting": sorted(self.accepting),
            "delta": [
                [q, names[c], self.delta[q * k + c]]
                for q in range(self.n)
                for c in range(k)
            ],
        }

    def __repr__(self) -> str:
        return f"Dfa(n={self.n}, accepting={sorted(self.accepting)}, kind={self.closure_kind})"


def _require_same(a: Dfa, b: Dfa) -> Alphabet:
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch("automata live over different alphabets")
    return a.alphabet


# -- construction ---------------------------------------------------------

def _product_chain_dfa(alphabet: Alphabet, gens: list[bytes], require_all: bool) -> Dfa:
    """Product of greedy chain automata, one per generator word.

    Chain state i means "the first i letters matched greedily"; a letter
    advances the chain when it dominates the next needed letter.  All-done
    (or any-done, for unions) states collapse into one absorbing accepting
    sink, since completed components never regress.
    """
    k = alphabet.k
    leq = alphabet.leq_flat
    lens = [len(g) for g in gens]

    def is_acc(t: tuple) -> bool:
        done = (t[i] == lens[i] for i in range(len(gens)))
        return all(done) if require_all else any(done)

    SINK = "acc"
    start_t = tuple(0 for _ in gens)
    start = SINK if is_acc(start_t) else start_t
    index: dict = {start: 0}
    order = [start]
    rows: list[list[int]] = []
    pos = 0
    while pos < len(order):
        t = order[pos]
        pos += 1
        row = []
        for c in range(k):
            if t == SINK:
                nt = SINK
            else:
                nxt = list(t)
                for i, g in enumerate(gens):
                    p = nxt[i]
                    if p < lens[i] and leq[g[p] * k + c]:
                        nxt[i] = p + 1
                nt = tuple(nxt)
                if is_acc(nt):
                    nt = SINK
            if nt not in index:
                index[nt] = len(order)
                order.append(nt)
            row.append(index[nt])
        rows.append(row)
    accepting = frozenset([index[SINK]]) if SINK in index else frozenset()
    delta = array("i", [q for row in rows for q in row])
    return Dfa(alphabet, len(order), 0, accepting, delta, closure_kind="upward")


def minimize(dfa: Dfa) -> Dfa:
    """Moore partition refinement with a canonical BFS renumbering."""
    n, k = dfa.n, dfa.alphabet.k
    delta = dfa.delta
    cls = [1 if q in dfa.accepting else 0 for q in range(n)]
    while True:
        sig_ids: dict = {}
        new = [0] * n
        for q in range(n):
            sig = (cls[q], tuple(cls[delta[q * k + c]] for c in range(k)))
            if sig not in sig_ids:
                sig_ids[sig] = len(sig_ids)
            new[q] = sig_ids[sig]
        if new == cls:
            break
        cls = new

    # representative per class, then renumber classes by BFS from the start
    rep: dict[int, int] = {}
    for q in range(n):
        rep.setdefault(cls[q], q)
    renum = {cls[dfa.start]: 0}
    order = [cls[dfa.start]]
    rows = []
    pos = 0
    while pos < len(order):
        c0 = order[pos]
        pos += 1
        q = rep[c0]
        row = []
        for c in range(k):
            c1 = cls[delta[q * k + c]]
            if c1 not in renum:
                renum[c1] = len(order)
                order.append(c1)
            row.append(renum[c1])
        rows.append(row)
    accepting = frozenset(renum[cls[q]] for q in dfa.accepting if cls[q] in renum)
    flat = array("i", [q for row in rows for q in row])
    return Dfa(dfa.alphabet, len(order), 0, accepting, flat, closure_kind=dfa.closure_kind)


def upset_dfa(z) -> Dfa:
    """DFA of an upward-closed set given by its generator antichain."""
    gens = [w.data for w in z.gens]
    return minimize(_product_chain_dfa(z.alphabet, gens, require_all=False))


def cone_dfa(alphabet: Alphabet, xs: Iterable[Word]) -> Dfa:
    """DFA of the upper cone of a finite word set: the words above every
    member (all chain components must complete)."""
    gens = [w.data for w in xs]
    return minimize(_product_chain_dfa(alphabet, gens, require_all=True))


# -- boolean combinations ------------------------------------------------

def _combine(a: Dfa, b: Dfa, accept_rule) -> tuple[Alphabet, int, frozenset, array]:
    alphabet = _require_same(a, b)
    k = alphabet.k
    index = {(a.start, b.start): 0}
    order = [(a.start, b.start)]
    rows = []
    pos = 0
    while pos < len(order):
        qa, qb = order[pos]
        pos += 1
        row = []
        for c in range(k):
            nxt = (a.delta[qa * k + c], b.delta[qb * k + c])
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            row.append(index[nxt])
        rows.append(row)
    accepting = frozenset(
        i for i, (qa, qb) in enumerate(order)
        if accept_rule(qa in a.accepting, qb in b.accepting)
    )
    return alphabet, len(order), accepting, array("i", [q for row in rows for q in row])


def intersect_dfa(a: Dfa, b: Dfa) -> Dfa:
    alphabet, n, acc, delta = _combine(a, b, lambda x, y: x and y)
    kind = "upward" if a.closure_kind == b.closure_kind == "upward" else (
        "downward" if a.closure_kind == b.closure_kind == "downward" else None
    )
    return Dfa(alphabet, n, 0, acc, delta, closure_kind=kind)


def union_dfa(a: Dfa, b: Dfa) -> Dfa:
    alphabet, n, acc, delta = _combine(a, b, lambda x, y: x or y)
    kind = "upward" if a.closure_kind == b.closure_kind == "upward" else (
        "downward" if a.closure_kind == b.closure_kind == "downward" else None
    )
    return Dfa(alphabet, n, 0, acc, delta, closure_kind=kind)


def complement_dfa(a: Dfa) -> Dfa:
    acc = frozenset(q for q in range(a.n) if q not in a.accepting)
    kind = {"upward": "downward", "downward": "upward"}.get(a.closure_kind)
    return Dfa(a.alphabet, a.n, a.start, acc, a.delta, closure_kind=kind)


def includes(a: Dfa, b: Dfa):
    """Decide L(b) <= L(a); on failure return a shortest word of L(b) \\ L(a)
    (ties broken by the canonical letter order)."""
    alphabet = _require_same(a, b)
    k = alphabet.k
    start = (a.start, b.start)
    parent: dict = {start: None}
    queue = [start]
    pos = 0
    while pos < len(queue):
        qa, qb = queue[pos]
        pos += 1
        if qb in b.accepting and qa not in a.accepting:
            word = bytearray()
            node = (qa, qb)
            while parent[node] is not None:
                node, c = parent[node]
                word.append(c)
            return Word(alphabet, bytes(reversed(word)))
        for c in range(k):
            nxt = (a.delta[qa * k + c], b.delta[qb * k + c])
            if nxt not in parent:
                parent[nxt] = ((qa, qb), c)
                queue.append(nxt)
    return True


# -- minimal words ---------------------------------------------------------

def _spot_check_upward(dfa: Dfa, max_len: int = 3, cap: int = 64) -> None:
    """Sampled guard: an accepted word must stay accepted after inserting a
    letter or bumping a letter upward.  Raises NotUpwardClosed on failure."""
    alphabet = dfa.alphabet
    k = alphabet.k
    leq = alphabet.leq_flat
    checked = 0
    level = [b""]
    for _ in range(max_len + 1):
        nxt = []
        for w in level:
            if checked >= cap:
                return
            checked += 1
            if dfa.accepts_data(w):
                for i in range(len(w) + 1):
                    for c in range(k):
                        up = w[:i] + bytes((c,)) + w[i:]
                        if not dfa.accepts_data(up):
                            raise NotUpwardClosed(
                                f"accepted {w!r} but rejected larger {up!r}"
                            )
                for i in range(len(w)):
                    for c in range(k):
                        if c != w[i] and leq[w[i] * k + c]:
                            up = w[:i] + bytes((c,)) + w[i + 1:]
                            if not dfa.accepts_data(up):
                                raise NotUpwardClosed(
                                    f"accepted {w!r} but rejected larger {up!r}"
                                )
            if len(w) < max_len:
                for c in range(k):
                    nxt.append(w + bytes((c,)))
        level = nxt


def minimal_words(dfa: Dfa):
    """Antichain of <=-minimal accepted words of an upward-closed DFA.

    A minimal word's run never repeats a state (cutting the loop yields a
    smaller accepted word) and never extends an accepted proper prefix, so
    a DFS over repeat-free paths that stops at acceptance visits every
    minimal word; the final antichain filter drops the non-minimal extras.
    The pumping bound (every minimal word is shorter than the state count)
    holds automatically since paths cannot repeat states.
    """
    from .cones import Antichain, min_antichain

    if dfa.closure_kind != "upward":
        raise NotUpwardClosed("minimal_words requires an upward-annotated DFA")
    _spot_check_upward(dfa)

    alphabet = dfa.alphabet
    k = alphabet.k
    # states from which acceptance is reachable
    radj: list[list[int]] = [[] for _ in range(dfa.n)]
    for q in range(dfa.n):
        for c in range(k):
            radj[dfa.delta[q * k + c]].append(q)
    useful = set(dfa.accepting)
    stack = list(dfa.accepting)
    while stack:
        q = stack.pop()
        for p in radj[q]:
            if p not in useful:
                useful.add(p)
                stack.append(p)
    if dfa.start not in useful:
        return Antichain(alphabet, ())

    found: list[bytes] = []

    def dfs(q: int, word: bytearray, onpath: set) -> None:
        if q in dfa.accepting:
            found.append(bytes(word))
            return
        for c in range(k):
            q2 = dfa.delta[q * k + c]
            if q2 in useful and q2 not in onpath:
                onpath.add(q2)
                word.append(c)
                dfs(q2, word, onpath)
                word.pop()
                onpath.remove(q2)

    dfs(dfa.start, bytearray(), {dfa.start})
    return min_antichain(Word(alphabet, w) for w in found)


# -- rule scans ------------------------------------------------------------

BASE_RULES = ("cancellation", "reduction", "permutation", "meet")
DERIVED_SCANNABLE = ("permuto_reduction", "extended_meet")


def _descriptors(alphabet: Alphabet, rule: str) -> list[tuple[tuple[str, ...], bytes, bytes, bytes]]:
    """(letters, premise-1 infix, premise-2 infix, forced infix) per letter
    tuple satisfying the rule's side conditions."""
    k = alphabet.k
    names = alphabet.letters
    out = []
    if rule in ("cancellation", "extended_meet"):
        for a in range(k):
            for b in range(a + 1, k):
                if not alphabet.compatible_idx(a, b):
                    out.append(((names[a], names[b]), bytes((a,)), bytes((b,)), b""))
    if rule == "reduction":
        for a in range(k):
            for g in range(k):
                if a != g and alphabet.leq_idx(a, g):
                    out.append(((names[a], names[g]), bytes((a, a)), bytes((g,)), bytes((a,))))
    if rule in ("permutation", "permuto_reduction"):
        for a in range(k):
            for b in range(k):
                if a == b or alphabet.leq_idx(a, b) or alphabet.leq_idx(b, a):
                    continue
                for g in range(k):
                    if alphabet.leq_idx(a, g) and alphabet.leq_idx(b, g) and a != g and b != g:
                        out.append(
                            ((names[a], names[b], names[g]), bytes((a, b)), bytes((g,)), bytes((b, a)))
                        )
    if rule == "permuto_reduction":
        for a in range(k):
            for b in range(k):
                if a == b or alphabet.leq_idx(a, b) or alphabet.leq_idx(b, a):
                    continue
                for g in range(k):
                    if not (alphabet.leq_idx(a, g) and alphabet.leq_idx(b, g) and a != g and b != g):
                        continue
                    for d in range(k):
                        if alphabet.leq_idx(a, d) and alphabet.leq_idx(b, d) and a != d and b != d:
                            out.append(
                                (
                                    (names[a], names[b], names[g], names[d]),
                                    bytes((a, b)),
                                    bytes((g,)),
                                    bytes((d,)),
                                )
                            )
    if rule in ("meet", "extended_meet"):
        for a in range(k):
            for b in range(a + 1, k):
                if alphabet.leq_idx(a, b) or alphabet.leq_idx(b, a):
                    continue
                m = alphabet.meet_idx(a, b)
                if m >= 0:
                    out.append(((names[a], names[b]), bytes((a,)), bytes((b,)), bytes((m,))))
    return out


def _scan_descriptor(dfa: Dfa, ins1: bytes, ins2: bytes, t: bytes) -> int:
    """Depth (|y| + |z|) of the shortest violating instance, or -1."""
    n = dfa.n
    q1 = array("i", [dfa.run(p, ins1) for p in range(n)])
    q2 = array("i", [dfa.run(p, ins2) for p in range(n)])
    q3 = array("i", [dfa.run(p, t) for p in range(n)])
    return kernels.rule_scan_depth(
        n, dfa.alphabet.k, dfa.delta, dfa.accept_bytes, dfa.start, q1, q2, q3
    )


def rule_violations_shortest(dfa: Dfa, rule: str) -> list[tuple[Word, tuple[str, ...]]]:
    """All shortest words the rule forces into the language but the language
    lacks, canonically ordered, each with the first letter tuple forcing it."""
    if rule == "compound":
        raise RuleInapplicable("the compound rule has unbounded arity; scan the base rules")
    if rule not in BASE_RULES and rule not in DERIVED_SCANNABLE:
        raise RuleInapplicable(f"unknown rule {rule!r}")
    alphabet = dfa.alphabet
    descs = _descriptors(alphabet, rule)
    hits = []
    for letters, ins1, ins2, t in descs:
        d = _scan_descriptor(dfa, ins1, ins2, t)
        if d >= 0:
            hits.append((d + len(t), letters, ins1, ins2, t))
    if not hits:
        return []
    best = min(h[0] for h in hits)
    collected: dict[bytes, tuple[str, ...]] = {}
    for length, letters, ins1, ins2, t in hits:
        if length != best:
            continue
        for w in kernels.forced_missing_words(
            dfa.n, alphabet.k, dfa.delta, dfa.accept_bytes, dfa.start, t, ins1, ins2, best, 0
        ):
            collected.setdefault(w, letters)
    return [
        (Word(alphabet, w), collected[w]) for w in sorted(collected, key=lambda b: (len(b), b))
    ]


def rule_violation(dfa: Dfa, rule: str, alphabet: Alphabet | None = None) -> Word | None:
    """First (shortest, canonically least) violation witness, or None when
    the language is stable under the rule.  Rules whose side conditions
    match no letter tuple are vacuously stable."""
    if alphabet is not None and alphabet != dfa.alphabet:
        raise AlphabetMismatch("automaton alphabet differs from the supplied one")
    vs = rule_violations_shortest(dfa, rule)
    return vs[0][0] if vs else None
