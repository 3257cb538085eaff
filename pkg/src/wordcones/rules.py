"""The syntactic closure calculus on upper sets of words.

Four base rules (cancellation, reduction, permutation, meet) generate the
least stable upper set [Y] containing a finite set Y by saturation.  On
alphabets where every bounded-below pair of letters has a meet and an
upper bound, [Y] coincides with the Galois closure, so stability decides
closedness; elsewhere the Galois oracle is the fallback and the rule
route is reported as inapplicable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from . import automata
from .cones import UpperSet, closure_up, is_closed_upper, min_antichain
from .errors import HypothesisViolated, RuleInapplicable, SideConditionViolated
from .poset import Alphabet, classify, is_conditional_lattice
from .words import Word, enumerate_words, sort_words

RULES_BASE = ("cancellation", "reduction", "permutation", "meet")
RULES_DERIVED = ("permuto_reduction", "extended_meet", "compound")
RULES_ALL = RULES_BASE + RULES_DERIVED


@dataclass(frozen=True)
class TraceStep:
    rule: str
    letters: tuple[str, ...]
    added: Word

    def to_json(self) -> dict:
        return {"rule": self.rule, "letters": list(self.letters), "added": self.added.literal()}


@dataclass(frozen=True)
class ClosureReport:
    """Outcome of a saturation run or a closedness decision.

    ``applicable`` records whether the alphabet satisfies the hypothesis
    making rule stability equivalent to closedness; the decision fields
    (closed / rule / witness / note) are filled by closedness_decision.
    """

    input: tuple[Word, ...]
    result: UpperSet
    method: str
    applicable: bool
    trace: tuple[TraceStep, ...] = ()
    agreement: bool | None = None
    closed: bool | None = None
    rule: str | None = None
    witness: Word | None = None
    note: str | None = None

    def to_json(self) -> dict:
        doc = {
            "input": [w.literal() for w in self.input],
            "result": self.result.literals(),
            "method": self.method,
            "applicable": self.applicable,
            "trace": [s.to_json() for s in self.trace],
        }
        if self.agreement is not None:
            doc["agreement"] = self.agreement
        if self.closed is not None:
            doc["closed"] = self.closed
        if self.rule is not None:
            doc["rule"] = self.rule
        if self.witness is not None:
            doc["witness"] = self.witness.literal()
        if self.note is not None:
            doc["note"] = self.note
        return doc


def _check_rules(rules) -> tuple[str, ...]:
    rules = tuple(rules)
    for r in rules:
        if r not in RULES_ALL:
            raise RuleInapplicable(f"unknown rule {r!r}")
    if not rules:
        raise RuleInapplicable("empty rule set")
    return rules


# -- single applications ------------------------------------------------------


def apply_rule_instance(alphabet: Alphabet, rule: str, y: Word, z: Word,
                        letters: tuple[str, ...]) -> Word:
    """The word the rule forces from premises built over y ... z.

    Side conditions are checked against the alphabet and violations raise
    SideConditionViolated naming the failed condition.  The compound rule
    takes letters (a1, ..., an, b) and builds its infix from the maximal
    existing meets a_i ∧ b in canonical letter order.
    """
    if y.alphabet != alphabet or z.alphabet != alphabet:
        raise SideConditionViolated("context words over a different alphabet")
    idx = [alphabet.index(name) for name in letters]

    def incomparable(a, b):
        return not (alphabet.leq_idx(a, b) or alphabet.leq_idx(b, a))

    if rule == "cancellation":
        a, b = idx
        if alphabet.compatible_idx(a, b):
            raise SideConditionViolated("cancellation needs incompatible letters")
        return Word(alphabet, y.data + z.data)
    if rule == "reduction":
        a, g = idx
        if a == g or not alphabet.leq_idx(a, g):
            raise SideConditionViolated("reduction needs letters a < g")
        return Word(alphabet, y.data + bytes((a,)) + z.data)
    if rule in ("permutation", "permuto_reduction"):
        if rule == "permutation" or len(idx) == 3:
            a, b, g = idx
            if not incomparable(a, b):
                raise SideConditionViolated("permutation needs incomparable letters")
            if not (alphabet.leq_idx(a, g) and alphabet.leq_idx(b, g) and g not in (a, b)):
                raise SideConditionViolated("permutation needs both letters strictly below g")
            return Word(alphabet, y.data + bytes((b, a)) + z.data)
        a, b, g, d = idx
        if not incomparable(a, b):
            raise SideConditionViolated("permuto-reduction needs incomparable letters")
        for up in (g, d):
            if not (alphabet.leq_idx(a, up) and alphabet.leq_idx(b, up) and up not in (a, b)):
                raise SideConditionViolated("permuto-reduction needs g, d strictly above both letters")
        return Word(alphabet, y.data + bytes((d,)) + z.data)
    if rule == "meet":
        a, b = idx
        if not incomparable(a, b):
            raise SideConditionViolated("meet rule needs incomparable letters")
        m = alphabet.meet_idx(a, b)
        if m < 0:
            raise SideConditionViolated("meet rule needs a meet in the alphabet")
        return Word(alphabet, y.data + bytes((m,)) + z.data)
    if rule == "extended_meet":
        a, b = idx
        if not incomparable(a, b):
            raise SideConditionViolated("extended meet needs incomparable letters")
        if not alphabet.compatible_idx(a, b):
            return Word(alphabet, y.data + z.data)
        m = alphabet.meet_idx(a, b)
        if m < 0:
            raise SideConditionViolated(
                "extended meet needs the meet of the letters to exist in the monoid"
            )
        return Word(alphabet, y.data + bytes((m,)) + z.data)
    if rule == "compound":
        if len(idx) < 2:
            raise SideConditionViolated("compound needs a nonempty middle and one more letter")
        mids, b = idx[:-1], idx[-1]
        for a in mids:
            if alphabet.leq_idx(b, a):
                raise SideConditionViolated("compound needs b not below-or-equal any middle letter")
        meets = {alphabet.meet_idx(a, b) for a in mids}
        meets.discard(-1)
        maximal = [m for m in meets if not any(x != m and alphabet.leq_idx(m, x) for x in meets)]
        return Word(alphabet, y.data + bytes(sorted(maximal)) + z.data)
    raise RuleInapplicable(f"unknown rule {rule!r}")


# -- stability and saturation --------------------------------------------------


def is_stable(z: UpperSet, rules=RULES_BASE):
    """True, or the first (rule, witness) pair found in scan order."""
    rules = _check_rules(rules)
    if "compound" in rules:
        raise RuleInapplicable("the compound rule has unbounded arity; use compound_violation")
    dfa = automata.upset_dfa(z)
    for rule in rules:
        w = automata.rule_violation(dfa, rule)
        if w is not None:
            return (rule, w)
    return True


def stable_closure(ws, rules=RULES_BASE, *, alphabet: Alphabet | None = None,
                   oracle_check: bool = False, _reverse_ties: bool = False) -> ClosureReport:
    """Least stable upper set containing the input, by saturation.

    Rounds scan every enabled rule and add all shortest violation
    witnesses found (canonical order within a round), then rebuild the
    automaton; termination follows from the well-quasi-ordering of words,
    every round strictly enlarging an upward-closed set.
    """
    ws = list(ws)
    rules = _check_rules(rules)
    if "compound" in rules:
        raise RuleInapplicable("the compound rule has unbounded arity; saturate the base rules")
    if ws:
        alphabet = ws[0].alphabet
    if alphabet is None:
        raise ValueError("empty input needs an explicit alphabet")
    z = UpperSet(alphabet, min_antichain(ws, alphabet=alphabet))
    trace: list[TraceStep] = []
    if not ws:
        result = z
    else:
        for _ in range(100_000):
            dfa = automata.upset_dfa(z)
            batch: list[tuple[Word, str, tuple[str, ...]]] = []
            seen: set[bytes] = set()
            for rule in rules:
                for w, letters in automata.rule_violations_shortest(dfa, rule):
                    if w.data not in seen:
                        seen.add(w.data)
                        batch.append((w, rule, letters))
            if not batch:
                break
            batch.sort(key=lambda item: item[0].sort_key())
            if _reverse_ties:
                batch.reverse()
            for w, rule, letters in batch:
                if not z.member(w):
                    z = UpperSet(alphabet, min_antichain(list(z.gens.words) + [w], alphabet=alphabet))
                    trace.append(TraceStep(rule, letters, w))
        else:
            raise RuntimeError("saturation failed to terminate; this is a bug")
        result = z

    applicable = classify(alphabet).compatible_pairs_meet_and_bounded
    agreement = None
    method = "rules-saturation"
    if oracle_check:
        oracle = closure_up(ws, alphabet=alphabet)
        agreement = oracle == result
        method = "both"
    return ClosureReport(
        input=tuple(sort_words(ws)),
        result=result,
        method=method,
        applicable=applicable,
        trace=tuple(trace),
        agreement=agreement,
    )


_CLASS_RULESETS = (
    ("is_antichain", ("cancellation",)),
    ("is_chain", ("reduction",)),
    ("is_disjoint_union_of_chains", ("cancellation", "reduction")),
    ("is_dual_forest", ("cancellation", "reduction", "permutation")),
    ("is_lattice", ("reduction", "permutation", "meet")),
)


def decision_rules(alphabet: Alphabet) -> tuple[str, ...] | None:
    """Rule subset sufficient to decide closedness on this alphabet, or None
    when no sufficient subset is known (rule route inapplicable)."""
    cls = classify(alphabet)
    if not cls.compatible_pairs_meet_and_bounded:
        return None
    for flag, rules in _CLASS_RULESETS:
        if getattr(cls, flag):
            return rules
    return RULES_BASE


def closedness_decision(z: UpperSet, verify: bool = False) -> ClosureReport:
    """Decide closedness of a canonical upper set.

    With the rule route available the decision is a stability scan over
    the class-appropriate rule subset; ``verify=True`` re-runs the full
    four-rule scan and asserts agreement.  Otherwise stability under the
    four rules is not known to characterize closedness for the alphabet
    (conditional-lattice case open), so the Galois oracle answers and the
    report is marked not applicable.
    """
    alphabet = z.alphabet
    rules = decision_rules(alphabet)
    if rules is not None:
        res = is_stable(z, rules)
        closed = res is True
        if verify:
            full = is_stable(z, RULES_BASE)
            if (full is True) != closed:
                raise RuntimeError(
                    f"rule-subset decision {closed} disagrees with the four-rule scan {full}"
                )
        return ClosureReport(
            input=tuple(z.gens.words),
            result=z,
            method="rules-saturation",
            applicable=True,
            closed=closed,
            rule=None if closed else res[0],
            witness=None if closed else res[1],
            note="decided by stability under: " + ", ".join(rules),
        )
    closed = is_closed_upper(z)
    witness = None
    if not closed:
        closure = closure_up(z.gens.words, alphabet=alphabet)
        for g in closure.gens:
            if not z.member(g):
                witness = g
                break
    return ClosureReport(
        input=tuple(z.gens.words),
        result=z,
        method="galois-oracle",
        applicable=False,
        closed=closed,
        witness=witness,
        note=(
            "no rule subset is known to characterize closedness on this alphabet "
            "(open for conditional lattices); answered by the Galois oracle"
        ),
    )


# -- bounded compound-rule scan -------------------------------------------------


def compound_violation(z: UpperSet, max_len: int, all_orders: bool = True):
    """Bounded brute-force scan for compound-rule violations.

    Considers every member w = y·mid·z of the set with |w| <= max_len and
    every extra letter b with y·b·z in the set and b not below-or-equal
    any middle letter; the forced infix is the maximal existing meets of
    the middle letters with b, in every order (or canonical order only).
    Returns None or (y, mid, b, z, forced_word).
    """
    alphabet = z.alphabet
    k = alphabet.k
    members = [w for w in enumerate_words(alphabet, max_len) if z.member(w)]
    for w in members:
        data = w.data
        n = len(data)
        for i in range(n):
            for j in range(i + 1, n + 1):
                y, mid, zz = data[:i], data[i:j], data[j:]
                for b in range(k):
                    if any(alphabet.leq_idx(b, a) for a in mid):
                        continue
                    if not z.member(Word(alphabet, y + bytes((b,)) + zz)):
                        continue
                    meets = {alphabet.meet_idx(a, b) for a in mid}
                    meets.discard(-1)
                    maximal = sorted(
                        m for m in meets
                        if not any(x != m and alphabet.leq_idx(m, x) for x in meets)
                    )
                    orders = permutations(maximal) if all_orders else (tuple(maximal),)
                    for t in orders:
                        forced = Word(alphabet, y + bytes(t) + zz)
                        if not z.member(forced):
                            y_w = Word(alphabet, y)
                            mid_w = Word(alphabet, mid)
                            z_w = Word(alphabet, zz)
                            b_name = alphabet.letters[b]
                            return (y_w, mid_w, b_name, z_w, forced)
    return None


# -- conjecture harness ----------------------------------------------------------


def conjecture_search(alphabet: Alphabet, max_gens: int, max_len: int):
    """Search a conditional lattice for a set whose four-rule saturation
    differs from its Galois closure.

    Returns the first counterexample generator set (canonical enumeration
    order) or None; None is only evidence within the given bounds.  Every
    candidate is also soundness-checked ([Y] inside the closure); a
    failure there is an internal error, not a counterexample.
    """
    if not is_conditional_lattice(alphabet):
        raise HypothesisViolated("conjecture search needs a conditional lattice alphabet")
    universe = list(enumerate_words(alphabet, max_len))
    for size in range(1, max_gens + 1):
        for combo in combinations(universe, size):
            report = stable_closure(list(combo), RULES_BASE)
            oracle = closure_up(list(combo), alphabet=alphabet)
            for g in report.result.gens:
                if not oracle.member(g):
                    raise RuntimeError(
                        f"soundness violation: saturation of {[w.literal() for w in combo]} "
                        f"left the Galois closure at {g.literal()!r}"
                    )
            if report.result != oracle:
                return list(combo)
    return None
